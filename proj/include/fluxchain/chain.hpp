#pragma once

#include <vector>

#include "fluxchain/fluxonium.hpp"
#include "fluxchain/types.hpp"

namespace fluxchain {

// Linear chain of inductively coupled fluxonium qubits with nearest-neighbor
// flux-flux (j_ff) and charge-charge (j_nn) coupling, both in GHz.
struct ChainSpec {
    std::vector<FluxoniumParams> qubits;
    double j_ff = 0.003;
    double j_nn = 0.0;
    int levels_per_qubit = 5;
    int basis_size = 80;

    int n_qubits() const { return static_cast<int>(qubits.size()); }
    long dim() const;
    void validate() const;
};

// Static chain Hamiltonian plus per-qubit operators lifted to the full
// tensor-product space (qubit 0 is the most significant factor).
struct ChainOperators {
    Mat h0_static;                    // D x D, real symmetric
    std::vector<CMat> n_embedded;     // per-qubit charge operators
    std::vector<Mat> phi_embedded;    // per-qubit flux operators
    std::vector<QubitSpectrum> qubit_spectra;
    int levels = 0;
    int n_qubits = 0;

    long dim() const { return h0_static.rows(); }
};

// Eigendecomposition of the coupled chain with bare product-state labels
// attached to dressed eigenstates by maximal overlap.
struct DressedSystem {
    Vec eigenvalues;                // ascending, GHz
    Mat eigenvectors;               // real orthogonal columns
    std::vector<int> label_map;     // flat bare label -> dressed eigenindex
    std::vector<double> overlap_quality;  // per bare label
    int levels = 0;
    int n_qubits = 0;

    long dim() const { return eigenvalues.size(); }
    int dressed_index(const std::vector<int>& bare_label) const;
    double energy_of(const std::vector<int>& bare_label) const;
};

// Flat index of a bare multi-index, first qubit most significant.
long bare_flat_index(const std::vector<int>& label, int levels);
std::vector<int> bare_multi_index(long flat, int levels, int n_qubits);

ChainOperators assemble_chain(const ChainSpec& spec);

// Assembly from already-solved qubits (all must share the level count).
ChainOperators assemble_from_spectra(const std::vector<QubitSpectrum>& spectra,
                                     double j_ff, double j_nn);

DressedSystem diagonalize_chain(const ChainOperators& ops);

// Greedy maximal-overlap assignment of bare labels to dressed states,
// processed in descending best-overlap order; optimal-assignment fallback
// when greedy leaves a computational label below the acceptance overlap.
struct LabelAssignment {
    std::vector<int> label_map;
    std::vector<double> overlap_quality;
};
LabelAssignment label_states(const Mat& eigenvectors, int levels, int n_qubits);

// The 2^N dressed indices of the computational labels in lexicographic
// bare-label order (first qubit most significant).
std::vector<int> computational_subspace(const DressedSystem& dressed);

}  // namespace fluxchain
