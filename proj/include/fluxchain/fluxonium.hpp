#pragma once

#include <vector>

#include "fluxchain/types.hpp"

namespace fluxchain {

// Circuit energies (GHz, per h) and external phase of one fluxonium qubit.
struct FluxoniumParams {
    double e_c = 1.0;
    double e_l = 0.7;
    double e_j = 0.0;
    double phi_ext = kPi;

    void validate() const;
};

// Hamiltonian, flux and charge operators in the harmonic-oscillator basis.
struct OperatorSet {
    Mat h0;    // real symmetric
    Mat phi;   // real symmetric
    CMat n;    // purely imaginary, Hermitian
    int basis_size = 0;
};

// Truncated eigenbasis of one qubit. Energies are shifted so the ground
// level is zero; eigenvector gauge: largest-magnitude component positive.
struct QubitSpectrum {
    Vec energies;   // ascending, GHz
    Mat phi_op;     // n_keep x n_keep, real symmetric
    CMat n_op;      // n_keep x n_keep, purely imaginary Hermitian
    int n_keep = 0;
    int basis_size = 0;
};

OperatorSet build_oscillator_basis(const FluxoniumParams& params, int basis_size);

QubitSpectrum diagonalize_fluxonium(const FluxoniumParams& params,
                                    int basis_size = 80, int n_keep = 5);

// energies[j] - energies[i], requires i <= j < n_keep.
double transition_frequency(const QubitSpectrum& spec, int i, int j);

struct ConvergenceEntry {
    int basis_from = 0;
    int basis_to = 0;
    int level = 0;
    double drift_ghz = 0.0;
    bool converged = false;
};

struct ConvergenceReport {
    std::vector<ConvergenceEntry> entries;
    double threshold_ghz = 1e-8;
    bool all_converged() const;
};

// Energy drift of the lowest levels between successive basis sizes.
ConvergenceReport convergence_report(const FluxoniumParams& params,
                                     const std::vector<int>& basis_sizes,
                                     int n_levels = 5,
                                     double threshold_ghz = 1e-8);

}  // namespace fluxchain
