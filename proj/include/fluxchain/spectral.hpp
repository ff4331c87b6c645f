#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fluxchain/chain.hpp"
#include "fluxchain/types.hpp"

namespace fluxchain {

struct ZZRecord {
    std::string config;
    double j_ff = 0.0;
    double j_nn = 0.0;
    int alpha = 0;
    int beta = 0;
    double value_khz = 0.0;
    std::string status = "ok";
};

struct MatrixElementRecord {
    int operator_qubit = 0;
    std::vector<int> bra_label;
    std::vector<int> ket_label;
    cplx value;  // -i <bra|n_Q|ket>, real up to gauge residue
};

// State-dependent frequency shift between the gate pair, conditioned on the
// spectator state (alpha, beta). Result in kHz.
double zz_rate(const DressedSystem& dressed, std::pair<int, int> pair,
               std::pair<int, int> spectators);

// -i <bra| n_Q |ket> between dressed states resolved from bare labels.
cplx charge_matrix_element(const DressedSystem& dressed, const ChainOperators& ops,
                           int operator_qubit, const std::vector<int>& bra_label,
                           const std::vector<int>& ket_label);

// Selective-darkening drive-amplitude ratio: the value of eta for which the
// target transition with the control in its ground state carries no net
// drive matrix element.
double sd_ratio(const DressedSystem& dressed, const ChainOperators& ops,
                int control, int target, std::pair<int, int> spectators);

// Builds the bare label with gate-qubit values (k, l) at (control, target)
// and spectator values assigned to the remaining qubits in chain order.
std::vector<int> gate_label(int n_qubits, std::pair<int, int> pair, int k, int l,
                            std::pair<int, int> spectators);

struct ZZSweepPoint {
    std::string config;
    double j_ff = 0.0;
    double j_nn = 0.0;
    int alpha = 1;
    int beta = 1;
    double zz_khz = 0.0;
    std::string status = "ok";
};

// ZZ of the central gate pair over a coupling grid for the three named
// four-qubit configurations, spectators fixed to (1, 1).
std::vector<ZZSweepPoint> zz_vs_coupling_sweep(const ChainSpec& spec_template,
                                               const std::vector<double>& j_ff_values,
                                               const std::vector<double>& j_nn_values);

}  // namespace fluxchain
