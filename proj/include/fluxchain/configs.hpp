#pragma once

#include <string>
#include <vector>

#include "fluxchain/chain.hpp"

namespace fluxchain {

// Frequency-tier table: Josephson energies in GHz for the L/M/H labels.
// A trailing prime reduces the tier value by 0.1 GHz.
double tier_e_j(const std::string& tier);

// Parses configuration names such as "LM", "HLMH'", "MLHM'" into a list of
// per-qubit Josephson energies (chain order).
std::vector<double> parse_configuration_name(const std::string& name);

// Builds a chain from a configuration name using shared E_C, E_L defaults.
ChainSpec make_chain(const std::string& name, double j_ff = 0.003, double j_nn = 0.0,
                     double e_c = 1.0, double e_l = 0.7, int levels_per_qubit = 5,
                     int basis_size = 80);

// Two-qubit gate configurations and their four-qubit counterparts, in the
// reference ordering (target listed second in the pair name).
std::vector<std::string> known_configurations();

}  // namespace fluxchain
