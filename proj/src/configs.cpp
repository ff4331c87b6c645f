#include "fluxchain/configs.hpp"

namespace fluxchain {

double tier_e_j(const std::string& tier) {
    double base = 0.0;
    if (tier.empty()) throw ConfigError("empty frequency tier");
    switch (tier[0]) {
        case 'L': base = 4.5; break;
        case 'M': base = 3.8; break;
        case 'H': base = 3.0; break;
        default:
            throw ConfigError("unknown frequency tier '" + tier + "' (expected L/M/H)");
    }
    if (tier.size() == 2 && tier[1] == '\'') return base - 0.1;
    if (tier.size() > 1) throw ConfigError("malformed frequency tier '" + tier + "'");
    return base;
}

std::vector<double> parse_configuration_name(const std::string& name) {
    std::vector<double> e_j;
    for (std::size_t i = 0; i < name.size(); ++i) {
        const char c = name[i];
        if (c == 'L' || c == 'M' || c == 'H') {
            std::string tier(1, c);
            if (i + 1 < name.size() && name[i + 1] == '\'') {
                tier += '\'';
                ++i;
            }
            e_j.push_back(tier_e_j(tier));
        } else {
            throw ConfigError("unexpected character '" + std::string(1, c) +
                              "' in configuration name '" + name + "'");
        }
    }
    if (e_j.size() < 2 || e_j.size() > 6)
        throw ConfigError("configuration '" + name + "' must name 2..6 qubits");
    return e_j;
}

ChainSpec make_chain(const std::string& name, double j_ff, double j_nn, double e_c,
                     double e_l, int levels_per_qubit, int basis_size) {
    ChainSpec spec;
    spec.j_ff = j_ff;
    spec.j_nn = j_nn;
    spec.levels_per_qubit = levels_per_qubit;
    spec.basis_size = basis_size;
    for (double ej : parse_configuration_name(name)) {
        FluxoniumParams p;
        p.e_c = e_c;
        p.e_l = e_l;
        p.e_j = ej;
        spec.qubits.push_back(p);
    }
    return spec;
}

std::vector<std::string> known_configurations() {
    return {"LM", "MH", "LH", "HLMH'", "LMHL'", "MLHM'"};
}

}  // namespace fluxchain
