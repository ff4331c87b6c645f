#include "fluxchain/spectral.hpp"

#include <cmath>

#include "fluxchain/configs.hpp"

namespace fluxchain {

std::vector<int> gate_label(int n_qubits, std::pair<int, int> pair, int k, int l,
                            std::pair<int, int> spectators) {
    const auto [c, t] = pair;
    if (c == t || c < 0 || t < 0 || c >= n_qubits || t >= n_qubits)
        throw ParameterError("gate_label: invalid control/target pair");
    std::vector<int> label(n_qubits, -1);
    label[c] = k;
    label[t] = l;
    const int spect[2] = {spectators.first, spectators.second};
    int s = 0;
    for (int q = 0; q < n_qubits; ++q) {
        if (label[q] >= 0) continue;
        if (s >= 2) throw ParameterError("gate_label: more than two spectator qubits");
        label[q] = spect[s++];
    }
    return label;
}

double zz_rate(const DressedSystem& dressed, std::pair<int, int> pair,
               std::pair<int, int> spectators) {
    const int nq = dressed.n_qubits;
    const double e11 = dressed.energy_of(gate_label(nq, pair, 1, 1, spectators));
    const double e10 = dressed.energy_of(gate_label(nq, pair, 1, 0, spectators));
    const double e01 = dressed.energy_of(gate_label(nq, pair, 0, 1, spectators));
    const double e00 = dressed.energy_of(gate_label(nq, pair, 0, 0, spectators));
    return (e11 - e10 - e01 + e00) * 1e6;  // GHz -> kHz
}

cplx charge_matrix_element(const DressedSystem& dressed, const ChainOperators& ops,
                           int operator_qubit, const std::vector<int>& bra_label,
                           const std::vector<int>& ket_label) {
    if (operator_qubit < 0 || operator_qubit >= ops.n_qubits)
        throw ParameterError("charge_matrix_element: operator qubit out of range");
    const int bi = dressed.dressed_index(bra_label);
    const int ki = dressed.dressed_index(ket_label);
    const CVec ket = ops.n_embedded[operator_qubit] *
                     dressed.eigenvectors.col(ki).cast<cplx>();
    const cplx raw = dressed.eigenvectors.col(bi).cast<cplx>().dot(ket);
    return cplx(0.0, -1.0) * raw;
}

double sd_ratio(const DressedSystem& dressed, const ChainOperators& ops, int control,
                int target, std::pair<int, int> spectators) {
    const int nq = dressed.n_qubits;
    // Dark transition: target 0 -> 1 with the control in its ground state.
    const auto bra = gate_label(nq, {control, target}, 0, 1, spectators);
    const auto ket = gate_label(nq, {control, target}, 0, 0, spectators);
    const cplx num = charge_matrix_element(dressed, ops, control, bra, ket);
    const cplx den = charge_matrix_element(dressed, ops, target, bra, ket);
    if (std::abs(den) < 1e-12)
        throw DegenerateDriveError("sd_ratio: vanishing target drive matrix element");
    const cplx eta = -num / den;
    if (std::abs(eta.imag()) > 1e-9)
        throw NumericalError("sd_ratio: non-real ratio after gauge fixing");
    return eta.real();
}

std::vector<ZZSweepPoint> zz_vs_coupling_sweep(const ChainSpec& spec_template,
                                               const std::vector<double>& j_ff_values,
                                               const std::vector<double>& j_nn_values) {
    if (j_ff_values.empty() || j_nn_values.empty())
        throw ParameterError("zz_vs_coupling_sweep: empty coupling grid");
    std::vector<ZZSweepPoint> out;
    for (const std::string& name : {"HLMH'", "LMHL'", "MLHM'"}) {
        ChainSpec spec = make_chain(name);
        spec.j_nn = spec_template.j_nn;
        spec.levels_per_qubit = spec_template.levels_per_qubit;
        spec.basis_size = spec_template.basis_size;
        if (!spec_template.qubits.empty()) {
            const auto& ref = spec_template.qubits.front();
            for (auto& q : spec.qubits) {
                q.e_c = ref.e_c;
                q.e_l = ref.e_l;
                q.phi_ext = ref.phi_ext;
            }
        }
        std::vector<QubitSpectrum> spectra;
        for (const auto& p : spec.qubits)
            spectra.push_back(diagonalize_fluxonium(p, spec.basis_size, spec.levels_per_qubit));
        for (double jnn : j_nn_values) {
            for (double jff : j_ff_values) {
                ZZSweepPoint pt;
                pt.config = name;
                pt.j_ff = jff;
                pt.j_nn = jnn;
                try {
                    const ChainOperators ops = assemble_from_spectra(spectra, jff, jnn);
                    const DressedSystem dressed = diagonalize_chain(ops);
                    pt.zz_khz = zz_rate(dressed, {1, 2}, {1, 1});
                } catch (const NumericalError& err) {
                    pt.status = std::string("failed: ") + err.what();
                }
                out.push_back(pt);
            }
        }
    }
    return out;
}

}  // namespace fluxchain
