#include "fluxchain/chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace fluxchain {

long ChainSpec::dim() const {
    long d = 1;
    for (int q = 0; q < n_qubits(); ++q) d *= levels_per_qubit;
    return d;
}

void ChainSpec::validate() const {
    if (n_qubits() < 2 || n_qubits() > 6)
        throw ParameterError("chain: between 2 and 6 qubits supported");
    if (levels_per_qubit < 3)
        throw ParameterError("chain: levels_per_qubit must be >= 3");
    if (!std::isfinite(j_ff) || !std::isfinite(j_nn))
        throw ParameterError("chain: couplings must be finite");
    for (const auto& q : qubits) q.validate();
}

long bare_flat_index(const std::vector<int>& label, int levels) {
    long idx = 0;
    for (int k : label) {
        if (k < 0 || k >= levels) throw ParameterError("bare label index out of range");
        idx = idx * levels + k;
    }
    return idx;
}

std::vector<int> bare_multi_index(long flat, int levels, int n_qubits) {
    std::vector<int> label(n_qubits, 0);
    for (int q = n_qubits - 1; q >= 0; --q) {
        label[q] = static_cast<int>(flat % levels);
        flat /= levels;
    }
    return label;
}

namespace {

// Embed a single-qubit operator at position q: I (x) A (x) I, qubit 0 most
// significant.
template <typename MatT>
MatT embed(const MatT& a, int q, int levels, int n_qubits) {
    long left = 1, right = 1;
    for (int k = 0; k < q; ++k) left *= levels;
    for (int k = q + 1; k < n_qubits; ++k) right *= levels;
    const long dim = left * levels * right;
    MatT out = MatT::Zero(dim, dim);
    for (long l = 0; l < left; ++l)
        for (int a1 = 0; a1 < levels; ++a1)
            for (int a2 = 0; a2 < levels; ++a2) {
                const auto v = a(a1, a2);
                if (v == typename MatT::Scalar(0)) continue;
                const long row0 = (l * levels + a1) * right;
                const long col0 = (l * levels + a2) * right;
                for (long r = 0; r < right; ++r) out(row0 + r, col0 + r) = v;
            }
    return out;
}

}  // namespace

ChainOperators assemble_from_spectra(const std::vector<QubitSpectrum>& spectra,
                                     double j_ff, double j_nn) {
    if (spectra.size() < 2) throw ParameterError("chain: need at least two qubits");
    const int levels = spectra[0].n_keep;
    for (const auto& s : spectra)
        if (s.n_keep != levels)
            throw ParameterError("chain: all qubits must share the same level count");
    const int nq = static_cast<int>(spectra.size());

    ChainOperators ops;
    ops.levels = levels;
    ops.n_qubits = nq;
    ops.qubit_spectra = spectra;

    long dim = 1;
    for (int q = 0; q < nq; ++q) dim *= levels;
    ops.h0_static = Mat::Zero(dim, dim);

    for (int q = 0; q < nq; ++q) {
        Mat ediag = Mat::Zero(levels, levels);
        ediag.diagonal() = spectra[q].energies;
        ops.h0_static += embed<Mat>(ediag, q, levels, nq);
        ops.phi_embedded.push_back(embed<Mat>(spectra[q].phi_op, q, levels, nq));
        ops.n_embedded.push_back(embed<CMat>(spectra[q].n_op, q, levels, nq));
    }
    for (int q = 0; q + 1 < nq; ++q) {
        if (j_ff != 0.0)
            ops.h0_static += j_ff * (ops.phi_embedded[q] * ops.phi_embedded[q + 1]);
        if (j_nn != 0.0)
            ops.h0_static += j_nn * (ops.n_embedded[q] * ops.n_embedded[q + 1]).real();
    }
    return ops;
}

ChainOperators assemble_chain(const ChainSpec& spec) {
    spec.validate();
    std::vector<QubitSpectrum> spectra;
    spectra.reserve(spec.qubits.size());
    for (const auto& p : spec.qubits)
        spectra.push_back(diagonalize_fluxonium(p, spec.basis_size, spec.levels_per_qubit));
    return assemble_from_spectra(spectra, spec.j_ff, spec.j_nn);
}

namespace {

// Optimal assignment maximizing total overlap (shortest augmenting path on
// the negated matrix). Used only when the greedy pass leaves a conflict.
std::vector<int> optimal_assignment(const Mat& overlap) {
    const int n = static_cast<int>(overlap.rows());
    const double big = overlap.maxCoeff();
    // cost(i,j) = big - overlap(i,j) >= 0; minimize total cost.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, std::numeric_limits<double>::infinity());
        std::vector<char> used(n + 1, false);
        do {
            used[j0] = true;
            const int i0 = p[j0];
            double delta = std::numeric_limits<double>::infinity();
            int j1 = 0;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = (big - overlap(i0 - 1, j - 1)) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> assign(n, -1);
    for (int j = 1; j <= n; ++j)
        if (p[j] != 0) assign[p[j] - 1] = j - 1;
    return assign;
}

bool is_computational(long flat, int levels, int n_qubits) {
    for (int q = 0; q < n_qubits; ++q) {
        if (flat % levels > 1) return false;
        flat /= levels;
    }
    return true;
}

}  // namespace

LabelAssignment label_states(const Mat& eigenvectors, int levels, int n_qubits) {
    const long dim = eigenvectors.rows();
    const Mat overlap = eigenvectors.cwiseAbs();  // overlap(bare, dressed)

    std::vector<long> order(dim);
    std::iota(order.begin(), order.end(), 0L);
    std::vector<double> best(dim);
    for (long b = 0; b < dim; ++b) best[b] = overlap.row(b).maxCoeff();
    std::sort(order.begin(), order.end(), [&](long a, long b) {
        if (best[a] != best[b]) return best[a] > best[b];
        return a < b;
    });

    LabelAssignment out;
    out.label_map.assign(dim, -1);
    out.overlap_quality.assign(dim, 0.0);
    std::vector<char> used(dim, false);
    bool conflict = false;
    for (long b : order) {
        int pick = -1;
        double pick_overlap = -1.0;
        for (long d = 0; d < dim; ++d) {
            if (!used[d] && overlap(b, d) > pick_overlap) {
                pick_overlap = overlap(b, d);
                pick = static_cast<int>(d);
            }
        }
        out.label_map[b] = pick;
        out.overlap_quality[b] = pick_overlap;
        used[pick] = true;
        if (pick_overlap < 0.5 && is_computational(b, levels, n_qubits)) conflict = true;
    }

    if (conflict) {
        const std::vector<int> assign = optimal_assignment(overlap);
        for (long b = 0; b < dim; ++b) {
            out.label_map[b] = assign[b];
            out.overlap_quality[b] = overlap(b, assign[b]);
        }
        for (long b = 0; b < dim; ++b) {
            if (is_computational(b, levels, n_qubits) && out.overlap_quality[b] < 0.5)
                throw LabelingError(
                    "label_states: computational label with overlap below 0.5 "
                    "(strong hybridization)");
        }
    }
    return out;
}

DressedSystem diagonalize_chain(const ChainOperators& ops) {
    Eigen::SelfAdjointEigenSolver<Mat> es(ops.h0_static);
    if (es.info() != Eigen::Success)
        throw NumericalError("chain: eigensolver failed to converge");

    DressedSystem dressed;
    dressed.levels = ops.levels;
    dressed.n_qubits = ops.n_qubits;
    dressed.eigenvalues = es.eigenvalues();
    dressed.eigenvectors = es.eigenvectors();
    for (long c = 0; c < dressed.eigenvectors.cols(); ++c) {
        long imax = 0;
        dressed.eigenvectors.col(c).cwiseAbs().maxCoeff(&imax);
        if (dressed.eigenvectors(imax, c) < 0.0)
            dressed.eigenvectors.col(c) = -dressed.eigenvectors.col(c);
    }
    LabelAssignment assign = label_states(dressed.eigenvectors, ops.levels, ops.n_qubits);
    dressed.label_map = std::move(assign.label_map);
    dressed.overlap_quality = std::move(assign.overlap_quality);
    return dressed;
}

int DressedSystem::dressed_index(const std::vector<int>& bare_label) const {
    if (static_cast<int>(bare_label.size()) != n_qubits)
        throw ParameterError("dressed_index: label length mismatch");
    const long flat = bare_flat_index(bare_label, levels);
    const int idx = label_map[flat];
    if (idx < 0) throw LabelingError("dressed_index: unresolved bare label");
    return idx;
}

double DressedSystem::energy_of(const std::vector<int>& bare_label) const {
    return eigenvalues(dressed_index(bare_label));
}

std::vector<int> computational_subspace(const DressedSystem& dressed) {
    const int nq = dressed.n_qubits;
    std::vector<int> indices;
    indices.reserve(1L << nq);
    for (long mask = 0; mask < (1L << nq); ++mask) {
        std::vector<int> label(nq, 0);
        for (int q = 0; q < nq; ++q) label[q] = (mask >> (nq - 1 - q)) & 1;
        indices.push_back(dressed.dressed_index(label));
    }
    return indices;
}

}  // namespace fluxchain
