#include "fluxchain/fluxonium.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace fluxchain {

void FluxoniumParams::validate() const {
    if (!(e_c > 0.0)) throw ParameterError("fluxonium: e_c must be positive");
    if (!(e_l > 0.0)) throw ParameterError("fluxonium: e_l must be positive");
    if (!(e_j >= 0.0)) throw ParameterError("fluxonium: e_j must be non-negative");
    if (!std::isfinite(phi_ext)) throw ParameterError("fluxonium: phi_ext must be finite");
}

OperatorSet build_oscillator_basis(const FluxoniumParams& params, int basis_size) {
    params.validate();
    if (basis_size < 20) throw ParameterError("fluxonium: basis_size must be >= 20");

    // Oscillator ladder with zero-point amplitudes set by E_C, E_L:
    // phi = phi_zpf (a + a^dag), n = i n_zpf (a^dag - a), phi_zpf*n_zpf = 1/2.
    const double phi_zpf = std::pow(8.0 * params.e_c / params.e_l, 0.25) / std::sqrt(2.0);
    const double n_zpf = std::pow(params.e_l / (8.0 * params.e_c), 0.25) / std::sqrt(2.0);

    OperatorSet ops;
    ops.basis_size = basis_size;
    ops.phi = Mat::Zero(basis_size, basis_size);
    ops.n = CMat::Zero(basis_size, basis_size);
    for (int k = 0; k + 1 < basis_size; ++k) {
        const double s = std::sqrt(static_cast<double>(k + 1));
        ops.phi(k, k + 1) = phi_zpf * s;
        ops.phi(k + 1, k) = phi_zpf * s;
        ops.n(k + 1, k) = cplx(0.0, n_zpf * s);
        ops.n(k, k + 1) = cplx(0.0, -n_zpf * s);
    }

    // cos(phi - phi_ext) as an exact function of the Hermitian flux operator.
    Eigen::SelfAdjointEigenSolver<Mat> es(ops.phi);
    if (es.info() != Eigen::Success)
        throw NumericalError("fluxonium: flux operator diagonalization failed");
    const Vec cosv = (es.eigenvalues().array() - params.phi_ext).cos();
    const Mat cos_phi = es.eigenvectors() * cosv.asDiagonal() * es.eigenvectors().transpose();

    ops.h0 = 4.0 * params.e_c * (ops.n * ops.n).real() + 0.5 * params.e_l * (ops.phi * ops.phi)
             - params.e_j * cos_phi;
    return ops;
}

QubitSpectrum diagonalize_fluxonium(const FluxoniumParams& params, int basis_size, int n_keep) {
    if (n_keep < 1) throw ParameterError("fluxonium: n_keep must be positive");
    if (n_keep > basis_size / 4)
        throw ParameterError("fluxonium: n_keep must be <= basis_size/4");
    const OperatorSet ops = build_oscillator_basis(params, basis_size);

    Eigen::SelfAdjointEigenSolver<Mat> es(ops.h0);
    if (es.info() != Eigen::Success)
        throw NumericalError("fluxonium: eigensolver failed to converge");

    Mat vecs = es.eigenvectors().leftCols(n_keep);
    for (int c = 0; c < n_keep; ++c) {
        int imax = 0;
        vecs.col(c).cwiseAbs().maxCoeff(&imax);
        if (vecs(imax, c) < 0.0) vecs.col(c) = -vecs.col(c);
    }

    QubitSpectrum spec;
    spec.n_keep = n_keep;
    spec.basis_size = basis_size;
    spec.energies = es.eigenvalues().head(n_keep).array() - es.eigenvalues()(0);
    for (int k = 0; k + 1 < n_keep; ++k) {
        if (spec.energies(k + 1) - spec.energies(k) < 1e-9)
            throw NumericalError("fluxonium: degenerate spectrum within retained levels");
    }
    spec.phi_op = vecs.transpose() * ops.phi * vecs;
    spec.n_op = vecs.transpose() * ops.n * vecs;
    return spec;
}

double transition_frequency(const QubitSpectrum& spec, int i, int j) {
    if (i < 0 || j < i || j >= spec.n_keep)
        throw ParameterError("transition_frequency: indices must satisfy 0 <= i <= j < n_keep");
    return spec.energies(j) - spec.energies(i);
}

bool ConvergenceReport::all_converged() const {
    for (const auto& e : entries)
        if (!e.converged) return false;
    return true;
}

ConvergenceReport convergence_report(const FluxoniumParams& params,
                                     const std::vector<int>& basis_sizes,
                                     int n_levels, double threshold_ghz) {
    if (basis_sizes.size() < 2)
        throw ParameterError("convergence_report: need at least two basis sizes");
    ConvergenceReport report;
    report.threshold_ghz = threshold_ghz;
    std::vector<Vec> spectra;
    spectra.reserve(basis_sizes.size());
    for (int b : basis_sizes)
        spectra.push_back(diagonalize_fluxonium(params, b, n_levels).energies);
    for (std::size_t k = 0; k + 1 < basis_sizes.size(); ++k) {
        for (int lvl = 0; lvl < n_levels; ++lvl) {
            ConvergenceEntry e;
            e.basis_from = basis_sizes[k];
            e.basis_to = basis_sizes[k + 1];
            e.level = lvl;
            e.drift_ghz = std::abs(spectra[k + 1](lvl) - spectra[k](lvl));
            e.converged = e.drift_ghz <= threshold_ghz;
            report.entries.push_back(e);
        }
    }
    return report;
}

}  // namespace fluxchain
