#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace fluxchain {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// All energies are E/h in GHz, all times in ns. Angular frequencies
// (2*pi factors) appear only inside the propagator.

struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when dressed states cannot be matched to bare product labels.
struct LabelingError : NumericalError {
    using NumericalError::NumericalError;
};

// Raised when a selective-darkening ratio or drive conditioning is undefined.
struct DegenerateDriveError : NumericalError {
    using NumericalError::NumericalError;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fluxchain
