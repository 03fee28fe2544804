#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace indist {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

// Bad input: wrong shapes, unknown labels, out-of-range parameters.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A state or projection with vanishing norm.
class DegenerateStateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numerical procedure did not reach its own consistency threshold.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

}  // namespace indist
