#ifndef THETALOCI_TYPES_HPP
#define THETALOCI_TYPES_HPP

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace thetaloci {

using cdouble = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using IMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

inline constexpr double kPi = 3.14159265358979323846;

/// Residual and rank thresholds used by membership predicates and rank probes.
/// abs_eps is an absolute residual threshold (scaled by the local magnitude where
/// documented); rank_rel_eps is relative to the largest singular value.
struct Tolerance {
    double abs_eps = 1e-12;
    double rank_rel_eps = 1e-8;
};

}  // namespace thetaloci

#endif
