#ifndef THETALOCI_LINALG_HPP
#define THETALOCI_LINALG_HPP

#include <vector>

#include "thetaloci/types.hpp"

namespace thetaloci {

/// Singular values of M in descending order.
std::vector<double> singular_values(const CMatrix& M);

/// Number of singular values above rank_rel_eps * sigma_max; 0 when sigma_max = 0.
int numerical_rank(const CMatrix& M, const Tolerance& tol);

/// Determinant by pivoted LU. Exact cancellation (duplicated columns) survives
/// only up to rounding; callers compare against an absolute threshold.
cdouble determinant(const CMatrix& M);

}  // namespace thetaloci

#endif
