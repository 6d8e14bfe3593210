#ifndef THETALOCI_CONSTRUCTORS_HPP
#define THETALOCI_CONSTRUCTORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "thetaloci/characteristic.hpp"
#include "thetaloci/siegel.hpp"
#include "thetaloci/theta.hpp"
#include "thetaloci/types.hpp"

namespace thetaloci {

/// An explicit sample configuration: a period matrix, an evaluation point,
/// optionally the characteristic whose 2-torsion point z is, the multiplicity
/// the construction promises there, and a provenance tag for reports.
struct SamplePoint {
    SiegelPoint tau;
    CVector z;
    std::optional<Characteristic> chi;
    std::optional<int> expected_mult;
    std::string provenance;
};

/// (1 + lambda) / 2, the zero of theta(tau, .) on the elliptic curve with
/// period lambda; coincides with the 2-torsion point of [1, 1].
cdouble elliptic_theta_zero(cdouble lambda);

struct DivisorPointResult {
    CVector z;
    double residual = 0.0;
    bool near_two_torsion = false;  // within 1e-8 of some 2-torsion point mod the lattice
};

/// One-complex-parameter root find of t -> theta(tau, start + t * direction):
/// a fixed 8 x 8 grid of starting values followed by Newton iteration with the
/// analytic directional derivative. Deterministic; throws NoRootFound when the
/// budget is exhausted (retry with another direction).
DivisorPointResult theta_divisor_point(const SiegelPoint& tau, const CVector& start,
                                       const CVector& direction, double tol,
                                       const EvalOptions& opts = {});

/// A dimension-d point with a vanishing even theta constant, together with the
/// vanishing characteristic. d = 2 returns diag(i, 2i) with [(1,1),(1,1)];
/// d >= 3 tracks that vanishing characteristic off the decomposable locus by a
/// predictor-corrector continuation, so the singular 2-torsion point is an
/// ordinary double point of the theta divisor (full Hessian rank).
std::pair<SiegelPoint, Characteristic> theta_null_base(int d, const EvalOptions& opts = {});

/// tau = base + elliptic factors lambda_1..lambda_k, characteristic
/// [(alpha,1..1),(beta,1..1)], z = its 2-torsion point, expected multiplicity
/// k + 2. The base must carry the vanishing even constant [alpha, beta]
/// (checked; BaseNotThetaNull otherwise).
SamplePoint thetanull_times_elliptics(const SiegelPoint& base, const Characteristic& base_char,
                                      const std::vector<cdouble>& lambdas, double tol = 1e-12,
                                      const EvalOptions& opts = {});

/// Product of g elliptic curves with z the componentwise theta zeros: the
/// all-ones 2-torsion point of multiplicity g. For g = 3 the first two
/// coordinates form an ordinary double point of the 2-dimensional factor.
SamplePoint decomposable_singular_sample(int g, const std::vector<cdouble>& lambdas = {});

/// Bordered period matrix (tau z; t(z) it) in dimension g + 1. Throws
/// NotPositiveDefinite when t is too small for the given z.
SiegelPoint fj_family(const SiegelPoint& tau, const CVector& z, double t);

}  // namespace thetaloci

#endif
