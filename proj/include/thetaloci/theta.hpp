#ifndef THETALOCI_THETA_HPP
#define THETALOCI_THETA_HPP

#include <utility>
#include <vector>

#include "thetaloci/characteristic.hpp"
#include "thetaloci/siegel.hpp"
#include "thetaloci/types.hpp"

namespace thetaloci {

inline constexpr int kDefaultRadiusCap = 200;
inline constexpr int kMaxJetOrder = 6;

/// Box radius plus a proven bound on the modulus of the omitted tail.
struct TruncationPlan {
    int radius = 0;
    double tail_bound = 0.0;
};

/// Smallest R such that the lattice terms with max-norm above R sum to at most
/// tol in modulus. The bound uses the smallest eigenvalue of Im(tau), the
/// shift |Im z|, and the polynomial derivative factor (2 pi |n|)^order,
/// comparing shell by shell against a Gaussian with geometric remainder.
/// Throws ToleranceUnreachable when no R within the cap suffices.
TruncationPlan truncation_radius(const SiegelPoint& tau, const CVector& z, int order, double tol,
                                 int radius_cap = kDefaultRadiusCap);

/// Value and symmetric z-derivative tensors of theta[eps, delta](tau, .) at a
/// point, up to a requested order. Level h holds the C(g+h-1, h) entries on
/// non-decreasing multi-indices in lexicographic order.
class ThetaJet {
  public:
    ThetaJet(int g, int order, std::vector<std::vector<cdouble>> tensors);

    int g() const { return g_; }
    int order() const { return order_; }

    const std::vector<cdouble>& tensor(int h) const;
    cdouble value() const { return tensors_[0][0]; }
    CVector gradient() const;
    CMatrix hessian() const;

    /// Entry for an arbitrary (unsorted) multi-index of 0-based coordinates.
    cdouble entry(std::vector<int> multi) const;

    /// Largest entry modulus over levels <= h_max (all levels by default).
    double max_abs(int h_max = -1) const;

  private:
    int g_, order_;
    std::vector<std::vector<cdouble>> tensors_;
};

struct EvalOptions {
    double tol = 1e-12;
    int radius_cap = kDefaultRadiusCap;
    bool compensated = false;
};

/// theta[eps, delta](tau, z) within tol of the infinite series.
cdouble theta(const Characteristic& chi, const SiegelPoint& tau, const CVector& z, double tol,
              const EvalOptions& opts = {});

/// All z-derivative tensors at z up to the requested order, by term-wise
/// differentiation of the series (each lattice term carries a product of
/// pi i (2 n_k + eps_k) factors). Never finite differences.
ThetaJet theta_jet(const Characteristic& chi, const SiegelPoint& tau, const CVector& z, int order,
                   double tol, const EvalOptions& opts = {});

/// d theta / d tau_ij at z = 0 through the heat equation, i.e.
/// (2 pi i (1 + delta_ij))^-1 d_i d_j theta. Indices are 0-based, i <= j.
cdouble theta_tau_derivative(const Characteristic& chi, const SiegelPoint& tau, int i, int j,
                             double tol, const EvalOptions& opts = {});

/// The half-period translation identity as a testable pair: returns
/// (theta[0,0](tau, z + tau eps/2 + delta/2), e * theta[eps,delta](tau, z))
/// with e = exp(-pi i (t(eps) tau eps / 4 + t(eps) z + t(eps) delta / 2)).
/// The two components agree up to evaluation tolerance.
std::pair<cdouble, cdouble> translate_by_halfperiod(const Characteristic& chi,
                                                    const SiegelPoint& tau, const CVector& z,
                                                    double tol, const EvalOptions& opts = {});

}  // namespace thetaloci

#endif
