#ifndef THETALOCI_LOCI_HPP
#define THETALOCI_LOCI_HPP

#include <optional>
#include <string>
#include <vector>

#include "thetaloci/characteristic.hpp"
#include "thetaloci/siegel.hpp"
#include "thetaloci/theta.hpp"
#include "thetaloci/types.hpp"

namespace thetaloci {

struct LocusWitness {
    Characteristic chi;
    std::optional<int> mult;  // nullopt when above the scan cap
    double residual = 0.0;
};

/// Structured result of a membership query: the locus tag, the witnessing
/// characteristics (with multiplicities at their 2-torsion points and the
/// vanishing residuals), and any characteristics whose multiplicity exceeded
/// the scan cap.
struct LocusReport {
    std::string locus;
    std::vector<LocusWitness> witnesses;
    std::vector<Characteristic> above_cap;
    Tolerance tol;
};

/// Vanishing order of theta(tau, .) at z: the smallest h <= max_order with a
/// tensor entry above abs_eps * max(1, |jet|_inf). nullopt when every level
/// up to max_order vanishes (order above the cap; never extrapolated).
std::optional<int> multiplicity_at(const SiegelPoint& tau, const CVector& z, int max_order,
                                   const Tolerance& tol, const EvalOptions& opts = {});

/// Even characteristics with |theta[eps,delta](tau, 0)| below the scaled
/// threshold.
LocusReport theta_null_witnesses(const SiegelPoint& tau, const Tolerance& tol,
                                 const EvalOptions& opts = {});

/// Odd characteristics with |grad theta[eps,delta](tau, 0)|_inf below the
/// scaled threshold.
LocusReport d_theta_null_witnesses(const SiegelPoint& tau, const Tolerance& tol,
                                   const EvalOptions& opts = {});

/// Even characteristics with the theta constant and every d theta / d tau_ij
/// below the scaled threshold.
LocusReport d2_theta_null_witnesses(const SiegelPoint& tau, const Tolerance& tol,
                                    const EvalOptions& opts = {});

/// True iff every z-jet tensor of order h <= k of theta[chi] at z = 0 is below
/// the scaled threshold. Requires k + 2 <= 6.
bool in_A_k(const SiegelPoint& tau, const Characteristic& chi, int k, const Tolerance& tol,
            const EvalOptions& opts = {});

/// Scan of all 2-torsion points: a witness is a characteristic whose
/// multiplicity m there satisfies m - k in {2, 4, ...} and m <= max_order;
/// characteristics with multiplicity above the cap are reported separately.
LocusReport dk_theta_null_witnesses(const SiegelPoint& tau, int k, int max_order,
                                    const Tolerance& tol, const EvalOptions& opts = {});

}  // namespace thetaloci

#endif
