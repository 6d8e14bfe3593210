#include "thetaloci/loci.hpp"

#include <algorithm>
#include <cmath>

#include "thetaloci/errors.hpp"
#include "thetaloci/multi_index.hpp"

namespace thetaloci {

namespace {

// Residual thresholds are scale-aware: an entry counts as zero below
// abs_eps * max(1, scale), where scale is the largest magnitude in the family
// the entry belongs to. Raw absolute thresholds misfire when Im tau is large
// and every theta value is tiny.
double zero_threshold(const Tolerance& tol, double scale) {
    return tol.abs_eps * std::max(1.0, scale);
}

std::optional<int> jet_vanishing_order(const ThetaJet& jet, int max_order, const Tolerance& tol) {
    const double thresh = zero_threshold(tol, jet.max_abs());
    for (int h = 0; h <= max_order; ++h) {
        double level_max = 0.0;
        for (const cdouble& v : jet.tensor(h)) level_max = std::max(level_max, std::abs(v));
        if (level_max > thresh) return h;
    }
    return std::nullopt;
}

std::optional<int> mult_at_two_torsion(const SiegelPoint& tau, const Characteristic& chi,
                                       int max_order, const Tolerance& tol,
                                       const EvalOptions& opts) {
    return multiplicity_at(tau, two_torsion_point(tau, chi), max_order, tol, opts);
}

}  // namespace

std::optional<int> multiplicity_at(const SiegelPoint& tau, const CVector& z, int max_order,
                                   const Tolerance& tol, const EvalOptions& opts) {
    if (max_order < 0 || max_order > kMaxJetOrder)
        throw ValidationError("multiplicity_at: max_order must be in [0, 6]");
    const Characteristic zero(std::vector<int>(tau.g(), 0), std::vector<int>(tau.g(), 0));
    const ThetaJet jet = theta_jet(zero, tau, z, max_order, tol.abs_eps, opts);
    return jet_vanishing_order(jet, max_order, tol);
}

LocusReport theta_null_witnesses(const SiegelPoint& tau, const Tolerance& tol,
                                 const EvalOptions& opts) {
    LocusReport report;
    report.locus = "theta_null";
    report.tol = tol;
    const auto evens = enumerate_characteristics(tau.g(), CharClass::even);
    std::vector<double> values(evens.size());
    double scale = 0.0;
    for (std::size_t k = 0; k < evens.size(); ++k) {
        values[k] = std::abs(theta(evens[k], tau, CVector::Zero(tau.g()), tol.abs_eps, opts));
        scale = std::max(scale, values[k]);
    }
    const double thresh = zero_threshold(tol, scale);
    for (std::size_t k = 0; k < evens.size(); ++k) {
        if (values[k] < thresh) {
            report.witnesses.push_back(
                {evens[k], mult_at_two_torsion(tau, evens[k], kMaxJetOrder, tol, opts), values[k]});
        }
    }
    return report;
}

LocusReport d_theta_null_witnesses(const SiegelPoint& tau, const Tolerance& tol,
                                   const EvalOptions& opts) {
    LocusReport report;
    report.locus = "d_theta_null";
    report.tol = tol;
    const auto odds = enumerate_characteristics(tau.g(), CharClass::odd);
    std::vector<double> norms(odds.size());
    double scale = 0.0;
    for (std::size_t k = 0; k < odds.size(); ++k) {
        const CVector grad =
            theta_jet(odds[k], tau, CVector::Zero(tau.g()), 1, tol.abs_eps, opts).gradient();
        norms[k] = grad.cwiseAbs().maxCoeff();
        scale = std::max(scale, norms[k]);
    }
    const double thresh = zero_threshold(tol, scale);
    for (std::size_t k = 0; k < odds.size(); ++k) {
        if (norms[k] < thresh) {
            report.witnesses.push_back(
                {odds[k], mult_at_two_torsion(tau, odds[k], kMaxJetOrder, tol, opts), norms[k]});
        }
    }
    return report;
}

LocusReport d2_theta_null_witnesses(const SiegelPoint& tau, const Tolerance& tol,
                                    const EvalOptions& opts) {
    LocusReport report;
    report.locus = "d2_theta_null";
    report.tol = tol;
    const int g = tau.g();
    const auto evens = enumerate_characteristics(g, CharClass::even);
    // residual per characteristic: max over the theta constant and all
    // tau-derivatives (the (theta) and (theta2bis) equations together)
    std::vector<double> residuals(evens.size());
    double scale = 0.0;
    for (std::size_t k = 0; k < evens.size(); ++k) {
        const ThetaJet jet = theta_jet(evens[k], tau, CVector::Zero(g), 2, tol.abs_eps, opts);
        double r = std::abs(jet.value());
        for (const auto& [i, j] : tau_pairs(g)) {
            const double kron = (i == j) ? 1.0 : 0.0;
            r = std::max(r, std::abs(jet.entry({i, j}) / (2.0 * kPi * (1.0 + kron))));
        }
        residuals[k] = r;
        scale = std::max(scale, r);
    }
    const double thresh = zero_threshold(tol, scale);
    for (std::size_t k = 0; k < evens.size(); ++k) {
        if (residuals[k] < thresh) {
            report.witnesses.push_back(
                {evens[k], mult_at_two_torsion(tau, evens[k], kMaxJetOrder, tol, opts), residuals[k]});
        }
    }
    return report;
}

bool in_A_k(const SiegelPoint& tau, const Characteristic& chi, int k, const Tolerance& tol,
            const EvalOptions& opts) {
    if (k < 0 || k + 2 > kMaxJetOrder) throw ValidationError("in_A_k: need 0 <= k <= 4");
    if (chi.g() != tau.g()) throw ValidationError("in_A_k: dimension mismatch");
    // jets two orders past k give the threshold a meaningful scale
    const ThetaJet jet = theta_jet(chi, tau, CVector::Zero(tau.g()), k + 2, tol.abs_eps, opts);
    const double thresh = zero_threshold(tol, jet.max_abs());
    return jet.max_abs(k) < thresh;
}

LocusReport dk_theta_null_witnesses(const SiegelPoint& tau, int k, int max_order,
                                    const Tolerance& tol, const EvalOptions& opts) {
    if (k < 0 || k + 2 > max_order || max_order > kMaxJetOrder)
        throw ValidationError("dk_theta_null_witnesses: need k + 2 <= max_order <= 6");
    LocusReport report;
    report.locus = "dk_theta_null(" + std::to_string(k) + ")";
    report.tol = tol;
    for (const auto& chi : enumerate_characteristics(tau.g(), CharClass::all)) {
        const auto m = mult_at_two_torsion(tau, chi, max_order, tol, opts);
        if (!m.has_value()) {
            report.above_cap.push_back(chi);
            continue;
        }
        const int diff = *m - k;
        if (diff > 0 && diff % 2 == 0) {
            report.witnesses.push_back({chi, m, 0.0});
        }
    }
    return report;
}

}  // namespace thetaloci
