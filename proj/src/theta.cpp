#include "thetaloci/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "thetaloci/errors.hpp"
#include "thetaloci/multi_index.hpp"
#include "thetaloci/theta_sum.hpp"

namespace thetaloci {

TruncationPlan truncation_radius(const SiegelPoint& tau, const CVector& z, int order, double tol,
                                 int radius_cap) {
    if (!(tol > 0.0)) throw ValidationError("truncation_radius: tol > 0 required");
    if (order < 0 || order > kMaxJetOrder)
        throw ValidationError("truncation_radius: order must be in [0, 6]");
    if (z.size() != tau.g()) throw ValidationError("truncation_radius: dimension mismatch");
    if (radius_cap < 0) throw ValidationError("truncation_radius: radius cap must be >= 0");

    const int g = tau.g();
    const double lambda = tau.min_im_eigenvalue();
    const double a = z.imag().norm();

    // A term at euclidean distance u = |n + eps/2| from the origin is bounded
    // by h(u) = (2 pi u)^order exp(-pi lambda u^2 + 2 pi a u), a unimodal
    // function with maximum at ustar. Every point on the max-norm shell s has
    // u >= s - 1/2, and the shell holds (2s+1)^g - (2s-1)^g points.
    const double ustar =
        (kPi * a + std::sqrt(kPi * kPi * a * a + 2.0 * kPi * lambda * order)) / (2.0 * kPi * lambda);
    auto log_h = [&](double u) {
        double lh = -kPi * lambda * u * u + 2.0 * kPi * a * u;
        if (order > 0) lh += order * std::log(2.0 * kPi * u);
        return lh;
    };

    const int s_max = radius_cap + 64;
    std::vector<double> shell(s_max + 2, 0.0);
    for (int s = 1; s <= s_max + 1; ++s) {
        const double u = s - 0.5;
        const double lh = (u >= ustar) ? log_h(u) : log_h(ustar);
        const double lcount =
            std::log(std::pow(2.0 * s + 1.0, g) - std::pow(2.0 * s - 1.0, g));
        const double lterm = lh + lcount;
        shell[s] = (lterm < -745.0) ? 0.0 : std::exp(lterm);
    }

    // Geometric remainder past s_max. Valid only once the shell bounds are in
    // their decreasing regime (u >= ustar); otherwise the tail is unbounded
    // from this scan's point of view.
    double remainder = 0.0;
    if (shell[s_max + 1] > 0.0) {
        const double ratio = shell[s_max + 1] / shell[s_max];
        if (s_max - 0.5 < ustar || !(ratio < 0.9)) {
            remainder = std::numeric_limits<double>::infinity();
        } else {
            remainder = shell[s_max + 1] / (1.0 - ratio);
        }
    }

    // tail(R) = sum_{s = R+1}^{s_max} shell[s] + remainder, scanned downward
    std::vector<double> tail(s_max + 1, 0.0);
    double acc = remainder;
    for (int R = s_max; R >= 0; --R) {
        tail[R] = acc;
        if (R > 0) acc += shell[R];
    }
    for (int R = 0; R <= radius_cap; ++R) {
        if (tail[R] <= tol) return TruncationPlan{R, tail[R]};
    }
    throw ToleranceUnreachable("truncation_radius: requested tolerance needs radius above the cap");
}

ThetaJet::ThetaJet(int g, int order, std::vector<std::vector<cdouble>> tensors)
    : g_(g), order_(order), tensors_(std::move(tensors)) {
    if (static_cast<int>(tensors_.size()) != order_ + 1)
        throw ValidationError("ThetaJet: one tensor per level required");
    for (int h = 0; h <= order_; ++h) {
        if (static_cast<std::int64_t>(tensors_[h].size()) != multi_index_count(g_, h))
            throw ValidationError("ThetaJet: tensor size mismatch");
        for (const cdouble& v : tensors_[h]) {
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw NumericError("ThetaJet: non-finite entry");
        }
    }
}

const std::vector<cdouble>& ThetaJet::tensor(int h) const {
    if (h < 0 || h > order_) throw ValidationError("ThetaJet: level out of range");
    return tensors_[h];
}

CVector ThetaJet::gradient() const {
    const auto& t = tensor(1);
    CVector grad(g_);
    for (int i = 0; i < g_; ++i) grad(i) = t[i];
    return grad;
}

CMatrix ThetaJet::hessian() const {
    const auto& t = tensor(2);
    CMatrix h(g_, g_);
    for (int i = 0; i < g_; ++i)
        for (int j = i; j < g_; ++j) h(i, j) = h(j, i) = t[tau_pair_rank(g_, i, j)];
    return h;
}

cdouble ThetaJet::entry(std::vector<int> multi) const {
    const int h = static_cast<int>(multi.size());
    if (h > order_) throw ValidationError("ThetaJet: entry order above jet order");
    std::sort(multi.begin(), multi.end());
    return tensors_[h][multi_index_rank(g_, multi)];
}

double ThetaJet::max_abs(int h_max) const {
    if (h_max < 0 || h_max > order_) h_max = order_;
    double m = 0.0;
    for (int h = 0; h <= h_max; ++h)
        for (const cdouble& v : tensors_[h]) m = std::max(m, std::abs(v));
    return m;
}

namespace {

ThetaJet run_kernel(const Characteristic& chi, const SiegelPoint& tau, const CVector& z, int order,
                    int radius, bool compensated) {
    const int g = tau.g();
    const JetBasis basis = JetBasis::build(g, order);
    ThetaSumParams params{chi.eps(), chi.delta(), tau.tau(), z, radius, compensated};
    std::vector<cdouble> flat(basis.total);
    theta_jet_sum_parallel(params, basis, flat.data());
    std::vector<std::vector<cdouble>> tensors(order + 1);
    for (int h = 0; h <= order; ++h) {
        tensors[h].assign(flat.begin() + basis.offsets[h],
                          flat.begin() + basis.offsets[h] + basis.levels[h].size());
    }
    return ThetaJet(g, order, std::move(tensors));
}

}  // namespace

ThetaJet theta_jet(const Characteristic& chi, const SiegelPoint& tau, const CVector& z, int order,
                   double tol, const EvalOptions& opts) {
    if (chi.g() != tau.g() || z.size() != tau.g())
        throw ValidationError("theta_jet: dimension mismatch");
    if (order < 0 || order > kMaxJetOrder) throw ValidationError("theta_jet: order must be in [0, 6]");
    const TruncationPlan plan = truncation_radius(tau, z, order, tol, opts.radius_cap);
    return run_kernel(chi, tau, z, order, plan.radius, opts.compensated);
}

cdouble theta(const Characteristic& chi, const SiegelPoint& tau, const CVector& z, double tol,
              const EvalOptions& opts) {
    return theta_jet(chi, tau, z, 0, tol, opts).value();
}

cdouble theta_tau_derivative(const Characteristic& chi, const SiegelPoint& tau, int i, int j,
                             double tol, const EvalOptions& opts) {
    const int g = tau.g();
    if (i < 0 || j < 0 || i >= g || j >= g || i > j)
        throw ValidationError("theta_tau_derivative: need 0 <= i <= j < g");
    const ThetaJet jet = theta_jet(chi, tau, CVector::Zero(g), 2, tol, opts);
    const double kron = (i == j) ? 1.0 : 0.0;
    return jet.entry({i, j}) / (cdouble(0.0, 2.0 * kPi) * (1.0 + kron));
}

std::pair<cdouble, cdouble> translate_by_halfperiod(const Characteristic& chi,
                                                    const SiegelPoint& tau, const CVector& z,
                                                    double tol, const EvalOptions& opts) {
    const int g = tau.g();
    if (chi.g() != g || z.size() != g)
        throw ValidationError("translate_by_halfperiod: dimension mismatch");
    CVector eps(g), delta(g);
    for (int i = 0; i < g; ++i) {
        eps(i) = chi.eps()[i];
        delta(i) = chi.delta()[i];
    }
    const CVector shifted = z + 0.5 * (tau.tau() * eps) + 0.5 * delta;
    const Characteristic zero(std::vector<int>(g, 0), std::vector<int>(g, 0));
    const cdouble lhs = theta(zero, tau, shifted, tol, opts);

    const cdouble quad = (eps.transpose() * (tau.tau() * eps))(0, 0);
    const cdouble lin = (eps.transpose() * z)(0, 0);
    const cdouble mixed = (eps.transpose() * delta)(0, 0);
    const cdouble factor = std::exp(cdouble(0.0, -kPi) * (0.25 * quad + lin + 0.5 * mixed));
    // keep the product's absolute accuracy comparable to the lhs evaluation
    const double scale = std::max(1.0, std::abs(factor));
    const cdouble rhs = factor * theta(chi, tau, z, tol / scale, opts);
    return {lhs, rhs};
}

}  // namespace thetaloci
