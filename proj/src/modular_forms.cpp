#include "thetaloci/modular_forms.hpp"

#include "thetaloci/errors.hpp"
#include "thetaloci/linalg.hpp"
#include "thetaloci/multi_index.hpp"

namespace thetaloci {

namespace {

// column (theta; d theta / d tau_ij) of a single even characteristic
CVector even_jet_column(const Characteristic& chi, const SiegelPoint& tau, double tol,
                        const EvalOptions& opts) {
    const int g = tau.g();
    const ThetaJet jet = theta_jet(chi, tau, CVector::Zero(g), 2, tol, opts);
    CVector col(tau_pair_count(g) + 1);
    col(0) = jet.value();
    int row = 1;
    for (const auto& [i, j] : tau_pairs(g)) {
        const double kron = (i == j) ? 1.0 : 0.0;
        col(row++) = jet.entry({i, j}) / (cdouble(0.0, 2.0 * kPi) * (1.0 + kron));
    }
    return col;
}

}  // namespace

GradientMatrix gradient_matrix(const SiegelPoint& tau, double tol, const EvalOptions& opts) {
    const int g = tau.g();
    GradientMatrix out;
    out.g = g;
    out.chars = enumerate_characteristics(g, CharClass::odd);
    out.M.resize(g, static_cast<Eigen::Index>(out.chars.size()));
    for (std::size_t k = 0; k < out.chars.size(); ++k) {
        const ThetaJet jet = theta_jet(out.chars[k], tau, CVector::Zero(g), 1, tol, opts);
        out.M.col(static_cast<Eigen::Index>(k)) = jet.gradient();
    }
    return out;
}

EvenJetMatrix even_jet_matrix(const SiegelPoint& tau, double tol, const EvalOptions& opts) {
    const int g = tau.g();
    EvenJetMatrix out;
    out.g = g;
    out.chars = enumerate_characteristics(g, CharClass::even);
    out.M.resize(tau_pair_count(g) + 1, static_cast<Eigen::Index>(out.chars.size()));
    for (std::size_t k = 0; k < out.chars.size(); ++k) {
        out.M.col(static_cast<Eigen::Index>(k)) = even_jet_column(out.chars[k], tau, tol, opts);
    }
    return out;
}

cdouble D_form(const std::vector<Characteristic>& chars, const SiegelPoint& tau, double tol,
               const EvalOptions& opts) {
    const int g = tau.g();
    if (static_cast<int>(chars.size()) != g)
        throw BadArity("D_form: exactly g characteristics required");
    CMatrix M(g, g);
    for (int k = 0; k < g; ++k) {
        if (!chars[k].is_odd()) throw NotOdd("D_form: characteristic " + chars[k].to_string() + " is even");
        if (chars[k].g() != g) throw ValidationError("D_form: dimension mismatch");
        M.col(k) = theta_jet(chars[k], tau, CVector::Zero(g), 1, tol, opts).gradient();
    }
    return determinant(M);
}

cdouble D2_form(const std::vector<Characteristic>& chars, const SiegelPoint& tau, double tol,
                const EvalOptions& opts) {
    const int g = tau.g();
    const Eigen::Index n = tau_pair_count(g) + 1;
    if (static_cast<Eigen::Index>(chars.size()) != n)
        throw BadArity("D2_form: exactly g(g+1)/2 + 1 characteristics required");
    CMatrix M(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        if (!chars[k].is_even())
            throw NotEven("D2_form: characteristic " + chars[k].to_string() + " is odd");
        if (chars[k].g() != g) throw ValidationError("D2_form: dimension mismatch");
        M.col(k) = even_jet_column(chars[k], tau, tol, opts);
    }
    return determinant(M);
}

}  // namespace thetaloci
