#include "thetaloci/symplectic.hpp"

#include <cmath>
#include <cstdlib>

#include <Eigen/LU>

#include "thetaloci/errors.hpp"

namespace thetaloci {

namespace {

// Integer products here stay far below 2^63 for the generator words the
// library deals with; guard anyway so silent wraparound cannot corrupt an
// exact test.
constexpr std::int64_t kEntryBound = 1'000'000'000;  // 1e9: g * bound^2 < 2^63 for g <= 9

void check_entries(const IMatrix& m, const char* what) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (std::llabs(m(i, j)) > kEntryBound)
                throw ValidationError(std::string(what) + ": integer entry too large for exact arithmetic");
}

IMatrix imul(const IMatrix& x, const IMatrix& y) {
    check_entries(x, "symplectic product");
    check_entries(y, "symplectic product");
    return x * y;
}

bool is_symplectic_blocks(const IMatrix& a, const IMatrix& b, const IMatrix& c, const IMatrix& d) {
    const auto g = a.rows();
    // t(sigma) J sigma = J  <=>  t(a)c = t(c)a, t(b)d = t(d)b, t(a)d - t(c)b = I
    IMatrix ac = imul(a.transpose(), c);
    IMatrix bd = imul(b.transpose(), d);
    IMatrix ad_cb = imul(a.transpose(), d) - imul(c.transpose(), b);
    return ac == IMatrix(ac.transpose()) && bd == IMatrix(bd.transpose()) &&
           ad_cb == IMatrix(IMatrix::Identity(g, g));
}

}  // namespace

SymplecticMatrix::SymplecticMatrix(IMatrix a, IMatrix b, IMatrix c, IMatrix d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    const auto g = a_.rows();
    if (g == 0 || a_.cols() != g || b_.rows() != g || b_.cols() != g || c_.rows() != g ||
        c_.cols() != g || d_.rows() != g || d_.cols() != g) {
        throw ValidationError("SymplecticMatrix: blocks must be square of equal size");
    }
    if (!is_symplectic_blocks(a_, b_, c_, d_)) {
        throw ValidationError("SymplecticMatrix: t(sigma) J sigma != J");
    }
}

IMatrix SymplecticMatrix::full() const {
    const int n = g();
    IMatrix m(2 * n, 2 * n);
    m.topLeftCorner(n, n) = a_;
    m.topRightCorner(n, n) = b_;
    m.bottomLeftCorner(n, n) = c_;
    m.bottomRightCorner(n, n) = d_;
    return m;
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& rhs) const {
    if (g() != rhs.g()) throw ValidationError("symplectic product: size mismatch");
    return SymplecticMatrix(imul(a_, rhs.a_) + imul(b_, rhs.c_), imul(a_, rhs.b_) + imul(b_, rhs.d_),
                            imul(c_, rhs.a_) + imul(d_, rhs.c_), imul(c_, rhs.b_) + imul(d_, rhs.d_));
}

SymplecticMatrix SymplecticMatrix::identity(int g) {
    return SymplecticMatrix(IMatrix::Identity(g, g), IMatrix::Zero(g, g), IMatrix::Zero(g, g),
                            IMatrix::Identity(g, g));
}

SymplecticMatrix SymplecticMatrix::J(int g) {
    return SymplecticMatrix(IMatrix::Zero(g, g), IMatrix::Identity(g, g),
                            -IMatrix::Identity(g, g), IMatrix::Zero(g, g));
}

SymplecticMatrix SymplecticMatrix::translation(const IMatrix& B) {
    if (B.rows() != B.cols() || B != IMatrix(B.transpose()))
        throw ValidationError("translation block must be symmetric");
    const auto g = B.rows();
    return SymplecticMatrix(IMatrix::Identity(g, g), B, IMatrix::Zero(g, g),
                            IMatrix::Identity(g, g));
}

SymplecticMatrix SymplecticMatrix::gl_embed(const IMatrix& U) {
    const auto g = U.rows();
    if (U.cols() != g) throw ValidationError("gl_embed: square matrix required");
    // integer inverse transpose; valid only for det = +-1
    Eigen::MatrixXd Ud = U.cast<double>();
    const double det = Ud.determinant();
    if (std::llround(det) != 1 && std::llround(det) != -1)
        throw ValidationError("gl_embed: matrix not in GL(g, Z)");
    Eigen::MatrixXd inv = Ud.inverse().transpose();
    IMatrix D(g, g);
    for (Eigen::Index i = 0; i < g; ++i)
        for (Eigen::Index j = 0; j < g; ++j) D(i, j) = std::llround(inv(i, j));
    return SymplecticMatrix(U, IMatrix::Zero(g, g), IMatrix::Zero(g, g), D);
}

bool is_symplectic(const IMatrix& sigma) {
    if (sigma.rows() != sigma.cols() || sigma.rows() == 0 || sigma.rows() % 2 != 0) {
        throw ValidationError("is_symplectic: even-dimensional square matrix required");
    }
    const auto g = sigma.rows() / 2;
    return is_symplectic_blocks(sigma.topLeftCorner(g, g), sigma.topRightCorner(g, g),
                                sigma.bottomLeftCorner(g, g), sigma.bottomRightCorner(g, g));
}

SiegelPoint symplectic_action(const SymplecticMatrix& sigma, const SiegelPoint& tau) {
    if (sigma.g() != tau.g()) throw ValidationError("symplectic_action: dimension mismatch");
    const CMatrix num = sigma.a().cast<cdouble>() * tau.tau() + sigma.b().cast<cdouble>();
    const CMatrix den = sigma.c().cast<cdouble>() * tau.tau() + sigma.d().cast<cdouble>();
    Eigen::FullPivLU<CMatrix> lu(den);
    lu.setThreshold(1e-13);
    if (lu.rank() < tau.g()) {
        throw SingularFactor("symplectic_action: c tau + d numerically singular");
    }
    CMatrix result = num * lu.inverse();
    result = 0.5 * (result + result.transpose().eval());
    return validate_siegel(result);
}

bool in_congruence_subgroup(const SymplecticMatrix& sigma, std::int64_t n, bool igusa) {
    if (n < 1) throw ValidationError("in_congruence_subgroup: n >= 1 required");
    const int g = sigma.g();
    auto zero_mod = [n](const IMatrix& m) {
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                if (m(i, j) % n != 0) return false;
        return true;
    };
    IMatrix I = IMatrix::Identity(g, g);
    if (!zero_mod(sigma.a() - I) || !zero_mod(sigma.d() - I) || !zero_mod(sigma.b()) ||
        !zero_mod(sigma.c())) {
        return false;
    }
    if (!igusa) return true;
    const std::int64_t m2 = 2 * n;
    IMatrix ab = imul(sigma.a(), IMatrix(sigma.b().transpose()));
    IMatrix cd = imul(sigma.c(), IMatrix(sigma.d().transpose()));
    for (int i = 0; i < g; ++i) {
        if (ab(i, i) % m2 != 0 || cd(i, i) % m2 != 0) return false;
    }
    return true;
}

std::vector<SymplecticMatrix> sp_generators(int g) {
    std::vector<SymplecticMatrix> gens;
    gens.push_back(SymplecticMatrix::J(g));
    for (int i = 0; i < g; ++i) {
        IMatrix B = IMatrix::Zero(g, g);
        B(i, i) = 1;
        gens.push_back(SymplecticMatrix::translation(B));
    }
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j) {
            IMatrix B = IMatrix::Zero(g, g);
            B(i, j) = B(j, i) = 1;
            gens.push_back(SymplecticMatrix::translation(B));
        }
    if (g >= 2) {
        IMatrix P = IMatrix::Identity(g, g);
        P(0, 0) = P(1, 1) = 0;
        P(0, 1) = P(1, 0) = 1;
        gens.push_back(SymplecticMatrix::gl_embed(P));
        IMatrix S = IMatrix::Identity(g, g);
        S(0, 1) = 1;
        gens.push_back(SymplecticMatrix::gl_embed(S));
    }
    return gens;
}

}  // namespace thetaloci
