#include "thetaloci/characteristic.hpp"

#include "thetaloci/errors.hpp"

namespace thetaloci {

Characteristic::Characteristic(std::vector<int> eps, std::vector<int> delta)
    : eps_(std::move(eps)), delta_(std::move(delta)) {
    if (eps_.empty() || eps_.size() != delta_.size()) {
        throw ValidationError("Characteristic: eps and delta must be nonempty of equal length");
    }
    int dot = 0;
    for (std::size_t i = 0; i < eps_.size(); ++i) {
        eps_[i] = ((eps_[i] % 2) + 2) % 2;
        delta_[i] = ((delta_[i] % 2) + 2) % 2;
        dot += eps_[i] * delta_[i];
    }
    parity_ = (dot % 2 == 0) ? Parity::even : Parity::odd;
}

std::string Characteristic::to_string() const {
    auto bits = [](const std::vector<int>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s + ")";
    };
    return "[" + bits(eps_) + "," + bits(delta_) + "]";
}

std::vector<Characteristic> enumerate_characteristics(int g, CharClass which) {
    if (g < 1) throw ValidationError("enumerate_characteristics: g >= 1 required");
    std::vector<Characteristic> out;
    const std::uint64_t total = std::uint64_t{1} << (2 * g);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<int> eps(g), delta(g);
        // lexicographic order by (eps, delta): eps holds the high bits
        for (int i = 0; i < g; ++i) {
            eps[i] = static_cast<int>((code >> (2 * g - 1 - i)) & 1);
            delta[i] = static_cast<int>((code >> (g - 1 - i)) & 1);
        }
        Characteristic chi(std::move(eps), std::move(delta));
        if (which == CharClass::all || (which == CharClass::even && chi.is_even()) ||
            (which == CharClass::odd && chi.is_odd())) {
            out.push_back(std::move(chi));
        }
    }
    return out;
}

Characteristic act(const SymplecticMatrix& sigma, const Characteristic& chi) {
    const int g = chi.g();
    if (sigma.g() != g) throw ValidationError("act: dimension mismatch");
    IVector eps(g), delta(g);
    for (int i = 0; i < g; ++i) {
        eps(i) = chi.eps()[i];
        delta(i) = chi.delta()[i];
    }
    IVector eps2 = sigma.d() * eps - sigma.c() * delta;
    IVector delta2 = -sigma.b() * eps + sigma.a() * delta;
    IMatrix cd = sigma.c() * IMatrix(sigma.d().transpose());
    IMatrix ab = sigma.a() * IMatrix(sigma.b().transpose());
    std::vector<int> e(g), d(g);
    for (int i = 0; i < g; ++i) {
        e[i] = static_cast<int>(((eps2(i) + cd(i, i)) % 2 + 2) % 2);
        d[i] = static_cast<int>(((delta2(i) + ab(i, i)) % 2 + 2) % 2);
    }
    return Characteristic(std::move(e), std::move(d));
}

CVector two_torsion_point(const SiegelPoint& tau, const Characteristic& chi) {
    const int g = chi.g();
    if (tau.g() != g) throw ValidationError("two_torsion_point: dimension mismatch");
    CVector eps(g), delta(g);
    for (int i = 0; i < g; ++i) {
        eps(i) = chi.eps()[i];
        delta(i) = chi.delta()[i];
    }
    return 0.5 * (tau.tau() * eps + delta);
}

Characteristic concat(const Characteristic& a, const Characteristic& b) {
    std::vector<int> eps = a.eps();
    std::vector<int> delta = a.delta();
    eps.insert(eps.end(), b.eps().begin(), b.eps().end());
    delta.insert(delta.end(), b.delta().begin(), b.delta().end());
    return Characteristic(std::move(eps), std::move(delta));
}

}  // namespace thetaloci
