#ifndef THETALOCI_CHARACTERISTIC_HPP
#define THETALOCI_CHARACTERISTIC_HPP

#include <compare>
#include <string>
#include <vector>

#include "thetaloci/siegel.hpp"
#include "thetaloci/symplectic.hpp"
#include "thetaloci/types.hpp"

namespace thetaloci {

enum class Parity { even, odd };

enum class CharClass { even, odd, all };

/// A theta characteristic [eps, delta]: a pair of length-g bit vectors.
/// Inputs are reduced mod 2 at construction. Ordered lexicographically by
/// (eps, delta) so enumeration and set operations are deterministic.
class Characteristic {
  public:
    Characteristic(std::vector<int> eps, std::vector<int> delta);

    int g() const { return static_cast<int>(eps_.size()); }
    const std::vector<int>& eps() const { return eps_; }
    const std::vector<int>& delta() const { return delta_; }
    Parity parity() const { return parity_; }
    bool is_even() const { return parity_ == Parity::even; }
    bool is_odd() const { return parity_ == Parity::odd; }

    /// "[(e1,..,eg),(d1,..,dg)]"
    std::string to_string() const;

    friend auto operator<=>(const Characteristic& a, const Characteristic& b) = default;

  private:
    std::vector<int> eps_, delta_;
    Parity parity_;
};

inline Parity parity(const Characteristic& chi) { return chi.parity(); }

/// All characteristics of the requested class in lexicographic (eps, delta)
/// order. Counts: 2^{g-1}(2^g - 1) odd and 2^{g-1}(2^g + 1) even.
std::vector<Characteristic> enumerate_characteristics(int g, CharClass which);

/// Affine Sp(g, Z) action (eps; delta) -> (d, -c; -b, a)(eps; delta)
/// + (diag(c t(d)); diag(a t(b))), computed exactly and reduced mod 2.
Characteristic act(const SymplecticMatrix& sigma, const Characteristic& chi);

/// (tau eps + delta) / 2.
CVector two_torsion_point(const SiegelPoint& tau, const Characteristic& chi);

/// Concatenation along a block-diagonal splitting.
Characteristic concat(const Characteristic& a, const Characteristic& b);

}  // namespace thetaloci

#endif
