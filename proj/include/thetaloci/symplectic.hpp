#ifndef THETALOCI_SYMPLECTIC_HPP
#define THETALOCI_SYMPLECTIC_HPP

#include <vector>

#include "thetaloci/siegel.hpp"
#include "thetaloci/types.hpp"

namespace thetaloci {

/// Integer symplectic matrix in g x g block form (a b; c d), i.e. sigma with
/// t(sigma) J sigma = J for J = (0 I; -I 0), checked in exact integer
/// arithmetic at construction.
class SymplecticMatrix {
  public:
    SymplecticMatrix(IMatrix a, IMatrix b, IMatrix c, IMatrix d);

    int g() const { return static_cast<int>(a_.rows()); }
    const IMatrix& a() const { return a_; }
    const IMatrix& b() const { return b_; }
    const IMatrix& c() const { return c_; }
    const IMatrix& d() const { return d_; }

    /// 2g x 2g block assembly.
    IMatrix full() const;

    SymplecticMatrix operator*(const SymplecticMatrix& rhs) const;

    static SymplecticMatrix identity(int g);
    /// J = (0 I; -I 0).
    static SymplecticMatrix J(int g);
    /// (I B; 0 I) for symmetric integer B.
    static SymplecticMatrix translation(const IMatrix& B);
    /// (U 0; 0 t(U)^-1) for U in GL(g, Z); requires det U = +-1.
    static SymplecticMatrix gl_embed(const IMatrix& U);

  private:
    IMatrix a_, b_, c_, d_;
};

/// Exact integer test of t(sigma) J sigma = J on an even-dimensional square
/// matrix. Entries are overflow-guarded.
bool is_symplectic(const IMatrix& sigma);

/// sigma . tau = (a tau + b)(c tau + d)^-1; throws SingularFactor when the
/// factor is numerically singular. The product is symmetrized before
/// validation (it is symmetric in exact arithmetic).
SiegelPoint symplectic_action(const SymplecticMatrix& sigma, const SiegelPoint& tau);

/// Gamma_g(n) test sigma = I mod n; with igusa also
/// diag(a t(b)) = diag(c t(d)) = 0 mod 2n.
bool in_congruence_subgroup(const SymplecticMatrix& sigma, std::int64_t n, bool igusa);

/// A small generating set of Sp(g, Z): J, elementary translations, and
/// GL embeddings of a transposition and a shear.
std::vector<SymplecticMatrix> sp_generators(int g);

}  // namespace thetaloci

#endif
