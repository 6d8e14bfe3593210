#ifndef THETALOCI_SIEGEL_HPP
#define THETALOCI_SIEGEL_HPP

#include <vector>

#include "thetaloci/types.hpp"

namespace thetaloci {

/// A point of the Siegel upper half-space: a symmetric complex g x g matrix
/// with positive definite imaginary part. Immutable after construction; the
/// smallest eigenvalue of Im(tau) is cached for series truncation bounds.
class SiegelPoint {
  public:
    int g() const { return static_cast<int>(tau_.rows()); }
    const CMatrix& tau() const { return tau_; }
    double min_im_eigenvalue() const { return min_im_eig_; }

    friend SiegelPoint validate_siegel(const CMatrix& tau);
    friend SiegelPoint block_diagonal(const std::vector<SiegelPoint>& parts);

  private:
    SiegelPoint(CMatrix tau, double min_im_eig) : tau_(std::move(tau)), min_im_eig_(min_im_eig) {}

    CMatrix tau_;
    double min_im_eig_;
};

/// Checks symmetry (asymmetry above 1e-14 is rejected rather than silently
/// symmetrized) and positive definiteness of Im(tau) via eigenvalues.
/// Throws NotSymmetric or NotPositiveDefinite.
SiegelPoint validate_siegel(const CMatrix& tau);

/// Direct sum of period matrices.
SiegelPoint block_diagonal(const std::vector<SiegelPoint>& parts);

inline SiegelPoint elliptic_point(cdouble lambda) {
    CMatrix m(1, 1);
    m(0, 0) = lambda;
    return validate_siegel(m);
}

}  // namespace thetaloci

#endif
