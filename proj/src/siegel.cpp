#include "thetaloci/siegel.hpp"

#include <Eigen/Eigenvalues>

#include "thetaloci/errors.hpp"

namespace thetaloci {

SiegelPoint validate_siegel(const CMatrix& tau) {
    if (tau.rows() != tau.cols() || tau.rows() == 0) {
        throw ValidationError("validate_siegel: matrix must be square and nonempty");
    }
    if (!tau.allFinite()) throw ValidationError("validate_siegel: non-finite entries");
    const double asym = (tau - tau.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-14) throw NotSymmetric(asym);
    CMatrix sym = 0.5 * (tau + tau.transpose());
    RMatrix im = sym.imag();
    Eigen::SelfAdjointEigenSolver<RMatrix> es(im, Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    if (!(min_eig > 0.0)) throw NotPositiveDefinite(min_eig);
    return SiegelPoint(std::move(sym), min_eig);
}

SiegelPoint block_diagonal(const std::vector<SiegelPoint>& parts) {
    if (parts.empty()) throw ValidationError("block_diagonal: needs at least one part");
    int g = 0;
    for (const auto& p : parts) g += p.g();
    CMatrix tau = CMatrix::Zero(g, g);
    int off = 0;
    for (const auto& p : parts) {
        tau.block(off, off, p.g(), p.g()) = p.tau();
        off += p.g();
    }
    return validate_siegel(tau);
}

}  // namespace thetaloci
