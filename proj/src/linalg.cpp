#include "thetaloci/linalg.hpp"

#include <Eigen/SVD>

#include "thetaloci/errors.hpp"

namespace thetaloci {

std::vector<double> singular_values(const CMatrix& M) {
    if (M.size() == 0) throw ValidationError("singular_values: empty matrix");
    Eigen::JacobiSVD<CMatrix> svd(M);
    const auto& sv = svd.singularValues();
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

int numerical_rank(const CMatrix& M, const Tolerance& tol) {
    const std::vector<double> sv = singular_values(M);
    const double smax = sv.empty() ? 0.0 : sv.front();
    if (smax == 0.0) return 0;
    int rank = 0;
    for (double s : sv) {
        if (s > tol.rank_rel_eps * smax) ++rank;
    }
    return rank;
}

cdouble determinant(const CMatrix& M) {
    if (M.rows() != M.cols()) throw ValidationError("determinant: matrix not square");
    if (M.size() == 0) throw ValidationError("determinant: empty matrix");
    return Eigen::PartialPivLU<CMatrix>(M).determinant();
}

}  // namespace thetaloci
