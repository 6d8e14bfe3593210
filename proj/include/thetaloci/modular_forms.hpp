#ifndef THETALOCI_MODULAR_FORMS_HPP
#define THETALOCI_MODULAR_FORMS_HPP

#include <vector>

#include "thetaloci/characteristic.hpp"
#include "thetaloci/siegel.hpp"
#include "thetaloci/theta.hpp"
#include "thetaloci/types.hpp"

namespace thetaloci {

/// g x #odd matrix whose column for [eps, delta] is grad theta[eps,delta](tau, 0),
/// odd characteristics in enumeration order. Has maximal rank g for all tau.
struct GradientMatrix {
    int g = 0;
    std::vector<Characteristic> chars;
    CMatrix M;
};

/// (N+1) x #even matrix, N = g(g+1)/2: row 0 holds the theta constants, the
/// remaining rows d theta / d tau_ij in the fixed (i <= j) row order
/// (0,0), (0,1), ..., (g-1,g-1). Has maximal rank N+1 for all tau.
struct EvenJetMatrix {
    int g = 0;
    std::vector<Characteristic> chars;
    CMatrix M;
};

GradientMatrix gradient_matrix(const SiegelPoint& tau, double tol, const EvalOptions& opts = {});

EvenJetMatrix even_jet_matrix(const SiegelPoint& tau, double tol, const EvalOptions& opts = {});

/// D([e1,d1],...,[eg,dg]) = det of the g x g matrix of gradients in the given
/// column order; alternating and multilinear in the columns.
/// Throws BadArity unless exactly g characteristics, NotOdd if any is even.
cdouble D_form(const std::vector<Characteristic>& chars, const SiegelPoint& tau, double tol,
               const EvalOptions& opts = {});

/// D2([e0,d0],...,[eN,dN]) = det of the (N+1) x (N+1) matrix whose column for
/// each characteristic is (theta; d theta/d tau_00; ...; d theta/d tau_{g-1,g-1})
/// in the EvenJetMatrix row order. Takes the full ordered column list, N+1
/// characteristics. Throws BadArity / NotEven.
cdouble D2_form(const std::vector<Characteristic>& chars, const SiegelPoint& tau, double tol,
                const EvalOptions& opts = {});

}  // namespace thetaloci

#endif
