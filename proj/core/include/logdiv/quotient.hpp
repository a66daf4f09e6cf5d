#pragma once

#include "logdiv/groebner.hpp"
#include "logdiv/matrix.hpp"

namespace logdiv {

/// Finite-dimensional quotient Q[x]/I (or its local analogue) presented by the
/// staircase: the monomials outside the leading ideal, ascending in the
/// basis's own order.
struct QuotientAlgebra {
    BasisResult basis;
    Context ctx;
    std::vector<Monomial> monomials;

    std::size_t dim() const { return monomials.size(); }
};

/// Throws MathError("not-zero-dimensional") unless every variable carries a
/// pure power in the leading ideal (the finiteness criterion). The unit ideal
/// yields the legitimate 0-dimensional algebra with an empty staircase.
QuotientAlgebra quotient_algebra(BasisResult basis, const Context& ctx);

/// Matrix of multiplication [q] -> [p*q] in the staircase basis (columns are
/// images of staircase monomials). Global orders only: there the normal form
/// is the honest linear projection onto the staircase span, while the Mora
/// normal form of a local order is only defined up to a unit.
RatMat mult_matrix(const QuotientAlgebra& A, const Poly& p);

/// Dimension of the local ring at the origin modulo <gens>, via a standard
/// basis for the local order. Throws MathError("non-isolated") when infinite.
std::size_t local_algebra_dim(std::vector<Poly> gens, const Context& ctx);

} // namespace logdiv
