#pragma once

#include "logdiv/poly.hpp"

namespace logdiv {

/// Reduced hypersurface D = {F = 0} of degree >= 1 in P^n. Construction runs a
/// weak squarefreeness check; non-reduced equations that slip past it still
/// die downstream on the non-isolated-critical-locus error.
class DivisorOnPn {
public:
    DivisorOnPn(int n, HomogPoly F);

    int n() const { return n_; }
    int degree() const { return F_.degree(); }
    const HomogPoly& F() const { return F_; }
    const Context& ctx() const { return F_.poly().ctx(); }

    bool operator==(const DivisorOnPn& o) const { return n_ == o.n_ && F_ == o.F_; }

private:
    int n_;
    HomogPoly F_;
};

/// Weak squarefree certificate: restricts F to deterministic pseudo-random
/// projective lines; one full-degree squarefree univariate restriction proves
/// F has no repeated factor (a repeated factor survives every full-degree
/// restriction). Returns false when no certificate is found.
bool squarefree_certificate(const HomogPoly& F);

} // namespace logdiv
