#pragma once

#include "logdiv/order.hpp"
#include "logdiv/poly.hpp"

#include <vector>

namespace logdiv {

/// Leading monomial of a nonzero p under o.
const Monomial& leading_monomial(const Poly& p, Ord o);
Rat leading_coeff(const Poly& p, Ord o);

/// p * c * x^m.
Poly mul_term(const Poly& p, const Monomial& m, const Rat& c);

/// Groebner basis (global order) or Mora standard basis (local order).
struct BasisResult {
    std::vector<Poly> gens;       // monic, leading-monomial minimal
    std::vector<Monomial> lead;   // leading monomials, aligned with gens
    Ord ord;
    bool reduced;                 // tails fully inter-reduced (global orders)
};

/// Full multivariate division remainder; requires a global order (may fail to
/// terminate for local ones).
Poly normal_form(const Poly& p, const std::vector<Poly>& G, Ord o);

/// Mora weak normal form: h with u*p = sum q_i g_i + h for some local unit u;
/// h == 0 iff p lies in the ideal generated by G in the localization at 0.
/// Works for any order (for global orders u = 1 and only the head reduces).
Poly mora_normal_form(const Poly& p, const std::vector<Poly>& G, Ord o);

/// Buchberger with normal pair selection and both classical pair criteria;
/// result is the unique reduced basis. Global orders only.
BasisResult groebner(std::vector<Poly> gens, Ord o);

/// Tangent-cone (Mora) algorithm for local orders; result is a minimal monic
/// standard basis (tails are left unreduced, reduced = false).
BasisResult mora_standard_basis(std::vector<Poly> gens, Ord o);

/// Dispatch on the order kind.
BasisResult compute_basis(std::vector<Poly> gens, Ord o);

/// Normal form against a computed basis (Mora NF when the order is local).
Poly reduce(const Poly& p, const BasisResult& B);

/// Membership of p in <gens> — in Q[x] for global orders, in the localization
/// at the origin for local ones.
bool ideal_membership(const Poly& p, const std::vector<Poly>& gens, Ord o);

/// True iff the singular locus of {F = 0} in P^n avoids the hyperplane
/// {x_chart = 0}: the ideal of all partials plus x_chart must cut out
/// (projectively) nothing, i.e. its leading ideal contains a pure power of
/// every variable.
bool no_singularities_at_infinity(const HomogPoly& F, std::size_t chart);

} // namespace logdiv
