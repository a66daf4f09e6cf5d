#include "logdiv/quotient.hpp"

#include "logdiv/errors.hpp"

#include <algorithm>
#include <map>

namespace logdiv {

QuotientAlgebra quotient_algebra(BasisResult basis, const Context& ctx) {
    const std::size_t n = ctx.size();
    for (const Monomial& m : basis.lead)
        if (m.nvars() != n)
            throw MathError("context-mismatch", "basis does not live in the given context");

    QuotientAlgebra A{std::move(basis), ctx, {}};

    bool unit = false;
    for (const Monomial& m : A.basis.lead)
        if (m.is_one()) unit = true;
    if (unit) return A; // the whole ring collapses: dim 0

    // finiteness: a pure power of every variable must lead the ideal
    std::vector<int> bound(n, -1);
    for (const Monomial& m : A.basis.lead) {
        std::size_t nz = 0, var = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (m.e[i] > 0) {
                ++nz;
                var = i;
            }
        if (nz == 1 && (bound[var] < 0 || m.e[var] < bound[var])) bound[var] = m.e[var];
    }
    for (std::size_t i = 0; i < n; ++i)
        if (bound[i] < 0)
            throw MathError("not-zero-dimensional",
                            "no pure power of " + ctx.name(i) + " leads the ideal");

    // walk the bounding box, keep monomials no leading monomial divides
    Monomial cur = Monomial::one(n);
    for (;;) {
        bool outside = true;
        for (const Monomial& m : A.basis.lead)
            if (m.divides(cur)) {
                outside = false;
                break;
            }
        if (outside) A.monomials.push_back(cur);
        std::size_t i = 0;
        while (i < n) {
            if (++cur.e[i] < bound[i]) break;
            cur.e[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    std::sort(A.monomials.begin(), A.monomials.end(),
              [&](const Monomial& a, const Monomial& b) { return mon_less(a, b, A.basis.ord); });
    return A;
}

std::size_t local_algebra_dim(std::vector<Poly> gens, const Context& ctx) {
    BasisResult B = mora_standard_basis(std::move(gens), Ord::NegDegRevLex);
    try {
        return quotient_algebra(std::move(B), ctx).dim();
    } catch (const MathError& e) {
        if (e.kind() == "not-zero-dimensional")
            throw MathError("non-isolated", "the local quotient is infinite-dimensional");
        throw;
    }
}

RatMat mult_matrix(const QuotientAlgebra& A, const Poly& p) {
    if (!is_global(A.basis.ord))
        throw MathError("local-order",
                        "multiplication matrices need a global order (local normal forms "
                        "carry unit factors)");
    if (!(p.ctx() == A.ctx))
        throw MathError("context-mismatch", "multiplier lives in a different context");
    std::map<Monomial, std::size_t, GrevlexLess> index;
    for (std::size_t i = 0; i < A.monomials.size(); ++i) index.emplace(A.monomials[i], i);
    RatMat M(A.dim(), A.dim());
    for (std::size_t j = 0; j < A.monomials.size(); ++j) {
        const Poly img = normal_form(mul_term(p, A.monomials[j], 1), A.basis.gens, A.basis.ord);
        for (const auto& [m, c] : img.terms()) {
            const auto it = index.find(m);
            if (it == index.end())
                throw MathError("internal", "normal form escaped the staircase");
            M.at(it->second, j) = c;
        }
    }
    return M;
}

} // namespace logdiv
