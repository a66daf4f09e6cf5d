#include "logdiv/groebner.hpp"

#include "logdiv/errors.hpp"

#include <algorithm>
#include <list>
#include <set>

namespace logdiv {

const Monomial& leading_monomial(const Poly& p, Ord o) {
    if (p.is_zero()) throw MathError("zero-polynomial", "leading monomial of 0");
    // terms are stored ascending grevlex, so the global default is the last key
    if (o == Ord::Grevlex) return p.terms().rbegin()->first;
    const Monomial* best = nullptr;
    for (const auto& [m, c] : p.terms())
        if (!best || mon_less(*best, m, o)) best = &m;
    return *best;
}

Rat leading_coeff(const Poly& p, Ord o) {
    return p.coeff(leading_monomial(p, o));
}

Poly mul_term(const Poly& p, const Monomial& m, const Rat& c) {
    Poly out(p.ctx());
    for (const auto& [mm, cc] : p.terms()) out.add_term(mm * m, cc * c);
    return out;
}

namespace {

Poly make_monic(Poly p, Ord o) {
    if (p.is_zero()) return p;
    const Rat lc = leading_coeff(p, o);
    p *= Rat(1) / lc;
    return p;
}

int ecart(const Poly& p, Ord o) {
    return p.total_degree() - leading_monomial(p, o).degree();
}

} // namespace

Poly normal_form(const Poly& p, const std::vector<Poly>& G, Ord o) {
    Poly rem(p.ctx());
    Poly work = p;
    while (!work.is_zero()) {
        const Monomial lm = leading_monomial(work, o);
        const Rat lc = work.coeff(lm);
        bool divided = false;
        for (const Poly& g : G) {
            if (g.is_zero()) continue;
            const Monomial& glm = leading_monomial(g, o);
            if (!glm.divides(lm)) continue;
            work -= mul_term(g, lm.quotient_by(glm), lc / g.coeff(glm));
            divided = true;
            break;
        }
        if (!divided) {
            rem.add_term(lm, lc);
            work.add_term(lm, -lc);
        }
    }
    return rem;
}

Poly mora_normal_form(const Poly& p, const std::vector<Poly>& G, Ord o) {
    // T grows by intermediate partial remainders; dividing by an earlier
    // remainder is what makes reduction terminate for local orders, at the
    // price of an invisible unit factor on p (fine for membership and for
    // leading-ideal computations).
    std::vector<Poly> T = G;
    Poly h = p;
    while (!h.is_zero()) {
        const Monomial lm = leading_monomial(h, o);
        std::size_t best = T.size();
        int best_ecart = 0;
        for (std::size_t k = 0; k < T.size(); ++k) {
            if (T[k].is_zero()) continue;
            if (!leading_monomial(T[k], o).divides(lm)) continue;
            const int e = ecart(T[k], o);
            if (best == T.size() || e < best_ecart) {
                best = k;
                best_ecart = e;
            }
        }
        if (best == T.size()) return h;
        if (best_ecart > ecart(h, o)) T.push_back(h);
        const Poly& g = T[best];
        const Monomial& glm = leading_monomial(g, o);
        h -= mul_term(g, lm.quotient_by(glm), h.coeff(lm) / g.coeff(glm));
    }
    return h;
}

namespace {

Poly s_poly(const Poly& f, const Poly& g, Ord o) {
    const Monomial &lf = leading_monomial(f, o), &lg = leading_monomial(g, o);
    const Monomial l = Monomial::lcm(lf, lg);
    return mul_term(f, l.quotient_by(lf), Rat(1) / f.coeff(lf)) -
           mul_term(g, l.quotient_by(lg), Rat(1) / g.coeff(lg));
}

struct PairKey {
    std::size_t i, j;
    bool operator<(const PairKey& o) const { return i != o.i ? i < o.i : j < o.j; }
};

/// Shared pair-driven completion loop; `nf` is the reduction strategy.
template <typename NF>
std::vector<Poly> complete(std::vector<Poly> basis, Ord o, NF&& nf) {
    std::list<PairKey> pending;
    std::set<PairKey> treated;
    auto push_pairs = [&](std::size_t upto) {
        for (std::size_t i = 0; i < upto; ++i) pending.push_back({i, upto});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

    while (!pending.empty()) {
        // normal selection: smallest lcm in the order
        auto sel = pending.begin();
        Monomial sel_lcm = Monomial::lcm(leading_monomial(basis[sel->i], o),
                                         leading_monomial(basis[sel->j], o));
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Monomial l = Monomial::lcm(leading_monomial(basis[it->i], o),
                                       leading_monomial(basis[it->j], o));
            if (mon_less(l, sel_lcm, o)) {
                sel = it;
                sel_lcm = std::move(l);
            }
        }
        const PairKey pk = *sel;
        pending.erase(sel);
        treated.insert(pk);

        const Monomial &li = leading_monomial(basis[pk.i], o),
                       &lj = leading_monomial(basis[pk.j], o);
        if (li.coprime_to(lj)) continue; // product criterion
        bool chained = false;            // chain criterion
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (!leading_monomial(basis[k], o).divides(sel_lcm)) continue;
            const PairKey a{std::min(k, pk.i), std::max(k, pk.i)};
            const PairKey b{std::min(k, pk.j), std::max(k, pk.j)};
            chained = treated.count(a) && treated.count(b);
        }
        if (chained) continue;

        Poly r = nf(s_poly(basis[pk.i], basis[pk.j], o), basis);
        if (!r.is_zero()) {
            basis.push_back(make_monic(std::move(r), o));
            push_pairs(basis.size() - 1);
        }
    }
    return basis;
}

/// Drop generators whose leading monomial is divisible by another's.
std::vector<Poly> minimalize(std::vector<Poly> basis, Ord o) {
    std::vector<Poly> out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial& li = leading_monomial(basis[i], o);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& lj = leading_monomial(basis[j], o);
            if (lj.divides(li) && !(li == lj && j > i)) redundant = true;
        }
        if (!redundant) out.push_back(basis[i]);
    }
    return out;
}

BasisResult finish(std::vector<Poly> basis, Ord o, bool inter_reduce) {
    basis = minimalize(std::move(basis), o);
    if (inter_reduce) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::vector<Poly> others;
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (j != i) others.push_back(basis[j]);
            basis[i] = normal_form(basis[i], others, o);
        }
    }
    for (Poly& g : basis) g = make_monic(std::move(g), o);
    // canonical generator order: ascending leading monomial
    std::sort(basis.begin(), basis.end(), [&](const Poly& a, const Poly& b) {
        return mon_less(leading_monomial(a, o), leading_monomial(b, o), o);
    });
    BasisResult res;
    res.ord = o;
    res.reduced = inter_reduce;
    res.gens = std::move(basis);
    for (const Poly& g : res.gens) res.lead.push_back(leading_monomial(g, o));
    return res;
}

std::vector<Poly> prepare(std::vector<Poly> gens) {
    std::vector<Poly> out;
    for (Poly& g : gens)
        if (!g.is_zero()) out.push_back(std::move(g));
    for (std::size_t i = 1; i < out.size(); ++i)
        require_same_ctx(out[0], out[i], "basis");
    return out;
}

} // namespace

BasisResult groebner(std::vector<Poly> gens, Ord o) {
    if (!is_global(o))
        throw MathError("local-order", "Buchberger needs a global order; use mora_standard_basis");
    auto basis = prepare(std::move(gens));
    if (basis.empty()) return BasisResult{{}, {}, o, true};
    for (Poly& g : basis) g = make_monic(std::move(g), o);
    basis = complete(std::move(basis), o,
                     [o](const Poly& p, const std::vector<Poly>& G) { return normal_form(p, G, o); });
    return finish(std::move(basis), o, /*inter_reduce=*/true);
}

BasisResult mora_standard_basis(std::vector<Poly> gens, Ord o) {
    if (is_global(o))
        throw MathError("global-order", "standard bases are for local orders; use groebner");
    auto basis = prepare(std::move(gens));
    if (basis.empty()) return BasisResult{{}, {}, o, false};
    for (Poly& g : basis) g = make_monic(std::move(g), o);
    basis = complete(std::move(basis), o, [o](const Poly& p, const std::vector<Poly>& G) {
        return mora_normal_form(p, G, o);
    });
    return finish(std::move(basis), o, /*inter_reduce=*/false);
}

BasisResult compute_basis(std::vector<Poly> gens, Ord o) {
    return is_global(o) ? groebner(std::move(gens), o) : mora_standard_basis(std::move(gens), o);
}

Poly reduce(const Poly& p, const BasisResult& B) {
    return is_global(B.ord) ? normal_form(p, B.gens, B.ord) : mora_normal_form(p, B.gens, B.ord);
}

bool ideal_membership(const Poly& p, const std::vector<Poly>& gens, Ord o) {
    if (p.is_zero()) return true;
    return reduce(p, compute_basis(gens, o)).is_zero();
}

bool no_singularities_at_infinity(const HomogPoly& F, std::size_t chart) {
    const Poly& f = F.poly();
    if (chart >= f.nvars()) throw InputError("chart index out of range");
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        Poly d = differentiate(f, i);
        if (!d.is_zero()) gens.push_back(std::move(d));
    }
    gens.push_back(Poly::variable(f.ctx(), chart));
    const BasisResult B = groebner(std::move(gens), Ord::Grevlex);
    // projectively empty <=> a pure power of every variable leads the ideal
    for (std::size_t v = 0; v < f.nvars(); ++v) {
        bool have = false;
        for (const Monomial& m : B.lead) {
            if (m.is_one()) return true; // unit ideal: no singular points at all
            bool pure = m.e[v] > 0;
            for (std::size_t w = 0; w < m.nvars() && pure; ++w)
                if (w != v && m.e[w] > 0) pure = false;
            if (pure) {
                have = true;
                break;
            }
        }
        if (!have) return false;
    }
    return true;
}

} // namespace logdiv
