#include "logdiv/milnor.hpp"

#include "logdiv/errors.hpp"

#include <random>
#include <sstream>

namespace logdiv {

namespace {

std::string point_str(const std::vector<Rat>& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ',';
        os << rat_to_string(p[i]);
    }
    os << ')';
    return os.str();
}

std::vector<Poly> jacobian_gens(const Poly& f) {
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        Poly d = differentiate(f, i);
        if (!d.is_zero()) gens.push_back(std::move(d));
    }
    return gens;
}

} // namespace

std::size_t local_milnor(const Poly& f, const std::vector<Rat>& p) {
    if (p.size() != f.nvars()) throw InputError("local_milnor: point arity mismatch");
    if (evaluate(f, p) != 0)
        throw MathError("not-singular", "f" + point_str(p) + " != 0: point is off the divisor");
    for (std::size_t i = 0; i < f.nvars(); ++i)
        if (evaluate(differentiate(f, i), p) != 0)
            throw MathError("not-singular", "gradient of f does not vanish at " + point_str(p));
    const Poly g = translate(f, p);
    auto gens = jacobian_gens(g);
    if (gens.empty())
        throw MathError("zero-polynomial", "f is identically zero along this chart");
    return local_algebra_dim(std::move(gens), g.ctx());
}

Int milnor_sum_on_zero_level(const HomogPoly& F, std::size_t chart) {
    if (!no_singularities_at_infinity(F, chart))
        throw MathError("singularities-at-infinity",
                        "singular points of the divisor meet the hyperplane at infinity of "
                        "chart " + std::to_string(chart));
    const Poly f = dehomogenize(F.poly(), chart);
    if (f.is_constant()) return 0; // divisor misses the chart entirely
    auto gens = jacobian_gens(f);
    QuotientAlgebra A;
    try {
        A = quotient_algebra(groebner(std::move(gens), Ord::Grevlex), f.ctx());
    } catch (const MathError& e) {
        if (e.kind() == "not-zero-dimensional")
            throw MathError("non-isolated", "the affine critical locus in chart " +
                                                std::to_string(chart) + " is not isolated");
        throw;
    }
    return Int(static_cast<unsigned long>(generalized_kernel_dim(mult_matrix(A, f))));
}

std::vector<std::vector<Rat>> random_unimodular(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) M[i][i] = 1;
    // products of shears keep the determinant at +-1; raw mod keeps the
    // sequence identical across platforms
    static constexpr long coeffs[4] = {-2, -1, 1, 2};
    for (std::size_t s = 0; s < 3 * n; ++s) {
        const std::size_t i = rng() % n;
        std::size_t j = rng() % n;
        if (i == j) j = (j + 1) % n;
        const long c = coeffs[rng() % 4];
        for (std::size_t k = 0; k < n; ++k) M[i][k] += Rat(c) * M[j][k];
    }
    return M;
}

GlobalMilnor milnor_sum_auto(const DivisorOnPn& D, std::optional<std::size_t> chart,
                             bool allow_linear_change) {
    const HomogPoly& F = D.F();
    if (chart) {
        if (*chart >= F.poly().nvars())
            throw InputError("chart index out of range");
        return {milnor_sum_on_zero_level(F, *chart), *chart, std::nullopt};
    }
    const std::size_t nv = F.poly().nvars();
    auto try_charts = [&](const HomogPoly& G, GlobalMilnor& out, std::string& why) {
        std::vector<std::size_t> order{nv - 1};
        for (std::size_t k = 0; k + 1 < nv; ++k) order.push_back(k);
        for (std::size_t k : order) {
            try {
                out = {milnor_sum_on_zero_level(G, k), k, std::nullopt};
                return true;
            } catch (const MathError& e) {
                if (e.kind() != "singularities-at-infinity" && e.kind() != "non-isolated") throw;
                why += " chart " + std::to_string(k) + ": " + e.kind() + ";";
            }
        }
        return false;
    };
    GlobalMilnor out;
    std::string why;
    if (try_charts(F, out, why)) return out;
    if (allow_linear_change) {
        for (unsigned seed = 1; seed <= 8; ++seed) {
            const auto U = random_unimodular(nv, seed);
            const HomogPoly G(linear_change(F.poly(), U));
            std::string why2;
            if (try_charts(G, out, why2)) {
                out.transform = U;
                return out;
            }
        }
        throw MathError("chart-failure",
                        "no coordinate chart isolates the singular locus, even after "
                        "unimodular changes of coordinates:" + why);
    }
    throw MathError("chart-failure",
                    "no coordinate chart works:" + why +
                        " a generic linear change of coordinates would help; enable it "
                        "explicitly (it scrambles printed equations)");
}

MilnorReport certify_points(const DivisorOnPn& D, const std::vector<std::vector<Rat>>& points,
                            std::optional<std::size_t> chart, bool allow_linear_change) {
    MilnorReport rep{milnor_sum_auto(D, chart, allow_linear_change), {}, false};
    const Poly& F = D.F().poly();
    const std::size_t nv = F.nvars();
    for (const auto& raw : points) {
        if (raw.size() != nv)
            throw InputError("singular point arity " + std::to_string(raw.size()) +
                             ", expected " + std::to_string(nv));
        std::size_t lead = nv;
        for (std::size_t i = 0; i < nv; ++i)
            if (raw[i] != 0) {
                lead = i;
                break;
            }
        if (lead == nv) throw InputError("the zero tuple is not a projective point");
        std::vector<Rat> p(nv);
        for (std::size_t i = 0; i < nv; ++i) p[i] = raw[i] / raw[lead];
        for (const auto& seen : rep.points)
            if (seen.point == p) throw InputError("duplicate singular point " + point_str(p));
        for (std::size_t i = 0; i < nv; ++i)
            if (evaluate(differentiate(F, i), p) != 0)
                throw MathError("not-singular",
                                point_str(p) + " is not a singular point of the divisor");
        std::size_t k = nv;
        while (k-- > 0)
            if (p[k] != 0) break;
        std::vector<Rat> q;
        for (std::size_t i = 0; i < nv; ++i)
            if (i != k) q.push_back(p[i] / p[k]);
        const std::size_t mu = local_milnor(dehomogenize(F, k), q);
        rep.points.push_back(SingularPointCert{std::move(p), k, mu});
    }
    Int per_point = 0;
    for (const auto& c : rep.points) per_point += static_cast<unsigned long>(c.mu);
    rep.certified_complete = (per_point == rep.global.total);
    return rep;
}

std::size_t icis_milnor(const Poly& f1, const Poly& f2, const std::vector<Rat>& p) {
    require_same_ctx(f1, f2, "icis_milnor");
    if (p.size() != f1.nvars()) throw InputError("icis_milnor: point arity mismatch");
    if (f1.is_zero() || f2.is_zero())
        throw MathError("not-a-regular-sequence", "a defining equation is identically zero");
    if (evaluate(f1, p) != 0 || evaluate(f2, p) != 0)
        throw MathError("not-singular", "point " + point_str(p) + " is not on the curve");
    const Poly g1 = translate(f1, p), g2 = translate(f2, p);
    if (mora_normal_form(g2, {g1}, Ord::NegDegRevLex).is_zero() ||
        mora_normal_form(g1, {g2}, Ord::NegDegRevLex).is_zero())
        throw MathError("not-a-regular-sequence",
                        "the equations divide one another near " + point_str(p));

    // dim O/((a) + I_2(Jac(a,b)))
    auto le_greuel_dim = [](const Poly& a, const Poly& b) {
        std::vector<Poly> gens{a};
        const std::size_t n = a.nvars();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Poly minor = differentiate(a, i) * differentiate(b, j) -
                             differentiate(a, j) * differentiate(b, i);
                if (!minor.is_zero()) gens.push_back(std::move(minor));
            }
        return local_algebra_dim(std::move(gens), a.ctx());
    };
    // mu of the hypersurface germ {a = 0} at 0 (0 when smooth: the Jacobian
    // ideal contains a unit and the staircase is empty)
    auto mu_hyp = [](const Poly& a) {
        auto gens = jacobian_gens(a);
        if (gens.empty()) throw MathError("non-isolated", "degenerate hypersurface germ");
        return local_algebra_dim(std::move(gens), a.ctx());
    };

    // One ordering of the dimension-drop formula; needs {a = 0} to have at
    // worst an isolated singularity at the point.
    auto one_order = [&](const Poly& a, const Poly& b) {
        const std::size_t dim = le_greuel_dim(a, b);
        const std::size_t mu_h = mu_hyp(a);
        if (dim < mu_h) throw MathError("internal", "Le-Greuel dimension below hypersurface mu");
        return dim - mu_h;
    };

    // The curve invariant does not depend on the ordering, but an ordering is
    // only computable when its first hypersurface germ is isolated. Use
    // whichever works, and cross-check when both do.
    std::optional<std::size_t> straight, swapped;
    try {
        straight = one_order(g1, g2);
    } catch (const MathError& e) {
        if (e.kind() != "non-isolated") throw;
    }
    try {
        swapped = one_order(g2, g1);
    } catch (const MathError& e) {
        if (e.kind() != "non-isolated") throw;
    }
    if (!straight && !swapped)
        throw MathError("non-isolated", "neither ordering of the equations yields a finite "
                                        "local dimension near " + point_str(p));
    if (straight && swapped && *straight != *swapped)
        throw MathError("internal", "Le-Greuel orderings disagree: " + std::to_string(*straight) +
                                        " vs " + std::to_string(*swapped));
    return straight ? *straight : *swapped;
}

Rat milnor_orlik_oracle(const std::vector<Rat>& weights, const Rat& d) {
    if (weights.empty()) throw InputError("milnor_orlik_oracle: no weights");
    if (d <= 0) throw InputError("milnor_orlik_oracle: weighted degree must be positive");
    Rat mu = 1;
    for (const Rat& w : weights) {
        if (w <= 0) throw InputError("milnor_orlik_oracle: weights must be positive");
        mu *= d / w - 1;
    }
    return mu;
}

} // namespace logdiv
