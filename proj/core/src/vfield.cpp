#include "logdiv/vfield.hpp"

#include "logdiv/chow.hpp"
#include "logdiv/errors.hpp"
#include "logdiv/quotient.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace logdiv {

namespace {

std::size_t first_nonzero(const std::vector<Rat>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return i;
    return v.size();
}

std::size_t last_nonzero(const std::vector<Rat>& v) {
    for (std::size_t i = v.size(); i-- > 0;)
        if (v[i] != 0) return i;
    return v.size();
}

std::vector<Rat> apply(const RatMat& A, const std::vector<Rat>& x) {
    std::vector<Rat> y(A.rows(), Rat(0));
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) y[i] += A.at(i, j) * x[j];
    return y;
}

/// Eigenvalue of p under A when p is an eigenvector; "not-a-zero" otherwise.
Rat eigenvalue_at(const RatMat& A, const ProjPoint& p) {
    const std::vector<Rat> w = apply(A, p.x);
    const std::size_t k = first_nonzero(p.x);
    const Rat lambda = w[k] / p.x[k];
    for (std::size_t i = 0; i < p.x.size(); ++i)
        if (w[i] != lambda * p.x[i])
            throw MathError("not-a-zero",
                            proj_to_string(p) + " is not an eigen-direction of the field");
    return lambda;
}

} // namespace

ProjPoint normalize_proj(std::vector<Rat> v) {
    const std::size_t k = first_nonzero(v);
    if (k == v.size()) throw InputError("the zero vector is not a projective point");
    const Rat s = v[k];
    for (Rat& c : v) c /= s;
    return ProjPoint{std::move(v)};
}

std::string proj_to_string(const ProjPoint& p) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < p.x.size(); ++i) {
        if (i) os << ':';
        os << rat_to_string(p.x[i]);
    }
    os << ']';
    return os.str();
}

VectorFieldPn::VectorFieldPn(Context ctx, RatMat A) : ctx_(std::move(ctx)), A_(std::move(A)) {
    const std::size_t m = ctx_.size();
    if (m < 2) throw InputError("a projective field needs at least two coordinates");
    if (A_.rows() != m || A_.cols() != m)
        throw MathError("context-mismatch", "the field matrix must be " + std::to_string(m) +
                                                "x" + std::to_string(m) +
                                                " to act on the given coordinates");
    bool scalar = true;
    for (std::size_t i = 0; i < m && scalar; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (A_.at(i, j) != (i == j ? A_.at(0, 0) : Rat(0))) {
                scalar = false;
                break;
            }
    if (scalar)
        throw MathError("degenerate-field",
                        "a scalar matrix induces the identically-zero field on P^n");
    Rat tr(0);
    for (std::size_t i = 0; i < m; ++i) tr += A_.at(i, i);
    A0_ = A_;
    const Rat shift = tr / Rat(static_cast<long>(m));
    for (std::size_t i = 0; i < m; ++i) A0_.at(i, i) -= shift;
}

FieldZeros zeros_of_field(const VectorFieldPn& v) {
    const std::size_t m = v.ctx().size();
    FieldZeros Z{{}, true, true};
    int found = 0;
    for (const auto& [lambda, mult] : rational_roots(char_poly(v.matrix()))) {
        found += mult;
        RatMat S = v.matrix();
        for (std::size_t i = 0; i < m; ++i) S.at(i, i) -= lambda;
        const auto kernel = kernel_basis(std::move(S));
        if (kernel.size() >= 2) {
            // a whole projective subspace of zeros: flag it, skip enumeration
            Z.isolated = false;
            Z.complete = false;
            continue;
        }
        Z.points.push_back(normalize_proj(kernel.front()));
    }
    if (found != static_cast<int>(m)) Z.complete = false;
    return Z;
}

std::vector<Poly> chart_components(const VectorFieldPn& v, std::size_t k) {
    const std::size_t m = v.ctx().size();
    if (k >= m) throw InputError("chart index out of range");
    std::vector<std::string> names;
    for (std::size_t j = 0; j < m; ++j)
        if (j != k) names.push_back(v.ctx().name(j));
    const Context chart(names);

    const auto coord = [&](std::size_t j) {
        if (j == k) return Poly::constant(chart, 1);
        return Poly::variable(chart, j < k ? j : j - 1);
    };
    std::vector<Poly> rows;
    for (std::size_t i = 0; i < m; ++i) {
        Poly s = Poly::constant(chart, 0);
        for (std::size_t j = 0; j < m; ++j)
            if (v.matrix().at(i, j) != 0) s = s + v.matrix().at(i, j) * coord(j);
        rows.push_back(std::move(s));
    }
    std::vector<Poly> comps;
    for (std::size_t i = 0; i < m; ++i)
        if (i != k) comps.push_back(rows[i] - coord(i) * rows[k]);
    return comps;
}

std::size_t local_index(const std::vector<Poly>& components, const std::vector<Rat>& p) {
    if (components.empty()) throw InputError("a field needs at least one component");
    const Context& ctx = components.front().ctx();
    if (p.size() != ctx.size()) throw InputError("local_index: point arity mismatch");
    std::vector<Poly> gens;
    for (const Poly& c : components) {
        require_same_ctx(c, components.front(), "local_index");
        if (evaluate(c, p) != 0)
            throw MathError("not-a-zero", "a field component does not vanish at the point");
        Poly t = translate(c, p);
        if (!t.is_zero()) gens.push_back(std::move(t));
    }
    if (gens.empty())
        throw MathError("non-isolated", "the field vanishes identically near the point");
    return local_algebra_dim(std::move(gens), ctx);
}

std::size_t ph_index_at(const VectorFieldPn& v, const ProjPoint& p) {
    if (p.x.size() != v.ctx().size())
        throw InputError("ph_index_at: point arity mismatch");
    eigenvalue_at(v.matrix(), p);
    const std::size_t k = last_nonzero(p.x);
    std::vector<Rat> q;
    for (std::size_t j = 0; j < p.x.size(); ++j)
        if (j != k) q.push_back(p.x[j] / p.x[k]);
    return local_index(chart_components(v, k), q);
}

Poly field_applied(const VectorFieldPn& v, const Poly& F) {
    if (!(F.ctx() == v.ctx()))
        throw MathError("context-mismatch", "polynomial and field live in different contexts");
    const std::size_t m = v.ctx().size();
    Poly out = Poly::constant(F.ctx(), 0);
    for (std::size_t i = 0; i < m; ++i) {
        const Poly dF = differentiate(F, i);
        if (dF.is_zero()) continue;
        Poly row = Poly::constant(F.ctx(), 0);
        for (std::size_t j = 0; j < m; ++j)
            if (v.matrix().at(i, j) != 0)
                row = row + v.matrix().at(i, j) * Poly::variable(F.ctx(), j);
        out = out + row * dF;
    }
    return out;
}

bool is_logarithmic(const VectorFieldPn& v, const DivisorOnPn& D) {
    const Poly vF = field_applied(v, D.F().poly());
    return ideal_membership(vF, {D.F().poly()}, Ord::Grevlex);
}

Int gsv_total(const VectorFieldPn& v, const DivisorOnPn& D) {
    if (!is_logarithmic(v, D))
        throw MathError("not-logarithmic", "the field is not tangent to the divisor");
    const int n = D.n();
    return rat_to_int(integrate_on_divisor(chern_difference_class(n, {D.degree()}), D.degree()));
}

Int gsv_total(const VectorFieldPn& v, const DivisorOnPn& D1, const DivisorOnPn& D2) {
    if (!is_logarithmic(v, D1) || !is_logarithmic(v, D2))
        throw MathError("not-logarithmic",
                        "the field is not tangent to both pieces of the decomposition");
    const int n = D1.n();
    return rat_to_int(integrate_on_curve(chern_difference_class(n, {D1.degree(), D2.degree()}),
                                         D1.degree(), D2.degree()));
}

Int gsv_residual_at_singular(const VectorFieldPn& v, const DivisorOnPn& D,
                             const std::vector<ProjPoint>& smooth_zeros) {
    Int residual = gsv_total(v, D);
    const Poly& F = D.F().poly();
    for (const ProjPoint& p : smooth_zeros) {
        if (p.x.size() != v.ctx().size())
            throw InputError("gsv_residual_at_singular: point arity mismatch");
        eigenvalue_at(v.matrix(), p); // "not-a-zero" unless p is a zero of the field
        if (evaluate(F, p.x) != 0)
            throw MathError("not-on-divisor", proj_to_string(p) + " is not on the divisor");
        bool smooth = false;
        for (std::size_t i = 0; i < v.ctx().size() && !smooth; ++i)
            smooth = evaluate(differentiate(F, i), p.x) != 0;
        if (!smooth)
            throw MathError("point-on-singular-locus",
                            proj_to_string(p) + " lies on the singular locus of the divisor");
        const std::size_t ph = ph_index_at(v, p);
        if (ph != 1)
            throw MathError("degenerate-zero",
                            proj_to_string(p) + " is a degenerate zero (index " +
                                std::to_string(ph) + "); only index-1 zeros equate the local "
                                "GSV and Poincare-Hopf indices here");
        residual -= static_cast<long>(ph);
    }
    return residual;
}

} // namespace logdiv
