#pragma once

#include "logdiv/monomial.hpp"
#include "logdiv/order.hpp"
#include "logdiv/rat.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace logdiv {

/// Ordered list of variable names. Polynomials in different contexts never mix:
/// every binary operation checks contexts and throws on mismatch.
class Context {
public:
    Context() : names_(std::make_shared<const std::vector<std::string>>()) {}
    explicit Context(std::vector<std::string> names);

    std::size_t size() const { return names_->size(); }
    const std::string& name(std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const { return *names_; }
    std::optional<std::size_t> index_of(std::string_view var) const;

    bool operator==(const Context& o) const {
        return names_ == o.names_ || *names_ == *o.names_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

/// Sparse multivariate polynomial over Q. Terms live in a canonical
/// (ascending grevlex) map, so equality, hashing-free comparisons and printing
/// are deterministic regardless of construction order.
class Poly {
public:
    using TermMap = std::map<Monomial, Rat, GrevlexLess>;

    Poly() = default; // zero polynomial in the empty context
    explicit Poly(Context ctx) : ctx_(std::move(ctx)) {}

    static Poly constant(const Context& ctx, const Rat& c);
    static Poly variable(const Context& ctx, std::size_t i);
    static Poly term(const Context& ctx, Monomial m, const Rat& c);

    const Context& ctx() const { return ctx_; }
    std::size_t nvars() const { return ctx_.size(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    /// -1 for the zero polynomial.
    int total_degree() const;

    Rat coeff(const Monomial& m) const;
    /// Coefficient of the constant monomial.
    Rat constant_term() const;

    void add_term(const Monomial& m, const Rat& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rat& c);
    friend Poly operator*(Poly p, const Rat& c) { return p *= c; }
    friend Poly operator*(const Rat& c, Poly p) { return p *= c; }

    Poly pow(unsigned k) const;

    bool operator==(const Poly& o) const { return ctx_ == o.ctx_ && terms_ == o.terms_; }

private:
    Context ctx_;
    TermMap terms_;
};

void require_same_ctx(const Poly& a, const Poly& b, const char* where);

Poly differentiate(const Poly& p, std::size_t var);

Rat evaluate(const Poly& p, const std::vector<Rat>& point);

/// p(x + point): origin translation, used to move a singular point to 0.
Poly translate(const Poly& p, const std::vector<Rat>& point);

/// Substitutes images[i] (all in the target context) for variable i.
Poly substitute(const Poly& p, const Context& target, const std::vector<Poly>& images);

/// x_i -> sum_j M[i][j] x_j within the same context; M square, invertibility
/// is the caller's business.
Poly linear_change(const Poly& p, const std::vector<std::vector<Rat>>& M);

/// Sets variable `chart` to 1 and removes it from the context.
Poly dehomogenize(const Poly& p, std::size_t chart);

/// Inserts a fresh variable at `pos` and pads every term up to `degree`.
Poly homogenize(const Poly& p, std::size_t pos, const std::string& var, int degree);

/// Canonical text form: terms in descending grevlex, "3/2*x^2*y - z + 1" style.
/// parse_poly(poly_to_string(p)) == p.
std::string poly_to_string(const Poly& p);

/// Homogeneous polynomial of a definite degree; rejects 0 and mixed degrees.
class HomogPoly {
public:
    explicit HomogPoly(Poly p);
    const Poly& poly() const { return p_; }
    int degree() const { return deg_; }
    bool operator==(const HomogPoly& o) const { return p_ == o.p_; }

private:
    Poly p_;
    int deg_;
};

/// Arithmetic self-test of the Euler relation sum x_i dF/dx_i == deg(F) * F.
bool euler_check(const HomogPoly& f);

} // namespace logdiv
