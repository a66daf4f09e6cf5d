#include "logdiv/poly.hpp"

#include "logdiv/errors.hpp"

#include <algorithm>
#include <sstream>

namespace logdiv {

Context::Context(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
    for (std::size_t i = 0; i < names_->size(); ++i) {
        if ((*names_)[i].empty()) throw InputError("empty variable name in context");
        for (std::size_t j = i + 1; j < names_->size(); ++j)
            if ((*names_)[i] == (*names_)[j])
                throw InputError("duplicate variable '" + (*names_)[i] + "' in context");
    }
}

std::optional<std::size_t> Context::index_of(std::string_view var) const {
    for (std::size_t i = 0; i < names_->size(); ++i)
        if ((*names_)[i] == var) return i;
    return std::nullopt;
}

void require_same_ctx(const Poly& a, const Poly& b, const char* where) {
    if (!(a.ctx() == b.ctx()))
        throw MathError("context-mismatch", std::string(where) + ": operands live in different variable contexts");
}

Poly Poly::constant(const Context& ctx, const Rat& c) {
    Poly p(ctx);
    p.add_term(Monomial::one(ctx.size()), c);
    return p;
}

Poly Poly::variable(const Context& ctx, std::size_t i) {
    Monomial m = Monomial::one(ctx.size());
    m.e.at(i) = 1;
    return term(ctx, std::move(m), 1);
}

Poly Poly::term(const Context& ctx, Monomial m, const Rat& c) {
    if (m.nvars() != ctx.size())
        throw MathError("context-mismatch", "monomial arity does not match context");
    for (int x : m.e)
        if (x < 0) throw InputError("negative exponent in monomial");
    Poly p(ctx);
    p.add_term(m, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Rat Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::constant_term() const {
    return coeff(Monomial::one(nvars()));
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly out(ctx_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_ctx(*this, o, "+");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_ctx(*this, o, "-");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_ctx(a, b, "*");
    Poly out(a.ctx());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly Poly::pow(unsigned k) const {
    Poly out = Poly::constant(ctx_, 1);
    for (unsigned i = 0; i < k; ++i) out = out * *this;
    return out;
}

Poly differentiate(const Poly& p, std::size_t var) {
    if (var >= p.nvars()) throw InputError("differentiate: variable index out of range");
    Poly out(p.ctx());
    for (const auto& [m, c] : p.terms()) {
        if (m.e[var] == 0) continue;
        Monomial d = m;
        d.e[var] -= 1;
        out.add_term(d, c * m.e[var]);
    }
    return out;
}

Rat evaluate(const Poly& p, const std::vector<Rat>& point) {
    if (point.size() != p.nvars())
        throw InputError("evaluate: point arity does not match context");
    Rat acc = 0;
    for (const auto& [m, c] : p.terms()) {
        Rat t = c;
        for (std::size_t i = 0; i < point.size(); ++i)
            if (m.e[i]) t *= rat_pow(point[i], static_cast<unsigned>(m.e[i]));
        acc += t;
    }
    return acc;
}

namespace {

// In-place single-variable shift x_i -> x_i + a via binomial expansion.
Poly shift_var(const Poly& p, std::size_t i, const Rat& a) {
    if (a == 0) return p;
    Poly out(p.ctx());
    for (const auto& [m, c] : p.terms()) {
        const int e = m.e[i];
        if (e == 0) {
            out.add_term(m, c);
            continue;
        }
        for (int j = 0; j <= e; ++j) {
            Monomial t = m;
            t.e[i] = j;
            out.add_term(t, c * Rat(binomial(static_cast<unsigned>(e), static_cast<unsigned>(j))) *
                                rat_pow(a, static_cast<unsigned>(e - j)));
        }
    }
    return out;
}

} // namespace

Poly translate(const Poly& p, const std::vector<Rat>& point) {
    if (point.size() != p.nvars())
        throw InputError("translate: point arity does not match context");
    Poly out = p;
    for (std::size_t i = 0; i < point.size(); ++i) out = shift_var(out, i, point[i]);
    return out;
}

Poly substitute(const Poly& p, const Context& target, const std::vector<Poly>& images) {
    if (images.size() != p.nvars())
        throw InputError("substitute: need one image per variable");
    for (const auto& im : images)
        if (!(im.ctx() == target))
            throw MathError("context-mismatch", "substitute: image not in target context");
    // lazily extended power tables per variable
    std::vector<std::vector<Poly>> powers(images.size());
    auto power = [&](std::size_t i, int e) -> const Poly& {
        auto& tab = powers[i];
        if (tab.empty()) tab.push_back(Poly::constant(target, 1));
        while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * images[i]);
        return tab[static_cast<std::size_t>(e)];
    };
    Poly out(target);
    for (const auto& [m, c] : p.terms()) {
        Poly t = Poly::constant(target, c);
        for (std::size_t i = 0; i < images.size(); ++i)
            if (m.e[i]) t = t * power(i, m.e[i]);
        out += t;
    }
    return out;
}

Poly linear_change(const Poly& p, const std::vector<std::vector<Rat>>& M) {
    const std::size_t n = p.nvars();
    if (M.size() != n) throw InputError("linear_change: matrix must be square of context size");
    std::vector<Poly> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (M[i].size() != n)
            throw InputError("linear_change: matrix must be square of context size");
        Poly row(p.ctx());
        for (std::size_t j = 0; j < n; ++j)
            if (M[i][j] != 0) row += Poly::variable(p.ctx(), j) * M[i][j];
        images.push_back(std::move(row));
    }
    return substitute(p, p.ctx(), images);
}

Poly dehomogenize(const Poly& p, std::size_t chart) {
    if (chart >= p.nvars()) throw InputError("dehomogenize: chart index out of range");
    std::vector<std::string> names = p.ctx().names();
    names.erase(names.begin() + static_cast<std::ptrdiff_t>(chart));
    Context sub(std::move(names));
    Poly out(sub);
    for (const auto& [m, c] : p.terms()) {
        Monomial t = m;
        t.e.erase(t.e.begin() + static_cast<std::ptrdiff_t>(chart));
        out.add_term(t, c);
    }
    return out;
}

Poly homogenize(const Poly& p, std::size_t pos, const std::string& var, int degree) {
    if (pos > p.nvars()) throw InputError("homogenize: insert position out of range");
    if (p.total_degree() > degree)
        throw InputError("homogenize: target degree below polynomial degree");
    std::vector<std::string> names = p.ctx().names();
    names.insert(names.begin() + static_cast<std::ptrdiff_t>(pos), var);
    Context up(std::move(names));
    Poly out(up);
    for (const auto& [m, c] : p.terms()) {
        Monomial t = m;
        t.e.insert(t.e.begin() + static_cast<std::ptrdiff_t>(pos), degree - m.degree());
        out.add_term(t, c);
    }
    return out;
}

namespace {

void print_monomial(std::ostream& os, const Monomial& m, const Context& ctx) {
    bool first = true;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m.e[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << ctx.name(i);
        if (m.e[i] > 1) os << '^' << m.e[i];
    }
}

} // namespace

std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending grevlex: iterate the canonical map back to front
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        const bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (m.is_one()) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << '*';
            print_monomial(os, m, p.ctx());
        }
    }
    return os.str();
}

HomogPoly::HomogPoly(Poly p) : p_(std::move(p)), deg_(p_.total_degree()) {
    if (p_.is_zero())
        throw MathError("zero-polynomial", "a divisor equation cannot be identically zero");
    for (const auto& [m, c] : p_.terms())
        if (m.degree() != deg_)
            throw MathError("not-homogeneous", "mixed total degrees " + std::to_string(m.degree()) +
                                                   " and " + std::to_string(deg_));
}

bool euler_check(const HomogPoly& f) {
    const Poly& F = f.poly();
    Poly acc(F.ctx());
    for (std::size_t i = 0; i < F.nvars(); ++i)
        acc += Poly::variable(F.ctx(), i) * differentiate(F, i);
    return acc == F * Rat(f.degree());
}

} // namespace logdiv
