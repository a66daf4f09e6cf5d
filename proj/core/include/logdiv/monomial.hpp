#pragma once

#include <cstddef>
#include <vector>

namespace logdiv {

/// Exponent vector over a fixed variable context; exponents are >= 0.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
    static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    std::size_t nvars() const { return e.size(); }

    int degree() const {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }

    bool is_one() const {
        for (int x : e)
            if (x) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial m(e);
        for (std::size_t i = 0; i < e.size(); ++i) m.e[i] += o.e[i];
        return m;
    }

    /// true iff this divides m.
    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    /// this / d; requires d.divides(*this).
    Monomial quotient_by(const Monomial& d) const {
        Monomial m(e);
        for (std::size_t i = 0; i < e.size(); ++i) m.e[i] -= d.e[i];
        return m;
    }

    bool coprime_to(const Monomial& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0 && o.e[i] > 0) return false;
        return true;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial m(a.e);
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (b.e[i] > m.e[i]) m.e[i] = b.e[i];
        return m;
    }

    bool operator==(const Monomial&) const = default;
};

} // namespace logdiv
