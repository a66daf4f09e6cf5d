#include "logdiv/divisor.hpp"

#include "logdiv/errors.hpp"

#include <random>

namespace logdiv {

namespace {

using UniPoly = std::vector<Rat>; // ascending coefficients

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    UniPoly out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

void uni_trim(UniPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int uni_deg(const UniPoly& a) {
    return static_cast<int>(a.size()) - 1;
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    while (uni_deg(a) >= uni_deg(b)) {
        const Rat f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        uni_trim(a);
        if (a.empty()) break;
    }
    return a;
}

int uni_gcd_degree(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        UniPoly r = uni_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return uni_deg(a);
}

UniPoly uni_derivative(const UniPoly& a) {
    UniPoly out;
    for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * Rat(static_cast<long>(i)));
    return out;
}

// F restricted to the line t -> a + t b as a univariate polynomial in t
UniPoly restrict_to_line(const Poly& F, const std::vector<Rat>& a, const std::vector<Rat>& b) {
    UniPoly acc{Rat(0)};
    for (const auto& [m, c] : F.terms()) {
        UniPoly term{c};
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            const UniPoly lin{a[i], b[i]};
            for (int k = 0; k < m.e[i]; ++k) term = uni_mul(term, lin);
        }
        if (acc.size() < term.size()) acc.resize(term.size(), Rat(0));
        for (std::size_t i = 0; i < term.size(); ++i) acc[i] += term[i];
    }
    uni_trim(acc);
    return acc;
}

} // namespace

bool squarefree_certificate(const HomogPoly& F) {
    const int d = F.degree();
    if (d <= 1) return true;
    const std::size_t nv = F.poly().nvars();
    std::mt19937 rng(0x51feu); // fixed seed: certificates are deterministic
    auto small = [&rng]() { return Rat(static_cast<long>(rng() % 9) - 4); };
    for (int attempt = 0; attempt < 48; ++attempt) {
        std::vector<Rat> a(nv), b(nv);
        for (std::size_t i = 0; i < nv; ++i) {
            a[i] = small();
            b[i] = small();
        }
        const UniPoly f = restrict_to_line(F.poly(), a, b);
        if (uni_deg(f) != d) continue; // degenerate line, try again
        if (uni_gcd_degree(f, uni_derivative(f)) == 0) return true;
    }
    return false;
}

DivisorOnPn::DivisorOnPn(int n, HomogPoly F) : n_(n), F_(std::move(F)) {
    if (n_ < 1) throw InputError("divisors need n >= 1");
    if (F_.poly().nvars() != static_cast<std::size_t>(n_) + 1)
        throw MathError("context-mismatch",
                        "equation has " + std::to_string(F_.poly().nvars()) +
                            " variables, expected " + std::to_string(n_ + 1));
    if (F_.degree() < 1)
        throw MathError("zero-polynomial", "divisor equation must have degree >= 1");
    if (!squarefree_certificate(F_))
        throw MathError("not-reduced", "no squarefree certificate found: equation looks "
                                       "like it has a repeated factor");
}

} // namespace logdiv
