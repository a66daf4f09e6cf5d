#include "logdiv/chow.hpp"

#include "logdiv/errors.hpp"

namespace logdiv {

ChowClass::ChowClass(int n) {
    if (n < 0) throw InputError("ChowClass: negative dimension");
    c_.assign(static_cast<std::size_t>(n) + 1, Rat(0));
}

ChowClass ChowClass::one(int n) {
    ChowClass a(n);
    a[0] = 1;
    return a;
}

ChowClass ChowClass::line_bundle(int n, const Rat& a) {
    ChowClass out = one(n);
    if (n >= 1) out[1] = a;
    return out;
}

namespace {

void require_same_n(const ChowClass& a, const ChowClass& b) {
    if (a.n() != b.n())
        throw MathError("dimension-mismatch", "Chow classes from different P^n");
}

} // namespace

ChowClass ChowClass::operator+(const ChowClass& o) const {
    require_same_n(*this, o);
    ChowClass out = *this;
    for (int k = 0; k <= n(); ++k) out[k] += o[k];
    return out;
}

ChowClass ChowClass::operator-(const ChowClass& o) const {
    require_same_n(*this, o);
    ChowClass out = *this;
    for (int k = 0; k <= n(); ++k) out[k] -= o[k];
    return out;
}

ChowClass chow_mul(const ChowClass& a, const ChowClass& b) {
    require_same_n(a, b);
    const int n = a.n();
    ChowClass out(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

ChowClass chow_inverse(const ChowClass& a) {
    if (a[0] != 1)
        throw MathError("non-unit", "inverse needs constant term 1, got " + rat_to_string(a[0]));
    const int n = a.n();
    ChowClass inv(n);
    inv[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rat s = 0;
        for (int j = 1; j <= k; ++j) s += a[j] * inv[k - j];
        inv[k] = -s;
    }
    return inv;
}

ChowClass chow_pow(const ChowClass& a, unsigned e) {
    ChowClass out = ChowClass::one(a.n());
    for (unsigned i = 0; i < e; ++i) out = chow_mul(out, a);
    return out;
}

ChowClass tangent_chern(int n) {
    return chow_pow(ChowClass::line_bundle(n, 1), static_cast<unsigned>(n) + 1);
}

ChowClass log_chern_class(int n, const std::vector<int>& degrees) {
    if (degrees.empty() || degrees.size() > 2)
        throw MathError("unsupported-degree-count",
                        "log Chern class handles one or two divisor components, got " +
                            std::to_string(degrees.size()));
    ChowClass out = chow_pow(ChowClass::line_bundle(n, -1), static_cast<unsigned>(n) + 1);
    for (int d : degrees)
        out = chow_mul(out, chow_inverse(ChowClass::line_bundle(n, Rat(-d))));
    return out;
}

ChowClass chern_difference_class(int n, const std::vector<int>& degrees) {
    ChowClass out = tangent_chern(n);
    for (int d : degrees) out = chow_mul(out, chow_inverse(ChowClass::line_bundle(n, Rat(d))));
    return out;
}

Rat integrate(const ChowClass& a) {
    return a[a.n()];
}

Rat integrate_on_divisor(const ChowClass& a, int d) {
    const int n = a.n();
    if (n < 1) throw MathError("dimension-mismatch", "no divisors in P^0");
    return a[n - 1] * Rat(d);
}

Rat integrate_on_curve(const ChowClass& a, int d1, int d2) {
    const int n = a.n();
    if (n < 2) throw MathError("dimension-mismatch", "no codimension-2 cycles in P^" + std::to_string(n));
    return a[n - 2] * Rat(d1) * Rat(d2);
}

Rat complete_symmetric(int k, const std::vector<Rat>& xs) {
    if (k < 0) return 0;
    // h_k(x_1..x_m) = h_k(x_1..x_{m-1}) + x_m h_{k-1}(x_1..x_m)
    std::vector<Rat> h(static_cast<std::size_t>(k) + 1, Rat(0));
    h[0] = 1;
    for (const Rat& x : xs)
        for (int j = 1; j <= k; ++j) h[static_cast<std::size_t>(j)] += x * h[static_cast<std::size_t>(j) - 1];
    return h[static_cast<std::size_t>(k)];
}

Rat twisted_top_chern(int n, int d) {
    Rat direct = 0;
    const Rat base = Rat(1 - d);
    for (int i = 0; i <= n; ++i) direct += rat_pow(base, static_cast<unsigned>(i));
    Rat binom_form = 0;
    for (int i = 0; i <= n; ++i)
        binom_form += Rat(binomial(static_cast<unsigned>(n) + 1, static_cast<unsigned>(i))) *
                      rat_pow(Rat(-d), static_cast<unsigned>(n - i));
    if (direct != binom_form)
        throw MathError("internal", "twisted top Chern expansions disagree");
    return direct;
}

} // namespace logdiv
