#include <doctest.h>

#include "logdiv/chow.hpp"
#include "logdiv/errors.hpp"

#include <vector>

using namespace logdiv;

namespace {

// Independent reference implementation: truncated power series as plain
// coefficient vectors, multiplied and inverted the naive way.
using Series = std::vector<Rat>;

Series mul_series(const Series& a, const Series& b) {
    Series c(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size() && j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

Series inv_series(const Series& a) {
    Series b(a.size(), Rat(0));
    b[0] = 1;
    for (std::size_t k = 1; k < a.size(); ++k) {
        Rat s(0);
        for (std::size_t j = 1; j <= k; ++j) s += a[j] * b[k - j];
        b[k] = -s;
    }
    return b;
}

Series to_series(const ChowClass& c) {
    Series s;
    for (int k = 0; k <= c.n(); ++k) s.push_back(c[k]);
    return s;
}

ChowClass from_series(const Series& s) {
    ChowClass c(static_cast<int>(s.size()) - 1);
    for (std::size_t k = 0; k < s.size(); ++k) c[static_cast<int>(k)] = s[k];
    return c;
}

Rat pow_rat(const Rat& b, int e) {
    Rat r(1);
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

} // namespace

TEST_CASE("ring operations agree with the naive series oracle") {
    const int n = 6;
    const Series a = {Rat(1), Rat(3), Rat(-2), Rat(1, 2), Rat(0), Rat(7), Rat(-1, 3)};
    const Series b = {Rat(1), Rat(-1), Rat(5), Rat(0), Rat(2, 3), Rat(-4), Rat(1)};
    const ChowClass A = from_series(a), B = from_series(b);
    CHECK(to_series(chow_mul(A, B)) == mul_series(a, b));
    CHECK(to_series(chow_inverse(A)) == inv_series(a));
    CHECK(to_series(chow_inverse(B)) == inv_series(b));
    CHECK(chow_mul(A, chow_inverse(A)) == ChowClass::one(n));
    CHECK(chow_pow(A, 3) == chow_mul(A, chow_mul(A, A)));
    CHECK(chow_pow(A, 0) == ChowClass::one(n));
    CHECK(A + B - B == A);
}

TEST_CASE("inverse requires a unit constant term") {
    ChowClass z(3); // the zero class
    CHECK_THROWS_WITH_AS(static_cast<void>(chow_inverse(z)),
                         doctest::Contains("non-unit"), MathError);
}

TEST_CASE("tangent bundle of P^n: binomial class, top integral n + 1") {
    for (int n = 1; n <= 8; ++n) {
        const ChowClass t = tangent_chern(n);
        CHECK(t[0] == Rat(1));
        CHECK(t[1] == Rat(n + 1));
        CHECK(integrate(t) == Rat(n + 1));
        // (1+h)^{n+1} truncated: binomial coefficients.
        CHECK(to_series(t) == to_series(chow_pow(ChowClass::line_bundle(n, Rat(1)),
                                                 static_cast<unsigned>(n) + 1)));
    }
}

TEST_CASE("top log Chern number, one divisor: the alternating power sum") {
    for (int n = 1; n <= 6; ++n) {
        for (int d = 1; d <= 6; ++d) {
            const Rat lhs = integrate(log_chern_class(n, {d}));
            Rat sum(0);
            for (int i = 0; i <= n; ++i) sum += pow_rat(Rat(1 - d), i);
            const Rat sign = (n % 2 == 0) ? Rat(1) : Rat(-1);
            CHECK(lhs == sign * sum);
            CHECK(twisted_top_chern(n, d) == sum);
        }
    }
}

TEST_CASE("top log Chern number, two divisors: the complete symmetric function") {
    for (int n = 2; n <= 6; ++n) {
        for (int d1 = 1; d1 <= 5; ++d1) {
            for (int d2 = d1; d2 <= 5; ++d2) {
                const Rat lhs = integrate(log_chern_class(n, {d1, d2}));
                CHECK(lhs == complete_symmetric(n, {Rat(d1 - 1), Rat(d2 - 1)}));
                // Symmetry in the two degrees.
                CHECK(lhs == integrate(log_chern_class(n, {d2, d1})));
            }
        }
    }
}

TEST_CASE("log Chern class supports exactly one or two divisor components") {
    CHECK_THROWS_WITH_AS(static_cast<void>(log_chern_class(3, {})),
                         doctest::Contains("unsupported-degree-count"), MathError);
    CHECK_THROWS_WITH_AS(static_cast<void>(log_chern_class(3, {1, 2, 3})),
                         doctest::Contains("unsupported-degree-count"), MathError);
}

TEST_CASE("complete homogeneous symmetric function, small closed forms") {
    const Rat a(2), b(3);
    CHECK(complete_symmetric(0, {a, b}) == Rat(1));
    CHECK(complete_symmetric(1, {a, b}) == a + b);
    CHECK(complete_symmetric(2, {a, b}) == a * a + a * b + b * b);
    CHECK(complete_symmetric(3, {Rat(0), Rat(2)}) == Rat(8));
    CHECK(complete_symmetric(2, {Rat(1, 2)}) == Rat(1, 4));
    CHECK(complete_symmetric(3, {}) == Rat(0));
    CHECK(complete_symmetric(0, {}) == Rat(1));
}

TEST_CASE("restricted Chern integrals reproduce classical Euler numbers") {
    // Smooth degree-d surfaces in P^3: quadric = P^1 x P^1, cubic = blown-up
    // plane, quartic = K3.
    CHECK(integrate_on_divisor(chern_difference_class(3, {1}), 1) == Rat(3));
    CHECK(integrate_on_divisor(chern_difference_class(3, {2}), 2) == Rat(4));
    CHECK(integrate_on_divisor(chern_difference_class(3, {3}), 3) == Rat(9));
    CHECK(integrate_on_divisor(chern_difference_class(3, {4}), 4) == Rat(24));
    // Smooth conic in P^2 is a rational curve.
    CHECK(integrate_on_divisor(chern_difference_class(2, {2}), 2) == Rat(2));
    // Smooth complete-intersection curves in P^3 of bidegree (d1, d2) have
    // chi = 2 - 2g with g = d1 d2 (d1 + d2 - 4)/2 + 1.
    CHECK(integrate_on_curve(chern_difference_class(3, {1, 1}), 1, 1) == Rat(2));
    CHECK(integrate_on_curve(chern_difference_class(3, {1, 2}), 1, 2) == Rat(2));
    CHECK(integrate_on_curve(chern_difference_class(3, {1, 3}), 1, 3) == Rat(0));
    CHECK(integrate_on_curve(chern_difference_class(3, {2, 2}), 2, 2) == Rat(0));
    CHECK(integrate_on_curve(chern_difference_class(3, {2, 3}), 2, 3) == Rat(-6));
}

TEST_CASE("twisted top Chern numbers, explicit small values") {
    CHECK(twisted_top_chern(3, 1) == Rat(1));
    CHECK(twisted_top_chern(3, 2) == Rat(1 - 1 + 1 - 1));
    CHECK(twisted_top_chern(3, 3) == Rat(1 - 2 + 4 - 8));
    CHECK(twisted_top_chern(2, 3) == Rat(1 - 2 + 4));
}
