#include <doctest.h>

#include "logdiv/errors.hpp"
#include "logdiv/parse.hpp"
#include "logdiv/poly.hpp"

#include <string>
#include <vector>

using namespace logdiv;

namespace {

Context xyz() { return Context({"x", "y", "z"}); }

Poly P(const std::string& s, const Context& c) { return parse_poly(s, c); }

} // namespace

TEST_CASE("parse / print round trip") {
    const Context c = xyz();
    const std::vector<std::string> canonical = {
        "0",
        "1",
        "-1",
        "x",
        "3/2*x^2*y - z + 1",
        "x^3 + y^2*z - 3*x*z^2",
        "-5/7*x*y*z",
    };
    for (const auto& s : canonical) {
        const Poly p = P(s, c);
        CHECK(poly_to_string(p) == s);
        CHECK(parse_poly(poly_to_string(p), c) == p);
    }
    // Non-canonical spellings normalize.
    CHECK(poly_to_string(P("y*x + x*y", c)) == "2*x*y");
    CHECK(poly_to_string(P("(x + y)*(x - y)", c)) == "x^2 - y^2");
    CHECK(poly_to_string(P("x - x", c)) == "0");
    CHECK(poly_to_string(P("+x", c)) == "x");
    CHECK(poly_to_string(P("2/4*x", c)) == "1/2*x");
}

TEST_CASE("parse errors") {
    const Context c = xyz();
    CHECK_THROWS_AS(parse_poly("2x", c), InputError);       // no implicit product
    CHECK_THROWS_AS(parse_poly("x + ", c), InputError);
    CHECK_THROWS_AS(parse_poly("w", c), InputError);         // unknown variable
    CHECK_THROWS_AS(parse_poly("x^-2", c), InputError);      // negative exponent
    CHECK_THROWS_AS(parse_poly("(x", c), InputError);
    CHECK_THROWS_AS(parse_poly("", c), InputError);
    CHECK_THROWS_AS(parse_poly("1/0", c), InputError);
}

TEST_CASE("ring axioms on sample polynomials") {
    const Context c = xyz();
    const Poly a = P("x^2 - 3*y + 1/2", c);
    const Poly b = P("y*z - 2*x", c);
    const Poly d = P("z^3 + x*y", c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + d == a + (b + d));
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    CHECK(a - a == Poly(c));
    CHECK(a * Poly::constant(c, Rat(1)) == a);
    CHECK(a * Poly(c) == Poly(c));
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.pow(0) == Poly::constant(c, Rat(1)));
}

TEST_CASE("context mismatch is rejected") {
    const Poly a = P("x", xyz());
    const Poly b = P("u", Context({"u", "v"}));
    CHECK_THROWS_AS(a + b, MathError);
    CHECK_THROWS_AS(a * b, MathError);
}

TEST_CASE("differentiation satisfies the product rule") {
    const Context c = xyz();
    const Poly f = P("x^3*y - 2*z^2 + x*y*z", c);
    const Poly g = P("y^2 - x*z + 3", c);
    for (std::size_t v = 0; v < 3; ++v) {
        CHECK(differentiate(f * g, v) ==
              differentiate(f, v) * g + f * differentiate(g, v));
    }
    CHECK(differentiate(P("7", c), 0) == Poly(c));
    CHECK(poly_to_string(differentiate(P("x^3", c), 0)) == "3*x^2");
}

TEST_CASE("evaluate and translate") {
    const Context c = xyz();
    const Poly f = P("x^2*y - z + 5", c);
    const std::vector<Rat> p = {Rat(2), Rat(-1), Rat(1, 2)};
    CHECK(evaluate(f, p) == Rat(4) * Rat(-1) - Rat(1, 2) + Rat(5));
    // translate(f, p)(x) = f(x + p), so its value at 0 is f(p).
    const Poly g = translate(f, p);
    CHECK(g.constant_term() == evaluate(f, p));
    // Translating back is the identity.
    const std::vector<Rat> mp = {Rat(-2), Rat(1), Rat(-1, 2)};
    CHECK(translate(g, mp) == f);
}

TEST_CASE("substitute composes evaluation") {
    const Context c = xyz();
    const Context uv({"u", "v"});
    const Poly f = P("x*y + z^2", c);
    const std::vector<Poly> images = {
        parse_poly("u + v", uv), parse_poly("u - v", uv), parse_poly("u*v", uv)};
    const Poly g = substitute(f, uv, images);
    CHECK(g == parse_poly("(u + v)*(u - v) + (u*v)^2", uv));
}

TEST_CASE("linear change of coordinates") {
    const Context c = xyz();
    const Poly f = P("x^2 + y^2 + z^2", c);
    // x -> x + y, y -> y, z -> z.
    const std::vector<std::vector<Rat>> M = {
        {Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
    CHECK(linear_change(f, M) == P("(x + y)^2 + y^2 + z^2", c));
    // Inverse change restores f.
    const std::vector<std::vector<Rat>> Minv = {
        {Rat(1), Rat(-1), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
    CHECK(linear_change(linear_change(f, M), Minv) == f);
}

TEST_CASE("dehomogenize / homogenize round trip") {
    const Context c4({"x0", "x1", "x2", "x3"});
    const Poly F = parse_poly("x0^3 - 3*x0*x3^2 + x1^2*x3 + x2^2*x3", c4);
    const Poly f = dehomogenize(F, 3);
    CHECK(f.ctx().names() == std::vector<std::string>({"x0", "x1", "x2"}));
    const Poly back = homogenize(f, 3, "x3", 3);
    CHECK(back == F);
}

TEST_CASE("homogeneous polynomials know their degree") {
    const Context c4({"x0", "x1", "x2", "x3"});
    const HomogPoly F(parse_poly("x0*x1 - x2^2", c4));
    CHECK(F.degree() == 2);
    CHECK(euler_check(F));
    const HomogPoly G(parse_poly("x0^3 + x1^3 + x2^3 + x3^3", c4));
    CHECK(G.degree() == 3);
    CHECK(euler_check(G));
    CHECK_THROWS_AS(HomogPoly(parse_poly("x0^2 + x1", c4)), MathError);
    CHECK_THROWS_AS(HomogPoly(Poly(c4)), MathError);
}

TEST_CASE("total degree and term access") {
    const Context c = xyz();
    const Poly f = P("x^2*y + z", c);
    CHECK(f.total_degree() == 3);
    CHECK(Poly(c).total_degree() == -1);
    CHECK(f.coeff(Monomial({2, 1, 0})) == Rat(1));
    CHECK(f.coeff(Monomial({0, 0, 1})) == Rat(1));
    CHECK(f.coeff(Monomial({1, 0, 0})) == Rat(0));
}
