#include <doctest.h>

#include "logdiv/errors.hpp"
#include "logdiv/parse.hpp"
#include "logdiv/problem_io.hpp"
#include "logdiv/theorems.hpp"

#include <string>
#include <vector>

using namespace logdiv;

namespace {

ProblemSpec fixture(const std::string& name) {
    return load_problem(std::string(LOGDIV_FIXTURE_DIR) + "/" + name);
}

const QuantityEntry& entry(const VerificationReport& r, const std::string& name) {
    for (const auto& e : r.intermediates)
        if (e.name == name) return e;
    throw std::runtime_error("missing intermediate entry: " + name);
}

bool has_entry(const VerificationReport& r, const std::string& name) {
    for (const auto& e : r.intermediates)
        if (e.name == name) return true;
    return false;
}

bool finding_contains(const std::vector<std::string>& findings, const std::string& s) {
    for (const auto& f : findings)
        if (f.find(s) != std::string::npos) return true;
    return false;
}

} // namespace

TEST_CASE("chi of projective space, computed from the tangent class") {
    for (int n = 1; n <= 8; ++n) CHECK(chi_pn(n) == n + 1);
}

TEST_CASE("Euler characteristics of singular hypersurfaces") {
    const Context c({"x0", "x1", "x2", "x3"});
    const DivisorOnPn smooth(3, HomogPoly(parse_poly("x0*x1 - x2*x3", c)));
    const DivisorOnPn cone(3, HomogPoly(parse_poly("x0*x1 - x2^2", c)));
    const DivisorOnPn cayley(
        3, HomogPoly(parse_poly("x0*x1*x2 + x0*x1*x3 + x0*x2*x3 + x1*x2*x3", c)));
    CHECK(euler_hypersurface(smooth, 0) == 4);
    // Projective cone over a conic: the base times an affine line, plus a vertex.
    CHECK(euler_hypersurface(cone, 1) == 3);
    // Four nodes each cost one against the smooth cubic surface's 9.
    CHECK(euler_hypersurface(cayley, 4) == 5);
}

TEST_CASE("Euler characteristics of intersection curves") {
    // Smooth conic: a rational curve.
    CHECK(euler_intersection_curve(3, 1, 2, 0) == 2);
    // One-node plane cubic: a sphere with two points glued.
    CHECK(euler_intersection_curve(3, 1, 3, 1) == 1);
    // Smooth elliptic quartic.
    CHECK(euler_intersection_curve(3, 2, 2, 0) == 0);
}

TEST_CASE("complement Euler characteristics by both routes on all fixtures") {
    const std::vector<std::pair<std::string, long>> cases = {
        {"smooth_quadric.json", 0},  {"quadric_cone.json", 1},
        {"cayley_cubic.json", -1},   {"hyperplane_quadric.json", -1},
        {"hyperplane_cubic_node.json", -7}, {"hyperplane_cone.json", 0},
        {"two_lines_p2.json", 0},
    };
    for (const auto& [file, expect] : cases) {
        CAPTURE(file);
        const EulerComplement e = euler_complement(fixture(file));
        CHECK(e.value == expect);
        // Both routes appear in the ledger with the agreed value.
        Rat a, b;
        bool found_a = false, found_b = false;
        for (const auto& q : e.ledger) {
            if (q.name == "chi(complement) [log-Chern route]") { a = q.value; found_a = true; }
            if (q.name == "chi(complement) [inclusion-exclusion route]") { b = q.value; found_b = true; }
        }
        REQUIRE(found_a);
        REQUIRE(found_b);
        CHECK(a == b);
        CHECK(a == Rat(expect));
    }
}

TEST_CASE("log Gauss-Bonnet, single divisor: printed and derived signs agree") {
    const VerificationReport cone = verify_gauss_bonnet(fixture("quadric_cone.json"));
    CHECK(cone.lhs == Rat(0)); // alternating sum for d = 2 vanishes in P^3
    CHECK(cone.default_variant == "proof-sign");
    CHECK(cone.default_pass());
    CHECK(cone.variants.size() == 1);
    CHECK(entry(cone, "mu(D)").value == Rat(1));

    const VerificationReport cay = verify_gauss_bonnet(fixture("cayley_cubic.json"));
    CHECK(cay.lhs == Rat(5)); // -(1 - 2 + 4 - 8)
    CHECK(cay.default_pass());
    CHECK(entry(cay, "mu(D)").value == Rat(4));
    // All four certified nodes appear individually.
    CHECK(has_entry(cay, "mu(D@[1:0:0:0])"));
    CHECK(has_entry(cay, "mu(D@[0:0:0:1])"));

    const VerificationReport sm = verify_gauss_bonnet(fixture("smooth_quadric.json"));
    CHECK(sm.lhs == Rat(0));
    CHECK(sm.default_pass());
    CHECK(entry(sm, "mu(D)").value == Rat(0));
}

TEST_CASE("log Gauss-Bonnet, two divisors: the curve term adjudicates the sign") {
    const VerificationReport r = verify_gauss_bonnet(fixture("hyperplane_cubic_node.json"));
    CHECK(r.lhs == Rat(8)); // sigma_3(0, 2)
    CHECK(r.default_variant == "proof-sign");
    CHECK(r.variant("proof-sign").pass);
    CHECK(r.variant("proof-sign").rhs == Rat(8));
    CHECK_FALSE(r.variant("paper-sign").pass);
    CHECK(r.variant("paper-sign").rhs == Rat(6));
    CHECK(r.variant("paper-sign").residual == Rat(2));
    CHECK(finding_contains(r.findings, "printed curve Milnor sign disagrees"));
    CHECK(entry(r, "mu(C)").value == Rat(1));
    CHECK(entry(r, "chi(C)").value == Rat(1));
    CHECK(entry(r, "chi(D2)").value == Rat(9));

    // With a smooth curve the two conventions coincide.
    const VerificationReport hq = verify_gauss_bonnet(fixture("hyperplane_quadric.json"));
    CHECK(hq.lhs == Rat(1));
    CHECK(hq.variant("proof-sign").pass);
    CHECK(hq.variant("paper-sign").pass);
    CHECK_FALSE(finding_contains(hq.findings, "disagrees"));
}

TEST_CASE("index formula, single divisor with a singular point") {
    const VerificationReport r = verify_poincare_hopf(fixture("quadric_cone.json"));
    CHECK(r.lhs == Rat(1)); // chi of the complement
    CHECK(r.default_variant == "cor-main");
    CHECK(r.default_pass());
    CHECK(entry(r, "PH total").value == Rat(4));
    CHECK(entry(r, "GSV(D)").value == Rat(4));
    CHECK(entry(r, "GSV(D) at the singular locus").value == Rat(2));
    CHECK(r.variant("nondegenerate-derived").pass);
    CHECK_FALSE(r.variant("nondegenerate-printed").pass);
    CHECK(finding_contains(r.findings, "opposite sign"));

    const VerificationReport sm = verify_poincare_hopf(fixture("smooth_quadric.json"));
    CHECK(sm.lhs == Rat(0));
    CHECK(sm.default_pass());
    CHECK(sm.variant("nondegenerate-derived").pass);
    // mu = 0: the printed and derived brackets agree on smooth divisors.
    CHECK(sm.variant("nondegenerate-printed").pass);
    CHECK_FALSE(finding_contains(sm.findings, "opposite sign"));
}

TEST_CASE("index formula, two divisors") {
    const VerificationReport r = verify_poincare_hopf(fixture("hyperplane_cone.json"));
    CHECK(r.lhs == Rat(0));
    CHECK(r.default_variant == "proof-sign");
    CHECK(r.default_pass());
    CHECK(entry(r, "PH total").value == Rat(4));
    CHECK(entry(r, "GSV(D1)").value == Rat(3));
    CHECK(entry(r, "GSV(D2)").value == Rat(4));
    CHECK(entry(r, "GSV(C)").value == Rat(2));
    CHECK(entry(r, "mu(D2)").value == Rat(1));
    // The curve is smooth here, so both sign conventions hold.
    CHECK(r.variant("paper-sign").pass);
}

TEST_CASE("index formula requires a field") {
    CHECK_THROWS_AS(static_cast<void>(verify_poincare_hopf(fixture("cayley_cubic.json"))),
                    InputError);
}

TEST_CASE("probe variants can be switched off") {
    ProblemSpec spec = fixture("quadric_cone.json");
    spec.options.probes = false;
    const VerificationReport r = verify_poincare_hopf(spec);
    CHECK(r.default_pass());
    CHECK(r.variants.size() == 1); // only cor-main
    const VerificationReport gb = verify_gauss_bonnet(fixture("hyperplane_quadric.json"));
    CHECK(gb.variants.size() == 3);
    // Moving the curve integral out of the signed bracket changes the value
    // on this input, and the probe says so.
    CHECK_FALSE(gb.variant("display-bracket").pass);
    CHECK(finding_contains(gb.findings, "outside"));
    ProblemSpec off = fixture("hyperplane_quadric.json");
    off.options.probes = false;
    const VerificationReport gb_off = verify_gauss_bonnet(off);
    // The display-bracket probe disappears; the two sign variants remain.
    CHECK(gb_off.variants.size() == 2);
    CHECK(gb.lhs == gb_off.lhs);
}

TEST_CASE("smooth normal-crossings baseline across dimensions and degrees") {
    const VerificationReport a = nsa_baseline(3, {1, 2});
    CHECK(a.lhs == Rat(1));
    CHECK(entry(a, "chi(complement)").value == Rat(-1));
    CHECK(a.default_pass());

    const VerificationReport b = nsa_baseline(2, {1, 1});
    CHECK(b.lhs == Rat(0));
    CHECK(entry(b, "chi(complement)").value == Rat(0));
    CHECK(b.default_pass());

    // Three transverse hyperplanes in P^3: the log class collapses to 1 - h.
    const VerificationReport c = nsa_baseline(3, {1, 1, 1});
    CHECK(c.lhs == Rat(0));
    CHECK(c.default_pass());
    CHECK(has_entry(c, "chi(D1 cap D2 cap D3)"));

    // Hand-expanded value for three quadrics in P^3.
    const VerificationReport d = nsa_baseline(3, {2, 2, 2});
    CHECK(d.lhs == Rat(16));
    CHECK(entry(d, "chi(complement)").value == Rat(-16));
    CHECK(d.default_pass());

    for (int n = 2; n <= 5; ++n)
        for (const auto& degs : std::vector<std::vector<int>>{
                 {1}, {2}, {3}, {1, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {1, 2, 3}}) {
            CAPTURE(n);
            CHECK(nsa_baseline(n, degs).default_pass());
        }

    CHECK_THROWS_AS(static_cast<void>(nsa_baseline(0, {1})), InputError);
    CHECK_THROWS_AS(static_cast<void>(nsa_baseline(3, {})), InputError);
    CHECK_THROWS_AS(static_cast<void>(nsa_baseline(3, {0})), InputError);
}

TEST_CASE("closed complement formulas, single divisor") {
    const VerificationReport r = corollary_pn_report(fixture("cayley_cubic.json"));
    CHECK(r.lhs == Rat(-1));
    CHECK(r.default_variant == "printed-alternating-sum");
    CHECK(r.default_pass());
    CHECK(entry(r, "sum of (1-d)^i").value == Rat(-5));
    CHECK(finding_contains(r.findings, "alternating sum equals"));

    CHECK(corollary_pn_report(fixture("quadric_cone.json")).default_pass());
    CHECK(corollary_pn_report(fixture("smooth_quadric.json")).default_pass());
}

TEST_CASE("closed complement formulas, two divisors") {
    const VerificationReport r = corollary_pn_report(fixture("hyperplane_cubic_node.json"));
    CHECK(r.lhs == Rat(-7));
    CHECK(r.default_variant == "derived-sigma");
    CHECK(r.variant("derived-sigma").pass);
    CHECK(entry(r, "sigma_n(d1-1,d2-1)").value == Rat(8));
    CHECK(entry(r, "sum of sigma_{n-i}(d1-1,d2-1)").value == Rat(15));
    CHECK_FALSE(r.variant("printed-sigma-sum").pass);
    CHECK(finding_contains(r.findings, "differs from the sigma_n"));

    const VerificationReport hq = corollary_pn_report(fixture("hyperplane_quadric.json"));
    CHECK(hq.lhs == Rat(-1));
    CHECK(hq.variant("derived-sigma").pass);
    CHECK(hq.variant("derived-sigma").rhs == Rat(-1));
    CHECK_FALSE(hq.variant("printed-sigma-sum").pass);
    CHECK(hq.variant("printed-sigma-sum").rhs == Rat(-4));
}

TEST_CASE("swapping the decomposition order changes nothing substantive") {
    for (const std::string file :
         {"hyperplane_quadric.json", "hyperplane_cubic_node.json", "hyperplane_cone.json"}) {
        CAPTURE(file);
        const ProblemSpec orig = fixture(file);
        ProblemSpec swapped = orig;
        REQUIRE(swapped.decomposition.has_value());
        std::swap(swapped.decomposition->first, swapped.decomposition->second);

        CHECK(euler_complement(orig).value == euler_complement(swapped).value);
        const VerificationReport a = verify_gauss_bonnet(orig);
        const VerificationReport b = verify_gauss_bonnet(swapped);
        CHECK(a.lhs == b.lhs);
        CHECK(a.variant("proof-sign").rhs == b.variant("proof-sign").rhs);
        CHECK(a.variant("paper-sign").rhs == b.variant("paper-sign").rhs);
        const VerificationReport ca = corollary_pn_report(orig);
        const VerificationReport cb = corollary_pn_report(swapped);
        CHECK(ca.variant("derived-sigma").rhs == cb.variant("derived-sigma").rhs);
        if (orig.field) {
            CHECK(verify_poincare_hopf(orig).variant("proof-sign").rhs ==
                  verify_poincare_hopf(swapped).variant("proof-sign").rhs);
        }
    }
}

TEST_CASE("fixed-chart obstruction surfaces as a math error") {
    CHECK_THROWS_WITH_AS(
        static_cast<void>(verify_gauss_bonnet(fixture("sing_at_infinity.json"))),
        doctest::Contains("singularities-at-infinity"), MathError);
    // Released from the fixed chart, the verification succeeds.
    ProblemSpec spec = fixture("sing_at_infinity.json");
    spec.options.chart.reset();
    const VerificationReport r = verify_gauss_bonnet(spec);
    CHECK(r.default_pass());
    CHECK(entry(r, "mu(D)").value == Rat(4));
}
