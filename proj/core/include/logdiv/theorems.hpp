#pragma once

#include "logdiv/chow.hpp"
#include "logdiv/milnor.hpp"
#include "logdiv/vfield.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace logdiv {

struct NamedDivisor {
    std::string name;
    DivisorOnPn D;
};

/// Knobs shared by every verification entry point.
struct Options {
    std::optional<std::size_t> chart; // fix the affine chart of the global Milnor route
    bool probes = true;               // also evaluate the alternative sign conventions
    bool allow_linear_change = false; // permit coordinate changes when every chart fails
};

/// One verification problem: an arrangement of divisors in P^n, optionally
/// split into a two-piece decomposition, with an optional vector field and
/// optional certified singular-point lists ("C" names the intersection curve).
struct ProblemSpec {
    int n = 0;
    Context ctx;
    std::vector<NamedDivisor> divisors;
    std::optional<std::pair<std::string, std::string>> decomposition;
    std::optional<std::string> total; // name of the union divisor, when listed
    std::optional<VectorFieldPn> field;
    std::map<std::string, std::vector<std::vector<Rat>>> singular_points;
    Options options;
};

/// Structural checks: names resolve, the decomposition multiplies to the
/// total when both are given, point lists have the right arity. InputError.
void validate_problem(const ProblemSpec& spec);

const DivisorOnPn& divisor_by_name(const ProblemSpec& spec, const std::string& name);

/// One computed quantity with the route that produced it.
struct QuantityEntry {
    std::string name;
    Rat value;
    std::string route;
};

/// One right-hand-side convention of a formula.
struct VariantResult {
    std::string name;
    Rat rhs;
    Rat residual; // lhs - rhs
    bool pass;    // residual == 0
};

struct VerificationReport {
    std::string formula;
    Rat lhs;
    std::string lhs_route;
    std::vector<VariantResult> variants;
    std::string default_variant;
    std::vector<QuantityEntry> intermediates;
    std::vector<std::string> findings;

    bool default_pass() const;
    const VariantResult& variant(std::string_view name) const;
};

/// chi(P^n) = integral of c_n(TP^n), computed, not hardcoded.
Int chi_pn(int n);

/// chi of the (possibly singular) hypersurface:
/// integral_D c_{n-1}(TP^n - [D]) minus (-1)^{n-1} * total Milnor number.
Int euler_hypersurface(const DivisorOnPn& D, const Int& milnor_total);

/// chi of the intersection curve of degrees (d1, d2):
/// integral_C c_{n-2}(TP^n - [D1] - [D2]) minus (-1)^{n-2} * total Milnor number.
Int euler_intersection_curve(int n, int d1, int d2, const Int& milnor_total_C);

struct EulerComplement {
    Int value;
    std::vector<QuantityEntry> ledger;
    std::vector<std::string> findings;
};

/// chi(P^n minus the divisor) by two independent routes - the log-Chern
/// integral rearranged, and inclusion-exclusion over the strata - asserted
/// equal (MathError "route-disagreement" otherwise, carrying both values).
EulerComplement euler_complement(const ProblemSpec& spec);

/// Gauss-Bonnet type formula: LHS = integral of the top log Chern class;
/// RHS variants differ in the sign of the curve's Milnor term ("proof-sign"
/// is the default, "paper-sign" the printed one). Single-divisor problems
/// have one variant, "proof-sign".
VerificationReport verify_gauss_bonnet(const ProblemSpec& spec);

/// Poincare-Hopf type formula: LHS = chi of the complement (ground truth);
/// RHS assembles Poincare-Hopf totals, GSV totals and Milnor corrections.
/// Two-divisor variants "proof-sign"/"paper-sign" as above; single-divisor
/// default "cor-main" plus, when all zeros are non-degenerate, the
/// "nondegenerate-derived"/"nondegenerate-printed" probe variants.
VerificationReport verify_poincare_hopf(const ProblemSpec& spec);

/// Smooth normal-crossings baseline for any number of degrees: LHS = top log
/// Chern integral, RHS = (-1)^n chi(complement) with chi by inclusion-
/// exclusion over all partial intersections (assumed smooth and transverse).
VerificationReport nsa_baseline(int n, const std::vector<int>& degrees);

/// The closed complement formulas on P^n: the alternating-sum form for one
/// divisor, and for a decomposition the derived sigma_n form (default)
/// against the printed sum-of-sigmas form.
VerificationReport corollary_pn_report(const ProblemSpec& spec);

} // namespace logdiv
