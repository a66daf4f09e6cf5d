#pragma once

#include "logdiv/divisor.hpp"
#include "logdiv/quotient.hpp"

#include <optional>

namespace logdiv {

/// mu of f at the affine point p: dim of the local Jacobian quotient, via a
/// Mora standard basis after moving p to the origin. Errors: "not-singular"
/// when f(p) != 0 or grad f(p) != 0, "non-isolated" when the staircase is
/// infinite.
std::size_t local_milnor(const Poly& f, const std::vector<Rat>& p);

/// Location-free total: sum of mu over every singular point of {F = 0} lying
/// in the chart (rational or not), as the generalized 0-eigenspace dimension
/// of multiplication by f on the critical algebra Q[x]/J(f). Off-level
/// critical points act invertibly and drop out. Preconditions: no
/// singularities at infinity for this chart, J(f) zero-dimensional.
Int milnor_sum_on_zero_level(const HomogPoly& F, std::size_t chart);

/// Chart policy around the global route: a user-fixed chart is used as-is;
/// otherwise charts n, 0, 1, ... are tried in turn, and when every chart fails
/// and linear changes are allowed, deterministic unimodular coordinate
/// changes are applied until one chart works.
struct GlobalMilnor {
    Int total;
    std::size_t chart;
    std::optional<std::vector<std::vector<Rat>>> transform; // coordinate change used, if any
};

GlobalMilnor milnor_sum_auto(const DivisorOnPn& D, std::optional<std::size_t> chart,
                             bool allow_linear_change);

struct SingularPointCert {
    std::vector<Rat> point; // projective, first nonzero coordinate scaled to 1
    std::size_t chart;      // affine chart used for the local computation
    std::size_t mu;
};

struct MilnorReport {
    GlobalMilnor global;
    std::vector<SingularPointCert> points;
    bool certified_complete; // sum over listed points == location-free total
};

/// Verifies each listed projective point is singular, computes its local mu in
/// the chart of its last nonzero coordinate, and certifies the list complete
/// exactly when the per-point sum matches the location-free total.
MilnorReport certify_points(const DivisorOnPn& D, const std::vector<std::vector<Rat>>& points,
                            std::optional<std::size_t> chart, bool allow_linear_change);

/// Milnor number of the ICIS curve germ {f1 = f2 = 0} at p, by Le-Greuel:
/// dim O/((f1) + I_2(Jac(f1,f2))) - mu_p(f1). The swapped ordering is
/// asserted equal whenever it is computable.
std::size_t icis_milnor(const Poly& f1, const Poly& f2, const std::vector<Rat>& p);

/// mu = prod_i (d/w_i - 1) for a weighted-homogeneous germ with weights w and
/// weighted degree d (integral for genuine isolated singularities).
Rat milnor_orlik_oracle(const std::vector<Rat>& weights, const Rat& d);

/// Unimodular integer matrix built from seeded shears; determinant +-1.
std::vector<std::vector<Rat>> random_unimodular(std::size_t n, unsigned seed);

} // namespace logdiv
