#pragma once

#include "logdiv/divisor.hpp"
#include "logdiv/matrix.hpp"

#include <string>
#include <vector>

namespace logdiv {

/// Projective point with first nonzero coordinate scaled to 1.
struct ProjPoint {
    std::vector<Rat> x;
    bool operator==(const ProjPoint&) const = default;
};

ProjPoint normalize_proj(std::vector<Rat> v);
std::string proj_to_string(const ProjPoint& p);

/// Holomorphic vector field on P^n induced by a linear endomorphism A of the
/// coordinate space, taken modulo the Euler (radial) field. Scalar matrices
/// induce the identically-zero field and are rejected ("degenerate-field").
/// A trace-free representative of the same projective field is kept alongside
/// the user's matrix.
class VectorFieldPn {
public:
    VectorFieldPn(Context ctx, RatMat A);

    int n() const { return static_cast<int>(ctx_.size()) - 1; }
    const Context& ctx() const { return ctx_; }
    const RatMat& matrix() const { return A_; }
    const RatMat& trace_free() const { return A0_; }

private:
    Context ctx_;
    RatMat A_;
    RatMat A0_;
};

/// Zero set of the induced field: the eigen-directions of A.
struct FieldZeros {
    std::vector<ProjPoint> points; // eigenvalue-ascending, deterministic
    bool complete; // every zero of the field appears in `points`
    bool isolated; // no rational eigenvalue has a multi-dimensional eigenspace
                   // (only certified when `complete` is also true)
};

/// Rational eigen-points of the field's matrix. `complete` is true exactly
/// when the characteristic polynomial splits over Q and every eigenspace is a
/// line, so the listed points form the whole zero set. A multi-dimensional
/// eigenspace marks the field non-isolated; its positive-dimensional zero
/// family is not enumerated.
FieldZeros zeros_of_field(const VectorFieldPn& v);

/// The n component functions of the induced field in affine chart k (Euler
/// direction removed): v_i(y) = (A y~)_i - y_i (A y~)_k with y~_k = 1.
std::vector<Poly> chart_components(const VectorFieldPn& v, std::size_t k);

/// Local index of a polynomial vector field at an isolated zero: the local
/// algebra dimension of its components at the point. Accepts any chart-level
/// field, linear or not.
std::size_t local_index(const std::vector<Poly>& components, const std::vector<Rat>& p);

/// Poincare-Hopf index of the induced field at an isolated zero, computed in
/// the chart of the point's last nonzero coordinate. Errors: "not-a-zero"
/// when p is no eigen-direction, "non-isolated" when the local algebra is
/// infinite-dimensional.
std::size_t ph_index_at(const VectorFieldPn& v, const ProjPoint& p);

/// The derivation of F along the field: sum_i (Ax)_i dF/dx_i.
Poly field_applied(const VectorFieldPn& v, const Poly& F);

/// Tangency test v(F) in (F). Any representative of the projective field
/// works: shifting A by a scalar shifts v(F) by a multiple of deg(F)*F (the
/// Euler relation), which does not change membership.
bool is_logarithmic(const VectorFieldPn& v, const DivisorOnPn& D);

/// Total GSV index of the field over D, as the Chern number
/// integral_D c_{n-1}(TP^n - [D]). Throws "not-logarithmic" unless the field
/// is tangent to D.
Int gsv_total(const VectorFieldPn& v, const DivisorOnPn& D);

/// Total over the complete intersection curve C = D1 cap D2:
/// integral_C c_{n-2}(TP^n - [D1] - [D2]). Requires tangency to both.
Int gsv_total(const VectorFieldPn& v, const DivisorOnPn& D1, const DivisorOnPn& D2);

/// GSV mass left on Sing(D): gsv_total minus the Poincare-Hopf indices of the
/// listed zeros, which must be non-degenerate (index 1) and lie on the smooth
/// part of D, where the GSV index equals the Poincare-Hopf index. Errors:
/// "not-a-zero", "not-on-divisor", "point-on-singular-locus",
/// "degenerate-zero".
Int gsv_residual_at_singular(const VectorFieldPn& v, const DivisorOnPn& D,
                             const std::vector<ProjPoint>& smooth_zeros);

struct ZeroIndex {
    ProjPoint p;
    std::size_t ph;
};

/// Index bookkeeping for one field against a divisor arrangement.
struct IndexReport {
    std::vector<ZeroIndex> zeros;
    Int ph_total = 0; // n+1 whenever the zero list is complete
    std::vector<std::pair<std::string, Int>> gsv_totals;
    std::vector<std::pair<std::string, Int>> gsv_residuals;
};

} // namespace logdiv
