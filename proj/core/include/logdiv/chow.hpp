#pragma once

#include "logdiv/rat.hpp"

#include <vector>

namespace logdiv {

/// Element of Z[h]/(h^{n+1}) (rational coefficients internally): the Chow ring
/// of P^n with h the hyperplane class. Products truncate above degree n.
class ChowClass {
public:
    explicit ChowClass(int n);
    static ChowClass one(int n);
    /// 1 + a*h, the total Chern class of O(a).
    static ChowClass line_bundle(int n, const Rat& a);

    int n() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
    Rat& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }

    ChowClass operator+(const ChowClass& o) const;
    ChowClass operator-(const ChowClass& o) const;
    bool operator==(const ChowClass&) const = default;

private:
    std::vector<Rat> c_; // c_[k] = coefficient of h^k
};

/// Truncated convolution product.
ChowClass chow_mul(const ChowClass& a, const ChowClass& b);

/// Truncated inverse power series; requires constant term 1
/// (throws MathError("non-unit") otherwise).
ChowClass chow_inverse(const ChowClass& a);

ChowClass chow_pow(const ChowClass& a, unsigned e);

/// c(TP^n) = (1+h)^{n+1} truncated.
ChowClass tangent_chern(int n);

/// c(Omega^1_{P^n}(log D)) = (1-h)^{n+1} * prod_j (1 - d_j h)^{-1} for a
/// divisor D with one or two components of the given degrees
/// (throws MathError("unsupported-degree-count") otherwise).
ChowClass log_chern_class(int n, const std::vector<int>& degrees);

/// c(TP^n - sum [D_j]) = (1+h)^{n+1} * prod_j (1 + d_j h)^{-1}.
ChowClass chern_difference_class(int n, const std::vector<int>& degrees);

/// Degree map: coefficient of h^n.
Rat integrate(const ChowClass& a);

/// integral over D of a: the h^n coefficient of a * (d h).
Rat integrate_on_divisor(const ChowClass& a, int d);

/// integral over C = D1 cap D2: the h^n coefficient of a * (d1 d2 h^2).
Rat integrate_on_curve(const ChowClass& a, int d1, int d2);

/// Complete homogeneous symmetric function: the sum of all degree-k monomials
/// in the arguments (sigma_k in the complement formulas).
Rat complete_symmetric(int k, const std::vector<Rat>& xs);

/// Top Chern number of TP^n twisted down by O(d): sum_{i=0}^n (1-d)^i, with
/// the binomial expansion sum_i C(n+1,i) (-d)^{n-i} asserted equal.
Rat twisted_top_chern(int n, int d);

} // namespace logdiv
