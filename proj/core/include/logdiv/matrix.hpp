#pragma once

#include "logdiv/rat.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace logdiv {

/// Dense exact rational matrix.
class RatMat {
public:
    RatMat() = default;
    RatMat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, Rat(0)) {}
    static RatMat identity(std::size_t n);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    RatMat operator*(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;
    /// Square matrices only.
    RatMat pow(unsigned long e) const;

    bool operator==(const RatMat&) const = default;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Rat> a_;
};

/// Exact rank: rows are scaled to integers, then fraction-free (Bareiss)
/// elimination with first-nonzero pivoting.
std::size_t rank(const RatMat& M);

/// dim ker(M^N), N = size(M): the generalized 0-eigenspace dimension,
/// computed as N - rank(M^N).
std::size_t generalized_kernel_dim(const RatMat& M);

/// Gauss-Jordan to reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMat& M);

/// Basis of the right kernel {v : Mv = 0}.
std::vector<std::vector<Rat>> kernel_basis(RatMat M);

/// Monic characteristic polynomial det(tI - M), ascending coefficients
/// [c_0, ..., c_{n-1}, 1], by the Faddeev-LeVerrier recurrence.
std::vector<Rat> char_poly(const RatMat& M);

/// Rational roots with multiplicities of a nonzero polynomial (ascending
/// coefficients), via integer scaling + the rational root theorem, roots
/// deflated out to count multiplicity. Deterministic order (ascending root).
std::vector<std::pair<Rat, int>> rational_roots(std::vector<Rat> coeffs);

} // namespace logdiv
