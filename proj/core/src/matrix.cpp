#include "logdiv/matrix.hpp"

#include "logdiv/errors.hpp"

#include <algorithm>

namespace logdiv {

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (c_ != o.r_) throw MathError("dimension-mismatch", "matrix product shapes disagree");
    RatMat out(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.c_; ++j) out.at(i, j) += x * o.at(k, j);
        }
    return out;
}

RatMat RatMat::operator-(const RatMat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw MathError("dimension-mismatch", "matrix difference shapes disagree");
    RatMat out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
    return out;
}

RatMat RatMat::pow(unsigned long e) const {
    if (r_ != c_) throw MathError("dimension-mismatch", "matrix power needs a square matrix");
    RatMat acc = identity(r_);
    RatMat base = *this;
    while (e) {
        if (e & 1ul) acc = acc * base;
        base = base * base;
        e >>= 1ul;
    }
    return acc;
}

std::size_t rank(const RatMat& M) {
    const std::size_t rows = M.rows(), cols = M.cols();
    if (rows == 0 || cols == 0) return 0;
    // clear denominators row by row; row scaling leaves the rank alone
    std::vector<std::vector<Int>> B(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            Int g;
            mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), M.at(i, j).get_den().get_mpz_t());
            l = g;
        }
        for (std::size_t j = 0; j < cols; ++j) {
            Rat v = M.at(i, j) * Rat(l);
            B[i][j] = v.get_num();
        }
    }
    // Bareiss: all divisions below are exact; zero columns are skipped, which
    // leaves the fraction-free property intact (they contribute to no minor).
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && B[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(B[piv], B[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                Int t = B[i][j] * B[r][col] - B[i][col] * B[r][j];
                mpz_divexact(B[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            B[i][col] = 0;
        }
        prev = B[r][col];
        ++r;
    }
    return r;
}

std::size_t generalized_kernel_dim(const RatMat& M) {
    if (M.rows() != M.cols())
        throw MathError("dimension-mismatch", "generalized kernel needs a square matrix");
    const std::size_t n = M.rows();
    if (n == 0) return 0;
    return n - rank(M.pow(n));
}

std::vector<std::size_t> rref(RatMat& M) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < M.cols() && r < M.rows(); ++col) {
        std::size_t piv = r;
        while (piv < M.rows() && M.at(piv, col) == 0) ++piv;
        if (piv == M.rows()) continue;
        for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M.at(piv, j), M.at(r, j));
        const Rat inv = Rat(1) / M.at(r, col);
        for (std::size_t j = col; j < M.cols(); ++j) M.at(r, j) *= inv;
        for (std::size_t i = 0; i < M.rows(); ++i) {
            if (i == r || M.at(i, col) == 0) continue;
            const Rat f = M.at(i, col);
            for (std::size_t j = col; j < M.cols(); ++j) M.at(i, j) -= f * M.at(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Rat>> kernel_basis(RatMat M) {
    const std::size_t n = M.cols();
    const auto pivots = rref(M);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(n, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -M.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rat> char_poly(const RatMat& M) {
    if (M.rows() != M.cols())
        throw MathError("dimension-mismatch", "characteristic polynomial needs a square matrix");
    const std::size_t n = M.rows();
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    RatMat Mk = RatMat::identity(n); // running (M^k + ...) auxiliary
    for (std::size_t k = 1; k <= n; ++k) {
        Mk = M * Mk;
        Rat tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += Mk.at(i, i);
        const Rat ck = -tr / Rat(static_cast<long>(k));
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) Mk.at(i, i) += ck;
    }
    return c;
}

namespace {

// positive divisors of |v| by trial division
std::vector<Int> divisors_of(Int v) {
    if (v < 0) v = -v;
    std::vector<Int> out;
    if (v == 0) return out;
    for (Int d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            Int q = v / d;
            if (q != d) out.push_back(q);
        }
    }
    return out;
}

Rat eval_poly(const std::vector<Rat>& c, const Rat& x) {
    Rat acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

// divide by (x - r); callers ensure r is a root
std::vector<Rat> deflate(const std::vector<Rat>& c, const Rat& r) {
    std::vector<Rat> q(c.size() - 1, Rat(0));
    Rat carry = 0;
    for (std::size_t i = c.size(); i-- > 1;) {
        carry = c[i] + carry * r;
        q[i - 1] = carry;
        carry = q[i - 1];
    }
    return q;
}

} // namespace

std::vector<std::pair<Rat, int>> rational_roots(std::vector<Rat> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty())
        throw MathError("zero-polynomial", "root finding on the zero polynomial");
    std::vector<std::pair<Rat, int>> roots;
    // x = 0 roots first
    int zero_mult = 0;
    while (coeffs.size() > 1 && coeffs.front() == 0) {
        coeffs.erase(coeffs.begin());
        ++zero_mult;
    }
    if (zero_mult) roots.emplace_back(Rat(0), zero_mult);
    if (coeffs.size() > 1) {
        // integer scale once; candidates p/q with p | a0, q | a_deg
        Int scale = 1;
        for (const Rat& c : coeffs) {
            Int l;
            mpz_lcm(l.get_mpz_t(), scale.get_mpz_t(), c.get_den().get_mpz_t());
            scale = l;
        }
        std::vector<Int> ic(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) ic[i] = Rat(coeffs[i] * Rat(scale)).get_num();
        const auto ps = divisors_of(ic.front());
        const auto qs = divisors_of(ic.back());
        std::vector<Rat> cands;
        for (const Int& p : ps)
            for (const Int& q : qs) {
                Rat r(p, q);
                r.canonicalize();
                cands.push_back(r);
                cands.push_back(-r);
            }
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        for (const Rat& r : cands) {
            if (eval_poly(coeffs, r) != 0) continue;
            int mult = 0;
            while (coeffs.size() > 1 && eval_poly(coeffs, r) == 0) {
                coeffs = deflate(coeffs, r);
                ++mult;
            }
            roots.emplace_back(r, mult);
            if (coeffs.size() <= 1) break;
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

} // namespace logdiv
