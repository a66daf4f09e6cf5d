#include <doctest.h>

#include "logdiv/matrix.hpp"

#include <utility>
#include <vector>

using namespace logdiv;

namespace {

RatMat from_longs(const std::vector<std::vector<long>>& rows) {
    RatMat M(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) M.at(i, j) = Rat(rows[i][j]);
    return M;
}

} // namespace

TEST_CASE("identity, product and power") {
    const RatMat I = RatMat::identity(3);
    const RatMat A = from_longs({{1, 2, 0}, {0, 1, 3}, {4, 0, 1}});
    CHECK(A * I == A);
    CHECK(I * A == A);
    CHECK(A.pow(0) == I);
    CHECK(A.pow(3) == A * A * A);
    CHECK(A - A == RatMat(3, 3));
}

TEST_CASE("rank agrees between fraction-free elimination and row reduction") {
    const std::vector<RatMat> samples = {
        from_longs({{1, 2}, {2, 4}}),
        from_longs({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}),
        from_longs({{0, 0}, {0, 0}}),
        RatMat::identity(4),
        from_longs({{2, 0, 1}, {0, 3, 0}}),
    };
    const std::vector<std::size_t> expected = {1, 2, 0, 4, 2};
    for (std::size_t k = 0; k < samples.size(); ++k) {
        CHECK(rank(samples[k]) == expected[k]);
        RatMat copy = samples[k];
        CHECK(rref(copy).size() == expected[k]);
    }
}

TEST_CASE("kernel basis spans the null space") {
    const RatMat M = from_longs({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}); // rank 2
    const auto K = kernel_basis(M);
    REQUIRE(K.size() == 1);
    for (const auto& v : K) {
        for (std::size_t i = 0; i < M.rows(); ++i) {
            Rat s(0);
            for (std::size_t j = 0; j < M.cols(); ++j) s += M.at(i, j) * v[j];
            CHECK(s == Rat(0));
        }
    }
    CHECK(kernel_basis(RatMat::identity(3)).empty());
    CHECK(kernel_basis(RatMat(2, 2)).size() == 2);
}

TEST_CASE("characteristic polynomial of a diagonal matrix") {
    RatMat D(3, 3);
    D.at(0, 0) = Rat(1);
    D.at(1, 1) = Rat(2);
    D.at(2, 2) = Rat(3);
    // (t-1)(t-2)(t-3) = t^3 - 6 t^2 + 11 t - 6, ascending coefficients.
    const std::vector<Rat> expect = {Rat(-6), Rat(11), Rat(-6), Rat(1)};
    CHECK(char_poly(D) == expect);
}

TEST_CASE("characteristic polynomial of a rational companion example") {
    // Companion matrix of t^2 - 1/2 t - 1/3.
    RatMat C(2, 2);
    C.at(0, 1) = Rat(1, 3);
    C.at(1, 0) = Rat(1);
    C.at(1, 1) = Rat(1, 2);
    const std::vector<Rat> expect = {Rat(-1, 3), Rat(-1, 2), Rat(1)};
    CHECK(char_poly(C) == expect);
}

TEST_CASE("rational roots with multiplicities, ascending") {
    // (t-1)^2 (t+2) = t^3 - 3 t + 2.
    const auto r = rational_roots({Rat(2), Rat(-3), Rat(0), Rat(1)});
    REQUIRE(r.size() == 2);
    CHECK(r[0] == std::pair<Rat, int>(Rat(-2), 1));
    CHECK(r[1] == std::pair<Rat, int>(Rat(1), 2));

    // (2t-1)(3t+1) = 6 t^2 - t - 1: non-integer roots.
    const auto s = rational_roots({Rat(-1), Rat(-1), Rat(6)});
    REQUIRE(s.size() == 2);
    CHECK(s[0] == std::pair<Rat, int>(Rat(-1, 3), 1));
    CHECK(s[1] == std::pair<Rat, int>(Rat(1, 2), 1));

    // t^2 + 1 has no rational roots.
    CHECK(rational_roots({Rat(1), Rat(0), Rat(1)}).empty());
}

TEST_CASE("generalized kernel dimension") {
    // Nilpotent 3x3 Jordan block: plain kernel is a line, generalized kernel fills up.
    const RatMat N = from_longs({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    CHECK(kernel_basis(N).size() == 1);
    CHECK(generalized_kernel_dim(N) == 3);

    RatMat D(3, 3);
    D.at(2, 2) = Rat(5); // diag(0, 0, 5)
    CHECK(generalized_kernel_dim(D) == 2);

    CHECK(generalized_kernel_dim(RatMat::identity(4)) == 0);
}
