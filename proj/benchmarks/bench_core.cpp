#include <benchmark/benchmark.h>

#include "logdiv/chow.hpp"
#include "logdiv/groebner.hpp"
#include "logdiv/matrix.hpp"
#include "logdiv/milnor.hpp"
#include "logdiv/parse.hpp"
#include "logdiv/quotient.hpp"

#include <string>
#include <vector>

using namespace logdiv;

namespace {

std::vector<Poly> parse_all(const std::vector<std::string>& ss, const Context& c) {
    std::vector<Poly> out;
    for (const auto& s : ss) out.push_back(parse_poly(s, c));
    return out;
}

void bm_groebner_cyclic3(benchmark::State& state) {
    const Context c({"x", "y", "z"});
    const auto gens = parse_all({"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"}, c);
    for (auto _ : state) {
        auto copy = gens;
        benchmark::DoNotOptimize(groebner(std::move(copy), Ord::Grevlex));
    }
}
BENCHMARK(bm_groebner_cyclic3);

void bm_groebner_katsura4(benchmark::State& state) {
    const Context c({"a", "b", "d", "e"});
    const auto gens = parse_all({"a + 2*b + 2*d + 2*e - 1",
                                 "a^2 + 2*b^2 + 2*d^2 + 2*e^2 - a",
                                 "2*a*b + 2*b*d + 2*d*e - b",
                                 "b^2 + 2*a*d + 2*b*e - d"},
                                c);
    for (auto _ : state) {
        auto copy = gens;
        benchmark::DoNotOptimize(groebner(std::move(copy), Ord::Grevlex));
    }
}
BENCHMARK(bm_groebner_katsura4);

void bm_local_standard_basis(benchmark::State& state) {
    const Context c({"x", "y", "z"});
    const auto gens = parse_all({"x^3 + y^3 + z^2 + x*y*z", "x*y + z^3", "y^2 - x*z"}, c);
    for (auto _ : state) {
        auto copy = gens;
        benchmark::DoNotOptimize(mora_standard_basis(std::move(copy), Ord::NegDegRevLex));
    }
}
BENCHMARK(bm_local_standard_basis);

void bm_local_milnor_cusp_family(benchmark::State& state) {
    const Context c({"x", "y"});
    const Poly f = parse_poly("x^5 + x^2*y^2 + y^5", c);
    const std::vector<Rat> origin = {Rat(0), Rat(0)};
    for (auto _ : state) benchmark::DoNotOptimize(local_milnor(f, origin));
}
BENCHMARK(bm_local_milnor_cusp_family);

void bm_global_milnor_total(benchmark::State& state) {
    const Context c({"x0", "x1", "x2", "x3"});
    const DivisorOnPn cayley(
        3, HomogPoly(parse_poly("x0*x1*x2 + x0*x1*x3 + x0*x2*x3 + x1*x2*x3", c)));
    for (auto _ : state)
        benchmark::DoNotOptimize(milnor_sum_auto(cayley, std::nullopt, true));
}
BENCHMARK(bm_global_milnor_total);

void bm_log_chern_class_n8(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate(log_chern_class(8, {7, 9})));
    }
}
BENCHMARK(bm_log_chern_class_n8);

void bm_char_poly_8x8(benchmark::State& state) {
    RatMat M(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            M.at(i, j) = Rat(static_cast<long>((i * 3 + j * 5) % 7) - 3,
                             static_cast<long>(1 + ((i + j) % 4)));
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(M));
}
BENCHMARK(bm_char_poly_8x8);

} // namespace

BENCHMARK_MAIN();
