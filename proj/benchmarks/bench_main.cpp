#include <steenspec/coaction.hpp>
#include <steenspec/groebner.hpp>
#include <steenspec/invariant_ideals.hpp>
#include <steenspec/steenrod.hpp>
#include <steenspec/support.hpp>

#include <benchmark/benchmark.h>

using namespace steenspec;

namespace {

Poly h(int t, int s) { return Poly(Generator::h(t, s)); }

void coproduct_of_xi(benchmark::State& state)
{
    const Poly x(Generator::xi(static_cast<int>(state.range(0))));
    const Poly p = x.pow(3) * Poly(Generator::xi(1)).pow(5);
    for (auto _ : state)
        benchmark::DoNotOptimize(coproduct(p));
}
BENCHMARK(coproduct_of_xi)->DenseRange(2, 6, 2);

void groebner_of_binomial_ideal(benchmark::State& state)
{
    const auto D = d_limit_ring(Truncation{4, 64, 64});
    std::vector<Poly> gens{h(3, 0) * h(3, 1) + h(4, 0) * h(2, 1),
                           h(2, 0) * h(3, 0) * h(2, 1),
                           h(2, 0).pow(2) * h(4, 0) + h(3, 0).pow(3)};
    for (auto _ : state) {
        const Ideal I(D.presentation(), gens); // fresh cache each time
        benchmark::DoNotOptimize(I.full_basis());
    }
}
BENCHMARK(groebner_of_binomial_ideal);

void coaction_of_monomials(benchmark::State& state)
{
    const auto D = d_limit_ring(Truncation{4, 64, 64});
    const Poly p = h(4, 0) * h(3, 0).pow(2) * h(2, 0) + h(4, 1).pow(2) * h(3, 0);
    for (auto _ : state) {
        const CoactionTable table(D);
        benchmark::DoNotOptimize(coaction_poly(p, table));
    }
}
BENCHMARK(coaction_of_monomials);

void sharp_closure(benchmark::State& state)
{
    const auto D = d_limit_ring(Truncation{4, 64, 64});
    const CoactionTable table(D);
    const Ideal I(D.presentation(), {h(4, 0), h(3, 1) * h(2, 0)});
    for (auto _ : state)
        benchmark::DoNotOptimize(sharp(I, table));
}
BENCHMARK(sharp_closure);

void star_retraction(benchmark::State& state)
{
    const Truncation tr{static_cast<int>(state.range(0)), 64, 64};
    const auto D = d_limit_ring(tr);
    const CoactionTable table(D);
    const Ideal I(D.presentation(), {h(2, 0), h(3, 0) * h(1, 0)});
    for (auto _ : state)
        benchmark::DoNotOptimize(star(I, table, tr));
}
BENCHMARK(star_retraction)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void invariant_prime_enumeration(benchmark::State& state)
{
    const auto D = d_limit_ring(Truncation{4, 64, 64});
    const CoactionTable table(D);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_monomial_invariant_primes(table));
}
BENCHMARK(invariant_prime_enumeration);

} // namespace
BENCHMARK_MAIN();
