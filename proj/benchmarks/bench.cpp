#include <benchmark/benchmark.h>

#include <random>

#include "torarr/addcoh.hpp"
#include "torarr/intlat.hpp"
#include "torarr/ospres.hpp"
#include "torarr/topo.hpp"

namespace {

using namespace torarr;

intlat::IntMatrix random_matrix(std::size_t n, int bound, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(-bound, bound);
  intlat::IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = d(rng);
  return m;
}

void bm_smith(benchmark::State& state) {
  auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 9, 7);
  for (auto _ : state) {
    auto sf = intlat::smith_normal_form(m);
    benchmark::DoNotOptimize(sf.rank);
  }
}
BENCHMARK(bm_smith)->Arg(4)->Arg(8)->Arg(12);

void bm_hermite(benchmark::State& state) {
  auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 9, 11);
  for (auto _ : state) {
    auto hf = intlat::hermite_row_form(m);
    benchmark::DoNotOptimize(hf.rank);
  }
}
BENCHMARK(bm_hermite)->Arg(4)->Arg(8)->Arg(12);

arrangement::AtomSpec divisor(std::vector<long long> v, long long p = 0, long long q = 1) {
  arrangement::AtomSpec a;
  a.characters.emplace_back(v.begin(), v.end());
  a.constants.emplace_back(arrangement::UnityRoot(Rat(p, q)));
  return a;
}

// splitting rank-3 arrangement: five divisors with nontrivial multiplicities
std::vector<arrangement::AtomSpec> rank3_atoms() {
  return {divisor({1, 0, 0}), divisor({0, 1, 0}), divisor({0, 0, 1}),
          divisor({1, 1, 1}), divisor({2, -1, 1}, 1, 2)};
}

void bm_layer_poset(benchmark::State& state) {
  const auto atoms = rank3_atoms();
  for (auto _ : state) {
    auto poset = arrangement::build_layer_poset(3, atoms);
    benchmark::DoNotOptimize(poset.layers.size());
  }
}
BENCHMARK(bm_layer_poset);

void bm_interval_homology(benchmark::State& state) {
  const auto poset = arrangement::build_layer_poset(3, rank3_atoms());
  for (auto _ : state) {
    Int total = 0;
    for (std::size_t w = 1; w < poset.layers.size(); ++w)
      total += topo::reduced_euler(
          topo::reduced_homology(topo::order_complex(poset, 0, w)));
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(bm_interval_homology);

void bm_betti_table(benchmark::State& state) {
  const auto poset = arrangement::build_layer_poset(3, rank3_atoms());
  for (auto _ : state) {
    auto betti = addcoh::cohomology_groups(poset);
    benchmark::DoNotOptimize(betti.by_degree.size());
  }
}
BENCHMARK(bm_betti_table);

void bm_presentation_dimensions(benchmark::State& state) {
  const auto atoms = rank3_atoms();
  const auto ground = arimat::make_ground_set(3, atoms);
  const auto poset = arrangement::build_layer_poset(3, atoms);
  for (auto _ : state) {
    auto pres = ospres::make_presentation(ground, poset);
    auto dims = ospres::quotient_dimensions(pres);
    benchmark::DoNotOptimize(dims.size());
  }
}
BENCHMARK(bm_presentation_dimensions);

void bm_integral_conjecture(benchmark::State& state) {
  const auto atoms = rank3_atoms();
  const auto ground = arimat::make_ground_set(3, atoms);
  const auto poset = arrangement::build_layer_poset(3, atoms);
  const auto betti = addcoh::cohomology_groups(poset);
  const auto pres = ospres::make_presentation(ground, poset);
  for (auto _ : state) {
    auto rep = ospres::integral_conjecture_check(pres, betti);
    benchmark::DoNotOptimize(rep.degrees.size());
  }
}
BENCHMARK(bm_integral_conjecture);

}  // namespace

BENCHMARK_MAIN();
