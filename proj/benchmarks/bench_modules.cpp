// Module-level algorithms on regular and permutation modules.

#include <benchmark/benchmark.h>

#include <string>

#include "modrep/endo.hpp"
#include "modrep/relproj.hpp"
#include "modrep/tower.hpp"

using namespace modrep;

namespace {

std::string rotation(unsigned n) {
  std::string s = "(";
  for (unsigned i = 1; i <= n; ++i) s += std::to_string(i) + (i < n ? " " : ")");
  return s;
}

std::string reflection(unsigned n) {
  std::string s;
  for (unsigned i = 2, j = n; i < j; ++i, --j) s += "(" + std::to_string(i) + " " + std::to_string(j) + ")";
  return s.empty() ? "()" : s;
}

GroupPtr dihedral(unsigned n) {
  return PermGroup::make(n, {Perm::parse(rotation(n), n), Perm::parse(reflection(n), n)});
}

GroupPtr cyclic(unsigned n) { return PermGroup::make(n, {Perm::parse(rotation(n), n)}); }

Tower cyclic_tower(unsigned p, unsigned levels) {
  std::vector<GroupPtr> gs;
  for (unsigned i = 1, n = p; i <= levels; ++i, n *= p) gs.push_back(cyclic(n));
  std::vector<QuotientMap> maps;
  for (std::size_t i = 0; i + 1 < gs.size(); ++i)
    maps.push_back(QuotientMap::from_generator_images(gs[i + 1], gs[i], gs[i]->generator_indices()));
  return Tower(gs, std::move(maps));
}

// D_n over GF(2) for n in the argument.
void BM_DecomposeRegular(benchmark::State& state) {
  const auto g = dihedral(static_cast<unsigned>(state.range(0)));
  const auto u = regular_module(g, FiniteField::make(2));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(u));
  state.counters["dim"] = static_cast<double>(u.dim());
}
BENCHMARK(BM_DecomposeRegular)->Arg(3)->Arg(5)->Arg(6)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_HomSpace(benchmark::State& state) {
  const auto g = dihedral(static_cast<unsigned>(state.range(0)));
  const auto u = regular_module(g, FiniteField::make(2));
  for (auto _ : state) benchmark::DoNotOptimize(hom_space(u, u));
  state.counters["dim"] = static_cast<double>(u.dim());
}
BENCHMARK(BM_HomSpace)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_EndRadical(benchmark::State& state) {
  const auto g = dihedral(static_cast<unsigned>(state.range(0)));
  const auto u = permutation_module(trivial_subgroup(g), FiniteField::make(3));
  for (auto _ : state) {
    EndAlgebra e(u);
    benchmark::DoNotOptimize(e.radical());
  }
}
BENCHMARK(BM_EndRadical)->Arg(3)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_HigmanCriterion(benchmark::State& state) {
  const auto g = dihedral(static_cast<unsigned>(state.range(0)));
  const auto f = FiniteField::make(2);
  const auto u = trivial_module(g, f);
  const auto subs = all_subgroups(g);
  for (auto _ : state)
    for (const auto& h : subs) benchmark::DoNotOptimize(higman_criterion(u, h));
  state.counters["subgroups"] = static_cast<double>(subs.size());
}
BENCHMARK(BM_HigmanCriterion)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Vertex(benchmark::State& state) {
  const auto g = dihedral(static_cast<unsigned>(state.range(0)));
  const auto u = trivial_module(g, FiniteField::make(2));
  for (auto _ : state) benchmark::DoNotOptimize(vertex(u));
}
BENCHMARK(BM_Vertex)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ModuleTower(benchmark::State& state) {
  const auto t = cyclic_tower(2, static_cast<unsigned>(state.range(0)));
  const auto u = regular_module(t.level(t.top()), FiniteField::make(2));
  for (auto _ : state) benchmark::DoNotOptimize(build_module_tower(t, u));
}
BENCHMARK(BM_ModuleTower)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
