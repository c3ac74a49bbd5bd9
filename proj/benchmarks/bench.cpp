#include <benchmark/benchmark.h>

#include <random>

#include "rhf/braid.hpp"
#include "rhf/diagram.hpp"
#include "rhf/generators.hpp"
#include "rhf/pipeline.hpp"
#include "rhf/snf.hpp"

using namespace rhf;

namespace {

const BraidWord& knot(int which) {
  static const BraidWord words[] = {
      make_braid({1, 1, 1}, 2),                              // 3_1
      make_braid({1, 1, 1, 2, -1, 2}, 3),                    // 5_2
      make_braid({1, 1, 1, 1, 1, 1, 1}, 2),                  // 7_1
      make_braid({1, 1, 1, 1, 1, -2, 1, -2}, 3),             // 8_2
      make_braid({1, 1, 1, 1, 1, 1, 1, 1, 1}, 2),            // 9_1
  };
  return words[which];
}

const char* knot_name(int which) {
  static const char* names[] = {"3_1", "5_2", "7_1", "8_2", "9_1"};
  return names[which];
}

void BM_SmithNormalForm(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = entry(rng);
  for (auto _ : st) benchmark::DoNotOptimize(smith_normal_form(m, st.range(1) != 0));
}
// dense random entries blow up quickly past 32; the pipeline only sees sparse input
BENCHMARK(BM_SmithNormalForm)->ArgsProduct({{8, 16, 32}, {0, 1}});

// three nonzeros in [-2, 2] per row, like a cellular boundary matrix
void BM_SmithNormalFormSparse(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> col(0, n - 1), val(-2, 2);
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < 3; ++k) m(i, col(rng)) = val(rng);
  for (auto _ : st) benchmark::DoNotOptimize(smith_normal_form(m, st.range(1) != 0));
}
BENCHMARK(BM_SmithNormalFormSparse)->ArgsProduct({{64, 128, 256}, {0, 1}});

void BM_BuildDiagram(benchmark::State& st) {
  const BraidWord& b = knot(static_cast<int>(st.range(0)));
  st.SetLabel(knot_name(static_cast<int>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(build_real_diagram(b));
}
BENCHMARK(BM_BuildDiagram)->DenseRange(0, 4);

void BM_EnumerateGenerators(benchmark::State& st) {
  RealDiagram d = build_real_diagram(knot(static_cast<int>(st.range(0))));
  Topology t = compute_topology(d);
  st.SetLabel(knot_name(static_cast<int>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_generators(d, t, static_cast<int>(st.range(1))));
}
BENCHMARK(BM_EnumerateGenerators)->ArgsProduct({{0, 1, 2, 3, 4}, {1, 4}})->UseRealTime();

void BM_Pipeline(benchmark::State& st) {
  const BraidWord& b = knot(static_cast<int>(st.range(0)));
  st.SetLabel(knot_name(static_cast<int>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(analyze_braid(b));
}
BENCHMARK(BM_Pipeline)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_GradingCheck(benchmark::State& st) {
  Analysis a = analyze_braid(knot(static_cast<int>(st.range(0))));
  st.SetLabel(knot_name(static_cast<int>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(check_gradings(a));
}
BENCHMARK(BM_GradingCheck)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
