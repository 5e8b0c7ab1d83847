#include <benchmark/benchmark.h>

#include <random>

#include "petit/algebra/analysis.hpp"
#include "petit/coding/coset_code.hpp"
#include "petit/config/job.hpp"

using namespace petit;

namespace {

Job preset_job(const std::string& name) { return parse_job(job_preset(name)); }

QuotientAlgebra quotient(const std::string& name) {
  Job job = preset_job(name);
  return reduce_mod(make_cyclic_order(job), *job.ideal, job.budget);
}

NaturalOrder::Element random_element(const NaturalOrder& o, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> u(-5, 5);
  NaturalOrder::Element x;
  for (int j = 0; j < o.degree(); ++j) {
    std::vector<long> c(o.field().degree());
    for (auto& v : c) v = u(rng);
    x.push_back(o.field().make_integral(c));
  }
  return x;
}

const char* kPresets[] = {"ex_inert", "cubic_omega7", "quartic_omega15"};

// Product in the natural order over O_K.
void BM_OrderMultiply(benchmark::State& st) {
  auto o = make_cyclic_order(preset_job(kPresets[st.range(0)]));
  std::mt19937_64 rng(1);
  auto x = random_element(*o, rng), y = random_element(*o, rng);
  for (auto _ : st) benchmark::DoNotOptimize(o->algebra().mul(x, y));
  st.SetLabel(kPresets[st.range(0)]);
}
BENCHMARK(BM_OrderMultiply)->DenseRange(0, 2);

// Product in the finite quotient.
void BM_QuotientMultiply(benchmark::State& st) {
  auto q = quotient(kPresets[st.range(0)]);
  FiniteAlgebra<FiniteQuotientRing> v(q.target);
  auto x = v.element(v.cardinality() / 3), y = v.element(v.cardinality() / 5);
  for (auto _ : st) benchmark::DoNotOptimize(q.target.mul(x, y));
  st.SetLabel(kPresets[st.range(0)]);
}
BENCHMARK(BM_QuotientMultiply)->DenseRange(0, 2);

void BM_ReduceMod(benchmark::State& st) {
  Job job = preset_job(kPresets[st.range(0)]);
  auto o = make_cyclic_order(job);
  for (auto _ : st) benchmark::DoNotOptimize(reduce_mod(o, *job.ideal, job.budget));
  st.SetLabel(kPresets[st.range(0)]);
}
BENCHMARK(BM_ReduceMod)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_RightFactorSearch(benchmark::State& st) {
  auto q = quotient(kPresets[st.range(0)]);
  for (auto _ : st) benchmark::DoNotOptimize(find_right_factor(q.target.ring(), q.target.modulus()));
  st.SetLabel(kPresets[st.range(0)]);
}
BENCHMARK(BM_RightFactorSearch)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_AnalyzeDivision(benchmark::State& st) {
  auto q = quotient(kPresets[st.range(0)]);
  for (auto _ : st) benchmark::DoNotOptimize(analyze_division(q.target));
  st.SetLabel(kPresets[st.range(0)]);
}
BENCHMARK(BM_AnalyzeDivision)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& st) {
  auto q = quotient("center_split");
  for (auto _ : st) benchmark::DoNotOptimize(decompose_quotient(q));
}
BENCHMARK(BM_Decompose)->Unit(benchmark::kMillisecond);

// Coset code enumeration over a [-box, box] coefficient box.
void BM_CosetBox(benchmark::State& st) {
  Job job = preset_job("ex_inert");
  auto q = reduce_mod(make_cyclic_order(job), *job.ideal, job.budget);
  auto outer = parity_code(symbol_space(q), 3);
  const auto emb = embedding_index(q.source->field(), job.code->embedding);
  for (auto _ : st)
    benchmark::DoNotOptimize(enumerate_coset_box(q, outer, static_cast<int>(st.range(0)), job.code->box_coordinates, emb,
                                                 *job.code->alpha, 1));
}
BENCHMARK(BM_CosetBox)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
