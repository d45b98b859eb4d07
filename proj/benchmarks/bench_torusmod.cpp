#include <torusmod/category_io.hpp>
#include <torusmod/fullfield.hpp>
#include <torusmod/modular.hpp>
#include <torusmod/qseries.hpp>

#include <benchmark/benchmark.h>

#include <memory>

using namespace torusmod;

namespace {

std::shared_ptr<const ModularEngine> engine(const char* name) {
  return std::make_shared<const ModularEngine>(load_category(name));
}

void BM_LoadAndSolve(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(engine("fibonacci"));
}
BENCHMARK(BM_LoadAndSolve);

void BM_SMatrixIsing(benchmark::State& st) {
  auto eng = engine("ising");
  for (auto _ : st)
    for (int a = 0; a < eng->size(); ++a) benchmark::DoNotOptimize(eng->s_matrix(a));
}
BENCHMARK(BM_SMatrixIsing);

void BM_AlphaBetaFibonacci(benchmark::State& st) {
  auto eng = engine("fibonacci");
  for (auto _ : st)
    for (int a = 0; a < eng->size(); ++a) benchmark::DoNotOptimize(eng->check_salpha_betas(a));
}
BENCHMARK(BM_AlphaBetaFibonacci);

void BM_ExactInvarianceIsing(benchmark::State& st) {
  auto ffa = build_diagonal_ffa(engine("ising"));
  for (auto _ : st) benchmark::DoNotOptimize(check_s_invariance_exact(ffa));
}
BENCHMARK(BM_ExactInvarianceIsing)->Unit(benchmark::kMillisecond);

void BM_BCoefficients(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(compute_B_coeffs(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_BCoefficients)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_ACoefficients(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(compute_A_coeffs(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_ACoefficients)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_EvalCharacters(benchmark::State& st) {
  auto chars = free_fermion_characters(static_cast<int>(st.range(0)));
  for (auto _ : st)
    for (const auto& c : chars) benchmark::DoNotOptimize(eval_qseries(c, Complex(0.3, 0.8)));
}
BENCHMARK(BM_EvalCharacters)->Arg(400)->Arg(800);

}  // namespace
BENCHMARK_MAIN();
