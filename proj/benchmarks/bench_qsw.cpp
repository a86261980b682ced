#include <benchmark/benchmark.h>

#include "qsw/analysis.hpp"
#include "qsw/hecke.hpp"
#include "qsw/rmatrix.hpp"

namespace {

const qsw::ParamSpec kSym = qsw::ParamSpec::symbolic();
const qsw::ParamSpec kNum = qsw::ParamSpec::specialized(2, 3);

const qsw::ParamSpec& param(int mode) { return mode == 0 ? kSym : kNum; }

void BM_ScalarArithmetic(benchmark::State& st) {
  const auto a = qsw::parse_scalar("(r^2 + r*s)/(r - s)");
  const auto b = qsw::parse_scalar("(s^3 - r)/(r*s + 1)");
  for (auto _ : st) benchmark::DoNotOptimize((a + b) * (a - b) / (a * b + qsw::Scalar(1)));
}
BENCHMARK(BM_ScalarArithmetic);

void BM_Relations(benchmark::State& st) {
  auto m = qsw::tensor_power(qsw::natural_module(static_cast<int>(st.range(0)), param(static_cast<int>(st.range(2)))),
                             static_cast<int>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(qsw::check_relations(m));
}
BENCHMARK(BM_Relations)->Args({2, 3, 0})->Args({3, 3, 0})->Args({3, 3, 1})->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& st) {
  auto m = qsw::tensor_power(qsw::natural_module(static_cast<int>(st.range(0)), param(static_cast<int>(st.range(2)))),
                             static_cast<int>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(qsw::decompose(m));
}
BENCHMARK(BM_Decompose)->Args({2, 3, 0})->Args({3, 2, 0})->Args({2, 4, 1})->Unit(benchmark::kMillisecond);

void BM_Braid(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const int k = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(qsw::braid_check(n, k, kSym));
}
BENCHMARK(BM_Braid)->Args({2, 3})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_HeckeMul(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0));
  auto perms = qsw::Permutation::all(k);
  qsw::HeckeElement x(k, kSym), y(k, kSym);
  for (std::size_t i = 0; i < perms.size(); i += 2) x.add(perms[i], kSym.r());
  for (std::size_t i = 1; i < perms.size(); i += 3) y.add(perms[i], kSym.s());
  for (auto _ : st) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_HeckeMul)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

void BM_SchurWeyl(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const int k = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(qsw::schur_weyl_check(n, k, kSym));
}
BENCHMARK(BM_SchurWeyl)->Args({2, 3})->Args({3, 3})->Args({4, 3})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
