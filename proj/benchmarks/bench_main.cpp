#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

#include "opran/cardinal.hpp"
#include "opran/constants.hpp"
#include "opran/decomp.hpp"
#include "opran/matrix.hpp"
#include "opran/range_ops.hpp"
#include "opran/range_rep.hpp"
#include "opran/rng.hpp"
#include "opran/seqspace.hpp"
#include "opran/unitary.hpp"

namespace {

using opran::Cardinal;
using opran::ComplexMatrix;
using opran::DimSeq;
using opran::RangeRep;

ComplexMatrix hermitian_sample(std::size_t n, std::uint64_t seed) {
  opran::Rng rng(seed);
  ComplexMatrix g = rng.gaussian_matrix(n, n);
  return g * g.adjoint();
}

void BM_HermitianEig(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  ComplexMatrix m = hermitian_sample(n, 42);
  for (auto _ : state) {
    auto result = opran::hermitian_eig(m);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_HermitianEig)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_Decide(benchmark::State& state) {
  const std::size_t len = static_cast<std::size_t>(state.range(0));
  std::vector<Cardinal> prefix;
  prefix.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    prefix.push_back(Cardinal::finite((i * 7 + 3) % 11));
  RangeRep rep(Cardinal::finite(2), DimSeq(prefix, Cardinal::aleph(0)));
  for (auto _ : state) {
    bool ok = opran::admits_disjoint_unitary(rep);
    auto witness = opran::vneu_witness(rep);
    benchmark::DoNotOptimize(ok);
    benchmark::DoNotOptimize(witness);
  }
}
BENCHMARK(BM_Decide)->Arg(8)->Arg(64)->Arg(512);

void BM_RangeShells(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  opran::Rng rng(7);
  ComplexMatrix a = rng.gaussian_matrix(n, n);
  for (auto _ : state) {
    auto rep = opran::range_shells(a, opran::constants::kDefaultKernelTol);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_RangeShells)->Arg(8)->Arg(16)->Arg(32);

void BM_Membership(benchmark::State& state) {
  using opran::Rational;
  using opran::RationalComplex;
  std::vector<RationalComplex> head;
  for (int i = 1; i <= 32; ++i)
    head.push_back({Rational(1, i), Rational(i, 97)});
  opran::SeqVector x(head, Rational(3, 5), Rational(1, 4));
  const Rational base(4);
  for (auto _ : state) {
    auto norm = opran::weighted_norm_sq(x, base);
    bool member = opran::canonical_membership(x);
    benchmark::DoNotOptimize(norm);
    benchmark::DoNotOptimize(member);
  }
}
BENCHMARK(BM_Membership);

void BM_StabilityEpsilon(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  auto pair = opran::interleaved_counterexample(m);
  for (auto _ : state) {
    auto bound = opran::stability_epsilon(pair.t, pair.v);
    benchmark::DoNotOptimize(bound);
  }
}
BENCHMARK(BM_StabilityEpsilon)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
