#include <benchmark/benchmark.h>

#include <vector>

#include "infoloss/combinators.hpp"
#include "infoloss/harness.hpp"
#include "infoloss/loss.hpp"

using namespace infoloss;

namespace {

FiniteMeasureSpace uniform(std::size_t n) {
  std::vector<std::string> labels(n);
  std::vector<Weight> weights(n, Weight(1, static_cast<long>(n)));
  for (std::size_t i = 0; i < n; ++i) labels[i] = "u" + std::to_string(i);
  return FiniteMeasureSpace(std::move(labels), std::move(weights));
}

FiniteMeasureSpace ragged(std::size_t n) {
  Rng rng(2026, n);
  std::vector<std::string> labels(n);
  std::vector<Weight> weights;
  weights.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = "x" + std::to_string(i);
    const long den = 1 + static_cast<long>(rng.below(1000));
    const long num = static_cast<long>(rng.below(static_cast<std::uint64_t>(3 * den) + 1));
    weights.emplace_back(num, den);
  }
  return FiniteMeasureSpace(std::move(labels), std::move(weights));
}

void BM_ShannonEntropy(benchmark::State& state) {
  const auto space = ragged(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(shannon(space));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ShannonEntropy)->RangeMultiplier(8)->Range(64, 32768);

void BM_TsallisEntropy(benchmark::State& state) {
  const auto space = ragged(static_cast<std::size_t>(state.range(0)));
  const auto order = EntropyOrder::tsallis(2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tsallis(order, space));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TsallisEntropy)->RangeMultiplier(8)->Range(64, 32768);

void BM_ValidateMap(benchmark::State& state) {
  const auto domain = uniform(static_cast<std::size_t>(state.range(0)));
  const auto point = validate_space({"*"}, {Weight(1)});
  const std::vector<std::size_t> targets(domain.size(), 0);
  for (auto _ : state) {
    MeasurePreservingMap map(domain, point, targets);
    benchmark::DoNotOptimize(map);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ValidateMap)->RangeMultiplier(8)->Range(64, 32768);

void BM_FaddeevReconstruct(benchmark::State& state) {
  // Random composition of 997 into n parts, so every weight is k/997.
  const auto n = static_cast<std::size_t>(state.range(0));
  const long den = 997;
  Rng rng(7, n);
  std::vector<long> cuts(n - 1);
  for (auto& c : cuts) c = static_cast<long>(rng.below(den + 1));
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::string> labels(n);
  std::vector<Weight> weights;
  weights.reserve(n);
  long previous = 0;
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = "x" + std::to_string(i);
    const long next = i + 1 < n ? cuts[i] : den;
    weights.emplace_back(next - previous, den);
    previous = next;
  }
  const FiniteMeasureSpace probability(std::move(labels), std::move(weights));
  for (auto _ : state) {
    benchmark::DoNotOptimize(faddeev_reconstruct(probability));
  }
}
BENCHMARK(BM_FaddeevReconstruct)->Arg(8)->Arg(64);

void BM_LossBothRoutes(benchmark::State& state) {
  GeneratorConfig cfg;
  const auto map = gen_map(cfg, 7, MeasureKind::probability);
  const LossFunctional functional{1.0, EntropyOrder::shannon()};
  for (auto _ : state) {
    benchmark::DoNotOptimize(loss(functional, map));
    benchmark::DoNotOptimize(loss_conditional_form(functional, map));
  }
}
BENCHMARK(BM_LossBothRoutes);

void BM_FunctorialityTrials(benchmark::State& state) {
  GeneratorConfig cfg;
  cfg.trials = 16;
  const LossFunctional base{1.0, EntropyOrder::shannon()};
  const Functional F = [&base](const MeasurePreservingMap& m) { return loss(base, m); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_functoriality(F, cfg));
  }
  state.SetItemsProcessed(state.iterations() * cfg.trials);
}
BENCHMARK(BM_FunctorialityTrials);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
