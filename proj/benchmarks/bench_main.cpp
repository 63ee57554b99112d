#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ob/blockcode.hpp"
#include "ob/clopen.hpp"
#include "ob/cohen.hpp"
#include "ob/lazy.hpp"
#include "ob/sacks.hpp"

namespace {

std::vector<ob::BinNode> random_stems(std::mt19937_64& rng, std::size_t count,
                                      std::size_t max_len) {
  std::vector<ob::BinNode> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<unsigned> bits(rng() % (max_len + 1));
    for (unsigned& b : bits) b = static_cast<unsigned>(rng() % 2);
    out.push_back(ob::BinNode(std::move(bits)));
  }
  return out;
}

void BM_ClopenCanonicalize(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<std::vector<ob::BinNode>> inputs;
  for (int i = 0; i < 64; ++i)
    inputs.push_back(random_stems(rng, state.range(0), 10));
  std::size_t at = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ob::ClopenSet::from_stems(inputs[at++ % inputs.size()]));
  }
}
BENCHMARK(BM_ClopenCanonicalize)->Arg(8)->Arg(32)->Arg(128);

void BM_ClopenSubtract(benchmark::State& state) {
  std::mt19937_64 rng(2);
  ob::ClopenSet a = ob::ClopenSet::from_stems(random_stems(rng, 16, 8));
  ob::ClopenSet b = ob::ClopenSet::from_stems(random_stems(rng, 16, 8));
  for (auto _ : state) benchmark::DoNotOptimize(ob::subtract(a, b));
}
BENCHMARK(BM_ClopenSubtract);

void BM_BlockCodeRoundtrip(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<ob::Node> nodes;
  for (int i = 0; i < 256; ++i) {
    std::vector<unsigned> coords(rng() % 6);
    for (unsigned& c : coords) c = static_cast<unsigned>(rng() % 8);
    nodes.push_back(ob::Node(std::move(coords)));
  }
  std::size_t at = 0;
  for (auto _ : state) {
    const ob::Node& node = nodes[at++ % nodes.size()];
    benchmark::DoNotOptimize(ob::block_decode(ob::block_encode(node)));
  }
}
BENCHMARK(BM_BlockCodeRoundtrip);

void BM_SplitLevel(benchmark::State& state) {
  std::mt19937_64 rng(4);
  ob::PerfectTree tree = ob::PerfectTree::from_stems(random_stems(rng, 6, 6));
  for (auto _ : state)
    benchmark::DoNotOptimize(ob::split_set(tree, state.range(0)));
}
BENCHMARK(BM_SplitLevel)->Arg(2)->Arg(4)->Arg(6);

void BM_GenericRun(benchmark::State& state) {
  std::mt19937_64 rng(5);
  std::vector<ob::DenseTarget> targets;
  for (int t = 0; t < 5; ++t) {
    ob::NodeSet nodes;
    for (int i = 0; i < 40; ++i) {
      std::vector<unsigned> coords(1 + rng() % 5);
      for (unsigned& c : coords) c = static_cast<unsigned>(rng() % 20);
      nodes.insert(ob::Node(std::move(coords)));
    }
    targets.push_back({"T" + std::to_string(t), std::move(nodes)});
  }
  for (auto _ : state) {
    ob::GenericRun run = ob::run_generic(ob::Node{}, targets);
    benchmark::DoNotOptimize(ob::hair_report(run, targets));
  }
}
BENCHMARK(BM_GenericRun);

void BM_StageStep(benchmark::State& state) {
  ob::LazyNodeSet ground = ob::level_set(9, 2);
  for (auto _ : state) {
    ob::GroundSetOracle oracle(ground, 10);
    ob::StageState stage = ob::initial_state(ob::ProductCondition{}, {});
    for (std::int64_t i = 0; i < state.range(0); ++i)
      stage = ob::stage_step(stage, oracle);
    benchmark::DoNotOptimize(stage);
  }
}
BENCHMARK(BM_StageStep)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
