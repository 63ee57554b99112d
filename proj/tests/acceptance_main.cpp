// Acceptance suite. Each criterion prints one PASS/FAIL line; the process
// exits nonzero if any criterion fails. Runtime-limited criteria time
// themselves and fail when over budget.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ob/blockcode.hpp"
#include "ob/branch.hpp"
#include "ob/clopen.hpp"
#include "ob/cohen.hpp"
#include "ob/families.hpp"
#include "ob/lazy.hpp"
#include "ob/sacks.hpp"
#include "support/oracles.hpp"

using namespace ob;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::vector<Node> all_nodes(std::size_t max_len, unsigned coord_bound) {
  std::vector<Node> out = {Node{}};
  for (std::size_t start = 0, len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = start; i < end; ++i)
      for (unsigned c = 0; c < coord_bound; ++c)
        out.push_back(out[i].child(c));
    start = end;
  }
  return out;
}

// --- criteria ----------------------------------------------------------

Outcome block_code_roundtrip_and_order() {
  Outcome out;
  std::vector<Node> nodes = all_nodes(4, 4);
  out.require(nodes.size() == 341,
              "expected 341 nodes, got " + std::to_string(nodes.size()));
  std::vector<BinNode> images;
  images.reserve(nodes.size());
  for (const Node& node : nodes) {
    images.push_back(block_encode(node));
    out.require(block_decode(images.back()) == node,
                "round trip failed at " + node.str());
  }
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j)
      out.require(is_prefix(nodes[i], nodes[j]) ==
                      is_prefix(images[i], images[j]),
                  "order mismatch at " + nodes[i].str() + " vs " +
                      nodes[j].str());
  return out;
}

Outcome off_branch_verdict_vs_brute_force() {
  Outcome out;
  std::mt19937_64 rng(1001);
  for (int round = 0; round < 1000; ++round) {
    NodeSet raw = oracles::random_node_set(rng, 2 + rng() % 11, 5, 3);
    OverlapReport report = off_branch_report(explicit_set(raw), 6);
    std::size_t brute = oracles::brute_max_chain(raw);
    out.require(report.chain_length == brute,
                "chain length " + std::to_string(report.chain_length) +
                    " vs brute " + std::to_string(brute));
    Verdict expected =
        brute >= 4 ? Verdict::ChainFound : Verdict::ConsistentWithAd;
    out.require(report.verdict == expected, "verdict mismatch");
  }
  return out;
}

Outcome decomposition_partition() {
  Outcome out;
  std::mt19937_64 rng(1002);
  NodeSet grid = grid_nodes(6, 3);
  for (int round = 0; round < 100; ++round) {
    std::vector<LazyNodeSet> f;
    std::size_t members = 1 + rng() % 5;
    for (std::size_t i = 0; i < members; ++i)
      f.push_back(explicit_set(oracles::random_node_set(rng, 12, 5, 3)));
    std::vector<NodeSet> blocks = decomposition_cover(f, 6, 3);
    NodeSet seen;
    for (const NodeSet& block : blocks)
      for (const Node& x : block) {
        out.require(!seen.count(x), "blocks overlap at " + x.str());
        seen.insert(x);
      }
    for (const Node& x : grid)
      out.require(seen.count(x) > 0, "grid node " + x.str() + " uncovered");
  }
  return out;
}

Outcome column_translation_roundtrip() {
  Outcome out;
  std::mt19937_64 rng(1003);
  std::size_t depth = 6;
  std::vector<PeriodicBranch> branches = default_branches(depth);
  for (int round = 0; round < 200; ++round) {
    // A random antichain guaranteed to meet one canonical branch.
    NodeSet raw = oracles::random_node_set(rng, 8, 5, 6);
    std::size_t who = rng() % branches.size();
    raw.insert(branches[who].node_at(1 + rng() % (depth - 1)));
    NodeSet antichain = minimal_elements(raw);
    LazyNodeSet set = explicit_set(antichain);

    PairSet pairs = to_branch_columns(set, branches, depth);
    NodeSet back = from_branch_columns(pairs, branches);
    back.erase(Node{});
    NodeSet expected;
    for (std::size_t n = 0; n < branches.size(); ++n)
      for (std::size_t i = 1; i < depth; ++i)
        if (antichain.count(branches[n].node_at(i)))
          expected.insert(branches[n].node_at(i));
    out.require(back == expected, "column round trip mismatch");
    out.require(column_multiplicity(pairs) == 1,
                "antichain multiplicity " +
                    std::to_string(column_multiplicity(pairs)));
  }
  return out;
}

Outcome measure_vs_bitset() {
  Outcome out;
  std::mt19937_64 rng(1004);
  for (int round = 0; round < 5000; ++round) {
    ClopenSet a = oracles::random_clopen(rng, 1 + rng() % 5, 6);
    ClopenSet b = oracles::random_clopen(rng, 1 + rng() % 5, 6);
    std::uint64_t ma = oracles::to_mask(a);
    std::uint64_t mb = oracles::to_mask(b);
    out.require(oracles::to_mask(unite(a, b)) == (ma | mb), "union mismatch");
    out.require(oracles::to_mask(intersect(a, b)) == (ma & mb),
                "meet mismatch");
    out.require(oracles::to_mask(subtract(a, b)) == (ma & ~mb),
                "difference mismatch");
    out.require(oracles::measure_matches(a.measure(), ma),
                "measure is not popcount/64 for " + a.measure().str());
  }
  return out;
}

Outcome parent_bound_and_decay() {
  Outcome out;
  std::mt19937_64 rng(1005);
  for (int round = 0; round < 1000; ++round) {
    std::vector<BinNode> f;
    std::size_t len = 1 + rng() % 12;
    for (std::size_t i = 0; i < len; ++i)
      f.push_back(oracles::random_bin_node(rng, 6));
    std::size_t n = rng() % (len + 1);
    std::size_t N = n + rng() % (len - n + 1);
    out.require(parent_window_bound(f, n, N).holds, "parent bound violated");
  }
  std::vector<BinNode> zeros;
  for (std::size_t k = 0; k < 8; ++k) {
    std::vector<unsigned> bits(k, 0u);
    bits.push_back(1u);
    zeros.push_back(BinNode(std::move(bits)));
  }
  auto table = tail_decay_table(zeros, 8);
  for (std::size_t n = 0; n <= 8; ++n) {
    Dyadic expected = Dyadic(1, static_cast<unsigned>(n)) - Dyadic(1, 8);
    out.require(table[n].second == expected,
                "decay entry " + std::to_string(n) + " is " +
                    table[n].second.str() + ", expected " + expected.str());
  }
  return out;
}

Outcome generic_hair_bound() {
  Outcome out;
  std::mt19937_64 rng(1006);
  for (int round = 0; round < 500; ++round) {
    std::vector<DenseTarget> targets;
    std::size_t count = 1 + rng() % 5;
    for (std::size_t i = 0; i < count; ++i)
      targets.push_back({"T" + std::to_string(i),
                         oracles::random_node_set(rng, 1 + rng() % 40, 6, 20)});
    Node start = oracles::random_node(rng, 3, 20);
    GenericRun run = run_generic(start, targets);
    for (const HairRecord& record : hair_report(run, targets))
      out.require(record.bound_ok, "hair bound failed for " + record.label);
  }
  return out;
}

Outcome stage_engine_and_fusion() {
  Outcome out;
  // Ground antichain: the full binary level 9, probed at depth 10.
  LazyNodeSet ground = level_set(9, 2);
  NodeSet truncation = ground.enumerate_upto(10);
  out.require(truncation.size() == 512, "oracle truncation size");

  // Three pairwise disjoint antichains; the first overlaps the oracle set.
  NodeSet b0;
  for (const Node& x : truncation)
    if (x[0] == 0 && x[1] == 0 && x[2] == 0) b0.insert(x);
  NodeSet b1, b2;
  for (unsigned k = 0; k < 5; ++k) {
    b1.insert(Node({2, k}));
    b2.insert(Node({3, k}));
  }
  GroundSetOracle oracle(ground, 10);
  StageState state = initial_state(ProductCondition{}, {b0, b1, b2});

  std::vector<ProductCondition> chain = {state.condition};
  for (int stage = 0; stage < 2; ++stage) {
    StageRecord record;
    state = stage_step(state, oracle, {}, &record);
    chain.push_back(state.condition);
    out.require(record.post_reveal_ok,
                "post-stage reveal failed at stage " +
                    std::to_string(record.stage));
    out.require(record.survivor_block.size() == record.vecs.size(),
                "one survivor per vector split expected");
  }
  out.require(state.survivor_blocks[1].size() == 2 &&
                  state.survivor_blocks[2].size() == 8,
              "survivor block sizes should be 2 and 8");
  out.require(prod_extends_through(chain[1], chain[0], 0), "leq_0 failed");
  out.require(prod_extends_through(chain[2], chain[1], 1), "leq_1 failed");

  NodeSet all;
  for (const NodeSet& block : state.survivor_blocks)
    all.insert(block.begin(), block.end());
  out.require(is_antichain(all), "survivor union is not an antichain");
  std::vector<NodeSet> avoid = {b0, b1, b2};
  for (std::size_t stage = 0; stage < state.survivor_blocks.size(); ++stage)
    for (std::size_t j = 0; j <= stage && j < avoid.size(); ++j)
      for (const Node& s : state.survivor_blocks[stage])
        out.require(!avoid[j].count(s), "survivor inside avoid set");
  for (const Node& s : all)
    out.require(truncation.count(s) > 0, "survivor outside the oracle set");

  try {
    FusedProduct fused = fuse(chain, 8);
    for (std::size_t n = 0; n < chain.size(); ++n)
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t m = 0; i + m <= n; ++m) {
          BinNodeSet expected = split_set(chain[n].at(i), m);
          auto it = fused.coords.find(i);
          BinNodeSet actual =
              it == fused.coords.end()
                  ? splits_in_truncation(
                        truncated_tree(PerfectTree::full(), 8), m)
                  : splits_in_truncation(it->second, m);
          out.require(actual == expected, "fused split disagreement");
        }
  } catch (const FusionError& err) {
    out.require(false,
                "fusion rejected the chain at level " +
                    std::to_string(err.index()));
  }
  return out;
}

Outcome amalgamation_identity() {
  Outcome out;
  std::mt19937_64 rng(1007);
  for (int round = 0; round < 50; ++round) {
    ProductCondition base;
    for (std::size_t coord = 0; coord < 3; ++coord)
      if (rng() % 2)
        base = base.with(coord, oracles::random_tree(rng, 1 + rng() % 3, 4));
    for (std::size_t n = 0; n <= 2; ++n)
      for (const SplitTuple& v : vec_splits(base, n)) {
        ProductCondition joined = amalgamate(base, restrict_vec(base, v), v);
        out.require(joined == base, "identity failed in stem form");
        for (std::size_t coord = 0; coord < 4; ++coord)
          out.require(oracles::to_mask(joined.at(coord)) ==
                          oracles::to_mask(base.at(coord)),
                      "identity failed under the bitset model");
      }
  }
  return out;
}

// --- CLI determinism ---------------------------------------------------

#ifndef OBRANCH_CLI
#define OBRANCH_CLI "obranch"
#endif

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Outcome cli_determinism() {
  Outcome out;
  fs::path dir = fs::temp_directory_path() / "obranch_acceptance";
  fs::create_directories(dir);
  write_file(dir / "family.json", R"({"members": [
    {"label": "Z", "kind": "zeros-then-one"},
    {"label": "H2", "kind": "hair-of-branch", "stem": "2", "period": "0"},
    {"label": "P", "kind": "pi-image-of", "member": "Z"}
  ]})");
  write_file(dir / "oracle.json", R"({"members": [
    {"label": "A", "kind": "level", "n": 9, "width": 2}
  ]})");
  write_file(dir / "blist.json", R"({"members": [
    {"label": "B0", "kind": "explicit", "nodes": ["2.0", "2.1"]},
    {"label": "B1", "kind": "explicit", "nodes": ["3.0", "3.1"]},
    {"label": "B2", "kind": "explicit", "nodes": ["4.0"]}
  ]})");

  std::string family = (dir / "family.json").string();
  std::string oracle = (dir / "oracle.json").string();
  std::string blist = (dir / "blist.json").string();
  std::vector<std::pair<std::string, std::string>> commands = {
      {"embed", "embed --node 2.1 --node e --decode 1.1.0 --decode 1"},
      {"family-check", "family-check --family " + family + " --depth 7"},
      {"cohen-hair", "cohen-hair --family " + family + " --depth 6"},
      {"measure-decay",
       "measure-decay --family " + family + " --member Z --depth 9"},
      {"measure-bound",
       "measure-bound --family " + family + " --member Z --depth 9"},
      {"bar-o", "bar-o --family " + family + " --depth 6"},
      {"sacks-run", "sacks-run --oracle " + oracle + " --b-list " + blist +
                        " --stages 2 --depth 10"},
      {"fuse-check", "fuse-check --oracle " + oracle + " --b-list " + blist +
                         " --stages 2 --depth 8 --oracle-depth 10"},
      {"self-test", "self-test --seed 3 --rounds 50"},
  };
  for (const auto& [name, arguments] : commands) {
    fs::path report = dir / (name + ".json");
    fs::path trace = dir / (name + "_trace.json");
    std::string command = std::string(OBRANCH_CLI) + " " + arguments +
                          " --output " + report.string();
    if (name == "sacks-run") command += " --trace " + trace.string();
    command += " > /dev/null 2>&1";
    std::array<std::string, 2> captured;
    for (int attempt = 0; attempt < 2; ++attempt) {
      int code = std::system(command.c_str());
      out.require(code != -1 && WEXITSTATUS(code) == 0,
                  name + " exited with status " +
                      std::to_string(WEXITSTATUS(code)));
      captured[attempt] = slurp(report);
      if (name == "sacks-run") captured[attempt] += slurp(trace);
    }
    out.require(!captured[0].empty(), name + " produced no output");
    out.require(captured[0] == captured[1], name + " output differs");
  }
  return out;
}

struct Criterion {
  std::string name;
  std::function<Outcome()> run;
  double seconds_limit;  // 0 = no limit stated
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"block-code round-trip and order preservation (exhaustive)",
       block_code_roundtrip_and_order, 1.0},
      {"off-branch chain verdict vs brute force (1000 random sets)",
       off_branch_verdict_vs_brute_force, 5.0},
      {"decomposition blocks partition the depth-6 grid (100 f-lists)",
       decomposition_partition, 0.0},
      {"column translation round-trip and multiplicity (200 antichains)",
       column_translation_roundtrip, 0.0},
      {"clopen algebra vs depth-6 bitset model (5000 cases)",
       measure_vs_bitset, 5.0},
      {"parent-cone bound and exact geometric decay", parent_bound_and_decay,
       0.0},
      {"generic hair confined below witnesses (500 runs)", generic_hair_bound,
       0.0},
      {"two-stage engine with fusion at depth 8", stage_engine_and_fusion,
       60.0},
      {"amalgamation identity on 50 random conditions", amalgamation_identity,
       0.0},
      {"CLI determinism across repeated runs", cli_determinism, 0.0},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    auto started = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& err) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + err.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      started)
            .count();
    if (criterion.seconds_limit > 0 && seconds > criterion.seconds_limit) {
      outcome.pass = false;
      outcome.detail = "over the " + std::to_string(criterion.seconds_limit) +
                       "s budget";
    }
    std::ostringstream line;
    line << (outcome.pass ? "[PASS] " : "[FAIL] ") << criterion.name;
    line << " (" << std::fixed;
    line.precision(2);
    line << seconds << "s)";
    if (!outcome.pass) line << ": " << outcome.detail;
    std::cout << line.str() << "\n";
    if (!outcome.pass) ++failures;
  }
  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                              : "ACCEPTANCE: " + std::to_string(failures) +
                                    " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
