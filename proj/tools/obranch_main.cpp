// Command-line front end: family-spec driven checks and deterministic
// JSON reports. Identical inputs produce byte-identical output; every
// numeric value is exact (dyadics render as "p/2^k").
//
// Exit status: 0 clean, 1 when a run found violations, 2 on input errors.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ob/blockcode.hpp"
#include "ob/branch.hpp"
#include "ob/clopen.hpp"
#include "ob/cohen.hpp"
#include "ob/errors.hpp"
#include "ob/families.hpp"
#include "ob/family_spec.hpp"
#include "ob/lazy.hpp"
#include "ob/sacks.hpp"

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ob::Error(ob::Errc::InvalidInput, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ob::Error(ob::Errc::InvalidInput, "cannot write " + path);
  out << text;
}

ob::Family load_family(const std::string& path) {
  return ob::parse_family_spec(read_file(path));
}

json node_literals(const ob::NodeSet& nodes) {
  json out = json::array();
  for (const ob::Node& node : nodes) out.push_back(node.str());
  return out;
}

json overlap_json(const ob::OverlapReport& report) {
  json out;
  out["count"] = report.overlap_count;
  out["depth"] = report.depth_checked;
  out["verdict"] = ob::verdict_name(report.verdict);
  if (report.last_hit_level)
    out["last_hit_level"] = *report.last_hit_level;
  else
    out["last_hit_level"] = nullptr;
  out["chain_length"] = report.chain_length;
  return out;
}

struct Report {
  json records = json::array();
  std::size_t checks_run = 0;
  std::size_t violations = 0;

  int emit(const std::string& command, json config,
           const std::string& output_path) const {
    json envelope;
    envelope["command"] = command;
    envelope["config"] = std::move(config);
    envelope["records"] = records;
    envelope["summary"] = {{"checks_run", checks_run},
                           {"violations", violations}};
    write_output(output_path, envelope.dump(2) + "\n");
    return violations == 0 ? 0 : 1;
  }
};

// Enumerated member as a binary stem list, shortlex order.
std::vector<ob::BinNode> binary_enumeration(const ob::FamilyMember& member,
                                            std::size_t depth) {
  std::vector<ob::BinNode> out;
  for (const ob::Node& node : member.set.enumerate_upto(depth)) {
    if (!ob::is_binary(node))
      throw ob::Error(ob::Errc::InvalidInput,
                      "member \"" + member.label +
                          "\" has the non-binary node " + node.str());
    out.push_back(ob::to_binary(node));
  }
  return out;
}

const ob::FamilyMember& pick_member(const ob::Family& family,
                                    const std::string& label) {
  if (family.members.empty())
    throw ob::Error(ob::Errc::InvalidInput, "family spec has no members");
  if (label.empty()) return family.members.front();
  const ob::FamilyMember* member = family.find(label);
  if (!member)
    throw ob::Error(ob::Errc::InvalidInput,
                    "no member labeled \"" + label + "\"");
  return *member;
}

// --- subcommand bodies ------------------------------------------------------

int run_embed(const std::vector<std::string>& encode,
              const std::vector<std::string>& decode,
              const std::string& output) {
  if (encode.empty() && decode.empty())
    throw ob::Error(ob::Errc::InvalidInput,
                    "embed needs at least one --node or --decode");
  Report report;
  for (const std::string& literal : encode) {
    ob::Node node = ob::Node::parse(literal);
    ob::BinNode image = ob::block_encode(node);
    bool ok = ob::block_decode(image) == node;
    report.records.push_back({{"item", "encode"},
                              {"node", node.str()},
                              {"image", image.str()},
                              {"roundtrip_ok", ok}});
    ++report.checks_run;
    if (!ok) ++report.violations;
  }
  for (const std::string& literal : decode) {
    ob::BinNode image = ob::BinNode::parse(literal);
    json record = {{"item", "decode"}, {"image", image.str()}};
    try {
      record["node"] = ob::block_decode(image).str();
      record["in_image"] = true;
    } catch (const ob::Error& err) {
      if (err.code() != ob::Errc::NotInImage) throw;
      record["in_image"] = false;
    }
    report.records.push_back(std::move(record));
    ++report.checks_run;
  }
  json config = {{"nodes", encode}, {"decodes", decode}};
  return report.emit("embed", std::move(config), output);
}

int run_family_check(const std::string& family_path, std::size_t depth,
                     std::size_t chain_threshold, const std::string& output) {
  ob::Family family = load_family(family_path);
  Report report;
  for (const ob::FamilyMember& member : family.members) {
    ob::OverlapReport off =
        ob::off_branch_report(member.set, depth, chain_threshold);
    report.records.push_back({{"item", "off-branch"},
                              {"label", member.label},
                              {"report", overlap_json(off)}});
    ++report.checks_run;
    if (off.verdict != ob::Verdict::ConsistentWithAd) ++report.violations;
  }
  for (std::size_t i = 0; i < family.members.size(); ++i)
    for (std::size_t j = i + 1; j < family.members.size(); ++j) {
      ob::OverlapReport pair =
          ob::ad_report(family.members[i].set, family.members[j].set, depth);
      report.records.push_back({{"item", "almost-disjoint"},
                                {"left", family.members[i].label},
                                {"right", family.members[j].label},
                                {"report", overlap_json(pair)}});
      ++report.checks_run;
      if (pair.verdict != ob::Verdict::ConsistentWithAd) ++report.violations;
    }
  json config = {{"family", family_path},
                 {"depth", depth},
                 {"chain_threshold", chain_threshold}};
  return report.emit("family-check", std::move(config), output);
}

int run_cohen_hair(const std::string& family_path, std::size_t depth,
                   const std::string& start_literal,
                   const std::string& output) {
  ob::Family family = load_family(family_path);
  ob::Node start = ob::Node::parse(start_literal);
  std::vector<ob::DenseTarget> targets;
  for (const ob::FamilyMember& member : family.members)
    targets.push_back({member.label, member.set.enumerate_upto(depth)});

  ob::GenericRun run = ob::run_generic(start, targets);
  Report report;
  report.records.push_back(
      {{"item", "run"}, {"start", start.str()}, {"stem", run.stem.str()}});
  auto records = ob::hair_report(run, targets);
  for (std::size_t i = 0; i < records.size(); ++i) {
    report.records.push_back(
        {{"item", "target"},
         {"label", records[i].label},
         {"witness_level", run.met[i].second},
         {"intersection", node_literals(records[i].intersection)},
         {"bound_ok", records[i].bound_ok}});
    ++report.checks_run;
    if (!records[i].bound_ok) ++report.violations;
  }
  json config = {{"family", family_path},
                 {"depth", depth},
                 {"start", start_literal}};
  return report.emit("cohen-hair", std::move(config), output);
}

int run_measure(bool bound_mode, const std::string& family_path,
                const std::string& member_label, std::size_t depth,
                std::size_t window, const std::string& output) {
  ob::Family family = load_family(family_path);
  const ob::FamilyMember& member = pick_member(family, member_label);
  std::vector<ob::BinNode> f = binary_enumeration(member, depth);
  std::size_t N = window == 0 ? f.size() : window;
  if (N > f.size())
    throw ob::Error(ob::Errc::WindowOutOfRange,
                    "window " + std::to_string(N) + " over " +
                        std::to_string(f.size()) + " enumerated stems");

  Report report;
  for (std::size_t n = 0; n <= N; ++n) {
    ob::ClopenSet window_set = ob::window_union(f, n, N);
    json row = {{"n", n},
                {"stems", window_set.stems().size()},
                {"measure", window_set.measure().str()}};
    if (bound_mode) {
      ob::WindowBound bound = ob::parent_window_bound(f, n, N);
      row["lhs"] = bound.lhs.str();
      row["rhs"] = bound.rhs.str();
      row["holds"] = bound.holds;
      if (!bound.holds) ++report.violations;
    }
    report.records.push_back(std::move(row));
    ++report.checks_run;
  }
  json config = {{"family", family_path},
                 {"member", member.label},
                 {"depth", depth},
                 {"window", N}};
  return report.emit(bound_mode ? "measure-bound" : "measure-decay",
                     std::move(config), output);
}

int run_bar_o(const std::string& family_path, std::size_t depth,
              std::size_t branch_count, const std::string& output) {
  ob::Family family = load_family(family_path);
  std::size_t count = branch_count == 0 ? depth : branch_count;
  std::vector<ob::PeriodicBranch> branches = ob::default_branches(count);

  Report report;
  for (const ob::FamilyMember& member : family.members) {
    ob::PairSet pairs = ob::to_branch_columns(member.set, branches, depth);
    json pair_list = json::array();
    for (const auto& [n, i] : pairs) pair_list.push_back({n, i});
    std::size_t multiplicity = ob::column_multiplicity(pairs);
    bool antichain = ob::is_antichain(member.set.enumerate_upto(depth));

    ob::NodeSet expected;
    for (std::size_t n = 0; n < count; ++n)
      for (std::size_t i = 1; i < depth; ++i)
        if (member.set.contains(branches[n].node_at(i)))
          expected.insert(branches[n].node_at(i));
    ob::NodeSet back = ob::from_branch_columns(pairs, branches);
    back.erase(ob::Node{});
    bool roundtrip_ok = back == expected;

    report.records.push_back({{"item", "member"},
                              {"label", member.label},
                              {"pairs", pair_list},
                              {"column_multiplicity", multiplicity},
                              {"antichain", antichain},
                              {"roundtrip_ok", roundtrip_ok}});
    report.checks_run += 2;
    if (antichain && multiplicity > 1) ++report.violations;
    if (!roundtrip_ok) ++report.violations;
  }
  json config = {{"family", family_path},
                 {"depth", depth},
                 {"branches", count}};
  return report.emit("bar-o", std::move(config), output);
}

json stage_record_json(const ob::StageRecord& record) {
  json out;
  out["stage"] = record.stage;
  json vecs = json::array();
  for (const ob::SplitTuple& v : record.vecs) {
    json parts = json::array();
    for (const ob::BinNode& part : v.parts) parts.push_back(part.str());
    vecs.push_back(std::move(parts));
  }
  out["vec_splits"] = std::move(vecs);
  json blocks = json::array();
  json rounds = json::array();
  json survivors = json::array();
  for (const ob::RowRecord& row : record.rows) {
    blocks.push_back(node_literals(row.block));
    json row_rounds = json::array();
    for (const ob::PairingRound& round : row.rounds) {
      json at = json::array();
      for (const ob::BinNode& part : round.at.parts) at.push_back(part.str());
      json decisions = json::array();
      for (const ob::PairDecision& decision : round.decisions)
        decisions.push_back({{"chosen", decision.kept.str()},
                             {"rejected", decision.dropped.str()}});
      row_rounds.push_back(
          {{"at", std::move(at)}, {"decisions", std::move(decisions)}});
    }
    rounds.push_back(std::move(row_rounds));
    survivors.push_back(row.survivor.str());
  }
  out["a_sets"] = std::move(blocks);
  out["pairing_rounds"] = std::move(rounds);
  out["survivors"] = std::move(survivors);
  out["S_block"] = node_literals(record.survivor_block);
  out["leq_n_check"] = record.extends_check;
  out["post_reveal_ok"] = record.post_reveal_ok;
  return out;
}

std::vector<ob::NodeSet> load_avoid_list(const std::string& path,
                                         std::size_t depth) {
  std::vector<ob::NodeSet> out;
  if (path.empty()) return out;
  for (const ob::FamilyMember& member : load_family(path).members)
    out.push_back(member.set.enumerate_upto(depth));
  return out;
}

struct StageRunOutcome {
  std::vector<ob::ProductCondition> chain;
  std::vector<ob::StageRecord> records;
  ob::NodeSet oracle_truncation;
};

StageRunOutcome run_stages(const std::string& oracle_path,
                           const std::string& oracle_member,
                           const std::string& avoid_path, std::size_t stages,
                           std::size_t depth, std::size_t probe_count) {
  ob::Family oracle_family = load_family(oracle_path);
  const ob::FamilyMember& member = pick_member(oracle_family, oracle_member);
  ob::GroundSetOracle oracle(member.set, depth);
  ob::StageOptions options;
  options.probe_count = probe_count;

  StageRunOutcome outcome;
  outcome.oracle_truncation = member.set.enumerate_upto(depth);
  ob::StageState state = ob::initial_state(
      ob::ProductCondition{}, load_avoid_list(avoid_path, depth));
  outcome.chain.push_back(state.condition);
  for (std::size_t stage = 0; stage < stages; ++stage) {
    ob::StageRecord record;
    state = ob::stage_step(state, oracle, options, &record);
    outcome.chain.push_back(state.condition);
    outcome.records.push_back(std::move(record));
  }
  return outcome;
}

int run_sacks(const std::string& oracle_path, const std::string& oracle_member,
              const std::string& avoid_path, std::size_t stages,
              std::size_t depth, std::size_t probe_count,
              const std::string& trace_path, const std::string& output) {
  StageRunOutcome outcome = run_stages(oracle_path, oracle_member, avoid_path,
                                       stages, depth, probe_count);
  if (!trace_path.empty()) {
    json trace = json::array();
    for (const ob::StageRecord& record : outcome.records)
      trace.push_back(stage_record_json(record));
    write_output(trace_path, trace.dump(2) + "\n");
  }

  std::vector<ob::NodeSet> avoid = load_avoid_list(avoid_path, depth);
  Report report;
  ob::NodeSet all_survivors;
  for (const ob::StageRecord& record : outcome.records) {
    all_survivors.insert(record.survivor_block.begin(),
                         record.survivor_block.end());

    bool survivors_in_oracle = true;
    for (const ob::Node& s : record.survivor_block)
      if (!outcome.oracle_truncation.count(s)) survivors_in_oracle = false;
    bool avoid_disjoint = true;
    for (std::size_t i = 0; i < avoid.size() && i <= record.stage; ++i)
      for (const ob::Node& s : record.survivor_block)
        if (avoid[i].count(s)) avoid_disjoint = false;

    report.records.push_back(
        {{"item", "stage"},
         {"stage", record.stage},
         {"vec_count", record.vecs.size()},
         {"survivors", node_literals(record.survivor_block)},
         {"leq_n_check", record.extends_check},
         {"post_reveal_ok", record.post_reveal_ok},
         {"survivors_in_oracle", survivors_in_oracle},
         {"avoid_disjoint", avoid_disjoint}});
    report.checks_run += 4;
    if (!record.extends_check) ++report.violations;
    if (!record.post_reveal_ok) ++report.violations;
    if (!survivors_in_oracle) ++report.violations;
    if (!avoid_disjoint) ++report.violations;
  }
  bool antichain = ob::is_antichain(all_survivors);
  report.records.push_back({{"item", "survivors"},
                            {"all", node_literals(all_survivors)},
                            {"antichain", antichain}});
  ++report.checks_run;
  if (!antichain) ++report.violations;

  json config = {{"oracle", oracle_path}, {"member", oracle_member},
                 {"b_list", avoid_path},  {"stages", stages},
                 {"depth", depth},        {"probe_count", probe_count},
                 {"trace", trace_path}};
  return report.emit("sacks-run", std::move(config), output);
}

int run_fuse_check(const std::string& oracle_path,
                   const std::string& oracle_member,
                   const std::string& avoid_path, std::size_t stages,
                   std::size_t depth, std::size_t oracle_depth,
                   std::size_t probe_count, const std::string& output) {
  StageRunOutcome outcome =
      run_stages(oracle_path, oracle_member, avoid_path, stages,
                 oracle_depth == 0 ? depth : oracle_depth, probe_count);
  ob::FusedProduct fused = ob::fuse(outcome.chain, depth);

  Report report;
  for (std::size_t n = 0; n < outcome.chain.size(); ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t m = 0; i + m <= n; ++m) {
        ob::BinNodeSet expected = ob::split_set(outcome.chain[n].at(i), m);
        bool decided = true;
        for (const ob::BinNode& s : expected)
          if (s.length() + 1 >= depth) decided = false;
        if (!decided) continue;
        auto it = fused.coords.find(i);
        ob::BinNodeSet actual =
            it == fused.coords.end()
                ? ob::splits_in_truncation(
                      ob::truncated_tree(ob::PerfectTree::full(), depth), m)
                : ob::splits_in_truncation(it->second, m);
        bool ok = actual == expected;
        report.records.push_back({{"item", "split-agreement"},
                                  {"chain_index", n},
                                  {"coordinate", i},
                                  {"split_level", m},
                                  {"ok", ok}});
        ++report.checks_run;
        if (!ok) ++report.violations;
      }
    }
  }
  for (const auto& [coord, tree] : fused.coords) {
    bool ok = ob::perfect_within_depth(tree, depth);
    report.records.push_back({{"item", "perfect-within-depth"},
                              {"coordinate", coord},
                              {"nodes", tree.size()},
                              {"ok", ok}});
    ++report.checks_run;
    if (!ok) ++report.violations;
  }

  json config = {{"oracle", oracle_path},
                 {"member", oracle_member},
                 {"b_list", avoid_path},
                 {"stages", stages},
                 {"depth", depth},
                 {"oracle_depth", oracle_depth == 0 ? depth : oracle_depth},
                 {"probe_count", probe_count}};
  return report.emit("fuse-check", std::move(config), output);
}

int run_self_test(std::uint64_t seed, std::size_t rounds,
                  const std::string& output) {
  std::mt19937_64 rng(seed);
  Report report;
  auto record_check = [&](const char* name, std::size_t failures) {
    report.records.push_back(
        {{"item", name}, {"rounds", rounds}, {"failures", failures}});
    ++report.checks_run;
    report.violations += failures;
  };

  auto random_node = [&rng](std::size_t max_len, unsigned bound) {
    std::vector<unsigned> coords(rng() % (max_len + 1));
    for (unsigned& c : coords) c = static_cast<unsigned>(rng() % bound);
    return ob::Node(std::move(coords));
  };

  std::size_t failures = 0;
  for (std::size_t i = 0; i < rounds; ++i) {
    ob::Node a = random_node(5, 5);
    ob::Node b = random_node(5, 5);
    if (ob::block_decode(ob::block_encode(a)) != a) ++failures;
    if (ob::is_prefix(a, b) !=
        ob::is_prefix(ob::block_encode(a), ob::block_encode(b)))
      ++failures;
  }
  record_check("blockcode-roundtrip-order", failures);

  failures = 0;
  for (std::size_t i = 0; i < rounds; ++i) {
    ob::NodeSet s;
    for (int k = 0; k < 10; ++k) s.insert(random_node(5, 3));
    ob::NodeSet mins = ob::minimal_elements(s);
    if (!ob::is_antichain(mins)) ++failures;
    for (const ob::Node& x : s) {
      bool covered = false;
      for (const ob::Node& m : mins) covered = covered || ob::is_prefix(m, x);
      if (!covered) ++failures;
    }
  }
  record_check("minimal-elements-antichain-cover", failures);

  failures = 0;
  for (std::size_t i = 0; i < rounds; ++i) {
    auto random_clopen = [&] {
      std::vector<ob::BinNode> stems;
      for (int k = 0; k < 4; ++k) {
        std::vector<unsigned> bits(rng() % 6);
        for (unsigned& bit : bits) bit = static_cast<unsigned>(rng() % 2);
        stems.push_back(ob::BinNode(std::move(bits)));
      }
      return ob::ClopenSet::from_stems(std::move(stems));
    };
    ob::ClopenSet a = random_clopen();
    ob::ClopenSet b = random_clopen();
    if (!(a.measure() + b.measure() ==
          ob::unite(a, b).measure() + ob::intersect(a, b).measure()))
      ++failures;
    if (!(ob::subtract(ob::ClopenSet::whole(), a).measure() ==
          ob::Dyadic::one() - a.measure()))
      ++failures;
  }
  record_check("measure-inclusion-exclusion", failures);

  failures = 0;
  for (std::size_t i = 0; i < rounds; ++i) {
    ob::NodeSet target;
    for (int k = 0; k < 12; ++k) target.insert(random_node(4, 8));
    ob::Node condition = random_node(3, 8);
    if (!ob::in_dense_set(ob::extend_into_dense(condition, target), target))
      ++failures;
  }
  record_check("density-witness", failures);

  failures = 0;
  for (std::size_t i = 0; i < rounds / 10 + 1; ++i) {
    ob::ProductCondition base;
    std::vector<unsigned> bits(rng() % 3);
    for (unsigned& bit : bits) bit = static_cast<unsigned>(rng() % 2);
    base = base.with(0, ob::PerfectTree::from_stems({ob::BinNode(bits)}));
    for (const ob::SplitTuple& v : ob::vec_splits(base, 1))
      if (!(ob::amalgamate(base, ob::restrict_vec(base, v), v) == base))
        ++failures;
  }
  record_check("amalgamation-identity", failures);

  json config = {{"seed", seed}, {"rounds", rounds}};
  return report.emit("self-test", std::move(config), output);
}

// Folds the spaced command forms ("measure decay", "cohen hair", "sacks run")
// into the hyphenated subcommand names.
std::vector<std::string> normalize_args(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.size() >= 2) {
    const std::string& group = args[0];
    const std::string& sub = args[1];
    bool merge = (group == "measure" && (sub == "decay" || sub == "bound")) ||
                 (group == "cohen" && sub == "hair") ||
                 (group == "sacks" && sub == "run");
    if (merge) {
      args[0] = group + "-" + sub;
      args.erase(args.begin() + 1);
    }
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"off-branch almost disjoint family laboratory", "obranch"};
  app.require_subcommand(1);

  std::string output;
  std::size_t depth = 6;
  std::uint64_t seed = 0;

  std::vector<std::string> embed_nodes, embed_decodes;
  CLI::App* embed =
      app.add_subcommand("embed", "Unary-block code between the trees");
  embed->add_option("--node", embed_nodes, "node literal to encode");
  embed->add_option("--decode", embed_decodes, "binary literal to decode");
  embed->add_option("--output", output, "report path (default stdout)");

  std::string family_path;
  std::size_t chain_threshold = 4;
  CLI::App* family_check = app.add_subcommand(
      "family-check", "Off-branch and almost-disjoint evidence for a family");
  family_check->add_option("--family", family_path, "family spec path")
      ->required();
  family_check->add_option("--depth", depth, "probe depth (default 6)")
      ->check(CLI::PositiveNumber);
  family_check->add_option("--chain-threshold", chain_threshold,
                           "chain length that counts against off-branch");
  family_check->add_option("--output", output, "report path");

  std::string start_literal = "e";
  CLI::App* cohen_hair = app.add_subcommand(
      "cohen-hair", "Generic run meeting every member's dense set");
  cohen_hair->add_option("--family", family_path, "family spec path")
      ->required();
  cohen_hair->add_option("--depth", depth, "truncation depth (default 6)")
      ->check(CLI::PositiveNumber);
  cohen_hair->add_option("--start", start_literal, "starting condition");
  cohen_hair->add_option("--output", output, "report path");

  std::string member_label;
  std::size_t window = 0;
  CLI::App* measure_decay = app.add_subcommand(
      "measure-decay", "Tail measures of a binary member's cone unions");
  measure_decay->add_option("--family", family_path, "family spec path")
      ->required();
  measure_decay->add_option("--member", member_label,
                            "member label (default: first)");
  measure_decay->add_option("--depth", depth, "enumeration depth (default 6)")
      ->check(CLI::PositiveNumber);
  measure_decay->add_option("--window", window,
                            "window end (default: all stems)");
  measure_decay->add_option("--output", output, "report path");

  CLI::App* measure_bound = app.add_subcommand(
      "measure-bound", "Parent-cone bound over shrinking windows");
  measure_bound->add_option("--family", family_path, "family spec path")
      ->required();
  measure_bound->add_option("--member", member_label,
                            "member label (default: first)");
  measure_bound->add_option("--depth", depth, "enumeration depth (default 6)")
      ->check(CLI::PositiveNumber);
  measure_bound->add_option("--window", window,
                            "window end (default: all stems)");
  measure_bound->add_option("--output", output, "report path");

  std::size_t branch_count = 0;
  CLI::App* bar_o = app.add_subcommand(
      "bar-o", "Column translation of members against canonical branches");
  bar_o->add_option("--family", family_path, "family spec path")->required();
  bar_o->add_option("--depth", depth, "probe depth (default 6)")
      ->check(CLI::PositiveNumber);
  bar_o->add_option("--branches", branch_count,
                    "how many canonical branches (default: depth)");
  bar_o->add_option("--output", output, "report path");

  std::string oracle_path, oracle_member, avoid_path, trace_path;
  std::size_t stages = 1;
  std::size_t probe_count = 4;
  std::size_t oracle_depth = 0;
  CLI::App* sacks_run =
      app.add_subcommand("sacks-run", "Stage construction over a name oracle");
  sacks_run->add_option("--oracle", oracle_path, "oracle family spec path")
      ->required();
  sacks_run->add_option("--oracle-member", oracle_member,
                        "oracle member label (default: first)");
  sacks_run->add_option("--b-list", avoid_path, "avoid-list family spec path");
  sacks_run->add_option("--stages", stages, "stages to run")->required();
  sacks_run->add_option("--depth", depth, "oracle probe depth (default 6)")
      ->check(CLI::PositiveNumber);
  sacks_run->add_option("--probe-count", probe_count,
                        "reveals per pairing certificate");
  sacks_run->add_option("--trace", trace_path, "stage trace path");
  sacks_run->add_option("--output", output, "report path");

  CLI::App* fuse_check = app.add_subcommand(
      "fuse-check", "Truncated fusion of a stage chain, with split agreement");
  fuse_check->add_option("--oracle", oracle_path, "oracle family spec path")
      ->required();
  fuse_check->add_option("--oracle-member", oracle_member,
                         "oracle member label (default: first)");
  fuse_check->add_option("--b-list", avoid_path, "avoid-list family spec path");
  fuse_check->add_option("--stages", stages, "stages to run")->required();
  fuse_check->add_option("--depth", depth, "fusion depth (default 6)")
      ->check(CLI::PositiveNumber);
  fuse_check->add_option("--oracle-depth", oracle_depth,
                         "oracle probe depth (default: fusion depth)");
  fuse_check->add_option("--probe-count", probe_count,
                         "reveals per pairing certificate");
  fuse_check->add_option("--output", output, "report path");

  std::size_t self_rounds = 100;
  CLI::App* self_test =
      app.add_subcommand("self-test", "Randomized invariant bundle");
  self_test->group("");  // hidden
  self_test->add_option("--seed", seed, "rng seed (default 0)");
  self_test->add_option("--rounds", self_rounds, "rounds per property");
  self_test->add_option("--output", output, "report path");

  try {
    std::vector<std::string> args = normalize_args(argc, argv);
    std::vector<const char*> raw;
    raw.push_back("obranch");
    for (const std::string& arg : args) raw.push_back(arg.c_str());
    app.parse(static_cast<int>(raw.size()),
              const_cast<char**>(raw.data()));
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (embed->parsed()) return run_embed(embed_nodes, embed_decodes, output);
    if (family_check->parsed())
      return run_family_check(family_path, depth, chain_threshold, output);
    if (cohen_hair->parsed())
      return run_cohen_hair(family_path, depth, start_literal, output);
    if (measure_decay->parsed())
      return run_measure(false, family_path, member_label, depth, window,
                         output);
    if (measure_bound->parsed())
      return run_measure(true, family_path, member_label, depth, window,
                         output);
    if (bar_o->parsed())
      return run_bar_o(family_path, depth, branch_count, output);
    if (sacks_run->parsed())
      return run_sacks(oracle_path, oracle_member, avoid_path, stages, depth,
                       probe_count, trace_path, output);
    if (fuse_check->parsed())
      return run_fuse_check(oracle_path, oracle_member, avoid_path, stages,
                            depth, oracle_depth, probe_count, output);
    if (self_test->parsed()) return run_self_test(seed, self_rounds, output);
  } catch (const ob::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
