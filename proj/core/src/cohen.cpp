#include "ob/cohen.hpp"

#include "ob/errors.hpp"

namespace ob {

bool in_dense_set(const Node& condition, const NodeSet& target) {
  for (const Node& element : target) {
    Node back;
    if (left_shift(element, back) && is_prefix(condition, back)) return false;
  }
  return true;
}

Node extend_into_dense(const Node& condition, const NodeSet& target) {
  unsigned bound = 0;
  for (const Node& element : target)
    for (unsigned c : element.coords())
      if (c + 1 > bound) bound = c + 1;
  Node extended = condition.child(bound);
  if (!in_dense_set(extended, target))
    throw Error(Errc::PreconditionViolated,
                "density witness failed for " + extended.str());
  return extended;
}

GenericRun run_generic(const Node& start,
                       const std::vector<DenseTarget>& targets) {
  GenericRun run;
  run.chain.push_back(start);
  Node current = start;
  for (const DenseTarget& target : targets) {
    current = extend_into_dense(current, target.nodes);
    run.chain.push_back(current);
    run.met.emplace_back(target.label, current.length());
  }
  run.stem = current;
  return run;
}

std::vector<HairRecord> hair_report(const GenericRun& run,
                                    const std::vector<DenseTarget>& targets) {
  if (targets.size() != run.met.size())
    throw Error(Errc::MismatchedTargets,
                "run met " + std::to_string(run.met.size()) +
                    " targets, report asked for " +
                    std::to_string(targets.size()));
  for (std::size_t i = 0; i < targets.size(); ++i)
    if (targets[i].label != run.met[i].first)
      throw Error(Errc::MismatchedTargets,
                  "target \"" + targets[i].label + "\" does not match run (\"" +
                      run.met[i].first + "\")");

  std::vector<Node> prefixes;
  for (std::size_t i = 0; i <= run.stem.length(); ++i)
    prefixes.push_back(run.stem.prefix(i));
  NodeSet hair = hair_of_chain(prefixes);

  std::vector<HairRecord> report;
  report.reserve(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    HairRecord record;
    record.label = targets[i].label;
    for (const Node& h : hair)
      if (targets[i].nodes.count(h)) record.intersection.insert(h);
    std::size_t witness_level = run.met[i].second;
    record.bound_ok = true;
    for (const Node& h : record.intersection)
      if (h.length() > witness_level) record.bound_ok = false;
    report.push_back(std::move(record));
  }
  return report;
}

}  // namespace ob
