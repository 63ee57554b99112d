#include "ob/family_spec.hpp"

#include <map>

#include <json.hpp>

#include "ob/errors.hpp"

namespace ob {

namespace {

using nlohmann::json;

// Best-effort 1-based position of the first occurrence of the quoted text.
std::pair<std::size_t, std::size_t> locate(std::string_view text,
                                           const std::string& quoted) {
  std::size_t offset = text.find("\"" + quoted + "\"");
  if (offset == std::string_view::npos) return {0, 0};
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void fail_at(std::string_view text, const std::string& needle,
                          Errc code, const std::string& message) {
  auto [line, column] = locate(text, needle);
  throw SpecError(code, line, column,
                  message + " (line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ")");
}

std::string require_string(const json& member, const char* key,
                           std::string_view text, const std::string& label) {
  if (!member.contains(key) || !member[key].is_string())
    fail_at(text, label, Errc::ParseFailure,
            "member \"" + label + "\" needs a string \"" + key + "\"");
  return member[key].get<std::string>();
}

PeriodicBranch parse_branch(const json& member, std::string_view text,
                            const std::string& label) {
  Node stem = Node::parse(require_string(member, "stem", text, label));
  Node period = Node::parse(require_string(member, "period", text, label));
  if (period.empty())
    fail_at(text, label, Errc::ParseFailure,
            "member \"" + label + "\" has an empty period");
  return PeriodicBranch(std::move(stem), std::move(period));
}

}  // namespace

Family parse_family_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw SpecError(Errc::ParseFailure, 0, 0, err.what());
  }
  if (!doc.is_object() || !doc.contains("members") ||
      !doc["members"].is_array())
    throw SpecError(Errc::ParseFailure, 1, 1,
                    "family spec needs a top-level \"members\" array");

  Family family;
  std::map<std::string, std::size_t> seen;
  for (const json& member : doc["members"]) {
    if (!member.is_object() || !member.contains("label") ||
        !member["label"].is_string())
      throw SpecError(Errc::ParseFailure, 1, 1,
                      "every member needs a string \"label\"");
    std::string label = member["label"].get<std::string>();
    if (seen.count(label))
      fail_at(text, label, Errc::DuplicateLabel,
              "duplicate member label \"" + label + "\"");
    if (!member.contains("kind") || !member["kind"].is_string())
      fail_at(text, label, Errc::ParseFailure,
              "member \"" + label + "\" needs a string \"kind\"");
    std::string kind = member["kind"].get<std::string>();

    LazyNodeSet set;
    if (kind == "explicit") {
      if (!member.contains("nodes") || !member["nodes"].is_array())
        fail_at(text, label, Errc::ParseFailure,
                "member \"" + label + "\" needs a \"nodes\" array");
      NodeSet nodes;
      for (const json& literal : member["nodes"]) {
        if (!literal.is_string())
          fail_at(text, label, Errc::ParseFailure,
                  "member \"" + label + "\" has a non-string node literal");
        nodes.insert(Node::parse(literal.get<std::string>()));
      }
      set = explicit_set(std::move(nodes));
    } else if (kind == "level") {
      if (!member.contains("n") || !member["n"].is_number_unsigned())
        fail_at(text, label, Errc::ParseFailure,
                "member \"" + label + "\" needs a natural \"n\"");
      std::optional<std::size_t> width;
      if (member.contains("width")) {
        if (!member["width"].is_number_unsigned() ||
            member["width"].get<std::size_t>() == 0)
          fail_at(text, label, Errc::ParseFailure,
                  "member \"" + label + "\" has a bad \"width\"");
        width = member["width"].get<std::size_t>();
      }
      set = level_set(member["n"].get<std::size_t>(), width);
    } else if (kind == "branch-prefixes") {
      set = branch_prefix_set(parse_branch(member, text, label));
    } else if (kind == "hair-of-branch") {
      set = branch_hair_set(parse_branch(member, text, label));
    } else if (kind == "zeros-then-one") {
      set = zeros_then_one_set();
    } else if (kind == "pi-image-of") {
      std::string target = require_string(member, "member", text, label);
      auto it = seen.find(target);
      if (it == seen.end())
        fail_at(text, label, Errc::ParseFailure,
                "member \"" + label + "\" references unknown member \"" +
                    target + "\"");
      set = block_image_set(family.members[it->second].set);
    } else {
      fail_at(text, kind, Errc::ParseFailure,
              "unknown member kind \"" + kind + "\"");
    }

    seen.emplace(label, family.members.size());
    family.members.push_back({std::move(label), std::move(set)});
  }
  return family;
}

}  // namespace ob
