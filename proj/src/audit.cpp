#include "audit.hpp"

#include <map>
#include <stdexcept>

#include "json.hpp"
#include "json_io.hpp"

namespace topo {

using nlohmann::json;

namespace {

constexpr std::string_view kTargetNames[] = {
    "section-3-1",
    "section-6-4",
    "example-1-families",
    "meekly-examples",
};

Mask names_to_mask(const Topology& t, const json& names) {
  Mask m = 0;
  for (const auto& name : names) {
    bool found = false;
    for (std::uint32_t i = 0; i < t.points(); ++i) {
      if (t.point_names()[i] == name.get<std::string>()) {
        m |= Mask{1} << i;
        found = true;
        break;
      }
    }
    if (!found)
      throw ParseError("audit claim mentions unknown point \"" +
                       name.get<std::string>() + "\"");
  }
  return m;
}

MeeklyOptions probe_options(const json& probe) {
  MeeklyOptions options;
  if (probe.contains("disjointness")) {
    auto d = disjointness_from_name(probe["disjointness"].get<std::string>());
    if (!d) throw ParseError("audit claim has an unknown disjointness mode");
    options.disjointness = *d;
  }
  if (probe.contains("operands")) {
    auto o = operands_from_name(probe["operands"].get<std::string>());
    if (!o) throw ParseError("audit claim has an unknown operand mode");
    options.operands = *o;
  }
  return options;
}

bool evaluate_probe(Space& space, const json& probe) {
  const std::string kind = probe.at("kind").get<std::string>();
  const Topology& t = space.topology();
  if (kind == "class-member") {
    auto cls = class_from_name(probe.at("class").get<std::string>());
    if (!cls) throw ParseError("audit claim names an unknown class");
    return space.member(names_to_mask(t, probe.at("subset")), *cls);
  }
  if (kind == "axiom-holds") {
    auto axiom = axiom_from_name(probe.at("axiom").get<std::string>());
    if (!axiom) throw ParseError("audit claim names an unknown axiom");
    return satisfies(space, *axiom, probe_options(probe));
  }
  if (kind == "density-equals") {
    const Mask u = names_to_mask(t, probe.at("open"));
    const Mask a = names_to_mask(t, probe.at("set"));
    return space.closure(u & a) == a;
  }
  if (kind == "sets-disjoint") {
    return (names_to_mask(t, probe.at("u")) & names_to_mask(t, probe.at("v"))) == 0;
  }
  if (kind == "meekly-pair-separable") {
    const Mask a = names_to_mask(t, probe.at("a"));
    const Mask b = names_to_mask(t, probe.at("b"));
    const bool cl_disjoint = probe_options(probe).disjointness ==
                             MeeklyDisjointness::ClosureDisjoint;
    for (Mask u : t.opens()) {
      if (!subset_of(a, space.closure(u & a))) continue;
      for (Mask v : t.opens()) {
        if (cl_disjoint ? ((space.closure(u) & space.closure(v)) != 0)
                        : ((u & v) != 0))
          continue;
        if (subset_of(b, space.closure(v & b))) return true;
      }
    }
    return false;
  }
  if (kind == "listed-complement-member") {
    // Paper-internal consistency: is the complement of the subset a member
    // of the other listed family?
    const Mask subset = names_to_mask(t, probe.at("subset"));
    const Mask complement = t.full() & ~subset;
    for (const auto& member : probe.at("family")) {
      if (names_to_mask(t, member) == complement) return true;
    }
    return false;
  }
  throw ParseError("audit claim has an unknown probe kind \"" + kind + "\"");
}

}  // namespace

std::string_view audit_target_name(AuditTarget target) {
  return kTargetNames[static_cast<std::size_t>(target)];
}

std::optional<AuditTarget> audit_target_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kAuditTargetCount; ++i) {
    if (kTargetNames[i] == name) return static_cast<AuditTarget>(i);
  }
  return std::nullopt;
}

std::size_t AuditReport::divergences() const {
  std::size_t count = 0;
  for (const auto& cell : cells) count += cell.agree ? 0 : 1;
  return count;
}

std::vector<AuditReport> audit_paper(const std::vector<AuditTarget>& targets,
                                     const std::string& fixture_json) {
  const std::string& text = fixture_json.empty() ? default_audit_claims() : fixture_json;
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("audit claim file is not valid JSON");

  std::map<std::string, Space> spaces;
  for (const auto& [name, spec] : doc.at("spaces").items()) {
    spaces.emplace(name, Space{parse_space_json(spec)});
  }

  std::vector<AuditReport> reports;
  for (AuditTarget target : targets) {
    AuditReport report;
    report.target = target;
    for (const auto& claim : doc.at("claims")) {
      if (claim.at("target").get<std::string>() != audit_target_name(target)) continue;
      const json& probe = claim.at("probe");
      auto it = spaces.find(probe.at("space").get<std::string>());
      if (it == spaces.end())
        throw ParseError("audit claim references an undefined space");
      AuditCell cell;
      cell.location = claim.at("location").get<std::string>();
      cell.paper_value = claim.at("paper_value").get<bool>();
      cell.citation = claim.at("citation").get<std::string>();
      cell.oracle_value = evaluate_probe(it->second, probe);
      cell.agree = cell.paper_value == cell.oracle_value;
      report.cells.push_back(std::move(cell));
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace topo
