#include "json_io.hpp"

#include <algorithm>
#include <set>

namespace topo {

using nlohmann::json;

Topology parse_space_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("space document must be a JSON object");
  if (!doc.contains("points") || !doc["points"].is_array())
    throw ParseError("space document needs a \"points\" array");
  if (!doc.contains("opens") || !doc["opens"].is_array())
    throw ParseError("space document needs an \"opens\" array");

  std::vector<std::string> names;
  for (const auto& p : doc["points"]) {
    if (!p.is_string() || p.get<std::string>().empty())
      throw ParseError("point names must be non-empty strings");
    names.push_back(p.get<std::string>());
  }
  const std::uint32_t n = static_cast<std::uint32_t>(names.size());
  if (n < 1 || n > kMaxPoints)
    throw ParseError("a space needs between 1 and 16 points, got " + std::to_string(n));
  std::set<std::string> unique_names(names.begin(), names.end());
  if (unique_names.size() != names.size()) throw ParseError("duplicate point name");

  auto name_bit = [&](const std::string& name) -> Mask {
    for (std::uint32_t i = 0; i < n; ++i) {
      if (names[i] == name) return Mask{1} << i;
    }
    throw ParseError("open set mentions unknown point \"" + name + "\"");
  };

  std::vector<Mask> opens;
  std::set<Mask> seen;
  for (const auto& open : doc["opens"]) {
    if (!open.is_array()) throw ParseError("each open set must be an array of point names");
    Mask m = 0;
    for (const auto& p : open) {
      if (!p.is_string()) throw ParseError("each open set must be an array of point names");
      const Mask bit = name_bit(p.get<std::string>());
      if (m & bit) throw ParseError("duplicate point \"" + p.get<std::string>() + "\" in an open set");
      m |= bit;
    }
    if (!seen.insert(m).second) throw ParseError("duplicate open set in the family");
    opens.push_back(m);
  }
  return validate_topology(n, std::move(opens), std::move(names));
}

Topology parse_space_text(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("malformed JSON");
  return parse_space_json(doc);
}

std::vector<std::string> mask_to_names(const Topology& t, Mask m) {
  std::vector<std::string> out;
  for (std::uint32_t i = 0; i < t.points(); ++i) {
    if (m & (Mask{1} << i)) out.push_back(t.point_names()[i]);
  }
  return out;
}

json space_to_json(const Topology& t) {
  json doc;
  doc["points"] = t.point_names();
  json opens = json::array();
  for (Mask m : t.opens()) opens.push_back(mask_to_names(t, m));
  doc["opens"] = std::move(opens);
  return doc;
}

json meekly_options_to_json(const MeeklyOptions& options) {
  return json{{"disjointness", std::string(disjointness_name(options.disjointness))},
              {"operands", std::string(operands_name(options.operands))}};
}

MeeklyOptions meekly_options_from_json(const json& doc) {
  MeeklyOptions options;
  if (doc.is_null()) return options;
  if (doc.contains("disjointness")) {
    auto d = disjointness_from_name(doc["disjointness"].get<std::string>());
    if (!d) throw ParseError("unknown meekly disjointness mode");
    options.disjointness = *d;
  }
  if (doc.contains("operands")) {
    auto o = operands_from_name(doc["operands"].get<std::string>());
    if (!o) throw ParseError("unknown meekly operand mode");
    options.operands = *o;
  }
  return options;
}

json verdict_to_json(const Topology& t, const AxiomVerdict& verdict) {
  json doc;
  doc["axiom"] = std::string(axiom_name(verdict.axiom));
  doc["holds"] = verdict.holds;
  doc["obligations"] = verdict.obligations;
  if (!verdict.witnesses.empty()) {
    json witnesses = json::array();
    for (const auto& w : verdict.witnesses) {
      witnesses.push_back(json{{"a", mask_to_names(t, w.a)},
                               {"b", mask_to_names(t, w.b)},
                               {"u", mask_to_names(t, w.u)},
                               {"v", mask_to_names(t, w.v)}});
    }
    doc["witnesses"] = std::move(witnesses);
  }
  if (verdict.refutation) {
    doc["refutation"] = json{{"a", mask_to_names(t, verdict.refutation->a)},
                             {"b", mask_to_names(t, verdict.refutation->b)},
                             {"exhausted", verdict.refutation->exhausted}};
  }
  if (!verdict.notes.empty()) doc["notes"] = verdict.notes;
  return doc;
}

json axiom_report_to_json(const Topology& t, const std::vector<AxiomVerdict>& verdicts,
                          const MeeklyOptions& options) {
  json doc;
  doc["space"] = space_to_json(t);
  doc["options"] = meekly_options_to_json(options);
  json list = json::array();
  for (const auto& v : verdicts) list.push_back(verdict_to_json(t, v));
  doc["verdicts"] = std::move(list);
  return doc;
}

json classification_to_json(const Space& space, const std::vector<SetClass>& classes) {
  const Topology& t = space.topology();
  json doc;
  doc["space"] = space_to_json(t);
  json class_names = json::array();
  for (SetClass c : classes) class_names.push_back(std::string(class_name(c)));
  doc["classes"] = std::move(class_names);
  json rows = json::array();
  for (Mask m = 0; m < space.mask_count(); ++m) {
    json cells;
    for (SetClass c : classes)
      cells[std::string(class_name(c))] = space.member(m, c);
    rows.push_back(json{{"subset", mask_to_names(t, m)}, {"cells", std::move(cells)}});
  }
  doc["rows"] = std::move(rows);
  return doc;
}

ImplicationQuery implication_query_from_json(const json& doc) {
  ImplicationQuery query;
  if (!doc.is_object()) throw ParseError("implication query must be a JSON object");
  if (!doc.contains("hypotheses") || !doc["hypotheses"].is_array())
    throw ParseError("implication query needs a \"hypotheses\" array");
  for (const auto& h : doc["hypotheses"]) {
    auto axiom = axiom_from_name(h.get<std::string>());
    if (!axiom) throw ParseError("unknown axiom \"" + h.get<std::string>() + "\"");
    query.hypotheses.push_back(*axiom);
  }
  if (!doc.contains("conclusion"))
    throw ParseError("implication query needs a \"conclusion\"");
  auto conclusion = axiom_from_name(doc["conclusion"].get<std::string>());
  if (!conclusion)
    throw ParseError("unknown axiom \"" + doc["conclusion"].get<std::string>() + "\"");
  query.conclusion = *conclusion;
  query.n_min = doc.value("n_min", 1u);
  query.n_max = doc.value("n_max", 4u);
  query.up_to_homeomorphism = doc.value("up_to_homeomorphism", false);
  query.jobs = doc.value("jobs", 1u);
  query.shard_index = doc.value("shard_index", 0u);
  query.shard_count = doc.value("shard_count", 1u);
  if (doc.contains("meekly")) query.options = meekly_options_from_json(doc["meekly"]);
  return query;
}

json implication_report_to_json(const ImplicationReport& report) {
  json doc;
  json hypotheses = json::array();
  for (Axiom h : report.query.hypotheses)
    hypotheses.push_back(std::string(axiom_name(h)));
  doc["hypotheses"] = std::move(hypotheses);
  doc["conclusion"] = std::string(axiom_name(report.query.conclusion));
  doc["n_min"] = report.query.n_min;
  doc["n_max"] = report.query.n_max;
  doc["up_to_homeomorphism"] = report.query.up_to_homeomorphism;
  doc["options"] = meekly_options_to_json(report.query.options);
  doc["checked_count"] = report.checked_count;
  if (report.counterexample) {
    const auto& cex = *report.counterexample;
    doc["outcome"] = "counterexample";
    json body;
    body["space"] = space_to_json(cex.topology);
    json hyp_verdicts = json::array();
    for (const auto& v : cex.hypothesis_verdicts)
      hyp_verdicts.push_back(verdict_to_json(cex.topology, v));
    body["hypothesis_verdicts"] = std::move(hyp_verdicts);
    body["conclusion_verdict"] = verdict_to_json(cex.topology, cex.conclusion_verdict);
    doc["counterexample"] = std::move(body);
  } else {
    doc["outcome"] = "verified-exhaustively";
  }
  return doc;
}

}  // namespace topo
