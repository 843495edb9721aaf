#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "axioms.hpp"
#include "space.hpp"
#include "verify.hpp"

namespace topo {

/// Parses the space format {"points": ["k","l","m"], "opens": [[], ["k"], ...]}.
/// Opens are arrays of point names; order is irrelevant; duplicate points,
/// duplicate opens and unknown names are rejected. Throws ParseError for
/// format problems and ValidationError for open-set-axiom failures.
Topology parse_space_json(const nlohmann::json& doc);
Topology parse_space_text(const std::string& text);

nlohmann::json space_to_json(const Topology& topology);

std::vector<std::string> mask_to_names(const Topology& topology, Mask m);

nlohmann::json verdict_to_json(const Topology& topology, const AxiomVerdict& verdict);

nlohmann::json axiom_report_to_json(const Topology& topology,
                                    const std::vector<AxiomVerdict>& verdicts,
                                    const MeeklyOptions& options);

nlohmann::json classification_to_json(const Space& space,
                                      const std::vector<SetClass>& classes);

nlohmann::json meekly_options_to_json(const MeeklyOptions& options);
MeeklyOptions meekly_options_from_json(const nlohmann::json& doc);

nlohmann::json implication_report_to_json(const ImplicationReport& report);
ImplicationQuery implication_query_from_json(const nlohmann::json& doc);

}  // namespace topo
