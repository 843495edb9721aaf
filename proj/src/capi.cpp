#include "topocheck.h"

#include <cstring>
#include <new>
#include <string>

#include "audit.hpp"
#include "axioms.hpp"
#include "enumerate.hpp"
#include "json_io.hpp"
#include "space.hpp"
#include "verify.hpp"

using nlohmann::json;

struct topo_space_s {
  topo::Space space;
};

struct topo_stream_s {
  topo::TopologyStream stream;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

topo_status fail(topo_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

topo_status from_exception() {
  try {
    throw;
  } catch (const topo::ValidationError& e) {
    switch (e.defect()) {
      case topo::TopologyDefect::MissingEmptySet:
        return fail(TOPO_ERR_MISSING_EMPTY_SET, e.what());
      case topo::TopologyDefect::MissingFullSet:
        return fail(TOPO_ERR_MISSING_FULL_SET, e.what());
      case topo::TopologyDefect::NotClosedUnderUnion:
        return fail(TOPO_ERR_NOT_CLOSED_UNDER_UNION, e.what());
      case topo::TopologyDefect::NotClosedUnderIntersection:
        return fail(TOPO_ERR_NOT_CLOSED_UNDER_INTERSECTION, e.what());
    }
    return fail(TOPO_ERR_INTERNAL, e.what());
  } catch (const topo::RangeError& e) {
    return fail(TOPO_ERR_RANGE, e.what());
  } catch (const topo::ParseError& e) {
    return fail(TOPO_ERR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(TOPO_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(TOPO_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TOPO_ERR_INTERNAL, "unknown error");
  }
}

topo::MeeklyOptions convert(const topo_meekly_options* options) {
  topo::MeeklyOptions out;
  if (options) {
    out.disjointness = options->closure_disjoint
                           ? topo::MeeklyDisjointness::ClosureDisjoint
                           : topo::MeeklyDisjointness::Open;
    out.operands = options->relaxed_operands
                       ? topo::MeeklyOperands::RelaxedSCStarSide
                       : topo::MeeklyOperands::BothClosedOneSCStar;
  }
  return out;
}

topo_status emit_json(const json& doc, char** out_json) {
  if (!out_json) return fail(TOPO_ERR_INVALID_ARGUMENT, "null output pointer");
  *out_json = dup_string(doc.dump(2));
  if (!*out_json) return fail(TOPO_ERR_INTERNAL, "out of memory");
  return TOPO_OK;
}

}  // namespace

extern "C" {

const char* topo_status_name(topo_status status) {
  switch (status) {
    case TOPO_OK: return "ok";
    case TOPO_END: return "end";
    case TOPO_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case TOPO_ERR_MISSING_EMPTY_SET: return "missing-empty-set";
    case TOPO_ERR_MISSING_FULL_SET: return "missing-full-set";
    case TOPO_ERR_NOT_CLOSED_UNDER_UNION: return "not-closed-under-union";
    case TOPO_ERR_NOT_CLOSED_UNDER_INTERSECTION: return "not-closed-under-intersection";
    case TOPO_ERR_PARSE: return "parse-error";
    case TOPO_ERR_RANGE: return "range-error";
    case TOPO_ERR_UNKNOWN_NAME: return "unknown-name";
    case TOPO_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* topo_last_error(void) { return g_last_error.c_str(); }

int32_t topo_class_count(void) { return static_cast<int32_t>(topo::kSetClassCount); }

const char* topo_class_name(int32_t class_id) {
  if (class_id < 0 || class_id >= topo_class_count()) return nullptr;
  return topo::class_name(static_cast<topo::SetClass>(class_id)).data();
}

topo_status topo_class_from_name(const char* name, int32_t* out_id) {
  if (!name || !out_id) return fail(TOPO_ERR_INVALID_ARGUMENT, "null argument");
  auto cls = topo::class_from_name(name);
  if (!cls) return fail(TOPO_ERR_UNKNOWN_NAME, std::string("unknown class \"") + name + "\"");
  *out_id = static_cast<int32_t>(topo::class_index(*cls));
  return TOPO_OK;
}

int32_t topo_axiom_count(void) { return static_cast<int32_t>(topo::kAxiomCount); }

const char* topo_axiom_name(int32_t axiom_id) {
  if (axiom_id < 0 || axiom_id >= topo_axiom_count()) return nullptr;
  return topo::axiom_name(static_cast<topo::Axiom>(axiom_id)).data();
}

topo_status topo_axiom_from_name(const char* name, int32_t* out_id) {
  if (!name || !out_id) return fail(TOPO_ERR_INVALID_ARGUMENT, "null argument");
  auto axiom = topo::axiom_from_name(name);
  if (!axiom)
    return fail(TOPO_ERR_UNKNOWN_NAME, std::string("unknown axiom \"") + name + "\"");
  *out_id = static_cast<int32_t>(topo::axiom_index(*axiom));
  return TOPO_OK;
}

topo_status topo_space_create(uint32_t point_count, const uint32_t* opens,
                              size_t open_count, topo_space** out_space) {
  if (!out_space || (!opens && open_count > 0))
    return fail(TOPO_ERR_INVALID_ARGUMENT, "null argument");
  try {
    std::vector<topo::Mask> family(opens, opens + open_count);
    auto topology = topo::validate_topology(point_count, std::move(family));
    *out_space = new topo_space_s{topo::Space{std::move(topology)}};
    return TOPO_OK;
  } catch (...) {
    return from_exception();
  }
}

topo_status topo_space_parse_json(const char* json_utf8, size_t length,
                                  topo_space** out_space) {
  if (!json_utf8 || !out_space) return fail(TOPO_ERR_INVALID_ARGUMENT, "null argument");
  try {
    auto topology = topo::parse_space_text(std::string(json_utf8, length));
    *out_space = new topo_space_s{topo::Space{std::move(topology)}};
    return TOPO_OK;
  } catch (...) {
    return from_exception();
  }
}

void topo_space_free(topo_space* space) { delete space; }

uint32_t topo_space_points(const topo_space* space) {
  return space ? space->space.points() : 0;
}

size_t topo_space_open_count(const topo_space* space) {
  return space ? space->space.topology().opens().size() : 0;
}

uint32_t topo_space_open_at(const topo_space* space, size_t index) {
  if (!space || index >= space->space.topology().opens().size()) return 0;
  return space->space.topology().opens()[index];
}

topo_status topo_space_render_json(const topo_space* space, char** out_json) {
  if (!space) return fail(TOPO_ERR_INVALID_ARGUMENT, "null space");
  try {
    return emit_json(topo::space_to_json(space->space.topology()), out_json);
  } catch (...) {
    return from_exception();
  }
}

uint32_t topo_closure(topo_space* space, uint32_t mask) {
  return space->space.closure(mask & space->space.full());
}

uint32_t topo_interior(topo_space* space, uint32_t mask) {
  return space->space.interior(mask & space->space.full());
}

uint32_t topo_theta_closure(topo_space* space, uint32_t mask) {
  return space->space.theta_closure(mask & space->space.full());
}

uint32_t topo_theta_closure_alt(topo_space* space, uint32_t mask) {
  return space->space.theta_closure(mask & space->space.full(),
                                    topo::ThetaMode::ClosedSetNeighborhoods);
}

topo_status topo_class_member(topo_space* space, uint32_t mask, int32_t class_id,
                              int32_t* out_member) {
  if (!space || !out_member) return fail(TOPO_ERR_INVALID_ARGUMENT, "null argument");
  if (class_id < 0 || class_id >= topo_class_count())
    return fail(TOPO_ERR_UNKNOWN_NAME, "class id out of range");
  try {
    *out_member = space->space.member(mask & space->space.full(),
                                      static_cast<topo::SetClass>(class_id));
    return TOPO_OK;
  } catch (...) {
    return from_exception();
  }
}

topo_status topo_class_closure(topo_space* space, uint32_t mask, int32_t class_id,
                               uint32_t* out_mask) {
  if (!space || !out_mask) return fail(TOPO_ERR_INVALID_ARGUMENT, "null argument");
  if (class_id < 0 || class_id >= topo_class_count())
    return fail(TOPO_ERR_UNKNOWN_NAME, "class id out of range");
  try {
    *out_mask = space->space.class_closure(mask & space->space.full(),
                                           static_cast<topo::SetClass>(class_id));
    return TOPO_OK;
  } catch (...) {
    return from_exception();
  }
}

topo_status topo_class_interior(topo_space* space, uint32_t mask, int32_t class_id,
                                uint32_t* out_mask) {
  if (!space || !out_mask) return fail(TOPO_ERR_INVALID_ARGUMENT, "null argument");
  if (class_id < 0 || class_id >= topo_class_count())
    return fail(TOPO_ERR_UNKNOWN_NAME, "class id out of range");
  try {
    *out_mask = space->space.class_interior(mask & space->space.full(),
                                            static_cast<topo::SetClass>(class_id));
    return TOPO_OK;
  } catch (...) {
    return from_exception();
  }
}

topo_status topo_class_family(topo_space* space, int32_t class_id, uint32_t* out_masks,
                              size_t capacity, size_t* out_count) {
  if (!space || !out_count) return fail(TOPO_ERR_INVALID_ARGUMENT, "null argument");
  if (class_id < 0 || class_id >= topo_class_count())
    return fail(TOPO_ERR_UNKNOWN_NAME, "class id out of range");
  try {
    auto masks = space->space.family_masks(static_cast<topo::SetClass>(class_id));
    *out_count = masks.size();
    if (out_masks) {
      for (std::size_t i = 0; i < masks.size() && i < capacity; ++i)
        out_masks[i] = masks[i];
    }
    return TOPO_OK;
  } catch (...) {
    return from_exception();
  }
}

topo_status topo_classification_json(topo_space* space, const int32_t* class_ids,
                                     size_t count, char** out_json) {
  if (!space || (!class_ids && count > 0))
    return fail(TOPO_ERR_INVALID_ARGUMENT, "null argument");
  try {
    std::vector<topo::SetClass> classes;
    for (std::size_t i = 0; i < count; ++i) {
      if (class_ids[i] < 0 || class_ids[i] >= topo_class_count())
        return fail(TOPO_ERR_UNKNOWN_NAME, "class id out of range");
      classes.push_back(static_cast<topo::SetClass>(class_ids[i]));
    }
    return emit_json(topo::classification_to_json(space->space, classes), out_json);
  } catch (...) {
    return from_exception();
  }
}

topo_status topo_axiom_holds(topo_space* space, int32_t axiom_id,
                             const topo_meekly_options* options, int32_t* out_holds) {
  if (!space || !out_holds) return fail(TOPO_ERR_INVALID_ARGUMENT, "null argument");
  if (axiom_id < 0 || axiom_id >= topo_axiom_count())
    return fail(TOPO_ERR_UNKNOWN_NAME, "axiom id out of range");
  try {
    *out_holds = topo::satisfies(space->space, static_cast<topo::Axiom>(axiom_id),
                                 convert(options));
    return TOPO_OK;
  } catch (...) {
    return from_exception();
  }
}

topo_status topo_axiom_verdict_json(topo_space* space, int32_t axiom_id,
                                    const topo_meekly_options* options,
                                    char** out_json) {
  if (!space) return fail(TOPO_ERR_INVALID_ARGUMENT, "null space");
  if (axiom_id < 0 || axiom_id >= topo_axiom_count())
    return fail(TOPO_ERR_UNKNOWN_NAME, "axiom id out of range");
  try {
    auto verdict = topo::decide_axiom(space->space, static_cast<topo::Axiom>(axiom_id),
                                      convert(options), true);
    return emit_json(topo::verdict_to_json(space->space.topology(), verdict), out_json);
  } catch (...) {
    return from_exception();
  }
}

topo_status topo_axiom_report_json(topo_space* space, const topo_meekly_options* options,
                                   char** out_json) {
  if (!space) return fail(TOPO_ERR_INVALID_ARGUMENT, "null space");
  try {
    const auto opts = convert(options);
    auto verdicts = topo::axiom_report(space->space, opts, true);
    return emit_json(
        topo::axiom_report_to_json(space->space.topology(), verdicts, opts), out_json);
  } catch (...) {
    return from_exception();
  }
}

topo_status topo_stream_create(uint32_t point_count, int32_t up_to_homeomorphism,
                               uint32_t shard_index, uint32_t shard_count,
                               topo_stream** out_stream) {
  if (!out_stream) return fail(TOPO_ERR_INVALID_ARGUMENT, "null argument");
  try {
    topo::EnumerationOptions options;
    options.up_to_homeomorphism = up_to_homeomorphism != 0;
    options.shard_index = shard_index;
    options.shard_count = shard_count == 0 ? 1 : shard_count;
    *out_stream = new topo_stream_s{topo::TopologyStream{point_count, options}};
    return TOPO_OK;
  } catch (...) {
    return from_exception();
  }
}

topo_status topo_stream_next(topo_stream* stream, topo_space** out_space) {
  if (!stream || !out_space) return fail(TOPO_ERR_INVALID_ARGUMENT, "null argument");
  try {
    auto topology = stream->stream.next();
    if (!topology) return TOPO_END;
    *out_space = new topo_space_s{topo::Space{std::move(*topology)}};
    return TOPO_OK;
  } catch (...) {
    return from_exception();
  }
}

void topo_stream_free(topo_stream* stream) { delete stream; }

topo_status topo_check_implication_json(const char* job_json, char** out_report_json) {
  if (!job_json) return fail(TOPO_ERR_INVALID_ARGUMENT, "null job document");
  try {
    json doc = json::parse(std::string(job_json), nullptr, false);
    if (doc.is_discarded()) return fail(TOPO_ERR_PARSE, "job document is not valid JSON");
    auto query = topo::implication_query_from_json(doc);
    auto report = topo::check_implication(query);
    return emit_json(topo::implication_report_to_json(report), out_report_json);
  } catch (...) {
    return from_exception();
  }
}

topo_status topo_search_counterexample_json(const char* job_json,
                                            char** out_report_json) {
  if (!job_json) return fail(TOPO_ERR_INVALID_ARGUMENT, "null job document");
  try {
    json doc = json::parse(std::string(job_json), nullptr, false);
    if (doc.is_discarded()) return fail(TOPO_ERR_PARSE, "job document is not valid JSON");
    auto query = topo::implication_query_from_json(doc);
    auto report = topo::search_minimal_counterexample(query);
    return emit_json(topo::implication_report_to_json(report), out_report_json);
  } catch (...) {
    return from_exception();
  }
}

topo_status topo_audit_json(const char* targets_json, char** out_report_json) {
  try {
    std::vector<topo::AuditTarget> targets;
    if (targets_json) {
      json doc = json::parse(std::string(targets_json), nullptr, false);
      if (doc.is_discarded() || !doc.is_array())
        return fail(TOPO_ERR_PARSE, "targets must be a JSON array of names");
      for (const auto& name : doc) {
        auto target = topo::audit_target_from_name(name.get<std::string>());
        if (!target)
          return fail(TOPO_ERR_UNKNOWN_NAME,
                      "unknown audit target \"" + name.get<std::string>() + "\"");
        targets.push_back(*target);
      }
    } else {
      for (std::size_t i = 0; i < topo::kAuditTargetCount; ++i)
        targets.push_back(static_cast<topo::AuditTarget>(i));
    }
    auto reports = topo::audit_paper(targets);
    json out = json::array();
    for (const auto& report : reports) {
      json cells = json::array();
      for (const auto& cell : report.cells) {
        cells.push_back(json{{"location", cell.location},
                             {"paper_value", cell.paper_value},
                             {"oracle_value", cell.oracle_value},
                             {"agree", cell.agree},
                             {"citation", cell.citation}});
      }
      out.push_back(json{{"target", std::string(topo::audit_target_name(report.target))},
                         {"cells", std::move(cells)},
                         {"divergences", report.divergences()}});
    }
    return emit_json(out, out_report_json);
  } catch (...) {
    return from_exception();
  }
}

void topo_string_free(char* text) { std::free(text); }

}  // extern "C"
