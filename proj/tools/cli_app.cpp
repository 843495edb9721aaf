#include "cli_app.hpp"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "topocheck.h"

namespace cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitError = 2;

struct StringDeleter {
  void operator()(char* s) const { topo_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct SpaceDeleter {
  void operator()(topo_space* s) const { topo_space_free(s); }
};
using OwnedSpace = std::unique_ptr<topo_space, SpaceDeleter>;

int report_error(std::ostream& err, topo_status status) {
  err << "error (" << topo_status_name(status) << "): " << topo_last_error() << "\n";
  return kExitError;
}

std::optional<std::string> read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read \"" << path << "\"\n";
    return std::nullopt;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string subset_label(const json& names) {
  if (names.empty()) return "∅";
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i].get<std::string>();
  }
  return out + "}";
}

// "A..B" or a single number.
bool parse_range(const std::string& text, std::uint32_t& lo, std::uint32_t& hi) {
  const auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      lo = hi = static_cast<std::uint32_t>(std::stoul(text));
    } else {
      lo = static_cast<std::uint32_t>(std::stoul(text.substr(0, pos)));
      hi = static_cast<std::uint32_t>(std::stoul(text.substr(pos + 2)));
    }
  } catch (...) {
    return false;
  }
  return lo >= 1 && lo <= hi;
}

bool parse_shard(const std::string& text, std::uint32_t& index, std::uint32_t& count) {
  const auto pos = text.find('/');
  if (pos == std::string::npos) return false;
  try {
    index = static_cast<std::uint32_t>(std::stoul(text.substr(0, pos)));
    count = static_cast<std::uint32_t>(std::stoul(text.substr(pos + 1)));
  } catch (...) {
    return false;
  }
  return count >= 1 && index < count;
}

std::optional<std::uint32_t> max_n_cap() {
  const char* cap = std::getenv("TOPOCHECK_MAX_N");
  if (!cap || !*cap) return std::nullopt;
  try {
    return static_cast<std::uint32_t>(std::stoul(cap));
  } catch (...) {
    return std::nullopt;
  }
}

struct Options {
  std::string input_path;
  std::string format = "markdown";
  std::vector<std::string> classes;
  std::vector<std::string> hypotheses;
  std::string conclusion;
  std::string range;
  std::string meekly_disjointness = "open";
  std::string meekly_operands = "both-closed";
  std::vector<std::string> targets;
  std::string shard = "0/1";
  bool up_to_homeo = false;
  std::uint32_t jobs = 1;
};

json meekly_json(const Options& options) {
  return json{{"disjointness", options.meekly_disjointness},
              {"operands", options.meekly_operands}};
}

bool meekly_flags_valid(const Options& options, std::ostream& err) {
  if (options.meekly_disjointness != "open" && options.meekly_disjointness != "closure") {
    err << "error: --meekly-disjointness must be open or closure\n";
    return false;
  }
  if (options.meekly_operands != "both-closed" && options.meekly_operands != "relaxed") {
    err << "error: --meekly-operands must be both-closed or relaxed\n";
    return false;
  }
  return true;
}

topo_meekly_options meekly_struct(const Options& options) {
  topo_meekly_options out{};
  out.closure_disjoint = options.meekly_disjointness == "closure" ? 1 : 0;
  out.relaxed_operands = options.meekly_operands == "relaxed" ? 1 : 0;
  return out;
}

// ---------------------------------------------------------------------------
// rendering

void render_classification_markdown(const json& doc, std::size_t index,
                                    std::ostream& out) {
  out << "### space " << index << " — points: ";
  const auto& points = doc["space"]["points"];
  for (std::size_t i = 0; i < points.size(); ++i)
    out << (i ? "," : "") << points[i].get<std::string>();
  out << "\n\n| Subset |";
  for (const auto& cls : doc["classes"]) out << " " << cls.get<std::string>() << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < doc["classes"].size(); ++i) out << "---|";
  out << "\n";
  for (const auto& row : doc["rows"]) {
    out << "| " << subset_label(row["subset"]) << " |";
    for (const auto& cls : doc["classes"])
      out << " " << (row["cells"][cls.get<std::string>()].get<bool>() ? "✓" : "") << " |";
    out << "\n";
  }
  out << "\n";
}

void render_classification_csv(const json& doc, std::size_t index, bool header,
                               std::ostream& out) {
  if (header) {
    out << "space,subset";
    for (const auto& cls : doc["classes"]) out << "," << cls.get<std::string>();
    out << "\n";
  }
  for (const auto& row : doc["rows"]) {
    out << index << "," << subset_label(row["subset"]);
    for (const auto& cls : doc["classes"])
      out << ","
          << (row["cells"][cls.get<std::string>()].get<bool>() ? "true" : "false");
    out << "\n";
  }
}

void render_axiom_row(const json& verdict, std::ostream& out) {
  out << "| " << verdict["axiom"].get<std::string>() << " | "
      << (verdict["holds"].get<bool>() ? "yes" : "no") << " | ";
  if (verdict.contains("refutation")) {
    out << "refuted by (" << subset_label(verdict["refutation"]["a"]) << ", "
        << subset_label(verdict["refutation"]["b"]) << ")";
  } else if (verdict.contains("notes")) {
    bool first = true;
    for (const auto& [key, value] : verdict["notes"].items()) {
      out << (first ? "" : "; ") << key << "=" << value.get<std::string>();
      first = false;
    }
  }
  out << " |\n";
}

void render_axiom_report(const json& doc, const std::string& format, std::size_t index,
                         bool header, std::ostream& out) {
  if (format == "markdown") {
    out << "### space " << index << "\n\n| axiom | holds | detail |\n|---|---|---|\n";
    for (const auto& verdict : doc["verdicts"]) render_axiom_row(verdict, out);
    out << "\n";
  } else {
    if (header) out << "space,axiom,holds\n";
    for (const auto& verdict : doc["verdicts"]) {
      out << index << "," << verdict["axiom"].get<std::string>() << ","
          << (verdict["holds"].get<bool>() ? "true" : "false") << "\n";
    }
  }
}

void render_implication_markdown(const json& report, std::ostream& out) {
  out << "hypotheses:";
  for (const auto& h : report["hypotheses"]) out << " " << h.get<std::string>();
  out << "\nconclusion: " << report["conclusion"].get<std::string>() << "\n";
  out << "range: n = " << report["n_min"].get<unsigned>() << ".."
      << report["n_max"].get<unsigned>() << "\n";
  if (report["outcome"] == "verified-exhaustively") {
    out << "verified over " << report["checked_count"].get<std::uint64_t>()
        << " spaces\n";
    return;
  }
  out << "counterexample found after examining "
      << report["checked_count"].get<std::uint64_t>() << " spaces\n";
  const auto& cex = report["counterexample"];
  out << "space: " << cex["space"].dump() << "\n";
  const auto& conclusion = cex["conclusion_verdict"];
  out << "conclusion " << conclusion["axiom"].get<std::string>() << " fails";
  if (conclusion.contains("refutation")) {
    out << " at the pair (" << subset_label(conclusion["refutation"]["a"]) << ", "
        << subset_label(conclusion["refutation"]["b"]) << "): "
        << conclusion["refutation"]["exhausted"].get<std::string>();
  }
  out << "\n";
}

void render_audit_markdown(const json& reports, std::ostream& out) {
  for (const auto& report : reports) {
    out << "### " << report["target"].get<std::string>() << " — divergences: "
        << report["divergences"].get<std::size_t>()
        << "\n\n| location | paper | oracle | agree | citation |\n|---|---|---|---|---|\n";
    for (const auto& cell : report["cells"]) {
      out << "| " << cell["location"].get<std::string>() << " | "
          << (cell["paper_value"].get<bool>() ? "true" : "false") << " | "
          << (cell["oracle_value"].get<bool>() ? "true" : "false") << " | "
          << (cell["agree"].get<bool>() ? "yes" : "NO") << " | "
          << cell["citation"].get<std::string>() << " |\n";
    }
    out << "\n";
  }
}

void render_audit_csv(const json& reports, std::ostream& out) {
  out << "target,location,paper,oracle,agree\n";
  for (const auto& report : reports) {
    for (const auto& cell : report["cells"]) {
      std::string location = cell["location"].get<std::string>();
      for (auto& ch : location) {
        if (ch == ',') ch = ';';
      }
      out << report["target"].get<std::string>() << "," << location << ","
          << (cell["paper_value"].get<bool>() ? "true" : "false") << ","
          << (cell["oracle_value"].get<bool>() ? "true" : "false") << ","
          << (cell["agree"].get<bool>() ? "true" : "false") << "\n";
    }
  }
}

// ---------------------------------------------------------------------------
// subcommands

std::optional<std::vector<json>> load_spaces(const Options& options, std::ostream& err) {
  auto text = read_file(options.input_path, err);
  if (!text) return std::nullopt;
  json doc = json::parse(*text, nullptr, false);
  if (doc.is_discarded()) {
    err << "error (parse-error): input is not valid JSON\n";
    return std::nullopt;
  }
  std::vector<json> spaces;
  if (doc.is_array()) {
    for (auto& item : doc) spaces.push_back(std::move(item));
  } else {
    spaces.push_back(std::move(doc));
  }
  return spaces;
}

int run_classify(const Options& options, std::ostream& out, std::ostream& err) {
  std::vector<std::string> class_names = options.classes;
  if (class_names.empty()) {
    class_names = {"closed",         "semi-closed",      "pre-closed",      "g-closed",
                   "sc-star-closed", "g-sc-star-closed", "sc-star-g-closed"};
  }
  std::vector<int32_t> class_ids;
  for (const auto& name : class_names) {
    int32_t id = 0;
    if (auto status = topo_class_from_name(name.c_str(), &id); status != TOPO_OK)
      return report_error(err, status);
    class_ids.push_back(id);
  }

  auto spaces = load_spaces(options, err);
  if (!spaces) return kExitError;

  json all = json::array();
  for (const auto& doc : *spaces) {
    const std::string text = doc.dump();
    topo_space* raw = nullptr;
    if (auto status = topo_space_parse_json(text.c_str(), text.size(), &raw);
        status != TOPO_OK)
      return report_error(err, status);
    OwnedSpace space(raw);
    char* rendered = nullptr;
    if (auto status = topo_classification_json(space.get(), class_ids.data(),
                                               class_ids.size(), &rendered);
        status != TOPO_OK)
      return report_error(err, status);
    OwnedString owned(rendered);
    all.push_back(json::parse(owned.get()));
  }

  if (options.format == "json") {
    out << (all.size() == 1 ? all[0].dump(2) : all.dump(2)) << "\n";
  } else if (options.format == "csv") {
    for (std::size_t i = 0; i < all.size(); ++i)
      render_classification_csv(all[i], i, i == 0, out);
  } else {
    for (std::size_t i = 0; i < all.size(); ++i)
      render_classification_markdown(all[i], i, out);
  }
  return kExitOk;
}

int run_axioms(const Options& options, std::ostream& out, std::ostream& err) {
  if (!meekly_flags_valid(options, err)) return kExitError;
  auto spaces = load_spaces(options, err);
  if (!spaces) return kExitError;
  const topo_meekly_options meekly = meekly_struct(options);

  json all = json::array();
  for (const auto& doc : *spaces) {
    const std::string text = doc.dump();
    topo_space* raw = nullptr;
    if (auto status = topo_space_parse_json(text.c_str(), text.size(), &raw);
        status != TOPO_OK)
      return report_error(err, status);
    OwnedSpace space(raw);
    char* rendered = nullptr;
    if (auto status = topo_axiom_report_json(space.get(), &meekly, &rendered);
        status != TOPO_OK)
      return report_error(err, status);
    OwnedString owned(rendered);
    all.push_back(json::parse(owned.get()));
  }

  if (options.format == "json") {
    out << (all.size() == 1 ? all[0].dump(2) : all.dump(2)) << "\n";
  } else {
    for (std::size_t i = 0; i < all.size(); ++i)
      render_axiom_report(all[i], options.format, i, i == 0, out);
  }
  return kExitOk;
}

int run_verify(const Options& options, bool search, std::ostream& out,
               std::ostream& err) {
  if (!meekly_flags_valid(options, err)) return kExitError;
  std::uint32_t lo = 0, hi = 0;
  if (!parse_range(options.range, lo, hi)) {
    err << "error: --n expects a range like 1..4\n";
    return kExitError;
  }
  if (auto cap = max_n_cap(); cap && hi > *cap) {
    err << "error (range-error): n = " << hi << " exceeds TOPOCHECK_MAX_N = " << *cap
        << "\n";
    return kExitError;
  }
  std::uint32_t shard_index = 0, shard_count = 1;
  if (!parse_shard(options.shard, shard_index, shard_count)) {
    err << "error: --shard expects INDEX/COUNT\n";
    return kExitError;
  }
  for (const auto& name : options.hypotheses) {
    int32_t id;
    if (auto status = topo_axiom_from_name(name.c_str(), &id); status != TOPO_OK)
      return report_error(err, status);
  }
  int32_t id;
  if (auto status = topo_axiom_from_name(options.conclusion.c_str(), &id);
      status != TOPO_OK)
    return report_error(err, status);

  json job{{"hypotheses", options.hypotheses},
           {"conclusion", options.conclusion},
           {"n_min", lo},
           {"n_max", hi},
           {"up_to_homeomorphism", options.up_to_homeo},
           {"jobs", options.jobs},
           {"shard_index", shard_index},
           {"shard_count", shard_count},
           {"meekly", meekly_json(options)}};
  const std::string job_text = job.dump();
  char* rendered = nullptr;
  const auto status = search
                          ? topo_search_counterexample_json(job_text.c_str(), &rendered)
                          : topo_check_implication_json(job_text.c_str(), &rendered);
  if (status != TOPO_OK) return report_error(err, status);
  OwnedString owned(rendered);
  json report = json::parse(owned.get());

  if (options.format == "json") {
    out << report.dump(2) << "\n";
  } else if (options.format == "csv") {
    out << "outcome,checked_count\n"
        << report["outcome"].get<std::string>() << ","
        << report["checked_count"].get<std::uint64_t>() << "\n";
  } else {
    render_implication_markdown(report, out);
  }
  const bool counterexample = report["outcome"] == "counterexample";
  if (search) return kExitOk;  // the report answers the query either way
  return counterexample ? kExitCounterexample : kExitOk;
}

int run_enumerate(const Options& options, std::ostream& out, std::ostream& err) {
  std::uint32_t lo = 0, hi = 0;
  if (!parse_range(options.range, lo, hi)) {
    err << "error: --n expects a range like 1..4\n";
    return kExitError;
  }
  if (auto cap = max_n_cap(); cap && hi > *cap) {
    err << "error (range-error): n = " << hi << " exceeds TOPOCHECK_MAX_N = " << *cap
        << "\n";
    return kExitError;
  }
  std::uint32_t shard_index = 0, shard_count = 1;
  if (!parse_shard(options.shard, shard_index, shard_count)) {
    err << "error: --shard expects INDEX/COUNT\n";
    return kExitError;
  }

  json all = json::array();
  for (std::uint32_t n = lo; n <= hi; ++n) {
    topo_stream* raw = nullptr;
    if (auto status = topo_stream_create(n, options.up_to_homeo ? 1 : 0, shard_index,
                                         shard_count, &raw);
        status != TOPO_OK)
      return report_error(err, status);
    std::unique_ptr<topo_stream, decltype(&topo_stream_free)> stream(raw,
                                                                     topo_stream_free);
    for (;;) {
      topo_space* space_raw = nullptr;
      const auto status = topo_stream_next(stream.get(), &space_raw);
      if (status == TOPO_END) break;
      if (status != TOPO_OK) return report_error(err, status);
      OwnedSpace space(space_raw);
      char* rendered = nullptr;
      if (auto rstatus = topo_space_render_json(space.get(), &rendered);
          rstatus != TOPO_OK)
        return report_error(err, rstatus);
      OwnedString owned(rendered);
      all.push_back(json::parse(owned.get()));
    }
  }

  if (options.format == "json") {
    out << all.dump(2) << "\n";
  } else if (options.format == "csv") {
    out << "index,points,opens\n";
    for (std::size_t i = 0; i < all.size(); ++i) {
      out << i << "," << all[i]["points"].size() << ",";
      const auto& opens = all[i]["opens"];
      for (std::size_t j = 0; j < opens.size(); ++j)
        out << (j ? "|" : "") << subset_label(opens[j]);
      out << "\n";
    }
  } else {
    out << "| index | points | open sets |\n|---|---|---|\n";
    for (std::size_t i = 0; i < all.size(); ++i) {
      out << "| " << i << " | " << all[i]["points"].size() << " | ";
      const auto& opens = all[i]["opens"];
      for (std::size_t j = 0; j < opens.size(); ++j)
        out << (j ? " " : "") << subset_label(opens[j]);
      out << " |\n";
    }
    out << "\n" << all.size() << " spaces\n";
  }
  return kExitOk;
}

int run_audit(const Options& options, std::ostream& out, std::ostream& err) {
  std::string targets_text;
  const char* targets_arg = nullptr;
  if (!options.targets.empty()) {
    targets_text = json(options.targets).dump();
    targets_arg = targets_text.c_str();
  }
  char* rendered = nullptr;
  if (auto status = topo_audit_json(targets_arg, &rendered); status != TOPO_OK)
    return report_error(err, status);
  OwnedString owned(rendered);
  json reports = json::parse(owned.get());

  if (options.format == "json") {
    out << reports.dump(2) << "\n";
  } else if (options.format == "csv") {
    render_audit_csv(reports, out);
  } else {
    render_audit_markdown(reports, out);
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"topocheck — exhaustive checks over finite topological spaces"};
  app.require_subcommand(1);
  Options options;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", options.format, "markdown, csv or json")
        ->check(CLI::IsMember({"markdown", "csv", "json"}));
  };
  auto add_meekly = [&](CLI::App* cmd) {
    cmd->add_option("--meekly-disjointness", options.meekly_disjointness,
                    "open or closure");
    cmd->add_option("--meekly-operands", options.meekly_operands,
                    "both-closed or relaxed");
  };

  auto* classify = app.add_subcommand("classify", "classify every subset of a space");
  classify->add_option("--input", options.input_path, "space JSON file")->required();
  classify->add_option("--class", options.classes, "set class to include (repeatable)");
  add_format(classify);

  auto* axioms = app.add_subcommand("axioms", "evaluate every separation axiom");
  axioms->add_option("--input", options.input_path, "space JSON file")->required();
  add_format(axioms);
  add_meekly(axioms);

  auto* verify = app.add_subcommand("verify", "check an implication exhaustively");
  verify->add_option("--hypothesis", options.hypotheses, "hypothesis axiom (repeatable)")
      ->required();
  verify->add_option("--conclusion", options.conclusion, "conclusion axiom")->required();
  verify->add_option("--n", options.range, "point-count range A..B")->required();
  verify->add_flag("--up-to-homeo", options.up_to_homeo,
                   "one representative per homeomorphism class");
  verify->add_option("--jobs", options.jobs, "worker count");
  verify->add_option("--shard", options.shard, "INDEX/COUNT prefix shard");
  add_format(verify);
  add_meekly(verify);

  auto* search = app.add_subcommand(
      "search", "find the minimal space separating hypotheses from a conclusion");
  search->add_option("--hypothesis", options.hypotheses, "property to hold (repeatable)")
      ->required();
  search->add_option("--conclusion", options.conclusion, "property to fail")->required();
  search->add_option("--n", options.range, "point-count range A..B")->required();
  search->add_flag("--up-to-homeo", options.up_to_homeo,
                   "one representative per homeomorphism class");
  search->add_option("--jobs", options.jobs, "worker count");
  search->add_option("--shard", options.shard, "INDEX/COUNT prefix shard");
  add_format(search);
  add_meekly(search);

  auto* enumerate = app.add_subcommand("enumerate", "list every topology in range");
  enumerate->add_option("--n", options.range, "point-count range A..B")->required();
  enumerate->add_flag("--up-to-homeo", options.up_to_homeo,
                      "one representative per homeomorphism class");
  enumerate->add_option("--shard", options.shard, "INDEX/COUNT prefix shard");
  add_format(enumerate);

  auto* audit = app.add_subcommand("audit",
                                   "compare bundled reference claims with the oracle");
  audit->add_option("--target", options.targets, "audit target (repeatable)");
  add_format(audit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, out, err);
    return kExitError;
  }

  try {
    if (classify->parsed()) return run_classify(options, out, err);
    if (axioms->parsed()) return run_axioms(options, out, err);
    if (verify->parsed()) return run_verify(options, false, out, err);
    if (search->parsed()) return run_verify(options, true, out, err);
    if (enumerate->parsed()) return run_enumerate(options, out, err);
    if (audit->parsed()) return run_audit(options, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  err << "error: no subcommand\n";
  return kExitError;
}

}  // namespace cli
