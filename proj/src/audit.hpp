#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace topo {

// Audits the bundled reference-table claims against definitional
// recomputation. Claims live in data/audit_claims.json (embedded at build
// time), one record per cell with its citation string; oracle values are
// recomputed on every run and divergences are reported, never reconciled.
enum class AuditTarget : std::uint8_t {
  Section3Table,
  Section64Table,
  Example1Families,
  MeeklyExamples,
};

inline constexpr std::size_t kAuditTargetCount = 4;

std::string_view audit_target_name(AuditTarget target);
std::optional<AuditTarget> audit_target_from_name(std::string_view name);

struct AuditCell {
  std::string location;
  bool paper_value = false;
  bool oracle_value = false;
  bool agree = false;
  std::string citation;
};

struct AuditReport {
  AuditTarget target = AuditTarget::Section3Table;
  std::vector<AuditCell> cells;

  std::size_t divergences() const;
};

/// Rebuilds each requested target from the claim records and the
/// definitional oracle. `fixture_json` overrides the embedded claim file
/// when non-empty (used by tests).
std::vector<AuditReport> audit_paper(const std::vector<AuditTarget>& targets,
                                     const std::string& fixture_json = {});

/// The embedded contents of data/audit_claims.json.
const std::string& default_audit_claims();

}  // namespace topo
