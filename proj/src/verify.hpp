#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "axioms.hpp"
#include "enumerate.hpp"

namespace topo {

/// A theorem-shaped query: does every space in range satisfying all
/// hypotheses also satisfy the conclusion?
struct ImplicationQuery {
  std::vector<Axiom> hypotheses;
  Axiom conclusion = Axiom::Normal;
  MeeklyOptions options;
  std::uint32_t n_min = 1;
  std::uint32_t n_max = 4;
  bool up_to_homeomorphism = false;
  std::uint32_t jobs = 1;
  std::uint32_t shard_index = 0;
  std::uint32_t shard_count = 1;
};

struct Counterexample {
  Topology topology;
  std::vector<AxiomVerdict> hypothesis_verdicts;  // all hold
  AxiomVerdict conclusion_verdict;                // fails, with refutation
};

struct ImplicationReport {
  ImplicationQuery query;
  std::uint64_t checked_count = 0;
  std::optional<Counterexample> counterexample;

  bool verified_exhaustively() const { return !counterexample.has_value(); }
};

/// Scans every topology in range. Point counts are processed in increasing
/// order and a failing level is always scanned completely, so the reported
/// counterexample is minimal under (fewest points, fewest open sets,
/// lexicographic open-family encoding) regardless of worker count. Scanning
/// stops after the first failing level; checked_count is the number of
/// spaces examined (the full range cardinality when verified exhaustively).
ImplicationReport check_implication(const ImplicationQuery& query);

/// Inverse query: find the minimal space where all hypotheses hold and the
/// conclusion fails (a space separating the two property sets). Identical
/// traversal; VerifiedExhaustively means no separation exists in range.
ImplicationReport search_minimal_counterexample(const ImplicationQuery& query);

}  // namespace topo
