#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "space.hpp"

namespace topo {

// Space-level separation properties. Lindelof is constant true here: every
// finite space is trivially Lindelof, and infinite spaces are out of scope.
enum class Axiom : std::uint8_t {
  Normal,
  KNormal,
  AlmostNormal,
  PiNormal,
  AlmostRegular,
  SoftlyRegular,
  AlphaNormal,
  BetaNormal,
  AlmostBetaNormal,
  BetaKNormal,
  SemiNormal,
  SCStarNormal,
  MeeklySCStarNormal,
  ThetaNormal,
  WeaklyThetaNormal,
  ExtremallyDisconnected,
  T1,
  Regular,
  Lindelof,
};

inline constexpr std::size_t kAxiomCount = 19;

constexpr std::size_t axiom_index(Axiom a) { return static_cast<std::size_t>(a); }

std::string_view axiom_name(Axiom a);
std::optional<Axiom> axiom_from_name(std::string_view name);

/// How the separating open pair of the meekly variant must be disjoint.
enum class MeeklyDisjointness : std::uint8_t {
  Open,             // U /\ V = {}
  ClosureDisjoint,  // cl(U) /\ cl(V) = {}
};

/// Whether the SC*-closed operand must itself be closed.
enum class MeeklyOperands : std::uint8_t {
  BothClosedOneSCStar,  // literal reading: both closed, at least one SC*-closed
  RelaxedSCStarSide,    // one side closed, the other SC*-closed but not necessarily closed
};

struct MeeklyOptions {
  MeeklyDisjointness disjointness = MeeklyDisjointness::Open;
  MeeklyOperands operands = MeeklyOperands::BothClosedOneSCStar;

  std::uint8_t encode() const {
    return static_cast<std::uint8_t>(disjointness) |
           (static_cast<std::uint8_t>(operands) << 1);
  }
  bool operator==(const MeeklyOptions&) const = default;
};

std::string_view disjointness_name(MeeklyDisjointness d);
std::optional<MeeklyDisjointness> disjointness_from_name(std::string_view name);
std::string_view operands_name(MeeklyOperands o);
std::optional<MeeklyOperands> operands_from_name(std::string_view name);

/// One hypothesis instance together with the first separation found for it.
/// Fields are axiom-specific: for pair axioms a/b are the hypothesis sets
/// and u/v the separating opens; for point axioms b is the singleton; for
/// semi-normal b is the enclosing open and u the regularly open set.
struct ObligationWitness {
  Mask a = 0;
  Mask b = 0;
  Mask u = 0;
  Mask v = 0;
};

/// The first hypothesis instance (in lexicographic order) for which no
/// admissible separation exists, with a note naming the exhausted
/// quantifier.
struct Refutation {
  Mask a = 0;
  Mask b = 0;
  std::string exhausted;
};

struct AxiomVerdict {
  Axiom axiom = Axiom::Normal;
  bool holds = false;
  std::size_t obligations = 0;
  std::vector<ObligationWitness> witnesses;  // populated when requested
  std::optional<Refutation> refutation;
  std::map<std::string, std::string> notes;
};

/// Decides the axiom by exhausting its quantifiers in a fixed lexicographic
/// order (smallest hypothesis pair first, then smallest separating pair).
/// Options are consulted only for the meekly variant and echoed into the
/// verdict notes.
AxiomVerdict decide_axiom(const Space& space, Axiom axiom,
                          const MeeklyOptions& options = {},
                          bool record_witnesses = false);

/// Boolean fast path, memoized per space.
bool satisfies(const Space& space, Axiom axiom, const MeeklyOptions& options = {});

/// Verdicts for all axioms, in enum order.
std::vector<AxiomVerdict> axiom_report(const Space& space,
                                       const MeeklyOptions& options = {},
                                       bool record_witnesses = false);

/// True when every two distinct points have disjoint open neighborhoods.
bool is_hausdorff(const Space& space);

}  // namespace topo
