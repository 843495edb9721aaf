#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace topo {

// Membership predicates over subsets of a finite space. Closed variants and
// open variants come in complement-dual pairs; AlphaStarSet, CSet,
// RegularHOpen and PiClosed stand alone.
enum class SetClass : std::uint8_t {
  Closed,
  Open,
  RegularClosed,
  RegularOpen,
  SemiClosed,
  SemiOpen,
  PreClosed,
  PreOpen,
  WClosed,
  WOpen,
  AlphaClosed,
  AlphaOpen,
  BetaClosed,
  BetaOpen,
  BClosed,
  BOpen,
  AlphaStarSet,
  CSet,
  HClosed,
  HOpen,
  GhClosed,
  GhOpen,
  RegularHOpen,
  RghClosed,
  RghOpen,
  HCgClosed,
  HCgOpen,
  CStarOpen,
  CStarClosed,
  SCStarClosed,
  SCStarOpen,
  GClosed,
  GOpen,
  GSCStarClosed,
  GSCStarOpen,
  SCStarGClosed,
  SCStarGOpen,
  PiClosed,
};

inline constexpr std::size_t kSetClassCount = 38;

constexpr std::size_t class_index(SetClass cls) {
  return static_cast<std::size_t>(cls);
}

/// Canonical kebab-case name shared with the CLI and JSON reports.
std::string_view class_name(SetClass cls);

/// Inverse of class_name; empty for unknown names.
std::optional<SetClass> class_from_name(std::string_view name);

/// The complement-dual tag, when one exists (closed <-> open variants).
std::optional<SetClass> dual_class(SetClass cls);

/// Classes whose members contain X and are meaningful under intersection
/// (valid arguments to class_closure).
bool is_closed_variant(SetClass cls);

/// Classes whose members include the empty set and are meaningful under
/// union (valid arguments to class_interior).
bool is_open_variant(SetClass cls);

}  // namespace topo
