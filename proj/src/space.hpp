#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "set_classes.hpp"

namespace topo {

// A subset of an n-point space, one bit per point. Only the low n bits may
// be set; the width n is carried by the owning Topology.
using Mask = std::uint32_t;

inline constexpr std::uint32_t kMaxPoints = 16;
inline constexpr std::uint32_t kMaxEnumerationPoints = 7;

constexpr Mask full_mask(std::uint32_t n) {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

enum class TopologyDefect {
  MissingEmptySet,
  MissingFullSet,
  NotClosedUnderUnion,
  NotClosedUnderIntersection,
};

const char* defect_name(TopologyDefect defect);

/// Thrown by validate_topology; carries the witness pair for the closure
/// defects (both masks are zero for the missing-set defects).
class ValidationError : public std::runtime_error {
 public:
  ValidationError(TopologyDefect defect, Mask a, Mask b, const std::string& message)
      : std::runtime_error(message), defect_(defect), witness_a_(a), witness_b_(b) {}

  TopologyDefect defect() const { return defect_; }
  Mask witness_a() const { return witness_a_; }
  Mask witness_b() const { return witness_b_; }

 private:
  TopologyDefect defect_;
  Mask witness_a_;
  Mask witness_b_;
};

class RangeError : public std::out_of_range {
 public:
  explicit RangeError(const std::string& message) : std::out_of_range(message) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

/// Validated open-set family over n named points. `opens` is sorted and
/// deduplicated, contains the empty and the full mask, and is closed under
/// pairwise union and intersection. Immutable once constructed.
class Topology {
 public:
  Topology() = default;

  std::uint32_t points() const { return n_; }
  Mask full() const { return full_mask(n_); }
  const std::vector<Mask>& opens() const { return opens_; }
  const std::vector<std::string>& point_names() const { return names_; }

  /// Binary search over the sorted family.
  bool is_open(Mask m) const;
  bool is_closed(Mask m) const { return is_open(full() & ~m); }

  bool operator==(const Topology& other) const {
    return n_ == other.n_ && opens_ == other.opens_;
  }

 private:
  friend Topology validate_topology(std::uint32_t, std::vector<Mask>,
                                    std::vector<std::string>);
  std::uint32_t n_ = 0;
  std::vector<Mask> opens_;
  std::vector<std::string> names_;
};

/// Checks the open-set axioms and returns the canonical (sorted,
/// deduplicated) topology. Throws ValidationError naming the first defect,
/// with a witness pair for the union/intersection failures. Point names
/// default to "a", "b", ... when omitted.
Topology validate_topology(std::uint32_t n, std::vector<Mask> candidate_opens,
                           std::vector<std::string> point_names = {});

/// Readings of "every closed neighborhood of x meets A". The default takes
/// closures of open neighborhoods; the alternate quantifies over closed sets
/// N with x in int(N). The two agree on every space (cl(int N) <= N for
/// closed N); both are kept so the agreement can be checked rather than
/// assumed.
enum class ThetaMode {
  ClosureOfOpenNeighborhoods,
  ClosedSetNeighborhoods,
};

struct AxiomCacheKey {
  int axiom = -1;
  std::uint8_t options = 0;
  bool operator<(const AxiomCacheKey& o) const {
    return axiom != o.axiom ? axiom < o.axiom : options < o.options;
  }
};

/// A topology plus memo tables for the closure/interior calculus and every
/// derived set-class family. Memoization is transparent: every cached answer
/// equals the from-scratch recomputation. Not internally synchronized; each
/// worker thread owns its Space.
class Space {
 public:
  explicit Space(Topology topology);

  const Topology& topology() const { return topo_; }
  std::uint32_t points() const { return topo_.points(); }
  Mask full() const { return topo_.full(); }
  std::uint32_t mask_count() const { return 1u << topo_.points(); }
  bool is_open(Mask m) const { return topo_.is_open(m); }
  bool is_closed(Mask m) const { return topo_.is_closed(m); }

  /// Smallest open set containing the point (finite spaces always have one).
  Mask minimal_open_neighborhood(std::uint32_t point) const { return min_nbhd_[point]; }

  /// Smallest closed superset / largest open subset. Table lookups.
  Mask closure(Mask a) const { return closure_tab_[a]; }
  Mask interior(Mask a) const { return interior_tab_[a]; }

  /// Points whose every (closed) neighborhood meets `a`. Lazily memoized
  /// per mode; a set is theta-closed iff theta_closure(a) == a.
  Mask theta_closure(Mask a, ThetaMode mode = ThetaMode::ClosureOfOpenNeighborhoods) const;

  // --- set-class layer (implemented in set_classes.cpp) ---

  /// Truth of the class's defining condition for `a`.
  bool member(Mask a, SetClass cls) const;

  /// Membership table indexed by mask.
  const std::vector<std::uint8_t>& family(SetClass cls) const;

  /// The family as an ascending mask list.
  std::vector<Mask> family_masks(SetClass cls) const;

  /// Intersection of all class members containing `a`. Requires a
  /// closed-variant class; the result need not itself belong to the class
  /// unless the class is intersection-stable.
  Mask class_closure(Mask a, SetClass cls) const;

  /// Union of all class members contained in `a`. Requires an open-variant
  /// class.
  Mask class_interior(Mask a, SetClass cls) const;

  /// True iff `a` is a finite intersection of regular-closed sets.
  bool pi_closed(Mask a) const { return member(a, SetClass::PiClosed); }

  // Decision-procedure cache used by the axioms layer.
  std::optional<bool> cached_axiom(const AxiomCacheKey& key) const;
  void cache_axiom(const AxiomCacheKey& key, bool value) const;

 private:
  void ensure_family(SetClass cls) const;
  const std::vector<Mask>& hull_table(SetClass cls) const;    // AND over members >= a
  const std::vector<Mask>& kernel_table(SetClass cls) const;  // OR over members <= a

  Topology topo_;
  std::vector<Mask> min_nbhd_;
  std::vector<Mask> interior_tab_;
  std::vector<Mask> closure_tab_;
  mutable std::array<std::vector<Mask>, 2> theta_tab_;  // lazy, sentinel-filled
  mutable std::array<std::optional<std::vector<std::uint8_t>>, kSetClassCount> families_;
  mutable std::array<std::optional<std::vector<Mask>>, kSetClassCount> hulls_;
  mutable std::array<std::optional<std::vector<Mask>>, kSetClassCount> kernels_;
  mutable std::vector<std::pair<AxiomCacheKey, bool>> axiom_cache_;
};

/// Renders a mask as "{k,l}" (or the empty-set symbol) using the names of
/// the given topology.
std::string mask_to_string(const Topology& topology, Mask m);

/// Default point labels "a", "b", ... for enumerated spaces.
std::vector<std::string> default_point_names(std::uint32_t n);

}  // namespace topo
