#include "space.hpp"

#include <algorithm>

namespace topo {

const char* defect_name(TopologyDefect defect) {
  switch (defect) {
    case TopologyDefect::MissingEmptySet: return "missing-empty-set";
    case TopologyDefect::MissingFullSet: return "missing-full-set";
    case TopologyDefect::NotClosedUnderUnion: return "not-closed-under-union";
    case TopologyDefect::NotClosedUnderIntersection: return "not-closed-under-intersection";
  }
  return "unknown";
}

bool Topology::is_open(Mask m) const {
  return std::binary_search(opens_.begin(), opens_.end(), m);
}

std::vector<std::string> default_point_names(std::uint32_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  return names;
}

std::string mask_to_string(const Topology& topology, Mask m) {
  if (m == 0) return "{}";
  std::string out = "{";
  bool first = true;
  for (std::uint32_t i = 0; i < topology.points(); ++i) {
    if (m & (Mask{1} << i)) {
      if (!first) out += ",";
      out += topology.point_names()[i];
      first = false;
    }
  }
  out += "}";
  return out;
}

namespace {

std::string raw_mask_string(Mask m, const std::vector<std::string>& names) {
  if (m == 0) return "{}";
  std::string out = "{";
  bool first = true;
  for (std::uint32_t i = 0; i < names.size(); ++i) {
    if (m & (Mask{1} << i)) {
      if (!first) out += ",";
      out += names[i];
      first = false;
    }
  }
  return out + "}";
}

}  // namespace

Topology validate_topology(std::uint32_t n, std::vector<Mask> candidate_opens,
                           std::vector<std::string> point_names) {
  if (n < 1 || n > kMaxPoints)
    throw RangeError("point count must be between 1 and 16, got " + std::to_string(n));
  if (point_names.empty()) point_names = default_point_names(n);
  if (point_names.size() != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " point names, got " +
                                std::to_string(point_names.size()));
  const Mask full = full_mask(n);
  for (Mask m : candidate_opens) {
    if (!subset_of(m, full))
      throw std::invalid_argument("open set mask exceeds the point-set width");
  }

  std::sort(candidate_opens.begin(), candidate_opens.end());
  candidate_opens.erase(std::unique(candidate_opens.begin(), candidate_opens.end()),
                        candidate_opens.end());

  auto has = [&](Mask m) {
    return std::binary_search(candidate_opens.begin(), candidate_opens.end(), m);
  };
  if (!has(0))
    throw ValidationError(TopologyDefect::MissingEmptySet, 0, 0,
                          "the empty set is not open");
  if (!has(full))
    throw ValidationError(TopologyDefect::MissingFullSet, 0, 0,
                          "the full set " + raw_mask_string(full, point_names) +
                              " is not open");
  for (std::size_t i = 0; i < candidate_opens.size(); ++i) {
    for (std::size_t j = i + 1; j < candidate_opens.size(); ++j) {
      const Mask a = candidate_opens[i];
      const Mask b = candidate_opens[j];
      if (!has(a | b))
        throw ValidationError(TopologyDefect::NotClosedUnderUnion, a, b,
                              "union of opens " + raw_mask_string(a, point_names) +
                                  " and " + raw_mask_string(b, point_names) +
                                  " is not open");
      if (!has(a & b))
        throw ValidationError(TopologyDefect::NotClosedUnderIntersection, a, b,
                              "intersection of opens " + raw_mask_string(a, point_names) +
                                  " and " + raw_mask_string(b, point_names) +
                                  " is not open");
    }
  }

  Topology t;
  t.n_ = n;
  t.opens_ = std::move(candidate_opens);
  t.names_ = std::move(point_names);
  return t;
}

Space::Space(Topology topology) : topo_(std::move(topology)) {
  const std::uint32_t n = topo_.points();
  const Mask full = topo_.full();
  min_nbhd_.assign(n, full);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (Mask u : topo_.opens()) {
      if (u & (Mask{1} << x)) min_nbhd_[x] &= u;
    }
  }
  // int(A) = { x : minimal neighborhood of x inside A }; cl dual.
  const std::uint32_t count = 1u << n;
  interior_tab_.resize(count);
  closure_tab_.resize(count);
  for (Mask a = 0; a < count; ++a) {
    Mask in = 0;
    for (std::uint32_t x = 0; x < n; ++x) {
      if (subset_of(min_nbhd_[x], a)) in |= Mask{1} << x;
    }
    interior_tab_[a] = in;
  }
  for (Mask a = 0; a < count; ++a) closure_tab_[a] = full & ~interior_tab_[full & ~a];
}

Mask Space::theta_closure(Mask a, ThetaMode mode) const {
  auto& tab = theta_tab_[mode == ThetaMode::ClosureOfOpenNeighborhoods ? 0 : 1];
  if (tab.empty()) tab.assign(mask_count(), ~Mask{0});
  if (tab[a] != ~Mask{0}) return tab[a];
  const std::uint32_t n = points();
  Mask result = 0;
  for (std::uint32_t x = 0; x < n; ++x) {
    const Mask bit = Mask{1} << x;
    bool every_neighborhood_meets = true;
    if (mode == ThetaMode::ClosureOfOpenNeighborhoods) {
      for (Mask u : topo_.opens()) {
        if ((u & bit) && (closure(u) & a) == 0) {
          every_neighborhood_meets = false;
          break;
        }
      }
    } else {
      // Closed sets are the complements of opens; N is a neighborhood of x
      // when x lies in its interior.
      for (Mask u : topo_.opens()) {
        const Mask closed = full() & ~u;
        if ((interior(closed) & bit) && (closed & a) == 0) {
          every_neighborhood_meets = false;
          break;
        }
      }
    }
    if (every_neighborhood_meets) result |= bit;
  }
  tab[a] = result;
  return result;
}

std::optional<bool> Space::cached_axiom(const AxiomCacheKey& key) const {
  for (const auto& [k, v] : axiom_cache_) {
    if (!(k < key) && !(key < k)) return v;
  }
  return std::nullopt;
}

void Space::cache_axiom(const AxiomCacheKey& key, bool value) const {
  axiom_cache_.emplace_back(key, value);
}

}  // namespace topo
