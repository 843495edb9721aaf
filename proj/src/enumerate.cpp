#include "enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace topo {

// Finite topologies on {0..n-1} are in bijection with reflexive transitive
// relations (preorders): the opens of a preorder are its up-sets, and the
// minimal open neighborhoods of a topology recover the relation. The
// generator walks the relation row by row (row[i] = the points reachable
// from i, always including i) and prunes any row choice that breaks
// transitivity against the rows already fixed:
//
//   j in row[i]  =>  row[j] subset of row[i]
//
// checked in both directions for every earlier row. A complete matrix that
// passes all pairwise checks is transitive, so no post-filtering is needed.

namespace {

struct DfsState {
  std::uint32_t n = 0;
  Mask all = 0;
  std::vector<Mask> rows;
  std::uint32_t shard_depth = 0;
  std::uint64_t prefix_ordinal = 0;
  const EnumerationOptions* options = nullptr;
  const std::function<bool(const std::vector<Mask>&)>* emit = nullptr;
  bool stopped = false;
};

bool compatible(const DfsState& st, std::uint32_t depth, Mask candidate) {
  for (std::uint32_t j = 0; j < depth; ++j) {
    const Mask bit_j = Mask{1} << j;
    if ((candidate & bit_j) && !subset_of(st.rows[j], candidate)) return false;
    if ((st.rows[j] & (Mask{1} << depth)) && !subset_of(candidate, st.rows[j]))
      return false;
  }
  return true;
}

void dfs(DfsState& st, std::uint32_t depth) {
  if (st.stopped) return;
  if (depth == st.shard_depth && st.options->shard_count > 1) {
    const std::uint64_t ordinal = st.prefix_ordinal++;
    if (ordinal % st.options->shard_count != st.options->shard_index) return;
  }
  if (depth == st.n) {
    if (!(*st.emit)(st.rows)) st.stopped = true;
    return;
  }
  const Mask bit = Mask{1} << depth;
  for (Mask candidate = 0; candidate <= st.all; ++candidate) {
    if (!(candidate & bit)) continue;
    if (!compatible(st, depth, candidate)) continue;
    st.rows[depth] = candidate;
    dfs(st, depth + 1);
    if (st.stopped) return;
  }
}

Topology topology_from_rows(std::uint32_t n, const std::vector<Mask>& rows) {
  const Mask all = full_mask(n);
  std::vector<Mask> opens;
  for (Mask m = 0; m <= all; ++m) {
    bool up_set = true;
    for (std::uint32_t i = 0; i < n && up_set; ++i) {
      if ((m & (Mask{1} << i)) && !subset_of(rows[i], m)) up_set = false;
    }
    if (up_set) opens.push_back(m);
  }
  Topology t = validate_topology(n, std::move(opens));
  return t;
}

void check_range(std::uint32_t n) {
  if (n < 1 || n > kMaxEnumerationPoints)
    throw RangeError("enumeration requires 1 <= n <= 7, got " + std::to_string(n));
}

}  // namespace

std::vector<Mask> canonical_open_family(const Topology& topology) {
  const std::uint32_t n = topology.points();
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> best = topology.opens();
  std::vector<Mask> relabeled(best.size());
  do {
    for (std::size_t i = 0; i < topology.opens().size(); ++i) {
      Mask m = topology.opens()[i];
      Mask mapped = 0;
      for (std::uint32_t b = 0; b < n; ++b) {
        if (m & (Mask{1} << b)) mapped |= Mask{1} << perm[b];
      }
      relabeled[i] = mapped;
    }
    std::sort(relabeled.begin(), relabeled.end());
    if (relabeled < best) best = relabeled;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void for_each_topology(std::uint32_t n, const EnumerationOptions& options,
                       const std::function<bool(const Topology&)>& visit) {
  check_range(n);
  if (options.shard_count == 0 || options.shard_index >= options.shard_count)
    throw std::invalid_argument("shard index must be below the shard count");

  std::function<bool(const std::vector<Mask>&)> emit =
      [&](const std::vector<Mask>& rows) {
        Topology t = topology_from_rows(n, rows);
        if (options.up_to_homeomorphism && canonical_open_family(t) != t.opens())
          return true;
        return visit(t);
      };

  DfsState st;
  st.n = n;
  st.all = full_mask(n);
  st.rows.assign(n, 0);
  st.shard_depth = std::min<std::uint32_t>(2, n);
  st.options = &options;
  st.emit = &emit;
  dfs(st, 0);
}

std::vector<Topology> enumerate_topologies(std::uint32_t n,
                                           const EnumerationOptions& options) {
  std::vector<Topology> out;
  for_each_topology(n, options, [&](const Topology& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::uint64_t count_topologies(std::uint32_t n, const EnumerationOptions& options) {
  std::uint64_t count = 0;
  for_each_topology(n, options, [&](const Topology&) {
    ++count;
    return true;
  });
  return count;
}

TopologyStream::TopologyStream(std::uint32_t n, const EnumerationOptions& options)
    : n_(n), options_(options) {
  check_range(n);
  if (options.shard_count == 0 || options.shard_index >= options.shard_count)
    throw std::invalid_argument("shard index must be below the shard count");
  // Collect the shard's depth-2 prefixes in DFS order; completions are
  // materialized one prefix at a time.
  const std::uint32_t depth = std::min<std::uint32_t>(2, n);
  DfsState st;
  st.n = depth;
  st.all = full_mask(n);
  st.rows.assign(depth, 0);
  st.shard_depth = depth + 1;  // never triggers inside this walk
  EnumerationOptions no_shard;
  st.options = &no_shard;
  std::uint64_t ordinal = 0;
  std::function<bool(const std::vector<Mask>&)> emit =
      [&](const std::vector<Mask>& rows) {
        if (ordinal++ % options_.shard_count == options_.shard_index)
          prefixes_.push_back(rows);
        return true;
      };
  st.emit = &emit;
  dfs(st, 0);
}

std::optional<Topology> TopologyStream::next() {
  while (buffer_pos_ >= buffer_.size()) {
    if (prefix_index_ >= prefixes_.size()) return std::nullopt;
    buffer_.clear();
    buffer_pos_ = 0;
    const auto& prefix = prefixes_[prefix_index_++];
    DfsState st;
    st.n = n_;
    st.all = full_mask(n_);
    st.rows.assign(n_, 0);
    for (std::size_t i = 0; i < prefix.size(); ++i) st.rows[i] = prefix[i];
    st.shard_depth = n_ + 1;  // sharding already applied to the prefix list
    EnumerationOptions no_shard;
    st.options = &no_shard;
    std::function<bool(const std::vector<Mask>&)> emit =
        [&](const std::vector<Mask>& rows) {
          Topology t = topology_from_rows(n_, rows);
          if (!options_.up_to_homeomorphism || canonical_open_family(t) == t.opens())
            buffer_.push_back(std::move(t));
          return true;
        };
    st.emit = &emit;
    dfs(st, static_cast<std::uint32_t>(prefix.size()));
  }
  return buffer_[buffer_pos_++];
}

}  // namespace topo
