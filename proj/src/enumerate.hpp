#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "space.hpp"

namespace topo {

struct EnumerationOptions {
  bool up_to_homeomorphism = false;
  // Prefix sharding: only subtrees whose prefix ordinal is congruent to
  // shard_index modulo shard_count are visited. shard 0 of 1 is everything.
  std::uint32_t shard_index = 0;
  std::uint32_t shard_count = 1;
};

/// Visits every labeled topology on n points exactly once (one canonical
/// representative per homeomorphism class when requested). The visitor may
/// return false to stop early. Throws RangeError for n outside [1, 7].
void for_each_topology(std::uint32_t n, const EnumerationOptions& options,
                       const std::function<bool(const Topology&)>& visit);

/// Materialized stream, in the same deterministic order. Intended for
/// n <= 6; n = 7 yields ~9.5M spaces and should be consumed via
/// for_each_topology.
std::vector<Topology> enumerate_topologies(std::uint32_t n,
                                           const EnumerationOptions& options = {});

/// Number of labeled topologies the stream would yield (no materialization).
std::uint64_t count_topologies(std::uint32_t n, const EnumerationOptions& options = {});

/// Lexicographically least open-family encoding over all point relabelings;
/// the canonical representative of the homeomorphism class.
std::vector<Mask> canonical_open_family(const Topology& topology);

/// Incremental consumption with bounded memory: the generation tree is
/// walked one prefix at a time, in the same order as for_each_topology.
class TopologyStream {
 public:
  TopologyStream(std::uint32_t n, const EnumerationOptions& options);

  /// The next topology, or nothing when exhausted.
  std::optional<Topology> next();

 private:
  std::uint32_t n_;
  EnumerationOptions options_;
  std::vector<std::vector<Mask>> prefixes_;
  std::size_t prefix_index_ = 0;
  std::vector<Topology> buffer_;
  std::size_t buffer_pos_ = 0;
};

}  // namespace topo
