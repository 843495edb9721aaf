#include "verify.hpp"

#include <algorithm>
#include <thread>

namespace topo {

namespace {

// (fewest open sets, then lexicographic open-family encoding); point counts
// never mix because levels are scanned one at a time.
bool smaller_topology(const Topology& a, const Topology& b) {
  if (a.opens().size() != b.opens().size()) return a.opens().size() < b.opens().size();
  return a.opens() < b.opens();
}

bool is_failure(const Topology& t, const ImplicationQuery& query) {
  Space space{t};
  for (Axiom hypothesis : query.hypotheses) {
    if (!satisfies(space, hypothesis, query.options)) return false;
  }
  return !satisfies(space, query.conclusion, query.options);
}

}  // namespace

ImplicationReport check_implication(const ImplicationQuery& query) {
  if (query.n_min < 1 || query.n_max > kMaxEnumerationPoints || query.n_min > query.n_max)
    throw RangeError("implication range must satisfy 1 <= n_min <= n_max <= 7");

  ImplicationReport report;
  report.query = query;
  const std::uint32_t jobs = std::max<std::uint32_t>(1, query.jobs);

  for (std::uint32_t n = query.n_min; n <= query.n_max; ++n) {
    EnumerationOptions opts;
    opts.up_to_homeomorphism = query.up_to_homeomorphism;
    opts.shard_index = query.shard_index;
    opts.shard_count = query.shard_count;

    std::optional<Topology> level_best;
    std::uint64_t level_count = 0;

    constexpr std::size_t kBatch = 2048;
    std::vector<Topology> batch;
    batch.reserve(kBatch);

    auto flush = [&] {
      if (batch.empty()) return;
      std::vector<std::uint8_t> failed(batch.size(), 0);
      if (jobs == 1 || batch.size() < 2 * jobs) {
        for (std::size_t i = 0; i < batch.size(); ++i)
          failed[i] = is_failure(batch[i], query);
      } else {
        std::vector<std::thread> workers;
        std::size_t chunk = (batch.size() + jobs - 1) / jobs;
        for (std::uint32_t w = 0; w < jobs; ++w) {
          const std::size_t lo = w * chunk;
          const std::size_t hi = std::min(batch.size(), lo + chunk);
          if (lo >= hi) break;
          workers.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i)
              failed[i] = is_failure(batch[i], query);
          });
        }
        for (auto& w : workers) w.join();
      }
      for (std::size_t i = 0; i < batch.size(); ++i) {
        if (failed[i] && (!level_best || smaller_topology(batch[i], *level_best)))
          level_best = batch[i];
      }
      batch.clear();
    };

    for_each_topology(n, opts, [&](const Topology& t) {
      ++level_count;
      batch.push_back(t);
      if (batch.size() >= kBatch) flush();
      return true;
    });
    flush();

    report.checked_count += level_count;
    if (level_best) {
      Counterexample cex;
      cex.topology = *level_best;
      Space space{cex.topology};
      for (Axiom hypothesis : query.hypotheses)
        cex.hypothesis_verdicts.push_back(
            decide_axiom(space, hypothesis, query.options, true));
      cex.conclusion_verdict = decide_axiom(space, query.conclusion, query.options, true);
      report.counterexample = std::move(cex);
      break;
    }
  }
  return report;
}

ImplicationReport search_minimal_counterexample(const ImplicationQuery& query) {
  // Same traversal and ordering; the caller's intent differs (the
  // "hypotheses" are the separating property set).
  return check_implication(query);
}

}  // namespace topo
