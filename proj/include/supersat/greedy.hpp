#ifndef SUPERSAT_GREEDY_HPP
#define SUPERSAT_GREEDY_HPP

#include <cstdint>
#include <optional>

#include "supersat/balanced_family.hpp"

namespace supersat {

enum class StopReason { TargetReached, Exhausted, VacuousParameters };

const char* stop_reason_name(StopReason r);

struct BuildResult {
    BalancedFamily family;
    StopReason stop = StopReason::Exhausted;
    long long candidates_seen = 0;
};

// Default size targets: delta k^{ab} n^2 for theta,
// delta k^{a1...ar} n^{a1+...+a_{r-1}} for complete.
double theta_build_target(const ScaleParams& p);
double rpartite_build_target(const ScaleParams& p);

// Greedy construction: scan enumerated copies in canonical order (or
// shuffled by seed) and add every copy whose addition keeps the family
// within its degree caps; stop at the target size or when no candidate
// is addable.  Since degrees only grow, a rejected candidate can never
// become addable later, so the single pass realises the rescan loop.
BuildResult build_theta_family(const HostGraph& g, const ScaleParams& p, double target,
                               std::optional<uint64_t> shuffle_seed = std::nullopt);
BuildResult build_rpartite_family(const HostGraph& g, const ScaleParams& p, double target,
                                  std::optional<uint64_t> shuffle_seed = std::nullopt);

// One part of the constructive tuple extension: pick `a_i` vertices for
// part `part_index` (0-based), each structurally completing the partial
// copy and avoiding the blocked-vertex set of the current tuple.  The
// suffix holds the already-fixed singleton vertices of parts
// part_index+1 .. r-1.  Exhausting the pool is a normal outcome.
std::optional<std::vector<int>> extend_good_part(const HostGraph& g,
                                                 const SaturatedLedger& ledger,
                                                 const ScaleParams& p,
                                                 const std::vector<std::vector<int>>& prefix_parts,
                                                 const std::vector<int>& fixed_suffix,
                                                 int part_index);

struct RatioReport {
    double constant = 0.0;
    EdgeSubset argmax;
    long long degree = 0;
};

// Smallest C such that d_H(sigma) <= C |H| / (k^{(1+alpha)(|sigma|-1)} e(G))
// over every positive-degree edge subset of size <= e(pattern); the
// maximum is attained on subsets of members' edge sets.
RatioReport degree_ratio_constant(const BalancedFamily& fam, const HostGraph& g,
                                  const ScaleParams& p, double alpha);

// Edge pruning against a family: theta hosts drop every edge whose
// single-edge degree meets the cap; complete hosts drop every edge some
// ordering of which forms a saturated singleton tuple.
PruneResult prune_overloaded_edges(const HostGraph& g, const BalancedFamily& fam,
                                   const ScaleParams& p, double cap);

double default_overload_cap(const ScaleParams& p);

} // namespace supersat

#endif
