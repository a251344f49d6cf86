#ifndef SUPERSAT_ENUMERATE_HPP
#define SUPERSAT_ENUMERATE_HPP

#include <vector>

#include "supersat/copies.hpp"
#include "supersat/host_graph.hpp"
#include "supersat/pattern.hpp"

namespace supersat {

// All theta copies, one per edge set, in canonical-encoding order.
// Meet-in-the-middle over candidate endpoint pairs: paths of length b
// from each pair, then internally disjoint a-subsets.
std::vector<ThetaCopy> enumerate_theta(const HostGraph& g, int a, int b);

// All ordered complete r-partite copies in canonical-encoding order.
// Parts are extended one at a time against common-neighborhood style
// candidate sets.
std::vector<RPartiteCopy> enumerate_rpartite(const HostGraph& g, const std::vector<int>& profile);

std::vector<ThetaCopy> enumerate_theta(const HostGraph& g, const PatternSpec& pattern);
long long enumerate_count(const HostGraph& g, const PatternSpec& pattern);

// Independent cycle counter: number of (unlabeled) cycles of the given
// length, used to cross-check theta_{2,b} = C_{2b} enumeration.
long long count_cycles(const HostGraph& g, int length);

} // namespace supersat

#endif
