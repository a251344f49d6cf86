#ifndef SUPERSAT_ORACLE_HPP
#define SUPERSAT_ORACLE_HPP

#include "supersat/host_graph.hpp"
#include "supersat/pattern.hpp"

namespace supersat {

// Brute-force copy counter sharing no code with the fast enumerators:
// exhaustive sweep of candidate vertex assignments against a plain
// sorted edge list.  Refuses hosts above the vertex guard.
long long oracle_count(const HostGraph& g, const PatternSpec& pattern, int vertex_guard = 12);

} // namespace supersat

#endif
