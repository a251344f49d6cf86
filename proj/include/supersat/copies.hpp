#ifndef SUPERSAT_COPIES_HPP
#define SUPERSAT_COPIES_HPP

#include <vector>

#include "supersat/host_graph.hpp"
#include "supersat/pattern.hpp"

namespace supersat {

// One theta copy: endpoints x != y joined by a internally disjoint paths
// of length b.  Paths are stored x -> y and sorted; among all valid
// decompositions of the same edge set the lexicographically smallest
// encoding (x, y, paths) with x < y is kept, so a copy is uniquely
// represented by either its edge set or its stored decomposition.
struct ThetaCopy {
    int x = -1;
    int y = -1;
    std::vector<std::vector<int>> paths; // each path: x, ..., y (b+1 vertices)
    EdgeSubset edge_ids;                 // the a*b edges, sorted

    std::vector<int> encoding() const;
    void validate(const HostGraph& g, int a, int b) const;
};

// One ordered complete r-partite copy: parts are sorted vertex sets,
// pairwise disjoint, with every transversal present as a host edge.
// Distinct orderings of the same partition are distinct copies.
struct RPartiteCopy {
    std::vector<std::vector<int>> parts;

    std::vector<int> encoding() const;
    EdgeSubset transversal_edge_ids(const HostGraph& g) const;
    void validate(const HostGraph& g, const std::vector<int>& profile) const;
};

// Sub-tuple query for the complete case: one non-empty sorted vertex set
// per part.
using TupleQuery = std::vector<std::vector<int>>;

bool theta_copy_contains(const ThetaCopy& copy, const EdgeSubset& query);
bool rpartite_copy_contains(const RPartiteCopy& copy, const TupleQuery& query);

} // namespace supersat

#endif
