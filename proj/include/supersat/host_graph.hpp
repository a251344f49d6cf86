#ifndef SUPERSAT_HOST_GRAPH_HPP
#define SUPERSAT_HOST_GRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supersat/bitset.hpp"

namespace supersat {

using EdgeId = int;

// A subset of host edges, kept sorted and duplicate-free.
using EdgeSubset = std::vector<EdgeId>;

// Simple undirected graph or r-uniform hypergraph.  Immutable after
// construction; edge identifiers follow the lexicographic order of the
// sorted vertex arrays, which every deterministic contract keys off.
class HostGraph {
public:
    HostGraph() = default;
    // Edges are sorted and deduplicated; `dedupe_warnings` (if given)
    // receives one message per dropped duplicate.
    HostGraph(int n, int r, std::vector<std::vector<int>> edges,
              std::vector<std::string>* dedupe_warnings = nullptr);

    static HostGraph complete(int n, int r);

    int vertex_count() const { return n_; }
    int uniformity() const { return r_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::vector<int>>& edges() const { return edges_; }
    const std::vector<int>& edge(EdgeId id) const { return edges_[static_cast<size_t>(id)]; }

    std::optional<EdgeId> find_edge(std::vector<int> vertices) const;
    bool has_edge(std::vector<int> vertices) const { return find_edge(std::move(vertices)).has_value(); }

    // r = 2 helpers.
    bool adjacent(int u, int v) const;
    const Bitset& neighbors(int v) const;
    int degree(int v) const { return incidence_[static_cast<size_t>(v)].count(); }

    // Edge ids through a vertex, as a bitset over edge ids.
    const Bitset& incident_edges(int v) const { return incidence_[static_cast<size_t>(v)]; }

    // Number of edges containing every listed vertex.  Empty list gives
    // e(G); a full r-set gives 0/1 membership.  Duplicates rejected.
    long long codegree(const std::vector<int>& vertices) const;

    void check_edge_subset(const EdgeSubset& subset) const;

private:
    int n_ = 0;
    int r_ = 2;
    std::vector<std::vector<int>> edges_;
    std::map<std::vector<int>, EdgeId> edge_index_;
    std::vector<Bitset> incidence_; // vertex -> edge-id bitset
    std::vector<Bitset> adjacency_; // vertex -> vertex bitset (r = 2 only)
};

// Cycle test over an edge subset; graphs only.
bool is_forest(const EdgeSubset& subset, const HostGraph& g);

// Spanning forest of the subgraph induced by the subset, keeping the
// lowest edge identifiers.  Subset must be non-empty; graphs only.
EdgeSubset maximal_forest(const EdgeSubset& subset, const HostGraph& g);

struct PruneResult {
    HostGraph host;
    std::vector<int> vertex_map; // old vertex -> new vertex, -1 if deleted
    std::vector<int> edge_map;   // old edge id -> new edge id, -1 if deleted
    long long deleted_edges = 0;
};

// Repeatedly deletes vertices of degree < threshold until none remain.
// The fixed point does not depend on deletion order.
PruneResult prune_min_degree(const HostGraph& g, double threshold);

} // namespace supersat

#endif
