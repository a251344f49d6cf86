#include "supersat/host_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "supersat/numeric.hpp"

namespace supersat {

HostGraph::HostGraph(int n, int r, std::vector<std::vector<int>> edges,
                     std::vector<std::string>* dedupe_warnings)
    : n_(n), r_(r) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (r < 2) throw std::invalid_argument("uniformity must be at least 2");

    for (auto& e : edges) {
        if (static_cast<int>(e.size()) != r)
            throw std::invalid_argument("edge arity does not match uniformity");
        std::sort(e.begin(), e.end());
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n) throw std::invalid_argument("edge vertex out of range");
            if (i > 0 && e[i] == e[i - 1]) throw std::invalid_argument("edge has repeated vertex");
        }
    }
    std::sort(edges.begin(), edges.end());
    std::vector<std::vector<int>> unique_edges;
    unique_edges.reserve(edges.size());
    for (auto& e : edges) {
        if (!unique_edges.empty() && unique_edges.back() == e) {
            if (dedupe_warnings) {
                std::ostringstream os;
                os << "dropped duplicate edge [";
                for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
                os << "]";
                dedupe_warnings->push_back(os.str());
            }
            continue;
        }
        unique_edges.push_back(std::move(e));
    }
    edges_ = std::move(unique_edges);

    incidence_.assign(static_cast<size_t>(n_), Bitset(edge_count()));
    if (r_ == 2) adjacency_.assign(static_cast<size_t>(n_), Bitset(n_));
    for (EdgeId id = 0; id < edge_count(); ++id) {
        edge_index_.emplace(edges_[static_cast<size_t>(id)], id);
        for (int v : edges_[static_cast<size_t>(id)]) incidence_[static_cast<size_t>(v)].set(id);
        if (r_ == 2) {
            adjacency_[static_cast<size_t>(edges_[id][0])].set(edges_[id][1]);
            adjacency_[static_cast<size_t>(edges_[id][1])].set(edges_[id][0]);
        }
    }
}

HostGraph HostGraph::complete(int n, int r) {
    std::vector<std::vector<int>> edges;
    std::vector<int> pick;
    // lex enumeration of all r-subsets of [0, n)
    std::vector<int> idx(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<size_t>(i)] = i;
    if (r <= n) {
        while (true) {
            edges.push_back(idx);
            int i = r - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == n - r + i) --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < r; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return HostGraph(n, r, std::move(edges));
}

std::optional<EdgeId> HostGraph::find_edge(std::vector<int> vertices) const {
    std::sort(vertices.begin(), vertices.end());
    auto it = edge_index_.find(vertices);
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

bool HostGraph::adjacent(int u, int v) const {
    if (r_ != 2) throw std::invalid_argument("adjacency query requires a graph (r = 2)");
    return adjacency_[static_cast<size_t>(u)].test(v);
}

const Bitset& HostGraph::neighbors(int v) const {
    if (r_ != 2) throw std::invalid_argument("neighborhood query requires a graph (r = 2)");
    return adjacency_[static_cast<size_t>(v)];
}

long long HostGraph::codegree(const std::vector<int>& vertices) const {
    if (static_cast<int>(vertices.size()) > r_)
        throw std::invalid_argument("codegree query larger than uniformity");
    std::set<int> seen(vertices.begin(), vertices.end());
    if (seen.size() != vertices.size())
        throw std::invalid_argument("codegree query has duplicate vertices");
    if (vertices.empty()) return edge_count();
    for (int v : vertices)
        if (v < 0 || v >= n_) throw std::invalid_argument("codegree vertex out of range");

    Bitset acc = incidence_[static_cast<size_t>(vertices[0])];
    for (size_t i = 1; i < vertices.size(); ++i) acc &= incidence_[static_cast<size_t>(vertices[i])];
    return acc.count();
}

void HostGraph::check_edge_subset(const EdgeSubset& subset) const {
    for (size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 0 || subset[i] >= edge_count())
            throw std::invalid_argument("edge identifier out of range");
        if (i > 0 && subset[i] <= subset[i - 1])
            throw std::invalid_argument("edge subset must be sorted and duplicate-free");
    }
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

} // namespace

bool is_forest(const EdgeSubset& subset, const HostGraph& g) {
    if (g.uniformity() != 2)
        throw std::invalid_argument("forest test requires a graph (r = 2)");
    g.check_edge_subset(subset);
    UnionFind uf(g.vertex_count());
    for (EdgeId id : subset) {
        const auto& e = g.edge(id);
        if (!uf.unite(e[0], e[1])) return false;
    }
    return true;
}

EdgeSubset maximal_forest(const EdgeSubset& subset, const HostGraph& g) {
    if (g.uniformity() != 2)
        throw std::invalid_argument("forest extraction requires a graph (r = 2)");
    if (subset.empty()) throw std::invalid_argument("maximal_forest requires a non-empty subset");
    g.check_edge_subset(subset);
    UnionFind uf(g.vertex_count());
    EdgeSubset kept;
    for (EdgeId id : subset) {
        const auto& e = g.edge(id);
        if (uf.unite(e[0], e[1])) kept.push_back(id);
    }
    return kept;
}

PruneResult prune_min_degree(const HostGraph& g, double threshold) {
    if (threshold < 0) throw std::invalid_argument("threshold must be non-negative");
    int n = g.vertex_count();
    std::vector<bool> alive_vertex(static_cast<size_t>(n), true);
    std::vector<bool> alive_edge(static_cast<size_t>(g.edge_count()), true);
    std::vector<long long> degree(static_cast<size_t>(n), 0);
    for (EdgeId id = 0; id < g.edge_count(); ++id)
        for (int v : g.edge(id)) ++degree[static_cast<size_t>(v)];

    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (!alive_vertex[static_cast<size_t>(v)]) continue;
            if (count_meets_cap(degree[static_cast<size_t>(v)], threshold)) continue;
            alive_vertex[static_cast<size_t>(v)] = false;
            changed = true;
            const Bitset& inc = g.incident_edges(v);
            for (EdgeId id = 0; id < g.edge_count(); ++id) {
                if (!inc.test(id) || !alive_edge[static_cast<size_t>(id)]) continue;
                alive_edge[static_cast<size_t>(id)] = false;
                for (int u : g.edge(id)) --degree[static_cast<size_t>(u)];
            }
        }
    }

    PruneResult out;
    out.vertex_map.assign(static_cast<size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (alive_vertex[static_cast<size_t>(v)]) out.vertex_map[static_cast<size_t>(v)] = next++;

    std::vector<std::vector<int>> new_edges;
    std::vector<EdgeId> kept_ids;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        if (!alive_edge[static_cast<size_t>(id)]) continue;
        std::vector<int> e = g.edge(id);
        for (int& v : e) v = out.vertex_map[static_cast<size_t>(v)];
        new_edges.push_back(std::move(e));
        kept_ids.push_back(id);
    }
    out.host = HostGraph(next, g.uniformity(), new_edges);
    out.edge_map.assign(static_cast<size_t>(g.edge_count()), -1);
    // relabeling preserves lex order vertex-wise, so kept ids stay sorted
    for (size_t i = 0; i < kept_ids.size(); ++i)
        out.edge_map[static_cast<size_t>(kept_ids[i])] = static_cast<int>(i);
    out.deleted_edges = g.edge_count() - static_cast<long long>(kept_ids.size());
    return out;
}

} // namespace supersat
