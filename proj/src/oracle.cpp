#include "supersat/oracle.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "supersat/errors.hpp"

namespace supersat {

namespace {

using PlainEdges = std::set<std::vector<int>>;

bool plain_has_edge(const PlainEdges& edges, std::vector<int> vs) {
    std::sort(vs.begin(), vs.end());
    return edges.count(vs) > 0;
}

// Assign the theta skeleton vertex by vertex: slot 0 = x, slot 1 = y,
// then b-1 internal slots per path.  Every decomposition and orientation
// is visited; copies are deduplicated by edge set.
struct ThetaSweep {
    int n, a, b;
    const PlainEdges& edges;
    std::vector<int> slot; // current assignment
    std::vector<bool> used;
    std::set<std::set<std::vector<int>>> found; // edge sets (canonical pairs)

    ThetaSweep(int n, int a, int b, const PlainEdges& edges)
        : n(n), a(a), b(b), edges(edges), used(static_cast<size_t>(n), false) {}

    int total_slots() const { return 2 + a * (b - 1); }

    // vertex occupying path p, position i (0..b); positions 0 and b are
    // the shared endpoints
    int path_vertex(int p, int i) const {
        if (i == 0) return slot[0];
        if (i == b) return slot[1];
        return slot[static_cast<size_t>(2 + p * (b - 1) + (i - 1))];
    }

    bool edge_ok_upto(int filled) {
        // check only edges whose later endpoint was just filled
        int p = (filled - 2) / (b - 1);
        int pos = (filled - 2) % (b - 1) + 1;
        int v = path_vertex(p, pos);
        if (!plain_has_edge(edges, {path_vertex(p, pos - 1), v})) return false;
        if (pos == b - 1 && !plain_has_edge(edges, {v, slot[1]})) return false;
        return true;
    }

    void record() {
        std::set<std::vector<int>> es;
        for (int p = 0; p < a; ++p)
            for (int i = 0; i < b; ++i) {
                std::vector<int> e{path_vertex(p, i), path_vertex(p, i + 1)};
                std::sort(e.begin(), e.end());
                es.insert(std::move(e));
            }
        found.insert(std::move(es));
    }

    void sweep(int filled) {
        if (filled == total_slots()) {
            record();
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            slot.push_back(v);
            used[static_cast<size_t>(v)] = true;
            bool ok = true;
            if (filled >= 2) ok = edge_ok_upto(filled);
            if (ok) sweep(filled + 1);
            used[static_cast<size_t>(v)] = false;
            slot.pop_back();
        }
    }
};

long long oracle_theta(const HostGraph& g, int a, int b) {
    PlainEdges edges(g.edges().begin(), g.edges().end());
    ThetaSweep sweep(g.vertex_count(), a, b, edges);
    sweep.sweep(0);
    return static_cast<long long>(sweep.found.size());
}

struct RPartiteSweep {
    int n;
    const std::vector<int>& profile;
    const PlainEdges& edges;
    std::vector<std::vector<int>> parts;
    std::vector<bool> used;
    long long count = 0;

    RPartiteSweep(int n, const std::vector<int>& profile, const PlainEdges& edges)
        : n(n), profile(profile), edges(edges), used(static_cast<size_t>(n), false) {}

    bool all_transversals_present() {
        std::vector<size_t> idx(parts.size(), 0);
        while (true) {
            std::vector<int> t;
            for (size_t i = 0; i < parts.size(); ++i) t.push_back(parts[i][idx[i]]);
            if (!plain_has_edge(edges, t)) return false;
            size_t i = parts.size();
            bool advanced = false;
            while (i > 0) {
                --i;
                if (++idx[i] < parts[i].size()) {
                    advanced = true;
                    break;
                }
                idx[i] = 0;
            }
            if (!advanced) return true;
        }
    }

    void pick_part(size_t part_index, int size, int min_vertex, std::vector<int>& cur) {
        if (static_cast<int>(cur.size()) == size) {
            parts.push_back(cur);
            next_part(part_index + 1);
            parts.pop_back();
            return;
        }
        for (int v = min_vertex; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            used[static_cast<size_t>(v)] = true;
            cur.push_back(v);
            pick_part(part_index, size, v + 1, cur);
            cur.pop_back();
            used[static_cast<size_t>(v)] = false;
        }
    }

    void next_part(size_t part_index) {
        if (part_index == profile.size()) {
            if (all_transversals_present()) ++count;
            return;
        }
        std::vector<int> cur;
        pick_part(part_index, profile[part_index], 0, cur);
    }
};

long long oracle_rpartite(const HostGraph& g, const std::vector<int>& profile) {
    PlainEdges edges(g.edges().begin(), g.edges().end());
    RPartiteSweep sweep(g.vertex_count(), profile, edges);
    sweep.next_part(0);
    return sweep.count;
}

} // namespace

long long oracle_count(const HostGraph& g, const PatternSpec& pattern, int vertex_guard) {
    if (g.vertex_count() > vertex_guard)
        throw GuardError("oracle_count host exceeds vertex guard (" +
                         std::to_string(vertex_guard) + ")");
    if (pattern.kind == PatternSpec::Kind::Theta) {
        if (g.uniformity() != 2) throw std::invalid_argument("theta oracle requires a graph");
        return oracle_theta(g, pattern.a, pattern.b);
    }
    if (g.uniformity() != static_cast<int>(pattern.profile.size()))
        throw std::invalid_argument("profile length must match host uniformity");
    return oracle_rpartite(g, pattern.profile);
}

} // namespace supersat
