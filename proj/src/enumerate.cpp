#include "supersat/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace supersat {

namespace {

// All simple x -> y paths of exactly b edges whose internal vertices
// avoid {x, y}; each path carries its internal-vertex mask.
struct PathRec {
    std::vector<int> vertices;
    Bitset internal_mask;
};

void collect_paths(const HostGraph& g, int x, int y, int b,
                   std::vector<int>& cur, Bitset& used,
                   std::vector<PathRec>& out) {
    int v = cur.back();
    int remaining = b - (static_cast<int>(cur.size()) - 1);
    if (remaining == 1) {
        if (g.adjacent(v, y)) {
            PathRec rec;
            rec.vertices = cur;
            rec.vertices.push_back(y);
            rec.internal_mask = used;
            out.push_back(std::move(rec));
        }
        return;
    }
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (w == x || w == y || used.test(w)) continue;
        if (!g.adjacent(v, w)) continue;
        cur.push_back(w);
        used.set(w);
        collect_paths(g, x, y, b, cur, used, out);
        used.reset(w);
        cur.pop_back();
    }
}

void choose_disjoint(const std::vector<PathRec>& paths, int a, size_t start,
                     std::vector<int>& picked, Bitset& used_internals,
                     const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(picked.size()) == a) {
        emit(picked);
        return;
    }
    for (size_t i = start; i < paths.size(); ++i) {
        if (paths[i].internal_mask.intersects(used_internals)) continue;
        Bitset saved = used_internals;
        Bitset merged = used_internals;
        for (int v : paths[i].internal_mask.to_indices()) merged.set(v);
        picked.push_back(static_cast<int>(i));
        used_internals = merged;
        choose_disjoint(paths, a, i + 1, picked, used_internals, emit);
        used_internals = saved;
        picked.pop_back();
    }
}

} // namespace

std::vector<ThetaCopy> enumerate_theta(const HostGraph& g, int a, int b) {
    if (g.uniformity() != 2)
        throw std::invalid_argument("theta enumeration requires a graph (r = 2)");
    if (a < 2 || b < 2) throw std::invalid_argument("theta enumeration requires a,b >= 2");

    std::map<EdgeSubset, ThetaCopy> by_edge_set;
    for (int x = 0; x < g.vertex_count(); ++x) {
        for (int y = x + 1; y < g.vertex_count(); ++y) {
            std::vector<PathRec> paths;
            std::vector<int> cur{x};
            Bitset used(g.vertex_count());
            collect_paths(g, x, y, b, cur, used, paths);
            if (static_cast<int>(paths.size()) < a) continue;
            std::sort(paths.begin(), paths.end(),
                      [](const PathRec& l, const PathRec& r) { return l.vertices < r.vertices; });

            std::vector<int> picked;
            Bitset internals(g.vertex_count());
            choose_disjoint(paths, a, 0, picked, internals,
                            [&](const std::vector<int>& idx) {
                                ThetaCopy copy;
                                copy.x = x;
                                copy.y = y;
                                for (int i : idx) copy.paths.push_back(paths[static_cast<size_t>(i)].vertices);
                                EdgeSubset ids;
                                for (const auto& p : copy.paths)
                                    for (size_t e = 0; e + 1 < p.size(); ++e)
                                        ids.push_back(*g.find_edge({p[e], p[e + 1]}));
                                std::sort(ids.begin(), ids.end());
                                copy.edge_ids = std::move(ids);
                                auto it = by_edge_set.find(copy.edge_ids);
                                if (it == by_edge_set.end()) {
                                    by_edge_set.emplace(copy.edge_ids, std::move(copy));
                                } else if (copy.encoding() < it->second.encoding()) {
                                    it->second = std::move(copy);
                                }
                            });
        }
    }

    std::vector<ThetaCopy> out;
    out.reserve(by_edge_set.size());
    for (auto& kv : by_edge_set) out.push_back(std::move(kv.second));
    std::sort(out.begin(), out.end(), [](const ThetaCopy& l, const ThetaCopy& r) {
        return l.encoding() < r.encoding();
    });
    return out;
}

namespace {

void combinations(const std::vector<int>& pool, int k, size_t start,
                  std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(cur.size()) == k) {
        emit(cur);
        return;
    }
    size_t need = static_cast<size_t>(k) - cur.size();
    for (size_t i = start; i + need <= pool.size(); ++i) {
        cur.push_back(pool[i]);
        combinations(pool, k, i + 1, cur, emit);
        cur.pop_back();
    }
}

// Every transversal of the chosen parts, extended by v, must meet at
// least one host edge; at the last part this is exact edge membership.
bool extension_feasible(const HostGraph& g, const std::vector<std::vector<int>>& parts, int v) {
    if (parts.empty()) return true;
    std::vector<size_t> idx(parts.size(), 0);
    while (true) {
        std::vector<int> t;
        t.reserve(parts.size() + 1);
        for (size_t i = 0; i < parts.size(); ++i) t.push_back(parts[i][idx[i]]);
        t.push_back(v);
        if (g.codegree(t) < 1) return false;
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

} // namespace

std::vector<RPartiteCopy> enumerate_rpartite(const HostGraph& g, const std::vector<int>& profile) {
    if (static_cast<int>(profile.size()) != g.uniformity())
        throw std::invalid_argument("profile length must match host uniformity");
    PatternSpec::complete(profile); // validates profile shape

    std::vector<RPartiteCopy> out;
    std::vector<std::vector<int>> parts;
    std::vector<bool> used(static_cast<size_t>(g.vertex_count()), false);

    std::function<void()> recurse = [&]() {
        size_t i = parts.size();
        if (i == profile.size()) {
            RPartiteCopy copy;
            copy.parts = parts;
            out.push_back(std::move(copy));
            return;
        }
        std::vector<int> candidates;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            if (extension_feasible(g, parts, v)) candidates.push_back(v);
        }
        std::vector<int> cur;
        combinations(candidates, profile[i], 0, cur, [&](const std::vector<int>& part) {
            parts.push_back(part);
            for (int v : part) used[static_cast<size_t>(v)] = true;
            recurse();
            for (int v : part) used[static_cast<size_t>(v)] = false;
            parts.pop_back();
        });
    };
    recurse();

    std::sort(out.begin(), out.end(), [](const RPartiteCopy& l, const RPartiteCopy& r) {
        return l.encoding() < r.encoding();
    });
    return out;
}

std::vector<ThetaCopy> enumerate_theta(const HostGraph& g, const PatternSpec& pattern) {
    if (pattern.kind != PatternSpec::Kind::Theta)
        throw std::invalid_argument("pattern is not a theta pattern");
    return enumerate_theta(g, pattern.a, pattern.b);
}

long long enumerate_count(const HostGraph& g, const PatternSpec& pattern) {
    if (pattern.kind == PatternSpec::Kind::Theta)
        return static_cast<long long>(enumerate_theta(g, pattern.a, pattern.b).size());
    return static_cast<long long>(enumerate_rpartite(g, pattern.profile).size());
}

long long count_cycles(const HostGraph& g, int length) {
    if (g.uniformity() != 2) throw std::invalid_argument("cycle counting requires a graph");
    if (length < 3) throw std::invalid_argument("cycle length must be at least 3");
    long long doubled = 0;
    std::vector<bool> used(static_cast<size_t>(g.vertex_count()), false);
    // root each cycle at its minimum vertex; every cycle is then walked
    // exactly twice (once per direction)
    std::function<void(int, int, int)> walk = [&](int root, int v, int togo) {
        if (togo == 0) {
            if (g.adjacent(v, root)) ++doubled;
            return;
        }
        for (int w = root + 1; w < g.vertex_count(); ++w) {
            if (used[static_cast<size_t>(w)] || !g.adjacent(v, w)) continue;
            used[static_cast<size_t>(w)] = true;
            walk(root, w, togo - 1);
            used[static_cast<size_t>(w)] = false;
        }
    };
    for (int root = 0; root < g.vertex_count(); ++root) {
        used[static_cast<size_t>(root)] = true;
        walk(root, root, length - 1);
        used[static_cast<size_t>(root)] = false;
    }
    return doubled / 2;
}

} // namespace supersat
