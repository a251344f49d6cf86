#include "supersat/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "supersat/enumerate.hpp"
#include "supersat/numeric.hpp"
#include "supersat/random_host.hpp"

namespace supersat {

const char* stop_reason_name(StopReason r) {
    switch (r) {
        case StopReason::TargetReached: return "target_reached";
        case StopReason::Exhausted: return "exhausted";
        case StopReason::VacuousParameters: return "vacuous_parameters";
    }
    return "unknown";
}

double theta_build_target(const ScaleParams& p) {
    return p.delta * std::pow(p.k, static_cast<double>(p.pattern.a) * p.pattern.b) *
           static_cast<double>(p.n) * static_cast<double>(p.n);
}

double rpartite_build_target(const ScaleParams& p) {
    double prod = 1.0, partial_sum = 0.0;
    const auto& prof = p.pattern.profile;
    for (size_t i = 0; i < prof.size(); ++i) {
        prod *= prof[i];
        if (i + 1 < prof.size()) partial_sum += prof[i];
    }
    return p.delta * std::pow(p.k, prod) * std::pow(static_cast<double>(p.n), partial_sum);
}

namespace {

template <typename T>
void shuffle_order(std::vector<T>& items, uint64_t seed) {
    uint64_t state = seed;
    for (size_t i = items.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(splitmix64_next(state) % i);
        std::swap(items[i - 1], items[j]);
    }
}

} // namespace

BuildResult build_theta_family(const HostGraph& g, const ScaleParams& p, double target,
                               std::optional<uint64_t> shuffle_seed) {
    if (p.pattern.kind != PatternSpec::Kind::Theta)
        throw std::invalid_argument("theta builder requires a theta pattern");
    BuildResult out;
    out.family.pattern = p.pattern;
    if (caps_vacuous(p)) {
        out.stop = StopReason::VacuousParameters;
        return out;
    }

    std::vector<ThetaCopy> copies = enumerate_theta(g, p.pattern.a, p.pattern.b);
    if (shuffle_seed) shuffle_order(copies, *shuffle_seed);

    std::vector<double> caps(static_cast<size_t>(max_forest_size(p.pattern)) + 1, 0.0);
    for (int j = 1; j <= max_forest_size(p.pattern); ++j)
        caps[static_cast<size_t>(j)] = forest_degree_cap(j, p);

    auto& ledger = out.family.forest_ledger;
    auto& members = out.family.theta_members;
    if (static_cast<double>(members.size()) >= target) {
        out.stop = StopReason::TargetReached;
        return out;
    }
    for (const auto& copy : copies) {
        ++out.candidates_seen;
        auto subsets = forest_subsets(g, copy);
        bool addable = true;
        for (const auto& s : subsets) {
            auto it = ledger.find(s);
            long long d = it == ledger.end() ? 0 : it->second;
            if (!count_within_cap(d + 1, caps[s.size()])) {
                addable = false;
                break;
            }
        }
        if (!addable) continue;
        for (const auto& s : subsets) ++ledger[s];
        members.push_back(copy);
        if (static_cast<double>(members.size()) >= target) {
            out.stop = StopReason::TargetReached;
            return out;
        }
    }
    out.stop = StopReason::Exhausted;
    return out;
}

BuildResult build_rpartite_family(const HostGraph& g, const ScaleParams& p, double target,
                                  std::optional<uint64_t> shuffle_seed) {
    if (p.pattern.kind != PatternSpec::Kind::Complete)
        throw std::invalid_argument("r-partite builder requires a complete pattern");
    BuildResult out;
    out.family.pattern = p.pattern;
    if (caps_vacuous(p)) {
        out.stop = StopReason::VacuousParameters;
        return out;
    }

    std::vector<RPartiteCopy> copies = enumerate_rpartite(g, p.pattern.profile);
    if (shuffle_seed) shuffle_order(copies, *shuffle_seed);

    std::map<std::vector<int>, long long> floor_by_sizes;
    auto cap_for = [&](const TupleQuery& t) {
        std::vector<int> sizes;
        sizes.reserve(t.size());
        for (const auto& part : t) sizes.push_back(static_cast<int>(part.size()));
        auto it = floor_by_sizes.find(sizes);
        if (it == floor_by_sizes.end())
            it = floor_by_sizes.emplace(sizes, floor_cap(tuple_degree_cap(sizes, p))).first;
        return it->second;
    };

    auto& ledger = out.family.tuple_ledger;
    auto& members = out.family.rp_members;
    if (static_cast<double>(members.size()) >= target) {
        out.stop = StopReason::TargetReached;
        return out;
    }
    for (const auto& copy : copies) {
        ++out.candidates_seen;
        auto tuples = sub_tuples(copy);
        bool addable = true;
        for (const auto& t : tuples) {
            auto it = ledger.find(t);
            long long d = it == ledger.end() ? 0 : it->second;
            if (d + 1 > cap_for(t)) {
                addable = false;
                break;
            }
        }
        if (!addable) continue;
        for (const auto& t : tuples) ++ledger[t];
        members.push_back(copy);
        if (static_cast<double>(members.size()) >= target) {
            out.stop = StopReason::TargetReached;
            return out;
        }
    }
    out.stop = StopReason::Exhausted;
    return out;
}

std::optional<std::vector<int>> extend_good_part(const HostGraph& g,
                                                 const SaturatedLedger& ledger,
                                                 const ScaleParams& p,
                                                 const std::vector<std::vector<int>>& prefix_parts,
                                                 const std::vector<int>& fixed_suffix,
                                                 int part_index) {
    if (p.pattern.kind != PatternSpec::Kind::Complete)
        throw std::invalid_argument("tuple extension requires a complete pattern");
    const auto& prof = p.pattern.profile;
    int r = static_cast<int>(prof.size());
    if (part_index < 0 || part_index >= r)
        throw std::invalid_argument("part index out of range");
    if (static_cast<int>(prefix_parts.size()) != part_index ||
        static_cast<int>(fixed_suffix.size()) != r - part_index - 1)
        throw std::invalid_argument("prefix/suffix shape does not match part index");

    std::set<int> used;
    for (const auto& part : prefix_parts) used.insert(part.begin(), part.end());
    used.insert(fixed_suffix.begin(), fixed_suffix.end());

    // structural pool: v makes (prefix..., {v}, suffix singletons...) a
    // complete r-partite subgraph
    auto structurally_ok = [&](int v) {
        std::vector<std::vector<int>> parts = prefix_parts;
        parts.push_back({v});
        for (int s : fixed_suffix) parts.push_back({s});
        std::vector<size_t> idx(parts.size(), 0);
        while (true) {
            std::vector<int> t;
            t.reserve(parts.size());
            for (size_t i = 0; i < parts.size(); ++i) t.push_back(parts[i][idx[i]]);
            if (!g.has_edge(t)) return false;
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
    };

    std::vector<int> pool;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!used.count(v) && structurally_ok(v)) pool.push_back(v);

    std::vector<int> part;
    for (int picked = 0; picked < prof[static_cast<size_t>(part_index)]; ++picked) {
        std::vector<std::vector<int>> tuple = prefix_parts;
        tuple.push_back(part);
        for (int s : fixed_suffix) tuple.push_back({s});
        std::vector<int> blocked = blocked_part_vertices(ledger, tuple, part_index);
        std::optional<int> chosen;
        for (int v : pool) {
            if (std::binary_search(part.begin(), part.end(), v)) continue;
            if (std::binary_search(blocked.begin(), blocked.end(), v)) continue;
            chosen = v;
            break;
        }
        if (!chosen) return std::nullopt;
        part.push_back(*chosen);
        std::sort(part.begin(), part.end());
    }
    return part;
}

RatioReport degree_ratio_constant(const BalancedFamily& fam, const HostGraph& g,
                                  const ScaleParams& p, double alpha) {
    if (fam.size() == 0) throw std::invalid_argument("ratio audit requires a non-empty family");
    std::map<EdgeSubset, long long> degrees;
    auto accumulate = [&](const EdgeSubset& edges) {
        int m = static_cast<int>(edges.size());
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            EdgeSubset subset;
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) subset.push_back(edges[static_cast<size_t>(i)]);
            ++degrees[subset];
        }
    };
    if (fam.pattern.kind == PatternSpec::Kind::Theta) {
        for (const auto& m : fam.theta_members) accumulate(m.edge_ids);
    } else {
        for (const auto& m : fam.rp_members) accumulate(m.transversal_edge_ids(g));
    }

    RatioReport rep;
    double eg = static_cast<double>(g.edge_count());
    double h = static_cast<double>(fam.size());
    for (const auto& [subset, degree] : degrees) {
        double c = static_cast<double>(degree) *
                   std::pow(p.k, (1.0 + alpha) * (static_cast<double>(subset.size()) - 1.0)) *
                   eg / h;
        if (c > rep.constant) {
            rep.constant = c;
            rep.argmax = subset;
            rep.degree = degree;
        }
    }
    return rep;
}

double default_overload_cap(const ScaleParams& p) {
    if (p.pattern.kind != PatternSpec::Kind::Theta)
        throw std::invalid_argument("overload cap default applies to theta parameters");
    int a = p.pattern.a, b = p.pattern.b;
    double eps1 = p.epsilons.at(1);
    return std::pow(eps1, 2.0 * a * b + 1.0) *
           std::pow(p.k, static_cast<double>(a) * b - 1.0) *
           std::pow(static_cast<double>(p.n), 1.0 - 1.0 / b);
}

PruneResult prune_overloaded_edges(const HostGraph& g, const BalancedFamily& fam,
                                   const ScaleParams& p, double cap) {
    std::vector<bool> drop(static_cast<size_t>(g.edge_count()), false);
    if (fam.pattern.kind == PatternSpec::Kind::Theta) {
        for (EdgeId id = 0; id < g.edge_count(); ++id) {
            auto it = fam.forest_ledger.find(EdgeSubset{id});
            long long d = it == fam.forest_ledger.end() ? 0 : it->second;
            if (count_meets_cap(d, cap)) drop[static_cast<size_t>(id)] = true;
        }
    } else {
        SaturatedLedger sat = build_saturated_ledger(fam, p);
        for (EdgeId id = 0; id < g.edge_count(); ++id) {
            std::vector<int> verts = g.edge(id);
            std::sort(verts.begin(), verts.end());
            do {
                TupleQuery t;
                for (int v : verts) t.push_back({v});
                if (sat.tuple_entries.count(t)) {
                    drop[static_cast<size_t>(id)] = true;
                    break;
                }
            } while (std::next_permutation(verts.begin(), verts.end()));
        }
    }

    PruneResult out;
    out.vertex_map.resize(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) out.vertex_map[static_cast<size_t>(v)] = v;
    std::vector<std::vector<int>> kept;
    out.edge_map.assign(static_cast<size_t>(g.edge_count()), -1);
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        if (drop[static_cast<size_t>(id)]) {
            ++out.deleted_edges;
            continue;
        }
        out.edge_map[static_cast<size_t>(id)] = static_cast<int>(kept.size());
        kept.push_back(g.edge(id));
    }
    out.host = HostGraph(g.vertex_count(), g.uniformity(), std::move(kept));
    return out;
}

} // namespace supersat
