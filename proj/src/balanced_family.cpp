#include "supersat/balanced_family.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "supersat/numeric.hpp"

namespace supersat {

std::vector<EdgeSubset> forest_subsets(const HostGraph& g, const ThetaCopy& copy) {
    const EdgeSubset& edges = copy.edge_ids;
    int m = static_cast<int>(edges.size());
    if (m > 30) throw std::invalid_argument("copy too large for subset enumeration");
    std::vector<EdgeSubset> out;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        EdgeSubset subset;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) subset.push_back(edges[static_cast<size_t>(i)]);
        if (is_forest(subset, g)) out.push_back(std::move(subset));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TupleQuery> sub_tuples(const RPartiteCopy& copy) {
    std::vector<TupleQuery> out{TupleQuery{}};
    for (const auto& part : copy.parts) {
        int m = static_cast<int>(part.size());
        std::vector<std::vector<int>> choices;
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) s.push_back(part[static_cast<size_t>(i)]);
            choices.push_back(std::move(s));
        }
        std::vector<TupleQuery> next;
        next.reserve(out.size() * choices.size());
        for (const auto& partial : out)
            for (const auto& c : choices) {
                TupleQuery t = partial;
                t.push_back(c);
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

BalancedFamily make_family(const HostGraph& g, const PatternSpec& pattern,
                           std::vector<ThetaCopy> members) {
    if (pattern.kind != PatternSpec::Kind::Theta)
        throw std::invalid_argument("theta members need a theta pattern");
    BalancedFamily fam;
    fam.pattern = pattern;
    fam.theta_members = std::move(members);
    for (const auto& m : fam.theta_members)
        for (auto& subset : forest_subsets(g, m)) ++fam.forest_ledger[subset];
    return fam;
}

BalancedFamily make_family(const HostGraph& g, const PatternSpec& pattern,
                           std::vector<RPartiteCopy> members) {
    if (pattern.kind != PatternSpec::Kind::Complete)
        throw std::invalid_argument("r-partite members need a complete pattern");
    (void)g;
    BalancedFamily fam;
    fam.pattern = pattern;
    fam.rp_members = std::move(members);
    for (const auto& m : fam.rp_members)
        for (auto& t : sub_tuples(m)) ++fam.tuple_ledger[t];
    return fam;
}

long long family_degree(const BalancedFamily& fam, const EdgeSubset& query) {
    if (fam.pattern.kind != PatternSpec::Kind::Theta)
        throw std::invalid_argument("edge-subset degree queries apply to theta families");
    if (query.empty()) throw std::invalid_argument("degree queries must be non-empty");
    auto it = fam.forest_ledger.find(query);
    if (it != fam.forest_ledger.end()) return it->second;
    long long d = 0;
    for (const auto& m : fam.theta_members)
        if (theta_copy_contains(m, query)) ++d;
    return d;
}

long long family_degree(const BalancedFamily& fam, const TupleQuery& query) {
    if (fam.pattern.kind != PatternSpec::Kind::Complete)
        throw std::invalid_argument("tuple degree queries apply to complete families");
    for (const auto& part : query)
        if (part.empty()) throw std::invalid_argument("degree queries must be non-empty");
    auto it = fam.tuple_ledger.find(query);
    if (it != fam.tuple_ledger.end()) return it->second;
    long long d = 0;
    for (const auto& m : fam.rp_members)
        if (rpartite_copy_contains(m, query)) ++d;
    return d;
}

int max_forest_size(const PatternSpec& pattern) {
    if (pattern.kind != PatternSpec::Kind::Theta)
        throw std::invalid_argument("forest sizes apply to theta patterns");
    return pattern.a * (pattern.b - 1) + 1;
}

namespace {

std::vector<int> tuple_sizes(const TupleQuery& t) {
    std::vector<int> sizes;
    sizes.reserve(t.size());
    for (const auto& part : t) sizes.push_back(static_cast<int>(part.size()));
    return sizes;
}

void for_each_size_vector(const std::vector<int>& profile,
                          const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> sizes(profile.size(), 1);
    while (true) {
        fn(sizes);
        size_t i = profile.size();
        bool advanced = false;
        while (i > 0) {
            --i;
            if (++sizes[i] <= profile[i]) {
                advanced = true;
                break;
            }
            sizes[i] = 1;
        }
        if (!advanced) return;
    }
}

} // namespace

bool caps_vacuous(const ScaleParams& p) {
    if (p.pattern.kind == PatternSpec::Kind::Theta) {
        for (int j = 1; j <= max_forest_size(p.pattern); ++j)
            if (floor_cap(forest_degree_cap(j, p)) == 0) return true;
        return false;
    }
    bool vacuous = false;
    for_each_size_vector(p.pattern.profile, [&](const std::vector<int>& sizes) {
        if (floor_cap(tuple_degree_cap(sizes, p)) == 0) vacuous = true;
    });
    return vacuous;
}

GoodnessReport audit_goodness(const BalancedFamily& fam, const ScaleParams& p) {
    GoodnessReport rep;
    if (fam.pattern.kind == PatternSpec::Kind::Theta) {
        for (const auto& [subset, degree] : fam.forest_ledger) {
            double cap = forest_degree_cap(static_cast<int>(subset.size()), p);
            if (!count_within_cap(degree, cap)) {
                rep.good = false;
                rep.violating_subset = subset;
                rep.degree = degree;
                rep.cap = cap;
                return rep;
            }
        }
        return rep;
    }
    for (const auto& [tuple, degree] : fam.tuple_ledger) {
        long long cap = floor_cap(tuple_degree_cap(tuple_sizes(tuple), p));
        if (degree > cap) {
            rep.good = false;
            rep.violating_tuple = tuple;
            rep.degree = degree;
            rep.cap = static_cast<double>(cap);
            return rep;
        }
        if (degree == cap) ++rep.entries_at_cap;
    }
    return rep;
}

SaturatedLedger build_saturated_ledger(const BalancedFamily& fam, const ScaleParams& p) {
    SaturatedLedger led;
    if (fam.pattern.kind == PatternSpec::Kind::Theta) {
        for (int j = 1; j <= max_forest_size(p.pattern); ++j)
            if (floor_cap(forest_degree_cap(j, p)) == 0) led.degenerate = true;
        for (const auto& [subset, degree] : fam.forest_ledger) {
            long long cap = floor_cap(forest_degree_cap(static_cast<int>(subset.size()), p));
            if (degree >= cap) led.forest_entries.insert(subset);
        }
        return led;
    }
    for_each_size_vector(p.pattern.profile, [&](const std::vector<int>& sizes) {
        if (floor_cap(tuple_degree_cap(sizes, p)) == 0) led.degenerate = true;
    });
    for (const auto& [tuple, degree] : fam.tuple_ledger) {
        long long cap = floor_cap(tuple_degree_cap(tuple_sizes(tuple), p));
        if (degree == cap) led.tuple_entries.insert(tuple);
    }
    return led;
}

std::vector<EdgeSubset> link_of(const SaturatedLedger& ledger, const EdgeSubset& S, int j) {
    if (j < 1) throw std::invalid_argument("link order must be at least 1");
    std::set<EdgeSubset> out;
    std::set<EdgeId> s_set(S.begin(), S.end());
    for (const auto& entry : ledger.forest_entries) {
        EdgeSubset residual;
        bool meets_s = false;
        for (EdgeId e : entry) {
            if (s_set.count(e)) {
                meets_s = true;
            } else {
                residual.push_back(e);
            }
        }
        if (meets_s && static_cast<int>(residual.size()) == j) out.insert(std::move(residual));
    }
    return std::vector<EdgeSubset>(out.begin(), out.end());
}

std::vector<int> blocked_part_vertices(const SaturatedLedger& ledger,
                                       const std::vector<std::vector<int>>& parts,
                                       int part_index) {
    if (part_index < 0 || part_index >= static_cast<int>(parts.size()))
        throw std::invalid_argument("part index out of range");
    std::set<int> present;
    for (const auto& part : parts) present.insert(part.begin(), part.end());

    std::set<int> out;
    for (const auto& entry : ledger.tuple_entries) {
        if (entry.size() != parts.size()) continue;
        bool match = true;
        int candidate = -1;
        for (size_t i = 0; i < entry.size() && match; ++i) {
            if (static_cast<int>(i) == part_index) {
                // entry part must be (subset of ours) + exactly one new vertex
                int extra = -1;
                for (int v : entry[i]) {
                    if (std::binary_search(parts[i].begin(), parts[i].end(), v)) continue;
                    if (extra != -1) {
                        match = false;
                        break;
                    }
                    extra = v;
                }
                if (extra == -1 || present.count(extra)) match = false;
                candidate = extra;
            } else {
                if (!std::includes(parts[i].begin(), parts[i].end(),
                                   entry[i].begin(), entry[i].end()))
                    match = false;
            }
        }
        if (match && candidate >= 0) out.insert(candidate);
    }
    return std::vector<int>(out.begin(), out.end());
}

bool tuple_contains_saturated(const SaturatedLedger& ledger,
                              const std::vector<std::vector<int>>& parts) {
    for (const auto& entry : ledger.tuple_entries) {
        if (entry.size() != parts.size()) continue;
        bool contained = true;
        for (size_t i = 0; i < entry.size(); ++i) {
            if (!std::includes(parts[i].begin(), parts[i].end(),
                               entry[i].begin(), entry[i].end())) {
                contained = false;
                break;
            }
        }
        if (contained) return true;
    }
    return false;
}

} // namespace supersat
