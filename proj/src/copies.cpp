#include "supersat/copies.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace supersat {

std::vector<int> ThetaCopy::encoding() const {
    std::vector<int> enc;
    enc.push_back(x);
    enc.push_back(y);
    for (const auto& p : paths) enc.insert(enc.end(), p.begin(), p.end());
    return enc;
}

void ThetaCopy::validate(const HostGraph& g, int a, int b) const {
    if (x == y) throw std::invalid_argument("theta copy has equal endpoints");
    if (static_cast<int>(paths.size()) != a) throw std::invalid_argument("theta copy path count mismatch");
    std::set<int> internals;
    std::set<EdgeId> edge_set;
    for (const auto& p : paths) {
        if (static_cast<int>(p.size()) != b + 1) throw std::invalid_argument("theta path length mismatch");
        if (p.front() != x || p.back() != y) throw std::invalid_argument("theta path endpoints mismatch");
        for (size_t i = 1; i + 1 < p.size(); ++i) {
            if (p[i] == x || p[i] == y) throw std::invalid_argument("theta path revisits endpoint");
            if (!internals.insert(p[i]).second)
                throw std::invalid_argument("theta paths are not internally disjoint");
        }
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            auto id = g.find_edge({p[i], p[i + 1]});
            if (!id) throw std::invalid_argument("theta path edge missing from host");
            edge_set.insert(*id);
        }
    }
    if (static_cast<long long>(edge_set.size()) != static_cast<long long>(a) * b)
        throw std::invalid_argument("theta copy edge count mismatch");
    if (internals.size() + 2 != static_cast<size_t>(a * (b - 1) + 2))
        throw std::invalid_argument("theta copy vertex count mismatch");
    EdgeSubset sorted_ids(edge_set.begin(), edge_set.end());
    if (sorted_ids != edge_ids) throw std::invalid_argument("theta copy edge ids inconsistent");
}

std::vector<int> RPartiteCopy::encoding() const {
    std::vector<int> enc;
    for (const auto& part : parts) {
        enc.push_back(static_cast<int>(part.size()));
        enc.insert(enc.end(), part.begin(), part.end());
    }
    return enc;
}

EdgeSubset RPartiteCopy::transversal_edge_ids(const HostGraph& g) const {
    std::set<EdgeId> ids;
    std::vector<int> pick(parts.size());
    std::vector<size_t> idx(parts.size(), 0);
    // odometer over one vertex per part
    while (true) {
        for (size_t i = 0; i < parts.size(); ++i) pick[i] = parts[i][idx[i]];
        auto id = g.find_edge(pick);
        if (!id) throw std::invalid_argument("transversal missing from host");
        ids.insert(*id);
        size_t i = parts.size();
        while (i > 0) {
            --i;
            if (++idx[i] < parts[i].size()) break;
            idx[i] = 0;
            if (i == 0) return EdgeSubset(ids.begin(), ids.end());
        }
    }
}

void RPartiteCopy::validate(const HostGraph& g, const std::vector<int>& profile) const {
    if (parts.size() != profile.size()) throw std::invalid_argument("copy part count mismatch");
    std::set<int> all;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (static_cast<int>(parts[i].size()) != profile[i])
            throw std::invalid_argument("copy part size mismatch");
        if (!std::is_sorted(parts[i].begin(), parts[i].end()))
            throw std::invalid_argument("copy part not sorted");
        for (int v : parts[i])
            if (!all.insert(v).second) throw std::invalid_argument("copy parts overlap");
    }
    transversal_edge_ids(g); // throws when any transversal is absent
}

bool theta_copy_contains(const ThetaCopy& copy, const EdgeSubset& query) {
    if (query.empty()) throw std::invalid_argument("degree queries require a non-empty edge set");
    return std::includes(copy.edge_ids.begin(), copy.edge_ids.end(), query.begin(), query.end());
}

bool rpartite_copy_contains(const RPartiteCopy& copy, const TupleQuery& query) {
    if (query.size() != copy.parts.size())
        throw std::invalid_argument("tuple query arity mismatch");
    for (size_t i = 0; i < query.size(); ++i) {
        if (query[i].empty()) throw std::invalid_argument("tuple query has an empty part");
        if (!std::includes(copy.parts[i].begin(), copy.parts[i].end(),
                           query[i].begin(), query[i].end()))
            return false;
    }
    return true;
}

} // namespace supersat
