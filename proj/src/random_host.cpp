#include "supersat/random_host.hpp"

#include <stdexcept>

#include "supersat/numeric.hpp"

namespace supersat {

uint64_t splitmix64_next(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

HostGraph random_host_exact(int n, long long m, int r, uint64_t seed) {
    HostGraph full = HostGraph::complete(n, r);
    long long total = full.edge_count();
    if (m < 0 || m > total)
        throw std::invalid_argument("requested edge count is infeasible");
    std::vector<std::vector<int>> pool = full.edges();
    uint64_t state = seed;
    // partial Fisher-Yates: the first m slots become the sample
    for (long long i = 0; i < m; ++i) {
        long long j = i + static_cast<long long>(splitmix64_next(state) %
                                                 static_cast<uint64_t>(total - i));
        std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
    }
    pool.resize(static_cast<size_t>(m));
    return HostGraph(n, r, std::move(pool));
}

HostGraph random_host_binomial(int n, double p, int r, uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("probability out of range");
    HostGraph full = HostGraph::complete(n, r);
    std::vector<std::vector<int>> kept;
    uint64_t state = seed;
    for (const auto& e : full.edges()) {
        double u = static_cast<double>(splitmix64_next(state) >> 11) * 0x1.0p-53;
        if (u < p) kept.push_back(e);
    }
    return HostGraph(n, r, std::move(kept));
}

} // namespace supersat
