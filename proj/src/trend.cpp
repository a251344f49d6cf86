#include "supersat/trend.hpp"

#include <cmath>

#include "supersat/enumerate.hpp"
#include "supersat/numeric.hpp"
#include "supersat/random_host.hpp"
#include "supersat/scale_params.hpp"

namespace supersat {

double trend_benchmark(const PatternSpec& pattern, int n, long long m) {
    double e = static_cast<double>(pattern.edge_count());
    double v = static_cast<double>(pattern.vertex_count());
    double r = static_cast<double>(pattern.uniformity());
    // m^e * n^{v - r e}
    return std::pow(static_cast<double>(m), e) *
           std::pow(static_cast<double>(n), v - r * e);
}

TrendRow trend_row(const HostGraph& g, const PatternSpec& pattern) {
    TrendRow row;
    row.n = g.vertex_count();
    row.m = g.edge_count();
    row.copies = enumerate_count(g, pattern);
    row.benchmark = trend_benchmark(pattern, row.n, row.m);
    row.ratio = row.benchmark > 0.0 ? static_cast<double>(row.copies) / row.benchmark : 0.0;
    row.below_threshold =
        static_cast<double>(row.m) < nudge_down(edge_scale(pattern, std::max(1, row.n)));
    return row;
}

std::vector<TrendRow> trend_complete_series(const PatternSpec& pattern, int n_from, int n_to) {
    std::vector<TrendRow> rows;
    for (int n = n_from; n <= n_to; ++n)
        rows.push_back(trend_row(HostGraph::complete(n, pattern.uniformity()), pattern));
    return rows;
}

std::vector<TrendRow> trend_random_series(const PatternSpec& pattern, int n_from, int n_to,
                                          double density, uint64_t seed) {
    std::vector<TrendRow> rows;
    for (int n = n_from; n <= n_to; ++n) {
        long long want = static_cast<long long>(std::llround(density * edge_scale(pattern, n)));
        long long cap = static_cast<long long>(
            binomial_ull(n, pattern.uniformity()));
        long long m = std::min(want, cap);
        rows.push_back(trend_row(random_host_exact(n, m, pattern.uniformity(), seed + n), pattern));
    }
    return rows;
}

} // namespace supersat
