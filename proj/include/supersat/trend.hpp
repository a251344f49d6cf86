#ifndef SUPERSAT_TREND_HPP
#define SUPERSAT_TREND_HPP

#include <cstdint>
#include <vector>

#include "supersat/host_graph.hpp"
#include "supersat/pattern.hpp"

namespace supersat {

// One row of the supersaturation trend table: the exact copy count next
// to the m^{e} n^{v - (r)e}-shaped benchmark with the pattern's
// exponents.  Rows below the m = n^{...} density threshold are flagged;
// no asymptotic claim is made either way.
struct TrendRow {
    int n = 0;
    long long m = 0;
    long long copies = 0;
    double benchmark = 0.0;
    double ratio = 0.0;
    bool below_threshold = false;
};

double trend_benchmark(const PatternSpec& pattern, int n, long long m);

TrendRow trend_row(const HostGraph& g, const PatternSpec& pattern);

// Series over complete hosts K_n (r from the pattern).
std::vector<TrendRow> trend_complete_series(const PatternSpec& pattern, int n_from, int n_to);

// Series over random hosts with m = round(density * edge_scale(n)).
std::vector<TrendRow> trend_random_series(const PatternSpec& pattern, int n_from, int n_to,
                                          double density, uint64_t seed);

} // namespace supersat

#endif
