#ifndef SUPERSAT_PIPELINE_HPP
#define SUPERSAT_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "supersat/container.hpp"
#include "supersat/numeric.hpp"

namespace supersat {

// Geometric density schedule: k(1) = C(n,r)/m(n), k(i) = (1-eps) k(i-1),
// stopping at the first k(t) <= k0.
struct Schedule {
    std::vector<double> k; // k[0] = k(1)
    double k0 = 0.0;
    double ratio = 0.0;    // 1 - eps
};

Schedule make_schedule(const PatternSpec& pattern, int n, double eps, double k0,
                       int max_levels = 64);

struct PipelineLevel {
    int level = 0;
    double k_i = 0.0;
    int carried = 0;
    int replaced = 0;
    int kept_pattern_free = 0;
    int containers_after = 0;
    int max_edges_after = 0;
    BigCount bound_after;
};

struct PipelineResult {
    bool completed = false;
    std::string diagnostics; // non-empty when stopped early
    Schedule schedule;
    std::vector<PipelineLevel> levels;
    std::vector<HostGraph> containers; // current tree frontier
    BigCount subgraph_bound;           // sum over containers of 2^{e(G)}
    BigCount sparse_bound;             // sum over containers, i <= m(n)/k0^3, of C(e(G), i)
    double sparse_threshold = 0.0;
};

// How the per-level families are chosen.  Greedy honours the degree
// caps at the host-derived density, which at desk scale usually leaves
// families too small to pass the co-degree gate (the caps are asymptotic
// devices); AllCopies feeds every enumerated copy to the container step,
// whose own co-degree check remains the gate.  Both yield sound bounds:
// the bound only needs coverage.
enum class FamilyMode { Greedy, AllCopies };

struct PipelineOptions {
    double delta = 1e-6;    // per-level family cap constant (Greedy mode)
    double target = 1e300;  // per-level family size target (default: exhaust)
    std::optional<double> tau; // override for every container step
    FamilyMode family_mode = FamilyMode::Greedy;
    int max_levels = 64;
    int max_containers = 4096;
};

// Iterated container construction over the complete host: each dense
// member of the current frontier gets a freshly built family and one
// container step; pattern-free dense members are carried as-is (all of
// their subgraphs are pattern-free).  Stops with diagnostics when some
// level's family cannot satisfy the co-degree check at this eps.
PipelineResult run_counting_pipeline(int n, const PatternSpec& pattern, double eps, double k0,
                                     const PipelineOptions& opts = {});

// Exact number of labeled pattern-free r-graphs on [n] via exhaustive
// sweep, freeness decided by the brute-force oracle.
long long count_free_graphs_exhaustive(int n, const PatternSpec& pattern, int edge_guard = 24,
                                       int oracle_vertex_guard = 12);

// Every pattern-free graph on [n] lies inside some frontier container.
bool pipeline_coverage_exhaustive(const PipelineResult& result, const PatternSpec& pattern,
                                  int n, int edge_guard = 24, int oracle_vertex_guard = 12);

} // namespace supersat

#endif
