#include "supersat/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "supersat/enumerate.hpp"
#include "supersat/errors.hpp"
#include "supersat/greedy.hpp"
#include "supersat/oracle.hpp"

namespace supersat {

Schedule make_schedule(const PatternSpec& pattern, int n, double eps, double k0, int max_levels) {
    if (eps <= 0.0 || eps >= 1.0) throw std::invalid_argument("schedule eps must lie in (0,1)");
    if (k0 <= 0.0) throw std::invalid_argument("k0 must be positive");
    Schedule s;
    s.k0 = k0;
    s.ratio = 1.0 - eps;
    double m = edge_scale(pattern, n);
    double k = static_cast<double>(binomial_ull(n, pattern.uniformity())) / m;
    s.k.push_back(k);
    while (s.k.back() > k0 && static_cast<int>(s.k.size()) < max_levels)
        s.k.push_back(s.k.back() * s.ratio);
    return s;
}

namespace {

std::vector<std::vector<int>> container_to_edges(const HostGraph& parent, const EdgeSubset& ids) {
    std::vector<std::vector<int>> edges;
    edges.reserve(ids.size());
    for (EdgeId id : ids) edges.push_back(parent.edge(id));
    return edges;
}

// Smallest tau in (0,1) satisfying the co-degree check, nudged to stay
// feasible; the default 1/(eps^2 k^{1+alpha}) is used when it is valid.
std::optional<double> choose_tau(const CopyHypergraph& h, double eps, double k, double alpha,
                                 const std::optional<double>& override_tau) {
    if (override_tau) return override_tau;
    double def = 1.0 / (eps * eps * std::pow(k, 1.0 + alpha));
    DegreeProfile prof = degree_profile(h);
    if (def > 0.0 && def < 1.0 && codegree_function(prof, def) <= nudge_up(eps)) return def;
    double hi = 1.0 - 1e-12;
    if (codegree_function(prof, hi) > nudge_up(eps)) return std::nullopt;
    double lo = 1e-9;
    for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        if (codegree_function(prof, mid) <= nudge_up(eps))
            hi = mid;
        else
            lo = mid;
    }
    double tau = hi; // feasible endpoint
    double e_inv = 1.0 / std::exp(1.0);
    if (tau < e_inv && codegree_function(prof, e_inv) <= nudge_up(eps)) tau = e_inv;
    return tau;
}

BigCount tree_bound(const std::vector<HostGraph>& containers) {
    BigCount b;
    for (const auto& g : containers) b.add_pow2(g.edge_count());
    return b;
}

// sum over containers, i <= m(n)/k0^3, of C(e(G), i); i = 0 included so
// the empty graph is always counted
void finalize_sparse(PipelineResult& res, const PatternSpec& pattern, int n) {
    res.sparse_threshold = edge_scale(pattern, n) / (res.schedule.k0 * res.schedule.k0 * res.schedule.k0);
    long long limit = static_cast<long long>(std::floor(nudge_up(res.sparse_threshold)));
    for (const auto& g : res.containers) {
        long long top = std::min<long long>(limit, g.edge_count());
        for (long long i = 0; i <= top; ++i)
            res.sparse_bound.add(binomial_ull(g.edge_count(), static_cast<int>(i)));
    }
}

} // namespace

PipelineResult run_counting_pipeline(int n, const PatternSpec& pattern, double eps, double k0,
                                     const PipelineOptions& opts) {
    PipelineResult res;
    res.schedule = make_schedule(pattern, n, eps, k0, opts.max_levels);
    double m_scale = edge_scale(pattern, n);
    res.containers.push_back(HostGraph::complete(n, pattern.uniformity()));

    for (size_t li = 0; li < res.schedule.k.size(); ++li) {
        PipelineLevel level;
        level.level = static_cast<int>(li) + 1;
        level.k_i = res.schedule.k[li];
        double dense_threshold = level.k_i * m_scale;

        std::vector<HostGraph> next;
        std::set<std::vector<std::vector<int>>> seen;
        auto push_container = [&](HostGraph g) {
            if (static_cast<int>(next.size()) >= opts.max_containers)
                throw GuardError("pipeline container budget exceeded");
            if (seen.insert(g.edges()).second) next.push_back(std::move(g));
        };

        for (size_t ci = 0; ci < res.containers.size(); ++ci) {
            const HostGraph& g = res.containers[ci];
            if (!count_meets_cap(g.edge_count(), dense_threshold)) {
                push_container(g);
                ++level.carried;
                continue;
            }
            double k_local = static_cast<double>(g.edge_count()) / m_scale;
            ScaleParams params = ScaleParams::with_delta(pattern, n, k_local, opts.delta);

            long long copy_count = enumerate_count(g, pattern);
            if (copy_count == 0) {
                // the container is pattern-free and so are all of its
                // subgraphs; keep it as its own container
                push_container(g);
                ++level.kept_pattern_free;
                continue;
            }

            BalancedFamily family;
            if (opts.family_mode == FamilyMode::AllCopies) {
                if (pattern.kind == PatternSpec::Kind::Theta)
                    family = make_family(g, pattern, enumerate_theta(g, pattern));
                else
                    family = make_family(g, pattern, enumerate_rpartite(g, pattern.profile));
            } else {
                BuildResult built;
                if (pattern.kind == PatternSpec::Kind::Theta)
                    built = build_theta_family(g, params, opts.target);
                else
                    built = build_rpartite_family(g, params, opts.target);
                if (built.stop == StopReason::VacuousParameters) {
                    std::ostringstream os;
                    os << "level " << level.level << " container " << ci
                       << ": vacuous parameters for delta = " << opts.delta;
                    res.diagnostics = os.str();
                    res.levels.push_back(level);
                    res.subgraph_bound = tree_bound(res.containers);
                    finalize_sparse(res, pattern, n);
                    return res;
                }
                family = std::move(built.family);
            }

            CopyHypergraph h = make_copy_hypergraph(g, family);
            auto tau = choose_tau(h, eps, k_local, pattern.alpha(), opts.tau);
            if (!tau) {
                std::ostringstream os;
                os << "level " << level.level << " container " << ci
                   << ": co-degree floor " << codegree_infimum(h) << " exceeds eps " << eps;
                res.diagnostics = os.str();
                res.levels.push_back(level);
                res.subgraph_bound = tree_bound(res.containers);
                finalize_sparse(res, pattern, n);
                return res;
            }
            ContainerBuildResult step = build_containers(g, family, params, eps, tau);
            if (!step.ok) {
                res.diagnostics = "level " + std::to_string(level.level) + " container " +
                                  std::to_string(ci) + ": " + step.error;
                res.levels.push_back(level);
                res.subgraph_bound = tree_bound(res.containers);
                finalize_sparse(res, pattern, n);
                return res;
            }
            ++level.replaced;
            for (const auto& child : step.containers)
                push_container(HostGraph(n, pattern.uniformity(), container_to_edges(g, child)));
        }

        res.containers = std::move(next);
        level.containers_after = static_cast<int>(res.containers.size());
        for (const auto& g : res.containers)
            level.max_edges_after = std::max(level.max_edges_after, g.edge_count());
        level.bound_after = tree_bound(res.containers);
        res.levels.push_back(level);
    }

    res.completed = true;
    res.subgraph_bound = tree_bound(res.containers);
    finalize_sparse(res, pattern, n);
    return res;
}

long long count_free_graphs_exhaustive(int n, const PatternSpec& pattern, int edge_guard,
                                       int oracle_vertex_guard) {
    HostGraph full = HostGraph::complete(n, pattern.uniformity());
    int m = full.edge_count();
    if (m > edge_guard)
        throw GuardError("free-count sweep exceeds edge guard (" + std::to_string(edge_guard) + ")");
    long long count = 0;
    for (unsigned long long mask = 0; mask < (1ull << m); ++mask) {
        std::vector<std::vector<int>> edges;
        for (int e = 0; e < m; ++e)
            if (mask & (1ull << e)) edges.push_back(full.edge(e));
        HostGraph sub(n, pattern.uniformity(), edges);
        if (oracle_count(sub, pattern, oracle_vertex_guard) == 0) ++count;
    }
    return count;
}

bool pipeline_coverage_exhaustive(const PipelineResult& result, const PatternSpec& pattern,
                                  int n, int edge_guard, int oracle_vertex_guard) {
    HostGraph full = HostGraph::complete(n, pattern.uniformity());
    int m = full.edge_count();
    if (m > edge_guard)
        throw GuardError("coverage sweep exceeds edge guard (" + std::to_string(edge_guard) + ")");
    std::vector<std::set<std::vector<int>>> container_edge_sets;
    for (const auto& g : result.containers)
        container_edge_sets.emplace_back(g.edges().begin(), g.edges().end());

    for (unsigned long long mask = 0; mask < (1ull << m); ++mask) {
        std::vector<std::vector<int>> edges;
        for (int e = 0; e < m; ++e)
            if (mask & (1ull << e)) edges.push_back(full.edge(e));
        HostGraph sub(n, pattern.uniformity(), edges);
        if (oracle_count(sub, pattern, oracle_vertex_guard) != 0) continue;
        bool covered = false;
        for (const auto& cs : container_edge_sets) {
            bool inside = true;
            for (const auto& e : edges)
                if (!cs.count(e)) {
                    inside = false;
                    break;
                }
            if (inside) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

} // namespace supersat
