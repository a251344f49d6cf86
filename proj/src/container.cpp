#include "supersat/container.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "supersat/errors.hpp"
#include "supersat/numeric.hpp"
#include "supersat/oracle.hpp"

namespace supersat {

CopyHypergraph make_copy_hypergraph(const HostGraph& g, const BalancedFamily& fam) {
    if (fam.size() == 0)
        throw std::invalid_argument("copy hypergraph requires a non-empty family");
    CopyHypergraph h;
    h.ground_size = g.edge_count();
    if (fam.pattern.kind == PatternSpec::Kind::Theta) {
        for (const auto& m : fam.theta_members) h.hyperedges.push_back(m.edge_ids);
    } else {
        for (const auto& m : fam.rp_members) h.hyperedges.push_back(m.transversal_edge_ids(g));
    }
    h.uniformity = static_cast<int>(h.hyperedges.front().size());
    for (const auto& e : h.hyperedges)
        if (static_cast<int>(e.size()) != h.uniformity)
            throw std::invalid_argument("family members have differing edge-set sizes");
    return h;
}

DegreeProfile degree_profile(const CopyHypergraph& h) {
    DegreeProfile prof;
    prof.ground_size = h.ground_size;
    prof.hyperedge_count = static_cast<long long>(h.hyperedges.size());
    int s = h.uniformity;
    prof.max_degree.assign(static_cast<size_t>(s) + 1, 0);
    for (int j = 1; j <= s; ++j) {
        std::map<EdgeSubset, long long> counts;
        std::vector<int> pick;
        for (const auto& he : h.hyperedges) {
            // all j-subsets of this hyperedge
            std::vector<int> idx(static_cast<size_t>(j));
            for (int i = 0; i < j; ++i) idx[static_cast<size_t>(i)] = i;
            while (true) {
                EdgeSubset sub;
                sub.reserve(static_cast<size_t>(j));
                for (int i : idx) sub.push_back(he[static_cast<size_t>(i)]);
                ++counts[sub];
                int i = j - 1;
                while (i >= 0 && idx[static_cast<size_t>(i)] == s - j + i) --i;
                if (i < 0) break;
                ++idx[static_cast<size_t>(i)];
                for (int t = i + 1; t < j; ++t)
                    idx[static_cast<size_t>(t)] = idx[static_cast<size_t>(t - 1)] + 1;
            }
        }
        long long best = 0;
        for (const auto& kv : counts) best = std::max(best, kv.second);
        prof.max_degree[static_cast<size_t>(j)] = best;
    }
    prof.average_degree = static_cast<double>(s) * static_cast<double>(prof.hyperedge_count) /
                          static_cast<double>(std::max(1, prof.ground_size));
    return prof;
}

double codegree_function(const DegreeProfile& prof, double tau) {
    if (tau <= 0) throw std::invalid_argument("tau must be positive");
    if (prof.hyperedge_count == 0) throw std::invalid_argument("co-degree of an empty hypergraph");
    double sum = 0.0;
    for (size_t j = 2; j < prof.max_degree.size(); ++j)
        sum += static_cast<double>(prof.max_degree[j]) / std::pow(tau, static_cast<double>(j) - 1.0);
    return sum / prof.average_degree;
}

double codegree_function(const CopyHypergraph& h, double tau) {
    return codegree_function(degree_profile(h), tau);
}

double codegree_infimum(const CopyHypergraph& h) {
    DegreeProfile prof = degree_profile(h);
    double sum = 0.0;
    for (size_t j = 2; j < prof.max_degree.size(); ++j)
        sum += static_cast<double>(prof.max_degree[j]);
    return sum / prof.average_degree;
}

namespace {

// Branching state shared by the builder and the replay walk.
struct WalkState {
    std::vector<bool> avail;       // ground element still undecided
    std::vector<int> fingerprint;  // decided-in elements, insertion order
    std::vector<bool> in_f;        // ground element in fingerprint
    std::vector<bool> alive;       // hyperedge still inside F u A
    std::vector<int> residual;     // per hyperedge: elements outside F
    long long alive_count = 0;

    explicit WalkState(const CopyHypergraph& h)
        : avail(static_cast<size_t>(h.ground_size), true),
          in_f(static_cast<size_t>(h.ground_size), false),
          alive(h.hyperedges.size(), true),
          residual(h.hyperedges.size(), h.uniformity),
          alive_count(static_cast<long long>(h.hyperedges.size())) {}
};

// The split element: covering the least-incomplete surviving residuals
// first, then highest total surviving degree, then smallest identifier.
// Returns -1 when no surviving hyperedge has a residual element.
int pick_element(const CopyHypergraph& h, const WalkState& st) {
    int min_residual = h.uniformity + 1;
    for (size_t e = 0; e < h.hyperedges.size(); ++e)
        if (st.alive[e] && st.residual[e] >= 1) min_residual = std::min(min_residual, st.residual[e]);
    if (min_residual > h.uniformity) return -1;

    std::vector<long long> class_deg(static_cast<size_t>(h.ground_size), 0);
    std::vector<long long> total_deg(static_cast<size_t>(h.ground_size), 0);
    for (size_t e = 0; e < h.hyperedges.size(); ++e) {
        if (!st.alive[e]) continue;
        for (int v : h.hyperedges[e]) {
            if (st.in_f[static_cast<size_t>(v)]) continue;
            ++total_deg[static_cast<size_t>(v)];
            if (st.residual[e] == min_residual) ++class_deg[static_cast<size_t>(v)];
        }
    }
    int best = -1;
    for (int v = 0; v < h.ground_size; ++v) {
        if (!st.avail[static_cast<size_t>(v)] || class_deg[static_cast<size_t>(v)] == 0) continue;
        if (best == -1 || class_deg[static_cast<size_t>(v)] > class_deg[static_cast<size_t>(best)] ||
            (class_deg[static_cast<size_t>(v)] == class_deg[static_cast<size_t>(best)] &&
             (total_deg[static_cast<size_t>(v)] > total_deg[static_cast<size_t>(best)])))
            best = v;
    }
    return best;
}

void apply_out(const CopyHypergraph& h, WalkState& st, int v) {
    st.avail[static_cast<size_t>(v)] = false;
    for (size_t e = 0; e < h.hyperedges.size(); ++e) {
        if (!st.alive[e]) continue;
        for (int u : h.hyperedges[e]) {
            if (u == v) {
                st.alive[e] = false;
                --st.alive_count;
                break;
            }
        }
    }
}

void apply_in(const CopyHypergraph& h, WalkState& st, int v) {
    st.avail[static_cast<size_t>(v)] = false;
    st.in_f[static_cast<size_t>(v)] = true;
    st.fingerprint.push_back(v);
    for (size_t e = 0; e < h.hyperedges.size(); ++e) {
        if (!st.alive[e]) continue;
        for (int u : h.hyperedges[e]) {
            if (u == v) {
                --st.residual[e];
                break;
            }
        }
    }
}

bool fully_fingerprinted(const WalkState& st) {
    for (size_t e = 0; e < st.alive.size(); ++e)
        if (st.alive[e] && st.residual[e] == 0) return true;
    return false;
}

EdgeSubset container_of(const WalkState& st) {
    EdgeSubset out;
    for (int v = 0; v < static_cast<int>(st.avail.size()); ++v)
        if (st.avail[static_cast<size_t>(v)] || st.in_f[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

void explore(const CopyHypergraph& h, WalkState st, double leaf_cap,
             std::vector<EdgeSubset>& containers, std::vector<EdgeSubset>& fingerprints) {
    if (fully_fingerprinted(st)) return; // no pattern-free subgraph routes here
    if (count_within_cap(st.alive_count, leaf_cap)) {
        containers.push_back(container_of(st));
        EdgeSubset f = EdgeSubset(st.fingerprint.begin(), st.fingerprint.end());
        std::sort(f.begin(), f.end());
        fingerprints.push_back(std::move(f));
        return;
    }
    int v = pick_element(h, st);
    if (v < 0) {
        // no residual elements left yet still too many survivors: every
        // survivor is inside F, handled above
        return;
    }
    WalkState out_state = st;
    apply_out(h, out_state, v);
    explore(h, std::move(out_state), leaf_cap, containers, fingerprints);
    apply_in(h, st, v);
    explore(h, std::move(st), leaf_cap, containers, fingerprints);
}

} // namespace

ContainerBuildResult build_containers(const HostGraph& g, const BalancedFamily& fam,
                                      const ScaleParams& p, double eps,
                                      std::optional<double> tau_override) {
    ContainerBuildResult res;
    res.eps = eps;
    if (eps <= 0) {
        res.error = "eps must be positive";
        return res;
    }
    res.hypergraph = make_copy_hypergraph(g, fam);
    if (res.hypergraph.ground_size == 0) {
        res.error = "host has no edges";
        return res;
    }

    double tau = tau_override ? *tau_override
                              : 1.0 / (eps * eps * std::pow(p.k, 1.0 + p.pattern.alpha()));
    res.tau = tau;
    if (tau >= 1.0 || tau <= 0.0) {
        res.error = "degenerate tau (tau must lie in (0,1))";
        return res;
    }
    res.delta_htau = codegree_function(res.hypergraph, tau);
    if (res.delta_htau > nudge_up(eps)) {
        res.error = "co-degree check failed: delta(H,tau) = " + std::to_string(res.delta_htau) +
                    " exceeds eps = " + std::to_string(eps);
        return res;
    }

    double leaf_cap = eps * static_cast<double>(res.hypergraph.hyperedges.size());
    WalkState root(res.hypergraph);
    explore(res.hypergraph, std::move(root), leaf_cap, res.containers, res.fingerprints);

    double n_over = static_cast<double>(res.hypergraph.ground_size);
    res.count_bound = std::exp(tau * std::log(1.0 / tau) * n_over / eps);
    res.eps_prime = 1.0;
    for (const auto& c : res.containers)
        res.eps_prime = std::min(res.eps_prime,
                                 1.0 - static_cast<double>(c.size()) / n_over);
    if (res.containers.empty()) res.eps_prime = 0.0;
    res.ok = true;
    return res;
}

std::optional<RoutedLeaf> route_subset(const ContainerBuildResult& result, const Bitset& subset) {
    const CopyHypergraph& h = result.hypergraph;
    double leaf_cap = result.eps * static_cast<double>(h.hyperedges.size());
    WalkState st(h);
    while (true) {
        if (fully_fingerprinted(st)) return std::nullopt;
        if (count_within_cap(st.alive_count, leaf_cap)) {
            RoutedLeaf leaf;
            leaf.container = container_of(st);
            leaf.fingerprint = EdgeSubset(st.fingerprint.begin(), st.fingerprint.end());
            std::sort(leaf.fingerprint.begin(), leaf.fingerprint.end());
            return leaf;
        }
        int v = pick_element(h, st);
        if (v < 0) return std::nullopt;
        if (subset.test(v)) {
            apply_in(h, st, v);
        } else {
            apply_out(h, st, v);
        }
    }
}

VerificationReport verify_containers(const ContainerBuildResult& result, const HostGraph& g,
                                     const PatternSpec& pattern, int edge_guard,
                                     int oracle_vertex_guard) {
    if (g.edge_count() > edge_guard)
        throw GuardError("verify_containers host exceeds edge guard (" +
                         std::to_string(edge_guard) + ")");
    VerificationReport rep;
    const CopyHypergraph& h = result.hypergraph;

    if (result.fingerprints.size() != result.containers.size()) {
        rep.nesting_ok = false;
        rep.detail += "fingerprint/container count mismatch; ";
        return rep;
    }

    // structural nesting
    for (size_t i = 0; i < result.containers.size(); ++i) {
        const auto& c = result.containers[i];
        const auto& f = result.fingerprints[i];
        if (!std::includes(c.begin(), c.end(), f.begin(), f.end())) rep.nesting_ok = false;
        for (EdgeId e : c)
            if (e < 0 || e >= g.edge_count()) rep.nesting_ok = false;
    }

    // property (2): independent member recount per container
    double span_cap = result.eps * static_cast<double>(h.hyperedges.size());
    for (const auto& c : result.containers) {
        std::set<EdgeId> cs(c.begin(), c.end());
        long long inside = 0;
        for (const auto& he : h.hyperedges) {
            bool all = true;
            for (EdgeId e : he)
                if (!cs.count(e)) {
                    all = false;
                    break;
                }
            if (all) ++inside;
        }
        if (!count_within_cap(inside, span_cap)) {
            rep.spanning_ok = false;
            rep.detail += "container spans " + std::to_string(inside) + " members; ";
        }
    }

    // count bound, bound rounded up
    if (!count_within_cap(static_cast<long long>(result.containers.size()), result.count_bound))
        rep.count_ok = false;

    // property (1) plus the fingerprint contract, over all subgraphs
    int m = g.edge_count();
    std::set<EdgeSubset> emitted(result.containers.begin(), result.containers.end());
    std::vector<Bitset> container_bits;
    for (const auto& c : result.containers) {
        Bitset b(m);
        for (EdgeId e : c) b.set(e);
        container_bits.push_back(std::move(b));
    }
    for (unsigned long long mask = 0; mask < (1ull << m); ++mask) {
        std::vector<std::vector<int>> sub_edges;
        Bitset subset(m);
        for (int e = 0; e < m; ++e)
            if (mask & (1ull << e)) {
                subset.set(e);
                sub_edges.push_back(g.edge(e));
            }
        HostGraph sub(g.vertex_count(), g.uniformity(), sub_edges);
        if (oracle_count(sub, pattern, oracle_vertex_guard) != 0) continue;
        ++rep.free_subgraphs;

        bool inside_some = false;
        for (const auto& cb : container_bits) {
            bool inside = true;
            for (int e = 0; e < m && inside; ++e)
                if (subset.test(e) && !cb.test(e)) inside = false;
            if (inside) {
                inside_some = true;
                break;
            }
        }
        if (!inside_some) rep.coverage_ok = false;

        auto leaf = route_subset(result, subset);
        if (!leaf || !emitted.count(leaf->container)) {
            rep.fingerprint_ok = false;
            continue;
        }
        std::set<EdgeId> cont(leaf->container.begin(), leaf->container.end());
        for (int e = 0; e < m; ++e)
            if (subset.test(e) && !cont.count(e)) rep.fingerprint_ok = false;
        for (EdgeId e : leaf->fingerprint)
            if (!subset.test(e)) rep.fingerprint_ok = false;
    }
    return rep;
}

} // namespace supersat
