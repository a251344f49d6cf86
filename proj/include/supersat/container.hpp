#ifndef SUPERSAT_CONTAINER_HPP
#define SUPERSAT_CONTAINER_HPP

#include <optional>
#include <string>
#include <vector>

#include "supersat/balanced_family.hpp"
#include "supersat/host_graph.hpp"

namespace supersat {

// The family viewed as an s-uniform hypergraph on ground set E(G): one
// hyperedge per member (its edge set), with multiset semantics so equal
// edge sets from distinct ordered copies stay parallel hyperedges.
struct CopyHypergraph {
    int ground_size = 0;
    int uniformity = 0;
    std::vector<EdgeSubset> hyperedges;
};

CopyHypergraph make_copy_hypergraph(const HostGraph& g, const BalancedFamily& fam);

// Maximum j-degrees and average degree of a copy hypergraph.
struct DegreeProfile {
    std::vector<long long> max_degree; // index j in 1..s, slot 0 unused
    double average_degree = 0.0;
    int ground_size = 0;
    long long hyperedge_count = 0;
};

DegreeProfile degree_profile(const CopyHypergraph& h);

// (1/d) * sum_{j=2..s} Delta_j / tau^{j-1}.  tau >= 1 is permitted for
// experiments and merely flagged by callers.
double codegree_function(const DegreeProfile& prof, double tau);
double codegree_function(const CopyHypergraph& h, double tau);

// Limit of the co-degree function as tau -> 1: the feasibility floor for
// any single container step.
double codegree_infimum(const CopyHypergraph& h);

struct ContainerBuildResult {
    bool ok = false;
    std::string error;
    double eps = 0.0;
    double tau = 0.0;
    double delta_htau = 0.0;
    double count_bound = 0.0; // exp(tau log(1/tau) N / eps)
    double eps_prime = 0.0;   // min over containers of 1 - |U|/N
    std::vector<EdgeSubset> containers;
    std::vector<EdgeSubset> fingerprints;
    CopyHypergraph hypergraph;
};

// One container step: branch on fingerprint membership, always splitting
// on the ground element that dominates the least-incomplete surviving
// residuals (ties by total surviving degree, then smallest identifier),
// until every leaf's surviving hypergraph has at most eps * |H| members.
// tau defaults to 1 / (eps^2 k^{1+alpha}).
ContainerBuildResult build_containers(const HostGraph& g, const BalancedFamily& fam,
                                      const ScaleParams& p, double eps,
                                      std::optional<double> tau_override);

// Deterministic replay of the branching decisions for one edge subset;
// returns the leaf it lands on, or nullopt when the walk hits a pruned
// branch (impossible for pattern-free subsets).
struct RoutedLeaf {
    EdgeSubset container;
    EdgeSubset fingerprint;
};

std::optional<RoutedLeaf> route_subset(const ContainerBuildResult& result, const Bitset& subset);

struct VerificationReport {
    bool coverage_ok = true;    // every pattern-free subgraph inside some container
    bool fingerprint_ok = true; // the routed leaf contains it and its fingerprint
                                // is one of its subsets
    bool spanning_ok = true;    // every container spans <= eps * |H| members
    bool count_ok = true;       // |C| <= exp(tau log(1/tau) N / eps)
    bool nesting_ok = true;     // fingerprint inside container inside ground
    long long free_subgraphs = 0;
    std::string detail;
    bool pass() const {
        return coverage_ok && fingerprint_ok && spanning_ok && count_ok && nesting_ok;
    }
};

// Exhaustive verification over all 2^{e(G)} subgraphs; freeness decided
// by the brute-force oracle.
VerificationReport verify_containers(const ContainerBuildResult& result, const HostGraph& g,
                                     const PatternSpec& pattern, int edge_guard = 18,
                                     int oracle_vertex_guard = 12);

} // namespace supersat

#endif
