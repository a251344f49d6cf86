#ifndef SUPERSAT_BALANCED_FAMILY_HPP
#define SUPERSAT_BALANCED_FAMILY_HPP

#include <map>
#include <set>
#include <vector>

#include "supersat/copies.hpp"
#include "supersat/host_graph.hpp"
#include "supersat/pattern.hpp"
#include "supersat/scale_params.hpp"

namespace supersat {

// A collection of pattern copies together with its exact degree ledger.
// Theta ledgers are keyed by the non-empty forest subsets of members'
// edge sets; complete ledgers by componentwise non-empty sub-tuples.
// Queries absent from the ledger have degree zero.
struct BalancedFamily {
    PatternSpec pattern;
    std::vector<ThetaCopy> theta_members;
    std::vector<RPartiteCopy> rp_members;
    std::map<EdgeSubset, long long> forest_ledger;
    std::map<TupleQuery, long long> tuple_ledger;

    long long size() const {
        return pattern.kind == PatternSpec::Kind::Theta
                   ? static_cast<long long>(theta_members.size())
                   : static_cast<long long>(rp_members.size());
    }
};

// Non-empty forest subsets of a theta copy's edge set, sorted.
std::vector<EdgeSubset> forest_subsets(const HostGraph& g, const ThetaCopy& copy);

// Componentwise non-empty sub-tuples of a copy, sorted.
std::vector<TupleQuery> sub_tuples(const RPartiteCopy& copy);

BalancedFamily make_family(const HostGraph& g, const PatternSpec& pattern,
                           std::vector<ThetaCopy> members);
BalancedFamily make_family(const HostGraph& g, const PatternSpec& pattern,
                           std::vector<RPartiteCopy> members);

// Exact number of members containing the query; falls back to a member
// scan for edge subsets outside the forest ledger.
long long family_degree(const BalancedFamily& fam, const EdgeSubset& query);
long long family_degree(const BalancedFamily& fam, const TupleQuery& query);

struct GoodnessReport {
    bool good = true;
    EdgeSubset violating_subset;
    TupleQuery violating_tuple;
    long long degree = 0;
    double cap = 0.0;
    // complete case: ledger entries sitting exactly at their floored cap
    long long entries_at_cap = 0;
};

// Theta: every ledger forest obeys its real-valued cap.  Complete: every
// ledger sub-tuple obeys its floored cap (entries at the cap are legal
// and reported separately).
GoodnessReport audit_goodness(const BalancedFamily& fam, const ScaleParams& p);

// Largest forest a theta copy can contain: a(b-1)+1 edges.
int max_forest_size(const PatternSpec& pattern);

// Floored caps hit zero somewhere reachable, so no copy could ever be
// added under them.
bool caps_vacuous(const ScaleParams& p);

// The saturated queries of a family: forests at or above their floored
// cap (theta), sub-tuples exactly at it (complete).  Enumerated over the
// ledger, i.e. over queries of positive degree; `degenerate` flags
// parameter sets whose zero floors would saturate zero-degree queries
// outside the ledger as well.
struct SaturatedLedger {
    std::set<EdgeSubset> forest_entries;
    std::set<TupleQuery> tuple_entries;
    bool degenerate = false;
};

SaturatedLedger build_saturated_ledger(const BalancedFamily& fam, const ScaleParams& p);

// j-sets of edges outside S completing some non-empty subset of S into a
// saturated forest.
std::vector<EdgeSubset> link_of(const SaturatedLedger& ledger, const EdgeSubset& S, int j);

// Vertices whose insertion into the given part turns some sub-tuple of
// the query saturated.  Parts other than `part_index` contribute
// non-empty subsets; the indexed part may contribute the empty set (the
// inserted vertex alone).  `part_index` is 0-based.
std::vector<int> blocked_part_vertices(const SaturatedLedger& ledger,
                                       const std::vector<std::vector<int>>& parts,
                                       int part_index);

// True when some (componentwise non-empty) sub-tuple of the given parts
// is saturated.
bool tuple_contains_saturated(const SaturatedLedger& ledger,
                              const std::vector<std::vector<int>>& parts);

} // namespace supersat

#endif
