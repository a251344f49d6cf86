#include "doctest.h"

#include <cmath>
#include <set>

#include "supersat/enumerate.hpp"
#include "supersat/greedy.hpp"
#include "supersat/numeric.hpp"
#include "supersat/random_host.hpp"

using namespace supersat;
using doctest::Approx;

namespace {

// from-scratch goodness recheck: rebuild the ledger and audit it
bool recheck_good(const HostGraph& g, const BalancedFamily& fam, const ScaleParams& p) {
    BalancedFamily rebuilt = fam.pattern.kind == PatternSpec::Kind::Theta
                                 ? make_family(g, fam.pattern, fam.theta_members)
                                 : make_family(g, fam.pattern, fam.rp_members);
    return audit_goodness(rebuilt, p).good;
}

} // namespace

TEST_CASE("theta builder on a host without copies") {
    HostGraph g(5, 2, {{0, 1}, {1, 2}});
    PatternSpec th = PatternSpec::theta(2, 2);
    ScaleParams p = ScaleParams::with_delta(th, 5, 2.0, 0.1);
    BuildResult r = build_theta_family(g, p, 1e18);
    CHECK(r.family.size() == 0);
    CHECK(r.stop == StopReason::Exhausted);
}

TEST_CASE("theta builder with generous caps takes every copy") {
    HostGraph k5 = HostGraph::complete(5, 2);
    PatternSpec th = PatternSpec::theta(2, 2);
    // explicit scale: caps far above anything reachable on K5
    ScaleParams p = ScaleParams::with_delta(th, 5, 3.0, 0.001);
    REQUIRE(forest_degree_cap(1, p) >= 15.0);
    BuildResult r = build_theta_family(k5, p, 1e18);
    CHECK(r.family.size() == 15);
    CHECK(r.stop == StopReason::Exhausted);
    CHECK(audit_goodness(r.family, p).good);
    CHECK(recheck_good(k5, r.family, p));
}

TEST_CASE("theta builder respects binding caps") {
    HostGraph k5 = HostGraph::complete(5, 2);
    PatternSpec th = PatternSpec::theta(2, 2);
    // single-edge cap of 3: k^3 sqrt(5) = 3
    double k = std::cbrt(3.0 / std::sqrt(5.0));
    ScaleParams p = ScaleParams::with_delta(th, 5, k, 0.9);
    REQUIRE(floor_cap(forest_degree_cap(1, p)) == 3);
    BuildResult r = build_theta_family(k5, p, 1e18);
    CHECK(r.stop == StopReason::Exhausted);
    CHECK(r.family.size() > 0);
    CHECK(r.family.size() < 15);
    for (EdgeId e = 0; e < k5.edge_count(); ++e)
        CHECK(family_degree(r.family, EdgeSubset{e}) <= 3);
    CHECK(audit_goodness(r.family, p).good);
    CHECK(recheck_good(k5, r.family, p));
}

TEST_CASE("theta builder refuses vacuous parameters") {
    HostGraph k4 = HostGraph::complete(4, 2);
    PatternSpec th = PatternSpec::theta(2, 2);
    ScaleParams p = ScaleParams::from_host(k4, th, 0.5); // floor of cap(1) is 0
    REQUIRE(floor_cap(forest_degree_cap(1, p)) == 0);
    BuildResult r = build_theta_family(k4, p, 1e18);
    CHECK(r.stop == StopReason::VacuousParameters);
    CHECK(r.family.size() == 0);
}

TEST_CASE("theta builder stops at the target") {
    HostGraph k5 = HostGraph::complete(5, 2);
    PatternSpec th = PatternSpec::theta(2, 2);
    ScaleParams p = ScaleParams::with_delta(th, 5, 3.0, 0.001);
    BuildResult r = build_theta_family(k5, p, 7.0);
    CHECK(r.family.size() == 7);
    CHECK(r.stop == StopReason::TargetReached);
}

TEST_CASE("builders are deterministic, including under a fixed shuffle seed") {
    HostGraph g = random_host_exact(9, 18, 2, 3);
    PatternSpec th = PatternSpec::theta(2, 2);
    ScaleParams p = ScaleParams::with_delta(th, 9, 1.2, 0.4);
    BuildResult a = build_theta_family(g, p, 1e18);
    BuildResult b = build_theta_family(g, p, 1e18);
    CHECK(a.family.size() == b.family.size());
    CHECK(a.family.forest_ledger == b.family.forest_ledger);

    BuildResult s1 = build_theta_family(g, p, 1e18, 12345);
    BuildResult s2 = build_theta_family(g, p, 1e18, 12345);
    CHECK(s1.family.forest_ledger == s2.family.forest_ledger);
    CHECK(audit_goodness(s1.family, p).good);
}

TEST_CASE("rpartite builder golden runs") {
    PatternSpec cp = PatternSpec::complete({2, 2});
    HostGraph c4(4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    ScaleParams generous = ScaleParams::with_delta(cp, 4, 3.0, 2.0);
    BuildResult r = build_rpartite_family(c4, generous, 1e18);
    CHECK(r.family.size() == 2);
    CHECK(audit_goodness(r.family, generous).good);

    HostGraph none(5, 2, {{0, 1}});
    BuildResult r2 = build_rpartite_family(none, generous, 1e18);
    CHECK(r2.family.size() == 0);
    CHECK(r2.stop == StopReason::Exhausted);

    // floored singleton-pair cap of 3 on K4: every pair degree stays within it
    ScaleParams p3 = ScaleParams::with_delta(cp, 4, 3.0, 0.26);
    REQUIRE(floor_cap(tuple_degree_cap({1, 1}, p3)) == 3);
    HostGraph k4 = HostGraph::complete(4, 2);
    BuildResult r3 = build_rpartite_family(k4, p3, 1e18);
    CHECK(r3.family.size() > 0);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) {
            if (u == v) continue;
            CHECK(family_degree(r3.family, TupleQuery{{u}, {v}}) <= 3);
        }
    CHECK(audit_goodness(r3.family, p3).good);
    CHECK(recheck_good(k4, r3.family, p3));
}

TEST_CASE("rpartite builder with binding caps on a dense host") {
    PatternSpec cp = PatternSpec::complete({2, 2});
    HostGraph k6 = HostGraph::complete(6, 2);
    ScaleParams p = ScaleParams::with_delta(cp, 6, 2.0, 0.3);
    BuildResult r = build_rpartite_family(k6, p, 1e18);
    CHECK(r.stop == StopReason::Exhausted);
    CHECK(r.family.size() > 0);
    CHECK(r.family.size() <
          static_cast<long long>(enumerate_rpartite(k6, {2, 2}).size()));
    CHECK(audit_goodness(r.family, p).good);
    CHECK(recheck_good(k6, r.family, p));
}

TEST_CASE("good-part extension") {
    PatternSpec cp = PatternSpec::complete({2, 2});
    ScaleParams p = ScaleParams::with_delta(cp, 8, 2.0, 2.0);
    // complete bipartite host on parts {0..3} and {4..7}
    std::vector<std::vector<int>> edges;
    for (int u = 0; u < 4; ++u)
        for (int v = 4; v < 8; ++v) edges.push_back({u, v});
    HostGraph host(8, 2, edges);

    SaturatedLedger empty_ledger;
    auto part = extend_good_part(host, empty_ledger, p, {}, {4}, 0);
    REQUIRE(part.has_value());
    CHECK(part->size() == 2);
    for (int v : *part) CHECK(v < 4);

    // pool smaller than the required part size: only vertex 0 reaches 2
    HostGraph tiny(3, 2, {{0, 2}});
    auto fail = extend_good_part(tiny, empty_ledger, p, {}, {2}, 0);
    CHECK_FALSE(fail.has_value());

    // with saturated entries present, blocked vertices are skipped and
    // the result re-checks good
    HostGraph k6 = HostGraph::complete(6, 2);
    ScaleParams pk = ScaleParams::with_delta(cp, 6, 2.0, 0.3);
    SaturatedLedger sl;
    sl.tuple_entries.insert(TupleQuery{{0}, {5}});
    sl.tuple_entries.insert(TupleQuery{{1}, {5}});
    auto ext = extend_good_part(k6, sl, pk, {}, {5}, 0);
    REQUIRE(ext.has_value());
    CHECK(*ext == std::vector<int>{2, 3});
    std::vector<std::vector<int>> extended{*ext, {5}};
    CHECK_FALSE(tuple_contains_saturated(sl, extended));

    // blocking all but one pool vertex forces a failure
    sl.tuple_entries.insert(TupleQuery{{2}, {5}});
    sl.tuple_entries.insert(TupleQuery{{3}, {5}});
    CHECK_FALSE(extend_good_part(k6, sl, pk, {}, {5}, 0).has_value());

    // a built instance: whatever the extender returns must be good
    BuildResult built = build_rpartite_family(k6, pk, 1e18);
    SaturatedLedger slb = build_saturated_ledger(built.family, pk);
    auto ext2 = extend_good_part(k6, slb, pk, {}, {5}, 0);
    if (ext2) {
        std::vector<std::vector<int>> t2{*ext2, {5}};
        CHECK_FALSE(tuple_contains_saturated(slb, t2));
    }
}

TEST_CASE("degree ratio constant") {
    PatternSpec th = PatternSpec::theta(2, 2);
    HostGraph k5 = HostGraph::complete(5, 2);
    ScaleParams p = ScaleParams::from_host(k5, th, 0.5);
    BalancedFamily fam = make_family(k5, th, enumerate_theta(k5, 2, 2));
    RatioReport rep = degree_ratio_constant(fam, k5, p, th.alpha());

    // brute-force maximisation over all positive-degree subsets
    std::map<EdgeSubset, long long> degrees;
    for (const auto& m : fam.theta_members)
        for (unsigned mask = 1; mask < 16; ++mask) {
            EdgeSubset q;
            for (int i = 0; i < 4; ++i)
                if (mask & (1u << i)) q.push_back(m.edge_ids[static_cast<size_t>(i)]);
            std::sort(q.begin(), q.end());
            ++degrees[q];
        }
    double best = 0.0;
    for (const auto& [q, d] : degrees) {
        double c = static_cast<double>(d) *
                   std::pow(p.k, (1.0 + th.alpha()) * (static_cast<double>(q.size()) - 1.0)) *
                   10.0 / 15.0;
        best = std::max(best, c);
    }
    CHECK(rep.constant == Approx(best).epsilon(1e-12));

    // duplicating every member leaves the ratio unchanged
    std::vector<ThetaCopy> doubled = fam.theta_members;
    doubled.insert(doubled.end(), fam.theta_members.begin(), fam.theta_members.end());
    BalancedFamily fam2 = make_family(k5, th, doubled);
    RatioReport rep2 = degree_ratio_constant(fam2, k5, p, th.alpha());
    CHECK(rep2.constant == rep.constant);

    // size-1 subsets contribute d * e(G) / |H| exactly
    BalancedFamily one = make_family(k5, th, {fam.theta_members[0]});
    RatioReport rep1 = degree_ratio_constant(one, k5, p, th.alpha());
    if (rep1.argmax.size() == 1) CHECK(rep1.constant == Approx(1.0 * 10.0 / 1.0));
}

TEST_CASE("overloaded-edge pruning") {
    PatternSpec th = PatternSpec::theta(2, 2);
    HostGraph k4 = HostGraph::complete(4, 2);
    ScaleParams p = ScaleParams::from_host(k4, th, 0.5);

    BalancedFamily none = make_family(k4, th, std::vector<ThetaCopy>{});
    PruneResult keep = prune_overloaded_edges(k4, none, p, 1.0);
    CHECK(keep.host.edge_count() == 6);
    CHECK(keep.deleted_edges == 0);

    BalancedFamily all = make_family(k4, th, enumerate_theta(k4, 2, 2));
    PruneResult gone = prune_overloaded_edges(k4, all, p, 2.0);
    CHECK(gone.host.edge_count() == 0);
    CHECK(gone.deleted_edges == 6);

    PruneResult same = prune_overloaded_edges(k4, all, p, 3.0);
    CHECK(same.host.edge_count() == 6);

    // complete case: edges whose singleton tuple is saturated are dropped
    PatternSpec cp = PatternSpec::complete({2, 2});
    ScaleParams pc = ScaleParams::with_delta(cp, 4, 3.0, 0.21);
    BalancedFamily rp = make_family(k4, cp, enumerate_rpartite(k4, {2, 2}));
    PruneResult pruned = prune_overloaded_edges(k4, rp, pc, 0.0);
    CHECK(pruned.host.edge_count() == 0); // every singleton pair sits at its floor
}

TEST_CASE("default build targets") {
    PatternSpec th = PatternSpec::theta(2, 2);
    ScaleParams p = ScaleParams::with_delta(th, 10, 2.0, 0.5);
    CHECK(theta_build_target(p) == Approx(0.5 * 16.0 * 100.0));

    PatternSpec cp = PatternSpec::complete({2, 2, 2});
    ScaleParams q = ScaleParams::with_delta(cp, 10, 2.0, 0.5);
    CHECK(rpartite_build_target(q) == Approx(0.5 * std::pow(2.0, 8) * std::pow(10.0, 4)));
}

TEST_CASE("default overload cap follows the epsilon ladder") {
    PatternSpec th = PatternSpec::theta(2, 2);
    ScaleParams p = ScaleParams::with_delta(th, 16, 4.0, 0.5);
    double eps1 = p.epsilons.at(1);
    CHECK(default_overload_cap(p) ==
          Approx(std::pow(eps1, 9.0) * std::pow(4.0, 3.0) * std::pow(16.0, 0.5)));
}
