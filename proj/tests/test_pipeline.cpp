#include "doctest.h"

#include <cmath>
#include <set>

#include "supersat/enumerate.hpp"
#include "supersat/errors.hpp"
#include "supersat/pipeline.hpp"
#include "supersat/trend.hpp"

using namespace supersat;
using doctest::Approx;

TEST_CASE("schedule is geometric and stops at k0") {
    PatternSpec th = PatternSpec::theta(2, 2);
    Schedule s = make_schedule(th, 8, 0.5, 0.2);
    CHECK(s.k.front() == Approx(28.0 / edge_scale(th, 8)));
    for (size_t i = 1; i < s.k.size(); ++i) CHECK(s.k[i] == s.k[i - 1] * 0.5);
    CHECK(s.k.back() <= 0.2);
    if (s.k.size() >= 2) CHECK(s.k[s.k.size() - 2] > 0.2);
    CHECK_THROWS_AS(make_schedule(th, 8, 1.5, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(make_schedule(th, 8, 0.5, 0.0), std::invalid_argument);
}

TEST_CASE("exhaustive free counts") {
    PatternSpec th = PatternSpec::theta(2, 2);
    CHECK(count_free_graphs_exhaustive(3, th) == 8);
    CHECK(count_free_graphs_exhaustive(4, th) == 54);
    CHECK(count_free_graphs_exhaustive(4, PatternSpec::complete({2, 2})) == 54);
    CHECK_THROWS_AS(count_free_graphs_exhaustive(12, th), GuardError);
}

TEST_CASE("free count on 4 vertices matches inclusion-exclusion over the three cycles") {
    HostGraph k4 = HostGraph::complete(4, 2);
    auto copies = enumerate_theta(k4, 2, 2);
    REQUIRE(copies.size() == 3);
    long long total = 0;
    for (unsigned mask = 0; mask < 8; ++mask) {
        std::set<EdgeId> uni;
        int bits = 0;
        for (int i = 0; i < 3; ++i)
            if (mask & (1u << i)) {
                ++bits;
                uni.insert(copies[static_cast<size_t>(i)].edge_ids.begin(),
                           copies[static_cast<size_t>(i)].edge_ids.end());
            }
        long long term = 1ll << (6 - static_cast<int>(uni.size()));
        total += (bits % 2 == 0) ? term : -term;
    }
    CHECK(total == 54);
}

TEST_CASE("pipeline on a host below the pattern size") {
    PatternSpec th = PatternSpec::theta(2, 2);
    PipelineOptions opts;
    PipelineResult res = run_counting_pipeline(3, th, 0.9, 0.5, opts);
    CHECK(res.completed);
    REQUIRE(res.containers.size() == 1);
    CHECK(res.containers[0].edge_count() == 3);
    CHECK(res.subgraph_bound.value == 8);
    CHECK(pipeline_coverage_exhaustive(res, th, 3));
}

TEST_CASE("pipeline bounds dominate the exact counts in both family modes") {
    PatternSpec th = PatternSpec::theta(2, 2);
    long long exact4 = count_free_graphs_exhaustive(4, th);
    long long exact5 = count_free_graphs_exhaustive(5, th);
    CHECK(exact4 == 54);

    for (FamilyMode mode : {FamilyMode::Greedy, FamilyMode::AllCopies}) {
        PipelineOptions opts;
        opts.family_mode = mode;

        PipelineResult r4 = run_counting_pipeline(4, th, 0.9, 0.5, opts);
        CHECK(r4.subgraph_bound >= static_cast<unsigned long long>(exact4));
        CHECK(pipeline_coverage_exhaustive(r4, th, 4));

        PipelineResult r5 = run_counting_pipeline(5, th, 0.9, 0.5, opts);
        CHECK(r5.subgraph_bound >= static_cast<unsigned long long>(exact5));
        CHECK(pipeline_coverage_exhaustive(r5, th, 5));
    }

    // the all-copies mode performs a real container step at n = 5
    PipelineOptions all;
    all.family_mode = FamilyMode::AllCopies;
    PipelineResult r5 = run_counting_pipeline(5, th, 0.9, 0.5, all);
    bool replaced_some = false;
    for (const auto& lvl : r5.levels) replaced_some |= lvl.replaced > 0;
    CHECK(replaced_some);
    REQUIRE_FALSE(r5.levels.empty());
    CHECK(r5.levels[0].max_edges_after < 10); // every child lost at least one edge
}

TEST_CASE("pipeline reports diagnostics when a level is infeasible") {
    PatternSpec th = PatternSpec::theta(2, 2);
    PipelineOptions opts;
    opts.family_mode = FamilyMode::AllCopies;
    // eps = 0.5 is below the co-degree floor of the full K5 family
    PipelineResult res = run_counting_pipeline(5, th, 0.5, 0.5, opts);
    CHECK_FALSE(res.completed);
    CHECK_FALSE(res.diagnostics.empty());
    CHECK(res.subgraph_bound >= 1ull);
    CHECK(pipeline_coverage_exhaustive(res, th, 5));
}

TEST_CASE("per-level shrinkage on replaced containers") {
    PatternSpec th = PatternSpec::theta(2, 2);
    PipelineOptions opts;
    opts.family_mode = FamilyMode::AllCopies;
    PipelineResult r5 = run_counting_pipeline(5, th, 0.9, 0.5, opts);
    for (size_t i = 0; i < r5.levels.size(); ++i) {
        if (r5.levels[i].replaced == 0) continue;
        CHECK(r5.levels[i].max_edges_after < 10); // children shrank below e(K5)
    }
}

TEST_CASE("sparse bound threshold") {
    PatternSpec th = PatternSpec::theta(2, 2);
    PipelineOptions opts;
    PipelineResult r4 = run_counting_pipeline(4, th, 0.9, 0.5, opts);
    CHECK(r4.sparse_threshold == Approx(edge_scale(th, 4) / 0.125));
    CHECK(r4.sparse_bound.value >= 1ull); // empty graph is always counted
}

TEST_CASE("trend rows") {
    PatternSpec th = PatternSpec::theta(2, 2);
    auto rows = trend_complete_series(th, 4, 6);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].copies == 3);
    CHECK(rows[1].copies == 15);
    CHECK(rows[2].copies == 45);
    for (const auto& row : rows) {
        CHECK(row.benchmark == Approx(std::pow(static_cast<double>(row.m), 4.0) *
                                      std::pow(static_cast<double>(row.n), -4.0)));
        CHECK(row.ratio > 0.0);
    }
    // K4 sits below the m = n^{3/2} threshold, K6 above
    CHECK(rows[0].below_threshold == (6.0 < std::pow(4.0, 1.5)));
    CHECK(rows[2].below_threshold == (15.0 < std::pow(6.0, 1.5)));

    HostGraph empty(5, 2, {});
    TrendRow r = trend_row(empty, th);
    CHECK(r.copies == 0);
    CHECK(r.below_threshold);
}
