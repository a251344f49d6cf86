#include "doctest.h"

#include <set>

#include "supersat/enumerate.hpp"
#include "supersat/errors.hpp"
#include "supersat/oracle.hpp"
#include "supersat/random_host.hpp"

using namespace supersat;

namespace {

HostGraph cycle4() { return HostGraph(4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

HostGraph k23() {
    // parts {0,1} and {2,3,4}
    return HostGraph(5, 2, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

} // namespace

TEST_CASE("theta enumeration golden counts") {
    CHECK(enumerate_theta(cycle4(), 2, 2).size() == 1);
    CHECK(enumerate_theta(HostGraph::complete(5, 2), 2, 2).size() == 15);
    CHECK(enumerate_theta(k23(), 3, 2).size() == 1);
    CHECK(enumerate_theta(HostGraph(3, 2, {{0, 1}}), 2, 2).empty());
    CHECK_THROWS_AS(enumerate_theta(cycle4(), 1, 2), std::invalid_argument);
}

TEST_CASE("theta copies satisfy their invariants and are canonically sorted") {
    for (auto [a, b] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        HostGraph g = HostGraph::complete(6, 2);
        auto copies = enumerate_theta(g, a, b);
        std::set<EdgeSubset> edge_sets;
        for (const auto& c : copies) {
            c.validate(g, a, b);
            CHECK(c.x < c.y);
            CHECK(edge_sets.insert(c.edge_ids).second); // one copy per edge set
        }
        for (size_t i = 1; i < copies.size(); ++i)
            CHECK(copies[i - 1].encoding() < copies[i].encoding());
    }
}

TEST_CASE("rpartite enumeration golden counts") {
    CHECK(enumerate_rpartite(cycle4(), {2, 2}).size() == 2);
    CHECK(enumerate_rpartite(HostGraph::complete(4, 2), {2, 2}).size() == 6);
    CHECK(enumerate_rpartite(HostGraph::complete(3, 2), {2, 2}).empty());
    CHECK_THROWS_AS(enumerate_rpartite(cycle4(), {2, 2, 2}), std::invalid_argument);
}

TEST_CASE("rpartite copies validate against the host") {
    HostGraph g = random_host_exact(8, 24, 2, 5);
    for (const auto& c : enumerate_rpartite(g, {2, 2})) c.validate(g, {2, 2});

    HostGraph h3 = random_host_exact(8, 40, 3, 6);
    for (const auto& c : enumerate_rpartite(h3, {2, 2, 2})) c.validate(h3, {2, 2, 2});
}

TEST_CASE("oracle golden counts and guard") {
    CHECK(oracle_count(HostGraph::complete(4, 2), PatternSpec::theta(2, 2)) == 3);
    CHECK(oracle_count(HostGraph::complete(4, 2), PatternSpec::complete({2, 2})) == 6);
    CHECK(oracle_count(HostGraph(5, 2, {}), PatternSpec::theta(2, 2)) == 0);
    CHECK(oracle_count(HostGraph::complete(5, 2), PatternSpec::theta(2, 2)) == 15);
    CHECK_THROWS_AS(oracle_count(HostGraph::complete(13, 2), PatternSpec::theta(2, 2)),
                    GuardError);
}

TEST_CASE("enumerators agree with the oracle exhaustively up to 5 vertices") {
    HostGraph full = HostGraph::complete(5, 2);
    std::vector<PatternSpec> patterns{PatternSpec::theta(2, 2), PatternSpec::theta(2, 3),
                                      PatternSpec::theta(3, 2), PatternSpec::complete({2, 2})};
    for (unsigned mask = 0; mask < (1u << 10); ++mask) {
        std::vector<std::vector<int>> edges;
        for (int e = 0; e < 10; ++e)
            if (mask & (1u << e)) edges.push_back(full.edge(e));
        HostGraph g(5, 2, edges);
        for (const auto& pat : patterns)
            CHECK(enumerate_count(g, pat) == oracle_count(g, pat));
    }
}

TEST_CASE("enumerators agree with the oracle on seeded random graphs") {
    std::vector<PatternSpec> patterns{PatternSpec::theta(2, 2), PatternSpec::theta(2, 3),
                                      PatternSpec::theta(3, 2), PatternSpec::complete({2, 2})};
    uint64_t seed = 1000;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 6 + trial % 3; // 6..8
        long long max_m = static_cast<long long>(n) * (n - 1) / 2;
        long long m = (trial * 7) % (max_m + 1);
        HostGraph g = random_host_exact(n, m, 2, seed + trial);
        for (const auto& pat : patterns)
            CHECK(enumerate_count(g, pat) == oracle_count(g, pat));
    }
}

TEST_CASE("hypergraph enumerator agrees with the oracle on 100 seeded 3-graphs") {
    PatternSpec pat = PatternSpec::complete({2, 2, 2});
    uint64_t seed = 4000;
    for (int trial = 0; trial < 100; ++trial) {
        int n = 6 + trial % 3; // 6..8
        long long max_m = static_cast<long long>(
            n == 6 ? 20 : (n == 7 ? 35 : 56));
        long long m = (trial * 11) % (max_m + 1);
        HostGraph g = random_host_exact(n, m, 3, seed + trial);
        CHECK(enumerate_count(g, pat) == oracle_count(g, pat));
    }
}

TEST_CASE("theta_{2,b} counts match an independent even-cycle counter") {
    uint64_t seed = 500;
    for (int trial = 0; trial < 40; ++trial) {
        int n = 6 + trial % 3;
        long long m = 5 + (trial * 3) % 12;
        HostGraph g = random_host_exact(n, m, 2, seed + trial);
        CHECK(static_cast<long long>(enumerate_theta(g, 2, 2).size()) == count_cycles(g, 4));
        CHECK(static_cast<long long>(enumerate_theta(g, 2, 3).size()) == count_cycles(g, 6));
    }
    CHECK(count_cycles(HostGraph::complete(5, 2), 4) == 15);
}

TEST_CASE("copy containment queries") {
    HostGraph c4 = cycle4();
    auto copies = enumerate_theta(c4, 2, 2);
    REQUIRE(copies.size() == 1);
    const ThetaCopy& copy = copies[0];
    CHECK(theta_copy_contains(copy, {copy.edge_ids[0], copy.edge_ids[2]}));
    CHECK_THROWS_AS(theta_copy_contains(copy, {}), std::invalid_argument);

    RPartiteCopy rp;
    rp.parts = {{0, 1}, {2, 3}};
    CHECK(rpartite_copy_contains(rp, {{0}, {2, 3}}));
    CHECK_FALSE(rpartite_copy_contains(rp, {{2}, {0}}));
    CHECK_THROWS_AS(rpartite_copy_contains(rp, {{0}}), std::invalid_argument);
    CHECK_THROWS_AS(rpartite_copy_contains(rp, {{0}, {}}), std::invalid_argument);
}
