#include "doctest.h"

#include <stdexcept>

#include "supersat/random_host.hpp"

using namespace supersat;

TEST_CASE("exact random hosts") {
    HostGraph forced = random_host_exact(5, 10, 2, 123);
    CHECK(forced.edge_count() == 10); // every pair: K5
    CHECK(forced.edges() == HostGraph::complete(5, 2).edges());

    HostGraph a = random_host_exact(9, 14, 2, 5);
    HostGraph b = random_host_exact(9, 14, 2, 5);
    CHECK(a.edges() == b.edges());
    HostGraph c = random_host_exact(9, 14, 2, 6);
    CHECK(a.edges() != c.edges());

    CHECK(random_host_exact(7, 0, 3, 1).edge_count() == 0);
    CHECK_THROWS_AS(random_host_exact(4, 7, 2, 1), std::invalid_argument);
}

TEST_CASE("binomial random hosts") {
    CHECK(random_host_binomial(6, 0.0, 2, 9).edge_count() == 0);
    CHECK(random_host_binomial(6, 1.0, 2, 9).edge_count() == 15);
    HostGraph a = random_host_binomial(8, 0.4, 2, 17);
    HostGraph b = random_host_binomial(8, 0.4, 2, 17);
    CHECK(a.edges() == b.edges());
    CHECK_THROWS_AS(random_host_binomial(4, 1.5, 2, 1), std::invalid_argument);
}
