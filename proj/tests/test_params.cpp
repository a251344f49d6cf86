#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "supersat/scale_params.hpp"

using namespace supersat;
using doctest::Approx;

TEST_CASE("theta constant ladder follows the recurrences") {
    for (auto [a, b] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{3, 4}}) {
        ScaleParams p = ScaleParams::default_constants(PatternSpec::theta(a, b), 100, 2.0);
        CHECK(p.bigK == Approx(5.0 * a * b));
        CHECK(p.epsilons.at(static_cast<size_t>(b)) == Approx(1.0 / std::pow(5.0 * a * b, 3)));
        for (int t = b; t >= 2; --t)
            CHECK(p.epsilons.at(static_cast<size_t>(t - 1)) ==
                  Approx(std::pow(p.epsilons.at(static_cast<size_t>(t)), t)));
        CHECK(p.delta == Approx(std::pow(p.epsilons.at(1), 2 * a * b + 2)));
        if (p.delta > 0.0) {
            CHECK(p.k0 == Approx(1.0 / p.delta));
        } else {
            // the default ladder underflows double precision for larger
            // patterns; experiments supply their own delta
            CHECK(std::isinf(p.k0));
        }
    }
}

TEST_CASE("complete constant ladder follows the recurrences") {
    std::vector<int> prof{2, 2, 3};
    ScaleParams p = ScaleParams::default_constants(PatternSpec::complete(prof), 50, 1.5);
    CHECK(p.epsilons.at(1) == Approx(0.5));
    double prefix = 1.0;
    for (size_t i = 1; i <= prof.size(); ++i) {
        double ai = prof[i - 1];
        prefix *= ai;
        double fact = 1.0;
        for (int t = 2; t <= prof[i - 1]; ++t) fact *= t;
        CHECK(p.epsilons.at(i + 1) ==
              Approx(std::pow(p.epsilons.at(i), ai) / (std::pow(2.0, 2 * ai + prefix) * fact)));
    }
    CHECK(p.delta == Approx(p.epsilons.at(prof.size() + 1) / 2.0));
    CHECK(p.bigK == Approx(2.0 * 2.0 * 3.0 * std::pow(2.0, 2 + 2 + 3 + 1)));
    CHECK(p.k0 == Approx(1.0 / p.delta));
}

TEST_CASE("forest degree cap evaluates the displayed formula") {
    ScaleParams p = ScaleParams::with_delta(PatternSpec::theta(2, 2), 16, 4.0, 0.5);
    CHECK(forest_degree_cap(1, p) == Approx(256.0));
    CHECK(forest_degree_cap(2, p) == Approx(32.0));
    CHECK_THROWS_AS(forest_degree_cap(0, p), std::invalid_argument);

    // telescoping ratio: cap(j)/cap(j+1) = delta k^{b/(b-1)}
    for (auto [a, b] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        ScaleParams q = ScaleParams::with_delta(PatternSpec::theta(a, b), 30, 1.7, 0.3);
        double ratio = q.delta * std::pow(q.k, static_cast<double>(b) / (b - 1));
        for (int j = 1; j <= 6; ++j)
            CHECK(forest_degree_cap(j, q) / forest_degree_cap(j + 1, q) == Approx(ratio));
    }
}

TEST_CASE("tuple degree cap evaluates the displayed product") {
    ScaleParams p = ScaleParams::with_delta(PatternSpec::complete({2, 2}), 16, 4.0, 0.5);
    CHECK(tuple_degree_cap({2, 2}, p) == Approx(1.0));
    CHECK(tuple_degree_cap({1, 1}, p) == Approx(64.0));
    CHECK(tuple_degree_cap({2, 1}, p) == Approx(8.0));
    CHECK_THROWS_AS(tuple_degree_cap({0, 1}, p), std::invalid_argument);
    CHECK_THROWS_AS(tuple_degree_cap({3, 1}, p), std::invalid_argument);
    CHECK_THROWS_AS(tuple_degree_cap({1, 1, 1}, p), std::invalid_argument);
}

TEST_CASE("edge scale") {
    CHECK(edge_scale(PatternSpec::theta(2, 2), 16) == Approx(64.0));
    CHECK(edge_scale(PatternSpec::complete({2, 2}), 16) == Approx(64.0));
    CHECK(edge_scale(PatternSpec::theta(3, 4), 1) == Approx(1.0));
    CHECK(edge_scale(PatternSpec::complete({2, 2, 2}), 1) == Approx(1.0));
    CHECK_THROWS_AS(edge_scale(PatternSpec::theta(2, 2), 0), std::invalid_argument);
}

TEST_CASE("k derivation matches the edge-scale normalisation") {
    HostGraph k5 = HostGraph::complete(5, 2);
    PatternSpec th = PatternSpec::theta(2, 2);
    ScaleParams p = ScaleParams::from_host(k5, th, 0.5);
    CHECK(p.k == Approx(10.0 / std::pow(5.0, 1.5)));
    CHECK(p.n == 5);
}

TEST_CASE("pattern parsing") {
    PatternSpec t = PatternSpec::parse("theta:2,3");
    CHECK(t.kind == PatternSpec::Kind::Theta);
    CHECK(t.a == 2);
    CHECK(t.b == 3);
    CHECK(t.edge_count() == 6);
    CHECK(t.vertex_count() == 6);

    PatternSpec c = PatternSpec::parse("complete:2,2,2");
    CHECK(c.kind == PatternSpec::Kind::Complete);
    CHECK(c.uniformity() == 3);
    CHECK(c.edge_count() == 8);
    CHECK(c.vertex_count() == 6);

    CHECK_THROWS_AS(PatternSpec::parse("theta:1,2"), std::invalid_argument);
    CHECK_THROWS_AS(PatternSpec::parse("complete:3,2"), std::invalid_argument);
    CHECK_THROWS_AS(PatternSpec::parse("ring:2,2"), std::invalid_argument);
}
