#ifndef SUPERSAT_RANDOM_HOST_HPP
#define SUPERSAT_RANDOM_HOST_HPP

#include <cstdint>

#include "supersat/host_graph.hpp"

namespace supersat {

// splitmix64; the CLI and tests use it instead of <random> distributions
// so byte-identical output does not depend on the standard library.
uint64_t splitmix64_next(uint64_t& state);

// Uniform r-graph with exactly m edges, deterministic per seed.
HostGraph random_host_exact(int n, long long m, int r, uint64_t seed);

// Binomial r-graph: every possible edge kept with probability p.
HostGraph random_host_binomial(int n, double p, int r, uint64_t seed);

} // namespace supersat

#endif
