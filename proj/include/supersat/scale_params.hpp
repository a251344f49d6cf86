#ifndef SUPERSAT_SCALE_PARAMS_HPP
#define SUPERSAT_SCALE_PARAMS_HPP

#include <vector>

#include "supersat/host_graph.hpp"
#include "supersat/pattern.hpp"

namespace supersat {

// Scale parameters tied to one host and pattern: the density parameter k
// normalised so that e(G) = k * n^{1+1/b} (theta) or
// e(G) = k * n^{r - 1/(a1...a_{r-1})} (complete), the cap constant delta,
// and the default epsilon ladder / K / k0 recurrences.
struct ScaleParams {
    PatternSpec pattern;
    int n = 0;
    double k = 0.0;
    double delta = 1.0;
    std::vector<double> epsilons; // theta: eps[1..b]; complete: eps[1..r+1] (index 0 unused)
    double bigK = 0.0;
    double k0 = 0.0;

    // Default constant ladder for the pattern.
    //   theta:    K = 5ab, eps(b) = 1/K^3, eps(t-1) = eps(t)^t, delta = eps(1)^{2ab+2}
    //   complete: eps(1) = 1/2, eps(i+1) = eps(i)^{a_i} / (2^{2a_i + a1...a_i} a_i!),
    //             delta = eps(r+1)/2, K = a1...ar * 2^{a1+...+ar+1}
    // and k0 = 1/delta in both cases.
    static ScaleParams default_constants(const PatternSpec& pattern, int n, double k);

    // Same ladder but with a user-supplied delta (k0 = 1/delta kept).
    static ScaleParams with_delta(const PatternSpec& pattern, int n, double k, double delta);

    static ScaleParams from_host(const HostGraph& g, const PatternSpec& pattern, double delta);

    static double derive_k(const HostGraph& g, const PatternSpec& pattern);
};

// n^{1+1/b} (theta) or n^{r-1/(a1...a_{r-1})} (complete): the edge scale
// the density parameter k is measured against.
double edge_scale(const PatternSpec& pattern, int n);

// Cap on d_H(sigma) over forests of j edges:
//   k^{ab-1} n^{1-1/b} / (delta k^{b/(b-1)})^{j-1}.
double forest_degree_cap(int j, const ScaleParams& p);

// Cap on d_H(S_1,...,S_r) for part sizes (b_1,...,b_r):
//   prod_i (delta k^{a1...a_{i-1}} n^{1-1/(a_i...a_{r-1})})^{a_i-b_i}.
double tuple_degree_cap(const std::vector<int>& sizes, const ScaleParams& p);

} // namespace supersat

#endif
