#include "supersat/scale_params.hpp"

#include <cmath>
#include <stdexcept>

namespace supersat {

namespace {

double factorial(int n) {
    double f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

double edge_scale(const PatternSpec& pattern, int n) {
    if (n < 1) throw std::invalid_argument("edge scale requires n >= 1");
    double nn = static_cast<double>(n);
    if (pattern.kind == PatternSpec::Kind::Theta)
        return std::pow(nn, 1.0 + 1.0 / pattern.b);
    double prod = 1.0;
    for (size_t i = 0; i + 1 < pattern.profile.size(); ++i) prod *= pattern.profile[i];
    return std::pow(nn, pattern.profile.size() - 1.0 / prod);
}

ScaleParams ScaleParams::default_constants(const PatternSpec& pattern, int n, double k) {
    ScaleParams p;
    p.pattern = pattern;
    p.n = n;
    p.k = k;
    if (pattern.kind == PatternSpec::Kind::Theta) {
        int a = pattern.a, b = pattern.b;
        p.bigK = 5.0 * a * b;
        p.epsilons.assign(static_cast<size_t>(b) + 1, 0.0);
        p.epsilons[static_cast<size_t>(b)] = 1.0 / (p.bigK * p.bigK * p.bigK);
        for (int t = b; t >= 2; --t)
            p.epsilons[static_cast<size_t>(t - 1)] = std::pow(p.epsilons[static_cast<size_t>(t)], t);
        p.delta = std::pow(p.epsilons[1], 2.0 * a * b + 2.0);
    } else {
        const auto& prof = pattern.profile;
        int r = static_cast<int>(prof.size());
        p.epsilons.assign(static_cast<size_t>(r) + 2, 0.0);
        p.epsilons[1] = 0.5;
        double prefix_prod = 1.0;
        double sum = 0.0;
        for (int i = 1; i <= r; ++i) {
            double ai = prof[static_cast<size_t>(i - 1)];
            prefix_prod *= ai;
            sum += ai;
            p.epsilons[static_cast<size_t>(i + 1)] =
                std::pow(p.epsilons[static_cast<size_t>(i)], ai) /
                (std::pow(2.0, 2.0 * ai + prefix_prod) * factorial(prof[static_cast<size_t>(i - 1)]));
        }
        p.delta = p.epsilons[static_cast<size_t>(r + 1)] / 2.0;
        p.bigK = prefix_prod * std::pow(2.0, sum + 1.0);
    }
    p.k0 = 1.0 / p.delta;
    return p;
}

ScaleParams ScaleParams::with_delta(const PatternSpec& pattern, int n, double k, double delta) {
    if (delta <= 0) throw std::invalid_argument("delta must be positive");
    ScaleParams p = default_constants(pattern, n, k);
    p.delta = delta;
    p.k0 = 1.0 / delta;
    return p;
}

double ScaleParams::derive_k(const HostGraph& g, const PatternSpec& pattern) {
    return static_cast<double>(g.edge_count()) / edge_scale(pattern, std::max(1, g.vertex_count()));
}

ScaleParams ScaleParams::from_host(const HostGraph& g, const PatternSpec& pattern, double delta) {
    if (g.uniformity() != pattern.uniformity())
        throw std::invalid_argument("pattern uniformity does not match host");
    return with_delta(pattern, g.vertex_count(), derive_k(g, pattern), delta);
}

double forest_degree_cap(int j, const ScaleParams& p) {
    if (p.pattern.kind != PatternSpec::Kind::Theta)
        throw std::invalid_argument("forest degree caps apply to theta patterns");
    if (j < 1) throw std::invalid_argument("forest degree cap requires j >= 1");
    int a = p.pattern.a, b = p.pattern.b;
    double numerator = std::pow(p.k, static_cast<double>(a) * b - 1.0) *
                       std::pow(static_cast<double>(p.n), 1.0 - 1.0 / b);
    double ratio = p.delta * std::pow(p.k, static_cast<double>(b) / (b - 1.0));
    return numerator / std::pow(ratio, j - 1.0);
}

double tuple_degree_cap(const std::vector<int>& sizes, const ScaleParams& p) {
    if (p.pattern.kind != PatternSpec::Kind::Complete)
        throw std::invalid_argument("tuple degree caps apply to complete patterns");
    const auto& prof = p.pattern.profile;
    if (sizes.size() != prof.size())
        throw std::invalid_argument("tuple degree cap arity mismatch");
    size_t r = prof.size();
    for (size_t i = 0; i < r; ++i)
        if (sizes[i] < 1 || sizes[i] > prof[i])
            throw std::invalid_argument("tuple degree cap sizes out of range");

    double result = 1.0;
    double k_exp = 1.0; // a1...a_{i-1}, empty product at i = 1
    for (size_t i = 0; i < r; ++i) {
        double tail_prod = 1.0; // a_i ... a_{r-1}, empty product at i = r
        for (size_t j = i; j + 1 < r; ++j) tail_prod *= prof[j];
        double base = p.delta * std::pow(p.k, k_exp) *
                      std::pow(static_cast<double>(p.n), 1.0 - 1.0 / tail_prod);
        result *= std::pow(base, static_cast<double>(prof[i] - sizes[i]));
        k_exp *= prof[i];
    }
    return result;
}

} // namespace supersat
