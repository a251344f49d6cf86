#ifndef SUPERSAT_NUMERIC_HPP
#define SUPERSAT_NUMERIC_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace supersat {

// All degree caps are real-valued expressions involving fractional powers
// (n^{1/b} and friends) while ledger degrees are exact integers.  Every
// comparison of an integer count against a real cap uses a relative
// tolerance of 2^-40 applied in the conservative direction: caps are
// nudged up before flooring or comparing, so a cap that is an exact
// integer in exact arithmetic never loses to round-off.
inline constexpr double kRelTol = 0x1p-40;

inline double nudge_up(double x) { return x + std::fabs(x) * kRelTol; }
inline double nudge_down(double x) { return x - std::fabs(x) * kRelTol; }

// count <= cap, cap rounded up.
inline bool count_within_cap(long long count, double cap) {
    return static_cast<double>(count) <= nudge_up(cap);
}

// count >= cap, cap rounded down ("meets or exceeds").
inline bool count_meets_cap(long long count, double cap) {
    return static_cast<double>(count) >= nudge_down(cap);
}

// floor(cap) with the cap rounded up first; clamped at zero.
inline long long floor_cap(double cap) {
    double f = std::floor(nudge_up(cap));
    if (f < 0.0) return 0;
    return static_cast<long long>(f);
}

inline unsigned long long binomial_ull(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
    }
    return r;
}

// Saturating 128-bit accumulator for the counting bounds.  Values past
// 2^127-1 are pinned and flagged; at desk scale this never triggers on
// runs whose results are compared against exact oracles.
struct BigCount {
    unsigned __int128 value = 0;
    bool saturated = false;

    static constexpr unsigned __int128 max_value() { return ~static_cast<unsigned __int128>(0); }

    void add(unsigned __int128 x) {
        if (saturated || value > max_value() - x) {
            value = max_value();
            saturated = true;
        } else {
            value += x;
        }
    }

    void add_pow2(int e) {
        if (e >= 127) {
            value = max_value();
            saturated = true;
            return;
        }
        add(static_cast<unsigned __int128>(1) << e);
    }

    bool operator>=(unsigned long long x) const {
        return saturated || value >= static_cast<unsigned __int128>(x);
    }
};

std::string big_count_to_string(const BigCount& b);

} // namespace supersat

#endif
