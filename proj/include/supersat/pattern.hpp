#ifndef SUPERSAT_PATTERN_HPP
#define SUPERSAT_PATTERN_HPP

#include <numeric>
#include <string>
#include <vector>

namespace supersat {

// Target pattern: either a theta graph (a internally disjoint paths of
// length b between two endpoints) or a complete r-partite r-graph with
// part sizes a1 <= ... <= ar.
struct PatternSpec {
    enum class Kind { Theta, Complete };

    Kind kind = Kind::Theta;
    int a = 2;
    int b = 2;
    std::vector<int> profile; // complete case, sorted ascending

    int uniformity() const {
        return kind == Kind::Theta ? 2 : static_cast<int>(profile.size());
    }

    // Edges of one copy: a*b for theta, a1*...*ar transversals otherwise.
    long long edge_count() const {
        if (kind == Kind::Theta) return static_cast<long long>(a) * b;
        long long p = 1;
        for (int ai : profile) p *= ai;
        return p;
    }

    int vertex_count() const {
        if (kind == Kind::Theta) return a * (b - 1) + 2;
        int s = 0;
        for (int ai : profile) s += ai;
        return s;
    }

    // Exponent gain in the uniform-distribution condition.
    double alpha() const { return 1.0 / (static_cast<double>(edge_count()) - 1.0); }

    std::string to_string() const;

    static PatternSpec theta(int a, int b);
    static PatternSpec complete(std::vector<int> profile);
    static PatternSpec parse(const std::string& text);
};

} // namespace supersat

#endif
