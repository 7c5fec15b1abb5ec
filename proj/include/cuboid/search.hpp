#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cuboid/rational.hpp"

namespace cuboid {

/// A canonical non-negative integer solution of the biquadratic
/// 4*E11^2 + E10^4 + E01^4 - 2*E10^2*E01^2 - 2*L^2*E10^2 - 6*E01^2*L^2 + L^4 = 0.
struct SolutionRecord {
    Integer e10, e01, e11, l;
    bool positive = false;   // all four coordinates > 0
    bool primitive = false;  // no a>1 with a | gcd(e10,e01,l) and a^2 | e11

    std::string to_jsonl() const;
    friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

/// Exact test of the biquadratic at an integer point.
bool is_solution(const Integer& e10, const Integer& e01, const Integer& e11, const Integer& l);

bool is_positive_solution(const SolutionRecord& r);
bool is_primitive_solution(const Integer& e10, const Integer& e01, const Integer& e11,
                           const Integer& l);

/// Canonical form of a known solution: absolute values taken (the
/// biquadratic is even in every variable); when reduce is set, the largest
/// weighted scale a with a | gcd(e10,e01,l) and a^2 | e11 is divided out.
/// Throws std::invalid_argument when the input is not a solution.
SolutionRecord canonicalize(const Integer& e10, const Integer& e01, const Integer& e11,
                            const Integer& l, bool reduce = false);

struct SearchOptions {
    bool positive_only = false;
    bool primitive_only = false;
    unsigned shards = 1;  // partitions of the (e01, l) grid, merged deterministically
};

/// Enumerates every canonical solution with 0 <= e10, e01, l <= bound in
/// lexicographic (l, e01, e10) order. For each (e01, l) pair the candidate
/// square 8*e01^2*l^2 - (e01^2 + l^2 - e10^2)^2 must be a non-negative
/// multiple of 4 whose quarter is a perfect square; e11 is its root.
/// Output is independent of the shard count.
void search(std::int64_t bound, const SearchOptions& options,
            const std::function<void(const SolutionRecord&)>& sink);

/// Triangle with integer sides a <= b <= c and integer area s.
struct HeronRecord {
    std::int64_t a, b, c;
    Integer s;

    std::string to_jsonl() const;
    friend bool operator==(const HeronRecord&, const HeronRecord&) = default;
};

/// All Heron triangles with a <= b <= c <= bound, in lexicographic (a,b,c)
/// order: 4*a^2*b^2 - (a^2+b^2-c^2)^2 must be a positive perfect square
/// divisible by 16; s is the root of its sixteenth.
void heron_search(std::int64_t bound, const std::function<void(const HeronRecord&)>& sink);

/// Diagnostic decomposition of a solution in the two-squares shape
/// (2*e11)^2 + (e01^2 + l^2 - e10^2)^2 == 8*e01^2*l^2.
struct TwoSquaresNote {
    Integer square_a;  // (2*e11)^2
    Integer square_b;  // (e01^2 + l^2 - e10^2)^2
    Integer rhs;       // 8*e01^2*l^2
    bool holds = false;

    std::string to_string() const;
};

TwoSquaresNote compare_heron_biquadratic(const SolutionRecord& record);

}  // namespace cuboid
