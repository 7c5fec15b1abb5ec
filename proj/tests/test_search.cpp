#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "cuboid/search.hpp"

using namespace cuboid;

namespace {

std::vector<SolutionRecord> collect(std::int64_t bound, SearchOptions options = {}) {
    std::vector<SolutionRecord> out;
    search(bound, options, [&](const SolutionRecord& r) { out.push_back(r); });
    return out;
}

/// Brute-force oracle: quadruple loop over the full canonical box with the
/// e11 range [0, bound^2] implied by the two-squares shape.
std::vector<SolutionRecord> brute_force(std::int64_t bound) {
    std::vector<SolutionRecord> out;
    for (std::int64_t l = 0; l <= bound; ++l)
        for (std::int64_t e01 = 0; e01 <= bound; ++e01)
            for (std::int64_t e10 = 0; e10 <= bound; ++e10)
                for (std::int64_t e11 = 0; e11 <= bound * bound; ++e11)
                    if (is_solution(e10, e01, e11, l)) {
                        SolutionRecord r{e10, e01, e11, l, false, false};
                        r.positive = is_positive_solution(r);
                        r.primitive = is_primitive_solution(r.e10, r.e01, r.e11, r.l);
                        out.push_back(r);
                    }
    return out;
}

bool contains(const std::vector<SolutionRecord>& rs, std::int64_t e10, std::int64_t e01,
              std::int64_t e11, std::int64_t l) {
    for (const auto& r : rs)
        if (r.e10 == e10 && r.e01 == e01 && r.e11 == e11 && r.l == l) return true;
    return false;
}

}  // namespace

TEST_CASE("solution membership") {
    CHECK(is_solution(0, 0, 0, 0));
    CHECK(is_solution(2, 1, 1, 1));
    CHECK_FALSE(is_solution(1, 1, 1, 1));
}

TEST_CASE("search finds the small solutions") {
    auto rs = collect(1);
    CHECK(contains(rs, 0, 0, 0, 0));
    CHECK(contains(rs, 1, 1, 0, 0));
    CHECK(contains(rs, 0, 1, 1, 1));
    CHECK(contains(collect(2), 2, 1, 1, 1));
    for (const auto& r : collect(6)) CHECK(is_solution(r.e10, r.e01, r.e11, r.l));
}

TEST_CASE("search equals the brute-force oracle up to bound 10") {
    for (std::int64_t bound : {1, 2, 3, 7, 10}) {
        CAPTURE(bound);
        CHECK(collect(bound) == brute_force(bound));
    }
    CHECK(collect(10).size() == 183);
}

TEST_CASE("search output is ordered lexicographically by (l, e01, e10)") {
    auto rs = collect(10);
    for (std::size_t i = 1; i < rs.size(); ++i) {
        auto key = [](const SolutionRecord& r) { return std::tie(r.l, r.e01, r.e10); };
        CHECK(key(rs[i - 1]) < key(rs[i]));
    }
}

TEST_CASE("sharded search is deterministic") {
    auto reference = collect(10);
    for (unsigned shards : {2u, 3u, 4u, 7u}) {
        SearchOptions options;
        options.shards = shards;
        CHECK(collect(10, options) == reference);
    }
}

TEST_CASE("filters") {
    SearchOptions positive;
    positive.positive_only = true;
    for (const auto& r : collect(12, positive)) {
        CHECK(r.e10 > 0);
        CHECK(r.e01 > 0);
        CHECK(r.e11 > 0);
        CHECK(r.l > 0);
    }
    SearchOptions primitive;
    primitive.primitive_only = true;
    auto rs = collect(12, primitive);
    CHECK(contains(rs, 2, 1, 1, 1));
    CHECK_FALSE(contains(rs, 4, 2, 4, 2));
    for (const auto& r : rs) CHECK(r.primitive);
}

TEST_CASE("canonicalize") {
    SolutionRecord r = canonicalize(-2, 1, -1, 1);
    CHECK(r == canonicalize(2, 1, 1, 1));
    CHECK(r.e10 == 2);
    CHECK(r.positive);
    CHECK(r.primitive);

    SolutionRecord reduced = canonicalize(4, 2, 4, 2, /*reduce=*/true);
    CHECK(reduced.e10 == 2);
    CHECK(reduced.e01 == 1);
    CHECK(reduced.e11 == 1);
    CHECK(reduced.l == 1);
    CHECK(reduced.primitive);
    CHECK(is_solution(reduced.e10, reduced.e01, reduced.e11, reduced.l));

    SolutionRecord unreduced = canonicalize(4, 2, 4, 2);
    CHECK_FALSE(unreduced.primitive);

    SolutionRecord origin = canonicalize(0, 0, 0, 0, /*reduce=*/true);
    CHECK(origin.e10 == 0);
    CHECK_FALSE(origin.primitive);  // scales from itself by any factor

    CHECK_THROWS_AS(canonicalize(1, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("evenness in every variable") {
    const std::array<std::array<std::int64_t, 4>, 3> points = {
        {{2, 1, 1, 1}, {0, 1, 1, 1}, {3, 2, 2, 1}}};
    for (const auto& p : points)
        for (int mask = 0; mask < 16; ++mask) {
            const std::int64_t s0 = (mask & 1) ? -1 : 1, s1 = (mask & 2) ? -1 : 1,
                               s2 = (mask & 4) ? -1 : 1, s3 = (mask & 8) ? -1 : 1;
            CHECK(is_solution(s0 * p[0], s1 * p[1], s2 * p[2], s3 * p[3]));
        }
}

TEST_CASE("weighted scaling closure") {
    for (const auto& r : collect(5))
        for (int alpha : {2, 3, 5})
            CHECK(is_solution(alpha * r.e10, alpha * r.e01, alpha * alpha * r.e11, alpha * r.l));
}

TEST_CASE("heron search") {
    std::vector<HeronRecord> rs;
    heron_search(10, [&](const HeronRecord& r) { rs.push_back(r); });
    const std::vector<HeronRecord> expected = {
        {3, 4, 5, Integer(6)}, {5, 5, 6, Integer(12)}, {5, 5, 8, Integer(12)},
        {6, 8, 10, Integer(24)}};
    CHECK(rs == expected);

    std::vector<HeronRecord> small;
    heron_search(5, [&](const HeronRecord& r) { small.push_back(r); });
    CHECK(small == std::vector<HeronRecord>{{3, 4, 5, Integer(6)}});

    // the area comes from the squared half-perimeter product, and the sides
    // always satisfy the triangle inequality
    std::vector<HeronRecord> big;
    heron_search(25, [&](const HeronRecord& r) { big.push_back(r); });
    for (const auto& r : big) {
        CHECK(r.s > 0);
        CHECK(r.a + r.b > r.c);
        const Integer p1 = r.a + r.b + r.c, p2 = -r.a + r.b + r.c, p3 = r.a - r.b + r.c,
                      p4 = r.a + r.b - r.c;
        CHECK(16 * r.s * r.s == p1 * p2 * p3 * p4);
    }
}

TEST_CASE("two-squares decomposition notes") {
    auto note = compare_heron_biquadratic(canonicalize(2, 1, 1, 1));
    CHECK(note.square_a == 4);
    CHECK(note.square_b == 4);
    CHECK(note.rhs == 8);
    CHECK(note.holds);

    note = compare_heron_biquadratic(canonicalize(0, 1, 1, 1));
    CHECK(note.square_a + note.square_b == 8);
    CHECK(note.holds);

    note = compare_heron_biquadratic(canonicalize(1, 1, 0, 0));
    CHECK(note.square_a == 0);
    CHECK(note.square_b == 0);
    CHECK(note.rhs == 0);
    CHECK(note.holds);
}

TEST_CASE("jsonl rendering is byte-stable") {
    SolutionRecord r = canonicalize(2, 1, 1, 1);
    CHECK(r.to_jsonl() ==
          "{\"e10\":2,\"e01\":1,\"e11\":1,\"l\":1,\"positive\":true,\"primitive\":true}");
    HeronRecord h{3, 4, 5, Integer(6)};
    CHECK(h.to_jsonl() == "{\"a\":3,\"b\":4,\"c\":5,\"s\":6}");
}
