#include "cuboid/search.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <tuple>

namespace cuboid {

namespace {

Integer weighted_gcd_scale(const Integer& e10, const Integer& e01, const Integer& e11,
                           const Integer& l) {
    using boost::multiprecision::gcd;
    Integer g = gcd(gcd(abs(e10), abs(e01)), abs(l));
    if (g == 0) return 1;  // only the origin; nothing to divide out
    // largest divisor a of g with a^2 | e11
    Integer best = 1;
    for (Integer a = 1; a * a <= g; ++a) {
        if (g % a != 0) continue;
        const Integer divisors[2] = {a, Integer(g / a)};
        for (const Integer& d : divisors)
            if (d > best && (e11 == 0 || abs(e11) % (d * d) == 0)) best = d;
    }
    return best;
}

}  // namespace

bool is_solution(const Integer& e10, const Integer& e01, const Integer& e11, const Integer& l) {
    const Integer a2 = e10 * e10, b2 = e01 * e01, l2 = l * l;
    return 4 * e11 * e11 + a2 * a2 + b2 * b2 - 2 * a2 * b2 - 2 * l2 * a2 - 6 * b2 * l2 +
               l2 * l2 ==
           0;
}

bool is_positive_solution(const SolutionRecord& r) {
    return r.e10 > 0 && r.e01 > 0 && r.e11 > 0 && r.l > 0;
}

bool is_primitive_solution(const Integer& e10, const Integer& e01, const Integer& e11,
                           const Integer& l) {
    using boost::multiprecision::gcd;
    Integer g = gcd(gcd(abs(e10), abs(e01)), abs(l));
    if (g == 0) return false;  // the origin scales from itself by any factor
    if (g == 1) return true;
    return weighted_gcd_scale(e10, e01, e11, l) == 1;
}

SolutionRecord canonicalize(const Integer& e10, const Integer& e01, const Integer& e11,
                            const Integer& l, bool reduce) {
    if (!is_solution(e10, e01, e11, l))
        throw std::invalid_argument("canonicalize: not a solution of the biquadratic");
    SolutionRecord r{abs(e10), abs(e01), abs(e11), abs(l), false, false};
    if (reduce) {
        Integer a = weighted_gcd_scale(r.e10, r.e01, r.e11, r.l);
        r.e10 /= a;
        r.e01 /= a;
        r.e11 /= a * a;
        r.l /= a;
    }
    r.positive = is_positive_solution(r);
    r.primitive = is_primitive_solution(r.e10, r.e01, r.e11, r.l);
    return r;
}

namespace {

void search_rows(std::int64_t bound, unsigned shard, unsigned shards,
                 const std::function<void(const SolutionRecord&)>& sink) {
    for (std::int64_t l = 0; l <= bound; ++l) {
        for (std::int64_t e01 = 0; e01 <= bound; ++e01) {
            const std::uint64_t row = std::uint64_t(l) * std::uint64_t(bound + 1) + e01;
            if (shards > 1 && row % shards != shard) continue;
            const Integer b2 = Integer(e01) * e01, l2 = Integer(l) * l;
            const Integer rhs = 8 * b2 * l2;
            for (std::int64_t e10 = 0; e10 <= bound; ++e10) {
                const Integer t = b2 + l2 - Integer(e10) * e10;
                const Integer s = rhs - t * t;
                if (s < 0 || s % 4 != 0) continue;
                Integer e11;
                if (!is_perfect_square(s / 4, &e11)) continue;
                SolutionRecord r{Integer(e10), Integer(e01), e11, Integer(l), false, false};
                r.positive = is_positive_solution(r);
                r.primitive = is_primitive_solution(r.e10, r.e01, r.e11, r.l);
                sink(r);
            }
        }
    }
}

}  // namespace

void search(std::int64_t bound, const SearchOptions& options,
            const std::function<void(const SolutionRecord&)>& sink) {
    if (bound < 1) throw std::invalid_argument("search bound must be >= 1");
    auto emit = [&](const SolutionRecord& r) {
        if (options.positive_only && !r.positive) return;
        if (options.primitive_only && !r.primitive) return;
        sink(r);
    };

    const unsigned shards = std::max(1u, options.shards);
    if (shards == 1) {
        search_rows(bound, 0, 1, emit);
        return;
    }

    std::vector<std::future<std::vector<SolutionRecord>>> futures;
    for (unsigned shard = 0; shard < shards; ++shard) {
        futures.push_back(std::async(std::launch::async, [=] {
            std::vector<SolutionRecord> hits;
            search_rows(bound, shard, shards,
                        [&](const SolutionRecord& r) { hits.push_back(r); });
            return hits;
        }));
    }
    std::vector<SolutionRecord> all;
    for (auto& f : futures) {
        auto hits = f.get();
        all.insert(all.end(), hits.begin(), hits.end());
    }
    std::sort(all.begin(), all.end(), [](const SolutionRecord& a, const SolutionRecord& b) {
        return std::tie(a.l, a.e01, a.e10) < std::tie(b.l, b.e01, b.e10);
    });
    for (const auto& r : all) emit(r);
}

void heron_search(std::int64_t bound, const std::function<void(const HeronRecord&)>& sink) {
    if (bound < 1) throw std::invalid_argument("heron bound must be >= 1");
    for (std::int64_t a = 1; a <= bound; ++a)
        for (std::int64_t b = a; b <= bound; ++b)
            for (std::int64_t c = b; c <= bound; ++c) {
                const Integer t = Integer(a) * a + Integer(b) * b - Integer(c) * c;
                const Integer disc = 4 * Integer(a) * a * Integer(b) * b - t * t;
                if (disc <= 0 || disc % 16 != 0) continue;
                Integer s;
                if (!is_perfect_square(disc / 16, &s)) continue;
                sink(HeronRecord{a, b, c, s});
            }
}

TwoSquaresNote compare_heron_biquadratic(const SolutionRecord& record) {
    if (!is_solution(record.e10, record.e01, record.e11, record.l))
        throw std::invalid_argument("compare_heron_biquadratic: not a solution");
    const Integer t =
        record.e01 * record.e01 + record.l * record.l - record.e10 * record.e10;
    TwoSquaresNote note;
    note.square_a = 4 * record.e11 * record.e11;
    note.square_b = t * t;
    note.rhs = 8 * record.e01 * record.e01 * record.l * record.l;
    note.holds = note.square_a + note.square_b == note.rhs;
    return note;
}

std::string TwoSquaresNote::to_string() const {
    return square_a.str() + " + " + square_b.str() + " " + (holds ? "==" : "!=") + " " +
           rhs.str();
}

std::string SolutionRecord::to_jsonl() const {
    return "{\"e10\":" + e10.str() + ",\"e01\":" + e01.str() + ",\"e11\":" + e11.str() +
           ",\"l\":" + l.str() + ",\"positive\":" + (positive ? "true" : "false") +
           ",\"primitive\":" + (primitive ? "true" : "false") + "}";
}

std::string HeronRecord::to_jsonl() const {
    return "{\"a\":" + std::to_string(a) + ",\"b\":" + std::to_string(b) +
           ",\"c\":" + std::to_string(c) + ",\"s\":" + s.str() + "}";
}

}  // namespace cuboid
