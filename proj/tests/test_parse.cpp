#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cuboid/cuboid_system.hpp"
#include "cuboid/kernel_corpus.hpp"
#include "cuboid/parse.hpp"

using namespace cuboid;

namespace {

Polynomial mql(std::string_view s) { return parse_expression(s, mql_ring()); }
Polynomial elp(std::string_view s) { return parse_expression(s, el_ring()); }

// golden ingest values: term count and total degree per corpus entry
struct Golden { const char* name; std::size_t terms; std::int64_t degree; };
constexpr Golden kCorpusGolden[14] = {
    {"~q1", 11, 4},  {"~q2", 11, 4},  {"~q3", 24, 6},  {"~q4", 18, 5},
    {"~q5", 19, 5},  {"~q6", 11, 4},  {"~q7", 25, 6},  {"~q8", 36, 7},
    {"~q9", 19, 5},  {"~q10", 72, 9}, {"~q11", 67, 9}, {"~q12", 88, 10},
    {"~q13", 223, 13}, {"~q14", 27, 6},
};

}  // namespace

TEST_CASE("definition parsing basics") {
    auto defs = parse_definitions("q:=0;", el_ring());
    REQUIRE(defs.entries.size() == 1);
    CHECK(defs.entries[0].first == "q");
    CHECK(defs.entries[0].second.is_zero());

    defs = parse_definitions("p:=E10^2-2*E20-L^2;", el_ring());
    CHECK(defs.entries[0].second == EFormSystem::instance().factor_eforms[0]);
}

TEST_CASE("embedded corpus ingests to the golden shape") {
    auto defs = load_kernel_corpus();
    REQUIRE(defs.entries.size() == 14);
    for (std::size_t i = 0; i < 14; ++i) {
        CAPTURE(i);
        CHECK(defs.entries[i].first == kCorpusGolden[i].name);
        CHECK(defs.entries[i].second.term_count() == kCorpusGolden[i].terms);
        CHECK(defs.entries[i].second.total_degree() == kCorpusGolden[i].degree);
    }
}

TEST_CASE("corpus checksum guards against drift") {
    CHECK(fnv1a64(kKernelCorpus) == kKernelCorpusChecksum);
    std::string corrupted = kKernelCorpus;
    corrupted[corrupted.find("81")] = '9';
    CHECK(fnv1a64(corrupted) != kKernelCorpusChecksum);
    // an external corpus bypasses the checksum and just parses
    auto defs = load_kernel_corpus_from("~q1:=E10-E10;", "test");
    CHECK(defs.entries.size() == 1);
}

TEST_CASE("expression parsing") {
    Polynomial p = mql("(x1+x2+x3)^2");
    CHECK(p.term_count() == 6);
    CHECK(p == mql("x1^2+x2^2+x3^2+2*x1*x2+2*x2*x3+2*x3*x1"));

    CHECK(mql("-L^2+L^2").is_zero());

    Polynomial q = mql("d1*(x2^2+x3^2-d1^2)");
    CHECK(q.term_count() == 3);
    CHECK(q == mql("d1*x2^2+d1*x3^2-d1^3"));

    // whitespace may fall between any two tokens, including '^' and its exponent
    CHECK(elp("E01^\n3*E02") == elp("E01^3*E02"));

    // '#' comments run to end of line
    auto defs = parse_definitions("# corpus fixture\np := L; # trailing\n", mql_ring());
    CHECK(defs.entries[0].second == mql("L"));
}

TEST_CASE("rational coefficient literals") {
    Polynomial p = elp("1/2*E10^2-1/2*L^2");
    CHECK(p.coefficient(Monomial::variable(10, 0, 2)) == Rational(1, 2));
    CHECK(elp("3/6*E10") == elp("1/2*E10"));
    CHECK_THROWS_AS(elp("1/0*E10"), ParseError);
}

TEST_CASE("positioned parse errors") {
    try {
        parse_definitions("p:=E10^2;\nq:=E99+1;", el_ring());
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 4);
        CHECK(e.token() == "E99");
    }

    CHECK_THROWS_AS(elp("E01^*2"), ParseError);          // malformed exponent
    CHECK_THROWS_AS(parse_definitions("p:=E10", el_ring()), ParseError);  // unterminated
    CHECK_THROWS_AS(elp("2E10"), ParseError);            // implicit multiplication
    CHECK_THROWS_AS(parse_definitions("p:=1;p:=2;", el_ring()), ParseError);  // duplicate
    CHECK_THROWS_AS(elp("x9"), ParseError);              // unknown variable
}

TEST_CASE("render canonical form") {
    CHECK(render(Polynomial(mql_ring())) == "0");
    CHECK(render(CuboidGenerators::instance().space_diag) == "x1^2+x2^2+x3^2-L^2");
    CHECK(render(elp("3/2*E10^2")) == "3/2*E10^2");
    CHECK(render(elp("-E10-1")) == "-E10-1");
}

TEST_CASE("parse of render round-trips") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> nterms(0, 6);
    std::uniform_int_distribution<int> expd(0, 4);
    std::uniform_int_distribution<int> coeffd(-12, 12);
    std::uniform_int_distribution<int> dend(1, 5);
    for (int it = 0; it < 120; ++it) {
        const RingPtr& ring = (it % 2) ? el_ring() : mql_ring();
        Polynomial p(ring);
        const int t = nterms(rng);
        for (int k = 0; k < t; ++k) {
            Monomial m(ring->size());
            for (std::size_t v = 0; v < ring->size(); ++v)
                if (expd(rng) == 0) m[v] = static_cast<std::uint32_t>(expd(rng));
            p.add_term(m, Rational(coeffd(rng), dend(rng)));
        }
        CHECK(parse_expression(render(p), ring) == p);
    }
    // and the corpus entries themselves round-trip
    for (const auto& [name, p] : load_kernel_corpus().entries)
        CHECK(parse_expression(render(p), el_ring()) == p);
}
