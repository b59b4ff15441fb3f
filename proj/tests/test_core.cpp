#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invol/core/json_integer.hpp"
#include "invol/core/permutation.hpp"
#include "invol/core/statistics.hpp"
#include "oracles.hpp"

using namespace invol;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

}  // namespace

TEST_CASE("parse and print") {
    CHECK(P("3412").str() == "3412");
    CHECK(P("").empty());
    CHECK(P("()").empty());
    CHECK(P("10,1,2,3,4,5,6,7,8,9").size() == 10);
    CHECK(P("10,1,2,3,4,5,6,7,8,9").str() == "10,1,2,3,4,5,6,7,8,9");
    CHECK_THROWS_AS(P("112"), std::invalid_argument);
    CHECK_THROWS_AS(P("13"), std::invalid_argument);
    CHECK_THROWS_AS(P("1a"), std::invalid_argument);
}

TEST_CASE("occurrences") {
    CHECK(occurrences(P("214538769"), P("2413")) == 0);
    CHECK(occurrences(P("3412"), P("3412")) == 1);
    CHECK(occurrences(P("4321"), P("21")) == 6);
    CHECK(occurrences(P("54321"), P("321")) == 10);
}

TEST_CASE("involution test") {
    CHECK(is_involution(Permutation::identity(7)));
    CHECK(is_involution(P("3412")));
    CHECK_FALSE(is_involution(P("214538769")));
}

TEST_CASE("constructions") {
    CHECK(star(P(""), P("")) == P("21"));
    CHECK(star(P("1"), P("")) == P("321"));
    CHECK(star(P(""), P("1")) == P("213"));
    CHECK(otimes(P(""), P(""), P("")) == P("3412"));
    CHECK(overline(P("1")).empty());
    CHECK(overline(P("321")) == P("1"));
    CHECK(overline(P("213")) == P("213"));
    CHECK(decompose(P("1234")) == std::vector<Permutation>{P("1"), P("1"), P("1"), P("1")});
    CHECK(decompose(P("3412")) == std::vector<Permutation>{P("3412")});
    CHECK(beta(P("132")) == P("21"));
    CHECK(reverse_complement(P("213")) == P("132"));
    CHECK(reverse_complement(Permutation::identity(5)) == Permutation::identity(5));
    CHECK(decreasing(3) == P("321"));
    CHECK(layered({1, 2}) == P("132"));
    CHECK(layered({2, 1, 1}) == P("2134"));
    CHECK(direct_sum(P("21"), P("1")) == P("213"));
    CHECK(skew_sum(P("1"), P("231")) == P("4231"));
}

TEST_CASE("crossings") {
    CHECK(crossings(Permutation::identity(5)).empty());
    CHECK(crossings(P("21")).empty());
    const auto c = crossings(P("3412"));
    REQUIRE(c.size() == 1);
    CHECK(c[0] == Crossing{1, 2, 3, 4});
}

TEST_CASE("statistics examples") {
    const auto s = statistics(P("21"));
    REQUIRE(s.tau.size() == 2);
    CHECK(s.tau[0] == 2);
    CHECK(s.tau[1] == 1);
    CHECK(statistics(P("3412")).sign == 1);
    CHECK(statistics(Permutation::identity(6)).fix == 6);
    CHECK(statistic_value(P("3412"), Statistic::Inv) == 4);
    CHECK(parse_statistic("lrmax") == Statistic::Lrmax);
    CHECK_THROWS_AS(parse_statistic("descents"), std::invalid_argument);
}

TEST_CASE("json integers") {
    CHECK(json_integer(mpz_class(5)) == nlohmann::json(5));
    const mpz_class big("123456789012345678901234567890");
    CHECK(json_integer(big).is_string());
    CHECK(integer_from_json(json_integer(big)) == big);
    CHECK(integer_from_json(json_integer(mpz_class(-7))) == -7);
}

TEST_CASE("property: pattern counts agree with the subset oracle") {
    oracle::Gen g(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto text = g.permutation(g.uniform(0, 8));
        const auto pat = g.permutation(g.uniform(1, 4));
        CHECK(occurrences(Permutation(text), Permutation(pat)) == oracle::occurrences(text, pat));
    }
}

TEST_CASE("property: sign, inversions and tau on random involutions") {
    oracle::Gen g(12);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = g.involution(g.uniform(0, 10));
        const Permutation pi(p);
        const auto s = statistics(pi, {1, 2, 3});
        CHECK(s.sign == oracle::sign(p));
        CHECK(s.inv == oracle::inversions(p));
        CHECK(s.tau_k(1) == static_cast<long>(p.size()));
        CHECK(s.tau_k(2) == s.inv);
        for (int k = 1; k <= 4; ++k) CHECK(tau(pi, k) == oracle::occurrences(p, oracle::decreasing(k)));
        CHECK(inverse(pi) == pi);
    }
}

TEST_CASE("property: lrmax, rlmin and fix through tau on I(3412)") {
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : oracle::involutions(n)) {
            if (oracle::contains(p, oracle::parse("3412"))) continue;
            const auto s = statistics(Permutation(p), {1, 2});
            CHECK(s.lrmax == s.rlmin);
            CHECK(s.omega.at(1) == s.lrmax);
            CHECK(s.omega.at(2) == s.fix);
        }
}

TEST_CASE("property: skew and direct sums") {
    oracle::Gen g(13);
    for (int trial = 0; trial < 100; ++trial) {
        const Permutation a(g.permutation(g.uniform(0, 4))), b(g.permutation(g.uniform(0, 4)));
        const auto d = direct_sum(a, b), s = skew_sum(a, b);
        CHECK(d.size() == a.size() + b.size());
        CHECK(reverse_complement(direct_sum(a, b)) == direct_sum(reverse_complement(b), reverse_complement(a)));
        CHECK(inversions(s) == inversions(a) + inversions(b) + a.size() * b.size());
        if (!a.empty() && !b.empty()) CHECK(decompose(d).size() == decompose(a).size() + decompose(b).size());
    }
}
