#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invol/genfun/catalog.hpp"
#include "invol/genfun/engine.hpp"
#include "invol/genfun/r_occurrence.hpp"
#include "oracles.hpp"

using namespace invol;

namespace {

constexpr int kN = 8;  // oracle enumerates all of S_8

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<long> longs(const IntSeries& s) {
    std::vector<long> out;
    for (const auto& c : s.coeffs()) out.push_back(c.get_si());
    return out;
}

std::vector<long> reals(const PowerSeries& s) {
    std::vector<long> out;
    for (const auto& c : s.coeffs()) {
        REQUIRE(c.is_real());
        out.push_back(c.re.get_si());
    }
    return out;
}

// sum over I_n of weight when keep(p) holds.
template <class Keep>
std::vector<long> oracle_series(Keep keep, bool is_signed, int N = kN) {
    std::vector<long> out;
    for (int n = 0; n <= N; ++n) {
        long c = 0;
        for (const auto& p : oracle::involutions(n))
            if (keep(p)) c += is_signed ? oracle::sign(p) : 1;
        out.push_back(c);
    }
    return out;
}

const oracle::Perm k3412 = oracle::parse("3412");

std::vector<oracle::Perm> all_patterns(int max_len) {
    std::vector<oracle::Perm> out;
    for (int n = 1; n <= max_len; ++n) {
        oracle::Perm p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
        do out.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    return out;
}

}  // namespace

TEST_CASE("F examples") {
    auto minus = shared_engine(Variant::Minus, kN);
    auto plus = shared_engine(Variant::Plus, kN);
    CHECK(longs(minus->F(P("21"))) == std::vector<long>(kN + 1, 1));
    CHECK(longs(minus->F(P("12"))) == std::vector<long>{1, 1, -1, -1, 1, 1, -1, -1, 1});
    GFQuery q{Family::F, Variant::Plus, {EmptyPattern{}}, kN};
    CHECK(longs(plus->evaluate(q)) == std::vector<long>(kN + 1, 0));
    q.variant = Variant::Minus;
    CHECK(longs(minus->evaluate(q)) == std::vector<long>(kN + 1, 0));
    CHECK(longs(plus->F(P("321"))) == std::vector<long>{1, 1, 2, 3, 5, 8, 13, 21, 34});
}

TEST_CASE("G, P and Q examples") {
    auto plus = shared_engine(Variant::Plus, kN);
    auto minus = shared_engine(Variant::Minus, kN);
    CHECK(longs(plus->G(P("12"))) == std::vector<long>{0, 0, 1, 0, 1, 0, 1, 0, 1});
    CHECK(longs(plus->G(P("2413"))) == std::vector<long>(kN + 1, 0));
    // -x^3/(1 - x + x^2)
    CHECK(longs(minus->G(P("132"))) == std::vector<long>{0, 0, 0, -1, -1, 0, 1, 1, 0});
    CHECK(longs(minus->G(P("213"))) == longs(minus->G(P("132"))));
    CHECK(longs(plus->P(std::nullopt)) == std::vector<long>{0, 0, 0, 0, 1, 5, 20, 70, 231});
    CHECK(plus->P(P("321"))[4] == 1);
    CHECK(longs(plus->P(P("231"))) == std::vector<long>(kN + 1, 0));
    CHECK(longs(plus->P(P("312"))) == std::vector<long>(kN + 1, 0));
    CHECK(longs(plus->Q(2)) == std::vector<long>(kN + 1, 0));
    CHECK(plus->Q(4)[6] == 2);
    CHECK(plus->Q(4)[7] == 12);
    CHECK_THROWS_AS(minus->Q(4), std::invalid_argument);
    CHECK_THROWS_AS(plus->Q(1), std::invalid_argument);
}

TEST_CASE("query validation and parsing") {
    CHECK(parse_family("G") == Family::G);
    CHECK(parse_variant("minus") == Variant::Minus);
    CHECK_THROWS_AS(parse_family("H"), std::invalid_argument);
    CHECK(pattern_arg_str(parse_pattern_arg("empty")) == "empty");
    CHECK(pattern_arg_str(parse_pattern_arg("none")) == "none");
    GFQuery two_g{Family::G, Variant::Plus, {P("12"), P("21")}, 5};
    CHECK_THROWS_AS(two_g.validate(), std::invalid_argument);
    GFQuery q{Family::F, Variant::Minus, {P("4321")}, 6};
    const auto j = to_json(q, shared_engine(Variant::Minus, 6)->evaluate(q));
    CHECK(j["pattern"] == "4321");
    CHECK(j["coeffs"] == nlohmann::json::array({1, 1, 0, -2, -4, -4, 0}));
}

TEST_CASE("property: F, G and P against the S_n oracle for every pattern of length <= 3") {
    for (auto v : {Variant::Plus, Variant::Minus}) {
        auto e = shared_engine(v, kN);
        const bool sgn = v == Variant::Minus;
        for (const auto& pat : all_patterns(3)) {
            CAPTURE(Permutation(pat).str());
            CHECK(longs(e->F(Permutation(pat))) ==
                  oracle_series([&](const oracle::Perm& p) { return !oracle::contains(p, k3412) && !oracle::contains(p, pat); }, sgn));
            CHECK(longs(e->G(Permutation(pat))) ==
                  oracle_series([&](const oracle::Perm& p) { return !oracle::contains(p, k3412) && oracle::occurrences(p, pat) == 1; }, sgn));
            CHECK(longs(e->P(Permutation(pat))) ==
                  oracle_series([&](const oracle::Perm& p) { return oracle::occurrences(p, k3412) == 1 && !oracle::contains(p, pat); }, sgn));
        }
    }
}

TEST_CASE("property: random pattern pairs for F") {
    oracle::Gen g(41);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = g.permutation(g.uniform(2, 4)), b = g.permutation(g.uniform(2, 4));
        for (auto v : {Variant::Plus, Variant::Minus}) {
            const auto got = shared_engine(v, kN)->F({Permutation(a), Permutation(b)});
            const auto want = oracle_series(
                [&](const oracle::Perm& p) {
                    return !oracle::contains(p, k3412) && !oracle::contains(p, a) && !oracle::contains(p, b);
                },
                v == Variant::Minus);
            CHECK(longs(got) == want);
        }
    }
}

TEST_CASE("Q against the oracle") {
    auto e = shared_engine(Variant::Plus, kN);
    for (int k = 2; k <= 5; ++k) {
        const auto dk = oracle::decreasing(k);
        CHECK(longs(e->Q(k)) == oracle_series(
                                    [&](const oracle::Perm& p) {
                                        return oracle::occurrences(p, k3412) == 1 && oracle::occurrences(p, dk) == 1;
                                    },
                                    false));
    }
}

TEST_CASE("catalog examples") {
    CHECK(reals(closed_form({"F-[2k]", {1}}, 6)) == std::vector<long>(7, 1));
    CHECK(reals(closed_form({"F+[2k-1]", {2}}, 6)) == std::vector<long>{1, 1, 2, 3, 5, 8, 13});
    // x^4/(1-x-x^2)^2
    CHECK(reals(closed_form({"P+[2k+1]", {1}}, 8)) == std::vector<long>{0, 0, 0, 0, 1, 2, 5, 10, 20});
    CHECK_THROWS_AS(catalog_entry("no-such-id"), std::invalid_argument);
    CHECK_THROWS_AS(closed_form({"F-[2k]", {}}, 6), std::invalid_argument);
    for (const auto& e : catalog()) {
        CAPTURE(e.id);
        CHECK(!e.statement.empty());
        CHECK(!parameter_grid(e, 3, 6).empty());
    }
}

TEST_CASE("counting corollaries") {
    for (int n = 4; n <= 12; ++n)
        CHECK(reals(closed_form({"count-321", {}}, 12))[static_cast<std::size_t>(n)] ==
              ((n - 3) * oracle::fib(n - 1) + (n - 1) * oracle::fib(n - 3)) / 5);
    for (int n = 5; n <= 12; ++n)
        CHECK(reals(closed_form({"count-4321", {}}, 12))[static_cast<std::size_t>(n)] == (1L << (n - 5)) * (3 * n - 10));
    for (int n = 8; n <= 12; ++n)
        CHECK(reals(closed_form({"count-Q4321", {}}, 12))[static_cast<std::size_t>(n)] ==
              (3L * n * n - 23L * n + 38) * (1L << (n - 8)));
    const auto brute = oracle_series(
        [](const oracle::Perm& p) { return oracle::occurrences(p, k3412) == 1 && !oracle::contains(p, oracle::parse("321")); },
        false);
    const auto printed = reals(closed_form({"count-321", {}}, kN));
    for (int n = 4; n <= kN; ++n) CHECK(printed[static_cast<std::size_t>(n)] == brute[static_cast<std::size_t>(n)]);
}

TEST_CASE("r-occurrence bookkeeping") {
    CHECK(binom_conv(5, 0) == 1);
    CHECK(binom_conv(-1, 0) == 1);
    CHECK(binom_conv(-1, 1) == 0);
    CHECK(binom_conv(5, 2) == 10);
    CHECK(binom_conv(2, 3) == 0);
    CHECK(admissible_b(1, 1, Parity::Even) == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(r_occurrence_closed_form(0, 1, Parity::Even, ROccurrenceForm::Derived), std::invalid_argument);
    CHECK_THROWS_AS(r_occurrence_closed_form(1, 1, Parity::Even, ROccurrenceForm::Derived, 9), std::invalid_argument);
    for (int r = 1; r <= 3; ++r)
        for (int b : admissible_b(r, 1, Parity::Even))
            for (const auto& c : compositions(r, 1, b, Parity::Even)) {
                CHECK(static_cast<int>(c.d.size()) == b + 1);
                CHECK(static_cast<int>(c.l.size()) == b + 1);
            }
}

TEST_CASE("property: derived r-occurrence forms against the oracle") {
    for (auto parity : {Parity::Even, Parity::Odd})
        for (int k = 1; k <= 2; ++k) {
            const int m = parity == Parity::Even ? 2 * k : 2 * k + 1;
            for (int r = 1; r <= 3; ++r) {
                const auto want = oracle_series(
                    [&](const oracle::Perm& p) {
                        return !oracle::contains(p, k3412) && oracle::occurrences(p, oracle::decreasing(m)) == r;
                    },
                    true);
                for (int b : admissible_b(r, k, parity)) {
                    CAPTURE(r);
                    CAPTURE(k);
                    CAPTURE(b);
                    CHECK(reals(r_occurrence_gf(r, k, parity, kN, ROccurrenceForm::Derived, b)) == want);
                }
            }
        }
}
