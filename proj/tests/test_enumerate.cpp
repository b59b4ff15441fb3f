#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invol/enumerate/enumerate.hpp"
#include "oracles.hpp"

using namespace invol;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

RestrictionSpec avoiding(std::initializer_list<const char*> pats) {
    RestrictionSpec s;
    for (const char* p : pats) s.avoid.push_back(P(p));
    return s;
}

std::vector<long> longs(const SeriesSample& s) {
    std::vector<long> out;
    for (const auto& c : s.coeffs) out.push_back(c.get_si());
    return out;
}

}  // namespace

TEST_CASE("involution counts") {
    const std::vector<long> expect{1, 1, 2, 4, 10, 26, 76};
    for (int n = 0; n <= 6; ++n) {
        CHECK(involution_count(n) == expect[static_cast<std::size_t>(n)]);
        CHECK(static_cast<long>(involutions(n).size()) == expect[static_cast<std::size_t>(n)]);
    }
    CHECK(involutions(2) == std::vector<Permutation>{P("12"), P("21")});
    for (int n = 7; n <= 9; ++n) CHECK(involution_count(n) == static_cast<long>(oracle::involutions(n).size()));
}

TEST_CASE("count_series examples") {
    CHECK(longs(count_series(avoiding({"3412"}), 7, false)) == std::vector<long>{1, 1, 2, 4, 9, 21, 51, 127});
    auto s = longs(count_series(avoiding({"3412"}), 3, true));
    CHECK(s == std::vector<long>{1, 1, 0, -2});
    for (long c : longs(count_series(avoiding({"3412", "21"}), 9, false))) CHECK(c == 1);
}

TEST_CASE("cap") {
    CHECK_THROWS_AS(count_series(avoiding({"3412"}), 15, false), CapExceeded);
    CHECK_NOTHROW(count_series(avoiding({"3412", "21"}), 15, false, 15));
    CHECK_THROWS_AS(involutions(16), CapExceeded);
}

TEST_CASE("spec validation") {
    RestrictionSpec bad;
    bad.avoid = {P("21")};
    bad.exactly_once = {P("21")};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    RestrictionSpec empty;
    empty.avoid = {P("")};
    CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
}

TEST_CASE("stat_gf examples") {
    const auto fix = stat_gf(avoiding({"3412"}), Statistic::Fix, 4, false);
    CHECK(fix[1][1] == 1);
    const auto inv = stat_gf(avoiding({"3412"}), Statistic::Inv, 4, true);
    CHECK(inv[2][0] == 1);
    CHECK(inv[2][1] == -1);
    CHECK(stat_gf(avoiding({"3412"}), Statistic::Lrmax, 9, true) ==
          stat_gf(avoiding({"3412"}), Statistic::Rlmin, 9, true));
}

TEST_CASE("occurrence_series examples") {
    const auto u = occurrence_series(P("21"), 1, 9, false);
    for (int n = 2; n <= 9; ++n) CHECK(u.coeffs[static_cast<std::size_t>(n)] == n - 1);
    CHECK(occurrence_series(P("21"), 1, 3, true).coeffs[3] == -2);
    CHECK(occurrence_series(P("4321"), 0, 12, false).coeffs == count_series(avoiding({"3412", "4321"}), 12, false).coeffs);
}

TEST_CASE("serialization") {
    const auto s = count_series(avoiding({"3412"}), 4, false);
    const auto j = to_json(s);
    CHECK(j["coeffs"] == nlohmann::json::array({1, 1, 2, 4, 9}));
    CHECK(j["signed"] == false);
    CHECK(to_csv(s) == "n,coeff\n0,1\n1,1\n2,2\n3,4\n4,9\n");
}

TEST_CASE("property: random avoidance sets agree with the filter-all-of-S_n oracle") {
    oracle::Gen g(21);
    for (int trial = 0; trial < 25; ++trial) {
        RestrictionSpec spec;
        std::vector<oracle::Perm> pats;
        const int m = g.uniform(1, 3);
        for (int i = 0; i < m; ++i) {
            auto p = g.permutation(g.uniform(2, 4));
            pats.push_back(p);
            spec.avoid.push_back(Permutation(p));
        }
        const bool sgn = g.uniform(0, 1) == 1;
        CHECK(longs(count_series(spec, 8, sgn)) == oracle::count(pats, 8, sgn));
    }
}

TEST_CASE("property: OpenMP and serial kernels agree") {
    oracle::Gen g(22);
    for (int trial = 0; trial < 10; ++trial) {
        RestrictionSpec spec;
        spec.avoid = {P("3412"), Permutation(g.permutation(g.uniform(3, 5)))};
        const bool sgn = trial % 2 == 0;
        CHECK(count_series(spec, 11, sgn).coeffs == count_series_serial(spec, 11, sgn).coeffs);
    }
}

TEST_CASE("property: exactly-once and exactly-r agree with counted occurrences") {
    oracle::Gen g(23);
    for (int trial = 0; trial < 8; ++trial) {
        const auto pat = g.permutation(g.uniform(2, 3));
        const int r = g.uniform(0, 2);
        const auto s = occurrence_series(Permutation(pat), r, 8, true);
        for (int n = 0; n <= 8; ++n) {
            long want = 0;
            for (const auto& p : oracle::involutions(n))
                if (!oracle::contains(p, oracle::parse("3412")) && oracle::occurrences(p, pat) == r) want += oracle::sign(p);
            CHECK(s.coeffs[static_cast<std::size_t>(n)] == want);
        }
        RestrictionSpec once;
        once.exactly_once = {Permutation(pat)};
        const auto o = count_series(once, 7, false);
        for (int n = 0; n <= 7; ++n) {
            long want = 0;
            for (const auto& p : oracle::involutions(n)) want += oracle::occurrences(p, pat) == 1;
            CHECK(o.coeffs[static_cast<std::size_t>(n)] == want);
        }
    }
}
