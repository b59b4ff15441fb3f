#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "invol/verify/verify.hpp"

using namespace invol;

namespace {

PowerSeries series(std::vector<long> v) {
    std::vector<GaussianInt> c;
    for (long x : v) c.emplace_back(x);
    return PowerSeries(c, static_cast<int>(v.size()) - 1);
}

}  // namespace

TEST_CASE("judge") {
    AuditReport r;
    judge(r, series({1, 2, 3}), series({1, 2, 3}));
    CHECK(r.verdict == Verdict::Match);
    CHECK(r.sign == 1);
    CHECK_FALSE(r.first_difference);

    judge(r, series({1, 2, 3}), series({-1, -2, -3}));
    CHECK(r.verdict == Verdict::SignFlipMatch);
    CHECK(r.sign == -1);

    judge(r, series({1, 2, 3}), series({-1, -2, -3}), 0, false);
    CHECK(r.verdict == Verdict::Mismatch);

    judge(r, series({1, 2, 3}), series({1, 5, 3}));
    CHECK(r.verdict == Verdict::Mismatch);
    REQUIRE(r.first_difference);
    CHECK(r.first_difference->n == 1);
    CHECK(r.first_difference->oracle == "2");
    CHECK(r.first_difference->formula == "5");

    judge(r, series({0, 2, 3}), series({7, 2, 3}), 1);
    CHECK(r.verdict == Verdict::Match);

    CHECK(parse_verdict(verdict_name(Verdict::SignFlipMatch)) == Verdict::SignFlipMatch);
    CHECK_THROWS_AS(parse_verdict("maybe"), std::invalid_argument);
}

TEST_CASE("report serialization round trips") {
    const auto reports = audit("F-[2k]", {2}, 12);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].verdict == Verdict::Match);
    CHECK(audit_report_from_json(to_json(reports[0])) == reports[0]);
    CHECK(markdown_table(reports).find("F-[2k]") != std::string::npos);

    const auto c = compare_orderings(Family::P, SymmetryVariant::Plus, {{2, 1, 1}, {1, 2, 1}}, 8);
    CHECK_FALSE(c.symmetric);
    REQUIRE(c.first_difference);
    CHECK(c.first_difference->n == 7);
    CHECK(conjecture_case_from_json(to_json(c)) == c);
}

TEST_CASE("catalog grid") {
    const auto corrected = audit_catalog_grid(24, 5, 8, FormChoice::Corrected);
    CHECK(corrected.size() == 329);
    std::set<std::string> failing;
    for (const auto& r : corrected)
        if (r.verdict != Verdict::Match) failing.insert(r.subject);
    CHECK(failing == std::set<std::string>{"G+1-pi-1", "G-1-pi-1", "P+1-pi-1", "P-1-pi-1"});

    const auto printed = audit_catalog_grid(24, 5, 8, FormChoice::Printed);
    int match = 0, flip = 0;
    for (const auto& r : printed) {
        match += r.verdict == Verdict::Match;
        flip += r.verdict == Verdict::SignFlipMatch;
    }
    CHECK(match == 184);
    CHECK(flip == 5);
}

TEST_CASE("continued fraction audits") {
    for (auto s : {Statistic::Inv, Statistic::Lrmax, Statistic::Rlmin, Statistic::Fix})
        CHECK(audit_cf(s, 10, 10).verdict == Verdict::Match);
    const auto closed = audit_cf_closed_forms(10, 10);
    int fix_matches = 0, lrmax_printed_matches = 0, corrected_matches = 0;
    for (const auto& r : closed) {
        if (r.subject == "cf-closed-fix" && r.verdict == Verdict::Match) {
            ++fix_matches;
            CHECK(r.branch == "+sqrt");
        }
        if (r.subject == "cf-closed-lrmax" && r.form != "corrected") lrmax_printed_matches += r.verdict == Verdict::Match;
        if (r.subject == "cf-closed-lrmax" && r.form == "corrected") corrected_matches += r.verdict == Verdict::Match;
    }
    CHECK(fix_matches == 1);
    CHECK(lrmax_printed_matches == 0);
    CHECK(corrected_matches == 1);
}

TEST_CASE("r-occurrence sign fits") {
    const auto even_printed = audit_r_occurrence(Parity::Even, ROccurrenceForm::Printed, 3, 2, 12);
    CHECK(even_printed.fitted_sign == 0);
    CHECK(even_printed.magnitudes_match);
    const auto odd_printed = audit_r_occurrence(Parity::Odd, ROccurrenceForm::Printed, 3, 2, 12);
    CHECK_FALSE(odd_printed.passed());
    for (auto p : {Parity::Even, Parity::Odd}) {
        const auto d = audit_r_occurrence(p, ROccurrenceForm::Derived, 3, 2, 12);
        CHECK(d.passed());
        CHECK(d.fitted_sign == 1);
    }
}

TEST_CASE("determinant audits") {
    for (int k = 0; k <= 6; ++k)
        for (const auto& r : audit_determinants(k)) {
            CAPTURE(r.subject);
            CHECK((r.verdict == Verdict::Match) == (r.subject != "det-Buk-printed"));
        }
    for (int k = 0; k <= 4; ++k)
        for (const auto& r : audit_buk_paths(k, 12)) CHECK(r.verdict == Verdict::Match);
}

TEST_CASE("equinumerosity") {
    const auto checks = equinumerosity_checks(12, 4);
    for (const auto& r : checks) {
        CAPTURE(r.subject);
        CAPTURE(r.params.dump());
        if (r.subject == "equinumerosity-[2k+1]") CHECK(r.verdict == Verdict::Match);
    }
    // I_4(3412,4321) has 2 even and 6 odd members; I_4(3412,4231) has 3 and 5.
    bool even_half_fails = false;
    for (const auto& r : checks)
        if (r.subject == "equinumerosity-[2k]" && r.params["k"] == 2) even_half_fails = r.verdict != Verdict::Match;
    CHECK(even_half_fails);
}

TEST_CASE("conjecture sweeps") {
    for (auto v : {SymmetryVariant::Minus, SymmetryVariant::Even, SymmetryVariant::Odd}) {
        const auto cases = conjecture_layered_symmetry(v, 3, 10, 16, 6);
        CHECK_FALSE(cases.empty());
        for (const auto& c : cases) CHECK(c.symmetric);
    }
    const auto minus = compare_orderings(Family::P, SymmetryVariant::Minus, {{2, 1, 1}, {1, 2, 1}}, 8);
    REQUIRE(minus.first_difference);
    CHECK(minus.first_difference->n == 6);
    CHECK(layered_series(Family::F, SymmetryVariant::Plus, {2, 1}, 8) ==
          shared_engine(Variant::Plus, 8)->F(Permutation::parse("213")));
    CHECK_THROWS_AS(parse_symmetry_variant("sideways"), std::invalid_argument);
}

TEST_CASE("dispatch") {
    const auto subjects = audit_subjects();
    CHECK(std::find(subjects.begin(), subjects.end(), "det") != subjects.end());
    CHECK_THROWS_AS(audit("no-such-subject", {}, 12), std::invalid_argument);
    CHECK(audit("det", {3}, 12).size() == 3);
}
