#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invol/motzkin/motzkin.hpp"
#include "oracles.hpp"

using namespace invol;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }
MotzkinPath W(const char* s) { return MotzkinPath::parse(s); }

std::vector<long> reals(const PowerSeries& s) {
    std::vector<long> out;
    for (const auto& c : s.coeffs()) {
        REQUIRE(c.is_real());
        out.push_back(c.re.get_si());
    }
    return out;
}

const oracle::Perm k3412 = oracle::parse("3412");

}  // namespace

TEST_CASE("phi examples") {
    CHECK(phi(W("LLL")) == P("123"));
    CHECK(phi(W("UD")) == P("21"));
    CHECK(phi(W("UDL")) == P("213"));
    CHECK(phi(W("")) == Permutation());
    CHECK(phi_inverse(P("4321")) == W("UUDD"));
    CHECK_THROWS_AS(phi_inverse(P("3412")), std::invalid_argument);
    CHECK_THROWS_AS(phi_inverse(P("231")), std::invalid_argument);
    CHECK_THROWS_AS(W("DU"), std::invalid_argument);
    CHECK_THROWS_AS(W("UX"), std::invalid_argument);
}

TEST_CASE("motzkin counts") {
    const auto want = oracle::motzkin(12);
    for (int n = 0; n <= 12; ++n) {
        CHECK(motzkin_count(n) == want[static_cast<std::size_t>(n)]);
        if (n <= 9) CHECK(static_cast<long>(motzkin_paths(n).size()) == want[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("property: phi is a bijection onto I_n(3412) for n <= 9") {
    for (int n = 0; n <= 9; ++n) {
        std::vector<oracle::Perm> images;
        for (const auto& path : motzkin_paths(n)) {
            const Permutation pi = phi(path);
            CHECK(phi_inverse(pi) == path);
            images.push_back(pi.entries());
        }
        std::sort(images.begin(), images.end());
        std::vector<oracle::Perm> want;
        for (const auto& p : oracle::involutions(n))
            if (!oracle::contains(p, k3412)) want.push_back(p);
        CHECK(images == want);
    }
}

TEST_CASE("property: tau and sign transport on random paths") {
    oracle::Gen g(51);
    for (int trial = 0; trial < 200; ++trial) {
        const MotzkinPath path = W(g.motzkin_word(g.uniform(0, 10)).c_str());
        const auto pi = phi(path).entries();
        CAPTURE(path.str());
        CHECK(path_sign(path) == oracle::sign(pi));
        for (int k = 1; k <= 4; ++k) CHECK(tau_path(path, k) == oracle::occurrences(pi, oracle::decreasing(k)));
    }
}

TEST_CASE("bounded path examples") {
    const auto motz = oracle::motzkin(10);
    for (int k = 10; k <= 11; ++k) {
        const auto u = reals(bounded_paths({0, 0, k, BoundedVariant::M}, 10, false));
        for (int n = 0; n <= 10; ++n) CHECK(u[static_cast<std::size_t>(n)] == motz[static_cast<std::size_t>(n)]);
    }
    CHECK(reals(bounded_paths({0, 1, 2, BoundedVariant::M}, 4, false))[0] == 0);
    CHECK(reals(bounded_paths({0, 0, 0, BoundedVariant::N}, 4, false)) == std::vector<long>{1, 0, 0, 0, 0});
    CHECK(reals(bounded_paths({0, 0, 0, BoundedVariant::M}, 4, false)) == std::vector<long>{1, 1, 1, 1, 1});
    CHECK_THROWS_AS(bounded_paths({0, 3, 2, BoundedVariant::M}, 4, false), std::invalid_argument);
    CHECK(parse_bounded_variant("O") == BoundedVariant::O);
    CHECK_THROWS_AS(parse_bounded_variant("Z"), std::invalid_argument);
}

TEST_CASE("property: transfer matrices reproduce bounded path enumeration") {
    for (auto v : {BoundedVariant::M, BoundedVariant::N, BoundedVariant::O})
        for (int k = 0; k <= 4; ++k)
            for (int r = 0; r <= k; ++r)
                for (int s = 0; s <= k; ++s) {
                    const BoundedPathQuery q{r, s, k, v};
                    CAPTURE(bounded_variant_name(v));
                    CAPTURE(k);
                    CAPTURE(r);
                    CAPTURE(s);
                    CHECK(transfer_gf(q, 10) == bounded_paths(q, 10, true));
                }
}

TEST_CASE("determinant identities") {
    for (int k = 0; k <= 6; ++k) {
        for (const auto& c : det_identity_audit(k)) {
            CAPTURE(c.identity);
            CAPTURE(k);
            if (c.identity == "Buk-printed") CHECK_FALSE(c.equal);
            else CHECK(c.equal);
        }
    }
    CHECK(determinant(identity_minus(transfer_matrix(MatrixKind::A, 0))) == Polynomial({1, -1}));
}

TEST_CASE("property: path occurrence series against the S_n oracle") {
    for (int m = 1; m <= 5; ++m)
        for (int r = 0; r <= 3; ++r)
            for (bool sgn : {false, true}) {
                const auto got = path_occurrence_series(m, r, 8, sgn);
                for (int n = 0; n <= 8; ++n) {
                    long want = 0;
                    for (const auto& p : oracle::involutions(n))
                        if (!oracle::contains(p, k3412) && oracle::occurrences(p, oracle::decreasing(m)) == r)
                            want += sgn ? oracle::sign(p) : 1;
                    CAPTURE(m);
                    CAPTURE(r);
                    CAPTURE(n);
                    CHECK(got[n] == want);
                }
            }
}
