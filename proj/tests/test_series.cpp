#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invol/enumerate/enumerate.hpp"
#include "invol/series/bivariate.hpp"
#include "invol/series/continued_fraction.hpp"
#include "invol/series/gaussian.hpp"
#include "invol/series/polynomial.hpp"
#include "invol/series/rational.hpp"
#include "invol/series/truncated_series.hpp"
#include "oracles.hpp"

using namespace invol;

namespace {

std::vector<long> reals(const PowerSeries& s) {
    std::vector<long> out;
    for (const auto& c : s.coeffs()) {
        REQUIRE(c.is_real());
        out.push_back(c.re.get_si());
    }
    return out;
}

BivariateTable signed_table(Statistic s, int N) {
    RestrictionSpec spec;
    spec.avoid = {Permutation::parse("3412")};
    return stat_gf(spec, s, N, true);
}

IntSeries ints(std::vector<long> v, int N) {
    std::vector<mpz_class> c;
    for (long x : v) c.emplace_back(x);
    return IntSeries(c, N);
}

}  // namespace

TEST_CASE("gaussian integers") {
    const GaussianInt i = GaussianInt::I();
    CHECK(i * i == GaussianInt(-1L));
    CHECK(i_pow(-1) == GaussianInt(0L, -1L));
    CHECK(i_pow(6) == GaussianInt(-1L));
    GaussianInt q;
    CHECK(exact_divide(GaussianInt(2L, 2L), GaussianInt(1L, 1L), q));
    CHECK(q == GaussianInt(2L));
    CHECK_FALSE(exact_divide(GaussianInt(1L), GaussianInt(2L), q));
    CHECK(gaussian_from_json(to_json(GaussianInt(3L, -4L))) == GaussianInt(3L, -4L));
}

TEST_CASE("rational expansions") {
    CHECK(reals(RationalFunction(Polynomial{1}, Polynomial{1, -1}).expand(6)) == std::vector<long>(7, 1));
    CHECK(reals(RationalFunction(Polynomial{1}, Polynomial{1, -1, -1}).expand(5)) == std::vector<long>{1, 1, 2, 3, 5, 8});
    CHECK(reals(RationalFunction(Polynomial{1, 1}, Polynomial{1, 0, 1}).expand(5)) ==
          std::vector<long>{1, 1, -1, -1, 1, 1});
    CHECK_THROWS_AS(RationalFunction(Polynomial{1}, Polynomial{2, 1}).expand(3), NonInvertible);
}

TEST_CASE("laurent fractions clear powers of x") {
    const LaurentFraction y = LaurentFraction(LaurentPolynomial::monomial(1L, -1));
    CHECK_THROWS_AS(y.to_rational(), TranscriptionError);
    const LaurentFraction z = y * LaurentFraction(LaurentPolynomial(Polynomial{0, 1, 1}));
    CHECK(z.to_rational() == RationalFunction(Polynomial{1, 1}));
    const LaurentFraction w = LaurentFraction(LaurentPolynomial(Polynomial{1})) / (y - LaurentFraction(1L));
    CHECK(w.to_rational() == RationalFunction(Polynomial{0, 1}, Polynomial{1, -1}));
}

TEST_CASE("series square roots") {
    CHECK(IntSeries::one(5).sqrt() == IntSeries::one(5));
    CHECK(ints({1, -2, 1}, 6).sqrt() == ints({1, -1}, 6));
    // (1 - x - sqrt(1 - 2x - 3x^2))/(2x^2) gives the Motzkin numbers.
    const int N = 10;
    const IntSeries root = ints({1, -2, -3}, N + 2).sqrt();
    const IntSeries num = ints({1, -1}, N + 2) - root;
    const IntSeries m = num.divide_x(2) / IntSeries::constant(2, N);
    const auto want = oracle::motzkin(N);
    for (int n = 0; n <= N; ++n) CHECK(m[n] == want[static_cast<std::size_t>(n)]);
    CHECK_THROWS_AS(ints({2, 1}, 4).sqrt(), NonInvertible);
}

TEST_CASE("continued fraction truncation") {
    const int N = 10;
    auto motzkin_cf = [&](int join) {
        CFSpec<mpz_class> spec;
        spec.depth = N + 1;
        spec.join = join;
        spec.level = [](int level, int order) {
            IntSeries a = level == 0 ? IntSeries::one(order) : IntSeries::monomial(1, 2, order);
            return std::pair{a, ints({1, -1}, order)};
        };
        return cf_truncate(spec, N);
    };
    const auto m = motzkin_cf(-1);
    const auto want = oracle::motzkin(N);
    for (int n = 0; n <= N; ++n) CHECK(m[n] == want[static_cast<std::size_t>(n)]);
    const auto s = motzkin_cf(1);
    CHECK(s[0] == 1);
    CHECK(s[1] == 1);
    CHECK(s[2] == 0);
    CHECK(s[3] == -2);
    CFSpec<mpz_class> one;
    one.level = [](int, int order) { return std::pair{IntSeries::one(order), ints({1, -1}, order)}; };
    CHECK(cf_truncate(one, 5) == ints({1, 1, 1, 1, 1, 1}, 5));
    one.depth = 0;
    CHECK_THROWS_AS(cf_truncate(one, 5), std::invalid_argument);
}

TEST_CASE("bivariate tables") {
    BivariateTable t{{1}, {0, 1}, {2, 0, 3}};
    const auto s = from_table(t, 4);
    CHECK(tables_equal(to_table(s, 4), t, 2, 4));
    BivariateTable one{{1}};
    CHECK(tables_equal(multiply_tables(t, one, 2, 4), t, 2, 4));
}

TEST_CASE("statistic fractions match the enumeration oracle") {
    const int N = 10, S = 10;
    for (auto st : {Statistic::Inv, Statistic::Lrmax, Statistic::Rlmin, Statistic::Fix}) {
        CAPTURE(statistic_name(st));
        const auto cf = involution_cf(statistic_specialization(st), 1, stable_cf_depth(N), N, S);
        CHECK(tables_equal(to_table(cf, S), signed_table(st, N), N, S));
    }
}

TEST_CASE("closed forms of the lrmax and fix fractions") {
    const int N = 10, S = 10;
    CHECK(tables_equal(to_table(fix_closed_form(SqrtBranch::Plus, N, S), S), signed_table(Statistic::Fix, N), N, S));
    CHECK_THROWS_AS(fix_closed_form(SqrtBranch::Minus, N, S), NonInvertible);
    CHECK_THROWS_AS(lrmax_closed_form(SqrtBranch::Minus, N, S), NonInvertible);
    CHECK_FALSE(
        tables_equal(to_table(lrmax_closed_form(SqrtBranch::Plus, N, S), S), signed_table(Statistic::Lrmax, N), N, S));
    CHECK(tables_equal(to_table(lrmax_closed_form_corrected(N, S), S), signed_table(Statistic::Lrmax, N), N, S));
}

TEST_CASE("property: series arithmetic identities") {
    oracle::Gen g(31);
    auto random_series = [&](int N, bool unit) {
        IntSeries s(N);
        for (int n = 0; n <= N; ++n) s[n] = g.uniform(-5, 5);
        if (unit) s[0] = g.uniform(0, 1) ? 1 : -1;
        return s;
    };
    for (int trial = 0; trial < 100; ++trial) {
        const int N = g.uniform(0, 12);
        const IntSeries a = random_series(N, false), b = random_series(N, true);
        CHECK((a * b) / b == a);
        CHECK((a + b) - b == a);
        CHECK(a * IntSeries::one(N) == a);
        IntSeries sq = random_series(N, false);
        sq[0] = 1;
        CHECK((sq * sq).sqrt() == sq);
    }
}

TEST_CASE("property: polynomial ring axioms over Z[i]") {
    oracle::Gen g(32);
    auto random_poly = [&] {
        std::vector<GaussianInt> c;
        const int d = g.uniform(0, 5);
        for (int i = 0; i <= d; ++i) c.emplace_back(static_cast<long>(g.uniform(-3, 3)), static_cast<long>(g.uniform(-3, 3)));
        return Polynomial(c);
    };
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial a = random_poly(), b = random_poly(), c = random_poly();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(polynomial_from_json(to_json(a)) == a);
        CHECK(pow(a, 2) == a * a);
    }
}
