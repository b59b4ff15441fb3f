#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invol/chebyshev/chebyshev.hpp"
#include "oracles.hpp"

using namespace invol;

TEST_CASE("U examples") {
    CHECK(chebU(0).coeffs == Polynomial{1});
    CHECK(chebU(-1).coeffs.is_zero());
    CHECK(chebU(-2).coeffs == Polynomial{-1});
    CHECK(chebU(2).coeffs == Polynomial({-1, 0, 4}));
    CHECK(chebU(3).coeffs == Polynomial({0, -4, 0, 8}));
}

TEST_CASE("normalized V and W") {
    CHECK(vtilde(0) == Polynomial{1});
    CHECK(vtilde(1) == Polynomial({1, -1}));
    CHECK(wtilde(1) == Polynomial({1, -1}));
    CHECK(vtilde(2) == Polynomial({1, -2}));
    CHECK(wtilde(2) == Polynomial({1, -2, 2}));
    CHECK(vtilde(-1).is_zero());
    CHECK_THROWS_AS(vtilde(-2), std::invalid_argument);
}

TEST_CASE("v polynomials and Y") {
    CHECK(v_poly(0) == Polynomial{1});
    CHECK(v_poly(1) == Polynomial({1, 1}));
    CHECK(v_poly(2) == Polynomial({1, 1, -1}));
    CHECK(y_combination(1) == RationalFunction(Polynomial{1}, Polynomial::x()));
}

TEST_CASE("summation identity") {
    CHECK(chebysum_check(0, 0, 1));
    for (int l = -1; l <= 4; ++l)
        for (int w = 0; w <= 4; ++w) CHECK(chebysum_check(-1, l, w));
    for (int k = 0; k <= 10; ++k)
        for (int l = 0; l <= 10; ++l)
            for (int w = 0; w <= 10; ++w) CHECK(chebysum_check(k, l, w));
}

TEST_CASE("property: U agrees with the integer recurrence oracle") {
    for (int n = -1; n <= 12; ++n)
        for (long t = -3; t <= 3; ++t) {
            const GaussianRational v = chebU(n).coeffs.eval(GaussianRational(mpq_class(t)));
            CHECK(v == GaussianRational(mpq_class(oracle::chebyshev_u(n, t))));
        }
}

TEST_CASE("property: normalizations at sample points") {
    // x0 = 1/(2t+1) puts the argument of U_n at t for V; x0 = 1/(1+2it) does the same for W.
    for (int n = 0; n <= 10; ++n)
        for (long t = 1; t <= 4; ++t) {
            const GaussianRational xv(mpq_class(1, 2 * t + 1));
            const GaussianRational lhs = vtilde(n).eval(xv) * pow(GaussianRational(mpq_class(2 * t + 1)), n);
            CHECK(lhs == GaussianRational(mpq_class(oracle::chebyshev_u(n, t))));

            const GaussianRational one_plus(mpq_class(1), mpq_class(2 * t));
            const GaussianRational xw = GaussianRational(mpq_class(1)) / one_plus;
            const GaussianRational w = wtilde(n).eval(xw) * pow(one_plus, n) /
                                       pow(GaussianRational(mpq_class(0), mpq_class(1)), n);
            CHECK(w == GaussianRational(mpq_class(oracle::chebyshev_u(n, t))));
            CHECK(vtilde_sample_check(n, xv));
            CHECK(wtilde_sample_check(n, xw));
        }
}

TEST_CASE("property: Laurent V and W match their normalized forms") {
    for (int n = 0; n <= 10; ++n) {
        CHECK((chebV(n) * LaurentPolynomial::monomial(1L, n)).to_polynomial() == vtilde(n));
        CHECK((chebW(n) * LaurentPolynomial::monomial(i_pow(n), n)).to_polynomial() == wtilde(n));
    }
}
