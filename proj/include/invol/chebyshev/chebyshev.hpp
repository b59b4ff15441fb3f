#pragma once

#include "invol/series/laurent.hpp"
#include "invol/series/polynomial.hpp"
#include "invol/series/rational.hpp"

namespace invol {

// U_n in the abstract argument t. Negative n follows the recurrence backwards: U_{-1} = 0, U_{-2} = -1.
struct ChebU {
    int n = 0;
    Polynomial coeffs;
};

ChebU chebU(int n);

// Normalized V: vtilde(n) = x^n U_n((1-x)/(2x)). Requires n >= -1.
Polynomial vtilde(int n);
// Normalized W: wtilde(n) = (ix)^n U_n((1-x)/(2ix)). Requires n >= -1.
Polynomial wtilde(int n);

// V_n and W_n as Laurent polynomials in x, any integer n.
LaurentPolynomial chebV(int n);
LaurentPolynomial chebW(int n);

// U_{k+w} U_{l+w} - U_k U_l == U_{w-1} U_{k+l+w+1} as polynomials; k, l >= -1, w >= 0.
bool chebysum_check(int k, int l, int w);

// sum_{j<=k} (-1)^{C(j,2)} x^j.
Polynomial v_poly(int k);
// V_k + V_{k-1} with the power of x moved to the denominator.
RationalFunction y_combination(int k);

// vtilde(n)(x0) == x0^n U_n((1-x0)/(2x0)), checked in exact Q(i) arithmetic; x0 != 0.
bool vtilde_sample_check(int n, const GaussianRational& x0);
// wtilde(n)(x0) == (i x0)^n U_n((1-x0)/(2 i x0)).
bool wtilde_sample_check(int n, const GaussianRational& x0);

}  // namespace invol
