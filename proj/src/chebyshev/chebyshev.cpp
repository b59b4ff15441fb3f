#include "invol/chebyshev/chebyshev.hpp"

#include <stdexcept>

namespace invol {

ChebU chebU(int n) {
    const Polynomial two_t = Polynomial::monomial(2, 1);
    if (n >= 0) {
        Polynomial prev(0L), cur(1L);  // U_{-1}, U_0
        for (int i = 1; i <= n; ++i) {
            Polynomial next = two_t * cur - prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        return {n, cur};
    }
    // U_{-m-2} = -U_m.
    if (n == -1) return {n, Polynomial()};
    return {n, -chebU(-n - 2).coeffs};
}

namespace {

// p_n = (1-x) p_{n-1} + c x^2 p_{n-2}, p_0 = 1, p_{-1} = 0.
Polynomial three_term(int n, long c) {
    if (n < -1) throw std::invalid_argument("normalized Chebyshev index must be >= -1");
    if (n == -1) return {};
    const Polynomial a{1, -1};
    const Polynomial b = Polynomial::monomial(c, 2);
    Polynomial prev(0L), cur(1L);
    for (int i = 1; i <= n; ++i) {
        Polynomial next = a * cur + b * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

GaussianRational eval_u(int n, const GaussianRational& t) { return chebU(n).coeffs.eval(t); }

GaussianRational rpow(const GaussianRational& b, int e) {
    if (e >= 0) return pow(b, static_cast<unsigned>(e));
    return GaussianRational(mpq_class(1)) / pow(b, static_cast<unsigned>(-e));
}

}  // namespace

Polynomial vtilde(int n) { return three_term(n, -1); }
Polynomial wtilde(int n) { return three_term(n, 1); }

LaurentPolynomial chebV(int n) {
    if (n >= -1) return {vtilde(n), -n};
    return -chebV(-n - 2);
}

LaurentPolynomial chebW(int n) {
    if (n >= -1) return {wtilde(n) * Polynomial(i_pow(-n)), -n};
    return -chebW(-n - 2);
}

bool chebysum_check(int k, int l, int w) {
    if (k < -1 || l < -1 || w < 0) throw std::invalid_argument("chebysum needs k, l >= -1 and w >= 0");
    Polynomial lhs = chebU(k + w).coeffs * chebU(l + w).coeffs - chebU(k).coeffs * chebU(l).coeffs;
    Polynomial rhs = chebU(w - 1).coeffs * chebU(k + l + w + 1).coeffs;
    return lhs == rhs;
}

Polynomial v_poly(int k) {
    if (k < 0) throw std::invalid_argument("v_k needs k >= 0");
    std::vector<GaussianInt> c;
    for (int j = 0; j <= k; ++j) c.emplace_back((j * (j - 1) / 2) % 2 == 0 ? 1L : -1L);
    return Polynomial(std::move(c));
}

RationalFunction y_combination(int k) {
    if (k < 0) throw std::invalid_argument("Y_k needs k >= 0");
    return {vtilde(k) + vtilde(k - 1).shifted(1), Polynomial::monomial(1, k)};
}

bool vtilde_sample_check(int n, const GaussianRational& x0) {
    if (x0.is_zero()) throw std::invalid_argument("sample point must be nonzero");
    GaussianRational t = (GaussianRational(mpq_class(1)) - x0) / (GaussianRational(mpq_class(2)) * x0);
    return vtilde(n).eval(x0) == rpow(x0, n) * eval_u(n, t);
}

bool wtilde_sample_check(int n, const GaussianRational& x0) {
    if (x0.is_zero()) throw std::invalid_argument("sample point must be nonzero");
    GaussianRational ix = GaussianRational(GaussianInt::I()) * x0;
    GaussianRational t = (GaussianRational(mpq_class(1)) - x0) / (GaussianRational(mpq_class(2)) * ix);
    return wtilde(n).eval(x0) == rpow(ix, n) * eval_u(n, t);
}

}  // namespace invol
