#pragma once

#include <string>

#include "invol/series/polynomial.hpp"

namespace invol {

// x^shift * p with p(0) != 0 unless p = 0 (then shift = 0).
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    LaurentPolynomial(Polynomial p, int shift = 0);
    LaurentPolynomial(long c) : LaurentPolynomial(Polynomial(c)) {}

    static LaurentPolynomial monomial(const GaussianInt& c, int exponent);

    int shift() const { return shift_; }
    const Polynomial& body() const { return p_; }
    bool is_zero() const { return p_.is_zero(); }
    // Lowest exponent present.
    int low_degree() const { return p_.is_zero() ? Polynomial::kDegreeZero : shift_; }
    // The polynomial it equals; throws std::domain_error on a negative power.
    Polynomial to_polynomial() const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return *this += -o; }
    LaurentPolynomial& operator*=(const LaurentPolynomial& o);
    LaurentPolynomial operator-() const { return {-p_, shift_}; }
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.shift_ == b.shift_ && a.p_ == b.p_;
    }

    std::string str() const;

private:
    void normalize();
    Polynomial p_;
    int shift_ = 0;
};

LaurentPolynomial pow(const LaurentPolynomial& p, unsigned e);

}  // namespace invol
