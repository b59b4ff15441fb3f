#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "invol/series/laurent.hpp"
#include "invol/series/truncated_series.hpp"

namespace invol {

// A closed form whose powers of x do not cancel into a power series.
class TranscriptionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// num/den over Z[i][x]; den != 0. No gcd reduction is attempted.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1L) {}
    RationalFunction(Polynomial num) : num_(std::move(num)), den_(1L) {}
    RationalFunction(long c) : RationalFunction(Polynomial(c)) {}
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool expandable() const { return den_.coeff(0).is_unit(); }
    // Throws NonInvertible unless den(0) is a unit of Z[i].
    PowerSeries expand(int N) const;
    GaussianRational eval(const GaussianRational& x0) const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    RationalFunction operator-() const { return {-num_, den_}; }
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    // Equality as functions: cross-multiplication.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    std::string str() const;

private:
    Polynomial num_;
    Polynomial den_;
};

RationalFunction pow(const RationalFunction& r, unsigned e);
nlohmann::json to_json(const RationalFunction& r);

// Quotient of Laurent polynomials; the working form for Chebyshev closed forms.
class LaurentFraction {
public:
    LaurentFraction() : num_(), den_(1L) {}
    LaurentFraction(LaurentPolynomial num) : num_(std::move(num)), den_(1L) {}
    LaurentFraction(long c) : LaurentFraction(LaurentPolynomial(c)) {}
    LaurentFraction(LaurentPolynomial num, LaurentPolynomial den);
    LaurentFraction(const RationalFunction& r) : LaurentFraction(r.num(), r.den()) {}

    const LaurentPolynomial& num() const { return num_; }
    const LaurentPolynomial& den() const { return den_; }

    // Clears the powers of x; throws TranscriptionError when x stays in the denominator.
    RationalFunction to_rational() const;

    LaurentFraction& operator+=(const LaurentFraction& o);
    LaurentFraction& operator-=(const LaurentFraction& o);
    LaurentFraction& operator*=(const LaurentFraction& o);
    LaurentFraction& operator/=(const LaurentFraction& o);
    LaurentFraction operator-() const { return {-num_, den_}; }
    friend LaurentFraction operator+(LaurentFraction a, const LaurentFraction& b) { return a += b; }
    friend LaurentFraction operator-(LaurentFraction a, const LaurentFraction& b) { return a -= b; }
    friend LaurentFraction operator*(LaurentFraction a, const LaurentFraction& b) { return a *= b; }
    friend LaurentFraction operator/(LaurentFraction a, const LaurentFraction& b) { return a /= b; }

private:
    LaurentPolynomial num_;
    LaurentPolynomial den_;
};

LaurentFraction pow(const LaurentFraction& r, unsigned e);

}  // namespace invol
