#pragma once

#include <climits>
#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

#include "invol/series/gaussian.hpp"

namespace invol {

// Univariate polynomial over Z[i], ascending coefficients, trailing zeros stripped.
class Polynomial {
public:
    static constexpr int kDegreeZero = INT_MIN;

    Polynomial() = default;
    Polynomial(const GaussianInt& c);
    Polynomial(long c) : Polynomial(GaussianInt(c)) {}
    explicit Polynomial(std::vector<GaussianInt> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial x() { return monomial(1, 1); }
    static Polynomial monomial(const GaussianInt& c, int degree);

    int degree() const { return c_.empty() ? kDegreeZero : static_cast<int>(c_.size()) - 1; }
    // Lowest exponent with a nonzero coefficient; kDegreeZero for the zero polynomial.
    int valuation() const;
    bool is_zero() const { return c_.empty(); }
    bool is_real() const;
    const std::vector<GaussianInt>& coeffs() const { return c_; }
    GaussianInt coeff(int d) const;

    Polynomial shifted(int k) const;  // multiply by x^k, k >= 0
    Polynomial conj() const;
    GaussianRational eval(const GaussianRational& x0) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial operator-() const;
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    std::string str() const;

private:
    void normalize();
    std::vector<GaussianInt> c_;
};

Polynomial pow(const Polynomial& p, unsigned e);

nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace invol
