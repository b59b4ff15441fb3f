#pragma once

#include <string>

#include <gmpxx.h>
#include <json.hpp>

#include "invol/core/json_integer.hpp"

namespace invol {

// Exact element of Z[i].
struct GaussianInt {
    mpz_class re = 0;
    mpz_class im = 0;

    GaussianInt() = default;
    GaussianInt(long r) : re(r) {}
    GaussianInt(long r, long i) : re(r), im(i) {}
    GaussianInt(mpz_class r, mpz_class i = 0) : re(std::move(r)), im(std::move(i)) {}

    static GaussianInt I() { return {0L, 1L}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_unit() const { return norm() == 1; }
    mpz_class norm() const { return re * re + im * im; }
    GaussianInt conj() const { return {re, -im}; }

    GaussianInt& operator+=(const GaussianInt& o) { re += o.re; im += o.im; return *this; }
    GaussianInt& operator-=(const GaussianInt& o) { re -= o.re; im -= o.im; return *this; }
    GaussianInt& operator*=(const GaussianInt& o);
    GaussianInt operator-() const { return {-re, -im}; }
    friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
    friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
    friend GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }
    friend bool operator==(const GaussianInt& a, const GaussianInt& b) { return a.re == b.re && a.im == b.im; }

    std::string str() const;
};

// q = a / b in Z[i]; false when b = 0 or the quotient is not a Gaussian integer.
bool exact_divide(const GaussianInt& a, const GaussianInt& b, GaussianInt& q);
// i^e for any integer e.
GaussianInt i_pow(long e);
GaussianInt pow(GaussianInt base, unsigned e);

nlohmann::json to_json(const GaussianInt& g);
GaussianInt gaussian_from_json(const nlohmann::json& j);

// Exact element of Q(i), used for sample-point evaluation.
struct GaussianRational {
    mpq_class re = 0;
    mpq_class im = 0;

    GaussianRational() = default;
    GaussianRational(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(const GaussianInt& g) : re(g.re), im(g.im) {}

    GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re == b.re && a.im == b.im; }
    bool is_zero() const { return re == 0 && im == 0; }
};

GaussianRational pow(GaussianRational base, unsigned e);

}  // namespace invol
