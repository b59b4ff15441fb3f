#pragma once

#include <climits>
#include <vector>

#include <gmpxx.h>

#include "invol/series/truncated_series.hpp"

namespace invol {

// Element of Z[q], optionally truncated after q^S. Constants are exact (S = kExact);
// a product keeps the smaller truncation.
class QPoly {
public:
    static constexpr int kExact = INT_MAX;

    QPoly() = default;
    QPoly(long c) : QPoly(mpz_class(c)) {}
    QPoly(const mpz_class& c, int S = kExact);
    QPoly(std::vector<mpz_class> coeffs, int S);

    // c * q^e.
    static QPoly monomial(const mpz_class& c, int e, int S = kExact);

    int truncation() const { return S_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    mpz_class coeff(int e) const;
    const std::vector<mpz_class>& coeffs() const { return c_; }

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
    // Equal through the smaller truncation.
    friend bool operator==(const QPoly& a, const QPoly& b);

private:
    void normalize();
    std::vector<mpz_class> c_;
    int S_ = kExact;
};

inline bool ring_is_zero(const QPoly& a) { return a.is_zero(); }
// Only division by an integer constant is supported; that is all x-series division needs here.
bool exact_div(const QPoly& a, const QPoly& b, QPoly& q);

using BivariateSeries = TruncatedSeries<QPoly>;
// Same alias as the enumeration oracle uses for statistic tables.
using BivariateTable = std::vector<std::vector<mpz_class>>;

// Coefficient table c[n][s] for n <= N, s <= S.
BivariateTable to_table(const BivariateSeries& s, int S);
BivariateSeries from_table(const BivariateTable& t, int S);
// Cellwise comparison over n <= N, s <= S; missing cells count as zero.
bool tables_equal(const BivariateTable& a, const BivariateTable& b, int N, int S);
BivariateTable multiply_tables(const BivariateTable& a, const BivariateTable& b, int N, int S);
BivariateTable add_tables(const BivariateTable& a, const BivariateTable& b, int N, int S);

}  // namespace invol
