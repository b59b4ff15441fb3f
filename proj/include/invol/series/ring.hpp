#pragma once

#include <stdexcept>

#include <gmpxx.h>

#include "invol/series/gaussian.hpp"

namespace invol {

// Raised when a series division meets a constant term that does not divide exactly.
class NonInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Coefficient-ring hooks used by TruncatedSeries.
inline bool exact_div(const mpz_class& a, const mpz_class& b, mpz_class& q) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return false;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return true;
}
inline bool exact_div(const GaussianInt& a, const GaussianInt& b, GaussianInt& q) { return exact_divide(a, b, q); }

inline bool ring_is_zero(const mpz_class& a) { return a == 0; }
inline bool ring_is_zero(const GaussianInt& a) { return a.is_zero(); }

}  // namespace invol
