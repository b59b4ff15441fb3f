#include "invol/series/laurent.hpp"

#include <stdexcept>

namespace invol {

LaurentPolynomial::LaurentPolynomial(Polynomial p, int shift) : p_(std::move(p)), shift_(shift) { normalize(); }

LaurentPolynomial LaurentPolynomial::monomial(const GaussianInt& c, int exponent) {
    return {Polynomial(c), exponent};
}

void LaurentPolynomial::normalize() {
    if (p_.is_zero()) {
        shift_ = 0;
        return;
    }
    int v = p_.valuation();
    if (v > 0) {
        p_ = Polynomial(std::vector<GaussianInt>(p_.coeffs().begin() + v, p_.coeffs().end()));
        shift_ += v;
    }
}

Polynomial LaurentPolynomial::to_polynomial() const {
    if (is_zero()) return {};
    if (shift_ < 0) throw std::domain_error("Laurent polynomial has a negative power of x");
    return p_.shifted(shift_);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int s = std::min(shift_, o.shift_);
    p_ = p_.shifted(shift_ - s) + o.p_.shifted(o.shift_ - s);
    shift_ = s;
    normalize();
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
    p_ *= o.p_;
    shift_ += o.shift_;
    normalize();
    return *this;
}

std::string LaurentPolynomial::str() const {
    if (shift_ == 0 || is_zero()) return p_.str();
    return "x^" + std::to_string(shift_) + "*(" + p_.str() + ")";
}

LaurentPolynomial pow(const LaurentPolynomial& p, unsigned e) {
    LaurentPolynomial r(1L), b = p;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return r;
}

}  // namespace invol
