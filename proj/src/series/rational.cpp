#include "invol/series/rational.hpp"

namespace invol {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
}

PowerSeries RationalFunction::expand(int N) const {
    if (!expandable()) throw NonInvertible("denominator constant term " + den_.coeff(0).str() + " is not a unit");
    PowerSeries n(num_.coeffs().size() > static_cast<std::size_t>(N) + 1
                      ? std::vector<GaussianInt>(num_.coeffs().begin(), num_.coeffs().begin() + N + 1)
                      : num_.coeffs(),
                  N);
    PowerSeries d(den_.coeffs().size() > static_cast<std::size_t>(N) + 1
                      ? std::vector<GaussianInt>(den_.coeffs().begin(), den_.coeffs().begin() + N + 1)
                      : den_.coeffs(),
                  N);
    return n / d;
}

GaussianRational RationalFunction::eval(const GaussianRational& x0) const {
    GaussianRational d = den_.eval(x0);
    if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
    return num_.eval(x0) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.num_.is_zero()) throw std::domain_error("division by the zero rational function");
    num_ *= o.den_;
    den_ *= o.num_;
    return *this;
}

std::string RationalFunction::str() const {
    // Printed with den(0) = 1 when den(0) is a unit.
    Polynomial num = num_, den = den_;
    if (const GaussianInt u = den.coeff(0); u.is_unit()) {
        num *= Polynomial(u.conj());
        den *= Polynomial(u.conj());
    }
    if (den == Polynomial(1L)) return num.str();
    return "(" + num.str() + ")/(" + den.str() + ")";
}

RationalFunction pow(const RationalFunction& r, unsigned e) { return {pow(r.num(), e), pow(r.den(), e)}; }

nlohmann::json to_json(const RationalFunction& r) {
    return {{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

LaurentFraction::LaurentFraction(LaurentPolynomial num, LaurentPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("Laurent fraction with zero denominator");
}

RationalFunction LaurentFraction::to_rational() const {
    if (num_.is_zero()) return {};
    int s = num_.shift() - den_.shift();
    if (s < 0)
        throw TranscriptionError("x^" + std::to_string(-s) + " is left in the denominator after normalization");
    return {num_.body().shifted(s), den_.body()};
}

LaurentFraction& LaurentFraction::operator+=(const LaurentFraction& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    return *this;
}

LaurentFraction& LaurentFraction::operator-=(const LaurentFraction& o) { return *this += -o; }

LaurentFraction& LaurentFraction::operator*=(const LaurentFraction& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    return *this;
}

LaurentFraction& LaurentFraction::operator/=(const LaurentFraction& o) {
    if (o.num_.is_zero()) throw std::domain_error("division by the zero Laurent fraction");
    num_ *= o.den_;
    den_ *= o.num_;
    return *this;
}

LaurentFraction pow(const LaurentFraction& r, unsigned e) { return {pow(r.num(), e), pow(r.den(), e)}; }

}  // namespace invol
