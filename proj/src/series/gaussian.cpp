#include "invol/series/gaussian.hpp"

#include <stdexcept>

namespace invol {

GaussianInt& GaussianInt::operator*=(const GaussianInt& o) {
    mpz_class r = re * o.re - im * o.im;
    mpz_class i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

std::string GaussianInt::str() const {
    if (im == 0) return re.get_str();
    std::string s;
    if (re != 0) s = re.get_str() + (im > 0 ? "+" : "-");
    else if (im < 0) s = "-";
    mpz_class a = abs(im);
    if (a != 1) s += a.get_str();
    return s + "i";
}

bool exact_divide(const GaussianInt& a, const GaussianInt& b, GaussianInt& q) {
    if (b.is_zero()) return false;
    if (b.im == 0) {
        if (!mpz_divisible_p(a.re.get_mpz_t(), b.re.get_mpz_t()) || !mpz_divisible_p(a.im.get_mpz_t(), b.re.get_mpz_t()))
            return false;
        q = {a.re / b.re, a.im / b.re};
        return true;
    }
    GaussianInt num = a * b.conj();
    mpz_class n = b.norm();
    if (!mpz_divisible_p(num.re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(num.im.get_mpz_t(), n.get_mpz_t()))
        return false;
    q = {num.re / n, num.im / n};
    return true;
}

GaussianInt i_pow(long e) {
    switch (((e % 4) + 4) % 4) {
        case 0: return {1L, 0L};
        case 1: return {0L, 1L};
        case 2: return {-1L, 0L};
        default: return {0L, -1L};
    }
}

GaussianInt pow(GaussianInt base, unsigned e) {
    GaussianInt r(1L);
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

nlohmann::json to_json(const GaussianInt& g) {
    return nlohmann::json::array({json_integer(g.re), json_integer(g.im)});
}

GaussianInt gaussian_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("Gaussian integer JSON must be [re, im]");
    return {integer_from_json(j[0]), integer_from_json(j[1])};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    mpq_class r = re * o.re - im * o.im;
    mpq_class i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    mpq_class n = o.re * o.re + o.im * o.im;
    if (n == 0) throw std::domain_error("division by zero in Q(i)");
    mpq_class r = (re * o.re + im * o.im) / n;
    mpq_class i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussianRational pow(GaussianRational base, unsigned e) {
    GaussianRational r(mpq_class(1));
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

}  // namespace invol
