#include "invol/series/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace invol {

Polynomial::Polynomial(const GaussianInt& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Polynomial::Polynomial(std::vector<GaussianInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

Polynomial Polynomial::monomial(const GaussianInt& c, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
    std::vector<GaussianInt> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

void Polynomial::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int Polynomial::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return kDegreeZero;
}

bool Polynomial::is_real() const {
    return std::all_of(c_.begin(), c_.end(), [](const GaussianInt& g) { return g.is_real(); });
}

GaussianInt Polynomial::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(c_.size())) return {};
    return c_[static_cast<std::size_t>(d)];
}

Polynomial Polynomial::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("negative shift");
    if (is_zero()) return {};
    std::vector<GaussianInt> v(static_cast<std::size_t>(k));
    v.insert(v.end(), c_.begin(), c_.end());
    return Polynomial(std::move(v));
}

Polynomial Polynomial::conj() const {
    std::vector<GaussianInt> v;
    v.reserve(c_.size());
    for (const auto& g : c_) v.push_back(g.conj());
    return Polynomial(std::move(v));
}

GaussianRational Polynomial::eval(const GaussianRational& x0) const {
    GaussianRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + GaussianRational(*it);
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<GaussianInt> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    normalize();
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& g : r.c_) g = -g;
    return r;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].str();
        bool simple = c_[i].is_real() || c_[i].re == 0;
        if (!first) {
            if (simple && cs[0] == '-') {
                os << " - ";
                cs.erase(0, 1);
            } else {
                os << " + ";
            }
        }
        first = false;
        if (!simple) cs = "(" + cs + ")";
        if (i == 0) {
            os << cs;
            continue;
        }
        if (cs == "1") cs.clear();
        else if (cs == "-1") cs = "-";
        else cs += "*";
        os << cs << 'x';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

Polynomial pow(const Polynomial& p, unsigned e) {
    Polynomial r(1L), b = p;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return r;
}

nlohmann::json to_json(const Polynomial& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& g : p.coeffs()) a.push_back(to_json(g));
    return a;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<GaussianInt> v;
    for (const auto& e : j) v.push_back(gaussian_from_json(e));
    return Polynomial(std::move(v));
}

}  // namespace invol
