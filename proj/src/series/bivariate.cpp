#include "invol/series/bivariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace invol {

QPoly::QPoly(const mpz_class& c, int S) : S_(S) {
    if (S < 0) throw std::invalid_argument("negative q truncation");
    if (c != 0) c_.push_back(c);
}

QPoly::QPoly(std::vector<mpz_class> coeffs, int S) : c_(std::move(coeffs)), S_(S) {
    if (S < 0) throw std::invalid_argument("negative q truncation");
    normalize();
}

QPoly QPoly::monomial(const mpz_class& c, int e, int S) {
    if (e < 0) throw std::invalid_argument("negative power of q");
    if (e > S) return QPoly(mpz_class(0), S);
    std::vector<mpz_class> v(static_cast<std::size_t>(e) + 1);
    v.back() = c;
    return QPoly(std::move(v), S);
}

void QPoly::normalize() {
    if (S_ != kExact && degree() > S_) c_.resize(static_cast<std::size_t>(S_) + 1);
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class QPoly::coeff(int e) const {
    if (e < 0 || e > degree()) return 0;
    return c_[static_cast<std::size_t>(e)];
}

QPoly& QPoly::operator+=(const QPoly& o) {
    S_ = std::min(S_, o.S_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    S_ = std::min(S_, o.S_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
    S_ = std::min(S_, o.S_);
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::size_t len = c_.size() + o.c_.size() - 1;
    if (S_ != kExact) len = std::min(len, static_cast<std::size_t>(S_) + 1);
    std::vector<mpz_class> r(len);
    for (std::size_t i = 0; i < c_.size() && i < len; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size() && i + j < len; ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    normalize();
    return *this;
}

bool operator==(const QPoly& a, const QPoly& b) {
    int S = std::min(a.S_, b.S_);
    int top = std::max(a.degree(), b.degree());
    if (S != QPoly::kExact) top = std::min(top, S);
    for (int e = 0; e <= top; ++e)
        if (a.coeff(e) != b.coeff(e)) return false;
    return true;
}

bool exact_div(const QPoly& a, const QPoly& b, QPoly& q) {
    if (b.degree() != 0) return false;
    const mpz_class& c = b.coeffs()[0];
    std::vector<mpz_class> v(a.coeffs().size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!mpz_divisible_p(a.coeffs()[i].get_mpz_t(), c.get_mpz_t())) return false;
        mpz_divexact(v[i].get_mpz_t(), a.coeffs()[i].get_mpz_t(), c.get_mpz_t());
    }
    q = QPoly(std::move(v), std::min(a.truncation(), b.truncation()));
    return true;
}

BivariateTable to_table(const BivariateSeries& s, int S) {
    BivariateTable t(static_cast<std::size_t>(s.order()) + 1, std::vector<mpz_class>(static_cast<std::size_t>(S) + 1));
    for (int n = 0; n <= s.order(); ++n)
        for (int e = 0; e <= S; ++e) t[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)] = s[n].coeff(e);
    return t;
}

BivariateSeries from_table(const BivariateTable& t, int S) {
    if (t.empty()) throw std::invalid_argument("empty coefficient table");
    BivariateSeries s(static_cast<int>(t.size()) - 1);
    for (std::size_t n = 0; n < t.size(); ++n) s[static_cast<int>(n)] = QPoly(t[n], S);
    return s;
}

namespace {
mpz_class cell(const BivariateTable& t, int n, int s) {
    if (n < 0 || n >= static_cast<int>(t.size())) return 0;
    const auto& row = t[static_cast<std::size_t>(n)];
    if (s < 0 || s >= static_cast<int>(row.size())) return 0;
    return row[static_cast<std::size_t>(s)];
}
}  // namespace

bool tables_equal(const BivariateTable& a, const BivariateTable& b, int N, int S) {
    for (int n = 0; n <= N; ++n)
        for (int s = 0; s <= S; ++s)
            if (cell(a, n, s) != cell(b, n, s)) return false;
    return true;
}

BivariateTable multiply_tables(const BivariateTable& a, const BivariateTable& b, int N, int S) {
    BivariateTable r(static_cast<std::size_t>(N) + 1, std::vector<mpz_class>(static_cast<std::size_t>(S) + 1));
    for (int n1 = 0; n1 <= N; ++n1)
        for (int s1 = 0; s1 <= S; ++s1) {
            mpz_class x = cell(a, n1, s1);
            if (x == 0) continue;
            for (int n2 = 0; n1 + n2 <= N; ++n2)
                for (int s2 = 0; s1 + s2 <= S; ++s2)
                    r[static_cast<std::size_t>(n1 + n2)][static_cast<std::size_t>(s1 + s2)] += x * cell(b, n2, s2);
        }
    return r;
}

BivariateTable add_tables(const BivariateTable& a, const BivariateTable& b, int N, int S) {
    BivariateTable r(static_cast<std::size_t>(N) + 1, std::vector<mpz_class>(static_cast<std::size_t>(S) + 1));
    for (int n = 0; n <= N; ++n)
        for (int s = 0; s <= S; ++s) r[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)] = cell(a, n, s) + cell(b, n, s);
    return r;
}

}  // namespace invol
