#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "invol/series/ring.hpp"

namespace invol {

// Power series in x known through x^N. R needs +, -, *, R(long), ring_is_zero and exact_div.
template <class R>
class TruncatedSeries {
public:
    TruncatedSeries() : TruncatedSeries(0) {}
    explicit TruncatedSeries(int order) : c_(check_order(order) + 1, R(0L)) {}
    TruncatedSeries(std::vector<R> coeffs, int order) : c_(std::move(coeffs)) {
        c_.resize(static_cast<std::size_t>(check_order(order)) + 1, R(0L));
    }

    static TruncatedSeries constant(const R& c, int order) {
        TruncatedSeries s(order);
        s.c_[0] = c;
        return s;
    }
    static TruncatedSeries one(int order) { return constant(R(1L), order); }
    // c * x^k.
    static TruncatedSeries monomial(const R& c, int k, int order) {
        TruncatedSeries s(order);
        if (k >= 0 && k <= order) s.c_[static_cast<std::size_t>(k)] = c;
        return s;
    }
    static TruncatedSeries x(int order) { return monomial(R(1L), 1, order); }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const R& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
    R& operator[](int n) { return c_[static_cast<std::size_t>(n)]; }
    const std::vector<R>& coeffs() const { return c_; }

    TruncatedSeries truncated(int order) const {
        if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
        return TruncatedSeries(std::vector<R>(c_.begin(), c_.begin() + order + 1), order);
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        shrink_to(o.order());
        for (int n = 0; n <= order(); ++n) (*this)[n] += o[n];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        shrink_to(o.order());
        for (int n = 0; n <= order(); ++n) (*this)[n] -= o[n];
        return *this;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }
    TruncatedSeries& operator*=(const R& k) {
        for (auto& v : c_) v *= k;
        return *this;
    }
    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& v : r.c_) v = R(0L) - v;
        return r;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        int N = std::min(a.order(), b.order());
        TruncatedSeries r(N);
        for (int i = 0; i <= N; ++i) {
            if (ring_is_zero(a[i])) continue;
            for (int j = 0; i + j <= N; ++j) r[i + j] += a[i] * b[j];
        }
        return r;
    }
    friend TruncatedSeries operator*(TruncatedSeries a, const R& k) { return a *= k; }
    friend TruncatedSeries operator*(const R& k, TruncatedSeries a) { return a *= k; }
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return a.divided_by(b); }

    // Coefficientwise equality over the common order.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !first_difference(a, b).has_value();
    }

    // Multiply by x^k; the order is kept.
    TruncatedSeries shifted(int k) const {
        TruncatedSeries r(order());
        for (int n = 0; n + k <= order(); ++n) r[n + k] = c_[static_cast<std::size_t>(n)];
        return r;
    }
    // Divide by x^k; the first k coefficients must vanish and the order drops by k.
    TruncatedSeries divide_x(int k) const {
        if (k > order()) throw std::invalid_argument("divide_x beyond the known order");
        for (int n = 0; n < k; ++n)
            if (!ring_is_zero((*this)[n])) throw NonInvertible("series is not divisible by the requested power of x");
        return TruncatedSeries(std::vector<R>(c_.begin() + k, c_.end()), order() - k);
    }

    TruncatedSeries divided_by(const TruncatedSeries& b) const {
        int N = std::min(order(), b.order());
        TruncatedSeries r(N);
        for (int n = 0; n <= N; ++n) {
            R acc = (*this)[n];
            for (int i = 1; i <= n; ++i)
                if (!ring_is_zero(b[i])) acc -= b[i] * r[n - i];
            if (!exact_div(acc, b[0], r[n])) throw NonInvertible("constant term does not divide the series exactly");
        }
        return r;
    }
    TruncatedSeries inverse() const { return one(order()).divided_by(*this); }

    // Branch with constant term +1; requires s(0) = 1.
    TruncatedSeries sqrt() const {
        if (!(c_[0] == R(1L))) throw NonInvertible("series square root needs constant term 1");
        TruncatedSeries r(order());
        r[0] = R(1L);
        for (int n = 1; n <= order(); ++n) {
            R acc = (*this)[n];
            for (int i = 1; i < n; ++i) acc -= r[i] * r[n - i];
            if (!exact_div(acc, R(2L), r[n])) throw NonInvertible("series square root leaves the coefficient ring");
        }
        return r;
    }

    // Index of the first disagreement over the common order, if any.
    friend std::optional<int> first_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
        int N = std::min(a.order(), b.order());
        for (int n = 0; n <= N; ++n)
            if (!(a[n] == b[n])) return n;
        return std::nullopt;
    }

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("series order must be nonnegative");
        return order;
    }
    void shrink_to(int order) {
        if (order < this->order()) c_.resize(static_cast<std::size_t>(order) + 1);
    }

    std::vector<R> c_;
};

template <class R>
TruncatedSeries<R> pow(const TruncatedSeries<R>& s, unsigned e) {
    auto r = TruncatedSeries<R>::one(s.order());
    auto b = s;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return r;
}

using PowerSeries = TruncatedSeries<GaussianInt>;
using IntSeries = TruncatedSeries<mpz_class>;

bool is_real(const PowerSeries& s);
// Real parts; throws std::domain_error when some imaginary part is nonzero.
IntSeries real_part(const PowerSeries& s);
PowerSeries to_gaussian(const IntSeries& s);

nlohmann::json to_json(const PowerSeries& s);
nlohmann::json to_json(const IntSeries& s);
PowerSeries power_series_from_json(const nlohmann::json& j);

}  // namespace invol
