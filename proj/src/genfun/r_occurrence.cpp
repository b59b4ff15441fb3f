#include "invol/genfun/r_occurrence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "invol/chebyshev/chebyshev.hpp"

namespace invol {

Parity parse_parity(std::string_view s) {
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
    throw std::invalid_argument("parity must be even or odd: " + std::string(s));
}

const char* parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

long long binom_conv(long long a, long long m) {
    if (m == 0) return 1;
    if (m < 0 || a < 0 || m > a) return 0;
    long long r = 1;
    for (long long i = 1; i <= m; ++i) r = r * (a - m + i) / i;
    return r;
}

namespace {

using LF = LaurentFraction;

struct Weights {
    std::vector<long long> cd, cl;
};

Weights weights(int k, int b, Parity parity) {
    Weights w;
    for (int j = 0; j <= b; ++j) {
        if (parity == Parity::Even) {
            w.cd.push_back(binom_conv(2 * k + 2 * j - 2, 2 * k - 1) + binom_conv(2 * k + 2 * j - 1, 2 * k - 1));
            w.cl.push_back(binom_conv(2 * k + 2 * j, 2 * k - 1));
        } else {
            w.cd.push_back(binom_conv(2 * k + 2 * j + 1, 2 * k) + binom_conv(2 * k + 2 * j, 2 * k));
            w.cl.push_back(binom_conv(2 * k + 2 * j, 2 * k));
        }
    }
    return w;
}

LF W(int n) { return LF(chebW(n)); }
LF X() { return LF(LaurentPolynomial::monomial(1L, 1)); }
LF IU() { return LF(LaurentPolynomial(Polynomial(GaussianInt::I()))); }

// x^e for any integer e.
LF xpow(int e) { return LF(LaurentPolynomial::monomial(1L, e)); }
LF ipow(long e) { return LF(LaurentPolynomial(Polynomial(i_pow(e)))); }

LF signed_pow(const LF& base, int e) {
    if (e >= 0) return pow(base, static_cast<unsigned>(e));
    return LF(1L) / pow(base, static_cast<unsigned>(-e));
}

// Even products use d_{b+1} = 0, odd products use d_{-1} = 1.
long long product(const CompositionSeq& c, Parity parity) {
    long long pr = 1;
    const int b = c.b;
    for (int s = 0; s <= b; ++s) {
        const long long ds = c.d[static_cast<std::size_t>(s)], ls = c.l[static_cast<std::size_t>(s)];
        if (parity == Parity::Even) {
            const long long dn = s + 1 <= b ? c.d[static_cast<std::size_t>(s + 1)] : 0;
            pr *= binom_conv(ds + dn + ls - 1, dn + ls) * binom_conv(dn + ls, ls);
        } else {
            const long long dp = s == 0 ? 1 : c.d[static_cast<std::size_t>(s - 1)];
            pr *= binom_conv(ds + dp + ls - 1, ds + ls) * binom_conv(ds + ls, ls);
        }
        if (pr == 0) return 0;
    }
    return pr;
}

}  // namespace

std::vector<int> admissible_b(int r, int k, Parity parity) {
    std::vector<int> out;
    for (int b = 0; b <= r + 1; ++b) {
        bool ok;
        if (parity == Parity::Even) {
            const long long lim = std::min(binom_conv(2 * k + 2 * b + 2, 2 * k - 1),
                                           binom_conv(2 * k + 2 * b, 2 * k - 1) + binom_conv(2 * k + 2 * b + 1, 2 * k - 1));
            ok = r < lim;
        } else {
            ok = binom_conv(2 * k + 2 * b, 2 * k) <= r && r < binom_conv(2 * k + 2 * b + 2, 2 * k);
        }
        if (ok) out.push_back(b);
    }
    return out;
}

std::vector<CompositionSeq> compositions(int r, int k, int b, Parity parity) {
    const Weights w = weights(k, b, parity);
    std::vector<long long> coef = w.cd;
    coef.insert(coef.end(), w.cl.begin(), w.cl.end());
    for (long long c : coef)
        if (c <= 0) throw std::logic_error("nonpositive composition weight");
    std::vector<CompositionSeq> out;
    std::vector<int> acc(coef.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, long long rem) -> void {
        if (i == coef.size()) {
            if (rem == 0) {
                CompositionSeq c;
                c.b = b;
                c.d.assign(acc.begin(), acc.begin() + b + 1);
                c.l.assign(acc.begin() + b + 1, acc.end());
                out.push_back(std::move(c));
            }
            return;
        }
        for (long long t = 0; t * coef[i] <= rem; ++t) {
            acc[i] = static_cast<int>(t);
            self(self, i + 1, rem - t * coef[i]);
        }
        acc[i] = 0;
    };
    rec(rec, 0, r);
    return out;
}

LaurentFraction r_occurrence_closed_form(int r, int k, Parity parity, ROccurrenceForm form, int b) {
    if (r < 1 || k < 1) throw std::invalid_argument("r-occurrence requires r >= 1 and k >= 1");
    const auto bs = admissible_b(r, k, parity);
    if (bs.empty()) throw std::invalid_argument("no admissible b for r = " + std::to_string(r));
    if (b < 0) b = bs.front();
    else if (std::find(bs.begin(), bs.end(), b) == bs.end())
        throw std::invalid_argument("b = " + std::to_string(b) + " is not admissible");

    LF total(0L);
    for (const auto& c : compositions(r, k, b, parity)) {
        const long long pr = product(c, parity);
        if (pr == 0) continue;
        const int d0 = c.d[0], l0 = c.l[0];
        const int sd = std::accumulate(c.d.begin(), c.d.end(), 0);
        const int sl = std::accumulate(c.l.begin(), c.l.end(), 0);
        LF term(static_cast<long>(pr));
        if (parity == Parity::Even) {
            const long iexp = form == ROccurrenceForm::Printed ? 2L * sd + d0 - 1 : 2L * sd - d0 - 1;
            term *= signed_pow(W(k - 1), d0 - 1) / signed_pow(W(k), d0 + 1);
            term *= ipow(iexp) * xpow(-1 - d0 + 2 * sd + sl);
        } else if (form == ROccurrenceForm::Printed) {
            term *= signed_pow(W(k), d0 + l0 - 1) / signed_pow(W(k + 1) + W(k), d0 + l0 + 1);
            term *= ipow(-1L - d0 + 2L * sd) * xpow(-1 - d0 - l0 + 2 * sd + sl);
        } else {
            const LF D = W(k) - IU() * X() * W(k - 1);
            term *= ipow(2L * sd) * xpow(2 * sd + sl);
            term *= signed_pow(W(k) / D, d0 + l0 - 1) / pow(D, 2);
        }
        total += term;
    }
    return total;
}

PowerSeries r_occurrence_gf(int r, int k, Parity parity, int N, ROccurrenceForm form, int b) {
    return r_occurrence_closed_form(r, k, parity, form, b).to_rational().expand(N);
}

}  // namespace invol
