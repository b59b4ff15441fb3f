#pragma once

#include <functional>
#include <stdexcept>
#include <utility>

#include "invol/core/statistics.hpp"
#include "invol/series/bivariate.hpp"
#include "invol/series/truncated_series.hpp"

namespace invol {

// a_0/(b_0 + s*a_1/(b_1 + s*a_2/(...))) cut after `depth` levels; s = join.
template <class R>
struct CFSpec {
    std::function<std::pair<TruncatedSeries<R>, TruncatedSeries<R>>(int level, int order)> level;
    int depth = 1;
    int join = 1;
};

// Assembled innermost-first; throws NonInvertible when a partial denominator has a non-unit constant term.
template <class R>
TruncatedSeries<R> cf_truncate(const CFSpec<R>& spec, int N) {
    if (spec.depth < 1) throw std::invalid_argument("continued fraction depth must be at least 1");
    if (spec.join != 1 && spec.join != -1) throw std::invalid_argument("join sign must be +1 or -1");
    auto [a, b] = spec.level(spec.depth - 1, N);
    TruncatedSeries<R> t = a / b;
    for (int i = spec.depth - 2; i >= 0; --i) {
        auto [ai, bi] = spec.level(i, N);
        t = spec.join > 0 ? ai / (bi + t) : ai / (bi - t);
    }
    return t;
}

// x_i specialized to x^x_exp q^q_exp.
struct CFVariable {
    int x_exp = 0;
    int q_exp = 0;
};

// Level n: numerator prod_{i<=2n} x_i^{C(2n-2,i-1)+C(2n-1,i-1)}, denominator 1 - prod_{i<=2n+1} x_i^{C(2n,i-1)};
// level 0 is 1/(1 - x_1). join = -1 gives the unsigned fraction, +1 the signed one.
// Throws std::domain_error if a level exponent is negative.
BivariateSeries involution_cf(const std::function<CFVariable(int)>& variable, int join, int depth, int N, int S);

// x_1 = x (times q for lrmax and fix), x_2 = q for inv, x_i = q^{(-1)^{i-1}} for lrmax, q^{(-2)^{i-1}} for fix.
std::function<CFVariable(int)> statistic_specialization(Statistic s);

// Sign in front of the square root in a closed form.
enum class SqrtBranch { Plus, Minus };

const char* branch_name(SqrtBranch b);

// Closed forms of the signed lrmax and fix generating functions, expanded in x with q-degree <= S.
// Throws NonInvertible when the chosen branch has no power series expansion.
// 2/((2-q)(1-x) +- q sqrt(1-2x+5x^2)).
BivariateSeries lrmax_closed_form(SqrtBranch b, int N, int S);
// 2/((2-q) - xq + q sqrt(1-2x+5x^2)); level 0 of the fraction is 1/(1 - xq).
BivariateSeries lrmax_closed_form_corrected(int N, int S);
// (-1 + xq +- sqrt(1 - 2xq + x^2q^2 + 4x^2))/(2x^2).
BivariateSeries fix_closed_form(SqrtBranch b, int N, int S);

// Depth ceil(N/2) + 1 suffices for all fractions whose numerators have valuation >= 2.
inline int stable_cf_depth(int N) { return (N + 1) / 2 + 1; }

}  // namespace invol
