#include "invol/series/continued_fraction.hpp"

#include <string>

namespace invol {

namespace {

long binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BivariateSeries xq_monomial(long sign, const CFVariable& m, int N, int S) {
    if (m.x_exp < 0 || m.q_exp < 0)
        throw std::domain_error("continued fraction level has exponent x^" + std::to_string(m.x_exp) + " q^" +
                                std::to_string(m.q_exp));
    return BivariateSeries::monomial(QPoly::monomial(sign, m.q_exp, S), m.x_exp, N);
}

BivariateSeries xq(long c, int x_exp, int q_exp, int N, int S) {
    return BivariateSeries::monomial(QPoly::monomial(c, q_exp, S), x_exp, N);
}

BivariateSeries with_branch(SqrtBranch b, const BivariateSeries& root) { return b == SqrtBranch::Plus ? root : -root; }

}  // namespace

const char* branch_name(SqrtBranch b) { return b == SqrtBranch::Plus ? "+sqrt" : "-sqrt"; }

BivariateSeries lrmax_closed_form(SqrtBranch b, int N, int S) {
    const BivariateSeries root = (xq(1, 0, 0, N, S) - xq(2, 1, 0, N, S) + xq(5, 2, 0, N, S)).sqrt();
    const BivariateSeries two_minus_q = xq(2, 0, 0, N, S) - xq(1, 0, 1, N, S);
    const BivariateSeries den =
        two_minus_q * (xq(1, 0, 0, N, S) - xq(1, 1, 0, N, S)) + with_branch(b, xq(1, 0, 1, N, S) * root);
    return xq(2, 0, 0, N, S) / den;
}

BivariateSeries lrmax_closed_form_corrected(int N, int S) {
    const BivariateSeries root = (xq(1, 0, 0, N, S) - xq(2, 1, 0, N, S) + xq(5, 2, 0, N, S)).sqrt();
    const BivariateSeries den =
        xq(2, 0, 0, N, S) - xq(1, 0, 1, N, S) - xq(1, 1, 1, N, S) + xq(1, 0, 1, N, S) * root;
    return xq(2, 0, 0, N, S) / den;
}

BivariateSeries fix_closed_form(SqrtBranch b, int N, int S) {
    // Two extra orders are consumed by the division by x^2.
    const int M = N + 2;
    const BivariateSeries radicand =
        xq(1, 0, 0, M, S) - xq(2, 1, 1, M, S) + xq(1, 2, 2, M, S) + xq(4, 2, 0, M, S);
    const BivariateSeries num = xq(-1, 0, 0, M, S) + xq(1, 1, 1, M, S) + with_branch(b, radicand.sqrt());
    return num.divide_x(2) / BivariateSeries::constant(QPoly(2L), N);
}

BivariateSeries involution_cf(const std::function<CFVariable(int)>& variable, int join, int depth, int N, int S) {
    CFSpec<QPoly> spec;
    spec.depth = depth;
    spec.join = join;
    spec.level = [&](int n, int order) {
        CFVariable num, den;
        if (n == 0) {
            den = variable(1);
        } else {
            for (int i = 1; i <= 2 * n; ++i) {
                long e = binom(2 * n - 2, i - 1) + binom(2 * n - 1, i - 1);
                CFVariable v = variable(i);
                num.x_exp += static_cast<int>(e * v.x_exp);
                num.q_exp += static_cast<int>(e * v.q_exp);
            }
            for (int i = 1; i <= 2 * n + 1; ++i) {
                long e = binom(2 * n, i - 1);
                CFVariable v = variable(i);
                den.x_exp += static_cast<int>(e * v.x_exp);
                den.q_exp += static_cast<int>(e * v.q_exp);
            }
        }
        BivariateSeries a = xq_monomial(1, num, order, S);
        BivariateSeries b = BivariateSeries::constant(QPoly(1L), order) - xq_monomial(1, den, order, S);
        return std::pair{a, b};
    };
    return cf_truncate(spec, N);
}

std::function<CFVariable(int)> statistic_specialization(Statistic s) {
    switch (s) {
        case Statistic::Inv:
            return [](int i) -> CFVariable {
                if (i == 1) return {1, 0};
                if (i == 2) return {0, 1};
                return {0, 0};
            };
        case Statistic::Lrmax:
        case Statistic::Rlmin:
            return [](int i) -> CFVariable {
                if (i == 1) return {1, 1};
                return {0, (i % 2 == 1) ? 1 : -1};
            };
        case Statistic::Fix:
            return [](int i) -> CFVariable {
                if (i == 1) return {1, 1};
                long p = 1;
                for (int j = 1; j < i; ++j) p *= -2;
                return {0, static_cast<int>(p)};
            };
    }
    throw std::invalid_argument("unknown statistic");
}

}  // namespace invol
