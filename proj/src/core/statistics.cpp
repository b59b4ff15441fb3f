#include "invol/core/statistics.hpp"

#include <stdexcept>
#include <string>

namespace invol {

mpz_class StatVector::tau_k(int k) const {
    if (k < 1 || k > length) return 0;
    return tau[static_cast<std::size_t>(k - 1)];
}

Statistic parse_statistic(std::string_view name) {
    if (name == "inv") return Statistic::Inv;
    if (name == "lrmax") return Statistic::Lrmax;
    if (name == "rlmin") return Statistic::Rlmin;
    if (name == "fix") return Statistic::Fix;
    throw std::invalid_argument("unknown statistic: " + std::string(name));
}

const char* statistic_name(Statistic s) {
    switch (s) {
        case Statistic::Inv: return "inv";
        case Statistic::Lrmax: return "lrmax";
        case Statistic::Rlmin: return "rlmin";
        case Statistic::Fix: return "fix";
    }
    return "?";
}

mpz_class tau(const Permutation& p, int k) {
    if (k < 1) return 0;
    return occurrences(p, decreasing(k));
}

int inversions(const Permutation& p) {
    int c = 0;
    for (int i = 1; i <= p.size(); ++i)
        for (int j = i + 1; j <= p.size(); ++j) c += p(i) > p(j);
    return c;
}

int sign(const Permutation& p) { return inversions(p) % 2 ? -1 : 1; }

int fixed_points(const Permutation& p) {
    int c = 0;
    for (int i = 1; i <= p.size(); ++i) c += p(i) == i;
    return c;
}

int left_to_right_maxima(const Permutation& p) {
    int c = 0, mx = 0;
    for (int i = 1; i <= p.size(); ++i)
        if (p(i) > mx) { mx = p(i); ++c; }
    return c;
}

int right_to_left_minima(const Permutation& p) {
    int c = 0, mn = p.size() + 1;
    for (int i = p.size(); i >= 1; --i)
        if (p(i) < mn) { mn = p(i); ++c; }
    return c;
}

int statistic_value(const Permutation& p, Statistic s) {
    switch (s) {
        case Statistic::Inv: return inversions(p);
        case Statistic::Lrmax: return left_to_right_maxima(p);
        case Statistic::Rlmin: return right_to_left_minima(p);
        case Statistic::Fix: return fixed_points(p);
    }
    return 0;
}

StatVector statistics(const Permutation& p, const std::vector<int>& omega_ms) {
    StatVector s;
    const int n = p.size();
    s.length = n;
    s.inv = inversions(p);
    s.fix = fixed_points(p);
    s.lrmax = left_to_right_maxima(p);
    s.rlmin = right_to_left_minima(p);
    s.sign = s.inv % 2 ? -1 : 1;
    // One DP pass gives every tau_k: dp[i][len] counts decreasing runs of length len ending at i.
    std::vector<std::vector<mpz_class>> dp(static_cast<std::size_t>(n), std::vector<mpz_class>(static_cast<std::size_t>(n) + 1));
    s.tau.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        dp[i][1] = 1;
        for (int j = 0; j < i; ++j)
            if (p(j + 1) > p(i + 1))
                for (int len = 2; len <= i + 1; ++len) dp[i][len] += dp[j][len - 1];
        for (int len = 1; len <= i + 1; ++len) s.tau[static_cast<std::size_t>(len - 1)] += dp[i][len];
    }
    for (int m : omega_ms) {
        mpz_class w = 0, pw = 1;
        for (int k = 1; k <= n; ++k) {
            w += pw * s.tau[static_cast<std::size_t>(k - 1)];
            pw *= -m;
        }
        s.omega[m] = w;
    }
    return s;
}

}  // namespace invol
