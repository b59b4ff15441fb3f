#pragma once

#include <map>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "invol/core/permutation.hpp"

namespace invol {

struct StatVector {
    int length = 0;
    int inv = 0;
    int fix = 0;
    int lrmax = 0;
    int rlmin = 0;
    // tau[k-1] = number of occurrences of [k], k = 1..length.
    std::vector<mpz_class> tau;
    int sign = 1;
    // omega_m = sum_k (-m)^(k-1) tau_k for each requested m.
    std::map<int, mpz_class> omega;

    mpz_class tau_k(int k) const;
};

enum class Statistic { Inv, Lrmax, Rlmin, Fix };

Statistic parse_statistic(std::string_view name);
const char* statistic_name(Statistic s);

// Number of occurrences of the decreasing pattern [k] via the subsequence DP.
mpz_class tau(const Permutation& p, int k);
int inversions(const Permutation& p);
int sign(const Permutation& p);
int fixed_points(const Permutation& p);
int left_to_right_maxima(const Permutation& p);
int right_to_left_minima(const Permutation& p);
int statistic_value(const Permutation& p, Statistic s);

StatVector statistics(const Permutation& p, const std::vector<int>& omega_ms = {});

}  // namespace invol
