#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "invol/core/permutation.hpp"
#include "invol/core/statistics.hpp"

namespace invol {

inline constexpr int kDefaultCap = 14;

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RestrictionSpec {
    std::vector<Permutation> avoid;
    std::vector<Permutation> exactly_once;
    std::optional<std::pair<Permutation, int>> exactly_r;

    // Throws std::invalid_argument on empty patterns or avoid/exactly_once overlap.
    void validate() const;
    std::string describe() const;
};

nlohmann::json to_json(const RestrictionSpec& spec);

struct SeriesSample {
    RestrictionSpec spec;
    bool is_signed = false;
    std::vector<mpz_class> coeffs;   // n = 0..N
};

nlohmann::json to_json(const SeriesSample& s);
std::string to_csv(const SeriesSample& s);

// c[n][s]; row n has one entry per attainable statistic value 0..max.
using BivariateTable = std::vector<std::vector<mpz_class>>;

// Every involution of S_n exactly once, by fixing n or pairing it with some j < n.
void for_each_involution(int n, const std::function<void(std::span<const int>)>& visit, int cap = kDefaultCap);
std::vector<Permutation> involutions(int n, int cap = kDefaultCap);
// I_n = I_{n-1} + (n-1) I_{n-2}.
mpz_class involution_count(int n);

// The filter compiled from a spec; thread-safe for concurrent calls.
class RestrictionFilter {
public:
    explicit RestrictionFilter(const RestrictionSpec& spec);
    bool accepts(std::span<const int> p) const;

private:
    std::vector<PatternMatcher> avoid_;
    std::vector<PatternMatcher> once_;
    std::optional<std::pair<PatternMatcher, int>> exact_;
};

SeriesSample count_series(const RestrictionSpec& spec, int N, bool is_signed, int cap = kDefaultCap);
// Single-threaded reference for the OpenMP kernel above.
SeriesSample count_series_serial(const RestrictionSpec& spec, int N, bool is_signed, int cap = kDefaultCap);

BivariateTable stat_gf(const RestrictionSpec& spec, Statistic stat, int N, bool is_signed, int cap = kDefaultCap);

SeriesSample occurrence_series(const Permutation& sigma, int r, int N, bool is_signed, int cap = kDefaultCap);

}  // namespace invol
