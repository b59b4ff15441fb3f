#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace invol {

// One-line notation over {1..n}; the empty permutation is allowed.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> entries);
    Permutation(std::initializer_list<int> entries) : Permutation(std::vector<int>(entries)) {}

    // Digits concatenated for n <= 9, comma-separated otherwise. "" and "()" are the empty permutation.
    static Permutation parse(std::string_view text);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(v_.size()); }
    bool empty() const { return v_.empty(); }
    // 1-based evaluation pi(i).
    int operator()(int i) const { return v_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& entries() const { return v_; }
    std::span<const int> span() const { return v_; }

    std::string str() const;

    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> v_;
};

// The pattern (standardization) of an arbitrary sequence of distinct integers.
Permutation standardize(std::span<const int> seq);

bool is_involution(const Permutation& p);

// Precomputed matcher for one pattern; counts occurrences in a text with an optional cap.
class PatternMatcher {
public:
    explicit PatternMatcher(const Permutation& pattern);
    // Number of occurrences, stopping once `cap` is reached (0 means no cap).
    std::uint64_t count(std::span<const int> text, std::uint64_t cap = 0) const;
    bool occurs_in(std::span<const int> text) const { return count(text, 1) > 0; }
    const Permutation& pattern() const { return pattern_; }

private:
    Permutation pattern_;
    std::vector<int> lo_;   // index of the nearest smaller earlier pattern entry, or -1
    std::vector<int> hi_;   // index of the nearest larger earlier pattern entry, or -1
};

mpz_class occurrences(const Permutation& p, const Permutation& sigma);
bool contains(const Permutation& p, const Permutation& sigma);
inline bool avoids(const Permutation& p, const Permutation& sigma) { return !contains(p, sigma); }

Permutation direct_sum(const Permutation& a, const Permutation& b);
Permutation skew_sum(const Permutation& a, const Permutation& b);
// (1 skew a skew 1) direct-sum b.
Permutation star(const Permutation& a, const Permutation& b);
// The single-3412 building block; the last entry is |p1|+2.
Permutation otimes(const Permutation& p1, const Permutation& p2, const Permutation& p3);
Permutation overline(const Permutation& p);
std::vector<Permutation> decompose(const Permutation& p);
Permutation beta(const Permutation& p);
Permutation direct_sum_all(std::span<const Permutation> parts);
Permutation reverse_complement(const Permutation& p);
Permutation inverse(const Permutation& p);
Permutation decreasing(int k);
Permutation layered(std::span<const int> layers);
inline Permutation layered(std::initializer_list<int> layers) {
    return layered(std::span<const int>(layers.begin(), layers.size()));
}

struct Crossing {
    int i, j, k, l;
    auto operator<=>(const Crossing&) const = default;
};

// Requires an involution.
std::vector<Crossing> crossings(const Permutation& p);

}  // namespace invol

template <>
struct std::hash<invol::Permutation> {
    std::size_t operator()(const invol::Permutation& p) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (int v : p.entries()) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
        return h;
    }
};
