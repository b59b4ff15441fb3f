#include "invol/core/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace invol {

Permutation::Permutation(std::vector<int> entries) : v_(std::move(entries)) {
    const int n = size();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : v_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::parse(std::string_view text) {
    if (text.empty() || text == "()") return Permutation{};
    std::vector<int> out;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            auto tok = text.substr(pos, next - pos);
            if (tok.empty()) throw std::invalid_argument("empty entry in permutation text");
            int v = 0;
            for (char c : tok) {
                if (c < '0' || c > '9') throw std::invalid_argument("bad character in permutation text");
                v = v * 10 + (c - '0');
                if (v > 1000000) throw std::invalid_argument("permutation entry too large");
            }
            out.push_back(v);
            pos = next + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("ambiguous permutation text; use commas for n > 9");
            out.push_back(c - '0');
        }
    }
    return Permutation(std::move(out));
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

std::string Permutation::str() const {
    std::string s;
    const bool commas = size() > 9;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (commas && i > 0) s += ',';
        s += std::to_string(v_[i]);
    }
    return s;
}

Permutation standardize(std::span<const int> seq) {
    std::vector<int> idx(seq.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return seq[a] < seq[b]; });
    std::vector<int> out(seq.size());
    for (std::size_t r = 0; r < idx.size(); ++r) out[static_cast<std::size_t>(idx[r])] = static_cast<int>(r) + 1;
    return Permutation(std::move(out));
}

bool is_involution(const Permutation& p) {
    for (int i = 1; i <= p.size(); ++i)
        if (p(p(i)) != i) return false;
    return true;
}

PatternMatcher::PatternMatcher(const Permutation& pattern) : pattern_(pattern) {
    const auto& s = pattern_.entries();
    const std::size_t k = s.size();
    lo_.assign(k, -1);
    hi_.assign(k, -1);
    for (std::size_t t = 0; t < k; ++t) {
        for (std::size_t u = 0; u < t; ++u) {
            if (s[u] < s[t] && (lo_[t] < 0 || s[u] > s[static_cast<std::size_t>(lo_[t])])) lo_[t] = static_cast<int>(u);
            if (s[u] > s[t] && (hi_[t] < 0 || s[u] < s[static_cast<std::size_t>(hi_[t])])) hi_[t] = static_cast<int>(u);
        }
    }
}

namespace {

struct MatchState {
    std::span<const int> text;
    const std::vector<int>* lo;
    const std::vector<int>* hi;
    int k;
    std::uint64_t cap;
    std::uint64_t found = 0;
    int chosen[64] = {};
};

void match_rec(MatchState& st, int t, int start) {
    const int n = static_cast<int>(st.text.size());
    if (t == st.k) {
        ++st.found;
        return;
    }
    const int lo_i = (*st.lo)[static_cast<std::size_t>(t)];
    const int hi_i = (*st.hi)[static_cast<std::size_t>(t)];
    const int lo_v = lo_i < 0 ? 0 : st.chosen[lo_i];
    const int hi_v = hi_i < 0 ? 1 << 30 : st.chosen[hi_i];
    for (int pos = start; pos <= n - (st.k - t); ++pos) {
        const int v = st.text[static_cast<std::size_t>(pos)];
        if (v <= lo_v || v >= hi_v) continue;
        st.chosen[t] = v;
        match_rec(st, t + 1, pos + 1);
        if (st.cap && st.found >= st.cap) return;
    }
}

}  // namespace

std::uint64_t PatternMatcher::count(std::span<const int> text, std::uint64_t cap) const {
    const int k = pattern_.size();
    if (k == 0) return 1;
    if (k > static_cast<int>(text.size())) return 0;
    if (k > 64) throw std::invalid_argument("pattern longer than 64 entries");
    MatchState st{text, &lo_, &hi_, k, cap};
    match_rec(st, 0, 0);
    return st.found;
}

mpz_class occurrences(const Permutation& p, const Permutation& sigma) {
    // Decreasing patterns use the exact DP, which never enumerates occurrences one by one.
    const int k = sigma.size();
    bool dec = true;
    for (int i = 1; i <= k; ++i) dec = dec && sigma(i) == k + 1 - i;
    if (dec && k > 0) {
        const int n = p.size();
        std::vector<std::vector<mpz_class>> dp(static_cast<std::size_t>(n), std::vector<mpz_class>(static_cast<std::size_t>(k) + 1));
        mpz_class total = 0;
        for (int i = 0; i < n; ++i) {
            dp[i][1] = 1;
            for (int j = 0; j < i; ++j)
                if (p(j + 1) > p(i + 1))
                    for (int len = 2; len <= k; ++len) dp[i][len] += dp[j][len - 1];
            total += dp[i][k];
        }
        return total;
    }
    PatternMatcher m(sigma);
    std::uint64_t c = m.count(p.span());
    mpz_class r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(c), 0, 0, &c);
    return r;
}

bool contains(const Permutation& p, const Permutation& sigma) {
    return PatternMatcher(sigma).occurs_in(p.span());
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> v = a.entries();
    for (int x : b.entries()) v.push_back(x + a.size());
    return Permutation(std::move(v));
}

Permutation skew_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> v;
    for (int x : a.entries()) v.push_back(x + b.size());
    for (int x : b.entries()) v.push_back(x);
    return Permutation(std::move(v));
}

Permutation star(const Permutation& a, const Permutation& b) {
    return direct_sum(skew_sum(skew_sum(Permutation{1}, a), Permutation{1}), b);
}

Permutation otimes(const Permutation& p1, const Permutation& p2, const Permutation& p3) {
    const int a = p1.size(), b = p2.size(), c = p3.size();
    const int n = a + b + c + 4;
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(n));
    v.push_back(a + b + 3);
    for (int x : p1.entries()) v.push_back(x + 1);
    v.push_back(n);
    for (int x : p2.entries()) v.push_back(x + a + 2);
    v.push_back(1);
    for (int x : p3.entries()) v.push_back(x + a + b + 3);
    v.push_back(a + 2);
    return Permutation(std::move(v));
}

Permutation overline(const Permutation& p) {
    const int n = p.size();
    if (n <= 1) return Permutation{};
    const auto& e = p.entries();
    const bool first_max = e.front() == n;
    const bool last_one = e.back() == 1;
    if (first_max && last_one) return standardize(std::span<const int>(e).subspan(1, static_cast<std::size_t>(n) - 2));
    if (first_max) return standardize(std::span<const int>(e).subspan(1));
    if (last_one) return standardize(std::span<const int>(e).first(static_cast<std::size_t>(n) - 1));
    return p;
}

std::vector<Permutation> decompose(const Permutation& p) {
    std::vector<Permutation> parts;
    const auto& e = p.entries();
    int start = 0, mx = 0;
    for (int i = 0; i < p.size(); ++i) {
        mx = std::max(mx, e[static_cast<std::size_t>(i)]);
        if (mx == i + 1) {
            std::vector<int> seg;
            for (int j = start; j <= i; ++j) seg.push_back(e[static_cast<std::size_t>(j)] - start);
            parts.emplace_back(std::move(seg));
            start = i + 1;
        }
    }
    return parts;
}

Permutation direct_sum_all(std::span<const Permutation> parts) {
    Permutation r;
    for (const auto& q : parts) r = direct_sum(r, q);
    return r;
}

Permutation beta(const Permutation& p) {
    if (p.empty() || p(1) != 1) return p;
    auto parts = decompose(p);
    return direct_sum_all(std::span<const Permutation>(parts).subspan(1));
}

Permutation reverse_complement(const Permutation& p) {
    const int n = p.size();
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n + 1 - p(n - i);
    return Permutation(std::move(v));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> v(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) v[static_cast<std::size_t>(p(i) - 1)] = i;
    return Permutation(std::move(v));
}

Permutation decreasing(int k) {
    if (k < 0) throw std::invalid_argument("decreasing: k must be >= 0");
    std::vector<int> v;
    for (int i = k; i >= 1; --i) v.push_back(i);
    return Permutation(std::move(v));
}

Permutation layered(std::span<const int> layers) {
    Permutation r;
    for (int l : layers) {
        if (l < 1) throw std::invalid_argument("layered: layer sizes must be >= 1");
        r = direct_sum(r, decreasing(l));
    }
    return r;
}

std::vector<Crossing> crossings(const Permutation& p) {
    if (!is_involution(p)) throw std::invalid_argument("crossings: not an involution");
    std::vector<Crossing> out;
    const int n = p.size();
    for (int i = 1; i <= n; ++i) {
        const int k = p(i);
        if (k <= i) continue;
        for (int j = i + 1; j < k; ++j) {
            const int l = p(j);
            if (l > k) out.push_back({i, j, k, l});
        }
    }
    return out;
}

}  // namespace invol
