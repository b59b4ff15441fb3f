#include "invol/genfun/engine.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "invol/core/json_integer.hpp"

namespace invol {

Variant parse_variant(std::string_view s) {
    if (s == "plus" || s == "+") return Variant::Plus;
    if (s == "minus" || s == "-") return Variant::Minus;
    throw std::invalid_argument("unknown variant '" + std::string(s) + "' (expected plus or minus)");
}

const char* variant_name(Variant v) { return v == Variant::Plus ? "plus" : "minus"; }

Family parse_family(std::string_view s) {
    if (s == "F") return Family::F;
    if (s == "G") return Family::G;
    if (s == "P") return Family::P;
    if (s == "Q") return Family::Q;
    throw std::invalid_argument("unknown family '" + std::string(s) + "' (expected F, G, P or Q)");
}

const char* family_name(Family f) {
    switch (f) {
        case Family::F: return "F";
        case Family::G: return "G";
        case Family::P: return "P";
        case Family::Q: return "Q";
    }
    return "?";
}

PatternArg parse_pattern_arg(std::string_view text) {
    if (text == "none" || text.empty()) return NoPattern{};
    if (text == "empty" || text == "()") return EmptyPattern{};
    return Permutation::parse(text);
}

std::string pattern_arg_str(const PatternArg& p) {
    if (std::holds_alternative<NoPattern>(p)) return "none";
    if (std::holds_alternative<EmptyPattern>(p)) return "empty";
    return std::get<Permutation>(p).str();
}

namespace {

bool is_decreasing(const Permutation& p) {
    for (int i = 1; i <= p.size(); ++i)
        if (p(i) != p.size() + 1 - i) return false;
    return true;
}

const Permutation& single_permutation(const GFQuery& q) {
    if (q.patterns.size() != 1 || !std::holds_alternative<Permutation>(q.patterns[0]))
        throw std::invalid_argument(std::string(family_name(q.family)) + " takes exactly one pattern");
    return std::get<Permutation>(q.patterns[0]);
}

}  // namespace

void GFQuery::validate() const {
    if (N < 0) throw std::invalid_argument("N must be nonnegative");
    switch (family) {
        case Family::F: {
            bool none = std::any_of(patterns.begin(), patterns.end(),
                                    [](const PatternArg& p) { return std::holds_alternative<NoPattern>(p); });
            if (none && patterns.size() != 1) throw std::invalid_argument("'none' cannot be combined with patterns");
            break;
        }
        case Family::G:
            if (single_permutation(*this).empty()) throw std::invalid_argument("G needs a nonempty pattern");
            break;
        case Family::P:
            if (patterns.size() != 1) throw std::invalid_argument("P takes exactly one pattern, 'none' or 'empty'");
            break;
        case Family::Q: {
            if (variant != Variant::Plus) throw std::invalid_argument("Q is defined for the plus variant only");
            const Permutation& p = single_permutation(*this);
            if (!is_decreasing(p) || p.size() < 2) throw std::invalid_argument("Q needs a decreasing pattern [k] with k >= 2");
            break;
        }
    }
}

nlohmann::json to_json(const GFQuery& q, const IntSeries& coeffs) {
    nlohmann::json j;
    j["family"] = family_name(q.family);
    j["variant"] = variant_name(q.variant);
    if (q.patterns.size() == 1) {
        j["pattern"] = pattern_arg_str(q.patterns[0]);
    } else {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& p : q.patterns) a.push_back(pattern_arg_str(p));
        j["patterns"] = a;
    }
    j["N"] = q.N;
    nlohmann::json c = nlohmann::json::array();
    for (const auto& v : coeffs.coeffs()) c.push_back(json_integer(v));
    j["coeffs"] = c;
    return j;
}

// a + b * self, where self is the series being solved for.
struct Engine::Lin {
    IntSeries a;
    IntSeries b;
    bool linear = false;

    static Lin value(IntSeries v) {
        int N = v.order();
        return {std::move(v), IntSeries(N), false};
    }
    static Lin self(int N) { return {IntSeries(N), IntSeries::one(N), true}; }

    Lin& operator+=(const Lin& o) {
        a += o.a;
        if (o.linear) {
            b += o.b;
            linear = true;
        }
        return *this;
    }
    Lin& operator-=(const Lin& o) {
        a -= o.a;
        if (o.linear) {
            b -= o.b;
            linear = true;
        }
        return *this;
    }
    Lin scaled(long c) const {
        Lin r = *this;
        r.a *= mpz_class(c);
        if (linear) r.b *= mpz_class(c);
        return r;
    }
    Lin shifted(int k) const {
        Lin r = *this;
        r.a = a.shifted(k);
        if (linear) r.b = b.shifted(k);
        return r;
    }
    friend Lin operator*(const Lin& x, const Lin& y) {
        if (x.linear && y.linear) throw std::logic_error("engine recurrence is not linear in its unknown");
        Lin r;
        r.a = x.a * y.a;
        r.linear = x.linear || y.linear;
        if (x.linear) r.b = x.b * y.a;
        else if (y.linear) r.b = x.a * y.b;
        else r.b = IntSeries(x.a.order());
        return r;
    }
};

Engine::Engine(Variant v, int N) : variant_(v), s_(variant_sign(v)), N_(N) {
    if (N < 0) throw std::invalid_argument("engine order must be nonnegative");
}

std::size_t Engine::memo_size() const {
    std::lock_guard lock(mu_);
    return f_memo_.size() + e_memo_.size() + p_memo_.size() + h_memo_.size() + q_memo_.size();
}

IntSeries Engine::solve(const Lin& l, const char* what) const {
    if (!l.linear) return l.a;
    // Every self-reference must carry a factor of x.
    if (l.b[0] != 0) throw std::logic_error(std::string(what) + ": self-reference without a factor of x");
    return l.a / (IntSeries::one(N_) - l.b);
}

bool Engine::pattern_in(const Permutation& small, const Permutation& big) {
    if (small.size() > big.size()) return false;
    if (small.size() == big.size()) return small == big;
    auto key = std::make_pair(small, big);
    auto it = contain_memo_.find(key);
    if (it != contain_memo_.end()) return it->second;
    bool r = PatternMatcher(small).occurs_in(big.span());
    contain_memo_.emplace(std::move(key), r);
    return r;
}

// Sorted minimal antichain; patterns every 3412-avoiding involution avoids are dropped.
// A set holding the empty pattern collapses to {()}.
Engine::PatternSet Engine::canonical(const PatternSet& T) {
    PatternSet v;
    for (const auto& p : T) {
        if (p.empty()) return {Permutation{}};
        const int n = p.size();
        bool first_max = p(1) == n, last_one = p(n) == 1;
        if (!first_max && !last_one && decompose(p).size() == 1) continue;
        v.push_back(p);
    }
    std::sort(v.begin(), v.end(), [](const Permutation& a, const Permutation& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    PatternSet out;
    for (const auto& p : v) {
        bool redundant = false;
        for (const auto& q : out)
            if (pattern_in(q, p)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Permutation prefix(const std::vector<Permutation>& d, int i) {
    return direct_sum_all(std::span<const Permutation>(d).first(static_cast<std::size_t>(i)));
}

Permutation suffix(const std::vector<Permutation>& d, int j) {
    return direct_sum_all(std::span<const Permutation>(d).subspan(static_cast<std::size_t>(j)));
}

std::string set_key(const char* tag, const Permutation* rho, const std::vector<Permutation>& A) {
    std::string k = tag;
    if (rho) k += rho->str() + ";";
    for (const auto& a : A) k += a.str() + "|";
    return k;
}

// Iterates idx over [1..k_0] x ... x [1..k_{m-1}].
template <class Fn>
void for_each_index(const std::vector<std::vector<Permutation>>& decs, Fn&& fn) {
    std::vector<int> idx(decs.size(), 1);
    while (true) {
        fn(idx);
        std::size_t j = 0;
        while (j < idx.size() && idx[j] == static_cast<int>(decs[j].size())) idx[j++] = 1;
        if (j == idx.size()) return;
        ++idx[j];
    }
}

// The ways 1 (-) sigma1 (-) 1 contains pre exactly once, as (pattern sigma1 contains once, extra avoided set).
std::vector<std::pair<Permutation, std::vector<Permutation>>> exactly_once_lift(const Permutation& pre) {
    const int n = pre.size();
    if (n == 0) return {{Permutation{}, {}}};
    if (n == 1) return {};
    const auto& e = pre.entries();
    bool first_max = e.front() == n, last_one = e.back() == 1;
    auto drop_first = [&] { return standardize(std::span<const int>(e).subspan(1)); };
    auto drop_last = [&] { return standardize(std::span<const int>(e).first(static_cast<std::size_t>(n) - 1)); };
    if (first_max && last_one)
        return {{overline(pre), {drop_first(), drop_last()}}};
    if (first_max) return {{drop_first(), {pre}}};
    if (last_one) return {{drop_last(), {pre}}};
    return {{pre, {}}};
}

}  // namespace

IntSeries Engine::F(const std::vector<Permutation>& T) {
    std::lock_guard lock(mu_);
    return F_locked(T);
}

IntSeries Engine::F_unrestricted() {
    auto it = f_memo_.find({});
    if (it != f_memo_.end()) return it->second;
    // f = 1 + x f + s x^2 f^2.
    IntSeries f(N_);
    for (int n = 0; n <= N_; ++n) {
        mpz_class v = n == 0 ? 1 : f[n - 1];
        mpz_class q = 0;
        for (int i = 0; i + 2 <= n; ++i) q += f[i] * f[n - 2 - i];
        f[n] = v + s_ * q;
    }
    f_memo_.emplace(PatternSet{}, f);
    return f;
}

IntSeries Engine::F_locked(const PatternSet& T0) {
    PatternSet T = canonical(T0);
    if (T.size() == 1 && T[0].empty()) return zero();
    if (T.empty()) return F_unrestricted();
    if (auto it = f_memo_.find(T); it != f_memo_.end()) return it->second;
    std::string key = set_key("F", nullptr, T);
    if (!in_progress_.insert(key).second) throw std::logic_error("cyclic F recursion at " + key);

    auto look = [&](const PatternSet& S) -> Lin {
        PatternSet c = canonical(S);
        if (c == T) return Lin::self(N_);
        return Lin::value(F_locked(c));
    };

    const int m = static_cast<int>(T.size());
    std::vector<std::vector<Permutation>> decs;
    PatternSet betas;
    for (const auto& p : T) {
        decs.push_back(decompose(p));
        betas.push_back(beta(p));
    }
    Lin acc = Lin::value(IntSeries::one(N_));
    acc += look(betas).shifted(1);
    Lin tot = Lin::value(zero());
    for_each_index(decs, [&](const std::vector<int>& idx) {
        PatternSet right;
        for (int j = 0; j < m; ++j) right.push_back(suffix(decs[j], idx[j] - 1));
        Lin inner = Lin::value(zero());
        for (std::uint32_t Y = 0; Y < (1u << m); ++Y) {
            PatternSet TY;
            for (int j = 0; j < m; ++j) TY.push_back(overline(prefix(decs[j], (Y >> j & 1u) ? idx[j] - 1 : idx[j])));
            if (__builtin_popcount(Y) % 2) inner -= look(TY);
            else inner += look(TY);
        }
        tot += inner * look(right);
    });
    acc += tot.scaled(s_).shifted(2);
    IntSeries r = solve(acc, "F");
    in_progress_.erase(key);
    f_memo_.emplace(std::move(T), r);
    return r;
}

IntSeries Engine::E(const Permutation& rho, const std::vector<Permutation>& A) {
    std::lock_guard lock(mu_);
    return E_locked(rho, A);
}

IntSeries Engine::E_locked(const Permutation& rho, const PatternSet& A0) {
    PatternSet A = canonical(A0);
    if (A.size() == 1 && A[0].empty()) return zero();
    if (rho.empty()) return F_locked(A);
    for (const auto& a : A)
        if (pattern_in(a, rho)) return zero();
    auto mkey = std::make_pair(rho, A);
    if (auto it = e_memo_.find(mkey); it != e_memo_.end()) return it->second;
    std::string key = set_key("E", &rho, A);
    if (!in_progress_.insert(key).second) throw std::logic_error("cyclic E recursion at " + key);

    auto look = [&](const Permutation& r, const PatternSet& B) -> Lin {
        PatternSet c = canonical(B);
        if (r == rho && c == A) return Lin::self(N_);
        return Lin::value(E_locked(r, c));
    };

    const auto d = decompose(rho);
    const int k = static_cast<int>(d.size());
    PatternSet betaA;
    for (const auto& a : A) betaA.push_back(beta(a));
    Lin acc = Lin::value(zero());
    if (d[0] == Permutation{1}) {
        PatternSet B = betaA;
        B.push_back(rho);
        acc += look(beta(rho), B).shifted(1);
    } else {
        acc += look(rho, betaA).shifted(1);
    }

    const int m = static_cast<int>(A.size());
    std::vector<std::vector<Permutation>> decs;
    for (const auto& a : A) decs.push_back(decompose(a));
    Lin tot = Lin::value(zero());
    for_each_index(decs, [&](const std::vector<int>& idx) {
        PatternSet right;
        for (int j = 0; j < m; ++j) right.push_back(suffix(decs[j], idx[j] - 1));
        for (std::uint32_t Y = 0; Y < (1u << m); ++Y) {
            PatternSet TY;
            for (int j = 0; j < m; ++j) TY.push_back(overline(prefix(decs[j], (Y >> j & 1u) ? idx[j] - 1 : idx[j])));
            const bool neg = __builtin_popcount(Y) % 2;
            for (int j = 0; j <= k; ++j) {
                Permutation pre = prefix(d, j), suf = suffix(d, j);
                PatternSet s1 = TY;
                if (j < k) s1.push_back(overline(prefix(d, j + 1)));
                PatternSet s2 = right;
                if (j >= 1) s2.push_back(suffix(d, j - 1));
                for (auto& [ex, extra] : exactly_once_lift(pre)) {
                    PatternSet s1x = s1;
                    s1x.insert(s1x.end(), extra.begin(), extra.end());
                    Lin term = look(ex, s1x) * look(suf, s2);
                    if (neg) tot -= term;
                    else tot += term;
                }
            }
        }
    });
    acc += tot.scaled(s_).shifted(2);
    IntSeries r = solve(acc, "E");
    in_progress_.erase(key);
    e_memo_.emplace(std::move(mkey), r);
    return r;
}

// Region layout of the single-3412 block by position: A P1 B M C P2 D.
// Value order: C < P1 < D < M < A < P2 < B.
const std::vector<std::tuple<Permutation, Permutation, int>>& Engine::splits(const Permutation& rho) {
    if (auto it = split_memo_.find(rho); it != split_memo_.end()) return it->second;
    static constexpr int kRank[7] = {4, 1, 6, 3, 0, 5, 2};
    const int r = rho.size();
    std::set<std::tuple<Permutation, Permutation, int>> out;
    std::vector<int> assign(static_cast<std::size_t>(r));
    std::vector<int> by_value(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) by_value[static_cast<std::size_t>(rho(i + 1) - 1)] = i;

    std::function<void(int, int, unsigned)> rec = [&](int pos, int region, unsigned singles) {
        if (pos == r) {
            int last = -1;
            for (int v = 0; v < r; ++v) {
                int rk = kRank[assign[static_cast<std::size_t>(by_value[static_cast<std::size_t>(v)])]];
                if (rk < last) return;
                last = rk;
            }
            std::vector<int> p1, p2, mid;
            for (int i = 0; i < r; ++i) {
                int g = assign[static_cast<std::size_t>(i)];
                if (g == 1) p1.push_back(rho(i + 1));
                else if (g == 5) p2.push_back(rho(i + 1));
                else if (g == 3) mid.push_back(rho(i + 1));
            }
            for (std::size_t i = 1; i < mid.size(); ++i)
                if (mid[i - 1] < mid[i]) return;
            out.emplace(standardize(p1), standardize(p2), static_cast<int>(mid.size()));
            return;
        }
        for (int g = region; g < 7; ++g) {
            bool single = g % 2 == 0;
            if (single && (singles >> g & 1u)) continue;
            assign[static_cast<std::size_t>(pos)] = g;
            rec(pos + 1, g, single ? singles | (1u << g) : singles);
        }
    };
    rec(0, 0, 0);
    return split_memo_.emplace(rho, std::vector(out.begin(), out.end())).first->second;
}

// Pairs (pi1, pi2) of 3412-avoiding involutions such that for each (a, b) in S, pi1 avoids a or pi2 avoids b.
IntSeries Engine::pair_count(std::vector<std::pair<Permutation, Permutation>> S) {
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    // (a', b') is implied by (a, b) when a lies in a' and b lies in b'.
    std::vector<std::pair<Permutation, Permutation>> kept;
    for (std::size_t i = 0; i < S.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < S.size() && !dominated; ++j)
            dominated = j != i && pattern_in(S[j].first, S[i].first) && pattern_in(S[j].second, S[i].second) &&
                        (S[j] != S[i]);
        if (!dominated) kept.push_back(S[i]);
    }
    std::vector<Permutation> As;
    for (const auto& [a, b] : kept) As.push_back(a);
    std::sort(As.begin(), As.end(), [](const Permutation& x, const Permutation& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    As.erase(std::unique(As.begin(), As.end()), As.end());
    const int n = static_cast<int>(As.size());
    if (n > 63) throw std::length_error("pair_count: too many distinct patterns");
    std::vector<std::uint64_t> below(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (pattern_in(As[static_cast<std::size_t>(j)], As[static_cast<std::size_t>(i)])) below[static_cast<std::size_t>(i)] |= 1ull << j;

    // Down-closed sets D (the patterns pi1 may contain); avoid(D) = F of the complement.
    std::vector<std::uint64_t> downsets;
    std::function<void(int, std::uint64_t)> rec = [&](int i, std::uint64_t D) {
        if (i == n) {
            downsets.push_back(D);
            return;
        }
        rec(i + 1, D);
        if ((below[static_cast<std::size_t>(i)] & ~D) == 0) rec(i + 1, D | (1ull << i));
    };
    rec(0, 0);
    std::map<std::uint64_t, IntSeries> avoid_outside;
    for (auto D : downsets) {
        PatternSet T;
        for (int i = 0; i < n; ++i)
            if (!(D >> i & 1u)) T.push_back(As[static_cast<std::size_t>(i)]);
        avoid_outside.emplace(D, F_locked(T));
    }

    IntSeries tot = zero();
    for (auto C : downsets) {
        std::uint64_t maxC = 0;
        for (int i = 0; i < n; ++i) {
            if (!(C >> i & 1u)) continue;
            bool is_max = true;
            for (int j = 0; j < n && is_max; ++j)
                if ((C >> j & 1u) && (below[static_cast<std::size_t>(j)] >> i & 1u)) is_max = false;
            if (is_max) maxC |= 1ull << i;
        }
        // pi1 contains exactly the patterns in C: Moebius sum over removed maximal elements.
        IntSeries exact = zero();
        for (std::uint64_t Y = maxC;; Y = (Y - 1) & maxC) {
            if (__builtin_popcountll(Y) % 2) exact -= avoid_outside.at(C & ~Y);
            else exact += avoid_outside.at(C & ~Y);
            if (Y == 0) break;
        }
        PatternSet B;
        for (const auto& [a, b] : kept) {
            auto pos = std::find(As.begin(), As.end(), a) - As.begin();
            if (C >> pos & 1u) B.push_back(b);
        }
        tot += exact * F_locked(B);
    }
    return tot;
}

IntSeries Engine::H(const Permutation& rho) {
    if (auto it = h_memo_.find(rho); it != h_memo_.end()) return it->second;
    const auto& sp = splits(rho);
    int mmax = 0;
    for (const auto& t : sp) mmax = std::max(mmax, std::get<2>(t));
    IntSeries tot = zero();
    IntSeries pc = zero();
    for (int m = 0; m <= N_; ++m) {
        if (m <= mmax) {
            std::vector<std::pair<Permutation, Permutation>> S;
            for (const auto& [a, b, mm] : sp)
                if (mm <= m) S.emplace_back(a, b);
            pc = pair_count(std::move(S));
        }
        long sign = (s_ > 0 || (m / 2) % 2 == 0) ? 1 : -1;
        tot += (pc * mpz_class(sign)).shifted(m);
    }
    h_memo_.emplace(rho, tot);
    return tot;
}

IntSeries Engine::P(const std::optional<Permutation>& pi) {
    std::lock_guard lock(mu_);
    return P_locked(pi);
}

IntSeries Engine::P_locked(const std::optional<Permutation>& pi) {
    if (pi && pi->empty()) return zero();
    if (auto it = p_memo_.find(pi); it != p_memo_.end()) return it->second;
    std::string key = pi ? "P" + pi->str() : "Pnone";
    if (!in_progress_.insert(key).second) throw std::logic_error("cyclic P recursion at " + key);

    Lin acc = Lin::value(zero());
    if (!pi) {
        // P = x P + 2 s x^2 P F + x^4 (sum_m msign(m) x^m) F^3.
        IntSeries f = F_unrestricted();
        IntSeries msum = zero();
        for (int m = 0; m <= N_; ++m) msum[m] = (s_ > 0 || (m / 2) % 2 == 0) ? 1 : -1;
        Lin self = Lin::self(N_);
        acc += self.shifted(1);
        acc += (self * Lin::value(f)).scaled(2 * s_).shifted(2);
        acc += Lin::value((msum * f * f * f).shifted(4));
    } else {
        auto look = [&](const Permutation& r) -> Lin {
            if (r == *pi) return Lin::self(N_);
            return Lin::value(P_locked(r));
        };
        auto Fv = [&](const Permutation& r) { return Lin::value(F_locked({r})); };
        const auto d = decompose(*pi);
        const int k = static_cast<int>(d.size());
        acc += look(beta(*pi)).shifted(1);
        Lin t2 = Lin::value(zero());
        IntSeries t4 = zero();
        for (int i = 1; i <= k; ++i) {
            Permutation ovi = overline(prefix(d, i)), ovp = overline(prefix(d, i - 1));
            Permutation suf = suffix(d, i - 1);
            Lin dp = look(ovi);
            dp -= look(ovp);
            t2 += dp * Fv(suf);
            Lin df = Fv(ovi);
            df -= Fv(ovp);
            t2 += df * look(suf);
            IntSeries dh = H(prefix(d, i));
            if (i > 1) dh -= H(prefix(d, i - 1));
            t4 += dh * F_locked({suf});
        }
        acc += t2.scaled(s_).shifted(2);
        acc += Lin::value(t4.shifted(4));
    }
    IntSeries r = solve(acc, "P");
    in_progress_.erase(key);
    p_memo_.emplace(pi, r);
    return r;
}

IntSeries Engine::Q(int k) {
    if (variant_ != Variant::Plus) throw std::invalid_argument("Q is defined for the plus variant only");
    if (k < 2) throw std::invalid_argument("Q needs k >= 2");
    std::lock_guard lock(mu_);
    return Q_locked(k);
}

IntSeries Engine::Q_locked(int k) {
    if (k == 0) return P_locked(std::nullopt);
    if (k <= 2) return zero();
    if (auto it = q_memo_.find(k); it != q_memo_.end()) return it->second;
    auto Fk = [&](int j) { return j > 0 ? F_locked({decreasing(j)}) : zero(); };
    auto Gk = [&](int j) { return j > 0 ? E_locked(decreasing(j), {}) : F_unrestricted(); };
    auto Pk = [&](int j) { return j > 0 ? P_locked(decreasing(j)) : P_locked(std::nullopt); };
    IntSeries Qm = Q_locked(k - 2);
    IntSeries F0 = Fk(k - 2), F1 = Fk(k), G0 = Gk(k - 2), G1 = Gk(k), P0 = Pk(k - 2), P1 = Pk(k);
    IntSeries mid = zero();
    for (int m = 0; m <= std::min(k - 3, N_); ++m) mid[m] = 1;
    Lin self = Lin::self(N_);
    Lin acc = self.shifted(1);
    Lin t2 = Lin::value(Qm * F1 + P0 * G1 + G0 * P1);
    t2 += Lin::value(F0) * self;
    acc += t2.shifted(2);
    acc += Lin::value((mid * (G0 * F0 * F1 * mpz_class(2) + G1 * F0 * F0)).shifted(4));
    IntSeries r = solve(acc, "Q");
    q_memo_.emplace(k, r);
    return r;
}

IntSeries Engine::evaluate(const GFQuery& q) {
    q.validate();
    if (q.variant != variant_ || q.N > N_) throw std::invalid_argument("query does not match the engine's variant/order");
    IntSeries r = [&]() -> IntSeries {
        switch (q.family) {
            case Family::F: {
                std::vector<Permutation> T;
                for (const auto& p : q.patterns) {
                    if (std::holds_alternative<EmptyPattern>(p)) T.push_back(Permutation{});
                    else if (auto* pp = std::get_if<Permutation>(&p)) T.push_back(*pp);
                }
                return F(T);
            }
            case Family::G: return G(std::get<Permutation>(q.patterns[0]));
            case Family::P: {
                const auto& p = q.patterns[0];
                if (std::holds_alternative<NoPattern>(p)) return P(std::nullopt);
                if (std::holds_alternative<EmptyPattern>(p)) return zero();
                return P(std::get<Permutation>(p));
            }
            case Family::Q: return Q(std::get<Permutation>(q.patterns[0]).size());
        }
        throw std::logic_error("unknown family");
    }();
    return r.truncated(q.N);
}

std::shared_ptr<Engine> shared_engine(Variant v, int N) {
    static std::mutex mu;
    static std::map<std::pair<Variant, int>, std::shared_ptr<Engine>> engines;
    std::lock_guard lock(mu);
    auto& e = engines[{v, N}];
    if (!e) e = std::make_shared<Engine>(v, N);
    return e;
}

}  // namespace invol
