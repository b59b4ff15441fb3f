#include "invol/enumerate/enumerate.hpp"
#include "invol/core/json_integer.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace invol {

void RestrictionSpec::validate() const {
    auto check = [](const Permutation& p) {
        if (p.empty()) throw std::invalid_argument("restriction patterns must be nonempty");
    };
    for (const auto& p : avoid) check(p);
    for (const auto& p : exactly_once) {
        check(p);
        if (std::find(avoid.begin(), avoid.end(), p) != avoid.end())
            throw std::invalid_argument("pattern both avoided and required exactly once: " + p.str());
    }
    if (exactly_r) {
        check(exactly_r->first);
        if (exactly_r->second < 0) throw std::invalid_argument("exactly_r needs r >= 0");
    }
}

std::string RestrictionSpec::describe() const {
    std::ostringstream os;
    os << "avoid{";
    for (std::size_t i = 0; i < avoid.size(); ++i) os << (i ? "," : "") << avoid[i].str();
    os << "} once{";
    for (std::size_t i = 0; i < exactly_once.size(); ++i) os << (i ? "," : "") << exactly_once[i].str();
    os << "}";
    if (exactly_r) os << " exactly(" << exactly_r->first.str() << "," << exactly_r->second << ")";
    return os.str();
}

nlohmann::json to_json(const RestrictionSpec& spec) {
    auto arr = [](const std::vector<Permutation>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& p : v) a.push_back(p.entries());
        return a;
    };
    nlohmann::json j{{"avoid", arr(spec.avoid)}, {"exactly_once", arr(spec.exactly_once)}};
    if (spec.exactly_r) j["exactly_r"] = {{"pattern", spec.exactly_r->first.entries()}, {"r", spec.exactly_r->second}};
    return j;
}

nlohmann::json to_json(const SeriesSample& s) {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& v : s.coeffs) c.push_back(json_integer(v));
    return {{"spec", to_json(s.spec)}, {"signed", s.is_signed}, {"coeffs", c}};
}

std::string to_csv(const SeriesSample& s) {
    std::ostringstream os;
    os << "n,coeff\n";
    for (std::size_t n = 0; n < s.coeffs.size(); ++n) os << n << ',' << s.coeffs[n].get_str() << '\n';
    return os.str();
}

namespace {

void check_cap(int n, int cap) {
    if (n < 0) throw std::invalid_argument("length must be >= 0");
    if (n > cap) throw CapExceeded("length " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

// p[i] == 0 marks an unassigned position; pairs counts 2-cycles so sign = (-1)^pairs.
template <class Visit>
void gen_rec(std::vector<int>& p, int m, int pairs, Visit& visit) {
    while (m >= 1 && p[static_cast<std::size_t>(m - 1)] != 0) --m;
    if (m == 0) {
        visit(p, pairs);
        return;
    }
    p[static_cast<std::size_t>(m - 1)] = m;
    gen_rec(p, m - 1, pairs, visit);
    for (int j = m - 1; j >= 1; --j) {
        if (p[static_cast<std::size_t>(j - 1)] != 0) continue;
        p[static_cast<std::size_t>(m - 1)] = j;
        p[static_cast<std::size_t>(j - 1)] = m;
        gen_rec(p, m - 1, pairs + 1, visit);
        p[static_cast<std::size_t>(j - 1)] = 0;
    }
    p[static_cast<std::size_t>(m - 1)] = 0;
}

// Subtree of the generation tree where n maps to `image` (image == n means fixed).
template <class Visit>
void gen_branch(int n, int image, Visit& visit) {
    std::vector<int> p(static_cast<std::size_t>(n), 0);
    if (n == 0) {
        visit(p, 0);
        return;
    }
    p[static_cast<std::size_t>(n - 1)] = image;
    int pairs = 0;
    if (image != n) {
        p[static_cast<std::size_t>(image - 1)] = n;
        pairs = 1;
    }
    gen_rec(p, n - 1, pairs, visit);
}

struct Tally {
    std::vector<std::int64_t> c;
};

}  // namespace

void for_each_involution(int n, const std::function<void(std::span<const int>)>& visit, int cap) {
    check_cap(n, cap);
    auto v = [&](const std::vector<int>& p, int) { visit(p); };
    if (n == 0) {
        gen_branch(0, 0, v);
        return;
    }
    for (int image = n; image >= 1; --image) gen_branch(n, image, v);
}

std::vector<Permutation> involutions(int n, int cap) {
    std::vector<Permutation> out;
    for_each_involution(n, [&](std::span<const int> p) { out.emplace_back(std::vector<int>(p.begin(), p.end())); }, cap);
    return out;
}

mpz_class involution_count(int n) {
    mpz_class a = 1, b = 1;  // I_0, I_1
    if (n == 0) return a;
    for (int m = 2; m <= n; ++m) {
        mpz_class c = b + (m - 1) * a;
        a = b;
        b = c;
    }
    return b;
}

RestrictionFilter::RestrictionFilter(const RestrictionSpec& spec) {
    spec.validate();
    for (const auto& p : spec.avoid) avoid_.emplace_back(p);
    for (const auto& p : spec.exactly_once) once_.emplace_back(p);
    if (spec.exactly_r) exact_.emplace(PatternMatcher(spec.exactly_r->first), spec.exactly_r->second);
}

bool RestrictionFilter::accepts(std::span<const int> p) const {
    for (const auto& m : avoid_)
        if (m.occurs_in(p)) return false;
    for (const auto& m : once_)
        if (m.count(p, 2) != 1) return false;
    if (exact_) {
        const auto r = static_cast<std::uint64_t>(exact_->second);
        if (exact_->first.count(p, r + 1) != r) return false;
    }
    return true;
}

namespace {

std::vector<mpz_class> to_mpz(const std::vector<std::int64_t>& v) {
    std::vector<mpz_class> out;
    for (auto x : v) out.emplace_back(static_cast<long>(x));
    return out;
}

std::vector<std::int64_t> tally_series(const RestrictionFilter& filter, int N, bool is_signed, bool parallel) {
    std::vector<std::int64_t> total(static_cast<std::size_t>(N) + 1, 0);
    for (int n = 0; n <= N; ++n) {
        std::int64_t acc = 0;
        auto visit = [&](const std::vector<int>& p, int pairs, std::int64_t& sink) {
            if (filter.accepts(p)) sink += (is_signed && (pairs & 1)) ? -1 : 1;
        };
        if (n == 0) {
            std::int64_t s = 0;
            auto v = [&](const std::vector<int>& p, int pairs) { visit(p, pairs, s); };
            gen_branch(0, 0, v);
            acc = s;
        } else if (parallel) {
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : acc)
            for (int image = 1; image <= n; ++image) {
                std::int64_t s = 0;
                auto v = [&](const std::vector<int>& p, int pairs) { visit(p, pairs, s); };
                gen_branch(n, image, v);
                acc += s;
            }
        } else {
            for (int image = 1; image <= n; ++image) {
                std::int64_t s = 0;
                auto v = [&](const std::vector<int>& p, int pairs) { visit(p, pairs, s); };
                gen_branch(n, image, v);
                acc += s;
            }
        }
        total[static_cast<std::size_t>(n)] = acc;
    }
    return total;
}

}  // namespace

SeriesSample count_series(const RestrictionSpec& spec, int N, bool is_signed, int cap) {
    check_cap(N, cap);
    RestrictionFilter f(spec);
    return {spec, is_signed, to_mpz(tally_series(f, N, is_signed, true))};
}

SeriesSample count_series_serial(const RestrictionSpec& spec, int N, bool is_signed, int cap) {
    check_cap(N, cap);
    RestrictionFilter f(spec);
    return {spec, is_signed, to_mpz(tally_series(f, N, is_signed, false))};
}

BivariateTable stat_gf(const RestrictionSpec& spec, Statistic stat, int N, bool is_signed, int cap) {
    check_cap(N, cap);
    RestrictionFilter f(spec);
    BivariateTable table(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        const int width = stat == Statistic::Inv ? n * (n - 1) / 2 + 1 : n + 1;
        std::vector<std::int64_t> row(static_cast<std::size_t>(width), 0);
        for_each_involution(n, [&](std::span<const int> p) {
            if (!f.accepts(p)) return;
            Permutation perm(std::vector<int>(p.begin(), p.end()));
            const int s = statistic_value(perm, stat);
            row[static_cast<std::size_t>(s)] += (is_signed && sign(perm) < 0) ? -1 : 1;
        }, cap);
        table[static_cast<std::size_t>(n)] = to_mpz(row);
    }
    return table;
}

SeriesSample occurrence_series(const Permutation& sigma, int r, int N, bool is_signed, int cap) {
    RestrictionSpec spec;
    spec.avoid.push_back(Permutation{3, 4, 1, 2});
    spec.exactly_r = std::make_pair(sigma, r);
    return count_series(spec, N, is_signed, cap);
}

}  // namespace invol
