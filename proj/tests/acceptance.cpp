// Acceptance suite. One line per criterion: "C<n> PASS|FAIL <detail>". Exit status 1 if any criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "invol/chebyshev/chebyshev.hpp"
#include "invol/core/permutation.hpp"
#include "invol/core/statistics.hpp"
#include "invol/enumerate/enumerate.hpp"
#include "invol/genfun/catalog.hpp"
#include "invol/genfun/engine.hpp"
#include "invol/motzkin/motzkin.hpp"
#include "invol/verify/verify.hpp"

using namespace invol;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
    std::ostringstream o;
    o.precision(2);
    o << std::fixed << s << "s";
    return o.str();
}

std::string join(const std::vector<std::string>& v, std::size_t limit = 6) {
    std::string out;
    for (std::size_t i = 0; i < v.size() && i < limit; ++i) out += (i ? "; " : "") + v[i];
    if (v.size() > limit) out += "; ... (" + std::to_string(v.size()) + " total)";
    return out;
}

std::vector<Permutation> patterns_up_to(int len) {
    std::vector<Permutation> out;
    for (int n = 1; n <= len; ++n) {
        std::vector<int> p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
        do out.emplace_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    return out;
}

// One pass over I_n, n <= N, tallying signed and unsigned sums for F, G, P and Q restrictions.
struct BruteTallies {
    int N = 0;
    std::vector<Permutation> patterns;
    // [family][pattern][variant][n]; variant 0 = plus, 1 = minus.
    std::map<char, std::vector<std::array<std::vector<mpz_class>, 2>>> t;
    std::array<std::vector<mpz_class>, 2> p_none;

    BruteTallies(std::vector<Permutation> pats, int N_) : N(N_), patterns(std::move(pats)) {
        for (char f : {'F', 'G', 'P', 'Q'}) {
            t[f].resize(patterns.size());
            for (auto& a : t[f])
                for (auto& v : a) v.assign(static_cast<std::size_t>(N) + 1, 0);
        }
        for (auto& v : p_none) v.assign(static_cast<std::size_t>(N) + 1, 0);
        const PatternMatcher m3412(Permutation::parse("3412"));
        std::vector<PatternMatcher> ms;
        for (const auto& p : patterns) ms.emplace_back(p);
        for (int n = 0; n <= N; ++n) {
            const auto un = static_cast<std::size_t>(n);
            for_each_involution(
                n,
                [&](std::span<const int> p) {
                    const auto c = m3412.count(p, 2);
                    if (c > 1) return;
                    const int s = sign(Permutation(std::vector<int>(p.begin(), p.end())));
                    if (c == 1) {
                        p_none[0][un] += 1;
                        p_none[1][un] += s;
                    }
                    for (std::size_t i = 0; i < ms.size(); ++i) {
                        const auto o = ms[i].count(p, 2);
                        auto add = [&](char f) {
                            t[f][i][0][un] += 1;
                            t[f][i][1][un] += s;
                        };
                        if (c == 0 && o == 0) add('F');
                        if (c == 0 && o == 1) add('G');
                        if (c == 1 && o == 0) add('P');
                        if (c == 1 && o == 1) add('Q');
                    }
                },
                N);
        }
    }

    const std::vector<mpz_class>& get(char f, std::size_t i, Variant v) const {
        return t.at(f)[i][v == Variant::Plus ? 0 : 1];
    }
};

bool same(const IntSeries& s, const std::vector<mpz_class>& want, int from = 0) {
    for (int n = from; n < static_cast<int>(want.size()); ++n)
        if (s[n] != want[static_cast<std::size_t>(n)]) return false;
    return true;
}

Outcome c1() {
    const auto t0 = Clock::now();
    RestrictionSpec spec;
    spec.avoid = {Permutation::parse("3412")};
    const auto s = count_series(spec, 12, false);
    std::vector<std::string> bad;
    std::string values;
    for (int n = 0; n <= 12; ++n) {
        const mpz_class m = motzkin_count(n);
        values += (n ? "," : "") + m.get_str();
        if (s.coeffs[static_cast<std::size_t>(n)] != m) bad.push_back("n=" + std::to_string(n));
    }
    const double secs = seconds_since(t0);
    Outcome o;
    o.pass = bad.empty() && secs < 10.0;
    o.detail = "motzkin " + values + " in " + fmt_seconds(secs) + (bad.empty() ? "" : " mismatch at " + join(bad));
    return o;
}

Outcome c2() {
    std::vector<std::string> bad;
    long checked = 0;
    for (int n = 0; n <= 10; ++n) {
        std::set<Permutation> images;
        for (const auto& path : motzkin_paths(n)) {
            const Permutation pi = phi(path);
            ++checked;
            if (!is_involution(pi) || contains(pi, Permutation::parse("3412")))
                bad.push_back("phi(" + path.str() + ") not in I(3412)");
            if (phi_inverse(pi) != path) bad.push_back("phi_inverse(phi(" + path.str() + "))");
            if (path_sign(path) != sign(pi)) bad.push_back("sign " + path.str());
            for (int k = 1; k <= n; ++k)
                if (tau_path(path, k) != mpz_class(static_cast<unsigned long>(PatternMatcher(decreasing(k)).count(pi.entries()))))
                    bad.push_back("tau_" + std::to_string(k) + " " + path.str());
            images.insert(pi);
        }
        long want = 0;
        for_each_involution(n, [&](std::span<const int> p) {
            want += !PatternMatcher(Permutation::parse("3412")).occurs_in(p);
        });
        if (static_cast<long>(images.size()) != want) bad.push_back("image size at n=" + std::to_string(n));
    }
    return {bad.empty(), std::to_string(checked) + " paths of length <= 10" + (bad.empty() ? "" : ": " + join(bad))};
}

Outcome c3() {
    const int N = 12;
    auto pats = patterns_up_to(4);
    const std::size_t base = pats.size();
    pats.push_back(decreasing(5));
    pats.push_back(decreasing(6));
    const auto t0 = Clock::now();
    const BruteTallies brute(pats, N);
    std::vector<std::string> bad;
    int compared = 0, unsupported = 0;
    for (auto v : {Variant::Plus, Variant::Minus}) {
        auto e = shared_engine(v, N);
        const std::string vs = variant_name(v);
        for (std::size_t i = 0; i < pats.size(); ++i) {
            const std::string ps = pats[i].str();
            auto cmp = [&](char f, const std::function<IntSeries()>& eval) {
                try {
                    ++compared;
                    if (!same(eval(), brute.get(f, i, v))) bad.push_back(std::string(1, f) + vs + " " + ps);
                } catch (const std::invalid_argument&) {
                    --compared;
                    ++unsupported;
                }
            };
            cmp('F', [&] { return e->F(pats[i]); });
            cmp('G', [&] { return e->G(pats[i]); });
            cmp('P', [&] { return e->P(pats[i]); });
        }
        ++compared;
        if (!same(e->P(std::nullopt), brute.p_none[v == Variant::Plus ? 0 : 1])) bad.push_back("P" + vs + " none");
    }
    // Q is defined for the plus variant and [k], k >= 2.
    auto plus = shared_engine(Variant::Plus, N);
    for (int k = 2; k <= 6; ++k) {
        const auto it = std::find(pats.begin(), pats.end(), decreasing(k));
        ++compared;
        if (!same(plus->Q(k), brute.get('Q', static_cast<std::size_t>(it - pats.begin()), Variant::Plus)))
            bad.push_back("Q+ [" + std::to_string(k) + "]");
    }
    std::ostringstream d;
    d << compared << " series (" << base << " patterns of length <= 4 plus [5],[6]; " << unsupported
      << " unsupported) through n=" << N << " in " << fmt_seconds(seconds_since(t0));
    if (!bad.empty()) d << "; mismatches: " << join(bad);
    return {bad.empty() && unsupported == 0, d.str()};
}

Outcome c4() {
    const auto reports = audit_catalog_grid(24, 5, 8, FormChoice::Printed);
    int match = 0, flip = 0;
    std::set<std::string> failing;
    for (const auto& r : reports) {
        match += r.verdict == Verdict::Match;
        flip += r.verdict == Verdict::SignFlipMatch;
        if (r.verdict != Verdict::Match) failing.insert(r.subject);
    }
    const auto corrected = audit_catalog_grid(24, 5, 8, FormChoice::Corrected);
    std::set<std::string> still;
    for (const auto& r : corrected)
        if (r.verdict != Verdict::Match) still.insert(r.subject);
    std::ostringstream d;
    d << reports.size() << " printed cases: " << match << " match, " << flip << " sign-flip, "
      << reports.size() - static_cast<std::size_t>(match + flip) << " mismatch (" << failing.size()
      << " ids); corrected forms leave " << still.size() << " ids failing: "
      << join(std::vector<std::string>(still.begin(), still.end()), 8);
    return {failing.empty(), d.str()};
}

Outcome c5() {
    const int N = 12;
    const std::vector<Permutation> pats{Permutation::parse("321"), Permutation::parse("4321")};
    const BruteTallies brute(pats, N);
    struct Row {
        const char* id;
        char family;
        std::size_t pattern;
    };
    std::vector<std::string> bad;
    for (const Row& row : {Row{"count-321", 'P', 0}, Row{"count-4321", 'P', 1}, Row{"count-Q4321", 'Q', 1}}) {
        const auto& entry = catalog_entry(row.id);
        const auto formula = closed_form({row.id, {}}, N);
        const auto& want = brute.get(row.family, row.pattern, Variant::Plus);
        for (int n = entry.from; n <= N; ++n)
            if (formula[n] != GaussianInt(want[static_cast<std::size_t>(n)]))
                bad.push_back(std::string(row.id) + " n=" + std::to_string(n) + " formula " + formula[n].str() +
                              " brute " + want[static_cast<std::size_t>(n)].get_str());
    }
    return {bad.empty(), bad.empty() ? "count-321 n=4..12, count-4321 n=5..12, count-Q4321 n=6..12 match brute force"
                                     : join(bad)};
}

Outcome c6() {
    const int N = 12, S = 12;
    std::vector<std::string> parts, bad;
    for (auto s : {Statistic::Inv, Statistic::Lrmax, Statistic::Rlmin, Statistic::Fix}) {
        const auto r = audit_cf(s, N, S);
        if (r.verdict != Verdict::Match) bad.push_back(r.subject);
    }
    parts.push_back(bad.empty() ? "cf inv/lrmax/rlmin/fix match" : "cf mismatches: " + join(bad));
    std::map<std::string, std::string> chosen;
    for (const auto& r : audit_cf_closed_forms(N, S)) {
        std::string what = r.subject + " " + r.form + ": " + verdict_name(r.verdict);
        if (r.first_difference)
            what += " (n=" + std::to_string(r.first_difference->n) + " q=" + std::to_string(r.first_difference->q) +
                    " oracle " + r.first_difference->oracle + " formula " + r.first_difference->formula + ")";
        else if (r.verdict != Verdict::Match && !r.note.empty())
            what += " (" + r.note + ")";
        parts.push_back(what);
        if (r.form != "corrected" && r.verdict == Verdict::Match) chosen[r.subject] = r.branch;
    }
    const bool pass = bad.empty() && chosen.count("cf-closed-lrmax") && chosen.count("cf-closed-fix");
    return {pass, join(parts, 16)};
}

Outcome c7() {
    std::vector<std::string> bad;
    for (int k = 0; k <= 10; ++k)
        for (int l = 0; l <= 10; ++l)
            for (int w = 0; w <= 10; ++w)
                if (!chebysum_check(k, l, w))
                    bad.push_back("chebysum " + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(w));
    std::string buk_verdict;
    for (int k = 0; k <= 8; ++k)
        for (const auto& r : audit_determinants(k)) {
            if (r.subject == "det-Auk" && r.verdict != Verdict::Match) bad.push_back("Auk k=" + std::to_string(k));
            if (r.subject == "det-Buk-corrected" && r.verdict != Verdict::Match)
                bad.push_back("Buk corrected k=" + std::to_string(k));
            if (r.subject == "det-Buk-printed" && buk_verdict.empty())
                buk_verdict = std::string(verdict_name(r.verdict)) + " at k=" + std::to_string(k);
        }
    for (int k = 0; k <= 4; ++k)
        for (const auto& r : audit_buk_paths(k, 12))
            if (r.verdict != Verdict::Match) bad.push_back("buk-paths k=" + std::to_string(k) + " " + r.params.dump());
    std::string d = "chebysum k,l,w <= 10; Auk k <= 8; printed Buk: " + buk_verdict +
                    "; corrected Buk holds for k <= 8 and matches bounded paths (N,O) for k <= 4, n <= 12";
    if (!bad.empty()) d += "; failures: " + join(bad);
    return {bad.empty() && !buk_verdict.empty(), d};
}

Outcome c8() {
    std::vector<std::string> parts;
    bool pass = true;
    for (auto p : {Parity::Even, Parity::Odd}) {
        const auto a = audit_r_occurrence(p, ROccurrenceForm::Printed, 3, 2, 12);
        const auto d = audit_r_occurrence(p, ROccurrenceForm::Derived, 3, 2, 12);
        pass = pass && a.passed();
        parts.push_back(a.subject + " printed: sign " + std::to_string(a.fitted_sign) + ", magnitudes " +
                        (a.magnitudes_match ? "match" : "differ") + " over " + std::to_string(a.cases.size()) +
                        " cases; derived: sign " + std::to_string(d.fitted_sign) + ", magnitudes " +
                        (d.magnitudes_match ? "match" : "differ"));
    }
    return {pass, join(parts)};
}

Outcome c9() {
    const auto t0 = Clock::now();
    std::vector<std::string> parts, bad;
    for (auto v : {SymmetryVariant::Minus, SymmetryVariant::Even, SymmetryVariant::Odd}) {
        const auto cases = conjecture_layered_symmetry(v, 3, 14, 24, 6);
        int asym = 0;
        for (const auto& c : cases)
            if (!c.symmetric) {
                ++asym;
                bad.push_back(std::string(symmetry_variant_name(v)) + " " + c.family);
            }
        parts.push_back(std::string(symmetry_variant_name(v)) + ": " + std::to_string(cases.size()) + " multisets, " +
                        std::to_string(asym) + " asymmetric");
        if (cases.empty()) bad.push_back(std::string(symmetry_variant_name(v)) + " empty sweep");
    }
    for (auto v : {SymmetryVariant::Plus, SymmetryVariant::Minus}) {
        const auto c = compare_orderings(Family::P, v, {{2, 1, 1}, {1, 2, 1}}, 24);
        if (c.symmetric || !c.first_difference) {
            bad.push_back(std::string("P") + symmetry_variant_name(v) + " [2,1,1] vs [1,2,1] agree");
            continue;
        }
        parts.push_back(std::string("P ") + symmetry_variant_name(v) + " [2,1,1] vs [1,2,1] first differ at n=" +
                        std::to_string(c.first_difference->n) + " (" + c.first_difference->oracle + " vs " +
                        c.first_difference->formula + ")");
    }
    const double secs = seconds_since(t0);
    parts.push_back(fmt_seconds(secs));
    if (!bad.empty()) parts.push_back("failures: " + join(bad));
    return {bad.empty() && secs < 600.0, join(parts, 8)};
}

Outcome c10() {
    std::vector<std::string> bad;
    int total = 0;
    for (const auto& r : equinumerosity_checks(12, 4)) {
        ++total;
        if (r.verdict == Verdict::Match) continue;
        std::string what = r.subject + " k=" + r.params["k"].dump() + " " + r.params.value("class", "");
        if (r.first_difference)
            what += " n=" + std::to_string(r.first_difference->n) + " (" + r.first_difference->oracle + " vs " +
                    r.first_difference->formula + ")";
        bad.push_back(what);
    }
    return {bad.empty(), std::to_string(total) + " comparisons" + (bad.empty() ? " equal" : "; unequal: " + join(bad, 10))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int criterion = 0;
    app.add_option("--criterion", criterion, "run one criterion (1-10); all when omitted")->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::function<Outcome()>> all{c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
    bool ok = true;
    for (int i = 1; i <= 10; ++i) {
        if (criterion && criterion != i) continue;
        Outcome o;
        try {
            o = all[static_cast<std::size_t>(i - 1)]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        ok = ok && o.pass;
        std::cout << "C" << i << ' ' << (o.pass ? "PASS" : "FAIL") << ' ' << o.detail << std::endl;
    }
    return ok ? 0 : 1;
}
