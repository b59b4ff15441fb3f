#include "invol/verify/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "invol/chebyshev/chebyshev.hpp"
#include "invol/core/json_integer.hpp"
#include "invol/enumerate/enumerate.hpp"
#include "invol/motzkin/motzkin.hpp"
#include "invol/series/rational.hpp"

namespace invol {

namespace {

nlohmann::json diff_json(const std::optional<CoefficientDiff>& d) {
    if (!d) return nullptr;
    return {{"n", d->n}, {"q", d->q}, {"oracle", d->oracle}, {"formula", d->formula}};
}

std::optional<CoefficientDiff> diff_from_json(const nlohmann::json& j) {
    if (j.is_null()) return std::nullopt;
    return CoefficientDiff{j.at("n").get<int>(), j.at("q").get<int>(), j.at("oracle").get<std::string>(),
                           j.at("formula").get<std::string>()};
}

bool agrees(const PowerSeries& oracle, const PowerSeries& formula, int sign, int from) {
    const int top = std::min(oracle.order(), formula.order());
    for (int n = from; n <= top; ++n)
        if (!(formula[n] == (sign > 0 ? oracle[n] : -oracle[n]))) return false;
    return true;
}

std::optional<CoefficientDiff> first_diff(const PowerSeries& oracle, const PowerSeries& formula, int from) {
    const int top = std::min(oracle.order(), formula.order());
    for (int n = from; n <= top; ++n)
        if (!(formula[n] == oracle[n])) return CoefficientDiff{n, -1, oracle[n].str(), formula[n].str()};
    return std::nullopt;
}

mpz_class cell(const BivariateTable& t, int n, int q) {
    if (n >= static_cast<int>(t.size())) return 0;
    const auto& row = t[static_cast<std::size_t>(n)];
    return q < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(q)] : mpz_class(0);
}

nlohmann::json table_json(const BivariateTable& t, int N, int S) {
    nlohmann::json a = nlohmann::json::array();
    for (int n = 0; n <= N; ++n) {
        nlohmann::json row = nlohmann::json::array();
        for (int q = 0; q <= S; ++q) row.push_back(json_integer(cell(t, n, q)));
        a.push_back(std::move(row));
    }
    return a;
}

void judge_table(AuditReport& r, const BivariateTable& oracle, const BivariateTable& formula, int N, int S) {
    r.oracle = table_json(oracle, N, S);
    r.formula = table_json(formula, N, S);
    r.sign = 1;
    r.first_difference.reset();
    for (int n = 0; n <= N && !r.first_difference; ++n)
        for (int q = 0; q <= S; ++q)
            if (cell(oracle, n, q) != cell(formula, n, q)) {
                r.first_difference = CoefficientDiff{n, q, cell(oracle, n, q).get_str(), cell(formula, n, q).get_str()};
                break;
            }
    r.verdict = r.first_difference ? Verdict::Mismatch : Verdict::Match;
}

BivariateTable avoid3412_stat_table(Statistic s, int N) {
    RestrictionSpec spec;
    spec.avoid.push_back(Permutation::parse("3412"));
    return stat_gf(spec, s, N, true);
}

IntSeries from_sample(const SeriesSample& s, int N) {
    IntSeries out(N);
    for (int n = 0; n <= N; ++n) out[n] = s.coeffs[static_cast<std::size_t>(n)];
    return out;
}

PowerSeries poly_series(const Polynomial& p, int order) {
    return PowerSeries(p.coeffs(), std::max(order, 0));
}

nlohmann::json named_params(const CatalogEntry& e, const Params& p) {
    nlohmann::json j = nlohmann::json::object();
    for (std::size_t i = 0; i < p.size(); ++i) j[e.params[i].name] = p[i];
    return j;
}

// (unsigned + signed)/2 or (unsigned - signed)/2.
IntSeries parity_counts(const Permutation& pattern, bool even, int N) {
    RestrictionSpec spec;
    spec.avoid = {Permutation::parse("3412"), pattern};
    const auto u = count_series(spec, N, false);
    const auto s = count_series(spec, N, true);
    IntSeries out(N);
    for (int n = 0; n <= N; ++n) {
        const std::size_t i = static_cast<std::size_t>(n);
        const mpz_class v = even ? mpz_class(u.coeffs[i] + s.coeffs[i]) : mpz_class(u.coeffs[i] - s.coeffs[i]);
        out[n] = v / 2;
    }
    return out;
}

std::string layers_str(const std::vector<int>& l) {
    std::string s = "[";
    for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
    return s + "]";
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Match: return "match";
        case Verdict::SignFlipMatch: return "sign-flip-match";
        case Verdict::Mismatch: return "mismatch";
    }
    return "mismatch";
}

Verdict parse_verdict(std::string_view s) {
    if (s == "match") return Verdict::Match;
    if (s == "sign-flip-match") return Verdict::SignFlipMatch;
    if (s == "mismatch") return Verdict::Mismatch;
    throw std::invalid_argument("unknown verdict: " + std::string(s));
}

nlohmann::json to_json(const AuditReport& r) {
    return {{"subject", r.subject},
            {"params", r.params},
            {"form", r.form},
            {"oracle_source", r.oracle_source},
            {"oracle", r.oracle},
            {"formula", r.formula},
            {"verdict", verdict_name(r.verdict)},
            {"first_difference", diff_json(r.first_difference)},
            {"sign", r.sign},
            {"branch", r.branch},
            {"note", r.note}};
}

AuditReport audit_report_from_json(const nlohmann::json& j) {
    AuditReport r;
    r.subject = j.at("subject").get<std::string>();
    r.params = j.at("params");
    r.form = j.at("form").get<std::string>();
    r.oracle_source = j.at("oracle_source").get<std::string>();
    r.oracle = j.at("oracle");
    r.formula = j.at("formula");
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    r.first_difference = diff_from_json(j.at("first_difference"));
    r.sign = j.at("sign").get<int>();
    r.branch = j.at("branch").get<std::string>();
    r.note = j.at("note").get<std::string>();
    return r;
}

std::string markdown_table(const std::vector<AuditReport>& reports) {
    std::ostringstream out;
    out << "| subject | params | form | verdict | sign | branch | first difference | note |\n";
    out << "|---|---|---|---|---|---|---|---|\n";
    for (const auto& r : reports) {
        std::string diff = "-";
        if (r.first_difference) {
            const auto& d = *r.first_difference;
            diff = "n=" + std::to_string(d.n) + (d.q >= 0 ? " q=" + std::to_string(d.q) : "") + ": oracle " +
                   d.oracle + ", formula " + d.formula;
        }
        out << "| " << r.subject << " | " << r.params.dump() << " | " << r.form << " | " << verdict_name(r.verdict)
            << " | " << (r.sign > 0 ? "+1" : "-1") << " | " << (r.branch.empty() ? "-" : r.branch) << " | " << diff
            << " | " << r.note << " |\n";
    }
    return out.str();
}

void judge(AuditReport& r, const PowerSeries& oracle, const PowerSeries& formula, int from, bool allow_flip) {
    r.oracle = to_json(oracle);
    r.formula = to_json(formula);
    r.first_difference = first_diff(oracle, formula, from);
    if (!r.first_difference) {
        r.verdict = Verdict::Match;
        r.sign = 1;
    } else if (allow_flip && agrees(oracle, formula, -1, from)) {
        r.verdict = Verdict::SignFlipMatch;
        r.sign = -1;
    } else {
        r.verdict = Verdict::Mismatch;
        r.sign = 1;
    }
}

IntSeries reference_series(const Reference& ref, int N, int from) {
    if (ref.kind == Reference::Kind::Occurrence) {
        const int m = ref.pattern.size();
        if (!(ref.pattern == decreasing(m)))
            throw std::invalid_argument("occurrence references must use a decreasing pattern: " + ref.pattern.str());
        return path_occurrence_series(m, ref.r, N, true);
    }
    if (ref.queries.empty()) throw std::logic_error("catalog reference without queries");
    std::optional<IntSeries> first;
    for (GFQuery q : ref.queries) {
        q.N = N;
        IntSeries s = shared_engine(q.variant, N)->evaluate(q);
        if (!first) {
            first = std::move(s);
            continue;
        }
        for (int n = from; n <= N; ++n)
            if ((*first)[n] != s[n])
                throw std::logic_error("reference queries disagree at n = " + std::to_string(n) + ": " + ref.describe());
    }
    return *first;
}

AuditReport audit_catalog(const ClosedFormId& id, int N, FormChoice c) {
    const CatalogEntry& e = catalog_entry(id.id);
    if (!e.accepts(id.params)) throw std::invalid_argument("parameters outside the range of " + id.str());
    AuditReport r;
    r.subject = e.id;
    r.params = named_params(e, id.params);
    const bool corrected = c == FormChoice::Corrected && e.corrected.has_value();
    r.form = corrected ? "corrected" : "printed";
    const Reference ref = e.reference(id.params);
    r.oracle_source = ref.describe();
    const PowerSeries oracle = to_gaussian(reference_series(ref, N, e.from));
    if (corrected) r.note = e.correction_note;
    try {
        judge(r, oracle, e.formula(c).expand(id.params, N), e.from);
    } catch (const std::domain_error& ex) {
        // TranscriptionError and NonInvertible both derive from domain_error.
        r.oracle = to_json(oracle);
        r.formula = nlohmann::json::array();
        r.verdict = Verdict::Mismatch;
        r.first_difference.reset();
        r.note = std::string("closed form does not expand: ") + ex.what();
    }
    return r;
}

std::vector<AuditReport> audit_catalog_grid(int N, int bound, int max_weight, FormChoice c) {
    std::vector<AuditReport> out;
    for (const auto& e : catalog())
        for (const auto& p : parameter_grid(e, bound, max_weight)) out.push_back(audit_catalog({e.id, p}, N, c));
    return out;
}

AuditReport audit_cf(Statistic s, int N, int S) {
    AuditReport r;
    r.subject = std::string("cf-") + statistic_name(s);
    r.params = {{"N", N}, {"S", S}};
    r.form = "depth " + std::to_string(stable_cf_depth(N));
    r.oracle_source = "stat_gf over I(3412), signed";
    const BivariateSeries cf = involution_cf(statistic_specialization(s), 1, stable_cf_depth(N), N, S);
    judge_table(r, avoid3412_stat_table(s, N), to_table(cf, S), N, S);
    return r;
}

std::vector<AuditReport> audit_cf_closed_forms(int N, int S) {
    std::vector<AuditReport> out;
    auto run = [&](const std::string& subject, Statistic stat, const std::string& form, auto&& build) {
        AuditReport r;
        r.subject = subject;
        r.params = {{"N", N}, {"S", S}};
        r.form = form;
        r.oracle_source = std::string("stat_gf(") + statistic_name(stat) + ") over I(3412), signed";
        const BivariateTable oracle = avoid3412_stat_table(stat, N);
        try {
            judge_table(r, oracle, to_table(build(), S), N, S);
        } catch (const std::domain_error& ex) {
            r.oracle = table_json(oracle, N, S);
            r.verdict = Verdict::Mismatch;
            r.note = std::string("no power series expansion: ") + ex.what();
        }
        out.push_back(std::move(r));
    };
    for (auto b : {SqrtBranch::Plus, SqrtBranch::Minus}) {
        run("cf-closed-lrmax", Statistic::Lrmax, branch_name(b), [&] { return lrmax_closed_form(b, N, S); });
        if (out.back().verdict == Verdict::Match) out.back().branch = branch_name(b);
    }
    run("cf-closed-lrmax", Statistic::Lrmax, "corrected", [&] { return lrmax_closed_form_corrected(N, S); });
    out.back().note = "level 0 of the fraction is 1/(1 - xq), so the (2-q)(1-x) term becomes 2 - q - xq";
    for (auto b : {SqrtBranch::Plus, SqrtBranch::Minus}) {
        run("cf-closed-fix", Statistic::Fix, branch_name(b), [&] { return fix_closed_form(b, N, S); });
        if (out.back().verdict == Verdict::Match) out.back().branch = branch_name(b);
    }
    return out;
}

SignFitAudit audit_r_occurrence(Parity parity, ROccurrenceForm form, int max_r, int max_k, int N) {
    SignFitAudit a;
    a.subject = std::string("r-occurrence-") + parity_name(parity);
    const char* form_name = form == ROccurrenceForm::Printed ? "printed" : "derived";
    struct Raw {
        PowerSeries oracle, formula;
        bool eq, neg;
    };
    std::vector<Raw> raw;
    bool all_eq = true, all_neg = true;
    a.magnitudes_match = true;
    for (int k = 1; k <= max_k; ++k) {
        const int m = parity == Parity::Even ? 2 * k : 2 * k + 1;
        for (int r = 1; r <= max_r; ++r) {
            const PowerSeries oracle = to_gaussian(from_sample(occurrence_series(decreasing(m), r, N, true), N));
            for (int b : admissible_b(r, k, parity)) {
                AuditReport rep;
                rep.subject = a.subject;
                rep.params = {{"r", r}, {"k", k}, {"b", b}};
                rep.form = form_name;
                rep.oracle_source = "occurrence_series(" + decreasing(m).str() + ", r, signed)";
                Raw x{oracle, PowerSeries(N), false, false};
                try {
                    x.formula = r_occurrence_gf(r, k, parity, N, form, b);
                    x.eq = agrees(oracle, x.formula, 1, 0);
                    x.neg = agrees(oracle, x.formula, -1, 0);
                    judge(rep, oracle, x.formula);
                    for (int n = 0; n <= N; ++n) {
                        const GaussianInt& f = x.formula[n];
                        if (!f.is_real() || abs(f.re) != abs(oracle[n].re)) a.magnitudes_match = false;
                    }
                } catch (const std::domain_error& ex) {
                    rep.oracle = to_json(oracle);
                    rep.verdict = Verdict::Mismatch;
                    rep.note = std::string("closed form does not expand: ") + ex.what();
                    a.magnitudes_match = false;
                }
                all_eq = all_eq && x.eq;
                all_neg = all_neg && x.neg;
                raw.push_back(std::move(x));
                a.cases.push_back(std::move(rep));
            }
        }
    }
    a.fitted_sign = all_eq ? 1 : (all_neg ? -1 : 0);
    for (std::size_t i = 0; i < a.cases.size(); ++i) {
        auto& rep = a.cases[i];
        if (a.fitted_sign != 0) {
            rep.sign = a.fitted_sign;
            rep.verdict = a.fitted_sign > 0 ? Verdict::Match : Verdict::SignFlipMatch;
        } else if (rep.note.empty()) {
            rep.note = "no single global sign fits every case of this formula";
        }
    }
    return a;
}

std::vector<AuditReport> audit_determinants(int k) {
    std::vector<AuditReport> out;
    for (const auto& c : det_identity_audit(k)) {
        AuditReport r;
        r.subject = "det-" + c.identity;
        r.params = {{"k", k}};
        r.form = c.identity == "Buk-corrected" ? "corrected" : "printed";
        r.oracle_source = c.identity == "Auk" ? "det(I - A_k)" : "det(I - B_k)";
        const int order = std::max({c.lhs.degree(), c.det_b.degree(), c.det_c.degree(), 0});
        judge(r, poly_series(c.det_b, order), poly_series(c.lhs, order), 0, false);
        if (c.identity != "Auk" && !(c.det_b == c.det_c)) {
            r.verdict = Verdict::Mismatch;
            r.note = "det(I - B_k) and det(I - C_k) differ";
        } else if (c.identity != "Auk") {
            r.note = "det(I - C_k) equals det(I - B_k)";
        }
        if ((r.verdict == Verdict::Match) != c.equal) throw std::logic_error("determinant audit disagrees with det check");
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<AuditReport> audit_buk_paths(int k, int N) {
    if (k < 0) throw std::invalid_argument("audit_buk_paths needs k >= 0");
    const Polynomial corrected = wtilde(k) + wtilde(k - 1).shifted(2);
    std::vector<AuditReport> out;
    for (auto v : {BoundedVariant::N, BoundedVariant::O}) {
        const PolyMatrix t = identity_minus(transfer_matrix(matrix_for(v), k));
        for (int r = 0; r <= k; ++r)
            for (int s = 0; s <= k; ++s) {
                const BoundedPathQuery q{r, s, k, v};
                AuditReport rep;
                rep.subject = "buk-paths";
                rep.params = {{"k", k}, {"variant", bounded_variant_name(v)}, {"r", r}, {"s", s}};
                rep.form = "corrected";
                rep.oracle_source = "bounded_paths, signed";
                Polynomial num = minor(t, s, r);
                if ((r + s) % 2) num = -num;
                judge(rep, bounded_paths(q, N, true), RationalFunction(num, corrected).expand(N), 0, false);
                out.push_back(std::move(rep));
            }
    }
    return out;
}

SymmetryVariant parse_symmetry_variant(std::string_view s) {
    if (s == "minus") return SymmetryVariant::Minus;
    if (s == "even") return SymmetryVariant::Even;
    if (s == "odd") return SymmetryVariant::Odd;
    if (s == "plus") return SymmetryVariant::Plus;
    throw std::invalid_argument("variant must be minus, even, odd or plus: " + std::string(s));
}

const char* symmetry_variant_name(SymmetryVariant v) {
    switch (v) {
        case SymmetryVariant::Minus: return "minus";
        case SymmetryVariant::Even: return "even";
        case SymmetryVariant::Odd: return "odd";
        case SymmetryVariant::Plus: return "plus";
    }
    return "minus";
}

nlohmann::json to_json(const ConjectureCase& c) {
    nlohmann::json differing = nullptr;
    if (c.differing) differing = *c.differing;
    return {{"family", c.family},
            {"layers", c.layers},
            {"variant", c.variant},
            {"N", c.N},
            {"orderings", c.orderings},
            {"symmetric", c.symmetric},
            {"differing", differing},
            {"first_difference", diff_json(c.first_difference)}};
}

ConjectureCase conjecture_case_from_json(const nlohmann::json& j) {
    ConjectureCase c;
    c.family = j.at("family").get<std::string>();
    c.layers = j.at("layers").get<std::vector<int>>();
    c.variant = j.at("variant").get<std::string>();
    c.N = j.at("N").get<int>();
    c.orderings = j.at("orderings").get<std::vector<std::vector<int>>>();
    c.symmetric = j.at("symmetric").get<bool>();
    if (!j.at("differing").is_null()) c.differing = j.at("differing").get<std::vector<int>>();
    c.first_difference = diff_from_json(j.at("first_difference"));
    return c;
}

std::string markdown_table(const std::vector<ConjectureCase>& cases) {
    std::ostringstream out;
    out << "| family | variant | layers | orderings | N | symmetric | first difference |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (const auto& c : cases) {
        std::string diff = "-";
        if (c.first_difference)
            diff = layers_str(*c.differing) + " at n=" + std::to_string(c.first_difference->n) + ": " +
                   c.first_difference->oracle + " vs " + c.first_difference->formula;
        out << "| " << c.family << " | " << c.variant << " | " << layers_str(c.layers) << " | " << c.orderings.size()
            << " | " << c.N << " | " << (c.symmetric ? "yes" : "no") << " | " << diff << " |\n";
    }
    return out.str();
}

IntSeries layered_series(Family f, SymmetryVariant v, const std::vector<int>& layers, int N) {
    if (f != Family::F && f != Family::P) throw std::invalid_argument("layered symmetry covers families F and P only");
    const Permutation p = layered(layers);
    auto one = [&](Variant var) {
        auto e = shared_engine(var, N);
        return f == Family::F ? e->F(p) : e->P(p);
    };
    if (v == SymmetryVariant::Minus) return one(Variant::Minus);
    if (v == SymmetryVariant::Plus) return one(Variant::Plus);
    const IntSeries plus = one(Variant::Plus), minus = one(Variant::Minus);
    IntSeries out(N);
    for (int n = 0; n <= N; ++n) {
        const mpz_class t = v == SymmetryVariant::Even ? mpz_class(plus[n] + minus[n]) : mpz_class(plus[n] - minus[n]);
        if (!mpz_divisible_ui_p(t.get_mpz_t(), 2)) throw std::logic_error("plus and minus series differ in parity");
        out[n] = t / 2;
    }
    return out;
}

ConjectureCase compare_orderings(Family f, SymmetryVariant v, const std::vector<std::vector<int>>& orderings, int N) {
    if (orderings.empty()) throw std::invalid_argument("compare_orderings needs at least one ordering");
    ConjectureCase c;
    c.family = family_name(f);
    c.layers = orderings.front();
    c.variant = symmetry_variant_name(v);
    c.N = N;
    c.orderings = orderings;
    const IntSeries base = layered_series(f, v, orderings.front(), N);
    for (std::size_t i = 1; i < orderings.size() && c.symmetric; ++i) {
        const IntSeries other = layered_series(f, v, orderings[i], N);
        if (auto n = first_difference(base, other)) {
            c.symmetric = false;
            c.differing = orderings[i];
            c.first_difference = CoefficientDiff{*n, -1, base[*n].get_str(), other[*n].get_str()};
        }
    }
    return c;
}

std::vector<ConjectureCase> conjecture_layered_symmetry(SymmetryVariant v, int m, int max_weight, int N,
                                                        int max_layer) {
    if (m < 2) throw std::invalid_argument("layered symmetry needs m >= 2");
    if (max_layer < 0) max_layer = max_weight;
    std::vector<ConjectureCase> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int lo, int rem) -> void {
        if (static_cast<int>(cur.size()) == m) {
            std::vector<std::vector<int>> orderings;
            std::vector<int> p = cur;
            do orderings.push_back(p);
            while (std::next_permutation(p.begin(), p.end()));
            if (orderings.size() > 1) out.push_back(compare_orderings(Family::F, v, orderings, N));
            return;
        }
        const int left = m - static_cast<int>(cur.size()) - 1;
        for (int l = lo; l <= max_layer && l + left * l <= rem; ++l) {
            cur.push_back(l);
            self(self, l, rem - l);
            cur.pop_back();
        }
    };
    rec(rec, 1, max_weight);
    return out;
}

std::vector<AuditReport> equinumerosity_checks(int N, int max_k) {
    std::vector<AuditReport> out;
    for (int k = 1; k <= max_k; ++k)
        for (int odd = 0; odd < 2; ++odd) {
            const Permutation left = decreasing(2 * k + odd);
            const Permutation right = skew_sum(decreasing(k - 1), Permutation::parse(odd ? "132" : "231"));
            for (bool even : {true, false}) {
                AuditReport r;
                r.subject = odd ? "equinumerosity-[2k+1]" : "equinumerosity-[2k]";
                r.params = {{"k", k}, {"class", even ? "even" : "odd"}, {"left", left.str()}, {"right", right.str()}};
                r.form = "enumeration";
                r.oracle_source = "I_n(3412, " + left.str() + ")";
                r.note = "formula side: I_n(3412, " + right.str() + ")";
                judge(r, to_gaussian(parity_counts(left, even, N)), to_gaussian(parity_counts(right, even, N)), 0,
                      false);
                out.push_back(std::move(r));
            }
        }
    return out;
}

std::vector<std::string> audit_subjects() {
    std::vector<std::string> s = {"cf-inv", "cf-lrmax", "cf-rlmin", "cf-fix", "cf-closed", "r-even",
                                  "r-odd",  "det",      "buk-paths", "equinumerosity"};
    for (const auto& e : catalog()) s.push_back(e.id);
    return s;
}

std::vector<AuditReport> audit(std::string_view subject, const Params& params, int N, const AuditOptions& opt) {
    auto param = [&](std::size_t i, int fallback) { return i < params.size() ? params[i] : fallback; };
    if (subject.starts_with("cf-")) {
        if (subject == "cf-closed") return audit_cf_closed_forms(N, opt.q_degree);
        return {audit_cf(parse_statistic(subject.substr(3)), N, opt.q_degree)};
    }
    if (subject == "r-even" || subject == "r-odd") {
        auto a = audit_r_occurrence(subject == "r-even" ? Parity::Even : Parity::Odd, opt.r_form, param(0, 3),
                                    param(1, 2), N);
        return a.cases;
    }
    if (subject == "det") return audit_determinants(param(0, 1));
    if (subject == "buk-paths") return audit_buk_paths(param(0, 1), N);
    if (subject == "equinumerosity") return equinumerosity_checks(N, param(0, 4));
    return {audit_catalog({std::string(subject), params}, N, opt.form)};
}

}  // namespace invol
