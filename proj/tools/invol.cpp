#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "invol/core/statistics.hpp"
#include "invol/enumerate/enumerate.hpp"
#include "invol/genfun/catalog.hpp"
#include "invol/genfun/engine.hpp"
#include "invol/motzkin/motzkin.hpp"
#include "invol/series/continued_fraction.hpp"
#include "invol/verify/verify.hpp"

using namespace invol;

namespace {

enum Exit { kOk = 0, kUsage = 1, kCap = 2, kAuditMismatch = 3 };

struct Common {
    std::string format = "text";
    int N = 12;
    int cap = kDefaultCap;
};

std::string join(const std::vector<std::string>& v, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

template <class Seq>
std::string series_text(const Seq& coeffs) {
    std::vector<std::string> parts;
    for (const auto& c : coeffs) {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, mpz_class>) parts.push_back(c.get_str());
        else parts.push_back(c.str());
    }
    return join(parts);
}

template <class Seq>
std::string series_csv(const Seq& coeffs) {
    std::ostringstream os;
    os << "n,coeff\n";
    std::size_t n = 0;
    for (const auto& c : coeffs) {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, mpz_class>) os << n++ << ',' << c.get_str() << '\n';
        else os << n++ << ",\"" << c.str() << "\"\n";
    }
    return os.str();
}

std::string table_csv(const BivariateTable& t) {
    std::ostringstream os;
    os << "n,q,coeff\n";
    for (std::size_t n = 0; n < t.size(); ++n)
        for (std::size_t q = 0; q < t[n].size(); ++q)
            if (t[n][q] != 0) os << n << ',' << q << ',' << t[n][q].get_str() << '\n';
    return os.str();
}

nlohmann::json table_json(const BivariateTable& t) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& row : t) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row) r.push_back(json_integer(v));
        a.push_back(std::move(r));
    }
    return a;
}

std::string table_text(const BivariateTable& t) {
    std::ostringstream os;
    for (std::size_t n = 0; n < t.size(); ++n) {
        os << "n=" << n << ':';
        for (const auto& v : t[n]) os << ' ' << v.get_str();
        os << '\n';
    }
    return os.str();
}

void check_cap(const Common& c) {
    if (c.N < 0) throw std::invalid_argument("--N must be >= 0");
    if (c.N > c.cap) throw CapExceeded("N = " + std::to_string(c.N) + " exceeds cap " + std::to_string(c.cap));
}

Params parse_params(const std::string& s) {
    Params p;
    if (s.empty()) return p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad parameter list: " + s);
        p.push_back(v);
    }
    return p;
}

std::vector<Permutation> parse_patterns(const std::vector<std::string>& v) {
    std::vector<Permutation> out;
    for (const auto& s : v) out.push_back(Permutation::parse(s));
    return out;
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--N", c.N, "largest length computed");
    sub->add_option("--cap", c.cap, "largest length brute force may enumerate");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generating functions for 3412-avoiding involutions"};
    app.require_subcommand(1);
    Common common;
    bool strict = false;

    // enumerate
    auto* en = app.add_subcommand("enumerate", "brute-force series of a restriction");
    add_common(en, common);
    std::vector<std::string> avoid, once;
    std::string exactly;
    bool is_signed = false;
    std::string stat;
    en->add_option("--avoid", avoid, "patterns to avoid");
    en->add_option("--once", once, "patterns contained exactly once");
    en->add_option("--exactly", exactly, "PATTERN:R, contained exactly R times");
    en->add_flag("--signed", is_signed, "weight by sign");
    en->add_option("--stat", stat, "inv, lrmax, rlmin or fix: print the bivariate table");

    // series
    auto* se = app.add_subcommand("series", "engine series of a generating function");
    add_common(se, common);
    std::string family = "F", variant = "plus";
    std::vector<std::string> patterns;
    se->add_option("--family", family, "F, G, P or Q");
    se->add_option("--variant", variant, "plus or minus");
    se->add_option("--pattern", patterns, "pattern arguments; none and empty are special");

    // closed-form
    auto* cfm = app.add_subcommand("closed-form", "expand a catalog closed form");
    add_common(cfm, common);
    std::string id, params_text, form = "printed";
    bool list = false;
    cfm->add_option("--id", id, "catalog id");
    cfm->add_option("--params", params_text, "comma-separated parameters");
    cfm->add_option("--form", form, "printed or corrected")->check(CLI::IsMember({"printed", "corrected"}));
    cfm->add_flag("--list", list, "list catalog ids");

    // cf
    auto* cf = app.add_subcommand("cf", "continued fraction of a signed statistic generating function");
    add_common(cf, common);
    std::string cf_stat = "inv", closed;
    int q_degree = 12, depth = 0;
    cf->add_option("--stat", cf_stat, "inv, lrmax, rlmin or fix");
    cf->add_option("--q-degree", q_degree, "largest power of q kept");
    cf->add_option("--depth", depth, "fraction depth; 0 picks a depth exact through N");
    cf->add_option("--closed", closed, "expand a closed form instead: +sqrt, -sqrt or corrected")
        ->check(CLI::IsMember({"+sqrt", "-sqrt", "corrected"}));

    // bijection
    auto* bi = app.add_subcommand("bijection", "Motzkin path to involution correspondence");
    add_common(bi, common);
    std::string path, perm;
    bi->add_option("--path", path, "path over U, D, L");
    bi->add_option("--perm", perm, "involution avoiding 3412");

    // audit
    auto* au = app.add_subcommand("audit", "compare closed forms with oracles");
    add_common(au, common);
    std::string subject, au_params, r_form = "printed";
    bool subjects = false;
    au->add_option("--subject", subject, "catalog id or one of the named audits");
    au->add_option("--params", au_params, "comma-separated parameters");
    au->add_option("--form", form, "printed or corrected")->check(CLI::IsMember({"printed", "corrected"}));
    au->add_option("--r-form", r_form, "printed or derived")->check(CLI::IsMember({"printed", "derived"}));
    au->add_option("--q-degree", q_degree, "largest power of q kept");
    au->add_flag("--strict", strict, "exit 3 on any mismatch");
    au->add_flag("--list", subjects, "list audit subjects");

    // conjecture
    auto* co = app.add_subcommand("conjecture", "layered symmetry sweeps");
    add_common(co, common);
    std::string sym = "minus", co_family = "F";
    int m = 3, max_weight = 8, max_layer = -1;
    std::vector<std::string> orderings;
    co->add_option("--variant", sym, "minus, even, odd or plus");
    co->add_option("--family", co_family, "F or P");
    co->add_option("--m", m, "number of layers");
    co->add_option("--max-weight", max_weight, "largest layer sum");
    co->add_option("--max-layer", max_layer, "largest layer size");
    co->add_option("--orderings", orderings, "explicit layer vectors such as 2,1,1 1,2,1");
    co->add_flag("--strict", strict, "exit 3 on any asymmetry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    const Common& c = common;
    try {
        if (*en) {
            check_cap(c);
            RestrictionSpec spec;
            spec.avoid = parse_patterns(avoid);
            spec.exactly_once = parse_patterns(once);
            if (!exactly.empty()) {
                const auto colon = exactly.find(':');
                if (colon == std::string::npos) throw std::invalid_argument("--exactly needs PATTERN:R");
                spec.exactly_r = {Permutation::parse(exactly.substr(0, colon)), std::stoi(exactly.substr(colon + 1))};
            }
            spec.validate();
            if (!stat.empty()) {
                const auto t = stat_gf(spec, parse_statistic(stat), c.N, is_signed, c.cap);
                if (c.format == "json")
                    print_json({{"spec", to_json(spec)}, {"stat", stat}, {"signed", is_signed}, {"table", table_json(t)}});
                else if (c.format == "csv") std::cout << table_csv(t);
                else std::cout << table_text(t);
                return kOk;
            }
            const auto s = count_series(spec, c.N, is_signed, c.cap);
            if (c.format == "json") print_json(to_json(s));
            else if (c.format == "csv") std::cout << to_csv(s);
            else std::cout << series_text(s.coeffs) << '\n';
            return kOk;
        }
        if (*se) {
            GFQuery q;
            q.family = parse_family(family);
            q.variant = parse_variant(variant);
            for (const auto& p : patterns) q.patterns.push_back(parse_pattern_arg(p));
            q.N = c.N;
            q.validate();
            const IntSeries s = shared_engine(q.variant, q.N)->evaluate(q);
            if (c.format == "json") print_json(to_json(q, s));
            else if (c.format == "csv") std::cout << series_csv(s.coeffs());
            else std::cout << series_text(s.coeffs()) << '\n';
            return kOk;
        }
        if (*cfm) {
            if (list) {
                for (const auto& e : catalog()) std::cout << e.id << '\t' << e.statement << '\n';
                return kOk;
            }
            if (id.empty()) throw std::invalid_argument("--id is required");
            const ClosedFormId cid{id, parse_params(params_text)};
            const FormChoice choice = form == "corrected" ? FormChoice::Corrected : FormChoice::Printed;
            const PowerSeries s = closed_form(cid, c.N, choice);
            if (c.format == "json") {
                nlohmann::json j{{"id", id}, {"params", cid.params}, {"form", form}, {"N", c.N}, {"coeffs", to_json(s)}};
                if (auto r = closed_form_rational(cid, choice)) j["rational"] = r->str();
                print_json(j);
            } else if (c.format == "csv") {
                std::cout << series_csv(s.coeffs());
            } else {
                std::cout << series_text(s.coeffs()) << '\n';
            }
            return kOk;
        }
        if (*cf) {
            check_cap(c);
            const Statistic st = parse_statistic(cf_stat);
            BivariateSeries s;
            if (closed.empty()) {
                s = involution_cf(statistic_specialization(st), 1, depth > 0 ? depth : stable_cf_depth(c.N), c.N, q_degree);
            } else if (st == Statistic::Fix) {
                if (closed == "corrected") throw std::invalid_argument("the fix closed form has no corrected variant");
                s = fix_closed_form(closed == "+sqrt" ? SqrtBranch::Plus : SqrtBranch::Minus, c.N, q_degree);
            } else if (st == Statistic::Lrmax || st == Statistic::Rlmin) {
                s = closed == "corrected" ? lrmax_closed_form_corrected(c.N, q_degree)
                                          : lrmax_closed_form(closed == "+sqrt" ? SqrtBranch::Plus : SqrtBranch::Minus,
                                                              c.N, q_degree);
            } else {
                throw std::invalid_argument("closed forms exist for lrmax, rlmin and fix only");
            }
            const BivariateTable t = to_table(s, q_degree);
            if (c.format == "json")
                print_json({{"stat", cf_stat}, {"N", c.N}, {"q_degree", q_degree}, {"table", table_json(t)}});
            else if (c.format == "csv") std::cout << table_csv(t);
            else std::cout << table_text(t);
            return kOk;
        }
        if (*bi) {
            if (path.empty() == perm.empty()) throw std::invalid_argument("give exactly one of --path and --perm");
            MotzkinPath p;
            Permutation pi;
            if (!path.empty()) {
                p = MotzkinPath::parse(path);
                pi = phi(p);
            } else {
                pi = Permutation::parse(perm);
                p = phi_inverse(pi);
            }
            if (c.format == "json") {
                std::vector<std::string> taus;
                for (int k = 1; k <= p.size(); ++k) taus.push_back(tau_path(p, k).get_str());
                print_json({{"path", p.str()}, {"perm", pi.str()}, {"sign", path_sign(p)}, {"tau", taus}});
            } else if (c.format == "csv") {
                std::cout << "path,perm,sign\n" << p.str() << ',' << pi.str() << ',' << path_sign(p) << '\n';
            } else {
                std::cout << (path.empty() ? p.str() : pi.str()) << '\n';
            }
            return kOk;
        }
        if (*au) {
            if (subjects) {
                for (const auto& s : audit_subjects()) std::cout << s << '\n';
                return kOk;
            }
            if (subject.empty()) throw std::invalid_argument("--subject is required");
            const bool brute = subject.starts_with("cf-") || subject == "r-even" || subject == "r-odd" ||
                               subject == "equinumerosity";
            if (brute) check_cap(c);
            AuditOptions opt;
            opt.form = form == "corrected" ? FormChoice::Corrected : FormChoice::Printed;
            opt.q_degree = q_degree;
            opt.r_form = r_form == "derived" ? ROccurrenceForm::Derived : ROccurrenceForm::Printed;
            const auto reports = audit(subject, parse_params(au_params), c.N, opt);
            if (c.format == "json") {
                nlohmann::json a = nlohmann::json::array();
                for (const auto& r : reports) a.push_back(to_json(r));
                print_json(a);
            } else if (c.format == "csv") {
                std::cout << "subject,params,form,verdict,sign,first_difference_n\n";
                for (const auto& r : reports)
                    std::cout << r.subject << ",\"" << r.params.dump() << "\"," << r.form << ','
                              << verdict_name(r.verdict) << ',' << r.sign << ','
                              << (r.first_difference ? std::to_string(r.first_difference->n) : "") << '\n';
            } else {
                std::cout << markdown_table(reports);
            }
            if (strict)
                for (const auto& r : reports)
                    if (r.verdict == Verdict::Mismatch) return kAuditMismatch;
            return kOk;
        }
        if (*co) {
            const SymmetryVariant v = parse_symmetry_variant(sym);
            std::vector<ConjectureCase> cases;
            if (!orderings.empty()) {
                std::vector<std::vector<int>> ls;
                for (const auto& o : orderings) ls.push_back(parse_params(o));
                cases.push_back(compare_orderings(parse_family(co_family), v, ls, c.N));
            } else {
                if (co_family != "F") throw std::invalid_argument("sweeps cover family F; use --orderings for P");
                cases = conjecture_layered_symmetry(v, m, max_weight, c.N, max_layer);
            }
            if (c.format == "json") {
                nlohmann::json a = nlohmann::json::array();
                for (const auto& x : cases) a.push_back(to_json(x));
                print_json(a);
            } else if (c.format == "csv") {
                std::cout << "family,variant,layers,orderings,N,symmetric,first_difference_n\n";
                for (const auto& x : cases) {
                    std::vector<std::string> l;
                    for (int v2 : x.layers) l.push_back(std::to_string(v2));
                    std::cout << x.family << ',' << x.variant << ",\"" << join(l) << "\"," << x.orderings.size() << ','
                              << x.N << ',' << (x.symmetric ? "yes" : "no") << ','
                              << (x.first_difference ? std::to_string(x.first_difference->n) : "") << '\n';
                }
            } else {
                std::cout << markdown_table(cases);
            }
            if (strict)
                for (const auto& x : cases)
                    if (!x.symmetric) return kAuditMismatch;
            return kOk;
        }
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise --cap to override)\n";
        return kCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
