#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "invol/core/statistics.hpp"
#include "invol/genfun/catalog.hpp"
#include "invol/genfun/engine.hpp"
#include "invol/genfun/r_occurrence.hpp"
#include "invol/series/bivariate.hpp"
#include "invol/series/continued_fraction.hpp"
#include "invol/series/truncated_series.hpp"

namespace invol {

enum class Verdict { Match, SignFlipMatch, Mismatch };

const char* verdict_name(Verdict v);
Verdict parse_verdict(std::string_view s);

struct CoefficientDiff {
    int n = 0;
    int q = -1;  // q-degree for bivariate subjects, -1 otherwise
    std::string oracle;
    std::string formula;

    bool operator==(const CoefficientDiff&) const = default;
};

// Series are stored as JSON: coefficient arrays, or arrays of q-rows for bivariate subjects.
struct AuditReport {
    std::string subject;
    nlohmann::json params = nlohmann::json::object();
    std::string form;           // printed, corrected, derived, +sqrt, ...
    std::string oracle_source;
    nlohmann::json oracle = nlohmann::json::array();
    nlohmann::json formula = nlohmann::json::array();
    Verdict verdict = Verdict::Mismatch;
    std::optional<CoefficientDiff> first_difference;  // against the unnormalized formula
    int sign = 1;                                      // fitted global sign
    std::string branch;                                // fitted branch, empty if none applies
    std::string note;

    bool operator==(const AuditReport&) const = default;
};

nlohmann::json to_json(const AuditReport& r);
AuditReport audit_report_from_json(const nlohmann::json& j);
std::string markdown_table(const std::vector<AuditReport>& reports);

// Fills verdict, sign and first_difference; coefficients below `from` are ignored.
void judge(AuditReport& r, const PowerSeries& oracle, const PowerSeries& formula, int from = 0, bool allow_flip = true);

// The series a catalog entry must reproduce. Engine references must agree among themselves.
IntSeries reference_series(const Reference& ref, int N, int from = 0);

// A closed form that fails to expand is reported as a mismatch with the exception text as note.
AuditReport audit_catalog(const ClosedFormId& id, int N, FormChoice c = FormChoice::Printed);
// Every entry over parameter_grid(entry, bound, max_weight), ordered by catalog position then parameters.
std::vector<AuditReport> audit_catalog_grid(int N, int bound = 5, int max_weight = 8, FormChoice c = FormChoice::Printed);

// Truncated fraction of the signed statistic generating function against stat_gf over avoid {3412}.
AuditReport audit_cf(Statistic s, int N, int S);
// Both branches of the lrmax and fix closed forms plus the corrected lrmax form, against stat_gf.
std::vector<AuditReport> audit_cf_closed_forms(int N, int S);

// One formula of the r-occurrence theorems audited over r <= max_r, k <= max_k and every admissible b.
struct SignFitAudit {
    std::string subject;
    int fitted_sign = 0;  // 0: no single global sign reconciles every case
    bool magnitudes_match = false;
    std::vector<AuditReport> cases;

    bool passed() const { return fitted_sign != 0 && magnitudes_match; }
};

SignFitAudit audit_r_occurrence(Parity parity, ROccurrenceForm form, int max_r, int max_k, int N);

// Auk, printed Buk and corrected Buk as polynomial identities at one k.
std::vector<AuditReport> audit_determinants(int k);
// Transfer series with the corrected Buk polynomial as denominator against bounded_paths, variants N and O.
std::vector<AuditReport> audit_buk_paths(int k, int N);

enum class SymmetryVariant { Minus, Even, Odd, Plus };

SymmetryVariant parse_symmetry_variant(std::string_view s);
const char* symmetry_variant_name(SymmetryVariant v);

struct ConjectureCase {
    std::string family = "F";
    std::vector<int> layers;  // the first ordering compared
    std::string variant;
    int N = 0;
    std::vector<std::vector<int>> orderings;
    bool symmetric = true;
    std::optional<std::vector<int>> differing;   // first ordering that disagrees with `layers`
    std::optional<CoefficientDiff> first_difference;

    bool operator==(const ConjectureCase&) const = default;
};

nlohmann::json to_json(const ConjectureCase& c);
ConjectureCase conjecture_case_from_json(const nlohmann::json& j);
std::string markdown_table(const std::vector<ConjectureCase>& cases);

// Series of F (family "F") or P (family "P") for a layered pattern; even and odd are (plus +- minus)/2.
IntSeries layered_series(Family f, SymmetryVariant v, const std::vector<int>& layers, int N);

// Compares every given ordering against the first.
ConjectureCase compare_orderings(Family f, SymmetryVariant v, const std::vector<std::vector<int>>& orderings, int N);

// Every multiset of m layer sizes in 1..max_layer with sum <= max_weight, each compared over all its
// distinct orderings. Multisets with a single ordering are skipped. max_layer < 0 means max_weight.
std::vector<ConjectureCase> conjecture_layered_symmetry(SymmetryVariant v, int m, int max_weight, int N,
                                                        int max_layer = -1);

// Even and odd counts of I_n(3412,[2k]) against I_n(3412,[k-1](-)231) and of I_n(3412,[2k+1]) against
// I_n(3412,[k-1](-)132) for 1 <= k <= max_k, by enumeration.
std::vector<AuditReport> equinumerosity_checks(int N, int max_k = 4);

// Subjects accepted by audit().
std::vector<std::string> audit_subjects();

// Dispatch by subject: a catalog id, cf-inv, cf-lrmax, cf-rlmin, cf-fix, cf-closed, r-even, r-odd,
// det (params k) or buk-paths (params k). Throws std::invalid_argument for an unknown subject.
struct AuditOptions {
    FormChoice form = FormChoice::Printed;
    int q_degree = 12;
    ROccurrenceForm r_form = ROccurrenceForm::Printed;
};

std::vector<AuditReport> audit(std::string_view subject, const Params& params, int N, const AuditOptions& opt = {});

}  // namespace invol
