#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invol/core/permutation.hpp"
#include "invol/genfun/engine.hpp"
#include "invol/series/rational.hpp"
#include "invol/series/truncated_series.hpp"

namespace invol {

using Params = std::vector<int>;

struct ClosedFormId {
    std::string id;
    Params params;

    std::string str() const;
};

// What a catalog entry must agree with.
struct Reference {
    enum class Kind { Engine, Occurrence };
    Kind kind = Kind::Engine;
    // Engine: every query must produce the same series.
    std::vector<GFQuery> queries;
    // Occurrence: signed series of I(3412) with exactly r copies of pattern.
    Permutation pattern;
    int r = 0;

    std::string describe() const;
};

// Either an exact rational closed form or a series recipe (square roots, engine-fed relations).
struct Formula {
    std::function<LaurentFraction(const Params&)> rational;
    std::function<PowerSeries(const Params&, int N)> series;

    // Throws TranscriptionError or NonInvertible when the closed form is not a power series.
    PowerSeries expand(const Params& p, int N) const;
    std::optional<RationalFunction> rational_form(const Params& p) const;
};

struct ParamSpec {
    std::string name;
    int min = 0;
    int max = -1;  // -1: the caller's grid bound
};

enum class FormChoice { Printed, Corrected };

struct CatalogEntry {
    std::string id;
    Family family = Family::F;
    Variant variant = Variant::Plus;
    std::vector<ParamSpec> params;
    std::string statement;
    Formula printed;
    std::optional<Formula> corrected;
    std::string correction_note;
    // Coefficients below this index are outside the statement and are not compared.
    int from = 0;
    std::function<Reference(const Params&)> reference;
    // Extra range constraints beyond the per-parameter bounds.
    std::function<bool(const Params&)> admissible;
    // Layered weight; grids cap it.
    std::function<int(const Params&)> weight;

    bool accepts(const Params& p) const;
    const Formula& formula(FormChoice c) const;
};

const std::vector<CatalogEntry>& catalog();
// Throws std::invalid_argument for an unknown id.
const CatalogEntry& catalog_entry(std::string_view id);

// Throws std::invalid_argument when the parameters are outside the entry's range.
PowerSeries closed_form(const ClosedFormId& id, int N, FormChoice c = FormChoice::Printed);
std::optional<RationalFunction> closed_form_rational(const ClosedFormId& id, FormChoice c = FormChoice::Printed);

// All admissible parameter vectors with every free parameter <= bound and weight <= max_weight.
std::vector<Params> parameter_grid(const CatalogEntry& e, int bound = 5, int max_weight = 8);

// Patterns used by the table-driven entries.
const std::vector<Permutation>& relation_bases();
const std::vector<Permutation>& sandwich_bases();

}  // namespace invol
