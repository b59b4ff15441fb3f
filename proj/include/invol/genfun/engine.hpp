#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "invol/core/permutation.hpp"
#include "invol/series/truncated_series.hpp"

namespace invol {

enum class Family { F, G, P, Q };
enum class Variant { Plus, Minus };

inline int variant_sign(Variant v) { return v == Variant::Plus ? 1 : -1; }
Variant parse_variant(std::string_view s);
const char* variant_name(Variant v);
Family parse_family(std::string_view s);
const char* family_name(Family f);

// The pattern every permutation contains; F of it is 0.
struct EmptyPattern {
    bool operator==(const EmptyPattern&) const = default;
};
// No restriction beyond the family's own 3412 condition.
struct NoPattern {
    bool operator==(const NoPattern&) const = default;
};
using PatternArg = std::variant<NoPattern, EmptyPattern, Permutation>;

PatternArg parse_pattern_arg(std::string_view text);
std::string pattern_arg_str(const PatternArg& p);

// F: every pattern avoided (several allowed). G: one pattern contained exactly once.
// P: one pattern avoided with exactly one 3412. Q: [k] exactly once with exactly one 3412; plus only.
struct GFQuery {
    Family family = Family::F;
    Variant variant = Variant::Plus;
    std::vector<PatternArg> patterns;
    int N = 12;

    void validate() const;
};

nlohmann::json to_json(const GFQuery& q, const IntSeries& coeffs);

// Truncated-series solvers for the four families at one (variant, N). Results are memoized
// per instance; public calls are serialized by an internal mutex.
class Engine {
public:
    Engine(Variant v, int N);

    Variant variant() const { return variant_; }
    int order() const { return N_; }

    // Avoids every pattern in T; T empty means unrestricted.
    IntSeries F(const std::vector<Permutation>& T);
    IntSeries F(const Permutation& p) { return F(std::vector<Permutation>{p}); }
    // Contains rho exactly once and avoids every pattern in A.
    IntSeries E(const Permutation& rho, const std::vector<Permutation>& A = {});
    IntSeries G(const Permutation& rho) { return E(rho, {}); }
    // Exactly one 3412 and avoids pi; nullopt means no pattern.
    IntSeries P(const std::optional<Permutation>& pi);
    // Exactly one 3412 and exactly one [k]; plus variant only.
    IntSeries Q(int k);

    IntSeries evaluate(const GFQuery& q);

    std::size_t memo_size() const;

private:
    using PatternSet = std::vector<Permutation>;  // canonical: sorted, minimal antichain
    struct Lin;

    PatternSet canonical(const PatternSet& T);
    bool pattern_in(const Permutation& small, const Permutation& big);

    IntSeries F_locked(const PatternSet& T);
    IntSeries F_unrestricted();
    IntSeries E_locked(const Permutation& rho, const PatternSet& A);
    IntSeries P_locked(const std::optional<Permutation>& pi);
    IntSeries H(const Permutation& rho);
    IntSeries pair_count(std::vector<std::pair<Permutation, Permutation>> S);
    const std::vector<std::tuple<Permutation, Permutation, int>>& splits(const Permutation& rho);
    IntSeries Q_locked(int k);

    IntSeries zero() const { return IntSeries(N_); }
    IntSeries solve(const Lin& l, const char* what) const;

    Variant variant_;
    int s_;
    int N_;
    mutable std::recursive_mutex mu_;
    std::map<PatternSet, IntSeries> f_memo_;
    std::map<std::pair<Permutation, PatternSet>, IntSeries> e_memo_;
    std::map<std::optional<Permutation>, IntSeries> p_memo_;
    std::map<Permutation, IntSeries> h_memo_;
    std::map<int, IntSeries> q_memo_;
    std::map<Permutation, std::vector<std::tuple<Permutation, Permutation, int>>> split_memo_;
    std::map<std::pair<Permutation, Permutation>, bool> contain_memo_;
    std::set<std::string> in_progress_;
};

// Process-wide engine per (variant, N).
std::shared_ptr<Engine> shared_engine(Variant v, int N);

}  // namespace invol
