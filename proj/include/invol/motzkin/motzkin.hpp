#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "invol/core/permutation.hpp"
#include "invol/series/polynomial.hpp"
#include "invol/series/truncated_series.hpp"

namespace invol {

enum class Step { Up, Down, Level };

class MotzkinPath {
public:
    MotzkinPath() = default;
    // Throws std::invalid_argument unless the steps stay at height >= 0 and end at 0.
    explicit MotzkinPath(std::vector<Step> steps);
    // Letters U, D, L.
    static MotzkinPath parse(std::string_view text);

    int size() const { return static_cast<int>(steps_.size()); }
    const std::vector<Step>& steps() const { return steps_; }
    // Height of the left endpoint of each step.
    std::vector<int> heights() const;
    int ups() const;
    int downs() const;
    std::string str() const;

    bool operator==(const MotzkinPath&) const = default;

private:
    std::vector<Step> steps_;
};

std::vector<MotzkinPath> motzkin_paths(int n);
mpz_class motzkin_count(int n);

// Each up step trades labels with the first later down step one level higher.
Permutation phi(const MotzkinPath& p);
// Throws std::invalid_argument unless pi is an involution avoiding 3412.
MotzkinPath phi_inverse(const Permutation& pi);

// Heights are y-coordinates of left endpoints.
mpz_class tau_path(const MotzkinPath& p, int k);
// i^{U+D}; always real for a closed path.
int path_sign(const MotzkinPath& p);

enum class BoundedVariant { M, N, O };

BoundedVariant parse_bounded_variant(std::string_view s);
const char* bounded_variant_name(BoundedVariant v);

// Paths from height r to height s inside [0, k]. N forbids level steps at height k, O at height 0.
struct BoundedPathQuery {
    int r = 0;
    int s = 0;
    int k = 0;
    BoundedVariant variant = BoundedVariant::M;

    void validate() const;
};

// Direct enumeration; coefficient n sums i^{U+D} (signed) or 1 over the n-step paths.
PowerSeries bounded_paths(const BoundedPathQuery& q, int N, bool is_signed);

enum class MatrixKind { A, B, C };

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// (k+1)x(k+1) tridiagonal: x on the diagonal, ix off it. B zeroes the last diagonal entry, C the first.
PolyMatrix transfer_matrix(MatrixKind kind, int k);
MatrixKind matrix_for(BoundedVariant v);
PolyMatrix identity_minus(const PolyMatrix& m);
Polynomial determinant(const PolyMatrix& m);
// Determinant with row `row` and column `col` deleted (0-based).
Polynomial minor(const PolyMatrix& m, int row, int col);

// (-1)^{r+s} det(I - M; s, r) / det(I - M), expanded.
PowerSeries transfer_gf(const BoundedPathQuery& q, int N);

// Signed or unsigned series of I(3412) with exactly r copies of [m], computed on paths by a height/tau
// transfer recursion.
IntSeries path_occurrence_series(int m, int r, int N, bool is_signed);

struct DetIdentityCheck {
    std::string identity;  // "Auk", "Buk-printed", "Buk-corrected"
    int k = 0;
    Polynomial lhs;        // normalized Chebyshev side
    Polynomial det_b;      // det(I - A_k) for Auk, det(I - B_k) otherwise
    Polynomial det_c;      // det(I - C_k) for the Buk checks
    bool equal = false;
};

// Auk, printed Buk and the corrected Buk normalization (ix)^k (W_k - ix W_{k-1}) at one k.
std::vector<DetIdentityCheck> det_identity_audit(int k);

}  // namespace invol
