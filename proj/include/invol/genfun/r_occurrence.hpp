#pragma once

#include <string_view>
#include <vector>

#include "invol/series/rational.hpp"
#include "invol/series/truncated_series.hpp"

namespace invol {

// Even: exactly r copies of [2k]. Odd: exactly r copies of [2k+1].
enum class Parity { Even, Odd };

Parity parse_parity(std::string_view s);
const char* parity_name(Parity p);

// Printed: the stated theorem. Derived: the product of the step generating functions of the
// path construction, with the B_k/C_k determinants evaluated directly.
enum class ROccurrenceForm { Printed, Derived };

struct CompositionSeq {
    int b = 0;
    std::vector<int> d;
    std::vector<int> l;
};

// Binomial with C(a, 0) = 1 for every a and 0 outside 0 <= m <= a otherwise.
long long binom_conv(long long a, long long m);

// Every b satisfying the theorem's inequality for (r, k), ascending, searched up to b = r.
std::vector<int> admissible_b(int r, int k, Parity parity);

// Nonnegative (d, l) solving the weight equation for (r, k, b).
std::vector<CompositionSeq> compositions(int r, int k, int b, Parity parity);

// Throws std::invalid_argument if r < 1, k < 1 or no b is admissible. b < 0 picks the smallest admissible b.
LaurentFraction r_occurrence_closed_form(int r, int k, Parity parity, ROccurrenceForm form, int b = -1);
PowerSeries r_occurrence_gf(int r, int k, Parity parity, int N, ROccurrenceForm form = ROccurrenceForm::Printed,
                            int b = -1);

}  // namespace invol
