#pragma once

#include <vector>

#include "matos/matroid.hpp"
#include "matos/poly.hpp"

namespace matos {

enum class PivotOrder { kSmallestFirst, kLargestFirst };

/// Tutte polynomial by deletion-contraction. Memoized twice: on exact
/// (ground, contracted) masks within one call, and across calls on the
/// canonical key for n <= 9. The pivot order must not change the result;
/// tests run both.
BivariatePoly tutte(const Matroid& m, PivotOrder order = PivotOrder::kSmallestFirst);

void clear_tutte_cache();

/// Independent oracle: sum over all subsets of (x-1)^(r-r(S)) (y-1)^(|S|-r(S)).
BivariatePoly corank_nullity_serial(const Matroid& m);
BivariatePoly corank_nullity_parallel(const Matroid& m);
BivariatePoly corank_nullity_oracle(const Matroid& m);

/// Characteristic polynomial (-1)^r T(1-t, 0).
UnivariatePoly char_poly(const Matroid& m);

/// Tutte polynomial of a simple rank-3 matroid from its line statistics
/// alone. Lines of size 2 may be omitted; uncovered pairs are implied.
BivariatePoly tutte_rank3_from_lines(int n, const std::vector<int>& line_sizes);
BivariatePoly tutte_rank3_from_lines(const Matroid& m);

}  // namespace matos
