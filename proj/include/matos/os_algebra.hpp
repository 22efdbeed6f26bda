#pragma once

#include <optional>
#include <vector>

#include "matos/exterior.hpp"
#include "matos/linalg.hpp"
#include "matos/matroid.hpp"

namespace matos {

/// A subspace of the degree-p slice of the exterior algebra, held as the
/// canonical RREF over columns indexed by the p-subsets of [n] in lex order.
class GradedSubspace {
 public:
  GradedSubspace() = default;
  GradedSubspace(int n, int p, RatMatrix rref_rows);

  int n() const { return n_; }
  int degree() const { return p_; }
  int dim() const { return rref_.rows(); }
  int ambient_dim() const { return index_.size(); }
  const RatMatrix& basis() const { return rref_; }
  const SubsetIndex& index() const { return index_; }
  const std::vector<int>& pivots() const { return pivots_; }

  std::vector<Rat> to_coordinates(const ExtElem& x) const;

  /// Normal form modulo the subspace (in place).
  void reduce(std::vector<Rat>& row) const;
  bool contains(const ExtElem& x) const;
  bool contains(std::vector<Rat> row) const;

  /// Free (non-pivot) columns: coordinates of the quotient space.
  std::vector<int> free_columns() const;

  bool operator==(const GradedSubspace& o) const {
    return n_ == o.n_ && p_ == o.p_ && rref_ == o.rref_;
  }

 private:
  int n_ = 0;
  int p_ = 0;
  SubsetIndex index_;
  RatMatrix rref_;
  std::vector<int> pivots_;
  std::vector<int> pivot_of_col_;
};

/// Degree-p slice of the Orlik-Solomon ideal: span of all e_S ^ d(e_C) over
/// circuits C, including S overlapping C.
GradedSubspace ideal_component(const Matroid& m, int p);

/// dim OS_p for p = 0..r. Degrees above r are checked to vanish.
std::vector<long> hilbert_series(const Matroid& m);

/// Independent count of p-subsets containing no broken circuit.
long nbc_oracle(const Matroid& m, int p);
long nbc_serial(const Matroid& m, int p);
long nbc_parallel(const Matroid& m, int p);

std::string hilbert_to_string(const std::vector<long>& dims);

struct FreeExtDegree {
  int degree;
  int lhs_dim;
  int rhs_dim;
  bool equal;
};

struct FreeExtReport {
  bool ok = false;
  std::vector<FreeExtDegree> degrees;
};

/// Checks, degree by degree, that the ideal of the free extension equals
/// (I(M) + I(M) ^ e_{n+1}) plus the ideal generated by the boundaries of all
/// (r+1)-monomials of the extended algebra.
FreeExtReport verify_free_ext_ideal_eq(const Matroid& m);

/// Degree-one maps are square rational matrices; column i is the image of
/// e_{i+1}.
bool verify_graded_map(const Matroid& m1, const Matroid& m2, const RatMatrix& phi);

/// Extends a verified degree-one isomorphism to the free extensions, fixing
/// the new generator. The extension is verified before being returned.
RatMatrix extend_iso_to_free_ext(const Matroid& m1, const Matroid& m2, const RatMatrix& phi);

struct IsoSearchResult {
  std::optional<RatMatrix> map;
  bool necessary_conditions_passed = false;
  long candidates_tried = 0;
};

/// Bounded structured search for a graded OS isomorphism: frames of big
/// lines are mapped onto frames of big lines, remaining elements to signed
/// generators with small line-supported corrections. Absence of a result
/// asserts nothing.
IsoSearchResult search_iso(const Matroid& m1, const Matroid& m2, long budget = 1000000);

}  // namespace matos
