#pragma once

#include <string>
#include <vector>

#include "matos/matroid.hpp"

namespace matos {

/// A partition of [n] into nonempty color classes, canonically ordered by
/// least element.
class Coloration {
 public:
  Coloration() = default;
  static Coloration from_classes(int n, std::vector<Subset> classes);

  int n() const { return n_; }
  int k() const { return static_cast<int>(classes_.size()); }
  const std::vector<Subset>& classes() const { return classes_; }
  int class_of(int element) const;

  bool operator==(const Coloration& o) const { return n_ == o.n_ && classes_ == o.classes_; }
  bool operator<(const Coloration& o) const { return classes_ < o.classes_; }

  /// "{1,2,3}|{4,5,6}|{7,8,9}"
  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<Subset> classes_;
};

/// A coloration is regular when every rank-2 flat meets 1 or all k classes.
bool is_regular(const Matroid& m, const Coloration& pi);

/// All regular colorations with exactly k classes, canonical and sorted.
/// The parallel variant distributes the first branching levels.
std::vector<Coloration> search_regular_serial(const Matroid& m, int k);
std::vector<Coloration> search_regular_parallel(const Matroid& m, int k);
std::vector<Coloration> search_regular(const Matroid& m, int k);

/// Largest k >= 3 admitting a regular k-coloration, or 1 when only the
/// single-class coloration exists (k = 2 is not counted).
int max_regular_k(const Matroid& m);

/// The constructions named in the literature: ag-parallel:<q>, ngon:<k>,
/// a112. Parenthesized spellings like ag-parallel(3) are accepted too.
Coloration named_coloration(const std::string& tag);

}  // namespace matos
