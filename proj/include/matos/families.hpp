#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matos/matroid.hpp"
#include "matos/quad.hpp"

namespace matos {

/// Dense matrix over a quadratic extension Q(sqrt(d)); columns are points or
/// line normals of a configuration.
class QuadMatrix {
 public:
  QuadMatrix() = default;
  QuadMatrix(int rows, int cols, long d)
      : rows_(rows), cols_(cols), d_(d), a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long field_d() const { return d_; }
  Quad& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Quad& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  /// Exact Q-lift when every entry is rational (b = 0).
  std::optional<RatMatrix> as_rational() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  long d_ = 0;
  std::vector<Quad> a_;
};

int quad_rank(const QuadMatrix& m);
Matroid matroid_from_quad_vectors(const QuadMatrix& columns, std::string name = "");

/// Arithmetic of GF(q) for q in {2,3,4,5}; GF(4) uses the table over
/// {0, 1, w, w+1} with w^2 = w + 1.
class GF {
 public:
  explicit GF(int q);
  int q() const { return q_; }
  int add(int a, int b) const { return add_[static_cast<std::size_t>(a * q_ + b)]; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a * q_ + b)]; }

 private:
  int q_;
  std::vector<int> add_;
  std::vector<int> mul_;
};

struct FamilySpec {
  enum class Kind { kUniform, kP5, kM1, kM2, kNgon, kA112, kAg };
  Kind kind = Kind::kP5;
  int a = 0;  // uniform rank / ngon k / ag q
  int b = 0;  // uniform n

  /// Tags: u:<r>,<n> | p5 | m1 | m2 | ngon:<k> | a112 | ag:<q>
  static FamilySpec parse(const std::string& tag);
  std::string to_string() const;
};

struct Generated {
  Matroid matroid;
  std::optional<QuadMatrix> realization;
};

Generated generate(const FamilySpec& spec);
inline Generated generate(const std::string& tag) { return generate(FamilySpec::parse(tag)); }

/// Point indices of the affine plane AG(2,q): point (x, y) -> 1 + x + q*y.
int ag_point_index(int q, int x, int y);

/// The lines of AG(2,q), grouped so lines of one parallel class are adjacent;
/// class 0 is the vertical pencil used by the named parallel coloration.
std::vector<std::vector<Subset>> ag_parallel_classes(int q);

}  // namespace matos
