#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matos/errors.hpp"
#include "matos/linalg.hpp"
#include "matos/subset.hpp"

namespace matos {

enum class BackingKind { kCircuits, kBases, kVectors };

/// A matroid on ground set [n], immutable after construction. For n up to
/// kRankTableMax the full rank table over all 2^n subsets is materialized at
/// construction time, so every query afterwards is a table lookup and values
/// are safe to share across threads. Larger ground sets (AG(2,5) has 25
/// points) keep only the circuit list and answer rank queries greedily.
class Matroid {
 public:
  static constexpr int kRankTableMax = 20;

  /// Public constructors reject loops and parallel pairs.
  static Matroid from_circuits(int n, std::vector<Subset> circuits, std::string name = "");
  static Matroid from_bases(int n, std::vector<Subset> bases, std::string name = "");

  /// Internal constructor used by minors and the Tutte recursion; the result
  /// may carry loops and parallel elements and is flagged non-simple.
  static Matroid from_circuits_unchecked(int n, std::vector<Subset> circuits, std::string name = "");

  int n() const { return n_; }
  int rank() const { return rank_; }
  bool is_simple() const { return simple_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  BackingKind backing() const { return backing_; }
  const std::vector<Subset>& stored_bases() const { return stored_bases_; }
  const std::optional<RatMatrix>& vector_backing() const { return vectors_; }

  int rank_of(Subset s) const;
  bool independent(Subset s) const { return rank_of(s) == set_size(s); }
  bool dependent(Subset s) const { return !independent(s); }
  Subset closure(Subset s) const;

  /// All circuits, sorted by (size, lexicographic).
  const std::vector<Subset>& circuits() const;

  /// All flats of rank k, sorted by (size, lexicographic).
  std::vector<Subset> flats_of_rank(int k) const;

  Matroid minor(Subset deleted, Subset contracted) const;
  static Matroid direct_sum(const Matroid& m1, const Matroid& m2);
  Matroid free_extension() const;
  Matroid truncation() const;

  std::vector<Subset> bases() const;
  std::uint64_t bases_count() const;

  /// Isomorphism-invariant key: exact (lex-minimal circuit encoding over all
  /// relabelings) for n <= 9, an invariant-refinement hash above that.
  std::string canonical_key() const;
  bool canonical_key_is_exact() const { return n_ <= 9; }

  /// Ground-set bijection carrying circuits onto circuits, as image[i] for
  /// 1-based i (index 0 unused), or nullopt.
  static std::optional<std::vector<int>> find_isomorphism(const Matroid& m1, const Matroid& m2);

  bool has_rank_table() const { return !rank_table_.empty(); }
  const std::vector<std::int8_t>& rank_table() const { return rank_table_; }

 private:
  Matroid() = default;

  static Matroid build_from_circuits(int n, std::vector<Subset> circuits, std::string name,
                                     bool require_simple, bool validate);
  void finish_from_circuits(bool validate);

  int n_ = 0;
  int rank_ = 0;
  bool simple_ = true;
  std::string name_;
  BackingKind backing_ = BackingKind::kCircuits;
  std::vector<Subset> circuits_;             // sorted (size, lex)
  std::vector<std::int8_t> rank_table_;      // size 2^n when n <= kRankTableMax
  std::vector<Subset> stored_bases_;         // only when bases-backed
  std::optional<RatMatrix> vectors_;         // only when vector-backed

  friend Matroid matroid_from_vectors(const RatMatrix& columns, std::string name);
  friend Matroid matroid_from_rank_oracle(int n, const std::function<int(Subset)>& oracle,
                                          std::string name);
  friend Matroid matroid_from_lines(int n, const std::vector<Subset>& lines, std::string name);
};

/// Sorts subsets by (size, lexicographic-as-ascending-tuple).
void sort_size_lex(std::vector<Subset>& sets);
bool size_lex_less(Subset a, Subset b);

/// Rank table as a standalone kernel: rank_of every subset of [n] for the
/// matroid whose circuits are given. Serial reference and OpenMP variant
/// must agree bit for bit.
std::vector<std::int8_t> build_rank_table_serial(int n, const std::vector<Subset>& circuits);
std::vector<std::int8_t> build_rank_table_parallel(int n, const std::vector<Subset>& circuits);

/// Circuit-axiom verification (antichain + exchange), brute force.
/// Intended for tests and input validation on desk-size instances.
bool verify_circuit_axioms(int n, const std::vector<Subset>& circuits, std::string* why = nullptr);

/// Dependence matroid of a rank-3 point/line incidence: circuits are the
/// collinear triples plus all 4-subsets containing no collinear triple.
/// Every pair may lie on at most one line.
Matroid matroid_from_lines(int n, const std::vector<Subset>& lines, std::string name = "");

/// Dependence matroid of the columns of an exact rational matrix.
Matroid matroid_from_vectors(const RatMatrix& columns, std::string name = "");

/// Dependence matroid of an arbitrary rank oracle (used for quadratic-field
/// configurations). The oracle is only consulted on candidate sets whose
/// proper subsets are all independent.
Matroid matroid_from_rank_oracle(int n, const std::function<int(Subset)>& oracle,
                                 std::string name = "");

}  // namespace matos
