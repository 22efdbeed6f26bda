#include "matos/matroid.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace matos {

bool size_lex_less(Subset a, Subset b) {
  int sa = set_size(a), sb = set_size(b);
  if (sa != sb) return sa < sb;
  if (a == b) return false;
  // First element where membership differs: owning it makes the tuple smaller.
  Subset x = a ^ b;
  return (a >> std::countr_zero(x)) & 1;
}

void sort_size_lex(std::vector<Subset>& sets) { std::sort(sets.begin(), sets.end(), size_lex_less); }

namespace {

constexpr std::int8_t kUnset = -1;

void check_ground(int n) {
  if (n < 0 || n > kMaxGround) throw CapacityError("ground set size " + std::to_string(n) + " out of supported range");
}

inline void rank_dp_cell(Subset s, int n, const std::vector<bool>& is_circuit,
                         std::vector<std::int8_t>& table) {
  if (s == 0) {
    table[0] = 0;
    return;
  }
  const int size = set_size(s);
  bool all_children_independent = true;
  int max_child = 0;
  Subset rest = s;
  while (rest) {
    Subset e = rest & (0u - rest);
    rest &= rest - 1;
    std::int8_t rc = table[s ^ e];
    if (rc > max_child) max_child = rc;
    if (rc != size - 1) all_children_independent = false;
  }
  (void)n;
  if (all_children_independent && !is_circuit[s]) {
    table[s] = static_cast<std::int8_t>(size);
  } else {
    table[s] = static_cast<std::int8_t>(max_child);
  }
}

}  // namespace

std::vector<std::int8_t> build_rank_table_serial(int n, const std::vector<Subset>& circuits) {
  check_ground(n);
  if (n > Matroid::kRankTableMax) throw CapacityError("rank table limited to n <= 20");
  std::vector<bool> is_circuit(std::size_t{1} << n, false);
  for (Subset c : circuits) is_circuit[c] = true;
  std::vector<std::int8_t> table(std::size_t{1} << n, kUnset);
  // Ascending mask order visits every proper subset before its supersets.
  for (Subset s = 0; s < (Subset{1} << n); ++s) rank_dp_cell(s, n, is_circuit, table);
  return table;
}

std::vector<std::int8_t> build_rank_table_parallel(int n, const std::vector<Subset>& circuits) {
  check_ground(n);
  if (n > Matroid::kRankTableMax) throw CapacityError("rank table limited to n <= 20");
  std::vector<bool> is_circuit(std::size_t{1} << n, false);
  for (Subset c : circuits) is_circuit[c] = true;
  std::vector<std::int8_t> table(std::size_t{1} << n, kUnset);
  table[0] = 0;
  // Level-synchronous: all masks of one popcount depend only on the level
  // below, so each level is a parallel loop.
  for (int level = 1; level <= n; ++level) {
    std::vector<Subset> masks = subsets_of_size(n, level);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(masks.size()); ++i) {
      rank_dp_cell(masks[static_cast<std::size_t>(i)], n, is_circuit, table);
    }
  }
  return table;
}

bool verify_circuit_axioms(int n, const std::vector<Subset>& circuits, std::string* why) {
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    if (circuits[i] == 0) {
      if (why) *why = "empty circuit";
      return false;
    }
    for (std::size_t j = 0; j < circuits.size(); ++j) {
      if (i != j && (circuits[i] & circuits[j]) == circuits[j]) {
        if (why) *why = "circuit " + subset_to_string(circuits[j]) + " contained in " + subset_to_string(circuits[i]);
        return false;
      }
    }
  }
  if (n > Matroid::kRankTableMax) return true;  // exchange not brute-forced beyond table scale
  auto table = build_rank_table_serial(n, circuits);
  auto dependent = [&](Subset s) { return table[s] < set_size(s); };
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = i + 1; j < circuits.size(); ++j) {
      Subset common = circuits[i] & circuits[j];
      if (!common) continue;
      Subset u = circuits[i] | circuits[j];
      Subset rest = common;
      while (rest) {
        Subset e = rest & (0u - rest);
        rest &= rest - 1;
        if (!dependent(u ^ e)) {
          if (why)
            *why = "exchange fails for " + subset_to_string(circuits[i]) + ", " + subset_to_string(circuits[j]) +
                   " at element " + std::to_string(std::countr_zero(e) + 1);
          return false;
        }
      }
    }
  }
  return true;
}

Matroid Matroid::build_from_circuits(int n, std::vector<Subset> circuits, std::string name,
                                     bool require_simple, bool validate) {
  check_ground(n);
  Matroid m;
  m.n_ = n;
  m.name_ = std::move(name);
  Subset full = full_set(n);
  for (Subset c : circuits) {
    if (c == 0 || (c & ~full)) throw std::invalid_argument("circuit outside ground set");
  }
  sort_size_lex(circuits);
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
  m.circuits_ = std::move(circuits);

  if (validate) {
    if (m.circuits_.size() > 20000) throw CapacityError("too many circuits");
    for (std::size_t i = 0; i < m.circuits_.size(); ++i)
      for (std::size_t j = 0; j < m.circuits_.size(); ++j)
        if (i != j && (m.circuits_[i] & m.circuits_[j]) == m.circuits_[j])
          throw std::invalid_argument("circuits are not an antichain");
  }

  m.simple_ = true;
  for (Subset c : m.circuits_) {
    if (set_size(c) <= 2) {
      m.simple_ = false;
      break;
    }
  }
  if (require_simple && !m.simple_) {
    for (Subset c : m.circuits_) {
      if (set_size(c) == 1) throw std::invalid_argument("loop " + subset_to_string(c) + " not allowed in a simple matroid");
      if (set_size(c) == 2) throw std::invalid_argument("parallel pair " + subset_to_string(c) + " not allowed in a simple matroid");
    }
  }

  m.finish_from_circuits(validate);
  return m;
}

void Matroid::finish_from_circuits(bool validate) {
  if (n_ <= kRankTableMax) {
    rank_table_ = build_rank_table_serial(n_, circuits_);
    rank_ = rank_table_[full_set(n_)];
    if (validate && circuits_.size() <= 2000) {
      auto dependent = [&](Subset s) { return rank_table_[s] < set_size(s); };
      for (std::size_t i = 0; i < circuits_.size(); ++i) {
        for (std::size_t j = i + 1; j < circuits_.size(); ++j) {
          Subset common = circuits_[i] & circuits_[j];
          if (!common) continue;
          Subset u = circuits_[i] | circuits_[j];
          Subset rest = common;
          while (rest) {
            Subset e = rest & (0u - rest);
            rest &= rest - 1;
            if (!dependent(u ^ e)) throw std::invalid_argument("circuit exchange axiom violated");
          }
        }
      }
    }
  } else {
    rank_ = rank_of(full_set(n_));
  }
}

Matroid Matroid::from_circuits(int n, std::vector<Subset> circuits, std::string name) {
  return build_from_circuits(n, std::move(circuits), std::move(name), true, true);
}

Matroid Matroid::from_circuits_unchecked(int n, std::vector<Subset> circuits, std::string name) {
  return build_from_circuits(n, std::move(circuits), std::move(name), false, false);
}

Matroid Matroid::from_bases(int n, std::vector<Subset> bases, std::string name) {
  check_ground(n);
  if (n > kRankTableMax) throw CapacityError("basis backing limited to n <= 20");
  if (bases.empty()) throw std::invalid_argument("basis list empty");
  Subset full = full_set(n);
  const int r = set_size(bases.front());
  for (Subset b : bases) {
    if (b & ~full) throw std::invalid_argument("basis outside ground set");
    if (set_size(b) != r) throw std::invalid_argument("bases of unequal cardinality");
  }
  sort_size_lex(bases);
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());

  std::unordered_set<Subset> basis_set(bases.begin(), bases.end());
  if (bases.size() <= 1500 && n <= 16) {
    // Basis exchange: for x in B1\B2 there is y in B2\B1 with B1-x+y a basis.
    for (Subset b1 : bases) {
      for (Subset b2 : bases) {
        Subset out = b1 & ~b2;
        while (out) {
          Subset x = out & (0u - out);
          out &= out - 1;
          bool ok = false;
          Subset in = b2 & ~b1;
          while (in && !ok) {
            Subset y = in & (0u - in);
            in &= in - 1;
            ok = basis_set.count((b1 ^ x) | y) > 0;
          }
          if (!ok) throw std::invalid_argument("basis exchange axiom violated");
        }
      }
    }
  }

  // Independent sets are exactly the subsets of bases.
  std::vector<bool> independent(std::size_t{1} << n, false);
  for (Subset b : bases) {
    Subset sub = b;
    while (true) {
      independent[sub] = true;
      if (sub == 0) break;
      sub = (sub - 1) & b;
    }
  }

  Matroid m;
  m.n_ = n;
  m.name_ = std::move(name);
  m.backing_ = BackingKind::kBases;
  m.stored_bases_ = std::move(bases);
  m.rank_table_.assign(std::size_t{1} << n, kUnset);
  m.rank_table_[0] = 0;
  for (Subset s = 1; s < (Subset{1} << n); ++s) {
    if (independent[s]) {
      m.rank_table_[s] = static_cast<std::int8_t>(set_size(s));
    } else {
      int best = 0;
      Subset rest = s;
      while (rest) {
        Subset e = rest & (0u - rest);
        rest &= rest - 1;
        best = std::max(best, static_cast<int>(m.rank_table_[s ^ e]));
      }
      m.rank_table_[s] = static_cast<std::int8_t>(best);
    }
  }
  m.rank_ = m.rank_table_[full];

  // Circuits: minimal dependent sets, read off the table.
  for (Subset s = 1; s < (Subset{1} << n); ++s) {
    if (m.rank_table_[s] >= set_size(s)) continue;
    bool minimal = true;
    Subset rest = s;
    while (rest && minimal) {
      Subset e = rest & (0u - rest);
      rest &= rest - 1;
      minimal = m.rank_table_[s ^ e] == set_size(s) - 1;
    }
    if (minimal) m.circuits_.push_back(s);
  }
  sort_size_lex(m.circuits_);

  for (Subset c : m.circuits_) {
    if (set_size(c) == 1) throw std::invalid_argument("loop " + subset_to_string(c) + " not allowed in a simple matroid");
    if (set_size(c) == 2) throw std::invalid_argument("parallel pair " + subset_to_string(c) + " not allowed in a simple matroid");
  }
  return m;
}

int Matroid::rank_of(Subset s) const {
  if (s & ~full_set(n_)) throw std::invalid_argument("subset outside ground set");
  if (!rank_table_.empty()) return rank_table_[s];
  // Greedy over a maximal independent subset; independence = contains no circuit.
  Subset indep = 0;
  Subset rest = s;
  while (rest) {
    Subset e = rest & (0u - rest);
    rest &= rest - 1;
    Subset candidate = indep | e;
    bool ok = true;
    for (Subset c : circuits_) {
      if ((candidate & c) == c) {
        ok = false;
        break;
      }
    }
    if (ok) indep = candidate;
  }
  return set_size(indep);
}

Subset Matroid::closure(Subset s) const {
  int r = rank_of(s);
  Subset cl = s;
  for (int e = 1; e <= n_; ++e) {
    if (contains(s, e)) continue;
    if (rank_of(s | bit_of(e)) == r) cl |= bit_of(e);
  }
  return cl;
}

const std::vector<Subset>& Matroid::circuits() const { return circuits_; }

std::vector<Subset> Matroid::flats_of_rank(int k) const {
  if (k < 0 || k > rank_) throw std::invalid_argument("flat rank out of range");
  std::vector<Subset> flats;
  if (!rank_table_.empty()) {
    for (Subset s = 0; s < (Subset{1} << n_); ++s) {
      if (rank_table_[s] != k) continue;
      if (closure(s) == s) flats.push_back(s);
    }
  } else {
    if (k > 3) throw CapacityError("flats_of_rank(k > 3) needs the rank-table regime");
    // Every rank-k flat is the closure of an independent k-subset.
    std::vector<Subset> seen;
    for (Subset s : subsets_of_size(n_, k)) {
      if (rank_of(s) != k) continue;
      seen.push_back(closure(s));
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    flats = std::move(seen);
  }
  sort_size_lex(flats);
  return flats;
}

Matroid Matroid::minor(Subset deleted, Subset contracted) const {
  if (deleted & contracted) throw std::invalid_argument("delete and contract sets overlap");
  Subset full = full_set(n_);
  if ((deleted | contracted) & ~full) throw std::invalid_argument("minor sets outside ground set");
  if (rank_table_.empty()) throw CapacityError("minor needs the rank-table regime");

  Subset kept = full & ~(deleted | contracted);
  const int new_n = set_size(kept);
  std::vector<int> old_elem;  // new element i -> old element old_elem[i-1]
  for (int e = 1; e <= n_; ++e)
    if (contains(kept, e)) old_elem.push_back(e);

  const int base = rank_table_[contracted];
  std::vector<std::int8_t> table(std::size_t{1} << new_n);
  for (Subset s = 0; s < (Subset{1} << new_n); ++s) {
    Subset lifted = contracted;
    Subset rest = s;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      lifted |= bit_of(old_elem[static_cast<std::size_t>(i)]);
    }
    table[s] = static_cast<std::int8_t>(rank_table_[lifted] - base);
  }

  Matroid m;
  m.n_ = new_n;
  m.rank_table_ = std::move(table);
  m.rank_ = new_n == 0 ? 0 : m.rank_table_[full_set(new_n)];
  m.name_ = name_.empty() ? "" : name_ + " minor";
  for (Subset s = 1; s < (Subset{1} << new_n); ++s) {
    if (m.rank_table_[s] >= set_size(s)) continue;
    bool minimal = true;
    Subset rest = s;
    while (rest && minimal) {
      Subset e = rest & (0u - rest);
      rest &= rest - 1;
      minimal = m.rank_table_[s ^ e] == set_size(s) - 1;
    }
    if (minimal) m.circuits_.push_back(s);
  }
  sort_size_lex(m.circuits_);
  m.simple_ = std::none_of(m.circuits_.begin(), m.circuits_.end(),
                           [](Subset c) { return set_size(c) <= 2; });
  return m;
}

Matroid Matroid::direct_sum(const Matroid& m1, const Matroid& m2) {
  if (!m1.is_simple() || !m2.is_simple()) throw std::invalid_argument("direct sum requires simple summands");
  check_ground(m1.n_ + m2.n_);
  std::vector<Subset> circuits = m1.circuits_;
  for (Subset c : m2.circuits_) circuits.push_back(c << m1.n_);
  std::string name;
  if (!m1.name_.empty() && !m2.name_.empty()) name = m1.name_ + " + " + m2.name_;
  Matroid m = build_from_circuits(m1.n_ + m2.n_, std::move(circuits), std::move(name), true, false);
  return m;
}

std::vector<Subset> Matroid::bases() const {
  if (rank_table_.empty()) throw CapacityError("bases enumeration needs the rank-table regime");
  std::vector<Subset> out;
  for (Subset s : subsets_of_size(n_, rank_))
    if (rank_table_[s] == rank_) out.push_back(s);
  return out;
}

std::uint64_t Matroid::bases_count() const {
  if (rank_table_.empty()) throw CapacityError("bases_count needs the rank-table regime");
  std::uint64_t count = 0;
  for (Subset s : subsets_of_size(n_, rank_))
    if (rank_table_[s] == rank_) ++count;
  return count;
}

Matroid Matroid::free_extension() const {
  if (!simple_) throw std::invalid_argument("free extension requires a simple matroid");
  if (rank_ < 1) throw std::invalid_argument("free extension requires rank >= 1");
  if (n_ + 1 > kRankTableMax) throw CapacityError("free extension exceeds rank-table regime");
  std::vector<Subset> circuits = circuits_;
  const Subset added = bit_of(n_ + 1);
  for (Subset b : bases()) circuits.push_back(b | added);
#ifndef NDEBUG
  // The union is an antichain for simple matroids: a circuit inside B u {n+1}
  // would make the basis B dependent.
  std::string why;
  if (!verify_circuit_axioms(n_ + 1, circuits, &why))
    throw std::logic_error("free extension circuit family invalid: " + why);
#endif
  Matroid m = build_from_circuits(n_ + 1, std::move(circuits),
                                  name_.empty() ? "" : "ext(" + name_ + ")", false, false);
  if (m.rank_ != rank_) throw std::logic_error("free extension changed the rank");
  return m;
}

Matroid Matroid::truncation() const {
  if (rank_ < 2) throw std::invalid_argument("truncation requires rank >= 2");
  Matroid ext = free_extension();
  Matroid t = ext.minor(0, bit_of(n_ + 1));
  for (Subset c : t.circuits_) {
    if (set_size(c) == 2)
      throw std::invalid_argument("truncation would create the parallel pair " + subset_to_string(c));
    if (set_size(c) == 1)
      throw std::invalid_argument("truncation would create the loop " + subset_to_string(c));
  }
  t.name_ = name_.empty() ? "" : "trunc(" + name_ + ")";
  return t;
}

namespace {

std::string encode_circuits(int n, int r, const std::vector<Subset>& sorted_circuits) {
  std::string out;
  out.reserve(2 + sorted_circuits.size() * 4);
  out.push_back(static_cast<char>(n));
  out.push_back(static_cast<char>(r));
  for (Subset c : sorted_circuits) {
    out.push_back(static_cast<char>(c & 0xff));
    out.push_back(static_cast<char>((c >> 8) & 0xff));
    out.push_back(static_cast<char>((c >> 16) & 0xff));
    out.push_back(static_cast<char>((c >> 24) & 0xff));
  }
  return out;
}

}  // namespace

std::string Matroid::canonical_key() const {
  if (n_ > kRankTableMax) throw CapacityError("canonical_key limited to the rank-table regime");
  if (n_ <= 9) {
    // Exact: lexicographically minimal circuit encoding over all relabelings.
    std::vector<int> perm(static_cast<std::size_t>(n_));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    std::vector<Subset> relabeled(circuits_.size());
    do {
      for (std::size_t i = 0; i < circuits_.size(); ++i) {
        Subset img = 0;
        Subset rest = circuits_[i];
        while (rest) {
          int e = std::countr_zero(rest);
          rest &= rest - 1;
          img |= Subset{1} << perm[static_cast<std::size_t>(e)];
        }
        relabeled[i] = img;
      }
      sort_size_lex(relabeled);
      std::string enc = encode_circuits(n_, rank_, relabeled);
      if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return "X" + best;
  }

  // Invariant-refinement hash: flat-size statistics plus iterated element
  // signatures over the rank-2 flats. Collisions possible by design.
  std::vector<Subset> lines = flats_of_rank(std::min(2, rank_));
  std::map<int, int> line_sizes;
  for (Subset f : lines) ++line_sizes[set_size(f)];
  std::map<int, int> circuit_sizes;
  for (Subset c : circuits_) ++circuit_sizes[set_size(c)];

  std::vector<int> color(static_cast<std::size_t>(n_), 0);
  for (int round = 0; round < 3; ++round) {
    std::vector<std::string> sig(static_cast<std::size_t>(n_));
    for (int e = 1; e <= n_; ++e) {
      std::vector<std::string> local;
      for (Subset f : lines) {
        if (!contains(f, e)) continue;
        std::vector<int> colors;
        for (int x : elements_of(f)) colors.push_back(color[static_cast<std::size_t>(x - 1)]);
        std::sort(colors.begin(), colors.end());
        std::string s = std::to_string(set_size(f)) + ":";
        for (int c : colors) s += std::to_string(c) + ",";
        local.push_back(std::move(s));
      }
      std::sort(local.begin(), local.end());
      std::string joined = std::to_string(color[static_cast<std::size_t>(e - 1)]) + "|";
      for (auto& s : local) joined += s + ";";
      sig[static_cast<std::size_t>(e - 1)] = std::move(joined);
    }
    std::vector<std::string> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int e = 0; e < n_; ++e) {
      color[static_cast<std::size_t>(e)] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<std::size_t>(e)]) - sorted.begin());
    }
  }
  std::vector<int> palette = color;
  std::sort(palette.begin(), palette.end());

  std::string key = "H" + std::to_string(n_) + "." + std::to_string(rank_) + "|";
  for (auto [s, c] : line_sizes) key += std::to_string(s) + "x" + std::to_string(c) + ",";
  key += "|";
  for (auto [s, c] : circuit_sizes) key += std::to_string(s) + "x" + std::to_string(c) + ",";
  key += "|";
  for (int c : palette) key += std::to_string(c) + ",";
  return key;
}

std::optional<std::vector<int>> Matroid::find_isomorphism(const Matroid& m1, const Matroid& m2) {
  if (m1.n_ > 10 || m2.n_ > 10) throw CapacityError("find_isomorphism limited to n <= 10");
  if (m1.n_ != m2.n_ || m1.rank_ != m2.rank_) return std::nullopt;
  const int n = m1.n_;

  std::map<int, int> sizes1, sizes2;
  for (Subset c : m1.circuits_) ++sizes1[set_size(c)];
  for (Subset c : m2.circuits_) ++sizes2[set_size(c)];
  if (sizes1 != sizes2) return std::nullopt;

  // Per-element signature: how many circuits of each size pass through it.
  auto signature = [n](const Matroid& m) {
    std::vector<std::map<int, int>> sig(static_cast<std::size_t>(n));
    for (Subset c : m.circuits_)
      for (int e : elements_of(c)) ++sig[static_cast<std::size_t>(e - 1)][set_size(c)];
    return sig;
  };
  auto sig1 = signature(m1);
  auto sig2 = signature(m2);

  std::unordered_set<Subset> cset1(m1.circuits_.begin(), m1.circuits_.end());
  std::unordered_set<Subset> cset2(m2.circuits_.begin(), m2.circuits_.end());

  std::vector<int> image(static_cast<std::size_t>(n) + 1, 0);  // 1-based; 0 = unassigned
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  Subset assigned = 0, assigned_img = 0;

  std::function<bool(int)> place = [&](int e) -> bool {
    if (e > n) return true;
    for (int t = 1; t <= n; ++t) {
      if (used[static_cast<std::size_t>(t)]) continue;
      if (sig1[static_cast<std::size_t>(e - 1)] != sig2[static_cast<std::size_t>(t - 1)]) continue;
      image[static_cast<std::size_t>(e)] = t;
      used[static_cast<std::size_t>(t)] = true;
      assigned |= bit_of(e);
      assigned_img |= bit_of(t);

      bool ok = true;
      // Completed circuits through e must map to circuits, and completed
      // image circuits through t must pull back to circuits.
      for (Subset c : m1.circuits_) {
        if (!contains(c, e) || (c & ~assigned)) continue;
        Subset img = 0;
        for (int x : elements_of(c)) img |= bit_of(image[static_cast<std::size_t>(x)]);
        if (!cset2.count(img)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        for (Subset c : m2.circuits_) {
          if (!contains(c, t) || (c & ~assigned_img)) continue;
          Subset pre = 0;
          for (int x = 1; x <= n; ++x)
            if (image[static_cast<std::size_t>(x)] != 0 && contains(c, image[static_cast<std::size_t>(x)]))
              pre |= bit_of(x);
          if (!cset1.count(pre)) {
            ok = false;
            break;
          }
        }
      }

      if (ok && place(e + 1)) return true;
      image[static_cast<std::size_t>(e)] = 0;
      used[static_cast<std::size_t>(t)] = false;
      assigned &= ~bit_of(e);
      assigned_img &= ~bit_of(t);
    }
    return false;
  };

  if (place(1)) return image;
  return std::nullopt;
}

Matroid matroid_from_lines(int n, const std::vector<Subset>& lines, std::string name) {
  check_ground(n);
  // Two lines may share at most one point.
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (set_size(lines[i]) < 2) throw std::invalid_argument("line with fewer than 2 points");
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (set_size(lines[i] & lines[j]) > 1) throw std::invalid_argument("two lines share two points");
  }

  std::vector<Subset> circuits;
  std::unordered_set<Subset> collinear;
  for (Subset line : lines) {
    for (Subset t : subsets_of_size(set_size(line), 3)) {
      // Spread the local triple mask over the line's elements.
      Subset triple = 0;
      auto elems = elements_of(line);
      for (int i : elements_of(t)) triple |= bit_of(elems[static_cast<std::size_t>(i - 1)]);
      circuits.push_back(triple);
      collinear.insert(triple);
    }
  }
  for (Subset q : subsets_of_size(n, 4)) {
    bool has_triple = false;
    Subset rest = q;
    while (rest && !has_triple) {
      Subset e = rest & (0u - rest);
      rest &= rest - 1;
      has_triple = collinear.count(q ^ e) > 0;
    }
    if (!has_triple) circuits.push_back(q);
  }
  return Matroid::build_from_circuits(n, std::move(circuits), std::move(name), true, false);
}

Matroid matroid_from_rank_oracle(int n, const std::function<int(Subset)>& oracle, std::string name) {
  check_ground(n);
  if (n > Matroid::kRankTableMax) throw CapacityError("rank-oracle construction limited to n <= 20");
  // Consult the oracle only on sets whose proper subsets are all independent;
  // everything else is decided by monotonicity.
  std::vector<bool> independent(std::size_t{1} << n, false);
  independent[0] = true;
  std::vector<Subset> circuits;
  for (int size = 1; size <= n; ++size) {
    bool any = false;
    for (Subset s : subsets_of_size(n, size)) {
      bool candidate = true;
      Subset rest = s;
      while (rest && candidate) {
        Subset e = rest & (0u - rest);
        rest &= rest - 1;
        candidate = independent[s ^ e];
      }
      if (!candidate) continue;
      if (oracle(s) == size) {
        independent[s] = true;
        any = true;
      } else {
        circuits.push_back(s);
      }
    }
    if (!any) break;
  }
  return Matroid::build_from_circuits(n, std::move(circuits), std::move(name), true, false);
}

Matroid matroid_from_vectors(const RatMatrix& columns, std::string name) {
  const int n = columns.cols();
  check_ground(n);
  if (n > Matroid::kRankTableMax) throw CapacityError("vector backing limited to n <= 20");
  const int d = columns.rows();

  for (int c = 0; c < n; ++c) {
    bool zero = true;
    for (int r = 0; r < d && zero; ++r) zero = columns.at(r, c) == 0;
    if (zero) throw std::invalid_argument("column " + std::to_string(c + 1) + " is zero (loop)");
  }
  for (int c1 = 0; c1 < n; ++c1) {
    for (int c2 = c1 + 1; c2 < n; ++c2) {
      RatMatrix pair(d, 2);
      for (int r = 0; r < d; ++r) {
        pair.at(r, 0) = columns.at(r, c1);
        pair.at(r, 1) = columns.at(r, c2);
      }
      if (rational_rank(pair) < 2)
        throw std::invalid_argument("columns " + std::to_string(c1 + 1) + " and " + std::to_string(c2 + 1) +
                                    " are parallel");
    }
  }

  auto oracle = [&](Subset s) {
    auto elems = elements_of(s);
    RatMatrix sub(d, static_cast<int>(elems.size()));
    for (int j = 0; j < static_cast<int>(elems.size()); ++j)
      for (int r = 0; r < d; ++r) sub.at(r, j) = columns.at(r, elems[static_cast<std::size_t>(j)] - 1);
    return rational_rank(sub);
  };
  Matroid m = matroid_from_rank_oracle(n, oracle, std::move(name));
  m.backing_ = BackingKind::kVectors;
  m.vectors_ = columns;
  return m;
}

}  // namespace matos
