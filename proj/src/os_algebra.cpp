#include "matos/os_algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace matos {

GradedSubspace::GradedSubspace(int n, int p, RatMatrix rref_rows)
    : n_(n), p_(p), index_(n, p), rref_(std::move(rref_rows)) {
  if (rref_.rows() > 0 && rref_.cols() != index_.size())
    throw std::invalid_argument("graded subspace has wrong ambient dimension");
  if (rref_.rows() == 0) rref_ = RatMatrix(0, index_.size());
  pivots_ = rref_pivots(rref_);
  pivot_of_col_.assign(static_cast<std::size_t>(index_.size()), -1);
  for (int i = 0; i < static_cast<int>(pivots_.size()); ++i)
    pivot_of_col_[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(i)])] = i;
}

std::vector<Rat> GradedSubspace::to_coordinates(const ExtElem& x) const {
  std::vector<Rat> row(static_cast<std::size_t>(index_.size()));
  for (const auto& [s, c] : x.terms()) {
    if (set_size(s) != p_) throw std::invalid_argument("element not homogeneous of the slice degree");
    row[static_cast<std::size_t>(index_.column(s))] = c;
  }
  return row;
}

void GradedSubspace::reduce(std::vector<Rat>& row) const {
  for (int c = 0; c < static_cast<int>(row.size()); ++c) {
    if (row[static_cast<std::size_t>(c)] == 0) continue;
    int pr = pivot_of_col_[static_cast<std::size_t>(c)];
    if (pr < 0) continue;
    Rat factor = row[static_cast<std::size_t>(c)];
    for (int j = c; j < rref_.cols(); ++j) {
      const Rat& v = rref_.at(pr, j);
      if (v != 0) row[static_cast<std::size_t>(j)] -= factor * v;
    }
  }
}

bool GradedSubspace::contains(std::vector<Rat> row) const {
  reduce(row);
  return std::all_of(row.begin(), row.end(), [](const Rat& v) { return v == 0; });
}

bool GradedSubspace::contains(const ExtElem& x) const {
  if (x.is_zero()) return true;
  return contains(to_coordinates(x));
}

std::vector<int> GradedSubspace::free_columns() const {
  std::vector<int> cols;
  for (int c = 0; c < index_.size(); ++c)
    if (pivot_of_col_[static_cast<std::size_t>(c)] < 0) cols.push_back(c);
  return cols;
}

namespace {

void require_simple(const Matroid& m, const char* who) {
  if (!m.is_simple()) throw std::invalid_argument(std::string(who) + " requires a simple matroid");
}

// Dense row of e_S ^ d(e_C) in the degree-(|S|+|C|-1) slice.
bool emit_generator_row(const SubsetIndex& index, Subset s, Subset c, std::vector<Rat>& row) {
  std::fill(row.begin(), row.end(), Rat(0));
  bool nonzero = false;
  int j = 0;
  Subset rest = c;
  while (rest) {
    Subset e = rest & (0u - rest);
    rest &= rest - 1;
    Subset mono = c ^ e;
    int sign = (j % 2 == 0) ? 1 : -1;
    ++j;
    if (s & mono) continue;
    int total = sign * wedge_sign(s, mono);
    Rat& cell = row[static_cast<std::size_t>(index.column(s | mono))];
    cell += total;
    nonzero = true;
  }
  if (!nonzero) return false;
  return std::any_of(row.begin(), row.end(), [](const Rat& v) { return v != 0; });
}

}  // namespace

GradedSubspace ideal_component(const Matroid& m, int p) {
  require_simple(m, "ideal_component");
  const int n = m.n();
  if (n > 14) throw CapacityError("ideal_component limited to n <= 14");
  if (p < 0 || p > n) throw std::invalid_argument("degree out of range");

  SubsetIndex index(n, p);
  Echelon ech(index.size());
  std::vector<Rat> row(static_cast<std::size_t>(index.size()));

  // Dependent monomials are single generators: if C is a circuit inside T,
  // e_{(T \ C) u min C} ^ d(e_C) = +-e_T. Feeding these first makes slices in
  // degree > rank fill instantly.
  const auto& circuits = m.circuits();
  if (p >= 1) {
    for (Subset t : index.masks()) {
      if (ech.full()) break;
      if (!m.dependent(t)) continue;
      for (Subset c : circuits) {
        if ((t & c) != c) continue;
        Subset s = (t ^ c) | bit_of(min_element(c));
        if (emit_generator_row(index, s, c, row)) ech.insert(row);
        break;
      }
    }
  }

  for (Subset c : circuits) {
    if (ech.full()) break;
    const int s_size = p - set_size(c) + 1;
    if (s_size < 0 || s_size > n) continue;
    for (Subset s : subsets_of_size(n, s_size)) {
      if (ech.full()) break;
      if (emit_generator_row(index, s, c, row)) ech.insert(row);
    }
  }

  return {n, p, ech.to_rref()};
}

std::vector<long> hilbert_series(const Matroid& m) {
  require_simple(m, "hilbert_series");
  const int n = m.n();
  if (n > 14) throw CapacityError("hilbert_series limited to n <= 14");
  const int r = m.rank();
  std::vector<long> dims;
  for (int p = 0; p <= r; ++p) {
    long ambient = static_cast<long>(binomial(n, p));
    dims.push_back(ambient - ideal_component(m, p).dim());
  }
  for (int p = r + 1; p <= n; ++p) {
    long ambient = static_cast<long>(binomial(n, p));
    if (ideal_component(m, p).dim() != ambient)
      throw std::logic_error("OS component above the rank did not vanish");
  }
  return dims;
}

long nbc_serial(const Matroid& m, int p) {
  require_simple(m, "nbc_oracle");
  if (m.n() > 16) throw CapacityError("nbc_oracle limited to n <= 16");
  if (p < 0 || p > m.n()) throw std::invalid_argument("degree out of range");
  std::vector<Subset> broken;
  for (Subset c : m.circuits()) broken.push_back(c ^ bit_of(min_element(c)));
  long count = 0;
  for (Subset s : subsets_of_size(m.n(), p)) {
    bool clean = true;
    for (Subset b : broken) {
      if ((s & b) == b) {
        clean = false;
        break;
      }
    }
    if (clean) ++count;
  }
  return count;
}

long nbc_parallel(const Matroid& m, int p) {
  require_simple(m, "nbc_oracle");
  if (m.n() > 16) throw CapacityError("nbc_oracle limited to n <= 16");
  if (p < 0 || p > m.n()) throw std::invalid_argument("degree out of range");
  std::vector<Subset> broken;
  for (Subset c : m.circuits()) broken.push_back(c ^ bit_of(min_element(c)));
  std::vector<Subset> sets = subsets_of_size(m.n(), p);
  long count = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : count)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(sets.size()); ++i) {
    Subset s = sets[static_cast<std::size_t>(i)];
    bool clean = true;
    for (Subset b : broken) {
      if ((s & b) == b) {
        clean = false;
        break;
      }
    }
    if (clean) ++count;
  }
  return count;
}

long nbc_oracle(const Matroid& m, int p) {
#ifdef _OPENMP
  if (binomial(m.n(), p) > 4096) return nbc_parallel(m, p);
#endif
  return nbc_serial(m, p);
}

FreeExtReport verify_free_ext_ideal_eq(const Matroid& m) {
  require_simple(m, "verify_free_ext_ideal_eq");
  if (m.n() > 10) throw CapacityError("verify_free_ext_ideal_eq limited to n <= 10");
  const int n = m.n();
  const int r = m.rank();
  Matroid ext = m.free_extension();

  FreeExtReport report;
  report.ok = true;
  for (int p = 0; p <= n + 1; ++p) {
    GradedSubspace lhs = ideal_component(ext, p);

    SubsetIndex index(n + 1, p);
    Echelon ech(index.size());
    std::vector<Rat> row(static_cast<std::size_t>(index.size()));

    // I(M)_p, living on the p-subsets of [n].
    if (p <= n) {
      GradedSubspace low = ideal_component(m, p);
      for (int i = 0; i < low.basis().rows(); ++i) {
        std::fill(row.begin(), row.end(), Rat(0));
        for (int c = 0; c < low.basis().cols(); ++c) {
          const Rat& v = low.basis().at(i, c);
          if (v != 0) row[static_cast<std::size_t>(index.column(low.index().mask(c)))] = v;
        }
        ech.insert(row);
      }
    }
    // I(M)_{p-1} ^ e_{n+1}; appending the largest generator costs no sign.
    if (p >= 1 && p - 1 <= n) {
      GradedSubspace low = ideal_component(m, p - 1);
      for (int i = 0; i < low.basis().rows(); ++i) {
        std::fill(row.begin(), row.end(), Rat(0));
        for (int c = 0; c < low.basis().cols(); ++c) {
          const Rat& v = low.basis().at(i, c);
          if (v != 0)
            row[static_cast<std::size_t>(index.column(low.index().mask(c) | bit_of(n + 1)))] = v;
        }
        ech.insert(row);
      }
    }
    // The ideal generated by the boundaries of all (r+1)-monomials of the
    // extended algebra.
    const int s_size = p - r;
    if (s_size >= 0 && s_size <= n + 1) {
      for (Subset y : subsets_of_size(n + 1, r + 1)) {
        if (ech.full()) break;
        for (Subset s : subsets_of_size(n + 1, s_size)) {
          if (ech.full()) break;
          if (emit_generator_row(index, s, y, row)) ech.insert(row);
        }
      }
    }

    GradedSubspace rhs(n + 1, p, ech.to_rref());
    bool equal = lhs == rhs;
    report.degrees.push_back({p, lhs.dim(), rhs.dim(), equal});
    report.ok = report.ok && equal;
  }
  return report;
}

namespace {

std::optional<RatMatrix> invert(const RatMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const int n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  RatMatrix red = rref(aug);
  if (red.rows() < n) return std::nullopt;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (red.at(r, c) != Rat(r == c ? 1 : 0)) return std::nullopt;
  RatMatrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = red.at(r, n + c);
  return inv;
}

bool maps_ideal_into(const Matroid& from, const Matroid& to, const RatMatrix& phi,
                     std::map<int, GradedSubspace>& to_components) {
  for (Subset c : from.circuits()) {
    ExtElem gen = boundary(ExtElem::monomial(from.n(), c));
    ExtElem image = apply_degree_one(phi, gen);
    const int degree = set_size(c) - 1;
    auto it = to_components.find(degree);
    if (it == to_components.end()) it = to_components.emplace(degree, ideal_component(to, degree)).first;
    if (!it->second.contains(image)) return false;
  }
  return true;
}

}  // namespace

bool verify_graded_map(const Matroid& m1, const Matroid& m2, const RatMatrix& phi) {
  if (m1.n() != m2.n()) throw std::invalid_argument("graded maps need equal ground sets");
  if (phi.rows() != m1.n() || phi.cols() != m1.n()) throw std::invalid_argument("map has wrong shape");
  auto inv = invert(phi);
  if (!inv) throw std::invalid_argument("degree-one map is not invertible");
  std::map<int, GradedSubspace> comp1, comp2;
  return maps_ideal_into(m1, m2, phi, comp2) && maps_ideal_into(m2, m1, *inv, comp1);
}

RatMatrix extend_iso_to_free_ext(const Matroid& m1, const Matroid& m2, const RatMatrix& phi) {
  if (!verify_graded_map(m1, m2, phi))
    throw std::invalid_argument("map is not a graded isomorphism of the inputs");
  const int n = m1.n();
  RatMatrix ext(n + 1, n + 1);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) ext.at(r, c) = phi.at(r, c);
  ext.at(n, n) = 1;
  if (!verify_graded_map(m1.free_extension(), m2.free_extension(), ext))
    throw std::logic_error("extension of a verified map failed to verify");
  return ext;
}

namespace {

struct FrameSearch {
  const Matroid& m1;
  const Matroid& m2;
  long budget;
  long tried = 0;
  std::vector<Subset> lines1, lines2;
  std::vector<int> free1;
  std::map<int, GradedSubspace> comp2;
  RatMatrix phi;
  Subset assigned = 0;
  std::optional<RatMatrix> found;

  FrameSearch(const Matroid& a, const Matroid& b, long budget_)
      : m1(a), m2(b), budget(budget_), phi(a.n(), a.n()) {}

  const GradedSubspace& component(int degree) {
    auto it = comp2.find(degree);
    if (it == comp2.end()) it = comp2.emplace(degree, ideal_component(m2, degree)).first;
    return it->second;
  }

  bool circuits_ok() {
    for (Subset c : m1.circuits()) {
      if (c & ~assigned) continue;
      ExtElem image = apply_degree_one(phi, boundary(ExtElem::monomial(m1.n(), c)));
      if (!component(set_size(c) - 1).contains(image)) return false;
    }
    return true;
  }

  void set_column(int element, const std::vector<Rat>& column) {
    for (int r = 0; r < m1.n(); ++r) phi.at(r, element - 1) = column[static_cast<std::size_t>(r)];
    assigned |= bit_of(element);
  }
  void clear_column(int element) {
    for (int r = 0; r < m1.n(); ++r) phi.at(r, element - 1) = 0;
    assigned &= ~bit_of(element);
  }

  bool finish() {
    ++tried;
    auto inv = invert(phi);
    if (!inv) return false;
    std::map<int, GradedSubspace> comp1;
    if (!maps_ideal_into(m1, m2, phi, comp2)) return false;
    if (!maps_ideal_into(m2, m1, *inv, comp1)) return false;
    found = phi;
    return true;
  }

  bool assign_free(std::size_t idx) {
    if (tried > budget) return false;
    if (idx == free1.size()) return finish();
    const int e = free1[idx];
    const int n = m1.n();
    std::vector<Rat> column(static_cast<std::size_t>(n));
    for (int t = 1; t <= n; ++t) {
      for (int sign : {1, -1}) {
        // sign*e_t, then sign*e_t + c*(e_a - e_b)
        std::fill(column.begin(), column.end(), Rat(0));
        column[static_cast<std::size_t>(t - 1)] = sign;
        set_column(e, column);
        if (circuits_ok() && assign_free(idx + 1)) return true;
        clear_column(e);
        for (int a = 1; a <= n; ++a) {
          for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            for (int c : {1, 2}) {
              if (tried > budget) return false;
              ++tried;
              std::fill(column.begin(), column.end(), Rat(0));
              column[static_cast<std::size_t>(t - 1)] = sign;
              column[static_cast<std::size_t>(a - 1)] += c;
              column[static_cast<std::size_t>(b - 1)] -= c;
              set_column(e, column);
              if (circuits_ok() && assign_free(idx + 1)) return true;
              clear_column(e);
            }
          }
        }
      }
    }
    return false;
  }

  bool assign_line(std::size_t idx) {
    if (tried > budget) return false;
    if (idx == lines1.size()) return assign_free(0);
    std::vector<int> members = elements_of(lines1[idx]);
    const int n = m1.n();
    for (Subset target : lines2) {
      if (set_size(target) != static_cast<int>(members.size())) continue;
      std::vector<int> t_members = elements_of(target);
      // Directions e_a - e_b inside the target line.
      std::vector<std::pair<int, int>> dirs;
      for (int a : t_members)
        for (int b : t_members)
          if (a != b) dirs.emplace_back(a, b);

      for (int base = 1; base <= n; ++base) {
        for (int sign : {1, -1}) {
          std::vector<Rat> w(static_cast<std::size_t>(n));
          w[static_cast<std::size_t>(base - 1)] = sign;
          // First member gets w, later members w + (e_a - e_b), all distinct.
          if (!try_line_members(idx, members, w, dirs, 0, 0)) {
            if (tried > budget) return false;
            continue;
          }
          return true;
        }
      }
    }
    return false;
  }

  bool try_line_members(std::size_t line_idx, const std::vector<int>& members, const std::vector<Rat>& w,
                        const std::vector<std::pair<int, int>>& dirs, std::size_t mi, unsigned long used_dirs) {
    if (tried > budget) return false;
    if (mi == members.size()) {
      ++tried;
      if (!circuits_ok()) return false;
      return assign_line(line_idx + 1);
    }
    const int e = members[mi];
    if (contains(assigned, e)) {  // shared with an earlier line: keep it
      return try_line_members(line_idx, members, w, dirs, mi + 1, used_dirs);
    }
    if (mi == 0) {
      set_column(e, w);
      if (try_line_members(line_idx, members, w, dirs, mi + 1, used_dirs)) return true;
      clear_column(e);
      return false;
    }
    std::vector<Rat> column(w);
    for (std::size_t di = 0; di < dirs.size(); ++di) {
      if (used_dirs & (1ul << di)) continue;
      column = w;
      column[static_cast<std::size_t>(dirs[di].first - 1)] += 1;
      column[static_cast<std::size_t>(dirs[di].second - 1)] -= 1;
      set_column(e, column);
      if (try_line_members(line_idx, members, w, dirs, mi + 1, used_dirs | (1ul << di))) return true;
      clear_column(e);
      if (tried > budget) return false;
    }
    return false;
  }
};

}  // namespace

IsoSearchResult search_iso(const Matroid& m1, const Matroid& m2, long budget) {
  if (m1.n() != m2.n()) throw std::invalid_argument("search_iso needs equal ground sets");
  IsoSearchResult result;
  if (hilbert_series(m1) != hilbert_series(m2)) return result;
  result.necessary_conditions_passed = true;

  FrameSearch search(m1, m2, budget);
  for (Subset f : m1.flats_of_rank(2))
    if (set_size(f) >= 3) search.lines1.push_back(f);
  for (Subset f : m2.flats_of_rank(2))
    if (set_size(f) >= 3) search.lines2.push_back(f);
  Subset covered = 0;
  for (Subset l : search.lines1) covered |= l;
  for (int e = 1; e <= m1.n(); ++e)
    if (!contains(covered, e)) search.free1.push_back(e);

  // Frame assignment assumes the source lines are disjoint; with overlaps we
  // only try the identity.
  bool disjoint = true;
  for (std::size_t i = 0; i < search.lines1.size() && disjoint; ++i)
    for (std::size_t j = i + 1; j < search.lines1.size() && disjoint; ++j)
      disjoint = (search.lines1[i] & search.lines1[j]) == 0;
  if (!disjoint || search.lines1.size() > 8) {
    RatMatrix id = RatMatrix::identity(m1.n());
    result.candidates_tried = 1;
    if (verify_graded_map(m1, m2, id)) result.map = id;
    return result;
  }

  search.assign_line(0);
  result.candidates_tried = search.tried;
  result.map = search.found;
  return result;
}

std::string hilbert_to_string(const std::vector<long>& dims) {
  std::string out;
  bool first = true;
  for (std::size_t p = 0; p < dims.size(); ++p) {
    if (dims[p] == 0) continue;
    if (!first) out += " + ";
    first = false;
    std::string coeff = std::to_string(dims[p]);
    if (p == 0) {
      out += coeff;
    } else {
      std::string var = p == 1 ? "t" : "t^" + std::to_string(p);
      out += (dims[p] == 1 ? "" : coeff) + var;
    }
  }
  return first ? "0" : out;
}

}  // namespace matos
