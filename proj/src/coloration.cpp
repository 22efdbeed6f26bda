#include "matos/coloration.hpp"

#include <algorithm>
#include <stdexcept>

#include "matos/families.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace matos {

Coloration Coloration::from_classes(int n, std::vector<Subset> classes) {
  Subset seen = 0;
  for (Subset c : classes) {
    if (c == 0) throw std::invalid_argument("empty color class");
    if (c & ~full_set(n)) throw std::invalid_argument("class outside ground set");
    if (c & seen) throw std::invalid_argument("color classes overlap");
    seen |= c;
  }
  if (seen != full_set(n)) throw std::invalid_argument("classes do not cover the ground set");
  std::sort(classes.begin(), classes.end(),
            [](Subset a, Subset b) { return min_element(a) < min_element(b); });
  Coloration pi;
  pi.n_ = n;
  pi.classes_ = std::move(classes);
  return pi;
}

int Coloration::class_of(int element) const {
  for (int i = 0; i < k(); ++i)
    if (contains(classes_[static_cast<std::size_t>(i)], element)) return i;
  throw std::out_of_range("element not colored");
}

std::string Coloration::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (i) out += "|";
    out += subset_to_string(classes_[i]);
  }
  return out;
}

bool is_regular(const Matroid& m, const Coloration& pi) {
  if (pi.n() != m.n()) throw std::invalid_argument("coloration size mismatch");
  if (!m.is_simple()) throw std::invalid_argument("regular colorations are defined on simple matroids");
  const int k = pi.k();
  if (m.rank() < 2) return true;
  for (Subset flat : m.flats_of_rank(2)) {
    int met = 0;
    for (Subset cls : pi.classes())
      if (flat & cls) ++met;
    if (met != 1 && met != k) return false;
  }
  return true;
}

namespace {

struct RegularSearch {
  int n;
  int k;
  std::vector<Subset> flats;                 // rank-2 flats
  std::vector<std::vector<int>> flats_of_el; // element -> flat indices
  std::vector<int> color;                    // 0-based; -1 uncolored
  int used = 0;
  std::vector<Coloration> results;

  explicit RegularSearch(const Matroid& m, int k_) : n(m.n()), k(k_), color(static_cast<std::size_t>(m.n()), -1) {
    flats = m.flats_of_rank(2);
    flats_of_el.resize(static_cast<std::size_t>(n) + 1);
    for (int fi = 0; fi < static_cast<int>(flats.size()); ++fi)
      for (int e : elements_of(flats[static_cast<std::size_t>(fi)]))
        flats_of_el[static_cast<std::size_t>(e)].push_back(fi);
  }

  // A flat with >= 2 colors must still be able to reach k distinct classes.
  bool flat_ok(int fi) const {
    Subset flat = flats[static_cast<std::size_t>(fi)];
    unsigned long mask = 0;
    int uncolored = 0;
    for (int e : elements_of(flat)) {
      int c = color[static_cast<std::size_t>(e - 1)];
      if (c < 0)
        ++uncolored;
      else
        mask |= 1ul << c;
    }
    int distinct = std::popcount(mask);
    if (distinct <= 1) return true;
    if (uncolored == 0) return distinct == k;
    return distinct + uncolored >= k;
  }

  int pick_next() const {
    int best = -1, best_score = -1;
    for (int e = 1; e <= n; ++e) {
      if (color[static_cast<std::size_t>(e - 1)] >= 0) continue;
      int score = 0;
      for (int fi : flats_of_el[static_cast<std::size_t>(e)])
        for (int x : elements_of(flats[static_cast<std::size_t>(fi)]))
          if (color[static_cast<std::size_t>(x - 1)] >= 0) ++score;
      if (score > best_score) {
        best_score = score;
        best = e;
      }
    }
    return best;
  }

  int uncolored_count() const {
    return static_cast<int>(std::count(color.begin(), color.end(), -1));
  }

  void emit() {
    std::vector<Subset> classes(static_cast<std::size_t>(k), 0);
    for (int e = 1; e <= n; ++e) classes[static_cast<std::size_t>(color[static_cast<std::size_t>(e - 1)])] |= bit_of(e);
    results.push_back(Coloration::from_classes(n, std::move(classes)));
  }

  void dfs() {
    int e = pick_next();
    if (e < 0) {
      if (used == k) emit();
      return;
    }
    if (used + uncolored_count() < k) return;  // cannot introduce enough classes
    const int choices = std::min(used + 1, k);
    for (int c = 0; c < choices; ++c) {
      color[static_cast<std::size_t>(e - 1)] = c;
      const bool fresh = c == used;
      if (fresh) ++used;
      bool ok = true;
      for (int fi : flats_of_el[static_cast<std::size_t>(e)]) {
        if (!flat_ok(fi)) {
          ok = false;
          break;
        }
      }
      if (ok) dfs();
      if (fresh) --used;
      color[static_cast<std::size_t>(e - 1)] = -1;
    }
  }
};

void check_search_pre(const Matroid& m, int k) {
  if (!m.is_simple()) throw std::invalid_argument("regular colorations are defined on simple matroids");
  if (m.n() > 16) throw CapacityError("search_regular limited to n <= 16");
  if (k < 2 || k > m.n()) throw std::invalid_argument("class count out of range");
}

}  // namespace

std::vector<Coloration> search_regular_serial(const Matroid& m, int k) {
  check_search_pre(m, k);
  RegularSearch search(m, k);
  search.dfs();
  std::sort(search.results.begin(), search.results.end());
  return search.results;
}

std::vector<Coloration> search_regular_parallel(const Matroid& m, int k) {
  check_search_pre(m, k);
  // Frontier after two decisions, then independent serial searches.
  RegularSearch root(m, k);
  struct State {
    std::vector<int> color;
    int used;
  };
  std::vector<State> frontier;
  int e1 = root.pick_next();
  if (e1 < 0) return search_regular_serial(m, k);
  root.color[static_cast<std::size_t>(e1 - 1)] = 0;
  root.used = 1;
  int e2 = root.pick_next();
  if (e2 < 0) {
    root.color[static_cast<std::size_t>(e1 - 1)] = -1;
    return search_regular_serial(m, k);
  }
  for (int c = 0; c < std::min(2, k); ++c) {
    root.color[static_cast<std::size_t>(e2 - 1)] = c;
    frontier.push_back({root.color, c == 1 ? 2 : 1});
  }
  root.color[static_cast<std::size_t>(e2 - 1)] = -1;

  std::vector<std::vector<Coloration>> buckets(frontier.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(frontier.size()); ++i) {
    RegularSearch branch(m, k);
    branch.color = frontier[static_cast<std::size_t>(i)].color;
    branch.used = frontier[static_cast<std::size_t>(i)].used;
    bool ok = true;
    for (int e = 1; e <= branch.n && ok; ++e) {
      if (branch.color[static_cast<std::size_t>(e - 1)] < 0) continue;
      for (int fi : branch.flats_of_el[static_cast<std::size_t>(e)]) ok = ok && branch.flat_ok(fi);
    }
    if (ok) branch.dfs();
    buckets[static_cast<std::size_t>(i)] = std::move(branch.results);
  }
  std::vector<Coloration> all;
  for (auto& b : buckets)
    for (auto& c : b) all.push_back(std::move(c));
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<Coloration> search_regular(const Matroid& m, int k) {
#ifdef _OPENMP
  if (m.n() >= 12) return search_regular_parallel(m, k);
#endif
  return search_regular_serial(m, k);
}

int max_regular_k(const Matroid& m) {
  if (!m.is_simple()) throw std::invalid_argument("regular colorations are defined on simple matroids");
  if (m.n() > 16) throw CapacityError("max_regular_k limited to n <= 16");
  if (m.rank() < 2) return 1;
  int max_flat = 0;
  for (Subset f : m.flats_of_rank(2)) max_flat = std::max(max_flat, set_size(f));
  // Any coloration with 2 <= k classes leaves some rank-2 flat multicolored,
  // so k can never exceed the largest flat.
  for (int k = std::min(m.n(), max_flat); k >= 3; --k) {
    if (!search_regular(m, k).empty()) return k;
  }
  return 1;
}

Coloration named_coloration(const std::string& tag) {
  std::string t = tag;
  for (char& c : t) {
    if (c == '(') c = ':';
  }
  if (!t.empty() && t.back() == ')') t.pop_back();

  auto colon = t.find(':');
  std::string head = t.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : t.substr(colon + 1);

  if (head == "ag-parallel") {
    int q = std::stoi(arg);
    auto classes_of_lines = ag_parallel_classes(q);
    // Points of one parallel pencil share a class: the vertical lines.
    return Coloration::from_classes(q * q, classes_of_lines.front());
  }
  if (head == "ngon") {
    int k = std::stoi(arg);
    if (k != 3 && k != 4 && k != 6) throw std::invalid_argument("ngon coloration needs k in {3,4,6}");
    const int n = 3 * k;
    Subset even = 0, odd = 0, diagonals = 0;
    for (int j = 0; j < 2 * k; ++j) {
      if (j % 2 == 0)
        even |= bit_of(j + 1);
      else
        odd |= bit_of(j + 1);
    }
    for (int j = 0; j < k; ++j) diagonals |= bit_of(2 * k + j + 1);
    return Coloration::from_classes(n, {even, odd, diagonals});
  }
  if (head == "a112") {
    // Sides 1..6 colored cyclically; each long diagonal 7..9 takes the color
    // missing at its two vertices; the short diagonals get the unique regular
    // completion, found by checking all 27 assignments.
    Matroid m = generate("a112").matroid;
    std::vector<int> color(13, -1);
    for (int j = 0; j < 6; ++j) color[static_cast<std::size_t>(j + 1)] = j % 3;
    for (int i = 0; i < 3; ++i) {
      int c1 = ((i - 1) % 3 + 3) % 3;  // side before vertex i
      int c2 = i % 3;                  // side after vertex i
      color[static_cast<std::size_t>(7 + i)] = 3 - c1 - c2;
    }
    std::vector<Coloration> regular;
    for (int c10 = 0; c10 < 3; ++c10) {
      for (int c11 = 0; c11 < 3; ++c11) {
        for (int c12 = 0; c12 < 3; ++c12) {
          color[10] = c10;
          color[11] = c11;
          color[12] = c12;
          std::vector<Subset> classes(3, 0);
          for (int e = 1; e <= 12; ++e) classes[static_cast<std::size_t>(color[static_cast<std::size_t>(e)])] |= bit_of(e);
          if (std::any_of(classes.begin(), classes.end(), [](Subset s) { return s == 0; })) continue;
          Coloration pi = Coloration::from_classes(12, classes);
          if (is_regular(m, pi)) regular.push_back(pi);
        }
      }
    }
    if (regular.empty()) throw std::logic_error("no regular completion of the A1(12) coloration");
    return regular.front();
  }
  throw std::invalid_argument("unknown coloration tag: " + tag);
}

}  // namespace matos
