#include "matos/tutte.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace matos {

namespace {

std::mutex g_cache_mutex;
std::map<std::string, BivariatePoly> g_tutte_cache;  // canonical key -> T, n <= 9 only

struct TutteRun {
  const std::vector<std::int8_t>* table;
  int n;
  PivotOrder order;
  std::unordered_map<std::uint64_t, BivariatePoly> memo;

  int rank_in(Subset contracted, Subset s) const {
    return (*table)[s | contracted] - (*table)[contracted];
  }

  BivariatePoly run(Subset ground, Subset contracted) {
    const std::uint64_t key = (static_cast<std::uint64_t>(ground) << kMaxGround) | contracted;
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;

    // Strip loops and coloops; each contributes a y or x factor.
    int loops = 0, coloops = 0;
    Subset active = ground;
    const int total_rank = rank_in(contracted, ground);
    Subset rest = ground;
    while (rest) {
      Subset e = rest & (0u - rest);
      rest &= rest - 1;
      if (rank_in(contracted, e) == 0) {
        ++loops;
        active ^= e;
      } else if (rank_in(contracted, ground ^ e) == total_rank - 1) {
        ++coloops;
        active ^= e;
      }
    }

    BivariatePoly result;
    if (active == 0) {
      result = BivariatePoly::constant(1);
    } else {
      Subset pivot;
      if (order == PivotOrder::kSmallestFirst) {
        pivot = active & (0u - active);
      } else {
        pivot = Subset{1} << (31 - std::countl_zero(active));
      }
      result = run(active ^ pivot, contracted);
      result += run(active ^ pivot, contracted | pivot);
    }
    result = result.shifted(coloops, loops);

    memo.emplace(key, result);
    return result;
  }
};

}  // namespace

BivariatePoly tutte(const Matroid& m, PivotOrder order) {
  if (!m.has_rank_table()) throw CapacityError("tutte needs the rank-table regime (n <= 20)");

  std::string key;
  if (m.canonical_key_is_exact()) {
    key = m.canonical_key();
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto hit = g_tutte_cache.find(key);
    if (hit != g_tutte_cache.end()) return hit->second;
  }

  TutteRun run{&m.rank_table(), m.n(), order, {}};
  BivariatePoly t = run.run(full_set(m.n()), 0);

  if (!key.empty()) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_tutte_cache.emplace(std::move(key), t);
  }
  return t;
}

void clear_tutte_cache() {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_tutte_cache.clear();
}

namespace {

BivariatePoly assemble_corank_nullity(const std::vector<std::uint64_t>& counts, int r, int n) {
  BivariatePoly total;
  for (int a = 0; a <= r; ++a) {
    for (int b = 0; b <= n; ++b) {
      std::uint64_t c = counts[static_cast<std::size_t>(a * (n + 1) + b)];
      if (c == 0) continue;
      BivariatePoly term = BivariatePoly::corank_nullity_term(a, b);
      for (const auto& [k, coeff] : term.terms()) total.add_term(k.first, k.second, coeff * Int(static_cast<unsigned long>(c)));
    }
  }
  return total;
}

}  // namespace

BivariatePoly corank_nullity_serial(const Matroid& m) {
  if (!m.has_rank_table()) throw CapacityError("corank-nullity oracle needs the rank-table regime");
  const auto& table = m.rank_table();
  const int n = m.n(), r = m.rank();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>((r + 1) * (n + 1)), 0);
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    int rs = table[s];
    ++counts[static_cast<std::size_t>((r - rs) * (n + 1) + (set_size(s) - rs))];
  }
  return assemble_corank_nullity(counts, r, n);
}

BivariatePoly corank_nullity_parallel(const Matroid& m) {
  if (!m.has_rank_table()) throw CapacityError("corank-nullity oracle needs the rank-table regime");
  const auto& table = m.rank_table();
  const int n = m.n(), r = m.rank();
  const std::size_t cells = static_cast<std::size_t>((r + 1) * (n + 1));
  std::vector<std::uint64_t> counts(cells, 0);
#ifdef _OPENMP
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(cells, 0);
#pragma omp for schedule(static)
    for (std::int64_t s = 0; s < (std::int64_t{1} << n); ++s) {
      int rs = table[static_cast<Subset>(s)];
      ++local[static_cast<std::size_t>((r - rs) * (n + 1) + (set_size(static_cast<Subset>(s)) - rs))];
    }
#pragma omp critical
    for (std::size_t i = 0; i < cells; ++i) counts[i] += local[i];
  }
#else
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    int rs = table[s];
    ++counts[static_cast<std::size_t>((r - rs) * (n + 1) + (set_size(s) - rs))];
  }
#endif
  return assemble_corank_nullity(counts, r, n);
}

BivariatePoly corank_nullity_oracle(const Matroid& m) {
#ifdef _OPENMP
  if (m.n() >= 14) return corank_nullity_parallel(m);
#endif
  return corank_nullity_serial(m);
}

UnivariatePoly char_poly(const Matroid& m) {
  BivariatePoly t = tutte(m);
  // chi(t) = (-1)^r T(1-t, 0): monomials with y-degree 0 evaluated at x = 1-t.
  UnivariatePoly one_minus_t({Int(1), Int(-1)});
  UnivariatePoly acc;
  UnivariatePoly power = UnivariatePoly::constant(1);
  int max_dx = 0;
  for (const auto& [k, c] : t.terms())
    if (k.second == 0) max_dx = std::max(max_dx, k.first);
  for (int dx = 0; dx <= max_dx; ++dx) {
    Int c = t.coeff(dx, 0);
    if (c != 0) acc = acc + power * c;
    power = power * one_minus_t;
  }
  if (m.rank() % 2 != 0) acc = acc * Int(-1);
  return acc;
}

BivariatePoly tutte_rank3_from_lines(int n, const std::vector<int>& line_sizes) {
  if (n < 3) throw std::invalid_argument("rank-3 statistics need n >= 3");
  std::uint64_t pairs_budget = binomial(n, 2);
  std::uint64_t covered_pairs = 0;
  for (int s : line_sizes) {
    if (s < 2) throw std::invalid_argument("line of size < 2");
    if (s >= n) throw std::invalid_argument("a line of size " + std::to_string(s) + " leaves no rank-3 matroid on " +
                                            std::to_string(n) + " points");
    covered_pairs += binomial(s, 2);
  }
  if (covered_pairs > pairs_budget)
    throw std::invalid_argument("inconsistent line statistics: pairs covered more than once");

  // Subsets counted by (size, rank). Rank 2 in size s >= 3 only inside lines;
  // every pair is rank 2; the rest has rank 3.
  BivariatePoly total;
  auto add = [&](std::uint64_t count, int size, int rank) {
    if (count == 0) return;
    BivariatePoly term = BivariatePoly::corank_nullity_term(3 - rank, size - rank);
    for (const auto& [k, coeff] : term.terms())
      total.add_term(k.first, k.second, coeff * Int(static_cast<unsigned long>(count)));
  };

  add(1, 0, 0);
  add(static_cast<std::uint64_t>(n), 1, 1);
  add(pairs_budget, 2, 2);
  for (int size = 3; size <= n; ++size) {
    std::uint64_t rank2 = 0;
    for (int s : line_sizes) rank2 += binomial(s, size);
    std::uint64_t all = binomial(n, size);
    if (rank2 > all) throw std::invalid_argument("inconsistent line statistics");
    add(rank2, size, 2);
    add(all - rank2, size, 3);
  }
  return total;
}

BivariatePoly tutte_rank3_from_lines(const Matroid& m) {
  if (m.rank() != 3) throw std::invalid_argument("line-statistics reconstruction needs a rank-3 matroid");
  if (!m.is_simple()) throw std::invalid_argument("line-statistics reconstruction needs a simple matroid");
  std::vector<int> sizes;
  for (Subset f : m.flats_of_rank(2))
    if (set_size(f) >= 3) sizes.push_back(set_size(f));
  return tutte_rank3_from_lines(m.n(), sizes);
}


}  // namespace matos
