#include <doctest.h>

#include "matos/families.hpp"
#include "matos/tutte.hpp"

using namespace matos;

namespace {

// Independent oracle for the characteristic polynomial: Moebius function of
// the lattice of flats, chi(t) = sum_F mu(0,F) t^(r - rank F).
UnivariatePoly moebius_char_poly(const Matroid& m) {
  std::vector<std::pair<Subset, int>> flats;  // (flat, rank)
  for (int k = 0; k <= m.rank(); ++k)
    for (Subset f : m.flats_of_rank(k)) flats.emplace_back(f, k);
  // flats_of_rank lists rank levels in order, so containments point backward.
  std::vector<Int> mu(flats.size());
  for (std::size_t i = 0; i < flats.size(); ++i) {
    if (flats[i].first == m.closure(0)) {
      mu[i] = 1;
      continue;
    }
    Int acc = 0;
    for (std::size_t j = 0; j < flats.size(); ++j) {
      if (j == i) continue;
      if ((flats[i].first & flats[j].first) == flats[j].first && flats[j].second < flats[i].second) acc += mu[j];
    }
    mu[i] = -acc;
  }
  std::vector<Int> coeffs(static_cast<std::size_t>(m.rank()) + 1, Int(0));
  for (std::size_t i = 0; i < flats.size(); ++i)
    coeffs[static_cast<std::size_t>(m.rank() - flats[i].second)] += mu[i];
  return UnivariatePoly(coeffs);
}

}  // namespace

TEST_CASE("tutte base cases") {
  Matroid empty = Matroid::from_circuits(0, {});
  CHECK(tutte(empty).to_string() == "1");

  Matroid coloop = Matroid::from_circuits(1, {});
  CHECK(tutte(coloop).to_string() == "x");
  CHECK(corank_nullity_oracle(coloop).to_string() == "x");

  Matroid u23 = generate("u:2,3").matroid;
  CHECK(tutte(u23).to_string() == "x^2 + x + y");
}

TEST_CASE("deletion-contraction equals the corank-nullity oracle on the corpus") {
  std::vector<Matroid> corpus;
  for (const char* tag : {"u:2,3", "u:3,3", "u:2,4", "u:3,4", "u:3,5", "u:4,5", "p5", "m1", "m2", "ag:2", "ag:3"})
    corpus.push_back(generate(tag).matroid);
  corpus.push_back(Matroid::direct_sum(generate("u:2,3").matroid, generate("u:2,3").matroid));
  corpus.push_back(Matroid::direct_sum(generate("p5").matroid, Matroid::from_circuits(1, {})));
  corpus.push_back(generate("m1").matroid.minor(bit_of(7), 0));
  corpus.push_back(generate("m2").matroid.minor(0, bit_of(7)));  // contraction, non-simple

  for (const Matroid& m : corpus) {
    clear_tutte_cache();
    CHECK(tutte(m) == corank_nullity_oracle(m));
  }
}

TEST_CASE("tutte does not depend on the pivot order") {
  for (const char* tag : {"u:2,4", "p5", "m1", "ag:3"}) {
    Matroid m = generate(tag).matroid;
    clear_tutte_cache();
    BivariatePoly smallest = tutte(m, PivotOrder::kSmallestFirst);
    clear_tutte_cache();
    BivariatePoly largest = tutte(m, PivotOrder::kLargestFirst);
    CHECK(smallest == largest);
  }
}

TEST_CASE("classic evaluations count bases, subsets and independent sets") {
  for (const char* tag : {"u:2,3", "u:3,5", "p5", "m1", "m2", "ag:3"}) {
    Matroid m = generate(tag).matroid;
    BivariatePoly t = tutte(m);
    CHECK(t.eval(1, 1) == Rat(static_cast<unsigned long>(m.bases_count())));
    CHECK(t.eval(2, 2) == Rat(Int(1) << m.n()));
    long independent_sets = 0;
    for (Subset s = 0; s < (Subset{1} << m.n()); ++s)
      if (m.independent(s)) ++independent_sets;
    CHECK(t.eval(2, 1) == Rat(independent_sets));
  }
}

TEST_CASE("direct sum multiplies tutte polynomials") {
  Matroid u23 = generate("u:2,3").matroid;
  BivariatePoly t = tutte(u23);
  Matroid sum = Matroid::direct_sum(u23, u23);
  CHECK(tutte(sum) == t * t);
  CHECK(corank_nullity_oracle(sum) == t * t);
}

TEST_CASE("characteristic polynomials") {
  CHECK(char_poly(generate("u:2,3").matroid).to_string() == "t^2 - 3t + 2");
  CHECK(char_poly(Matroid::from_circuits(1, {})).to_string() == "t - 1");
  CHECK(char_poly(generate("ag:3").matroid).to_string() == "t^3 - 9t^2 + 24t - 16");

  for (const char* tag : {"u:2,4", "u:3,5", "p5", "ag:2", "ag:3", "m1"}) {
    Matroid m = generate(tag).matroid;
    CHECK(char_poly(m) == moebius_char_poly(m));
  }
}

TEST_CASE("rank-3 reconstruction from line statistics") {
  // No lines of size >= 3 on 4 points: U(3,4), with C(4,3) bases.
  BivariatePoly u34 = tutte_rank3_from_lines(4, {});
  CHECK(u34 == tutte(generate("u:3,4").matroid));
  CHECK(u34.eval(1, 1) == 4);

  // AG(2,3) statistics: twelve 3-point lines on nine points.
  BivariatePoly ag3 = tutte_rank3_from_lines(9, std::vector<int>(12, 3));
  CHECK(ag3.eval(1, 1) == 72);
  CHECK(ag3 == tutte(generate("ag:3").matroid));

  // Rank-4 input must be rejected.
  CHECK_THROWS_AS(tutte_rank3_from_lines(generate("m1").matroid), std::invalid_argument);

  // Overcovered pairs are inconsistent.
  CHECK_THROWS_AS(tutte_rank3_from_lines(5, {4, 4}), std::invalid_argument);
  CHECK_THROWS_AS(tutte_rank3_from_lines(4, {4}), std::invalid_argument);
}

TEST_CASE("reconstruction matches deletion-contraction for every rank-3 family") {
  for (const char* tag : {"ag:2", "ag:3", "p5", "u:3,4", "u:3,6", "ngon:3"}) {
    Matroid m = generate(tag).matroid;
    clear_tutte_cache();
    CHECK(tutte_rank3_from_lines(m) == tutte(m));
  }
}
