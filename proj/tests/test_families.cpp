#include <doctest.h>

#include "matos/families.hpp"
#include "matos/matroid.hpp"

using namespace matos;

namespace {

Subset set(std::initializer_list<int> elems, int n) {
  return subset_from(std::vector<int>(elems), n);
}

// Every pair of elements must lie in exactly one rank-2 flat.
void check_pairwise_lines(const Matroid& m) {
  auto lines = m.flats_of_rank(2);
  for (int a = 1; a <= m.n(); ++a) {
    for (int b = a + 1; b <= m.n(); ++b) {
      int count = 0;
      for (Subset f : lines)
        if (contains(f, a) && contains(f, b)) ++count;
      CHECK(count == 1);
    }
  }
}

}  // namespace

TEST_CASE("uniform generator") {
  Matroid u25 = generate("u:2,5").matroid;
  CHECK(u25.n() == 5);
  CHECK(u25.rank() == 2);
  CHECK(u25.circuits() == subsets_of_size(5, 3));
  CHECK_THROWS_AS(generate("u:0,3"), std::invalid_argument);
  CHECK_THROWS_AS(generate("u:1,2"), std::invalid_argument);  // parallel pair
  CHECK_THROWS_AS(generate("u:4,3"), std::invalid_argument);
}

TEST_CASE("family tags parse and print") {
  CHECK(FamilySpec::parse("u:3,7").to_string() == "u:3,7");
  CHECK(FamilySpec::parse("ngon:4").to_string() == "ngon:4");
  CHECK(FamilySpec::parse("ag:5").to_string() == "ag:5");
  CHECK_THROWS_AS(FamilySpec::parse("wat"), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::parse("u:1"), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::parse("ngon:x"), std::invalid_argument);
}

TEST_CASE("affine planes") {
  Matroid ag2 = generate("ag:2").matroid;
  CHECK(ag2.n() == 4);
  CHECK(ag2.rank() == 3);
  CHECK(ag2.circuits() == std::vector<Subset>{set({1, 2, 3, 4}, 4)});  // AG(2,2) = U(3,4)

  Matroid ag3 = generate("ag:3").matroid;
  CHECK(ag3.n() == 9);
  CHECK(ag3.rank() == 3);
  CHECK(ag3.bases_count() == 72);  // C(9,3) - 12 collinear triples
  auto lines3 = ag3.flats_of_rank(2);
  CHECK(lines3.size() == 12);
  for (Subset l : lines3) CHECK(set_size(l) == 3);
  check_pairwise_lines(ag3);

  Matroid ag4 = generate("ag:4").matroid;
  CHECK(ag4.n() == 16);
  CHECK(ag4.rank() == 3);
  auto lines4 = ag4.flats_of_rank(2);
  CHECK(lines4.size() == 20);  // q(q+1)
  for (Subset l : lines4) CHECK(set_size(l) == 4);
  check_pairwise_lines(ag4);

  Matroid ag5 = generate("ag:5").matroid;
  CHECK(ag5.n() == 25);
  CHECK(ag5.rank() == 3);
  CHECK_FALSE(ag5.has_rank_table());
  auto lines5 = ag5.flats_of_rank(2);
  CHECK(lines5.size() == 30);
  for (Subset l : lines5) CHECK(set_size(l) == 5);
  CHECK_THROWS_AS(ag5.bases_count(), CapacityError);

  CHECK_THROWS_AS(generate("ag:6"), std::invalid_argument);
}

TEST_CASE("parallel classes of AG(2,q) partition the lines") {
  for (int q : {2, 3, 4, 5}) {
    auto classes = ag_parallel_classes(q);
    CHECK(static_cast<int>(classes.size()) == q + 1);
    std::vector<Subset> all;
    for (const auto& pencil : classes) {
      CHECK(static_cast<int>(pencil.size()) == q);
      Subset covered = 0;
      for (Subset line : pencil) {
        CHECK(set_size(line) == q);
        CHECK((covered & line) == 0);  // parallel lines are disjoint
        covered |= line;
        all.push_back(line);
      }
      CHECK(covered == full_set(q * q));
    }
    std::sort(all.begin(), all.end());
    CHECK(std::unique(all.begin(), all.end()) == all.end());
  }
}

TEST_CASE("the rational lift of AG(2,3) is a different matroid") {
  // Points (x,y) of GF(3)^2 read as integers: mod-3 collinearity is lost.
  RatMatrix lift(3, 9);
  for (int y = 0; y < 3; ++y) {
    for (int x = 0; x < 3; ++x) {
      int col = ag_point_index(3, x, y) - 1;
      lift.at(0, col) = 1;
      lift.at(1, col) = x;
      lift.at(2, col) = y;
    }
  }
  Matroid lifted = matroid_from_vectors(lift);
  Matroid ag3 = generate("ag:3").matroid;
  std::vector<Subset> lifted_lines, ag_lines;
  for (Subset f : lifted.flats_of_rank(2))
    if (set_size(f) >= 3) lifted_lines.push_back(f);
  for (Subset f : ag3.flats_of_rank(2))
    if (set_size(f) >= 3) ag_lines.push_back(f);
  CHECK(lifted_lines != ag_lines);
  CHECK(lifted_lines.size() == 8);  // rows, columns and the two integer diagonals
}

TEST_CASE("2k-gon arrangements") {
  for (int k : {3, 4, 6}) {
    Generated gen = generate("ngon:" + std::to_string(k));
    CHECK(gen.matroid.n() == 3 * k);
    CHECK(gen.matroid.rank() == 3);
    CHECK(gen.matroid.is_simple());
    REQUIRE(gen.realization.has_value());
    CHECK(gen.realization->cols() == 3 * k);
    check_pairwise_lines(gen.matroid);
    // The k main diagonals meet at the center: one rank-2 flat of size k
    // on the last k elements.
    Subset diagonals = 0;
    for (int j = 0; j < k; ++j) diagonals |= bit_of(2 * k + j + 1);
    CHECK(gen.matroid.rank_of(diagonals) == 2);
  }
  CHECK_THROWS_AS(generate("ngon:2"), std::invalid_argument);
  CHECK_THROWS_AS(generate("ngon:5"), std::invalid_argument);  // not a quadratic field
}

TEST_CASE("A1(12) arrangement") {
  Generated gen = generate("a112");
  CHECK(gen.matroid.n() == 12);
  CHECK(gen.matroid.rank() == 3);
  CHECK(gen.matroid.is_simple());
  check_pairwise_lines(gen.matroid);
}

TEST_CASE("counterexample realizations match the combinatorial constructions") {
  for (const char* tag : {"m1", "m2"}) {
    Generated gen = generate(tag);
    REQUIRE(gen.realization.has_value());
    auto rational = gen.realization->as_rational();
    REQUIRE(rational.has_value());
    Matroid from_points = matroid_from_vectors(*rational);
    REQUIRE(from_points.n() == gen.matroid.n());
    for (Subset s = 0; s < (Subset{1} << gen.matroid.n()); ++s)
      CHECK(from_points.rank_of(s) == gen.matroid.rank_of(s));
  }
}

TEST_CASE("appendix bullet properties of the counterexample pair") {
  Matroid m1 = generate("m1").matroid;
  Matroid m2 = generate("m2").matroid;
  for (const Matroid* m : {&m1, &m2}) {
    std::vector<Subset> big_lines;
    for (Subset f : m->flats_of_rank(2))
      if (set_size(f) >= 3) big_lines.push_back(f);
    REQUIRE(big_lines.size() == 2);       // exactly two lines with >= 3 points
    for (Subset f : big_lines) {
      CHECK(set_size(f) == 3);
      CHECK_FALSE(contains(f, 7));        // point 7 in general position
    }
  }
  Subset lines_union1 = 0, lines_union2 = 0;
  for (Subset f : m1.flats_of_rank(2))
    if (set_size(f) >= 3) lines_union1 |= f;
  for (Subset f : m2.flats_of_rank(2))
    if (set_size(f) >= 3) lines_union2 |= f;
  CHECK(m1.rank_of(lines_union1) == 4);
  CHECK(m2.rank_of(lines_union2) == 3);
}

TEST_CASE("generated real families agree with their vector matroids") {
  for (const char* tag : {"ngon:3", "ngon:4", "a112"}) {
    Generated gen = generate(tag);
    REQUIRE(gen.realization.has_value());
    Matroid again = matroid_from_quad_vectors(*gen.realization);
    CHECK(again.circuits() == gen.matroid.circuits());
  }
}

TEST_CASE("vector construction rejects loops and parallels by name") {
  RatMatrix with_zero(2, 3);
  with_zero.at(0, 0) = 1;
  with_zero.at(1, 2) = 1;
  CHECK_THROWS_WITH_AS(matroid_from_vectors(with_zero), doctest::Contains("column 2"),
                       std::invalid_argument);

  RatMatrix with_parallel(2, 3);
  with_parallel.at(0, 0) = 1;
  with_parallel.at(0, 1) = 2;
  with_parallel.at(1, 2) = 1;
  CHECK_THROWS_WITH_AS(matroid_from_vectors(with_parallel), doctest::Contains("parallel"),
                       std::invalid_argument);
}
