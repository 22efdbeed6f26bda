#include <doctest.h>

#include <random>

#include "matos/families.hpp"
#include "matos/matroid.hpp"

using namespace matos;

namespace {

Subset set(std::initializer_list<int> elems, int n) {
  return subset_from(std::vector<int>(elems), n);
}

// Independent oracle: minimal dependent sets straight from the rank oracle.
std::vector<Subset> brute_circuits(const Matroid& m) {
  std::vector<Subset> out;
  for (Subset s = 1; s < (Subset{1} << m.n()); ++s) {
    if (m.independent(s)) continue;
    bool minimal = true;
    Subset rest = s;
    while (rest && minimal) {
      Subset e = rest & (0u - rest);
      rest &= rest - 1;
      minimal = m.independent(s ^ e);
    }
    if (minimal) out.push_back(s);
  }
  sort_size_lex(out);
  return out;
}

Matroid relabel(const Matroid& m, const std::vector<int>& image) {
  std::vector<Subset> circuits;
  for (Subset c : m.circuits()) {
    Subset img = 0;
    for (int e : elements_of(c)) img |= bit_of(image[static_cast<std::size_t>(e)]);
    circuits.push_back(img);
  }
  return Matroid::from_circuits(m.n(), std::move(circuits));
}

std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> image(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) image[static_cast<std::size_t>(i)] = i;
  std::shuffle(image.begin() + 1, image.end(), rng);
  return image;
}

}  // namespace

TEST_CASE("rank on the counterexample pair") {
  Matroid m1 = generate("m1").matroid;
  Matroid m2 = generate("m2").matroid;
  CHECK(m1.rank_of(set({1, 2, 3}, 7)) == 2);  // a 3-point line
  CHECK(m1.rank_of(0) == 0);
  CHECK(m2.rank_of(set({1, 2, 3, 4, 5}, 7)) == 3);  // both lines lie in a plane
  CHECK(m1.rank_of(set({1, 2, 3, 4, 5, 6}, 7)) == 4);
  CHECK(m1.rank() == 4);
  CHECK(m2.rank() == 4);
}

TEST_CASE("circuits of the small standards") {
  CHECK(generate("u:2,3").matroid.circuits() == std::vector<Subset>{set({1, 2, 3}, 3)});
  CHECK(generate("u:3,3").matroid.circuits().empty());

  Matroid p5 = generate("p5").matroid;
  std::vector<Subset> expected{set({1, 2, 3}, 5), set({3, 4, 5}, 5), set({1, 2, 4, 5}, 5)};
  sort_size_lex(expected);
  CHECK(p5.circuits() == expected);
  CHECK(p5.circuits() == brute_circuits(p5));
}

TEST_CASE("flats of each rank") {
  Matroid m1 = generate("m1").matroid;
  std::vector<Subset> big_lines;
  for (Subset f : m1.flats_of_rank(2))
    if (set_size(f) >= 3) big_lines.push_back(f);
  CHECK(big_lines == std::vector<Subset>{set({1, 2, 3}, 7), set({4, 5, 6}, 7)});

  Matroid ag3 = generate("ag:3").matroid;
  std::vector<Subset> lines = ag3.flats_of_rank(2);
  CHECK(lines.size() == 12);
  for (Subset f : lines) CHECK(set_size(f) == 3);

  Matroid u33 = generate("u:3,3").matroid;
  CHECK(u33.flats_of_rank(2) == subsets_of_size(3, 2));

  CHECK_THROWS_AS(u33.flats_of_rank(4), std::invalid_argument);
}

TEST_CASE("minors") {
  Matroid u23 = generate("u:2,3").matroid;

  Matroid deleted = u23.minor(set({3}, 3), 0);
  CHECK(deleted.n() == 2);
  CHECK(deleted.rank() == 2);
  CHECK(deleted.circuits().empty());
  CHECK(deleted.is_simple());

  Matroid contracted = u23.minor(0, set({3}, 3));
  CHECK(contracted.n() == 2);
  CHECK(contracted.rank() == 1);
  CHECK(contracted.circuits() == std::vector<Subset>{set({1, 2}, 2)});
  CHECK_FALSE(contracted.is_simple());

  Matroid m1 = generate("m1").matroid;
  Matroid m1_minus_7 = m1.minor(set({7}, 7), 0);
  Matroid sum = Matroid::direct_sum(generate("u:2,3").matroid, generate("u:2,3").matroid);
  CHECK(m1_minus_7.circuits() == sum.circuits());

  CHECK_THROWS_AS(u23.minor(set({1}, 3), set({1}, 3)), std::invalid_argument);
}

TEST_CASE("direct sums") {
  Matroid u23 = generate("u:2,3").matroid;
  Matroid sum = Matroid::direct_sum(u23, u23);
  CHECK(sum.n() == 6);
  CHECK(sum.rank() == 4);
  CHECK(sum.circuits() == std::vector<Subset>{set({1, 2, 3}, 6), set({4, 5, 6}, 6)});
  CHECK(sum.bases_count() == 9);

  Matroid coloop = Matroid::from_circuits(1, {});
  Matroid with_coloop = Matroid::direct_sum(u23, coloop);
  CHECK(with_coloop.rank() == u23.rank() + 1);
  std::vector<Subset> expected;
  for (Subset b : u23.bases()) expected.push_back(b | bit_of(4));
  CHECK(with_coloop.bases() == expected);

  Matroid mixed = Matroid::direct_sum(u23, generate("u:3,3").matroid);
  CHECK(mixed.bases_count() == 3);  // 3 * 1 bases of size 5
}

TEST_CASE("free extension") {
  Matroid u23 = generate("u:2,3").matroid;
  Matroid u24 = u23.free_extension();
  CHECK(u24.n() == 4);
  CHECK(u24.rank() == 2);
  CHECK(u24.circuits() == subsets_of_size(4, 3));  // uniform by symmetry

  Matroid m1 = Matroid::direct_sum(u23, u23).free_extension();
  CHECK(m1.bases_count() == 27);

  Matroid u34 = generate("u:3,3").matroid.free_extension();
  CHECK(u34.circuits() == std::vector<Subset>{set({1, 2, 3, 4}, 4)});
}

TEST_CASE("truncation") {
  Matroid u33 = generate("u:3,3").matroid;
  Matroid t = u33.truncation();
  CHECK(t.n() == 3);
  CHECK(t.rank() == 2);
  CHECK(t.circuits() == std::vector<Subset>{set({1, 2, 3}, 3)});

  Matroid u24 = generate("u:2,4").matroid;
  Matroid u34 = generate("u:3,4").matroid;
  CHECK(u34.truncation().circuits() == u24.circuits());

  CHECK_THROWS_WITH_AS(generate("u:2,3").matroid.truncation(),
                       doctest::Contains("parallel pair"), std::invalid_argument);
}

TEST_CASE("truncation keeps exactly the sets of full minor rank independent") {
  for (const char* tag : {"u:3,4", "u:3,5", "p5", "u:4,5"}) {
    Matroid m = generate(tag).matroid;
    Matroid t = m.truncation();
    CHECK(t.rank() == m.rank() - 1);
    for (Subset s : subsets_of_size(m.n(), m.rank() - 1)) {
      bool still_independent = t.independent(s);
      CHECK(still_independent == (m.rank_of(s) == m.rank() - 1));
    }
  }
}

TEST_CASE("bases counts of the appendix pair") {
  CHECK(generate("m1").matroid.bases_count() == 27);
  CHECK(generate("m2").matroid.bases_count() == 26);
}

TEST_CASE("canonical keys") {
  std::mt19937 rng(5150);
  Matroid sum = Matroid::direct_sum(generate("u:2,3").matroid, generate("u:2,3").matroid);
  std::string key = sum.canonical_key();
  for (int trial = 0; trial < 5; ++trial) {
    CHECK(relabel(sum, random_permutation(6, rng)).canonical_key() == key);
  }

  CHECK(generate("m1").matroid.canonical_key() != generate("m2").matroid.canonical_key());

  Matroid u44 = generate("u:4,4").matroid;
  Matroid via_chain = u44.free_extension().minor(0, bit_of(5));  // truncation of U(4,4)
  CHECK(via_chain.canonical_key() == generate("u:3,4").matroid.canonical_key());
}

TEST_CASE("canonical key equality matches isomorphism search on small corpus") {
  std::vector<Matroid> corpus;
  for (const char* tag : {"u:2,3", "u:3,3", "u:2,4", "u:3,4", "p5", "m1", "m2"})
    corpus.push_back(generate(tag).matroid);
  corpus.push_back(Matroid::direct_sum(generate("u:2,3").matroid, generate("u:2,3").matroid));
  corpus.push_back(Matroid::direct_sum(generate("p5").matroid, Matroid::from_circuits(1, {})));
  std::mt19937 rng(11);
  corpus.push_back(relabel(generate("m1").matroid, random_permutation(7, rng)));

  for (const Matroid& a : corpus) {
    for (const Matroid& b : corpus) {
      if (a.n() != b.n()) continue;
      bool keys_equal = a.canonical_key() == b.canonical_key();
      bool isomorphic = Matroid::find_isomorphism(a, b).has_value();
      CHECK(keys_equal == isomorphic);
    }
  }
}

TEST_CASE("isomorphism search") {
  std::mt19937 rng(999);
  Matroid p5 = generate("p5").matroid;
  auto image = random_permutation(5, rng);
  Matroid shuffled = relabel(p5, image);
  auto iso = Matroid::find_isomorphism(p5, shuffled);
  REQUIRE(iso.has_value());
  // The found bijection must carry circuits onto circuits.
  Matroid pushed = relabel(p5, *iso);
  CHECK(pushed.circuits() == shuffled.circuits());

  CHECK_FALSE(Matroid::find_isomorphism(generate("m1").matroid, generate("m2").matroid).has_value());

  Matroid sum = Matroid::direct_sum(generate("u:2,3").matroid, generate("u:2,3").matroid);
  auto iso2 = Matroid::find_isomorphism(generate("m1").matroid.minor(bit_of(7), 0), sum);
  REQUIRE(iso2.has_value());
}

TEST_CASE("rank is monotone and submodular on the small corpus") {
  for (const char* tag : {"u:2,4", "u:3,5", "p5", "m1", "m2", "ag:2"}) {
    Matroid m = generate(tag).matroid;
    REQUIRE(m.n() <= 8);
    const Subset full = full_set(m.n());
    for (Subset s = 0; s <= full && s < (Subset{1} << m.n()); ++s) {
      for (Subset t = s; t <= full && t < (Subset{1} << m.n()); ++t) {
        int sum_ranks = m.rank_of(s) + m.rank_of(t);
        CHECK(m.rank_of(s | t) + m.rank_of(s & t) <= sum_ranks);
      }
      if (s != full) {
        Subset rest = ~s & full;
        Subset e = rest & (0u - rest);
        CHECK(m.rank_of(s) <= m.rank_of(s | e));
      }
    }
  }
}

TEST_CASE("circuit, basis and vector backings give the same rank oracle") {
  // P5 from incidence lines, from its bases, and from a rational realization
  // (planar points with collinear triples {1,2,3} and {3,4,5}).
  Matroid from_lines = generate("p5").matroid;
  Matroid from_bases = Matroid::from_bases(5, from_lines.bases());
  RatMatrix pts(3, 5);
  auto assign = [&](int col, long x, long y) {
    pts.at(0, col) = 1;
    pts.at(1, col) = x;
    pts.at(2, col) = y;
  };
  assign(0, 1, 0);
  assign(1, 2, 0);
  assign(2, 0, 0);
  assign(3, 0, 1);
  assign(4, 0, 2);
  Matroid from_vectors = matroid_from_vectors(pts);

  for (Subset s = 0; s < (Subset{1} << 5); ++s) {
    CHECK(from_lines.rank_of(s) == from_bases.rank_of(s));
    CHECK(from_lines.rank_of(s) == from_vectors.rank_of(s));
  }
  CHECK(from_bases.backing() == BackingKind::kBases);
  CHECK(from_vectors.backing() == BackingKind::kVectors);
}

TEST_CASE("free extension adds no big line through the new point") {
  for (const char* tag : {"u:2,3", "u:3,4", "p5", "m1"}) {
    Matroid m = generate(tag).matroid;
    Matroid ext = m.free_extension();
    CHECK(ext.rank() == m.rank());
    for (Subset f : ext.flats_of_rank(2)) {
      if (contains(f, ext.n())) CHECK(set_size(f) <= 2);
    }
  }
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(Matroid::from_circuits(3, {set({1}, 3)}), std::invalid_argument);     // loop
  CHECK_THROWS_AS(Matroid::from_circuits(3, {set({1, 2}, 3)}), std::invalid_argument);  // parallel
  CHECK_THROWS_AS(Matroid::from_circuits(4, {set({1, 2, 3}, 4), set({1, 2, 3, 4}, 4)}),
                  std::invalid_argument);  // not an antichain
  // Exchange failure: circuits {1,2,3} and {1,4,5} demand one inside {2,3,4,5}.
  CHECK_THROWS_AS(Matroid::from_circuits(5, {set({1, 2, 3}, 5), set({1, 4, 5}, 5)}), std::invalid_argument);

  CHECK_THROWS_AS(Matroid::from_bases(4, {set({1, 2}, 4), set({1, 2, 3}, 4)}), std::invalid_argument);
  CHECK_THROWS_AS(Matroid::from_bases(4, {set({1, 2}, 4), set({3, 4}, 4)}), std::invalid_argument);

  std::string why;
  CHECK(verify_circuit_axioms(5, generate("p5").matroid.circuits(), &why));
  CHECK_FALSE(verify_circuit_axioms(5, {set({1, 2, 3}, 5), set({1, 4, 5}, 5)}, &why));
  CHECK(why.find("exchange") != std::string::npos);

  Matroid empty = Matroid::from_circuits(0, {});
  CHECK(empty.n() == 0);
  CHECK(empty.rank() == 0);
}
