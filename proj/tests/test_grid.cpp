#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ordlat/grid.hpp"
#include "ordlat/presets.hpp"

using namespace ordlat;

TEST_CASE("difference function") {
  FiniteStructure g = FiniteStructure::grid(2, 4);
  ExtendedInt two = diff(g, g.point(0, 3), g.point(0, 1));
  CHECK(two.is_finite());
  CHECK(two.value() == 2);
  CHECK_FALSE(diff(g, g.point(0, 1), g.point(1, 1)).is_finite());
  CHECK(diff(g, g.point(1, 2), g.point(1, 2)).value() == 0);
}

TEST_CASE("extended integers compare magnitudes against naturals") {
  ExtendedInt inf = ExtendedInt::infinity();
  CHECK_FALSE(inf.magnitude_at_most(1000000));
  CHECK(inf == ExtendedInt::infinity());
  CHECK_FALSE(inf == ExtendedInt(5));
  CHECK(ExtendedInt(-3).magnitude_at_most(3));
  CHECK_FALSE(ExtendedInt(-4).magnitude_at_most(3));
  CHECK_THROWS_AS(inf.value(), Error);
}

TEST_CASE("classification of grid permutations") {
  FiniteStructure g = FiniteStructure::grid(3, 2);

  SUBCASE("vertical swap is systemic and positive but no shift") {
    Permutation swap01 = lift_uniform(g, Permutation({1, 0, 2}), false);
    PermClass c = classify(g, swap01);
    CHECK(c.systemic);
    CHECK(c.positive);
    CHECK_FALSE(c.negative);
    CHECK_FALSE(c.shift);
    CHECK_FALSE(c.vertical_shift);
  }

  SUBCASE("global reflection is negative") {
    Permutation refl = lift_uniform(g, Permutation({2, 1, 0}), true);
    PermClass c = classify(g, refl);
    CHECK(c.systemic);
    CHECK(c.negative);
    CHECK_FALSE(c.positive);
  }

  SUBCASE("identity carries every flag") {
    PermClass c = classify(g, Permutation::identity(6));
    CHECK(c.systemic);
    CHECK(c.positive);
    CHECK(c.shift);
    CHECK(c.vertical_shift);
  }

  SUBCASE("moving one point across verticals is not systemic") {
    // swap (0,0) with (1,0), keep everything else
    Permutation p({2, 1, 0, 3, 4, 5});
    PermClass c = classify(g, p);
    CHECK_FALSE(c.systemic);
    CHECK_FALSE(c.positive);
    CHECK_THROWS_WITH_AS(initiate(g, p), doctest::Contains("initiation undefined"),
                         Error);
  }
}

TEST_CASE("initiation reads off the vertical permutation") {
  FiniteStructure g = FiniteStructure::grid(3, 2);
  Permutation swap01 = lift_uniform(g, Permutation({1, 0, 2}), false);
  CHECK(initiate(g, swap01) == Permutation({1, 0, 2}));
  CHECK(initiate(g, Permutation::identity(6)) == Permutation::identity(3));
}

TEST_CASE("lifting: negative lift of the identity reverses every vertical") {
  FiniteStructure g = FiniteStructure::grid(2, 3);
  Permutation p = lift_uniform(g, Permutation::identity(2), true);
  for (int v = 0; v < 2; ++v) {
    for (int z = 0; z < 3; ++z) {
      CHECK(p(g.point(v, z)) == g.point(v, 2 - z));
    }
  }
}

TEST_CASE("lifting: rotation lift moves whole verticals") {
  FiniteStructure g = FiniteStructure::grid(3, 2);
  Permutation rot = lift_uniform(g, Permutation({1, 2, 0}), false);
  for (int v = 0; v < 3; ++v) {
    for (int z = 0; z < 2; ++z) {
      CHECK(rot(g.point(v, z)) == g.point((v + 1) % 3, z));
    }
  }
}

TEST_CASE("initiate is a section of lift for every vertical permutation") {
  for (int m = 1; m <= 4; ++m) {
    for (int h : {1, 2, 3}) {
      FiniteStructure g = FiniteStructure::grid(m, h);
      std::vector<int> im(static_cast<size_t>(m));
      std::iota(im.begin(), im.end(), 0);
      do {
        Permutation q{std::vector<int>(im)};
        CHECK(initiate(g, lift_uniform(g, q, false)) == q);
        CHECK(initiate(g, lift_uniform(g, q, true)) == q);
      } while (std::next_permutation(im.begin(), im.end()));
    }
  }
}

TEST_CASE("each vertical permutation has exactly one positive and one negative lift") {
  FiniteStructure g = FiniteStructure::grid(3, 2);
  std::vector<Permutation> lifts = all_systemic_lifts(g);
  CHECK(lifts.size() == 48);
  std::vector<int> im{0, 1, 2};
  do {
    Permutation q{std::vector<int>(im)};
    int positive_count = 0;
    int negative_count = 0;
    for (const Permutation& p : lifts) {
      PermClass c = classify(g, p);
      if (!(initiate(g, p) == q)) continue;
      if (c.positive) ++positive_count;
      if (c.negative) ++negative_count;
    }
    CHECK(positive_count == 1);
    CHECK(negative_count == 1);
  } while (std::next_permutation(im.begin(), im.end()));
}

TEST_CASE("initiation is a homomorphism on systemic permutations") {
  FiniteStructure g = FiniteStructure::grid(3, 2);
  std::vector<Permutation> systemic = all_systemic_lifts(g);
  for (const Permutation& p : systemic) {
    for (const Permutation& q : systemic) {
      CHECK(initiate(g, compose(p, q)) ==
            compose(initiate(g, p), initiate(g, q)));
    }
  }
}

TEST_CASE("m-indistinguishability on a window") {
  FiniteStructure w = FiniteStructure::grid(1, 21);
  Tuple a{0, 1, 5};
  Tuple b{0, 1, 9};
  CHECK(m_indistinguishable(w, a, b, 1));
  CHECK_FALSE(m_indistinguishable(w, a, b, 4));
  CHECK(m_indistinguishable(w, a, a, 20));
  CHECK_THROWS_AS(m_indistinguishable(w, {0, 1}, {0}, 1), Error);
}

TEST_CASE("indistinguishability needs matching infinite differences") {
  FiniteStructure g = FiniteStructure::grid(2, 4);
  Tuple a{g.point(0, 0), g.point(0, 1)};  // same vertical, distance 1
  Tuple b{g.point(0, 0), g.point(1, 1)};  // across verticals
  CHECK_FALSE(m_indistinguishable(g, a, b, 1));
  // ... but two fully cross-vertical pairs agree at any depth
  Tuple c{g.point(0, 0), g.point(1, 0)};
  CHECK(m_indistinguishable(g, b, c, 3));
}

TEST_CASE("m-indistinguishable tuples are k-indistinguishable for k < m") {
  FiniteStructure g = FiniteStructure::grid(2, 6);
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> point(0, g.size() - 1);
  int seen = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    Tuple a{point(rng), point(rng), point(rng)};
    Tuple b{point(rng), point(rng), point(rng)};
    for (int m = 5; m >= 1; --m) {
      if (m_indistinguishable(g, a, b, m)) {
        ++seen;
        for (int k = 0; k < m; ++k) {
          CHECK(m_indistinguishable(g, a, b, k));
        }
        break;
      }
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("full-depth indistinguishability forces preset agreement") {
  FiniteStructure w = FiniteStructure::grid(1, 6);
  std::vector<Relation> presets = {
      equality(w), order(w), between(w), cycle(w), separation(w), equipollence(w),
      grid_relation(w, Preset::Dist, 1), grid_relation(w, Preset::Succ, 1),
      grid_relation(w, Preset::Codir, 1)};
  const int span = w.size() - 1;
  for (const Relation& r : presets) {
    std::vector<Tuple> tuples;
    for_each_tuple(w.size(), r.arity, [&](const Tuple& t) { tuples.push_back(t); });
    for (size_t i = 0; i < tuples.size(); ++i) {
      for (size_t j = i + 1; j < tuples.size(); ++j) {
        if (m_indistinguishable(w, tuples[i], tuples[j], span)) {
          CHECK(r.contains(tuples[i]) == r.contains(tuples[j]));
        }
      }
    }
  }
}

TEST_CASE("boundaries of the local presets") {
  FiniteStructure w = FiniteStructure::grid(1, 6);
  w.add_relation(order(w));
  w.add_relation(grid_relation(w, Preset::Succ, 1));
  w.add_relation(grid_relation(w, Preset::Dist, 1));
  w.add_relation(grid_relation(w, Preset::Codir, 2));
  CHECK(boundary(w, w.relation("order"), 5) == 0);
  CHECK(boundary(w, w.relation("succ_1"), 5) == 1);
  CHECK(boundary(w, w.relation("dist_1"), 5) == 1);
  CHECK(boundary(w, w.relation("codir_2"), 5) == 2);
  // parallel scan reduces to the same value
  CHECK(boundary(w, w.relation("codir_2"), 5, 4) == 2);
  // a cap below the boundary reports failure
  CHECK(boundary(w, w.relation("succ_1"), 0) == std::nullopt);
}

TEST_CASE("boundary requires a window") {
  FiniteStructure s = FiniteStructure::linear(5);
  Relation o = order(s);
  CHECK_THROWS_WITH_AS(boundary(s, o, 4), doctest::Contains("grid"), Error);
}

TEST_CASE("an unconstrained relation exceeds every cap") {
  // true on one point, false on its translate: never local
  FiniteStructure w = FiniteStructure::grid(1, 5);
  Relation r = make_relation("spot", 1, {{2}}, w.size());
  CHECK(boundary(w, r, 4) == std::nullopt);
}

TEST_CASE("block placement packs with the requested gaps") {
  FiniteStructure g = FiniteStructure::grid(1, 6);
  Tuple placed = place_blocks(g, {{0, 1}, {0, 1}}, {0, 0}, 2);
  CHECK(placed == Tuple{0, 1, 4, 5});
}

TEST_CASE("single block placement starts at the bottom") {
  FiniteStructure g = FiniteStructure::grid(2, 4);
  CHECK(place_blocks(g, {{0, 2, 3}}, {1}, 3) ==
        Tuple{g.point(1, 0), g.point(1, 2), g.point(1, 3)});
}

TEST_CASE("overfull verticals report the minimal height") {
  FiniteStructure g = FiniteStructure::grid(1, 5);
  CHECK_THROWS_WITH_AS(place_blocks(g, {{0}, {0}, {0}}, {0, 0, 0}, 2),
                       doctest::Contains("grid too small"), Error);
  CHECK_THROWS_WITH_AS(place_blocks(g, {{0}, {0}, {0}}, {0, 0, 0}, 2),
                       doctest::Contains("height >= 7"), Error);
}

TEST_CASE("block placement rejects malformed inputs") {
  FiniteStructure g = FiniteStructure::grid(2, 5);
  CHECK_THROWS_AS(place_blocks(g, {{1, 1}}, {0}, 1), Error);
  CHECK_THROWS_AS(place_blocks(g, {{0}}, {0, 1}, 1), Error);
  CHECK_THROWS_AS(place_blocks(g, {{0}}, {7}, 1), Error);
}

TEST_CASE("placements with one assignment shape are gap-indistinguishable") {
  FiniteStructure g = FiniteStructure::grid(4, 12);
  std::vector<Block> blocks = {{0, 1}, {0, 2}, {0}};
  const int gap = 2;
  Tuple on_one = place_blocks(g, blocks, {0, 0, 0}, gap);
  Tuple on_other = place_blocks(g, blocks, {2, 2, 2}, gap);
  CHECK(m_indistinguishable(g, on_one, on_other, gap));
  Tuple split_a = place_blocks(g, blocks, {0, 0, 1}, gap);
  Tuple split_b = place_blocks(g, blocks, {1, 1, 3}, gap);
  CHECK(m_indistinguishable(g, split_a, split_b, gap));
}

TEST_CASE("block reshuffles preserve the successor relation (small case)") {
  FiniteStructure g = FiniteStructure::grid(4, 8);
  g.add_relation(grid_relation(g, Preset::Succ, 1));
  const Relation& r = g.relation("succ_1");
  for (const std::vector<Block>& blocks :
       std::vector<std::vector<Block>>{{{0}, {0}}, {{0, 1}}, {{0, 3}}, {{0}, {0, 2}}}) {
    const int count = static_cast<int>(blocks.size());
    for (int k = 0; k <= count; ++k) {
      for (int l = k; l <= count; ++l) {
        for (int m = l; m <= count; ++m) {
          std::vector<int> group(blocks.size());
          std::vector<int> reshuffled(blocks.size());
          for (int i = 0; i < count; ++i) {
            group[static_cast<size_t>(i)] = i < k ? 0 : i < l ? 1 : i < m ? 2 : 3;
            reshuffled[static_cast<size_t>(i)] = 3 - group[static_cast<size_t>(i)];
          }
          Tuple a = place_blocks(g, blocks, group, 1);
          Tuple b = place_blocks(g, blocks, reshuffled, 1);
          CHECK(r.contains(a) == r.contains(b));
        }
      }
    }
  }
}

TEST_CASE("section classifier on the documented examples") {
  SUBCASE("rotation matches a single section under condition ii") {
    std::vector<SectionMatch> matches = section_classify(Permutation({1, 2, 3, 0}));
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].section.split == 3);
    CHECK_FALSE(matches[0].condition_i);
  }

  SUBCASE("full reversal satisfies condition i with an empty part") {
    std::vector<SectionMatch> matches = section_classify(Permutation({3, 2, 1, 0}));
    REQUIRE(!matches.empty());
    bool found = false;
    for (const SectionMatch& m : matches) {
      if (m.section.split == 4 && m.condition_i) found = true;
      CHECK(m.condition_i);  // a reversal never satisfies the increasing condition
    }
    CHECK(found);
  }

  SUBCASE("a transposition matches nothing") {
    CHECK(section_classify(Permutation({1, 0, 2, 3})).empty());
  }

  SUBCASE("identity is captured through the vacuous empty part") {
    std::vector<SectionMatch> matches = section_classify(Permutation::identity(4));
    REQUIRE(!matches.empty());
    for (const SectionMatch& m : matches) {
      CHECK_FALSE(m.condition_i);
      CHECK((m.section.split == 0 || m.section.split == 4));
    }
  }
}

TEST_CASE("nonempty section matches characterize rotations and reflections") {
  const int n = 5;
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::set<std::vector<int>> matched;
  do {
    if (!section_classify(Permutation{std::vector<int>(im)}).empty()) {
      matched.insert(im);
    }
  } while (std::next_permutation(im.begin(), im.end()));

  std::set<std::vector<int>> dihedral;
  for (int j = 0; j < n; ++j) {
    std::vector<int> rot(n), refl(n);
    for (int x = 0; x < n; ++x) {
      rot[static_cast<size_t>(x)] = (x + j) % n;
      refl[static_cast<size_t>(x)] = ((j - x) % n + n) % n;
    }
    dihedral.insert(rot);
    dihedral.insert(refl);
  }
  CHECK(dihedral.size() == 2 * n);
  CHECK(matched == dihedral);
}
