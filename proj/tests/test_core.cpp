#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ordlat/core.hpp"

using namespace ordlat;

namespace {

Permutation random_perm(int n, std::mt19937& rng) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(std::move(im));
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("compose maps i to p(q(i))") {
  Permutation p({1, 0, 2});
  Permutation q({2, 1, 0});
  CHECK(compose(p, q).images() == std::vector<int>{2, 0, 1});

  Permutation id = Permutation::identity(3);
  CHECK(compose(id, q) == q);
  CHECK(compose(q, id) == q);
}

TEST_CASE("compose with the exhaustively verified inverse gives identity") {
  Permutation p({1, 2, 0});
  Permutation q({2, 0, 1});
  // q is the unique r with p*r = id; verified by scanning all of Sym(3)
  std::vector<int> im{0, 1, 2};
  int inverses_found = 0;
  do {
    Permutation r{std::vector<int>(im)};
    if (compose(p, r).is_identity()) {
      ++inverses_found;
      CHECK(r == q);
    }
  } while (std::next_permutation(im.begin(), im.end()));
  CHECK(inverses_found == 1);
  CHECK(compose(p, q).is_identity());
}

TEST_CASE("compose rejects mismatched sizes") {
  CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)), Error);
}

TEST_CASE("invert on cycles and identity") {
  CHECK(invert(Permutation({1, 2, 0})).images() == std::vector<int>{2, 0, 1});
  CHECK(invert(Permutation::identity(5)) == Permutation::identity(5));
}

TEST_CASE("invert is a two-sided inverse for every permutation up to size 6") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> im(static_cast<size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    do {
      Permutation p{std::vector<int>(im)};
      Permutation q = invert(p);
      CHECK(compose(p, q).is_identity());
      CHECK(compose(q, p).is_identity());
    } while (std::next_permutation(im.begin(), im.end()));
  }
}

TEST_CASE("apply_to_tuple is the pointwise image") {
  Permutation p({1, 0, 2});
  CHECK(apply_to_tuple(p, {0, 2}) == Tuple{1, 2});
  CHECK(apply_to_tuple(Permutation::identity(3), {2, 0, 1}) == Tuple{2, 0, 1});
  CHECK(apply_to_tuple(Permutation({2, 0, 1}), {0, 1, 2}) == Tuple{2, 0, 1});
  CHECK_THROWS_AS(p.apply({3}), Error);
  CHECK_THROWS_AS(p.apply({-1}), Error);
}

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
  CHECK_THROWS_AS(Permutation({1, 2, 3}), Error);
}

TEST_CASE("generate_group on an empty generator list is trivial") {
  PermutationGroup g = generate_group(3, {});
  CHECK(g.order() == 1);
  CHECK(g.members().front().is_identity());
}

TEST_CASE("generate_group of a 3-cycle has the orbit closure as members") {
  Permutation c({1, 2, 0});
  // independent orbit closure: iterate composition until identity returns
  std::set<Permutation> expected{Permutation::identity(3)};
  Permutation cur = c;
  while (!cur.is_identity()) {
    expected.insert(cur);
    cur = compose(cur, c);
  }
  CHECK(expected.size() == 3);
  PermutationGroup g = generate_group(3, {c});
  CHECK(g.order() == 3);
  CHECK(g == PermutationGroup::from_members(
                 std::vector<Permutation>(expected.begin(), expected.end())));
}

TEST_CASE("generate_group of the order reversal is an involution group") {
  PermutationGroup g = generate_group(4, {Permutation({3, 2, 1, 0})});
  CHECK(g.order() == 2);
}

TEST_CASE("composition is associative (sampled)") {
  std::mt19937 rng(20240811);
  for (int n : {2, 4, 8}) {
    for (int i = 0; i < 50; ++i) {
      Permutation p = random_perm(n, rng);
      Permutation q = random_perm(n, rng);
      Permutation r = random_perm(n, rng);
      CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
    }
  }
}

TEST_CASE("generated groups are closed, idempotent, and obey Lagrange") {
  std::mt19937 rng(7);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Permutation> gens;
      for (int i = 0; i < 2; ++i) gens.push_back(random_perm(n, rng));
      PermutationGroup g = generate_group(n, gens);

      for (const Permutation& a : g.members()) {
        CHECK(g.contains(invert(a)));
        for (const Permutation& b : g.members()) {
          CHECK(g.contains(compose(a, b)));
        }
      }

      PermutationGroup again = generate_group(n, g.members());
      CHECK(again == g);

      CHECK(factorial(n) % static_cast<long long>(g.order()) == 0);
    }
  }
}

TEST_CASE("relation and structure validation") {
  FiniteStructure s = FiniteStructure::linear(3);
  CHECK_THROWS_AS(make_relation("r", 2, {{0, 1, 2}}, 3), Error);  // wrong length
  CHECK_THROWS_AS(make_relation("r", 1, {{5}}, 3), Error);        // out of range
  CHECK_THROWS_AS(s.relation("absent"), Error);
  s.add_relation(make_relation("r", 1, {{0}}, 3));
  CHECK(s.relation("r").arity == 1);
  CHECK_FALSE(s.is_grid());
  CHECK_THROWS_AS(s.grid_shape(), Error);
}

TEST_CASE("grid point layout is lexicographic") {
  FiniteStructure g = FiniteStructure::grid(3, 2);
  CHECK(g.size() == 6);
  CHECK(g.point(0, 0) == 0);
  CHECK(g.point(1, 0) == 2);
  CHECK(g.vertical_of(3) == 1);
  CHECK(g.level_of(3) == 1);
  CHECK(g.point_name(3) == "1:1");
  CHECK(g.parse_point_list({"1:1", "0:0"}) == Tuple{3, 0});
  CHECK_THROWS_AS(g.point(3, 0), Error);
}
