#include <doctest.h>

#include "ordlat/formula.hpp"
#include "ordlat/presets.hpp"

using namespace ordlat;

TEST_CASE("between membership") {
  FiniteStructure s = FiniteStructure::linear(4);
  Relation b = between(s);
  CHECK(b.contains({0, 1, 2}));
  CHECK_FALSE(b.contains({1, 1, 2}));
  CHECK(b.contains({3, 2, 1}));
}

TEST_CASE("cycle membership") {
  FiniteStructure s = FiniteStructure::linear(3);
  Relation c = cycle(s);
  CHECK(c.contains({1, 2, 0}));
  CHECK_FALSE(c.contains({2, 1, 0}));
  CHECK(c.contains({0, 1, 2}));
}

TEST_CASE("separation membership") {
  FiniteStructure s = FiniteStructure::linear(4);
  Relation sep = separation(s);
  CHECK(sep.contains({0, 1, 2, 3}));
  CHECK_FALSE(sep.contains({0, 2, 1, 3}));
  CHECK(sep.contains({3, 2, 1, 0}));
}

TEST_CASE("equipollence membership") {
  FiniteStructure s = FiniteStructure::linear(4);
  Relation e = equipollence(s);
  CHECK(e.contains({0, 1, 2, 3}));
  CHECK_FALSE(e.contains({0, 1, 3, 2}));
  CHECK(e.contains({1, 0, 3, 2}));
}

TEST_CASE("equality and order presets") {
  FiniteStructure s = FiniteStructure::linear(2);
  CHECK(equality(s).extension == std::set<Tuple>{{0, 0}, {1, 1}});
  CHECK(order(s).extension == std::set<Tuple>{{0, 1}});
}

TEST_CASE("codirection on the grid") {
  FiniteStructure g = FiniteStructure::grid(2, 3);
  Relation codir = grid_relation(g, Preset::Codir, 1);
  // equal signed unit differences on two verticals
  CHECK(codir.contains({g.point(0, 0), g.point(0, 1), g.point(1, 0), g.point(1, 1)}));
  CHECK(codir.contains({g.point(0, 1), g.point(0, 0), g.point(1, 2), g.point(1, 1)}));
  // opposite directions do not co-direct
  CHECK_FALSE(codir.contains({g.point(0, 0), g.point(0, 1), g.point(1, 1), g.point(1, 0)}));
  // a pair straddling two verticals has infinite difference
  CHECK_FALSE(codir.contains({g.point(0, 0), g.point(1, 0), g.point(0, 0), g.point(1, 0)}));
  for (const Tuple& t : codir.extension) {
    CHECK(g.vertical_of(t[0]) == g.vertical_of(t[1]));
    CHECK(g.vertical_of(t[2]) == g.vertical_of(t[3]));
  }
}

TEST_CASE("successor orientation") {
  FiniteStructure g = FiniteStructure::grid(2, 3);
  Relation succ = grid_relation(g, Preset::Succ, 1);
  CHECK(succ.contains({g.point(0, 0), g.point(0, 1)}));
  CHECK_FALSE(succ.contains({g.point(0, 1), g.point(0, 0)}));
}

TEST_CASE("neighbor is distance one") {
  FiniteStructure g = FiniteStructure::grid(3, 2);
  Relation n = grid_relation(g, Preset::Neighbor, 1);
  Relation d1 = grid_relation(g, Preset::Dist, 1);
  CHECK(n.extension == d1.extension);
  CHECK(n.name == "neighbor");
}

TEST_CASE("parameter past the window height empties the extension") {
  FiniteStructure g = FiniteStructure::grid(2, 3);
  CHECK(grid_relation(g, Preset::Dist, 3).extension.empty());
  CHECK(grid_relation(g, Preset::Succ, 5).extension.empty());
}

TEST_CASE("grid presets reject linear structures") {
  FiniteStructure s = FiniteStructure::linear(5);
  CHECK_THROWS_WITH_AS(make_preset(s, Preset::Codir, 1), doctest::Contains("grid"),
                       Error);
  CHECK_THROWS_AS(make_preset(s, Preset::Neighbor), Error);
}

TEST_CASE("preset names parse and render") {
  CHECK(parse_preset_name("between") == Preset::Between);
  CHECK(parse_preset_name("codir") == Preset::Codir);
  CHECK_THROWS_AS(parse_preset_name("nope"), Error);
  CHECK(preset_relation_name(Preset::Codir, 2) == "codir_2");
  CHECK(preset_relation_name(Preset::Neighbor, 1) == "neighbor");
  CHECK(preset_needs_grid(Preset::Succ));
  CHECK_FALSE(preset_needs_grid(Preset::Cycle));
}

TEST_CASE("symmetry laws hold exhaustively up to size 6") {
  for (int n = 1; n <= 6; ++n) {
    FiniteStructure s = FiniteStructure::linear(n);
    Relation b = between(s);
    Relation c = cycle(s);
    Relation sep = separation(s);
    for_each_tuple(n, 3, [&](const Tuple& t) {
      CHECK(b.contains(t) == b.contains({t[2], t[1], t[0]}));
      CHECK(c.contains(t) == c.contains({t[1], t[2], t[0]}));
    });
    for_each_tuple(n, 4, [&](const Tuple& t) {
      bool base = sep.contains(t);
      CHECK(base == sep.contains({t[1], t[2], t[3], t[0]}));
      CHECK(base == sep.contains({t[2], t[3], t[0], t[1]}));
    });
  }
}

TEST_CASE("grid presets agree with their defining formulas") {
  for (auto [m, h] : std::vector<std::pair<int, int>>{{1, 6}, {2, 3}, {3, 2}}) {
    FiniteStructure g = FiniteStructure::grid(m, h);
    CHECK(evaluate(parse("D1(x,y) := diff(x,y,1) | diff(x,y,-1)"), g).extension ==
          grid_relation(g, Preset::Dist, 1).extension);
    CHECK(evaluate(parse("S2(x,y) := diff(y,x,2)"), g).extension ==
          grid_relation(g, Preset::Succ, 2).extension);
    CHECK(evaluate(parse("A11(x,y,z,t) := (diff(x,y,1) & diff(z,t,1)) | "
                         "(diff(x,y,-1) & diff(z,t,-1))"),
                   g)
              .extension == grid_relation(g, Preset::Codir, 1).extension);
  }
}

TEST_CASE("distance is symmetric and successors compose") {
  FiniteStructure g = FiniteStructure::grid(2, 6);
  Relation d2 = grid_relation(g, Preset::Dist, 2);
  for (const Tuple& t : d2.extension) {
    CHECK(d2.contains({t[1], t[0]}));
  }
  Relation s1 = grid_relation(g, Preset::Succ, 1);
  Relation s2 = grid_relation(g, Preset::Succ, 2);
  Relation s3 = grid_relation(g, Preset::Succ, 3);
  for (const Tuple& ab : s1.extension) {
    for (const Tuple& bc : s2.extension) {
      if (ab[1] != bc[0]) continue;
      CHECK(s3.contains({ab[0], bc[1]}));
    }
  }
}
