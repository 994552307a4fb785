#include "ordlat/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "ordlat/galois.hpp"
#include "ordlat/grid.hpp"
#include "ordlat/presets.hpp"

namespace ordlat {

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

FiniteStructure linear_with_presets(int n) {
  FiniteStructure s = FiniteStructure::linear(n);
  for (Preset p : {Preset::Equality, Preset::Order, Preset::Between, Preset::Cycle,
                   Preset::Separation, Preset::Equipollence}) {
    s.add_relation(make_preset(s, p));
  }
  return s;
}

FiniteStructure grid_with_presets(const GridShape& shape) {
  FiniteStructure s = FiniteStructure::grid(shape.verticals, shape.height);
  for (Preset p : {Preset::Equality, Preset::Order, Preset::Between, Preset::Cycle,
                   Preset::Separation, Preset::Equipollence, Preset::Neighbor}) {
    s.add_relation(make_preset(s, p));
  }
  for (Preset p : {Preset::Dist, Preset::Succ, Preset::Codir}) {
    s.add_relation(make_preset(s, p, 1));
    s.add_relation(make_preset(s, p, 2));
  }
  return s;
}

std::string join_orders(const std::vector<DefinabilitySpace>& spaces) {
  std::string out;
  for (size_t i = 0; i < spaces.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spaces[i].group.order());
  }
  return out;
}

bool strictly_contains(const PermutationGroup& big, const PermutationGroup& small) {
  return small.subgroup_of(big) && small.order() < big.order();
}

// expected covering edges as (lower label, upper label) pairs
bool edges_match(const HasseDiagram& d,
                 std::vector<std::pair<std::string, std::string>> expected) {
  std::vector<std::pair<std::string, std::string>> actual;
  for (auto [lo, hi] : d.edges) {
    actual.emplace_back(d.labels[static_cast<size_t>(lo)],
                        d.labels[static_cast<size_t>(hi)]);
  }
  std::sort(actual.begin(), actual.end());
  std::sort(expected.begin(), expected.end());
  return actual == expected;
}

bool witnesses_valid(const FiniteStructure& s, const HasseDiagram& d,
                     const std::vector<Witness>& witnesses) {
  if (witnesses.size() != d.edges.size()) return false;
  for (size_t i = 0; i < witnesses.size(); ++i) {
    const Witness& w = witnesses[i];
    const DefinabilitySpace& lower = d.nodes[static_cast<size_t>(d.edges[i].first)];
    for (const std::string& gen : lower.generator_names) {
      if (!preserves(w.permutation, s.relation(gen))) return false;
    }
    const Relation& broken = s.relation(w.broken);
    if (broken.contains(w.tuple) == broken.contains(w.permutation.apply(w.tuple))) {
      return false;
    }
  }
  return true;
}

std::string collapsed_pairs(const std::vector<DefinabilitySpace>& spaces) {
  std::string out;
  for (size_t i = 0; i < spaces.size(); ++i) {
    for (size_t j = i + 1; j < spaces.size(); ++j) {
      if (spaces[i].group == spaces[j].group) {
        if (!out.empty()) out += ' ';
        out += "collapsed:" + spaces[i].label() + "=" + spaces[j].label();
      }
    }
  }
  return out;
}

std::string render_boundary(const std::optional<int>& b) {
  return b ? std::to_string(*b) : std::string("exceeds-cap");
}

// ---- A9 machinery: block vectors and the four-group reshuffle ----

void block_shapes(int length, int max_span, std::vector<Block>& out) {
  if (length == 1) {
    out.push_back({0});
    return;
  }
  // a shape is 0 followed by length-1 strictly increasing values <= max_span
  std::vector<int> choice(static_cast<size_t>(length - 1));
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == length - 1) {
      Block b{0};
      b.insert(b.end(), choice.begin(), choice.end());
      out.push_back(std::move(b));
      return;
    }
    for (int v = from; v <= max_span; ++v) {
      choice[static_cast<size_t>(pos)] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 1);
}

std::vector<std::vector<Block>> block_vectors(int total_points, int max_total_span) {
  std::vector<std::vector<Block>> out;
  std::vector<Block> current;
  std::function<void(int, int)> rec = [&](int remaining, int span_budget) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int len = 1; len <= remaining; ++len) {
      std::vector<Block> shapes;
      block_shapes(len, span_budget, shapes);
      for (Block& shape : shapes) {
        int span = shape.back() - shape.front();
        current.push_back(std::move(shape));
        rec(remaining - len, span_budget - span);
        current.pop_back();
      }
    }
  };
  rec(total_points, max_total_span);
  return out;
}

}  // namespace

bool VerifyReport::all_pass() const {
  for (const CriterionResult& c : criteria) {
    if (!c.pass) return false;
  }
  return true;
}

std::string VerifyReport::text() const {
  std::ostringstream out;
  for (const CriterionResult& c : criteria) {
    out << c.id << ' ' << (c.pass ? "PASS" : "FAIL") << ' ' << c.detail << '\n';
  }
  return out.str();
}

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  const int jobs = std::max(1, options.jobs);

  // ---- A1: the five-space lattice on the linear order ----
  {
    CriterionResult c{"A1", false, ""};
    const int n = options.linear_n;
    if (n < 4 || n > 7) {
      c.detail = "linear n=" + std::to_string(n) + " outside exhaustive range 4..7";
    } else {
      FiniteStructure s = linear_with_presets(n);
      std::vector<DefinabilitySpace> spaces;
      for (const char* name : {"equality", "separation", "between", "cycle", "order"}) {
        DefinabilitySpace space;
        space.generator_names = {name};
        space.group = aut_group_exhaustive(s, {s.relation(name)});
        spaces.push_back(std::move(space));
      }
      std::vector<long long> expected = {factorial(n), 2LL * n, 2, n, 1};
      bool orders_ok = true;
      for (size_t i = 0; i < spaces.size(); ++i) {
        if (static_cast<long long>(spaces[i].group.order()) != expected[i]) {
          orders_ok = false;
        }
      }
      HasseDiagram d = hasse(spaces);
      bool shape_ok =
          d.nodes.size() == 5 &&
          edges_match(d, {{"equality", "separation"},
                          {"separation", "between"},
                          {"separation", "cycle"},
                          {"between", "order"},
                          {"cycle", "order"}});
      report.fig1_dot = to_dot(d);
      c.pass = orders_ok && shape_ok;
      c.detail = "fig1 n=" + std::to_string(n) + " orders=" + join_orders(spaces) +
                 " shape=" + (shape_ok ? "ok" : "mismatch");
      std::string collapsed = collapsed_pairs(spaces);
      if (!collapsed.empty()) c.detail += ' ' + collapsed;
    }
    report.criteria.push_back(std::move(c));
  }

  // ---- A2: equipollence and between generate the same space ----
  {
    CriterionResult c{"A2", true, "equipollence<->between definable on n="};
    for (int n : {4, 5, 6}) {
      FiniteStructure s = linear_with_presets(n);
      bool e_from_b = !definable(s, s.relation("equipollence"), {"between"}, jobs);
      bool b_from_e = !definable(s, s.relation("between"), {"equipollence"}, jobs);
      if (!(e_from_b && b_from_e)) c.pass = false;
      c.detail += std::to_string(n) + (e_from_b && b_from_e ? ":yes " : ":no ");
    }
    c.detail.pop_back();
    report.criteria.push_back(std::move(c));
  }

  // ---- A3: grid group identifications against constructed lifts ----
  {
    CriterionResult c{"A3", false, ""};
    const GridShape shape = options.small_grid;
    if (shape.verticals * shape.height > 7) {
      c.detail = "small grid too large for the exhaustive oracle (m*h <= 7)";
    } else {
      FiniteStructure g = grid_with_presets(shape);
      auto group_of = [&](const std::string& name) {
        return aut_group_exhaustive(g, {g.relation(name)});
      };
      PermutationGroup neighbor_group = group_of("neighbor");
      PermutationGroup codir_group = group_of("codir_1");
      PermutationGroup succ_group = group_of("succ_1");
      PermutationGroup order_group = group_of("order");

      std::vector<Permutation> systemic = all_systemic_lifts(g);
      std::vector<Permutation> positives = all_uniform_lifts(g, false);
      std::vector<Permutation> negatives = all_uniform_lifts(g, true);
      std::vector<Permutation> pos_neg = positives;
      pos_neg.insert(pos_neg.end(), negatives.begin(), negatives.end());

      bool sets_ok =
          neighbor_group == PermutationGroup::from_members(systemic) &&
          codir_group == PermutationGroup::from_members(pos_neg) &&
          succ_group == PermutationGroup::from_members(positives) &&
          order_group == PermutationGroup::trivial(g.size());
      bool orders_ok = true;
      if (shape.verticals == 3 && shape.height == 2) {
        orders_ok = neighbor_group.order() == 48 && codir_group.order() == 12 &&
                    succ_group.order() == 6 && order_group.order() == 1;
      }
      c.pass = sets_ok && orders_ok;
      c.detail = "grid " + std::to_string(shape.verticals) + "x" +
                 std::to_string(shape.height) + " neighbor=" +
                 std::to_string(neighbor_group.order()) + " codir_1=" +
                 std::to_string(codir_group.order()) + " succ_1=" +
                 std::to_string(succ_group.order()) + " order=" +
                 std::to_string(order_group.order()) +
                 (sets_ok ? " lifts=match" : " lifts=mismatch");
    }
    report.criteria.push_back(std::move(c));
  }

  // ---- A4: backtracking equals the exhaustive filter ----
  {
    CriterionResult c{"A4", true, ""};
    int compared = 0;
    int failed = 0;
    for (int n = 4; n <= 7; ++n) {
      FiniteStructure s = linear_with_presets(n);
      for (const auto& [name, rel] : s.relations()) {
        PermutationGroup fast = aut_group(s, {rel}, jobs);
        PermutationGroup oracle = aut_group_exhaustive(s, {rel});
        ++compared;
        if (!(fast == oracle)) ++failed;
      }
    }
    if (options.small_grid.verticals * options.small_grid.height <= 7) {
      FiniteStructure g = grid_with_presets(options.small_grid);
      for (const auto& [name, rel] : g.relations()) {
        PermutationGroup fast = aut_group(g, {rel}, jobs);
        PermutationGroup oracle = aut_group_exhaustive(g, {rel});
        ++compared;
        if (!(fast == oracle)) ++failed;
      }
    } else {
      c.pass = false;
      c.detail = "small grid too large for the exhaustive oracle; ";
    }
    if (failed > 0) c.pass = false;
    c.detail += "presets=" + std::to_string(compared) +
                " mismatches=" + std::to_string(failed);
    report.criteria.push_back(std::move(c));
  }

  // ---- A5: the seven-space grid diagram ----
  {
    CriterionResult c{"A5", false, ""};
    const GridShape shape = options.large_grid;
    FiniteStructure g = grid_with_presets(shape);
    const std::vector<std::vector<std::string>> generator_sets = {
        {"neighbor"},          {"codir_1"},          {"succ_1"},
        {"codir_1", "separation"}, {"codir_1", "cycle"}, {"codir_1", "between"},
        {"order"}};
    std::vector<DefinabilitySpace> spaces;
    for (const auto& gens : generator_sets) {
      spaces.push_back(make_space(g, gens, jobs));
    }
    const PermutationGroup& neighbor_g = spaces[0].group;
    const PermutationGroup& codir_g = spaces[1].group;
    const PermutationGroup& succ_g = spaces[2].group;
    const PermutationGroup& sep_g = spaces[3].group;
    const PermutationGroup& cyc_g = spaces[4].group;
    const PermutationGroup& btw_g = spaces[5].group;
    const PermutationGroup& ord_g = spaces[6].group;

    bool distinct = true;
    for (size_t i = 0; i < spaces.size(); ++i) {
      for (size_t j = i + 1; j < spaces.size(); ++j) {
        if (spaces[i].group == spaces[j].group) distinct = false;
      }
    }
    bool inclusions =
        strictly_contains(btw_g, ord_g) && strictly_contains(sep_g, btw_g) &&
        strictly_contains(codir_g, sep_g) && strictly_contains(cyc_g, ord_g) &&
        strictly_contains(sep_g, cyc_g) && strictly_contains(succ_g, cyc_g) &&
        strictly_contains(codir_g, succ_g) && strictly_contains(neighbor_g, codir_g);

    bool orders_ok = true;
    if (shape.verticals == 4 && shape.height == 3) {
      orders_ok = neighbor_g.order() == 384 && codir_g.order() == 48 &&
                  succ_g.order() == 24 && sep_g.order() == 8 && cyc_g.order() == 4 &&
                  btw_g.order() == 2 && ord_g.order() == 1;
    }

    HasseDiagram d = hasse(spaces);
    report.fig2_dot = to_dot(d);
    std::vector<DefinabilitySpace> range_spaces(spaces.begin() + 1, spaces.end());
    report.fig2_range_dot = to_dot(hasse(range_spaces));

    std::vector<Witness> witnesses = strictness_witnesses(g, d);
    bool witnesses_ok = witnesses_valid(g, d, witnesses);

    // cross-check the same seven spaces on the exhaustive grid
    bool cross_ok = true;
    if (options.small_grid.verticals * options.small_grid.height <= 7) {
      FiniteStructure small = grid_with_presets(options.small_grid);
      for (const auto& gens : generator_sets) {
        std::vector<Relation> rels;
        for (const std::string& name : gens) rels.push_back(small.relation(name));
        if (!(aut_group(small, rels, jobs) == aut_group_exhaustive(small, rels))) {
          cross_ok = false;
        }
      }
    }

    c.pass = distinct && inclusions && orders_ok && witnesses_ok && cross_ok;
    c.detail = "fig2 grid " + std::to_string(shape.verticals) + "x" +
               std::to_string(shape.height) + " orders=" + join_orders(spaces) +
               " inclusions=" + (inclusions ? "strict" : "violated") + " witnesses=" +
               std::to_string(witnesses.size()) + "/" + std::to_string(d.edges.size()) +
               (witnesses_ok ? " valid" : " invalid") +
               " crosscheck=" + (cross_ok ? "ok" : "mismatch");
    if (shape.verticals < 3 || shape.height < 2) c.detail += " degenerate-grid";
    std::string collapsed = collapsed_pairs(spaces);
    if (!collapsed.empty()) c.detail += ' ' + collapsed;
    report.criteria.push_back(std::move(c));
  }

  // ---- A6: one negative permutation brings in all of them ----
  {
    CriterionResult c{"A6", false, ""};
    if (options.small_grid.verticals * options.small_grid.height > 7) {
      c.detail = "small grid too large for the exhaustive check";
    } else {
      FiniteStructure g =
          FiniteStructure::grid(options.small_grid.verticals, options.small_grid.height);
      std::vector<Permutation> positives = all_uniform_lifts(g, false);
      std::vector<Permutation> negatives = all_uniform_lifts(g, true);
      bool ok = true;
      for (const Permutation& neg : negatives) {
        std::vector<Permutation> gens = positives;
        gens.push_back(neg);
        PermutationGroup closure = generate_group(g.size(), gens);
        for (const Permutation& other : negatives) {
          if (!closure.contains(other)) ok = false;
        }
      }
      c.pass = ok;
      c.detail = "negatives=" + std::to_string(negatives.size()) +
                 " closures=" + (ok ? "complete" : "incomplete");
    }
    report.criteria.push_back(std::move(c));
  }

  // ---- A7: section classifier equals the separation group ----
  {
    CriterionResult c{"A7", true, "convention=vacuous-empty-parts sizes="};
    for (int n = 4; n <= 7; ++n) {
      FiniteStructure s = linear_with_presets(n);
      PermutationGroup sep_group = aut_group_exhaustive(s, {s.relation("separation")});
      std::vector<Permutation> matched;
      std::vector<int> im(static_cast<size_t>(n));
      std::iota(im.begin(), im.end(), 0);
      do {
        Permutation q{std::vector<int>(im)};
        if (!section_classify(q).empty()) matched.push_back(std::move(q));
      } while (std::next_permutation(im.begin(), im.end()));
      bool equal = PermutationGroup::from_members(std::move(matched)) == sep_group &&
                   sep_group.order() == static_cast<size_t>(2 * n);
      if (!equal) c.pass = false;
      c.detail += std::to_string(n) + ":" + std::to_string(sep_group.order()) +
                  (equal ? " " : "(mismatch) ");
    }
    c.detail.pop_back();
    report.criteria.push_back(std::move(c));
  }

  // ---- A8: boundaries on the window ----
  {
    CriterionResult c{"A8", false, ""};
    FiniteStructure window = FiniteStructure::grid(1, options.window_height);
    for (Preset p : {Preset::Order, Preset::Succ, Preset::Dist, Preset::Codir}) {
      if (p == Preset::Order) {
        window.add_relation(make_preset(window, p));
      } else {
        window.add_relation(make_preset(window, p, p == Preset::Codir ? 2 : 1));
      }
    }
    int cap = options.boundary_cap.value_or(options.window_height - 1);
    std::optional<int> b_order = boundary(window, window.relation("order"), cap, jobs);
    std::optional<int> b_succ = boundary(window, window.relation("succ_1"), cap, jobs);
    std::optional<int> b_dist = boundary(window, window.relation("dist_1"), cap, jobs);
    std::optional<int> b_codir = boundary(window, window.relation("codir_2"), cap, jobs);
    c.pass = b_order == std::optional<int>(0) && b_succ == std::optional<int>(1) &&
             b_dist == std::optional<int>(1) && b_codir == std::optional<int>(2);
    c.detail = "window h=" + std::to_string(options.window_height) +
               " order=" + render_boundary(b_order) + " succ_1=" + render_boundary(b_succ) +
               " dist_1=" + render_boundary(b_dist) + " codir_2=" + render_boundary(b_codir);
    report.criteria.push_back(std::move(c));
  }

  // ---- A9: block reshuffles leave local relations unchanged ----
  {
    CriterionResult c{"A9", false, ""};
    FiniteStructure window = FiniteStructure::grid(1, options.window_height);
    window.add_relation(make_preset(window, Preset::Succ, 1));
    window.add_relation(make_preset(window, Preset::Codir, 1));
    int cap = options.boundary_cap.value_or(options.window_height - 1);

    FiniteStructure g = FiniteStructure::grid(4, 12);
    g.add_relation(make_preset(g, Preset::Succ, 1));
    g.add_relation(make_preset(g, Preset::Codir, 1));

    long long checked = 0;
    long long mismatched = 0;
    bool have_boundaries = true;
    for (const std::string& name : {std::string("succ_1"), std::string("codir_1")}) {
      std::optional<int> beta = boundary(window, window.relation(name), cap, jobs);
      if (!beta) {
        have_boundaries = false;
        continue;
      }
      const Relation& r = g.relation(name);
      for (const auto& blocks : block_vectors(r.arity, 6)) {
        const int count = static_cast<int>(blocks.size());
        for (int k = 0; k <= count; ++k) {
          for (int l = k; l <= count; ++l) {
            for (int m = l; m <= count; ++m) {
              std::vector<int> group(blocks.size());
              for (int i = 0; i < count; ++i) {
                group[static_cast<size_t>(i)] = i < k ? 0 : i < l ? 1 : i < m ? 2 : 3;
              }
              std::vector<int> reshuffled(blocks.size());
              for (int i = 0; i < count; ++i) {
                reshuffled[static_cast<size_t>(i)] = 3 - group[static_cast<size_t>(i)];
              }
              Tuple placed_a = place_blocks(g, blocks, group, *beta);
              Tuple placed_b = place_blocks(g, blocks, reshuffled, *beta);
              ++checked;
              if (r.contains(placed_a) != r.contains(placed_b)) ++mismatched;
            }
          }
        }
      }
    }
    c.pass = have_boundaries && mismatched == 0;
    c.detail = "grid 4x12 reshuffles=" + std::to_string(checked) +
               " mismatches=" + std::to_string(mismatched) +
               (have_boundaries ? "" : " boundary-unavailable");
    report.criteria.push_back(std::move(c));
  }

  // ---- A10: identical results independent of the parallelism degree ----
  {
    CriterionResult c{"A10", false, ""};
    auto fingerprint = [&](int run_jobs) {
      std::ostringstream out;
      FiniteStructure g = grid_with_presets(options.large_grid);
      std::vector<DefinabilitySpace> spaces;
      for (const auto& gens : std::vector<std::vector<std::string>>{
               {"neighbor"},
               {"codir_1"},
               {"succ_1"},
               {"codir_1", "separation"},
               {"codir_1", "cycle"},
               {"codir_1", "between"},
               {"order"}}) {
        spaces.push_back(make_space(g, gens, run_jobs));
      }
      for (const DefinabilitySpace& space : spaces) {
        out << space.label() << '=' << space.group.order() << ';';
        for (const Permutation& p : space.group.members()) {
          out << format_permutation(p);
        }
        out << '\n';
      }
      out << to_dot(hasse(spaces));
      FiniteStructure window = FiniteStructure::grid(1, options.window_height);
      window.add_relation(make_preset(window, Preset::Codir, 2));
      int cap = options.boundary_cap.value_or(options.window_height - 1);
      out << render_boundary(boundary(window, window.relation("codir_2"), cap, run_jobs));
      return out.str();
    };
    std::string serial = fingerprint(1);
    std::string parallel = fingerprint(8);
    c.pass = serial == parallel;
    c.detail = std::string("jobs=1 vs jobs=8 outputs ") +
               (c.pass ? "identical" : "differ");
    report.criteria.push_back(std::move(c));
  }

  return report;
}

}  // namespace ordlat
