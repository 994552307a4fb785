#include "ordlat/presets.hpp"

#include "ordlat/grid.hpp"

namespace ordlat {

bool preset_needs_grid(Preset p) {
  switch (p) {
    case Preset::Neighbor:
    case Preset::Dist:
    case Preset::Succ:
    case Preset::Codir:
      return true;
    default:
      return false;
  }
}

bool preset_takes_parameter(Preset p) {
  return p == Preset::Dist || p == Preset::Succ || p == Preset::Codir;
}

Preset parse_preset_name(const std::string& name) {
  if (name == "equality") return Preset::Equality;
  if (name == "order") return Preset::Order;
  if (name == "between") return Preset::Between;
  if (name == "cycle") return Preset::Cycle;
  if (name == "separation") return Preset::Separation;
  if (name == "equipollence") return Preset::Equipollence;
  if (name == "neighbor") return Preset::Neighbor;
  if (name == "dist") return Preset::Dist;
  if (name == "succ") return Preset::Succ;
  if (name == "codir") return Preset::Codir;
  throw Error("unknown preset '" + name + "'");
}

std::string preset_relation_name(Preset p, int n) {
  switch (p) {
    case Preset::Equality: return "equality";
    case Preset::Order: return "order";
    case Preset::Between: return "between";
    case Preset::Cycle: return "cycle";
    case Preset::Separation: return "separation";
    case Preset::Equipollence: return "equipollence";
    case Preset::Neighbor: return "neighbor";
    case Preset::Dist: return "dist_" + std::to_string(n);
    case Preset::Succ: return "succ_" + std::to_string(n);
    case Preset::Codir: return "codir_" + std::to_string(n);
  }
  throw Error("corrupt preset");
}

namespace {

bool is_between(int a, int b, int c) { return (a < b && b < c) || (a > b && b > c); }

}  // namespace

Relation between(const FiniteStructure& s) {
  std::set<Tuple> ext;
  const int n = s.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (is_between(a, b, c)) ext.insert({a, b, c});
  return make_relation("between", 3, std::move(ext), n);
}

Relation cycle(const FiniteStructure& s) {
  std::set<Tuple> ext;
  const int n = s.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if ((a < b && b < c) || (b < c && c < a) || (c < a && a < b))
          ext.insert({a, b, c});
  return make_relation("cycle", 3, std::move(ext), n);
}

Relation separation(const FiniteStructure& s) {
  std::set<Tuple> ext;
  const int n = s.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if ((is_between(a, b, c) || is_between(a, d, c)) &&
              (is_between(b, a, d) || is_between(b, c, d)))
            ext.insert({a, b, c, d});
  return make_relation("separation", 4, std::move(ext), n);
}

Relation equipollence(const FiniteStructure& s) {
  std::set<Tuple> ext;
  const int n = s.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if ((a < b && c < d) || (a > b && c > d)) ext.insert({a, b, c, d});
  return make_relation("equipollence", 4, std::move(ext), n);
}

Relation equality(const FiniteStructure& s) {
  std::set<Tuple> ext;
  for (int a = 0; a < s.size(); ++a) ext.insert({a, a});
  return make_relation("equality", 2, std::move(ext), s.size());
}

Relation order(const FiniteStructure& s) {
  std::set<Tuple> ext;
  for (int a = 0; a < s.size(); ++a)
    for (int b = a + 1; b < s.size(); ++b) ext.insert({a, b});
  return make_relation("order", 2, std::move(ext), s.size());
}

Relation grid_relation(const FiniteStructure& g, Preset p, int n) {
  if (!g.is_grid()) {
    throw Error("preset '" + preset_relation_name(p, n) +
                "' requires a grid-backed structure");
  }
  if (p == Preset::Neighbor) {
    Relation r = grid_relation(g, Preset::Dist, 1);
    r.name = "neighbor";
    return r;
  }
  if (n < 1) throw Error("preset parameter n must be >= 1");
  const int size = g.size();
  std::set<Tuple> ext;
  switch (p) {
    case Preset::Dist: {
      for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y) {
          ExtendedInt d = diff(g, x, y);
          if (d.is_finite() && std::abs(d.value()) == n) ext.insert({x, y});
        }
      break;
    }
    case Preset::Succ: {
      for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y) {
          ExtendedInt d = diff(g, y, x);
          if (d.is_finite() && d.value() == n) ext.insert({x, y});
        }
      break;
    }
    case Preset::Codir: {
      // x - y = z - t with |x - y| = n; infinite differences never qualify
      for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y) {
          ExtendedInt dxy = diff(g, x, y);
          if (!dxy.is_finite() || std::abs(dxy.value()) != n) continue;
          for (int z = 0; z < size; ++z)
            for (int t = 0; t < size; ++t) {
              ExtendedInt dzt = diff(g, z, t);
              if (dzt.is_finite() && dzt.value() == dxy.value())
                ext.insert({x, y, z, t});
            }
        }
      break;
    }
    default:
      throw Error("grid_relation: not a grid preset");
  }
  return make_relation(preset_relation_name(p, n), p == Preset::Codir ? 4 : 2,
                       std::move(ext), size);
}

Relation make_preset(const FiniteStructure& s, Preset p, int n) {
  switch (p) {
    case Preset::Equality: return equality(s);
    case Preset::Order: return order(s);
    case Preset::Between: return between(s);
    case Preset::Cycle: return cycle(s);
    case Preset::Separation: return separation(s);
    case Preset::Equipollence: return equipollence(s);
    default: return grid_relation(s, p, n);
  }
}

}  // namespace ordlat
