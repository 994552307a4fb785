#ifndef ORDLAT_PRESETS_HPP
#define ORDLAT_PRESETS_HPP

#include <string>

#include "ordlat/core.hpp"

namespace ordlat {

/// Built-in relations. The first six only use the element order and work on
/// every structure; the last four read the grid difference function and
/// require a grid-backed structure.
enum class Preset {
  Equality,
  Order,
  Between,
  Cycle,
  Separation,
  Equipollence,
  Neighbor,  // dist_1 under another name
  Dist,      // parameterized: |x - y| = n
  Succ,      // parameterized: y - x = n
  Codir,     // parameterized: x - y = z - t and |x - y| = n
};

bool preset_needs_grid(Preset p);
bool preset_takes_parameter(Preset p);

/// Parses "between", "codir", "dist", ... (the bare preset keyword).
Preset parse_preset_name(const std::string& name);

/// Canonical relation name: "between", "codir_1", "dist_2", "neighbor", ...
std::string preset_relation_name(Preset p, int n);

/// B(a,b,c): a<b<c or a>b>c.
Relation between(const FiniteStructure& s);
/// C(a,b,c): a<b<c or b<c<a or c<a<b.
Relation cycle(const FiniteStructure& s);
/// S(a,b,c,d): (B(a,b,c) or B(a,d,c)) and (B(b,a,d) or B(b,c,d)).
Relation separation(const FiniteStructure& s);
/// E(a,b,c,d): segments (a,b) and (c,d) point the same way.
Relation equipollence(const FiniteStructure& s);
Relation equality(const FiniteStructure& s);
Relation order(const FiniteStructure& s);

/// Grid-only presets (Neighbor/Dist/Succ/Codir); n is ignored for Neighbor.
Relation grid_relation(const FiniteStructure& g, Preset p, int n);

/// Any preset by enum; dispatches to the constructors above.
Relation make_preset(const FiniteStructure& s, Preset p, int n = 1);

}  // namespace ordlat

#endif  // ORDLAT_PRESETS_HPP
