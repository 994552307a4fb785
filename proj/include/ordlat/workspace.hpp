#ifndef ORDLAT_WORKSPACE_HPP
#define ORDLAT_WORKSPACE_HPP

#include <optional>
#include <string>

#include "ordlat/core.hpp"

namespace ordlat {

/// Parsed experiment manifest: one structure plus named relations, built
/// line by line. Format (one directive per line, '#' comments):
///
///   structure linear n=6
///   structure grid m=4 h=3
///   rel S   = preset separation
///   rel A11 = preset codir n=1
///   rel B2  = formula "B(x,y,z) := (x<y & y<z) | (x>y & y>z)"
///   option jobs=4
///   option boundary-cap=5
///
/// Relations may reference previously defined ones by name inside
/// formulas. Flags override option lines.
struct Workspace {
  std::optional<FiniteStructure> structure;
  std::optional<int> jobs;
  std::optional<int> boundary_cap;

  const FiniteStructure& require_structure() const {
    if (!structure) throw Error("workspace declares no structure");
    return *structure;
  }

  /// Default search cap for boundary computations: height - 1.
  int default_boundary_cap() const;
};

Workspace parse_workspace(const std::string& text);
Workspace load_workspace(const std::string& path);

}  // namespace ordlat

#endif  // ORDLAT_WORKSPACE_HPP
