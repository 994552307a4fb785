#ifndef ORDLAT_GALOIS_HPP
#define ORDLAT_GALOIS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordlat/core.hpp"

namespace ordlat {

/// Lexicographically least tuple on which p fails to preserve r
/// (t in r xor p(t) in r); nullopt when p preserves r.
std::optional<Tuple> breaking_tuple(const Permutation& p, const Relation& r);
bool preserves(const Permutation& p, const Relation& r);

/// Exactly the permutations of the universe preserving every relation,
/// found by point-by-point backtracking: images assigned in universe order,
/// candidates tried ascending, every relation constraint over the placed
/// prefix checked after each assignment. First-level branches may run in
/// parallel; the result is canonical either way.
PermutationGroup aut_group(const FiniteStructure& s, const std::vector<Relation>& rels,
                           int jobs = 1);

/// Brute-force oracle: filters all n! permutations. Keep n small.
PermutationGroup aut_group_exhaustive(const FiniteStructure& s,
                                      const std::vector<Relation>& rels);

/// A set of generating relations with its computed automorphism group.
/// Space inclusion is group anti-inclusion.
struct DefinabilitySpace {
  std::vector<std::string> generator_names;  // sorted
  PermutationGroup group;

  std::string label() const;  // names joined with '+'
};

DefinabilitySpace make_space(const FiniteStructure& s,
                             std::vector<std::string> generator_names, int jobs = 1);

enum class SpaceOrder { Equal, Below, Above, Incomparable };

/// Compares two spaces on one structure by mutual group inclusion:
/// Below means A is strictly contained in B as a definability space.
SpaceOrder space_compare(const DefinabilitySpace& a, const DefinabilitySpace& b);

/// Certificate that a space inclusion is strict: a permutation preserving
/// every generator of the lower space while breaking `broken` at `tuple`.
struct Witness {
  Permutation permutation;
  std::string preserved;  // label of the lower space
  std::string broken;     // name of the violated generator above
  Tuple tuple;
};

/// Diagram of the space order: nodes sorted bottom-up (largest group
/// first), edges are covering pairs (lower space index, upper space index).
struct HasseDiagram {
  std::vector<DefinabilitySpace> nodes;
  std::vector<std::pair<int, int>> edges;
  /// Node labels; spaces with equal groups are merged and keep every label,
  /// joined with '='.
  std::vector<std::string> labels;
};

HasseDiagram hasse(std::vector<DefinabilitySpace> spaces);

/// yes -> nullopt; no -> the least witnessing permutation from Aut(base)
/// together with its least breaking tuple on the target.
std::optional<Witness> definable(const FiniteStructure& s, const Relation& target,
                                 const std::vector<std::string>& base_names,
                                 int jobs = 1);

/// One witness per diagram edge: the least lower-group member missing from
/// the upper group, with the first upper generator it breaks.
std::vector<Witness> strictness_witnesses(const FiniteStructure& s,
                                          const HasseDiagram& d);

/// DOT rendering (digraph, edges lower -> upper, deterministic order).
std::string to_dot(const HasseDiagram& d);

}  // namespace ordlat

#endif  // ORDLAT_GALOIS_HPP
