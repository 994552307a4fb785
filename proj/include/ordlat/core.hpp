#ifndef ORDLAT_CORE_HPP
#define ORDLAT_CORE_HPP

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordlat {

/// Error raised on invalid inputs (bad permutations, unknown relation
/// names, malformed workspaces, ...). The CLI maps it to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A tuple of element indices of some finite universe.
using Tuple = std::vector<int>;

/// Bijection of {0, ..., n-1}, stored as the image sequence.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  /// Pointwise image of a tuple.
  Tuple apply(const Tuple& t) const;

  Permutation inverse() const;

  bool is_identity() const;

  // Canonical order is lexicographic on the image sequence.
  auto operator<=>(const Permutation& other) const = default;

 private:
  std::vector<int> images_;
};

/// p after q: the map i -> p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation invert(const Permutation& p);
Tuple apply_to_tuple(const Permutation& p, const Tuple& t);

/// Named n-ary relation given by its tuple extension.
struct Relation {
  std::string name;
  int arity = 0;
  std::set<Tuple> extension;  // std::set keeps the extension sorted

  bool contains(const Tuple& t) const { return extension.count(t) != 0; }
};

/// Validates arity/range of all tuples against a universe of `size` elements.
Relation make_relation(std::string name, int arity, std::set<Tuple> extension,
                       int size);

/// Finite permutation group as a canonically sorted member list.
class PermutationGroup {
 public:
  PermutationGroup() = default;

  /// Sorts and dedupes; does not verify closure (generate_group and the
  /// automorphism searches only ever hand over closed sets).
  static PermutationGroup from_members(std::vector<Permutation> members);
  static PermutationGroup trivial(int n);

  const std::vector<Permutation>& members() const { return members_; }
  size_t order() const { return members_.size(); }
  int degree() const;

  bool contains(const Permutation& p) const;
  /// True iff every member of this group is a member of `other`.
  bool subgroup_of(const PermutationGroup& other) const;

  bool operator==(const PermutationGroup& other) const = default;

 private:
  std::vector<Permutation> members_;
};

/// Smallest composition-closed member set containing the generators and the
/// identity of Sym(n). Inverses come free on a finite universe.
PermutationGroup generate_group(int n, const std::vector<Permutation>& generators);

/// Grid geometry: m verticals of height h, point (v, z) at index v*h + z.
/// The index order is exactly the lexicographic order (v first, then z).
struct GridShape {
  int verticals = 0;  // m
  int height = 0;     // h
};

/// A finite universe 0..size-1 ordered by index, with named relations.
/// Grid-backed structures additionally know their (m, h) geometry, which
/// enables the partial difference function and the grid-only presets.
class FiniteStructure {
 public:
  static FiniteStructure linear(int n);
  static FiniteStructure grid(int m, int h);

  int size() const { return size_; }
  bool is_grid() const { return grid_.has_value(); }
  const GridShape& grid_shape() const;

  bool less(int a, int b) const { return a < b; }

  int vertical_of(int i) const;
  int level_of(int i) const;
  int point(int v, int z) const;

  /// "3" on linear universes, "v:z" on grids.
  std::string point_name(int i) const;
  Tuple parse_point_list(const std::vector<std::string>& words) const;

  void add_relation(Relation r);
  bool has_relation(const std::string& name) const;
  const Relation& relation(const std::string& name) const;
  const std::map<std::string, Relation>& relations() const { return relations_; }

 private:
  FiniteStructure(int size, std::optional<GridShape> grid);

  int size_;
  std::optional<GridShape> grid_;
  std::map<std::string, Relation> relations_;
};

/// Renders "(a,b,c)" with points named by the structure.
std::string format_tuple(const FiniteStructure& s, const Tuple& t);
/// Renders "[i0,i1,...]" (image list).
std::string format_permutation(const Permutation& p);

/// Calls fn with every arity-length tuple over 0..size-1, in lex order.
template <typename Fn>
void for_each_tuple(int size, int arity, Fn&& fn) {
  Tuple t(static_cast<size_t>(arity), 0);
  while (true) {
    fn(const_cast<const Tuple&>(t));
    int pos = arity - 1;
    while (pos >= 0 && t[static_cast<size_t>(pos)] == size - 1) {
      t[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return;
    ++t[static_cast<size_t>(pos)];
  }
}

}  // namespace ordlat

#endif  // ORDLAT_CORE_HPP
