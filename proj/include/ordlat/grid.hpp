#ifndef ORDLAT_GRID_HPP
#define ORDLAT_GRID_HPP

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "ordlat/core.hpp"

namespace ordlat {

/// Integer extended by a single unsigned infinity: |inf| = inf and
/// inf > m for every natural m.
class ExtendedInt {
 public:
  ExtendedInt(long long v) : finite_(true), value_(v) {}  // NOLINT: implicit by design
  static ExtendedInt infinity() { return ExtendedInt(); }

  bool is_finite() const { return finite_; }
  long long value() const {
    if (!finite_) throw Error("infinite difference has no integer value");
    return value_;
  }

  ExtendedInt magnitude() const {
    return finite_ ? ExtendedInt(std::llabs(value_)) : infinity();
  }

  /// |this| <= m for a natural bound m (false for infinity).
  bool magnitude_at_most(long long m) const {
    return finite_ && std::llabs(value_) <= m;
  }

  bool operator==(const ExtendedInt& o) const {
    return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
  }

 private:
  ExtendedInt() : finite_(false), value_(0) {}
  bool finite_;
  long long value_;
};

/// Difference of grid points: level difference on a shared vertical,
/// infinity across verticals. Requires a grid-backed structure.
ExtendedInt diff(const FiniteStructure& g, int a, int b);

/// Classification flags of a grid permutation. `systemic` uses the setwise
/// vertical-to-vertical criterion; positive/negative additionally require
/// the order on every vertical to be preserved/reversed.
struct PermClass {
  bool systemic = false;
  bool positive = false;
  bool negative = false;
  bool shift = false;           // positive and the initiated map is increasing
  bool vertical_shift = false;  // positive and the initiated map is the identity
};

PermClass classify(const FiniteStructure& g, const Permutation& p);

/// The vertical permutation induced by a systemic grid permutation.
/// Throws "initiation undefined" for non-systemic input.
Permutation initiate(const FiniteStructure& g, const Permutation& p);

/// The unique grid permutation initiating `vertical_perm` with the given
/// per-source-vertical orientations (true = reverse that vertical).
Permutation lift(const FiniteStructure& g, const Permutation& vertical_perm,
                 const std::vector<bool>& reverse_vertical);
/// Uniform orientation across all verticals.
Permutation lift_uniform(const FiniteStructure& g, const Permutation& vertical_perm,
                         bool reverse);

/// All lifts with every orientation pattern: m! * 2^m permutations.
std::vector<Permutation> all_systemic_lifts(const FiniteStructure& g);
/// All-positive (reverse = false) or all-negative lifts: m! permutations each.
std::vector<Permutation> all_uniform_lifts(const FiniteStructure& g, bool reverse);

/// Two tuples agree on order and on every difference of magnitude <= m
/// (in either tuple); infinite differences only match infinite ones.
bool m_indistinguishable(const FiniteStructure& g, const Tuple& a, const Tuple& b,
                         int m);

/// Least m <= cap such that every m-indistinguishable pair of arity-length
/// tuples agrees on R; nullopt when no such m exists below the cap.
std::optional<int> boundary(const FiniteStructure& g, const Relation& r, int cap,
                            int jobs = 1);

/// Block of levels to embed on one vertical: strictly increasing, only the
/// differences matter to placement.
using Block = std::vector<int>;

/// Embeds blocks on their assigned verticals: block-internal differences
/// preserved, blocks on one vertical stacked in index order with gaps of
/// size gap+1, so every inter-block distance strictly exceeds `gap`.
/// Returns the placed points in block order, flattened.
/// Throws "grid too small" (reporting the minimal height) when a vertical
/// cannot hold its blocks.
Tuple place_blocks(const FiniteStructure& g, const std::vector<Block>& blocks,
                   const std::vector<int>& vertical_of_block, int gap);

/// Prefix/suffix split of a linear order: I1 = [0, split), I2 = [split, n).
struct Section {
  int split = 0;
};

/// One matched section. condition_i = true means the permutation decreases
/// on both parts keeping I1 below I2; false means it increases on both
/// parts moving I2 below I1. Conditions on an empty part hold vacuously.
struct SectionMatch {
  Section section;
  bool condition_i = false;
};

/// All sections under which q satisfies one of the two conditions. A
/// non-empty result characterizes exactly the circular rotations and
/// reflections of the n-point order.
std::vector<SectionMatch> section_classify(const Permutation& q);

}  // namespace ordlat

#endif  // ORDLAT_GRID_HPP
