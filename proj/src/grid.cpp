#include "ordlat/grid.hpp"

#include <algorithm>
#include <future>
#include <numeric>

namespace ordlat {

ExtendedInt diff(const FiniteStructure& g, int a, int b) {
  if (a < 0 || a >= g.size() || b < 0 || b >= g.size()) {
    throw Error("diff: point out of range");
  }
  if (g.vertical_of(a) != g.vertical_of(b)) return ExtendedInt::infinity();
  return ExtendedInt(static_cast<long long>(g.level_of(a)) - g.level_of(b));
}

PermClass classify(const FiniteStructure& g, const Permutation& p) {
  const GridShape& shape = g.grid_shape();
  if (p.size() != g.size()) throw Error("classify: permutation size mismatch");
  const int m = shape.verticals;
  const int h = shape.height;

  PermClass out;
  std::vector<int> initiated(static_cast<size_t>(m), -1);
  bool all_preserve = true;
  bool all_reverse = true;
  for (int v = 0; v < m; ++v) {
    int target = g.vertical_of(p(g.point(v, 0)));
    for (int z = 0; z < h; ++z) {
      if (g.vertical_of(p(g.point(v, z))) != target) return out;  // not systemic
    }
    initiated[static_cast<size_t>(v)] = target;
    for (int z = 0; z + 1 < h; ++z) {
      int a = g.level_of(p(g.point(v, z)));
      int b = g.level_of(p(g.point(v, z + 1)));
      if (a >= b) all_preserve = false;
      if (a <= b) all_reverse = false;
    }
  }
  out.systemic = true;  // every vertical landed on one vertical; p bijective
  out.positive = all_preserve;
  out.negative = all_reverse;
  if (out.positive) {
    bool increasing = true;
    bool identical = true;
    for (int v = 0; v < m; ++v) {
      if (v + 1 < m && initiated[static_cast<size_t>(v)] >= initiated[static_cast<size_t>(v + 1)])
        increasing = false;
      if (initiated[static_cast<size_t>(v)] != v) identical = false;
    }
    out.shift = increasing;
    out.vertical_shift = identical;
  }
  return out;
}

Permutation initiate(const FiniteStructure& g, const Permutation& p) {
  if (!classify(g, p).systemic) {
    throw Error("initiation undefined: permutation is not systemic");
  }
  const int m = g.grid_shape().verticals;
  std::vector<int> im(static_cast<size_t>(m));
  for (int v = 0; v < m; ++v) {
    im[static_cast<size_t>(v)] = g.vertical_of(p(g.point(v, 0)));
  }
  return Permutation(std::move(im));
}

Permutation lift(const FiniteStructure& g, const Permutation& vertical_perm,
                 const std::vector<bool>& reverse_vertical) {
  const GridShape& shape = g.grid_shape();
  const int m = shape.verticals;
  const int h = shape.height;
  if (vertical_perm.size() != m) throw Error("lift: vertical permutation has wrong size");
  if (static_cast<int>(reverse_vertical.size()) != m) {
    throw Error("lift: need one orientation flag per vertical");
  }
  std::vector<int> im(static_cast<size_t>(g.size()));
  for (int v = 0; v < m; ++v) {
    for (int z = 0; z < h; ++z) {
      int zi = reverse_vertical[static_cast<size_t>(v)] ? h - 1 - z : z;
      im[static_cast<size_t>(g.point(v, z))] = g.point(vertical_perm(v), zi);
    }
  }
  return Permutation(std::move(im));
}

Permutation lift_uniform(const FiniteStructure& g, const Permutation& vertical_perm,
                         bool reverse) {
  return lift(g, vertical_perm,
              std::vector<bool>(static_cast<size_t>(g.grid_shape().verticals), reverse));
}

namespace {

template <typename Fn>
void for_each_vertical_perm(int m, Fn&& fn) {
  std::vector<int> im(static_cast<size_t>(m));
  std::iota(im.begin(), im.end(), 0);
  do {
    fn(Permutation(std::vector<int>(im)));
  } while (std::next_permutation(im.begin(), im.end()));
}

}  // namespace

std::vector<Permutation> all_systemic_lifts(const FiniteStructure& g) {
  const int m = g.grid_shape().verticals;
  std::vector<Permutation> out;
  for_each_vertical_perm(m, [&](const Permutation& q) {
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::vector<bool> flags(static_cast<size_t>(m));
      for (int v = 0; v < m; ++v) flags[static_cast<size_t>(v)] = (mask >> v) & 1u;
      out.push_back(lift(g, q, flags));
    }
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Permutation> all_uniform_lifts(const FiniteStructure& g, bool reverse) {
  std::vector<Permutation> out;
  for_each_vertical_perm(g.grid_shape().verticals, [&](const Permutation& q) {
    out.push_back(lift_uniform(g, q, reverse));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool m_indistinguishable(const FiniteStructure& g, const Tuple& a, const Tuple& b,
                         int m) {
  if (a.size() != b.size()) {
    throw Error("m_indistinguishable: tuples of different length");
  }
  const size_t k = a.size();
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      if ((a[i] < a[j]) != (b[i] < b[j])) return false;
      ExtendedInt da = diff(g, a[i], a[j]);
      ExtendedInt db = diff(g, b[i], b[j]);
      if ((da.magnitude_at_most(m) || db.magnitude_at_most(m)) && !(da == db)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Per-tuple profile for the boundary search: order matrix plus pairwise
// differences, precomputed once.
struct TupleProfile {
  std::vector<int8_t> order;        // -1 / 0 / +1 per (i, j)
  std::vector<ExtendedInt> diffs;   // per (i, j)
};

TupleProfile profile_of(const FiniteStructure& g, const Tuple& t) {
  const size_t k = t.size();
  TupleProfile p;
  p.order.reserve(k * k);
  p.diffs.reserve(k * k);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      p.order.push_back(t[i] < t[j] ? -1 : t[i] == t[j] ? 0 : 1);
      p.diffs.push_back(diff(g, t[i], t[j]));
    }
  }
  return p;
}

// Largest m at which two order-compatible tuples are still
// m-indistinguishable: one less than the smallest violated magnitude.
// Returns -1 if not even 0-indistinguishable, nullopt if indistinguishable
// at every depth.
std::optional<long long> indistinguishability_ceiling(const TupleProfile& a,
                                                      const TupleProfile& b) {
  long long ceiling = -2;  // -2 encodes "no violation found"
  for (size_t idx = 0; idx < a.diffs.size(); ++idx) {
    const ExtendedInt& da = a.diffs[idx];
    const ExtendedInt& db = b.diffs[idx];
    if (da == db) continue;
    long long violated_at;  // least m whose requirement the pair breaks
    if (da.is_finite() && db.is_finite()) {
      violated_at = std::min(std::llabs(da.value()), std::llabs(db.value()));
    } else {
      ExtendedInt fin = da.is_finite() ? da : db;
      violated_at = std::llabs(fin.value());
    }
    if (ceiling == -2 || violated_at - 1 < ceiling) ceiling = violated_at - 1;
  }
  if (ceiling == -2) return std::nullopt;
  return ceiling;
}

}  // namespace

std::optional<int> boundary(const FiniteStructure& g, const Relation& r, int cap,
                            int jobs) {
  if (!g.is_grid()) throw Error("boundary requires a grid-backed structure (window)");
  if (cap < 0) return std::nullopt;
  const int n = g.size();
  const int k = r.arity;

  size_t total = 1;
  for (int i = 0; i < k; ++i) total *= static_cast<size_t>(n);

  std::vector<Tuple> tuples;
  tuples.reserve(total);
  for_each_tuple(n, k, [&](const Tuple& t) { tuples.push_back(t); });

  std::vector<TupleProfile> profiles;
  profiles.reserve(total);
  std::vector<char> member(total);
  for (size_t i = 0; i < total; ++i) {
    profiles.push_back(profile_of(g, tuples[i]));
    member[i] = r.contains(tuples[i]) ? 1 : 0;
  }

  // The least workable m is one more than the deepest indistinguishability
  // ceiling among pairs that disagree on R. A disagreeing pair that is
  // indistinguishable at every depth rules out any finite boundary.
  auto scan_range = [&](size_t lo, size_t hi) -> std::pair<long long, bool> {
    long long deepest = -1;
    bool unbounded = false;
    for (size_t i = lo; i < hi; ++i) {
      for (size_t j = i + 1; j < total; ++j) {
        if (member[i] == member[j]) continue;
        if (profiles[i].order != profiles[j].order) continue;
        std::optional<long long> ceiling =
            indistinguishability_ceiling(profiles[i], profiles[j]);
        if (!ceiling) {
          unbounded = true;
        } else if (*ceiling > deepest) {
          deepest = *ceiling;
        }
      }
    }
    return {deepest, unbounded};
  };

  long long deepest = -1;
  bool unbounded = false;
  if (jobs <= 1) {
    std::tie(deepest, unbounded) = scan_range(0, total);
  } else {
    size_t workers = std::min<size_t>(static_cast<size_t>(jobs), total ? total : 1);
    std::vector<std::future<std::pair<long long, bool>>> futures;
    size_t chunk = (total + workers - 1) / workers;
    for (size_t w = 0; w < workers; ++w) {
      size_t lo = w * chunk;
      size_t hi = std::min(total, lo + chunk);
      if (lo >= hi) break;
      futures.push_back(std::async(std::launch::async, scan_range, lo, hi));
    }
    for (auto& f : futures) {
      auto [d, u] = f.get();
      deepest = std::max(deepest, d);
      unbounded = unbounded || u;
    }
  }

  if (unbounded) return std::nullopt;
  long long least = deepest + 1;
  if (least > cap) return std::nullopt;
  return static_cast<int>(least);
}

Tuple place_blocks(const FiniteStructure& g, const std::vector<Block>& blocks,
                   const std::vector<int>& vertical_of_block, int gap) {
  const GridShape& shape = g.grid_shape();
  if (blocks.size() != vertical_of_block.size()) {
    throw Error("place_blocks: one vertical per block required");
  }
  if (gap < 0) throw Error("place_blocks: gap must be >= 0");
  for (const Block& b : blocks) {
    if (b.empty()) throw Error("place_blocks: empty block");
    for (size_t i = 0; i + 1 < b.size(); ++i) {
      if (b[i] >= b[i + 1]) throw Error("place_blocks: block levels must increase");
    }
  }
  for (int v : vertical_of_block) {
    if (v < 0 || v >= shape.verticals) throw Error("place_blocks: vertical out of range");
  }

  // Stack blocks per vertical in block-index order, separated by gap+1.
  std::vector<int> next_level(static_cast<size_t>(shape.verticals), 0);
  std::vector<int> start(blocks.size());
  int max_height_needed = 0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    const Block& b = blocks[i];
    int v = vertical_of_block[i];
    int span = b.back() - b.front();
    start[i] = next_level[static_cast<size_t>(v)];
    int end = start[i] + span;
    next_level[static_cast<size_t>(v)] = end + gap + 1;
    max_height_needed = std::max(max_height_needed, end + 1);
  }
  if (max_height_needed > shape.height) {
    throw Error("grid too small: placement needs height >= " +
                std::to_string(max_height_needed) + ", grid has " +
                std::to_string(shape.height));
  }

  Tuple placed;
  for (size_t i = 0; i < blocks.size(); ++i) {
    const Block& b = blocks[i];
    for (int level : b) {
      placed.push_back(g.point(vertical_of_block[i], start[i] + (level - b.front())));
    }
  }
  return placed;
}

std::vector<SectionMatch> section_classify(const Permutation& q) {
  const int n = q.size();
  std::vector<SectionMatch> out;
  for (int split = 0; split <= n; ++split) {
    // part 1 = [0, split), part 2 = [split, n)
    bool dec1 = true, dec2 = true, inc1 = true, inc2 = true;
    for (int i = 0; i + 1 < split; ++i) {
      if (q(i) < q(i + 1)) dec1 = false;
      if (q(i) > q(i + 1)) inc1 = false;
    }
    for (int i = split; i + 1 < n; ++i) {
      if (q(i) < q(i + 1)) dec2 = false;
      if (q(i) > q(i + 1)) inc2 = false;
    }
    bool parts_nonempty = split > 0 && split < n;
    // image of part 1 entirely below image of part 2 (vacuous when empty)
    bool first_below = true, second_below = true;
    if (parts_nonempty) {
      int max1 = -1, min2 = q.size(), max2 = -1, min1 = q.size();
      for (int i = 0; i < split; ++i) {
        max1 = std::max(max1, q(i));
        min1 = std::min(min1, q(i));
      }
      for (int i = split; i < n; ++i) {
        max2 = std::max(max2, q(i));
        min2 = std::min(min2, q(i));
      }
      first_below = max1 < min2;
      second_below = max2 < min1;
    }
    if (dec1 && dec2 && first_below) {
      out.push_back({Section{split}, true});
    }
    if (inc1 && inc2 && second_below) {
      out.push_back({Section{split}, false});
    }
  }
  return out;
}

}  // namespace ordlat
