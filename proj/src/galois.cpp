#include "ordlat/galois.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <sstream>

namespace ordlat {

std::optional<Tuple> breaking_tuple(const Permutation& p, const Relation& r) {
  std::optional<Tuple> result;
  for_each_tuple(p.size(), r.arity, [&](const Tuple& t) {
    if (result) return;
    if (r.contains(t) != r.contains(p.apply(t))) result = t;
  });
  return result;
}

bool preserves(const Permutation& p, const Relation& r) {
  return !breaking_tuple(p, r).has_value();
}

namespace {

// Relation membership as a flat lookup table indexed by the base-n
// encoding of tuples; the backtracking search probes it heavily.
struct RelationTable {
  int arity;
  std::vector<char> member;  // size n^arity

  bool test(const Tuple& t, int n) const {
    size_t code = 0;
    for (int x : t) code = code * static_cast<size_t>(n) + static_cast<size_t>(x);
    return member[code] != 0;
  }
};

RelationTable tabulate(const Relation& r, int n) {
  RelationTable table;
  table.arity = r.arity;
  size_t total = 1;
  for (int i = 0; i < r.arity; ++i) total *= static_cast<size_t>(n);
  table.member.assign(total, 0);
  for (const Tuple& t : r.extension) {
    size_t code = 0;
    for (int x : t) code = code * static_cast<size_t>(n) + static_cast<size_t>(x);
    table.member[code] = 1;
  }
  return table;
}

class BacktrackingSearch {
 public:
  BacktrackingSearch(int n, const std::vector<Relation>& rels) : n_(n) {
    for (const Relation& r : rels) tables_.push_back(tabulate(r, n));
    images_.assign(static_cast<size_t>(n), -1);
    used_.assign(static_cast<size_t>(n), false);
  }

  // Explores the subtree where point 0 maps to `first`; found members come
  // out in lexicographic order because candidates ascend at every level.
  std::vector<Permutation> search_with_first(int first) {
    std::vector<Permutation> found;
    images_[0] = first;
    used_[static_cast<size_t>(first)] = true;
    if (consistent(0)) extend(1, found);
    used_[static_cast<size_t>(first)] = false;
    images_[0] = -1;
    return found;
  }

  std::vector<Permutation> search_all() {
    std::vector<Permutation> found;
    if (n_ == 0) return found;
    for (int c = 0; c < n_; ++c) {
      auto branch = search_with_first(c);
      found.insert(found.end(), branch.begin(), branch.end());
    }
    return found;
  }

 private:
  void extend(int depth, std::vector<Permutation>& found) {
    if (depth == n_) {
      found.emplace_back(images_);
      return;
    }
    for (int c = 0; c < n_; ++c) {
      if (used_[static_cast<size_t>(c)]) continue;
      images_[static_cast<size_t>(depth)] = c;
      used_[static_cast<size_t>(c)] = true;
      if (consistent(depth)) extend(depth + 1, found);
      used_[static_cast<size_t>(c)] = false;
      images_[static_cast<size_t>(depth)] = -1;
    }
  }

  // Every relation tuple drawn from the placed prefix 0..last that
  // mentions `last` must agree with its image.
  bool consistent(int last) const {
    Tuple t;
    for (const RelationTable& table : tables_) {
      t.assign(static_cast<size_t>(table.arity), 0);
      if (!check_tuples(table, t, 0, last, false)) return false;
    }
    return true;
  }

  bool check_tuples(const RelationTable& table, Tuple& t, int pos, int last,
                    bool mentions_last) const {
    if (pos == table.arity) {
      if (!mentions_last) return true;  // already checked at an earlier depth
      Tuple image(t.size());
      for (size_t i = 0; i < t.size(); ++i) {
        image[i] = images_[static_cast<size_t>(t[i])];
      }
      return table.test(t, n_) == table.test(image, n_);
    }
    for (int x = 0; x <= last; ++x) {
      t[static_cast<size_t>(pos)] = x;
      if (!check_tuples(table, t, pos + 1, last, mentions_last || x == last)) {
        return false;
      }
    }
    return true;
  }

  int n_;
  std::vector<RelationTable> tables_;
  std::vector<int> images_;
  std::vector<bool> used_;
};

void validate_on_structure(const FiniteStructure& s, const std::vector<Relation>& rels) {
  for (const Relation& r : rels) {
    for (const Tuple& t : r.extension) {
      for (int x : t) {
        if (x < 0 || x >= s.size()) {
          throw Error("relation '" + r.name + "' does not live on this structure");
        }
      }
    }
  }
}

}  // namespace

PermutationGroup aut_group(const FiniteStructure& s, const std::vector<Relation>& rels,
                           int jobs) {
  validate_on_structure(s, rels);
  const int n = s.size();
  if (jobs <= 1 || n < 2) {
    BacktrackingSearch search(n, rels);
    return PermutationGroup::from_members(search.search_all());
  }
  // first-level branches (image of point 0) split into contiguous chunks,
  // one worker each, merged in candidate order
  int workers = std::min(jobs, n);
  std::vector<std::future<std::vector<Permutation>>> futures;
  futures.reserve(static_cast<size_t>(workers));
  int chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    int lo = w * chunk;
    int hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    futures.push_back(std::async(std::launch::async, [n, &rels, lo, hi] {
      BacktrackingSearch search(n, rels);
      std::vector<Permutation> found;
      for (int c = lo; c < hi; ++c) {
        auto branch = search.search_with_first(c);
        found.insert(found.end(), branch.begin(), branch.end());
      }
      return found;
    }));
  }
  std::vector<Permutation> all;
  for (auto& f : futures) {
    auto branch = f.get();
    all.insert(all.end(), branch.begin(), branch.end());
  }
  return PermutationGroup::from_members(std::move(all));
}

PermutationGroup aut_group_exhaustive(const FiniteStructure& s,
                                      const std::vector<Relation>& rels) {
  validate_on_structure(s, rels);
  const int n = s.size();
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> members;
  do {
    Permutation p{std::vector<int>(im)};
    bool ok = true;
    for (const Relation& r : rels) {
      if (!preserves(p, r)) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(std::move(p));
  } while (std::next_permutation(im.begin(), im.end()));
  return PermutationGroup::from_members(std::move(members));
}

std::string DefinabilitySpace::label() const {
  std::string out;
  for (size_t i = 0; i < generator_names.size(); ++i) {
    if (i) out += '+';
    out += generator_names[i];
  }
  return out;
}

DefinabilitySpace make_space(const FiniteStructure& s,
                             std::vector<std::string> generator_names, int jobs) {
  std::sort(generator_names.begin(), generator_names.end());
  generator_names.erase(std::unique(generator_names.begin(), generator_names.end()),
                        generator_names.end());
  std::vector<Relation> rels;
  rels.reserve(generator_names.size());
  for (const std::string& name : generator_names) rels.push_back(s.relation(name));
  PermutationGroup group = aut_group(s, rels, jobs);
  return DefinabilitySpace{std::move(generator_names), std::move(group)};
}

SpaceOrder space_compare(const DefinabilitySpace& a, const DefinabilitySpace& b) {
  bool a_group_in_b = a.group.subgroup_of(b.group);
  bool b_group_in_a = b.group.subgroup_of(a.group);
  if (a_group_in_b && b_group_in_a) return SpaceOrder::Equal;
  if (b_group_in_a) return SpaceOrder::Below;  // larger group = smaller space
  if (a_group_in_b) return SpaceOrder::Above;
  return SpaceOrder::Incomparable;
}

HasseDiagram hasse(std::vector<DefinabilitySpace> spaces) {
  HasseDiagram d;
  std::vector<std::vector<std::string>> merged_labels;
  for (DefinabilitySpace& space : spaces) {
    bool merged = false;
    for (size_t i = 0; i < d.nodes.size(); ++i) {
      if (d.nodes[i].group == space.group) {
        merged_labels[i].push_back(space.label());
        merged = true;
        break;
      }
    }
    if (!merged) {
      merged_labels.push_back({space.label()});
      d.nodes.push_back(std::move(space));
    }
  }
  // bottom-up: largest automorphism group = smallest space first
  std::vector<size_t> perm(d.nodes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    if (d.nodes[a].group.order() != d.nodes[b].group.order()) {
      return d.nodes[a].group.order() > d.nodes[b].group.order();
    }
    return d.nodes[a].group.members() < d.nodes[b].group.members();
  });
  std::vector<DefinabilitySpace> nodes;
  std::vector<std::string> labels;
  for (size_t i : perm) {
    nodes.push_back(std::move(d.nodes[i]));
    std::sort(merged_labels[i].begin(), merged_labels[i].end());
    std::string label;
    for (size_t j = 0; j < merged_labels[i].size(); ++j) {
      if (j) label += '=';
      label += merged_labels[i][j];
    }
    labels.push_back(std::move(label));
  }
  d.nodes = std::move(nodes);
  d.labels = std::move(labels);

  const size_t count = d.nodes.size();
  std::vector<std::vector<bool>> below(count, std::vector<bool>(count, false));
  for (size_t i = 0; i < count; ++i) {
    for (size_t j = 0; j < count; ++j) {
      if (i != j && space_compare(d.nodes[i], d.nodes[j]) == SpaceOrder::Below) {
        below[i][j] = true;
      }
    }
  }
  for (size_t i = 0; i < count; ++i) {
    for (size_t j = 0; j < count; ++j) {
      if (!below[i][j]) continue;
      bool covering = true;
      for (size_t k = 0; k < count && covering; ++k) {
        if (below[i][k] && below[k][j]) covering = false;
      }
      if (covering) d.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

std::optional<Witness> definable(const FiniteStructure& s, const Relation& target,
                                 const std::vector<std::string>& base_names,
                                 int jobs) {
  DefinabilitySpace base = make_space(s, base_names, jobs);
  for (const Permutation& p : base.group.members()) {
    std::optional<Tuple> t = breaking_tuple(p, target);
    if (t) {
      return Witness{p, base.label(), target.name, std::move(*t)};
    }
  }
  return std::nullopt;
}

std::vector<Witness> strictness_witnesses(const FiniteStructure& s,
                                          const HasseDiagram& d) {
  std::vector<Witness> out;
  for (auto [lo, hi] : d.edges) {
    const DefinabilitySpace& lower = d.nodes[static_cast<size_t>(lo)];
    const DefinabilitySpace& upper = d.nodes[static_cast<size_t>(hi)];
    // least member of the lower group missing from the upper group
    const Permutation* witness = nullptr;
    for (const Permutation& p : lower.group.members()) {
      if (!upper.group.contains(p)) {
        witness = &p;
        break;
      }
    }
    if (!witness) throw Error("diagram edge is not strict");  // unreachable by construction
    for (const std::string& name : upper.generator_names) {
      std::optional<Tuple> t = breaking_tuple(*witness, s.relation(name));
      if (t) {
        out.push_back(Witness{*witness, lower.label(), name, std::move(*t)});
        break;
      }
    }
  }
  if (out.size() != d.edges.size()) throw Error("edge without breaking generator");
  return out;
}

std::string to_dot(const HasseDiagram& d) {
  std::ostringstream out;
  out << "digraph definability {\n";
  out << "  rankdir=BT;\n";
  for (size_t i = 0; i < d.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << d.labels[i]
        << " | order=" << d.nodes[i].group.order() << "\"];\n";
  }
  for (auto [lo, hi] : d.edges) {
    out << "  n" << lo << " -> n" << hi << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ordlat
