#include "ordlat/core.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace ordlat {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<int> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i)) {
      throw Error("not a permutation: image sequence is not a bijection of 0.." +
                  std::to_string(images_.size() - 1));
    }
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Tuple Permutation::apply(const Tuple& t) const {
  Tuple out;
  out.reserve(t.size());
  for (int x : t) {
    if (x < 0 || x >= size()) {
      throw Error("tuple element " + std::to_string(x) + " out of range");
    }
    out.push_back(images_[static_cast<size_t>(x)]);
  }
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<size_t>(images_[i])] = static_cast<int>(i);
  }
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw Error("compose: size mismatch (" + std::to_string(p.size()) + " vs " +
                std::to_string(q.size()) + ")");
  }
  std::vector<int> im(static_cast<size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) {
    im[static_cast<size_t>(i)] = p(q(i));
  }
  return Permutation(std::move(im));
}

Permutation invert(const Permutation& p) { return p.inverse(); }

Tuple apply_to_tuple(const Permutation& p, const Tuple& t) { return p.apply(t); }

Relation make_relation(std::string name, int arity, std::set<Tuple> extension,
                       int size) {
  if (arity < 1) throw Error("relation arity must be >= 1");
  for (const Tuple& t : extension) {
    if (static_cast<int>(t.size()) != arity) {
      throw Error("relation " + name + ": tuple length != arity");
    }
    for (int x : t) {
      if (x < 0 || x >= size) {
        throw Error("relation " + name + ": element " + std::to_string(x) +
                    " outside universe");
      }
    }
  }
  return Relation{std::move(name), arity, std::move(extension)};
}

PermutationGroup PermutationGroup::from_members(std::vector<Permutation> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  PermutationGroup g;
  g.members_ = std::move(members);
  return g;
}

PermutationGroup PermutationGroup::trivial(int n) {
  return from_members({Permutation::identity(n)});
}

int PermutationGroup::degree() const {
  return members_.empty() ? 0 : members_.front().size();
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

bool PermutationGroup::subgroup_of(const PermutationGroup& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

PermutationGroup generate_group(int n, const std::vector<Permutation>& generators) {
  for (const Permutation& g : generators) {
    if (g.size() != n) throw Error("generate_group: generator size mismatch");
  }
  std::set<Permutation> seen;
  std::deque<Permutation> todo;
  Permutation id = Permutation::identity(n);
  seen.insert(id);
  todo.push_back(id);
  for (const Permutation& g : generators) {
    if (seen.insert(g).second) todo.push_back(g);
  }
  while (!todo.empty()) {
    Permutation cur = std::move(todo.front());
    todo.pop_front();
    for (const Permutation& g : generators) {
      Permutation prod = compose(cur, g);
      if (seen.insert(prod).second) todo.push_back(std::move(prod));
    }
  }
  return PermutationGroup::from_members(
      std::vector<Permutation>(seen.begin(), seen.end()));
}

FiniteStructure::FiniteStructure(int size, std::optional<GridShape> grid)
    : size_(size), grid_(grid) {}

FiniteStructure FiniteStructure::linear(int n) {
  if (n < 1) throw Error("linear structure needs size >= 1");
  return FiniteStructure(n, std::nullopt);
}

FiniteStructure FiniteStructure::grid(int m, int h) {
  if (m < 1 || h < 1) throw Error("grid needs m >= 1 and h >= 1");
  return FiniteStructure(m * h, GridShape{m, h});
}

const GridShape& FiniteStructure::grid_shape() const {
  if (!grid_) throw Error("structure is not grid-backed");
  return *grid_;
}

int FiniteStructure::vertical_of(int i) const { return i / grid_shape().height; }

int FiniteStructure::level_of(int i) const { return i % grid_shape().height; }

int FiniteStructure::point(int v, int z) const {
  const GridShape& g = grid_shape();
  if (v < 0 || v >= g.verticals || z < 0 || z >= g.height) {
    throw Error("grid point (" + std::to_string(v) + "," + std::to_string(z) +
                ") out of range");
  }
  return v * g.height + z;
}

std::string FiniteStructure::point_name(int i) const {
  if (i < 0 || i >= size_) throw Error("point index out of range");
  if (!grid_) return std::to_string(i);
  return std::to_string(vertical_of(i)) + ":" + std::to_string(level_of(i));
}

Tuple FiniteStructure::parse_point_list(const std::vector<std::string>& words) const {
  Tuple t;
  t.reserve(words.size());
  for (const std::string& w : words) {
    size_t colon = w.find(':');
    int idx;
    try {
      if (colon == std::string::npos) {
        idx = std::stoi(w);
      } else {
        if (!grid_) throw Error("point '" + w + "' uses v:z on a linear structure");
        idx = point(std::stoi(w.substr(0, colon)), std::stoi(w.substr(colon + 1)));
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw Error("bad point '" + w + "'");
    }
    if (idx < 0 || idx >= size_) throw Error("point '" + w + "' out of range");
    t.push_back(idx);
  }
  return t;
}

void FiniteStructure::add_relation(Relation r) {
  Relation checked = make_relation(r.name, r.arity, std::move(r.extension), size_);
  relations_[checked.name] = std::move(checked);
}

bool FiniteStructure::has_relation(const std::string& name) const {
  return relations_.count(name) != 0;
}

const Relation& FiniteStructure::relation(const std::string& name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw Error("unknown relation '" + name + "'");
  return it->second;
}

std::string format_tuple(const FiniteStructure& s, const Tuple& t) {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out << ',';
    out << s.point_name(t[i]);
  }
  out << ')';
  return out.str();
}

std::string format_permutation(const Permutation& p) {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < p.size(); ++i) {
    if (i) out << ',';
    out << p(i);
  }
  out << ']';
  return out.str();
}

}  // namespace ordlat
