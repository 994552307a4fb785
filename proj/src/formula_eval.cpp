#include <algorithm>
#include <map>

#include "ordlat/formula.hpp"

namespace ordlat {

namespace {

// Set of satisfying assignments of one subformula, keyed by its free
// variables (sorted by name; rows aligned to that order).
struct Table {
  std::vector<std::string> vars;
  std::set<std::vector<int>> rows;
};

std::vector<std::string> sorted_union(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// All assignments over `vars`.
Table full_table(std::vector<std::string> vars, int n) {
  Table t;
  t.vars = std::move(vars);
  std::vector<int> row(t.vars.size(), 0);
  if (t.vars.empty()) {
    t.rows.insert(row);  // the empty assignment: constant true
    return t;
  }
  while (true) {
    t.rows.insert(row);
    size_t pos = row.size();
    while (pos > 0 && row[pos - 1] == n - 1) row[--pos] = 0;
    if (pos == 0) return t;
    ++row[pos - 1];
  }
}

// Re-keys `t` to the superset `vars`, crossing missing columns with the
// whole universe.
Table expand(const Table& t, const std::vector<std::string>& vars, int n) {
  if (t.vars == vars) return t;
  Table out;
  out.vars = vars;
  std::vector<int> src_pos(vars.size(), -1);
  for (size_t i = 0; i < vars.size(); ++i) {
    auto it = std::lower_bound(t.vars.begin(), t.vars.end(), vars[i]);
    if (it != t.vars.end() && *it == vars[i]) {
      src_pos[i] = static_cast<int>(it - t.vars.begin());
    }
  }
  for (const auto& row : t.rows) {
    std::vector<int> base(vars.size(), 0);
    std::vector<size_t> free_cols;
    for (size_t i = 0; i < vars.size(); ++i) {
      if (src_pos[i] >= 0) {
        base[i] = row[static_cast<size_t>(src_pos[i])];
      } else {
        free_cols.push_back(i);
      }
    }
    // enumerate all values of the new columns
    std::vector<int> counter(free_cols.size(), 0);
    while (true) {
      for (size_t j = 0; j < free_cols.size(); ++j) base[free_cols[j]] = counter[j];
      out.rows.insert(base);
      size_t pos = counter.size();
      while (pos > 0 && counter[pos - 1] == n - 1) counter[--pos] = 0;
      if (pos == 0) break;
      ++counter[pos - 1];
    }
  }
  return out;
}

Table natural_join(const Table& a, const Table& b) {
  std::vector<std::string> vars = sorted_union(a.vars, b.vars);
  Table out;
  out.vars = vars;
  // column maps into the joined row
  std::vector<int> a_pos(a.vars.size()), b_pos(b.vars.size());
  for (size_t i = 0; i < a.vars.size(); ++i) {
    a_pos[i] = static_cast<int>(std::lower_bound(vars.begin(), vars.end(), a.vars[i]) -
                                vars.begin());
  }
  for (size_t i = 0; i < b.vars.size(); ++i) {
    b_pos[i] = static_cast<int>(std::lower_bound(vars.begin(), vars.end(), b.vars[i]) -
                                vars.begin());
  }
  // index b by its shared columns
  std::vector<size_t> a_shared, b_shared;
  for (size_t i = 0; i < a.vars.size(); ++i) {
    auto it = std::lower_bound(b.vars.begin(), b.vars.end(), a.vars[i]);
    if (it != b.vars.end() && *it == a.vars[i]) {
      a_shared.push_back(i);
      b_shared.push_back(static_cast<size_t>(it - b.vars.begin()));
    }
  }
  std::map<std::vector<int>, std::vector<const std::vector<int>*>> b_index;
  for (const auto& row : b.rows) {
    std::vector<int> key;
    key.reserve(b_shared.size());
    for (size_t i : b_shared) key.push_back(row[i]);
    b_index[key].push_back(&row);
  }
  for (const auto& arow : a.rows) {
    std::vector<int> key;
    key.reserve(a_shared.size());
    for (size_t i : a_shared) key.push_back(arow[i]);
    auto it = b_index.find(key);
    if (it == b_index.end()) continue;
    for (const auto* brow : it->second) {
      std::vector<int> joined(vars.size(), 0);
      for (size_t i = 0; i < a.vars.size(); ++i) joined[static_cast<size_t>(a_pos[i])] = arow[i];
      for (size_t i = 0; i < b.vars.size(); ++i) joined[static_cast<size_t>(b_pos[i])] = (*brow)[i];
      out.rows.insert(std::move(joined));
    }
  }
  return out;
}

Table complement(const Table& t, int n) {
  Table out = full_table(t.vars, n);
  for (const auto& row : t.rows) out.rows.erase(row);
  return out;
}

Table table_union(const Table& a, const Table& b, int n) {
  std::vector<std::string> vars = sorted_union(a.vars, b.vars);
  Table ea = expand(a, vars, n);
  Table eb = expand(b, vars, n);
  for (const auto& row : eb.rows) ea.rows.insert(row);
  return ea;
}

Table project_out(const Table& t, const std::string& v) {
  auto it = std::lower_bound(t.vars.begin(), t.vars.end(), v);
  if (it == t.vars.end() || *it != v) return t;
  size_t col = static_cast<size_t>(it - t.vars.begin());
  Table out;
  out.vars = t.vars;
  out.vars.erase(out.vars.begin() + static_cast<long>(col));
  for (const auto& row : t.rows) {
    std::vector<int> r = row;
    r.erase(r.begin() + static_cast<long>(col));
    out.rows.insert(std::move(r));
  }
  return out;
}

Table forall_reduce(const Table& t, const std::string& v, int n) {
  auto it = std::lower_bound(t.vars.begin(), t.vars.end(), v);
  if (it == t.vars.end() || *it != v) return t;
  size_t col = static_cast<size_t>(it - t.vars.begin());
  Table out;
  out.vars = t.vars;
  out.vars.erase(out.vars.begin() + static_cast<long>(col));
  std::map<std::vector<int>, int> counts;
  for (const auto& row : t.rows) {
    std::vector<int> r = row;
    r.erase(r.begin() + static_cast<long>(col));
    ++counts[std::move(r)];
  }
  for (auto& [rest, count] : counts) {
    if (count == n) out.rows.insert(rest);
  }
  return out;
}

struct Evaluator {
  const FiniteStructure& s;
  int n;

  Table eval(const Formula& f) {
    switch (f.kind) {
      case Formula::Kind::Lt:
        return atom_lt(f);
      case Formula::Kind::Eq:
        return atom_eq(f);
      case Formula::Kind::RelAtom:
        return atom_rel(f);
      case Formula::Kind::Diff:
        return atom_diff(f);
      case Formula::Kind::Not:
        return complement(eval(*f.children[0]), n);
      case Formula::Kind::And:
        return natural_join(eval(*f.children[0]), eval(*f.children[1]));
      case Formula::Kind::Or:
        return table_union(eval(*f.children[0]), eval(*f.children[1]), n);
      case Formula::Kind::Implies:
        return table_union(complement(eval(*f.children[0]), n), eval(*f.children[1]), n);
      case Formula::Kind::Exists:
        return project_out(eval(*f.children[0]), f.bound_var);
      case Formula::Kind::Forall:
        return forall_reduce(eval(*f.children[0]), f.bound_var, n);
    }
    throw Error("corrupt formula node");
  }

  Table atom_lt(const Formula& f) {
    const std::string& v = f.vars[0];
    const std::string& w = f.vars[1];
    Table t;
    if (v == w) {
      t.vars = {v};  // x < x is always false
      return t;
    }
    t.vars = {v, w};
    std::sort(t.vars.begin(), t.vars.end());
    bool v_first = t.vars[0] == v;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        // assignment v=a, w=b
        t.rows.insert(v_first ? std::vector<int>{a, b} : std::vector<int>{b, a});
      }
    }
    return t;
  }

  Table atom_eq(const Formula& f) {
    const std::string& v = f.vars[0];
    const std::string& w = f.vars[1];
    if (v == w) return full_table({v}, n);
    Table t;
    t.vars = {v, w};
    std::sort(t.vars.begin(), t.vars.end());
    for (int a = 0; a < n; ++a) t.rows.insert({a, a});
    return t;
  }

  Table atom_rel(const Formula& f) {
    const Relation& r = s.relation(f.rel_name);
    if (static_cast<int>(f.vars.size()) != r.arity) {
      throw Error("relation '" + f.rel_name + "' has arity " +
                  std::to_string(r.arity) + ", got " + std::to_string(f.vars.size()) +
                  " arguments");
    }
    // distinct variables, sorted
    std::vector<std::string> vars = f.vars;
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    Table t;
    t.vars = vars;
    for (const Tuple& tup : r.extension) {
      std::vector<int> row(vars.size(), -1);
      bool ok = true;
      for (size_t i = 0; i < f.vars.size() && ok; ++i) {
        size_t col = static_cast<size_t>(
            std::lower_bound(vars.begin(), vars.end(), f.vars[i]) - vars.begin());
        if (row[col] == -1) {
          row[col] = tup[i];
        } else if (row[col] != tup[i]) {
          ok = false;  // repeated variable must take one value
        }
      }
      if (ok) t.rows.insert(std::move(row));
    }
    return t;
  }

  Table atom_diff(const Formula& f) {
    if (!s.is_grid()) {
      throw Error("diff atom requires a grid-backed structure");
    }
    const std::string& v = f.vars[0];
    const std::string& w = f.vars[1];
    long long k = f.literal;
    if (v == w) {
      // x - x = 0
      return k == 0 ? full_table({v}, n) : Table{{v}, {}};
    }
    Table t;
    t.vars = {v, w};
    std::sort(t.vars.begin(), t.vars.end());
    bool v_first = t.vars[0] == v;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (s.vertical_of(a) != s.vertical_of(b)) continue;  // difference is infinite
        if (static_cast<long long>(s.level_of(a)) - s.level_of(b) != k) continue;
        t.rows.insert(v_first ? std::vector<int>{a, b} : std::vector<int>{b, a});
      }
    }
    return t;
  }
};

}  // namespace

Relation evaluate(const DefinedRelation& d, const FiniteStructure& s) {
  Evaluator ev{s, s.size()};
  Table body = ev.eval(*d.body);
  std::vector<std::string> sorted_free = d.free_vars;
  std::sort(sorted_free.begin(), sorted_free.end());
  for (const std::string& v : body.vars) {
    if (!std::binary_search(sorted_free.begin(), sorted_free.end(), v)) {
      throw Error("unbound variable '" + v + "'");
    }
  }
  Table expanded = expand(body, sorted_free, s.size());
  // column of each declared free variable in the sorted table
  std::vector<size_t> cols;
  cols.reserve(d.free_vars.size());
  for (const std::string& v : d.free_vars) {
    cols.push_back(static_cast<size_t>(
        std::lower_bound(sorted_free.begin(), sorted_free.end(), v) -
        sorted_free.begin()));
  }
  std::set<Tuple> extension;
  for (const auto& row : expanded.rows) {
    Tuple t;
    t.reserve(cols.size());
    for (size_t c : cols) t.push_back(row[c]);
    extension.insert(std::move(t));
  }
  return make_relation(d.name, static_cast<int>(d.free_vars.size()),
                       std::move(extension), s.size());
}

}  // namespace ordlat
