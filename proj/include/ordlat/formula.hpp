#ifndef ORDLAT_FORMULA_HPP
#define ORDLAT_FORMULA_HPP

#include <memory>
#include <string>
#include <vector>

#include "ordlat/core.hpp"

namespace ordlat {

/// First-order formula over a finite structure. Atoms compare variables by
/// the structure order, test equality, apply a named relation, or (on grids)
/// constrain the vertical difference to an integer literal.
struct Formula {
  enum class Kind {
    Lt,       // var[0] < var[1]
    Eq,       // var[0] = var[1]
    RelAtom,  // rel_name(vars...)
    Diff,     // diff(var[0], var[1], literal): var[0] - var[1] = literal
    Not,
    And,
    Or,
    Implies,
    Exists,  // quantified over bound_var
    Forall,
  };

  Kind kind;
  std::vector<std::string> vars;           // atom arguments
  std::string rel_name;                    // RelAtom only
  long long literal = 0;                   // Diff only
  std::string bound_var;                   // quantifiers only
  std::vector<std::shared_ptr<const Formula>> children;

  static std::shared_ptr<const Formula> lt(std::string a, std::string b);
  static std::shared_ptr<const Formula> eq(std::string a, std::string b);
  static std::shared_ptr<const Formula> rel(std::string name,
                                            std::vector<std::string> args);
  static std::shared_ptr<const Formula> diff_atom(std::string a, std::string b,
                                                  long long k);
  static std::shared_ptr<const Formula> negate(std::shared_ptr<const Formula> f);
  static std::shared_ptr<const Formula> conj(std::shared_ptr<const Formula> a,
                                             std::shared_ptr<const Formula> b);
  static std::shared_ptr<const Formula> disj(std::shared_ptr<const Formula> a,
                                             std::shared_ptr<const Formula> b);
  static std::shared_ptr<const Formula> implies(std::shared_ptr<const Formula> a,
                                                std::shared_ptr<const Formula> b);
  static std::shared_ptr<const Formula> exists(std::string v,
                                               std::shared_ptr<const Formula> f);
  static std::shared_ptr<const Formula> forall(std::string v,
                                               std::shared_ptr<const Formula> f);
};

bool structurally_equal(const Formula& a, const Formula& b);

/// Named formula with an explicit free-variable list; evaluates to a
/// |free_vars|-ary relation.
struct DefinedRelation {
  std::string name;
  std::vector<std::string> free_vars;
  std::shared_ptr<const Formula> body;
};

/// Parses `NAME(v1,...,vk) := <formula>`. Grammar (binding tightness
/// ! > & > | > ->, quantifier bodies extend maximally right):
///
///   def    := NAME "(" vars ")" ":=" form
///   form   := "exists" VAR "." form | "forall" VAR "." form | imp
///   imp    := or ("->" imp)?
///   or     := and ("|" and)*
///   and    := unary ("&" unary)*
///   unary  := "!" unary | atom | "(" form ")"
///   atom   := VAR "<" VAR | VAR ">" VAR | VAR "=" VAR
///           | NAME "(" vars ")" | "diff" "(" VAR "," VAR "," INT ")"
///
/// Reports syntax errors with line:column; rejects unbound variables and
/// duplicate free variables.
DefinedRelation parse(const std::string& text);

/// Canonical fully parenthesized form; parse(print(d)) == d structurally.
std::string print(const DefinedRelation& d);
std::string print(const Formula& f);

/// Extension { t : s |= body[free_vars := t] }, computed bottom-up by
/// per-subformula assignment tables. Diff atoms require a grid-backed s.
Relation evaluate(const DefinedRelation& d, const FiniteStructure& s);

}  // namespace ordlat

#endif  // ORDLAT_FORMULA_HPP
