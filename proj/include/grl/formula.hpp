#pragma once

// Regular-logic formulas over a theory signature, and the regular calculus of
// a theory: generator actions, exterior conjunction and its left adjoint.
//
// Variables are de Bruijn levels. In a context of length n the free variables
// are 0..n-1; an Exists at depth d binds level n+d. Alpha-equivalent formulas
// are therefore literally equal.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grl/context.hpp"
#include "grl/partition.hpp"
#include "grl/typed_wiring.hpp"
#include "grl/wiring.hpp"

namespace grl {

class Formula {
 public:
  enum class Kind { truth, atom, eq, conj, exists };

  Formula();  // true
  static Formula truth() { return Formula(); }
  static Formula atom(std::string rel, std::vector<std::size_t> args);
  static Formula eq(std::size_t a, std::size_t b);
  static Formula conj(Formula a, Formula b);
  static Formula exists(Sort s, Formula body);

  Kind kind() const;
  const std::string& rel() const;
  const std::vector<std::size_t>& args() const;  // atom arguments, or the two sides of eq
  const Formula& lhs() const;                    // conj
  const Formula& rhs() const;                    // conj
  const Sort& sort() const;                      // exists
  const Formula& body() const;                   // exists

  bool operator==(const Formula& o) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Conjunction of a list; true when empty.
Formula conj_all(const std::vector<Formula>& parts);
// Exists over each sort of ctx, outermost first, so ctx[0] binds the lowest level.
Formula exists_all(const Context& ctx, Formula body);

// Free variable i is printed as names[i]; bound ones as v<level>.
std::string to_string(const Formula& f, const std::vector<std::string>& names);
// Free variables printed x0..x(n-1).
std::string to_string(const Formula& f, std::size_t free_count);
std::vector<std::string> default_names(std::size_t n);

struct Sequent {
  std::string name;
  Context context;
  std::vector<std::string> vars;
  Formula lhs;
  Formula rhs;
};

struct Theory {
  std::string name;
  std::vector<Sort> sorts;
  std::map<std::string, Context> rels;
  std::vector<Sequent> axioms;

  bool has_sort(const Sort& s) const;
  const Context& arity(const std::string& rel) const;  // throws SortError if unknown
  void add_sort(const Sort& s);
  void add_rel(const std::string& rel, Context arity);
  void add_axiom(Sequent s);  // validates both sides
};

// Throws SortError on any ill-sorted subformula.
void check_formula(const Theory& th, const Context& ctx, const Formula& f);

// Rewrites variable indices: a free index i < n_old becomes free_map[i]; a bound
// level n_old + d becomes n_new + d.
Formula reindex(const Formula& f, std::size_t n_old, const std::vector<std::size_t>& free_map, std::size_t n_new);

// Generator actions on the trailing entry of ctx, the context of phi. Only
// eta, epsilon, mu and delta; eta needs the sort of the new variable.
Formula act_gen(const Theory& th, Gen kind, const Context& ctx, const Formula& phi,
                const std::optional<Sort>& eta_sort = std::nullopt);
// The context act_gen's result lives in.
Context act_gen_context(Gen kind, const Context& ctx, const std::optional<Sort>& eta_sort = std::nullopt);

Formula boxplus(const Theory& th, const Context& c1, const Formula& f1, const Context& c2, const Formula& f2);
std::pair<Formula, Formula> lambda_split(const Theory& th, const Context& c1, const Context& c2, const Formula& gamma);

// Prenex conjunctive normal form. Nodes 0..n-1 are the context positions and
// nodes n.. are the existential variables. Atoms mention only block
// representatives (the least node of each merge block); every existential
// variable is alone in its block and occurs in some atom.
struct CQNF {
  Context context;
  std::vector<Sort> exist_vars;
  std::vector<std::pair<std::string, std::vector<std::size_t>>> atoms;
  Partition merge;
  std::set<Sort> floating;

  std::size_t node_count() const { return context.size() + exist_vars.size(); }
  const Sort& node_sort(std::size_t v) const;
};

// Equality up to renaming existential variables and reordering (and
// deduplicating) atoms.
bool operator==(const CQNF& a, const CQNF& b);

// Accumulates nodes, equalities, atoms and dots, then produces a CQNF.
class CQBuilder {
 public:
  explicit CQBuilder(Context ctx);
  std::size_t add_node(const Sort& s);
  void unite(std::size_t a, std::size_t b);
  void add_atom(std::string rel, std::vector<std::size_t> args);
  void add_floating(const Sort& s);
  // Adds phi's structure, its free variables bound to the given nodes.
  void embed(const CQNF& phi, const std::vector<std::size_t>& free_nodes);
  void embed(const Formula& phi, const std::vector<std::size_t>& free_nodes);
  const Sort& sort(std::size_t node) const { return sorts_[node]; }
  CQNF finish();

 private:
  Context ctx_;
  std::vector<Sort> sorts_;
  DisjointSets sets_;
  std::vector<std::pair<std::string, std::vector<std::size_t>>> atoms_;
  std::set<Sort> floating_;
};

CQNF normalize(const Theory& th, const Context& ctx, const Formula& phi);
// Back to a formula: exists over existential variables, atoms, context
// equalities, then one exists-true conjunct per floating sort.
Formula to_formula(const CQNF& nf);
std::string to_string(const CQNF& nf);

CQNF act_wiring_nf(const Theory& th, const TypedWiring& w, const CQNF& phi);
Formula act_wiring(const Theory& th, const TypedWiring& w, const Formula& phi);

}  // namespace grl
