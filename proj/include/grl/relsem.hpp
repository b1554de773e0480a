#pragma once

// Relations between finite sets, the predicate calculus they carry, and finite
// models of theories.
//
// A finite set of size n is {0..n-1}. Products are encoded mixed-radix with the
// first factor most significant, so (a⊗b)⊗c and a⊗(b⊗c) coincide and the unit
// set {0} is strict.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grl/calculus.hpp"
#include "grl/context.hpp"
#include "grl/formula.hpp"
#include "grl/term.hpp"
#include "grl/typed_wiring.hpp"
#include "grl/wiring.hpp"

namespace grl {

using Tuple = std::vector<std::size_t>;
using TupleSet = std::set<Tuple>;
using Carriers = std::map<Sort, std::size_t>;

class FinRel {
 public:
  FinRel() = default;
  FinRel(std::size_t dom, std::size_t cod, std::set<std::pair<std::size_t, std::size_t>> pairs = {});

  std::size_t dom() const { return dom_; }
  std::size_t cod() const { return cod_; }
  const std::set<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }
  bool contains(std::size_t a, std::size_t b) const { return pairs_.contains({a, b}); }

  bool operator==(const FinRel&) const = default;

 private:
  std::size_t dom_ = 0, cod_ = 0;
  std::set<std::pair<std::size_t, std::size_t>> pairs_;
};

FinRel rel_identity(std::size_t n);
FinRel rel_compose(const FinRel& f, const FinRel& g);
FinRel rel_tensor(const FinRel& f, const FinRel& g);
FinRel rel_dagger(const FinRel& f);
bool rel_leq(const FinRel& f, const FinRel& g);
// Graph of a function, given by its values.
FinRel rel_graph(std::size_t dom, std::size_t cod, const std::vector<std::size_t>& values);
bool is_function_graph(const FinRel& f);
// id <= f;f† and f†;f <= id.
bool is_left_adjoint(const FinRel& f);

// The supply of wiring on a set of size c; n is the arity for delta_n, mu_n, identity.
FinRel rel_supply(Gen kind, std::size_t c, std::size_t n = 0);
// The relation c^m -> c^n a wiring morphism denotes: ports in one block agree.
FinRel rel_of_wiring(const WMor& w, std::size_t c);
std::size_t power(std::size_t base, std::size_t exp);

struct Tabulation {
  std::size_t tab = 0;  // |tab f|
  FinRel right;         // f_R : dom -> tab
  FinRel left;          // f_L : tab -> cod
};
Tabulation tabulate(const FinRel& f);
// δ ; (f_L ⊗ f_R†) : tab -> cod ⊗ dom
FinRel tabulation_hat(const Tabulation& t);

// Size of the product of the carriers of ctx, and tuple encoding into it.
std::size_t product_size(const Context& ctx, const Carriers& c);
std::size_t encode(const Tuple& t, const Context& ctx, const Carriers& c);
Tuple decode(std::size_t code, const Context& ctx, const Carriers& c);
TupleSet all_tuples(const Context& ctx, const Carriers& c);

// Predicates of Rel(FinSet): subsets of the product, i.e. relations from the unit.
TupleSet prd_apply(const TypedWiring& w, const Carriers& c, const TupleSet& theta);
std::pair<TupleSet, TupleSet> prd_pi(const TupleSet& h, std::size_t split);
TupleSet prd_boxplus(const TupleSet& a, const TupleSet& b);

class PrdCalculus : public RegularCalculus<TupleSet> {
 public:
  explicit PrdCalculus(Carriers c) : carriers_(std::move(c)) {}
  const Carriers& carriers() const { return carriers_; }

  Verdict leq(const Context& ctx, const TupleSet& a, const TupleSet& b) const override;
  TupleSet apply(const TypedWiring& w, const TupleSet& p) const override;
  TupleSet boxplus(const Context& c1, const TupleSet& a, const Context& c2, const TupleSet& b) const override;
  TupleSet truth(const Context& ctx) const override;
  std::pair<TupleSet, TupleSet> lambda_split(const Context& c1, const Context& c2, const TupleSet& g) const override;
  std::string show(const Context& ctx, const TupleSet& p) const override;

 private:
  Carriers carriers_;
};

// A kite is a relation placed in the diagram, its domain and codomain wires
// drawn as one shell with context dom ⧺ cod.
struct Kite {
  Context dom;
  Context cod;
  FinRel rel;
};

struct KiteDiagram {
  Carriers carriers;
  std::vector<Kite> kites;
  TypedWiring wiring;  // shell i is kites[i].dom ⧺ kites[i].cod
};

// The name of a relation as a subset of dom ⧺ cod.
TupleSet name_of(const Kite& k, const Carriers& c);
GraphicalTerm<TupleSet> fold_kites(const KiteDiagram& k);
// Direct evaluation: outer tuples admitting a block assignment that every kite relates.
TupleSet evaluate_kites(const KiteDiagram& k);

struct Model {
  std::map<Sort, std::vector<std::string>> carriers;
  std::map<std::string, TupleSet> rels;  // tuples of element indices

  Carriers sizes() const;
  std::size_t size(const Sort& s) const;
  bool operator==(const Model&) const = default;
};

// Throws SortError if a sort lacks a carrier or a tuple is out of range.
void check_model(const Theory& th, const Model& m);
TupleSet model_eval(const Theory& th, const Model& m, const CQNF& nf);
TupleSet model_eval(const Theory& th, const Model& m, const Context& ctx, const Formula& phi);
TupleSet model_eval(const Theory& th, const Model& m, const GraphicalTerm<Formula>& t);
bool check_axioms(const Theory& th, const Model& m);
// Name of the first violated axiom, if any.
std::optional<std::string> violated_axiom(const Theory& th, const Model& m);

}  // namespace grl
