#pragma once

// Entailment of regular formulas and graphical terms. Without axioms this is
// conjunctive-query containment: ψ follows from φ iff the frozen structure of
// ψ maps homomorphically into that of φ, fixing the free variables. With
// axioms a bounded chase saturates φ's structure first.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grl/calculus.hpp"
#include "grl/formula.hpp"
#include "grl/relsem.hpp"
#include "grl/theory_terms.hpp"

namespace grl {

using Fact = std::pair<std::string, Tuple>;

struct CanonicalStructure {
  std::vector<Sort> sorts;   // sort of each element
  std::set<Fact> facts;
  Tuple distinguished;       // element of each context position

  std::size_t size() const { return sorts.size(); }
};

// Elements: one per context merge block (in order of least position), one per
// existential variable, one witness per floating sort.
CanonicalStructure canonical_structure(const CQNF& nf);
CanonicalStructure canonical_structure(const Theory& th, const FormulaTerm& t);

// Sort-respecting, fact-preserving map from -> to sending from.distinguished[i]
// to image[i]. Deterministic: the least such map in the search order.
std::optional<std::vector<std::size_t>> find_homomorphism(const CanonicalStructure& from,
                                                          const CanonicalStructure& to, const Tuple& image);

bool entails_free(const Theory& th, const Context& ctx, const Formula& phi, const Formula& psi);
bool entails_free(const Theory& th, const FormulaTerm& t, const FormulaTerm& u);

struct EntailResult {
  enum class Status { proved, refuted, unknown };
  Status status = Status::unknown;
  std::optional<Model> countermodel;
  std::optional<Tuple> witness;  // a tuple in eval(phi) but not eval(psi)
  std::size_t rounds = 0;        // chase rounds used
};

const char* to_string(EntailResult::Status s);

struct ChaseBudget {
  std::size_t depth = 8;
  std::size_t model_size = 3;
  std::size_t max_elements = 2000;
};

EntailResult entails_with_axioms(const Theory& th, const Context& ctx, const Formula& phi, const Formula& psi,
                                 const ChaseBudget& budget = {});
EntailResult entails_with_axioms(const Theory& th, const FormulaTerm& t, const FormulaTerm& u,
                                 const ChaseBudget& budget = {});

// Enumerates models in increasing size, at most budget.model_size per carrier,
// for one satisfying the axioms in which phi holds and psi fails somewhere.
std::optional<std::pair<Model, Tuple>> find_countermodel(const Theory& th, const Context& ctx, const Formula& phi,
                                                         const Formula& psi, std::size_t model_size);

// The regular calculus of a theory: predicates are formulas, order is
// entailment (decided without axioms, chased with them).
class TheoryCalculus : public RegularCalculus<Formula> {
 public:
  explicit TheoryCalculus(Theory th, ChaseBudget budget = {}) : th_(std::move(th)), budget_(budget) {}
  const Theory& theory() const { return th_; }

  Verdict leq(const Context& ctx, const Formula& a, const Formula& b) const override;
  Formula apply(const TypedWiring& w, const Formula& p) const override;
  Formula boxplus(const Context& c1, const Formula& a, const Context& c2, const Formula& b) const override;
  Formula truth(const Context& ctx) const override;
  std::pair<Formula, Formula> lambda_split(const Context& c1, const Context& c2, const Formula& g) const override;
  std::string show(const Context& ctx, const Formula& p) const override;

 private:
  Theory th_;
  ChaseBudget budget_;
};

}  // namespace grl
