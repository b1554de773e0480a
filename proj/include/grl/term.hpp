#pragma once

// Graphical terms: a wiring diagram whose shells are filled with predicates.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grl/calculus.hpp"
#include "grl/error.hpp"
#include "grl/typed_wiring.hpp"

namespace grl {

template <class P>
struct GraphicalTerm {
  std::vector<P> preds;  // one per shell of the wiring
  TypedWiring wiring;

  GraphicalTerm() = default;
  GraphicalTerm(std::vector<P> ps, TypedWiring w) : preds(std::move(ps)), wiring(std::move(w)) {
    if (preds.size() != wiring.shell_count()) {
      throw ShapeError("term: " + std::to_string(preds.size()) + " predicates for " +
                       std::to_string(wiring.shell_count()) + " shells");
    }
  }

  const Context& shell(std::size_t i) const { return wiring.shells().at(i); }
  const Context& out() const { return wiring.out(); }
  bool operator==(const GraphicalTerm&) const = default;
};

// The one-shell term (p; id).
template <class P>
GraphicalTerm<P> atomic_term(const Context& ctx, P p) {
  return GraphicalTerm<P>({std::move(p)}, identity_t({ctx}));
}

// Exterior conjunction of all shells, then the wiring.
template <class P>
P represent(const RegularCalculus<P>& calc, const GraphicalTerm<P>& t) {
  if (t.preds.size() != t.wiring.shell_count()) throw ShapeError("represent: shell count mismatch");
  if (t.preds.empty()) return calc.apply(t.wiring.flatten(), calc.truth({}));
  P acc = t.preds[0];
  Context ctx = t.shell(0);
  for (std::size_t i = 1; i < t.preds.size(); ++i) {
    acc = calc.boxplus(ctx, acc, t.shell(i), t.preds[i]);
    ctx = concat(ctx, t.shell(i));
  }
  return calc.apply(t.wiring.flatten(), acc);
}

enum class Relation { equal, entails };

inline const char* to_string(Relation r) { return r == Relation::equal ? "equal" : "entails"; }

template <class P>
struct Rewritten {
  GraphicalTerm<P> term;
  Relation relation;  // between the input's and the output's representation
};

// Replace shell i by a weaker predicate.
template <class P>
Rewritten<P> rewrite_monotone(const RegularCalculus<P>& calc, const GraphicalTerm<P>& t, std::size_t i, P weaker) {
  if (i >= t.preds.size()) throw PreconditionError("monotone", "no shell " + std::to_string(i));
  if (calc.leq(t.shell(i), t.preds[i], weaker) != Verdict::yes) {
    throw PreconditionError("monotone", "shell " + std::to_string(i) + " predicate is not known to entail the replacement");
  }
  auto preds = t.preds;
  preds[i] = std::move(weaker);
  return {GraphicalTerm<P>(std::move(preds), t.wiring), Relation::entails};
}

// Replace the wiring by one with connections broken.
template <class P>
Rewritten<P> rewrite_break(const GraphicalTerm<P>& t, const TypedWiring& broken) {
  if (broken.shells() != t.wiring.shells() || broken.out() != t.wiring.out()) {
    throw PreconditionError("break", "replacement wiring has a different boundary");
  }
  if (!leq_t(t.wiring, broken)) throw PreconditionError("break", "replacement is not above the wiring");
  return {GraphicalTerm<P>(t.preds, broken), Relation::entails};
}

// Substitute a term for shell i, which must hold exactly that term's predicate.
template <class P>
Rewritten<P> rewrite_nest(const RegularCalculus<P>& calc, const GraphicalTerm<P>& t, std::size_t i,
                          const GraphicalTerm<P>& inner) {
  if (i >= t.preds.size()) throw PreconditionError("nest", "no shell " + std::to_string(i));
  if (inner.out() != t.shell(i)) throw PreconditionError("nest", "inner boundary does not match shell context");
  if (calc.equal(t.shell(i), t.preds[i], represent(calc, inner)) != Verdict::yes) {
    throw PreconditionError("nest", "shell predicate is not known to equal the inner term");
  }
  std::vector<P> preds(t.preds.begin(), t.preds.begin() + static_cast<std::ptrdiff_t>(i));
  preds.insert(preds.end(), inner.preds.begin(), inner.preds.end());
  preds.insert(preds.end(), t.preds.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.preds.end());
  return {GraphicalTerm<P>(std::move(preds), compose_at(t.wiring, i, inner.wiring)), Relation::equal};
}

// Two shells with equal contexts whose corresponding ports share blocks become
// one shell holding the meet; the merged shell takes position i.
template <class P>
Rewritten<P> rewrite_meet_merge(const RegularCalculus<P>& calc, const GraphicalTerm<P>& t, std::size_t i,
                                std::size_t j) {
  const auto n = t.preds.size();
  if (i >= n || j >= n || i == j) throw PreconditionError("meet_merge", "need two distinct shells");
  if (t.shell(i) != t.shell(j)) throw PreconditionError("meet_merge", "shell contexts differ");
  const auto& w = t.wiring;
  for (std::size_t k = 0; k < t.shell(i).size(); ++k) {
    if (!w.blocks().same_block(w.index({i, k}), w.index({j, k}))) {
      throw PreconditionError("meet_merge", "port " + std::to_string(k) + " of the two shells is not joined");
    }
  }
  std::vector<P> preds;
  std::vector<Context> shells;
  std::vector<std::size_t> labels;
  for (std::size_t s = 0; s < n; ++s) {
    if (s == j) continue;
    preds.push_back(s == i ? calc.meet(t.shell(i), t.preds[i], t.preds[j]) : t.preds[s]);
    shells.push_back(t.shell(s));
    for (std::size_t k = 0; k < t.shell(s).size(); ++k) labels.push_back(w.blocks().block_of(w.index({s, k})));
  }
  for (std::size_t k = 0; k < w.out().size(); ++k) labels.push_back(w.blocks().block_of(w.out_offset() + k));
  TypedWiring merged(std::move(shells), w.out(), Partition::from_labels(labels), w.floating());
  return {GraphicalTerm<P>(std::move(preds), std::move(merged)), Relation::equal};
}

// Drop shell i, which must hold truth; its wires end in dots.
template <class P>
Rewritten<P> rewrite_remove_true(const RegularCalculus<P>& calc, const GraphicalTerm<P>& t, std::size_t i) {
  if (i >= t.preds.size()) throw PreconditionError("remove_true", "no shell " + std::to_string(i));
  if (calc.equal(t.shell(i), t.preds[i], calc.truth(t.shell(i))) != Verdict::yes) {
    throw PreconditionError("remove_true", "shell " + std::to_string(i) + " is not known to hold truth");
  }
  TypedWiring dots({}, t.shell(i), Partition(t.shell(i).size()));
  auto preds = t.preds;
  preds.erase(preds.begin() + static_cast<std::ptrdiff_t>(i));
  return {GraphicalTerm<P>(std::move(preds), compose_at(t.wiring, i, dots)), Relation::equal};
}

// The term with no shells and a dot on every outer wire.
template <class P>
Rewritten<P> rewrite_discard(const GraphicalTerm<P>& t) {
  TypedWiring dots({}, t.out(), Partition(t.out().size()));
  return {GraphicalTerm<P>({}, std::move(dots)), Relation::entails};
}

template <class P>
struct RewriteRule {
  enum class Kind { monotone, break_wires, nest, meet_merge, remove_true, discard };
  Kind kind = Kind::discard;
  std::size_t i = 0, j = 0;
  std::optional<P> pred;
  std::optional<TypedWiring> wiring;
  std::optional<GraphicalTerm<P>> inner;
};

template <class P>
Rewritten<P> rewrite(const RegularCalculus<P>& calc, const RewriteRule<P>& r, const GraphicalTerm<P>& t) {
  using K = typename RewriteRule<P>::Kind;
  auto need = [](bool ok, const char* rule, const char* what) {
    if (!ok) throw PreconditionError(rule, std::string("missing ") + what);
  };
  switch (r.kind) {
    case K::monotone: need(r.pred.has_value(), "monotone", "replacement predicate"); return rewrite_monotone(calc, t, r.i, *r.pred);
    case K::break_wires: need(r.wiring.has_value(), "break", "replacement wiring"); return rewrite_break(t, *r.wiring);
    case K::nest: need(r.inner.has_value(), "nest", "inner term"); return rewrite_nest(calc, t, r.i, *r.inner);
    case K::meet_merge: return rewrite_meet_merge(calc, t, r.i, r.j);
    case K::remove_true: return rewrite_remove_true(calc, t, r.i);
    case K::discard: return rewrite_discard(t);
  }
  throw PreconditionError("rewrite", "unknown rule");
}

}  // namespace grl
