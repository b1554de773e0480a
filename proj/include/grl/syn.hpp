#pragma once

// The syntactic po-category of a regular calculus. Objects pair a context with
// a predicate; a morphism (Γ1,p1) -> (Γ2,p2) is a predicate θ on Γ1 ⧺ Γ2 with
// θ <= p1 ⊞ p2. Identities, composites and the supply are represented by small
// graphical terms.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "grl/calculus.hpp"
#include "grl/error.hpp"
#include "grl/relsem.hpp"
#include "grl/term.hpp"

namespace grl {

template <class P>
struct SynObject {
  Context context;
  P pred;
};

template <class P>
struct SynMorphism {
  SynObject<P> src, dst;
  P theta;
  Verdict certificate = Verdict::unknown;
  bool unchecked = false;  // admitted although the hom condition could not be decided
};

// Certifies θ <= p1 ⊞ p2. A refuted condition always throws; an undecided one
// throws unless allow_unchecked, in which case the morphism is flagged.
template <class P>
SynMorphism<P> syn_morphism(const RegularCalculus<P>& calc, SynObject<P> src, SynObject<P> dst, P theta,
                            bool allow_unchecked = false) {
  const auto ctx = concat(src.context, dst.context);
  const auto bound = calc.boxplus(src.context, src.pred, dst.context, dst.pred);
  const auto v = calc.leq(ctx, theta, bound);
  if (v == Verdict::no) throw PreconditionError("syn", "theta is not below the product of its endpoints");
  if (v == Verdict::unknown && !allow_unchecked) {
    throw PreconditionError("syn", "hom condition undecided; pass allow_unchecked to admit it");
  }
  return {std::move(src), std::move(dst), std::move(theta), v, v == Verdict::unknown};
}

template <class P>
SynMorphism<P> syn_identity(const RegularCalculus<P>& calc, const SynObject<P>& o, bool allow_unchecked = false) {
  return syn_morphism(calc, o, o, calc.apply(supply_gen(Gen::delta, o.context), o.pred), allow_unchecked);
}

namespace detail {

// Shells Γ1⧺Γ2 and Γ2⧺Γ3, out Γ1⧺Γ3; the two Γ2 copies are joined and hidden.
inline TypedWiring composite_wiring(const Context& g1, const Context& g2, const Context& g3) {
  const auto a = g1.size(), b = g2.size(), c = g3.size();
  std::vector<std::size_t> labels;
  for (std::size_t i = 0; i < a; ++i) labels.push_back(i);
  for (std::size_t i = 0; i < b; ++i) labels.push_back(a + i);
  for (std::size_t i = 0; i < b; ++i) labels.push_back(a + i);
  for (std::size_t i = 0; i < c; ++i) labels.push_back(a + b + i);
  for (std::size_t i = 0; i < a; ++i) labels.push_back(i);
  for (std::size_t i = 0; i < c; ++i) labels.push_back(a + b + i);
  return TypedWiring({concat(g1, g2), concat(g2, g3)}, concat(g1, g3), Partition::from_labels(labels));
}

}  // namespace detail

template <class P>
SynMorphism<P> syn_compose(const RegularCalculus<P>& calc, const SynMorphism<P>& f, const SynMorphism<P>& g,
                           bool allow_unchecked = false) {
  if (f.dst.context != g.src.context) throw ShapeError("syn_compose: endpoints differ");
  if (calc.equal(f.dst.context, f.dst.pred, g.src.pred) == Verdict::no) {
    throw ShapeError("syn_compose: endpoint predicates differ");
  }
  GraphicalTerm<P> t({f.theta, g.theta},
                     detail::composite_wiring(f.src.context, f.dst.context, g.dst.context));
  return syn_morphism(calc, f.src, g.dst, represent(calc, t), allow_unchecked || f.unchecked || g.unchecked);
}

template <class P>
SynObject<P> syn_tensor(const RegularCalculus<P>& calc, const SynObject<P>& a, const SynObject<P>& b) {
  return {concat(a.context, b.context), calc.boxplus(a.context, a.pred, b.context, b.pred)};
}

// f ⊗ g, its θ rewired from Γ1Γ2Γ3Γ4 order to Γ1Γ3 ⧺ Γ2Γ4.
template <class P>
SynMorphism<P> syn_tensor(const RegularCalculus<P>& calc, const SynMorphism<P>& f, const SynMorphism<P>& g,
                          bool allow_unchecked = false) {
  const auto a = f.src.context.size(), b = f.dst.context.size();
  const auto c = g.src.context.size(), d = g.dst.context.size();
  std::vector<std::size_t> labels;
  for (std::size_t i = 0; i < a; ++i) labels.push_back(i);
  for (std::size_t i = 0; i < b; ++i) labels.push_back(a + c + i);
  for (std::size_t i = 0; i < c; ++i) labels.push_back(a + i);
  for (std::size_t i = 0; i < d; ++i) labels.push_back(a + c + b + i);
  for (std::size_t i = 0; i < a + b + c + d; ++i) labels.push_back(i);
  const auto src = syn_tensor(calc, f.src, g.src);
  const auto dst = syn_tensor(calc, f.dst, g.dst);
  GraphicalTerm<P> t({f.theta, g.theta},
                     TypedWiring({concat(f.src.context, f.dst.context), concat(g.src.context, g.dst.context)},
                                 concat(src.context, dst.context), Partition::from_labels(labels)));
  return syn_morphism(calc, src, dst, represent(calc, t), allow_unchecked || f.unchecked || g.unchecked);
}

// The supplied morphisms on (Γ,p): ε to the unit, δ to (Γ⧺Γ, p⊞p), and their
// mirrors η and μ. δ and μ carry p on a three-way dot.
template <class P>
SynMorphism<P> syn_supply(const RegularCalculus<P>& calc, const SynObject<P>& o, Gen kind,
                          bool allow_unchecked = false) {
  const SynObject<P> unit{{}, calc.truth({})};
  auto three = [&] { return calc.apply(supply_gen(Gen::delta_n, o.context, 3), o.pred); };
  switch (kind) {
    case Gen::epsilon: return syn_morphism(calc, o, unit, o.pred, allow_unchecked);
    case Gen::eta: return syn_morphism(calc, unit, o, o.pred, allow_unchecked);
    case Gen::delta: return syn_morphism(calc, o, syn_tensor(calc, o, o), three(), allow_unchecked);
    case Gen::mu: return syn_morphism(calc, syn_tensor(calc, o, o), o, three(), allow_unchecked);
    default: throw ShapeError("syn_supply: only epsilon, delta, eta, mu are supplied");
  }
}

// The morphism as a left adjoint: decided in Prd(Rel) by the function-graph
// criterion on the source predicate, otherwise taken on trust.
template <class C, class P>
Verdict syn_is_map(const C&, const SynMorphism<P>&) {
  return Verdict::unknown;
}

inline Verdict syn_is_map(const PrdCalculus&, const SynMorphism<TupleSet>& m) {
  const auto k = m.src.context.size();
  std::map<Tuple, std::size_t> images;
  for (const auto& t : m.theta) {
    Tuple a(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k));
    ++images[a];
  }
  for (const auto& a : m.src.pred) {
    auto it = images.find(a);
    if (it == images.end() || it->second != 1) return Verdict::no;
  }
  return Verdict::yes;
}

enum class LimitKind { equalizer, image };

// Equalizer: both θs share their Γ1 ports with the boundary and their Γ2 ports
// with each other. Image: θ_h with its Γ1 ports capped and Γ2 on the boundary.
template <class C, class P>
SynObject<P> graphical_limits(const C& calc, const SynMorphism<P>& h, const SynMorphism<P>& k, LimitKind kind) {
  const auto& g1 = h.src.context;
  const auto& g2 = h.dst.context;
  if (k.src.context != g1 || k.dst.context != g2) throw ShapeError("graphical_limits: morphisms are not parallel");
  if (calc.equal(g1, h.src.pred, k.src.pred) == Verdict::no || calc.equal(g2, h.dst.pred, k.dst.pred) == Verdict::no) {
    throw ShapeError("graphical_limits: morphisms are not parallel");
  }
  if (syn_is_map(calc, h) == Verdict::no || syn_is_map(calc, k) == Verdict::no) {
    throw PreconditionError("limits", "morphism is not a left adjoint");
  }
  const auto a = g1.size(), b = g2.size();
  const auto shell = concat(g1, g2);
  std::vector<std::size_t> labels;
  if (kind == LimitKind::equalizer) {
    for (int copy = 0; copy < 2; ++copy) {
      for (std::size_t i = 0; i < a + b; ++i) labels.push_back(i);
    }
    for (std::size_t i = 0; i < a; ++i) labels.push_back(i);
    GraphicalTerm<P> t({h.theta, k.theta}, TypedWiring({shell, shell}, g1, Partition::from_labels(labels)));
    return {g1, represent(calc, t)};
  }
  for (std::size_t i = 0; i < a + b; ++i) labels.push_back(i);
  for (std::size_t i = 0; i < b; ++i) labels.push_back(a + i);
  GraphicalTerm<P> t({h.theta}, TypedWiring({shell}, g2, Partition::from_labels(labels)));
  return {g2, represent(calc, t)};
}

// A finite meet-semilattice with top as the regular calculus (1, L): every
// context carries L, wirings act trivially, ⊞ is meet and λ duplicates.
class SemilatticeCalculus : public RegularCalculus<std::size_t> {
 public:
  // meet[a][b]; must be idempotent, commutative, associative with a top.
  explicit SemilatticeCalculus(std::vector<std::vector<std::size_t>> meet);
  std::size_t size() const { return meet_.size(); }
  std::size_t top() const { return top_; }
  std::size_t meet_of(std::size_t a, std::size_t b) const { return meet_.at(a).at(b); }

  Verdict leq(const Context&, const std::size_t& a, const std::size_t& b) const override {
    return meet_of(a, b) == a ? Verdict::yes : Verdict::no;
  }
  std::size_t apply(const TypedWiring&, const std::size_t& p) const override { return p; }
  std::size_t boxplus(const Context&, const std::size_t& a, const Context&, const std::size_t& b) const override {
    return meet_of(a, b);
  }
  std::size_t truth(const Context&) const override { return top_; }
  std::pair<std::size_t, std::size_t> lambda_split(const Context&, const Context&,
                                                   const std::size_t& g) const override {
    return {g, g};
  }
  std::string show(const Context&, const std::size_t& p) const override { return std::to_string(p); }

 private:
  std::vector<std::vector<std::size_t>> meet_;
  std::size_t top_ = 0;
};

}  // namespace grl
