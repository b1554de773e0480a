#pragma once

#include <string>
#include <utility>

#include "grl/context.hpp"
#include "grl/typed_wiring.hpp"

namespace grl {

// Three-valued order check; semi-decidable calculi may answer unknown.
enum class Verdict { yes, no, unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

inline Verdict both(Verdict a, Verdict b) {
  if (a == Verdict::no || b == Verdict::no) return Verdict::no;
  if (a == Verdict::unknown || b == Verdict::unknown) return Verdict::unknown;
  return Verdict::yes;
}

// A regular calculus: predicates P(Γ) for each context, a monotone action of
// one-shell wirings, and the right ajax structure (truth, boxplus) with its
// left adjoint lambda_split. Predicates carry no context; callers pass it.
template <class P>
class RegularCalculus {
 public:
  using Pred = P;
  virtual ~RegularCalculus() = default;

  virtual Verdict leq(const Context& ctx, const P& a, const P& b) const = 0;
  virtual P apply(const TypedWiring& w, const P& p) const = 0;
  virtual P boxplus(const Context& c1, const P& a, const Context& c2, const P& b) const = 0;
  virtual P truth(const Context& ctx) const = 0;
  virtual std::pair<P, P> lambda_split(const Context& c1, const Context& c2, const P& g) const = 0;
  virtual std::string show(const Context& ctx, const P& p) const = 0;

  Verdict equal(const Context& ctx, const P& a, const P& b) const { return both(leq(ctx, a, b), leq(ctx, b, a)); }
  // Meet, computed as mu applied to the exterior conjunction.
  P meet(const Context& ctx, const P& a, const P& b) const { return apply(supply_gen(Gen::mu, ctx), boxplus(ctx, a, ctx, b)); }
};

}  // namespace grl
