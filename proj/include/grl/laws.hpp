#pragma once

// Executable law suites, shared by `grl laws run` and the acceptance checks.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "grl/wiring.hpp"

namespace grl {

struct LawReport {
  std::string suite;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void check(bool holds, const std::string& what) {
    ++checked;
    if (!holds && failures.size() < 20) failures.push_back(what);
    else if (!holds) failures.back() = "... and more";
  }
};

// The equations and inequalities generating the wiring laws, instantiated in
// any structure that interprets the generators. Ops must provide
//   M gen(Gen), M id(size_t), M compose(M, M), M tensor(M, M),
//   bool eq(M, M), bool leq(M, M).
template <class Ops>
void wiring_laws(const Ops& ops, LawReport& r, const std::string& where = "") {
  const auto eps = ops.gen(Gen::epsilon), del = ops.gen(Gen::delta), eta = ops.gen(Gen::eta),
             mu = ops.gen(Gen::mu), sig = ops.gen(Gen::sigma);
  const auto id0 = ops.id(0), id1 = ops.id(1), id2 = ops.id(2);
  auto c = [&](const auto& a, const auto& b) { return ops.compose(a, b); };
  auto t = [&](const auto& a, const auto& b) { return ops.tensor(a, b); };
  auto eq = [&](const auto& a, const auto& b, const char* name) { r.check(ops.eq(a, b), where + name); };
  auto le = [&](const auto& a, const auto& b, const char* name) { r.check(ops.leq(a, b), where + name); };

  eq(c(del, sig), del, "cocommutativity");
  eq(c(sig, mu), mu, "commutativity");
  eq(c(del, t(eps, id1)), id1, "left counit");
  eq(c(del, t(id1, eps)), id1, "right counit");
  eq(c(t(eta, id1), mu), id1, "left unit");
  eq(c(t(id1, eta), mu), id1, "right unit");
  eq(c(del, t(del, id1)), c(del, t(id1, del)), "coassociativity");
  eq(c(t(mu, id1), mu), c(t(id1, mu), mu), "associativity");
  eq(c(del, mu), id1, "special");
  eq(c(t(del, id1), t(id1, mu)), c(mu, del), "frobenius left");
  eq(c(t(id1, del), t(mu, id1)), c(mu, del), "frobenius right");
  le(id1, c(eps, eta), "unit of eta -| epsilon");
  le(c(eta, eps), id0, "counit of eta -| epsilon");
  le(c(mu, del), id2, "mu;delta below id");
  le(c(del, mu), id1, "special law, lower half");
  const auto cup = c(eta, del), cap = c(mu, eps);
  eq(c(t(cup, id1), t(id1, cap)), id1, "yanking left");
  eq(c(t(id1, cup), t(cap, id1)), id1, "yanking right");
  eq(c(sig, sig), id2, "symmetry involution");
}

// Suites by name: wiring, pushout, rel-supply, lax-hom, tabulation, prd-ajax,
// theory-functor, syn-prd, syn-semilattice, limits. `scale` caps exhaustive
// sizes (carrier bound; wiring arity bound is scale + 1).
std::vector<std::string> law_suites();
LawReport run_laws(const std::string& suite, std::size_t scale, std::uint64_t seed);

}  // namespace grl
