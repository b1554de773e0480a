#include "grl/laws.hpp"

#include <functional>
#include <map>

#include "grl/dsl.hpp"
#include "grl/entail.hpp"
#include "grl/error.hpp"
#include "grl/formula.hpp"
#include "grl/random.hpp"
#include "grl/relsem.hpp"
#include "grl/syn.hpp"

namespace grl {

namespace {

struct WOps {
  WMor gen(Gen k) const { return generator(k); }
  WMor id(std::size_t n) const { return identity_w(n); }
  WMor compose(const WMor& a, const WMor& b) const { return grl::compose(a, b); }
  WMor tensor(const WMor& a, const WMor& b) const { return grl::tensor(a, b); }
  bool eq(const WMor& a, const WMor& b) const { return a == b; }
  bool leq(const WMor& a, const WMor& b) const { return grl::leq(a, b); }
};

struct RelOps {
  std::size_t c;
  FinRel gen(Gen k) const { return rel_supply(k, c); }
  FinRel id(std::size_t n) const { return rel_identity(power(c, n)); }
  FinRel compose(const FinRel& a, const FinRel& b) const { return rel_compose(a, b); }
  FinRel tensor(const FinRel& a, const FinRel& b) const { return rel_tensor(a, b); }
  bool eq(const FinRel& a, const FinRel& b) const { return a == b; }
  bool leq(const FinRel& a, const FinRel& b) const { return rel_leq(a, b); }
};

// Wirings on one sort acting on formulas: two wirings are compared through
// their images of sampled formulas, the sample context extended by a random
// prefix Γ that the wiring leaves alone.
struct TheoryOps {
  const Theory* th;
  Sort x;
  std::vector<std::pair<Context, std::uint64_t>> samples;

  TypedWiring gen(Gen k) const { return lift(generator(k), x); }
  TypedWiring id(std::size_t n) const { return lift(identity_w(n), x); }
  TypedWiring compose(const TypedWiring& a, const TypedWiring& b) const { return then(a, b); }
  TypedWiring tensor(const TypedWiring& a, const TypedWiring& b) const { return tensor_t(a, b).flatten(); }

  template <class Cmp>
  bool all(const TypedWiring& a, const TypedWiring& b, Cmp cmp) const {
    for (const auto& [gamma, seed] : samples) {
      const auto wa = tensor_t(identity_t({gamma}), a).flatten();
      const auto wb = tensor_t(identity_t({gamma}), b).flatten();
      Rng rng(seed);
      const auto phi = random_formula(rng, *th, wa.shells()[0], 4);
      if (!cmp(wa.out(), act_wiring(*th, wa, phi), act_wiring(*th, wb, phi))) return false;
    }
    return true;
  }
  bool eq(const TypedWiring& a, const TypedWiring& b) const {
    return all(a, b, [&](const Context& ctx, const Formula& p, const Formula& q) {
      return normalize(*th, ctx, p) == normalize(*th, ctx, q);
    });
  }
  bool leq(const TypedWiring& a, const TypedWiring& b) const {
    return all(a, b, [&](const Context& ctx, const Formula& p, const Formula& q) {
      return entails_free(*th, ctx, p, q);
    });
  }
};

// Every relation dom -> cod, as a bitmask over dom*cod pairs.
FinRel relation_of_mask(std::size_t dom, std::size_t cod, std::size_t mask) {
  std::set<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i < dom * cod; ++i) {
    if (mask >> i & 1) p.emplace(i / cod, i % cod);
  }
  return FinRel(dom, cod, std::move(p));
}

FinRel random_relation(Rng& rng, std::size_t dom, std::size_t cod) {
  std::set<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t a = 0; a < dom; ++a) {
    for (std::size_t b = 0; b < cod; ++b) {
      if (coin(rng)) p.emplace(a, b);
    }
  }
  return FinRel(dom, cod, std::move(p));
}

std::string shape(const FinRel& f) { return std::to_string(f.dom()) + "x" + std::to_string(f.cod()); }

void check_lax_hom(const FinRel& f, LawReport& r) {
  const auto c = f.dom(), d = f.cod();
  r.check(rel_leq(rel_compose(f, rel_supply(Gen::epsilon, d)), rel_supply(Gen::epsilon, c)),
          "f;eps <= eps at " + shape(f));
  r.check(rel_leq(rel_compose(f, rel_supply(Gen::delta, d)),
                  rel_compose(rel_supply(Gen::delta, c), rel_tensor(f, f))),
          "f;delta <= delta;(f*f) at " + shape(f));
}

void check_tabulation(const FinRel& f, LawReport& r) {
  const auto t = tabulate(f);
  const auto where = " at " + shape(f);
  r.check(rel_compose(t.right, t.left) == f, "f = f_R;f_L" + where);
  r.check(is_left_adjoint(t.left), "f_L is a left adjoint" + where);
  r.check(is_left_adjoint(rel_dagger(t.right)), "f_R is a right adjoint" + where);
  const auto hat = tabulation_hat(t);
  r.check(rel_compose(hat, rel_dagger(hat)) == rel_identity(t.tab), "hat;hat^dagger = id" + where);
}

std::vector<TupleSet> all_subsets(const TupleSet& universe) {
  std::vector<Tuple> u(universe.begin(), universe.end());
  std::vector<TupleSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << u.size()); ++mask) {
    TupleSet s;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (mask >> i & 1) s.insert(u[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

void suite_wiring(std::size_t scale, LawReport& r) {
  wiring_laws(WOps{}, r);
  const auto top = scale + 1;
  for (std::size_t a = 0; a <= top; ++a)
    for (std::size_t b = 0; b <= top; ++b)
      for (const auto& f : enum_homs(a, b)) {
        r.check(compose(identity_w(a), f) == f && compose(f, identity_w(b)) == f, "unit law at " + to_string(f));
      }
}

void suite_pushout(std::size_t scale, LawReport& r) {
  const auto top = scale + 1;
  for (std::size_t a = 0; a <= top; ++a)
    for (std::size_t b = 0; b <= top; ++b)
      for (std::size_t c = 0; c <= top; ++c) {
        const auto fs = enum_homs(a, b);
        const auto gs = enum_homs(b, c);
        for (const auto& f : fs)
          for (const auto& g : gs) {
            r.check(compose(f, g) == canonicalize(compose_pushout(to_cospan(f), to_cospan(g))),
                    to_string(f) + " ; " + to_string(g));
          }
      }
}

void suite_rel_supply(std::size_t scale, LawReport& r) {
  for (std::size_t c = 0; c <= scale + 1; ++c) {
    const auto where = "|c|=" + std::to_string(c) + ": ";
    wiring_laws(RelOps{c}, r, where);
    // the interpretation of any wiring is the composite of its generators'
    for (std::size_t a = 0; a <= 2; ++a)
      for (std::size_t b = 0; b <= 2; ++b)
        for (std::size_t d = 0; d <= 2; ++d)
          for (const auto& f : enum_homs(a, b))
            for (const auto& g : enum_homs(b, d)) {
              r.check(rel_of_wiring(compose(f, g), c) == rel_compose(rel_of_wiring(f, c), rel_of_wiring(g, c)),
                      where + "functoriality " + to_string(f) + " ; " + to_string(g));
            }
  }
}

void suite_lax_hom(std::size_t scale, std::uint64_t seed, LawReport& r) {
  const auto top = scale + 1;
  for (std::size_t dom = 0; dom <= top; ++dom)
    for (std::size_t cod = 0; cod <= top; ++cod)
      for (std::size_t mask = 0; mask < (std::size_t{1} << (dom * cod)); ++mask) {
        check_lax_hom(relation_of_mask(dom, cod, mask), r);
      }
  Rng rng(seed);
  for (int i = 0; i < 500; ++i) check_lax_hom(random_relation(rng, top, top + uniform(rng, 0, 1)), r);
}

void suite_tabulation(std::size_t scale, std::uint64_t seed, LawReport& r) {
  for (std::size_t dom = 0; dom <= scale; ++dom)
    for (std::size_t cod = 0; cod <= scale; ++cod)
      for (std::size_t mask = 0; mask < (std::size_t{1} << (dom * cod)); ++mask) {
        check_tabulation(relation_of_mask(dom, cod, mask), r);
      }
  Rng rng(seed);
  for (int i = 0; i < 500; ++i) check_tabulation(random_relation(rng, scale + 1, scale + 1), r);
}

// π ⊣ ⊞: h <= ⊞(π h) and π(⊞(f, g)) <= (f, g), with truth as the unit case.
void suite_prd_ajax(std::size_t scale, LawReport& r) {
  const Sort x{"X"};
  const std::vector<Context> ctxs{{}, {x}, {x, x}};
  for (std::size_t n = 0; n <= scale; ++n) {
    PrdCalculus calc({{x, n}});
    const auto where = "|X|=" + std::to_string(n) + " ";
    for (const auto& c1 : ctxs)
      for (const auto& c2 : ctxs) {
        const auto both = concat(c1, c2);
        for (const auto& h : all_subsets(calc.truth(both))) {
          auto [f, g] = calc.lambda_split(c1, c2, h);
          r.check(calc.leq(both, h, calc.boxplus(c1, f, c2, g)) == Verdict::yes, where + "unit h <= boxplus(pi h)");
        }
        const auto f1 = all_subsets(calc.truth(c1)), f2 = all_subsets(calc.truth(c2));
        for (const auto& f : f1)
          for (const auto& g : f2) {
            auto [a, b] = calc.lambda_split(c1, c2, calc.boxplus(c1, f, c2, g));
            r.check(calc.leq(c1, a, f) == Verdict::yes && calc.leq(c2, b, g) == Verdict::yes,
                    where + "counit pi(boxplus(f,g)) <= (f,g)");
          }
      }
    for (const auto& p : all_subsets(calc.truth({}))) {
      r.check(calc.leq({}, p, calc.truth({})) == Verdict::yes, where + "p <= truth");
    }
  }
}

void suite_theory_functor(std::uint64_t seed, LawReport& r) {
  const auto th = parse_theory("theory Free sort X sort Y rel P : X X rel Q : X rel R : X Y");
  TheoryOps ops{&th, Sort{"X"}, {}};
  Rng rng(seed);
  for (int i = 0; i < 50; ++i) ops.samples.emplace_back(random_context(rng, th.sorts, 2), rng());
  wiring_laws(ops, r);
}

std::vector<SynObject<TupleSet>> prd_objects(const PrdCalculus& calc, const std::vector<Context>& ctxs) {
  std::vector<SynObject<TupleSet>> out;
  for (const auto& c : ctxs) {
    for (auto& p : all_subsets(calc.truth(c))) out.push_back({c, std::move(p)});
  }
  return out;
}

std::vector<SynMorphism<TupleSet>> prd_homs(const PrdCalculus& calc, const SynObject<TupleSet>& a,
                                            const SynObject<TupleSet>& b) {
  std::vector<SynMorphism<TupleSet>> out;
  for (auto& theta : all_subsets(calc.boxplus(a.context, a.pred, b.context, b.pred))) {
    out.push_back(syn_morphism(calc, a, b, std::move(theta)));
  }
  return out;
}

void suite_syn_prd(std::size_t scale, LawReport& r) {
  const Sort x{"X"};
  using M = SynMorphism<TupleSet>;
  for (std::size_t n = 0; n <= scale; ++n) {
    PrdCalculus calc({{x, n}});
    const auto where = "|X|=" + std::to_string(n) + " ";
    const auto objs = prd_objects(calc, {{}, {x}});
    auto same = [&](const M& f, const M& g) {
      return calc.equal(concat(f.src.context, f.dst.context), f.theta, g.theta) == Verdict::yes;
    };
    auto below = [&](const M& f, const M& g) {
      return calc.leq(concat(f.src.context, f.dst.context), f.theta, g.theta) == Verdict::yes;
    };
    std::map<std::pair<std::size_t, std::size_t>, std::vector<M>> homs;
    for (std::size_t i = 0; i < objs.size(); ++i)
      for (std::size_t j = 0; j < objs.size(); ++j) homs[{i, j}] = prd_homs(calc, objs[i], objs[j]);

    for (std::size_t i = 0; i < objs.size(); ++i) {
      const auto id = syn_identity(calc, objs[i]);
      for (std::size_t j = 0; j < objs.size(); ++j) {
        for (const auto& f : homs[{i, j}]) {
          r.check(same(syn_compose(calc, id, f), f), where + "left unit");
          r.check(same(syn_compose(calc, f, syn_identity(calc, objs[j])), f), where + "right unit");
        }
      }
    }
    for (std::size_t i = 0; i < objs.size(); ++i)
      for (std::size_t j = 0; j < objs.size(); ++j)
        for (std::size_t k = 0; k < objs.size(); ++k)
          for (std::size_t l = 0; l < objs.size(); ++l)
            for (const auto& f : homs[{i, j}])
              for (const auto& g : homs[{j, k}]) {
                const auto fg = syn_compose(calc, f, g);
                r.check(fg.certificate == Verdict::yes, where + "composite is certified");
                for (const auto& h : homs[{k, l}]) {
                  r.check(same(syn_compose(calc, fg, h), syn_compose(calc, f, syn_compose(calc, g, h))),
                          where + "associativity");
                }
              }

    for (const auto& o : objs) {
      const auto eps = syn_supply(calc, o, Gen::epsilon), eta = syn_supply(calc, o, Gen::eta);
      const auto del = syn_supply(calc, o, Gen::delta), mu = syn_supply(calc, o, Gen::mu);
      const auto id = syn_identity(calc, o);
      const auto oo = syn_tensor(calc, o, o);
      const auto id_oo = syn_identity(calc, oo);
      r.check(same(syn_compose(calc, del, mu), id), where + "special");
      r.check(below(id, syn_compose(calc, eps, eta)), where + "id <= eps;eta");
      r.check(below(syn_compose(calc, eta, eps), syn_identity(calc, SynObject<TupleSet>{{}, calc.truth({})})),
              where + "eta;eps <= id");
      r.check(below(syn_compose(calc, mu, del), id_oo), where + "mu;delta <= id");
      r.check(same(syn_compose(calc, syn_tensor(calc, del, id), syn_tensor(calc, id, mu)), syn_compose(calc, mu, del)),
              where + "frobenius");
      r.check(same(syn_compose(calc, del, syn_tensor(calc, eps, id)), id), where + "counit");
    }
  }
}

// Every meet table on {0..n-1} of a meet-semilattice with top, from all
// reflexive antisymmetric transitive orders having binary meets and a top.
std::vector<std::vector<std::vector<std::size_t>>> meet_semilattices(std::size_t n) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  const auto bits = n * n;
  for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
    auto le = [&](std::size_t a, std::size_t b) { return (mask >> (a * n + b) & 1) != 0; };
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      ok = le(a, a);
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (a != b && le(a, b) && le(b, a)) ok = false;
        for (std::size_t c = 0; c < n && ok; ++c) ok = !(le(a, b) && le(b, c)) || le(a, c);
      }
    }
    if (!ok) continue;
    std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n, n));
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) {
        for (std::size_t m = 0; m < n; ++m) {
          if (!le(m, a) || !le(m, b)) continue;
          bool greatest = true;
          for (std::size_t k = 0; k < n; ++k) greatest &= !(le(k, a) && le(k, b)) || le(k, m);
          if (greatest) meet[a][b] = m;
        }
        ok = meet[a][b] < n;
      }
    bool has_top = false;
    for (std::size_t t = 0; t < n && ok; ++t) {
      bool top = true;
      for (std::size_t a = 0; a < n; ++a) top &= le(a, t);
      has_top |= top;
    }
    if (ok && has_top) out.push_back(std::move(meet));
  }
  return out;
}

void suite_syn_semilattice(LawReport& r) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& table : meet_semilattices(n)) {
      SemilatticeCalculus calc(table);
      const auto where = "|L|=" + std::to_string(n) + " ";
      std::vector<SynObject<std::size_t>> objs;
      for (std::size_t l = 0; l < n; ++l) objs.push_back({{}, l});
      for (const auto& a : objs)
        for (const auto& b : objs) {
          // homs are exactly the down-set of a ∧ b
          for (std::size_t t = 0; t < n; ++t) {
            bool in_downset = calc.leq({}, t, calc.meet_of(a.pred, b.pred)) == Verdict::yes;
            bool admitted = true;
            try {
              syn_morphism(calc, a, b, t);
            } catch (const PreconditionError&) {
              admitted = false;
            }
            r.check(in_downset == admitted, where + "hom is the down-set of the meet");
          }
          r.check(syn_identity(calc, a).theta == a.pred, where + "identity is the top of its hom");
          for (const auto& c : objs)
            for (std::size_t s = 0; s < n; ++s)
              for (std::size_t t = 0; t < n; ++t) {
                if (calc.meet_of(s, calc.meet_of(a.pred, b.pred)) != s) continue;
                if (calc.meet_of(t, calc.meet_of(b.pred, c.pred)) != t) continue;
                auto f = syn_morphism(calc, a, b, s), g = syn_morphism(calc, b, c, t);
                r.check(syn_compose(calc, f, g).theta == calc.meet_of(s, t), where + "composition is meet");
              }
        }
    }
  }
}

// All functions X -> Y as theta graphs over full objects, against pointwise sets.
void suite_limits(std::size_t scale, LawReport& r) {
  const Sort x{"X"}, y{"Y"};
  for (std::size_t nx = 0; nx <= scale + 1; ++nx)
    for (std::size_t ny = 0; ny <= scale + 1; ++ny) {
      PrdCalculus calc({{x, nx}, {y, ny}});
      const SynObject<TupleSet> a{{x}, calc.truth({x})}, b{{y}, calc.truth({y})};
      std::vector<std::vector<std::size_t>> funcs;
      const auto count = power(ny, nx);
      for (std::size_t code = 0; code < count; ++code) {
        std::vector<std::size_t> f(nx);
        auto k = code;
        for (auto& v : f) {
          v = k % ny;
          k /= ny;
        }
        funcs.push_back(f);
      }
      auto graph = [&](const std::vector<std::size_t>& f) {
        TupleSet t;
        for (std::size_t i = 0; i < nx; ++i) t.insert({i, f[i]});
        return syn_morphism(calc, a, b, t);
      };
      const auto where = std::to_string(nx) + "->" + std::to_string(ny) + " ";
      for (const auto& f : funcs) {
        const auto hf = graph(f);
        TupleSet image;
        for (auto v : f) image.insert({v});
        r.check(graphical_limits(calc, hf, hf, LimitKind::image).pred == image, where + "image");
        for (const auto& g : funcs) {
          TupleSet agree;
          for (std::size_t i = 0; i < nx; ++i) {
            if (f[i] == g[i]) agree.insert({i});
          }
          r.check(graphical_limits(calc, hf, graph(g), LimitKind::equalizer).pred == agree, where + "equalizer");
        }
      }
    }
}

}  // namespace

std::vector<std::string> law_suites() {
  return {"wiring",         "pushout",  "rel-supply", "lax-hom",         "tabulation", "prd-ajax",
          "theory-functor", "syn-prd", "syn-semilattice", "limits"};
}

LawReport run_laws(const std::string& suite, std::size_t scale, std::uint64_t seed) {
  LawReport r;
  r.suite = suite;
  if (suite == "wiring") suite_wiring(scale, r);
  else if (suite == "pushout") suite_pushout(scale, r);
  else if (suite == "rel-supply") suite_rel_supply(scale, r);
  else if (suite == "lax-hom") suite_lax_hom(scale, seed, r);
  else if (suite == "tabulation") suite_tabulation(scale, seed, r);
  else if (suite == "prd-ajax") suite_prd_ajax(scale, r);
  else if (suite == "theory-functor") suite_theory_functor(seed, r);
  else if (suite == "syn-prd") suite_syn_prd(scale, r);
  else if (suite == "syn-semilattice") suite_syn_semilattice(r);
  else if (suite == "limits") suite_limits(scale, r);
  else throw Error("unknown law suite: " + suite);
  return r;
}

}  // namespace grl
