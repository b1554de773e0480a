#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grl/dsl.hpp"
#include "grl/error.hpp"
#include "grl/random.hpp"
#include "grl/relsem.hpp"
#include "grl/theory_terms.hpp"
#include "oracles.hpp"

using namespace grl;

namespace {

const Sort X{"X"}, Y{"Y"};

using Pairs = std::set<std::pair<std::size_t, std::size_t>>;

// Digits of code in base c, most significant first.
std::vector<std::size_t> digits(std::size_t code, std::size_t c, std::size_t len) {
  std::vector<std::size_t> d(len);
  for (std::size_t i = len; i-- > 0;) {
    d[i] = code % c;
    code /= c;
  }
  return d;
}

// Image of theta under a one-shell wiring, by trying every boundary tuple and
// every shell tuple and comparing ports pairwise.
TupleSet brute_apply(const TypedWiring& w, const Carriers& c, const TupleSet& theta) {
  TupleSet out;
  for (const auto& s : w.floating()) {
    if (c.at(s) == 0) return out;
  }
  for (const auto& o : all_tuples(w.out(), c)) {
    bool found = false;
    for (const auto& t : theta) {
      std::vector<std::size_t> ports(t);
      ports.insert(ports.end(), o.begin(), o.end());
      bool ok = true;
      for (std::size_t i = 0; i < ports.size() && ok; ++i)
        for (std::size_t j = 0; j < ports.size() && ok; ++j)
          if (w.blocks().same_block(i, j)) ok = ports[i] == ports[j];
      if (ok) found = true;
    }
    if (found) out.insert(o);
  }
  return out;
}

TupleSet random_subset(Rng& rng, const TupleSet& all) {
  TupleSet s;
  for (const auto& t : all) {
    if (coin(rng)) s.insert(t);
  }
  return s;
}

Model to_model(const oracle::OModel& om) {
  Model m;
  for (const auto& [s, n] : om.size) {
    m.carriers[s];
    for (std::size_t i = 0; i < n; ++i) m.carriers[s].push_back(s.name + std::to_string(i));
  }
  for (const auto& [r, ts] : om.rel) m.rels[r] = TupleSet(ts.begin(), ts.end());
  return m;
}

Theory sig() { return parse_theory("theory T sort X sort Y rel P : X X rel Q : X rel R : X Y"); }

}  // namespace

TEST_CASE("finite relations") {
  FinRel f(2, 3, Pairs{{0, 1}, {1, 1}, {1, 2}});
  CHECK(rel_dagger(f) == FinRel(3, 2, Pairs{{1, 0}, {1, 1}, {2, 1}}));
  CHECK(rel_compose(f, rel_dagger(f)) == FinRel(2, 2, Pairs{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  CHECK(rel_compose(rel_identity(2), f) == f);
  CHECK(rel_tensor(rel_identity(2), rel_identity(3)) == rel_identity(6));
  // (a,c) -> (b,d) encodes as a*|c| + c
  CHECK(rel_tensor(FinRel(2, 1, Pairs{{1, 0}}), FinRel(1, 2, Pairs{{0, 1}})) == FinRel(2, 2, Pairs{{1, 1}}));
  CHECK(rel_leq(FinRel(2, 3, Pairs{{0, 1}}), f));
  CHECK_FALSE(rel_leq(f, FinRel(2, 3, Pairs{{0, 1}})));
  CHECK(rel_graph(3, 2, {1, 0, 1}) == FinRel(3, 2, Pairs{{0, 1}, {1, 0}, {2, 1}}));
  CHECK_THROWS_AS(FinRel(1, 1, Pairs{{1, 0}}), ShapeError);
  CHECK_THROWS_AS(rel_compose(f, f), ShapeError);
}

TEST_CASE("left adjoints are exactly function graphs") {
  for (std::size_t d = 0; d <= 3; ++d)
    for (std::size_t c = 0; c <= 3; ++c)
      for (std::size_t mask = 0; mask < (std::size_t{1} << (d * c)); ++mask) {
        Pairs p;
        std::vector<std::size_t> out_degree(d, 0);
        for (std::size_t i = 0; i < d * c; ++i) {
          if (mask >> i & 1) {
            p.emplace(i / c, i % c);
            ++out_degree[i / c];
          }
        }
        bool function = std::all_of(out_degree.begin(), out_degree.end(), [](auto k) { return k == 1; });
        FinRel f(d, c, p);
        CHECK(is_function_graph(f) == function);
        CHECK(is_left_adjoint(f) == function);
      }
}

TEST_CASE("supply relations") {
  CHECK(rel_supply(Gen::delta, 2) == FinRel(2, 4, Pairs{{0, 0}, {1, 3}}));
  CHECK(rel_supply(Gen::mu, 2) == FinRel(4, 2, Pairs{{0, 0}, {3, 1}}));
  CHECK(rel_supply(Gen::epsilon, 3) == FinRel(3, 1, Pairs{{0, 0}, {1, 0}, {2, 0}}));
  CHECK(rel_supply(Gen::eta, 0) == FinRel(1, 0));
  CHECK(rel_supply(Gen::sigma, 2) == FinRel(4, 4, Pairs{{0, 0}, {1, 2}, {2, 1}, {3, 3}}));
  CHECK(rel_supply(Gen::delta_n, 2, 0) == FinRel(2, 1, Pairs{{0, 0}, {1, 0}}));
  CHECK(rel_supply(Gen::identity, 2, 2) == rel_identity(4));
  // the empty set makes eta;epsilon the empty relation on the unit
  CHECK(rel_compose(rel_supply(Gen::eta, 0), rel_supply(Gen::epsilon, 0)) == FinRel(1, 1));
  CHECK(rel_compose(rel_supply(Gen::eta, 2), rel_supply(Gen::epsilon, 2)) == rel_identity(1));
}

TEST_CASE("rel_of_wiring relates tuples agreeing on each block") {
  for (std::size_t c = 0; c <= 2; ++c)
    for (std::size_t m = 0; m <= 2; ++m)
      for (std::size_t n = 0; m + n <= 4; ++n)
        for (const auto& w : enum_homs(m, n)) {
          auto r = rel_of_wiring(w, c);
          if (w.is_flag()) {
            CHECK(r == (w.inhabited() && c == 0 ? FinRel(1, 1) : rel_identity(1)));
            continue;
          }
          Pairs expect;
          for (std::size_t x = 0; x < power(c, m); ++x)
            for (std::size_t y = 0; y < power(c, n); ++y) {
              auto ports = digits(x, c, m);
              auto ys = digits(y, c, n);
              ports.insert(ports.end(), ys.begin(), ys.end());
              bool ok = true;
              for (std::size_t i = 0; i < m + n; ++i)
                for (std::size_t j = 0; j < m + n; ++j)
                  if (w.blocks().same_block(i, j)) ok = ok && ports[i] == ports[j];
              if (ok) expect.emplace(x, y);
            }
          CHECK(r == FinRel(power(c, m), power(c, n), expect));
        }
}

TEST_CASE("tabulation") {
  FinRel f(2, 2, Pairs{{0, 1}, {1, 1}});
  auto t = tabulate(f);
  CHECK(t.tab == 2);
  CHECK(rel_compose(t.right, t.left) == f);
  CHECK(is_function_graph(t.left));
  CHECK(is_function_graph(rel_dagger(t.right)));
  auto hat = tabulation_hat(t);
  CHECK(hat.dom() == 2);
  CHECK(hat.cod() == 4);
  CHECK(rel_compose(hat, rel_dagger(hat)) == rel_identity(2));
  CHECK(tabulate(FinRel(3, 2)).tab == 0);
}

TEST_CASE("tuple encoding") {
  Carriers c{{X, 2}, {Y, 3}};
  const Context ctx{X, Y, X};
  CHECK(product_size(ctx, c) == 12);
  CHECK(encode({1, 2, 0}, ctx, c) == 1 * 6 + 2 * 2 + 0);
  for (std::size_t k = 0; k < 12; ++k) CHECK(encode(decode(k, ctx, c), ctx, c) == k);
  CHECK(all_tuples(ctx, c).size() == 12);
  CHECK(all_tuples({}, c) == TupleSet{Tuple{}});
  CHECK_THROWS_AS(encode({2, 0, 0}, ctx, c), ShapeError);
  CHECK_THROWS_AS(product_size({Sort{"Z"}}, c), SortError);
}

TEST_CASE("prd_apply matches brute-force images") {
  Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    Carriers c{{X, uniform(rng, 0, 2)}, {Y, uniform(rng, 0, 2)}};
    auto shell = random_context(rng, {X, Y}, 3);
    auto out = random_context(rng, {X, Y}, 3);
    auto w = random_wiring(rng, {shell}, out, {X, Y});
    auto theta = random_subset(rng, all_tuples(shell, c));
    CHECK(prd_apply(w, c, theta) == brute_apply(w, c, theta));
  }
  Carriers c{{X, 2}};
  // delta copies, epsilon projects, floating dots need an inhabitant
  CHECK(prd_apply(supply_gen(Gen::delta, {X}), c, {{1}}) == TupleSet{{1, 1}});
  CHECK(prd_apply(supply_gen(Gen::epsilon, {X}), c, {{1}}) == TupleSet{Tuple{}});
  CHECK(prd_apply(supply_gen(Gen::eta, {X}), c, {Tuple{}}) == TupleSet{{0}, {1}});
  CHECK(prd_apply(lift(WMor::flag(true), X), Carriers{{X, 0}}, {Tuple{}}).empty());
}

TEST_CASE("the predicate calculus") {
  PrdCalculus calc({{X, 2}});
  CHECK(calc.truth({X}) == TupleSet{{0}, {1}});
  CHECK(calc.truth({}) == TupleSet{Tuple{}});
  CHECK(calc.boxplus({X}, {{0}}, {X}, {{1}, {0}}) == TupleSet{{0, 0}, {0, 1}});
  auto [a, b] = calc.lambda_split({X}, {X}, {{0, 1}, {1, 1}});
  CHECK(a == TupleSet{{0}, {1}});
  CHECK(b == TupleSet{{1}});
  CHECK(calc.meet({X}, {{0}}, {{0}, {1}}) == TupleSet{{0}});
  CHECK(calc.show({X, X}, {{0, 1}}) == "{(0,1)}");
}

TEST_CASE("folding kites agrees with direct evaluation") {
  Rng rng(22);
  for (int t = 0; t < 200; ++t) {
    Carriers c{{X, uniform(rng, 1, 2)}, {Y, uniform(rng, 0, 2)}};
    std::vector<Kite> kites;
    std::vector<Context> shells;
    for (std::size_t k = uniform(rng, 0, 3); k > 0; --k) {
      Kite kite;
      kite.dom = random_context(rng, {X, Y}, 2);
      kite.cod = random_context(rng, {X, Y}, 1);
      Pairs p;
      for (std::size_t a = 0; a < product_size(kite.dom, c); ++a)
        for (std::size_t b = 0; b < product_size(kite.cod, c); ++b)
          if (coin(rng, 0.4)) p.emplace(a, b);
      kite.rel = FinRel(product_size(kite.dom, c), product_size(kite.cod, c), p);
      shells.push_back(concat(kite.dom, kite.cod));
      kites.push_back(std::move(kite));
    }
    auto out = random_context(rng, {X, Y}, 3);
    KiteDiagram d{c, kites, random_wiring(rng, shells, out, {X, Y})};
    PrdCalculus calc(c);
    CHECK(represent(calc, fold_kites(d)) == evaluate_kites(d));
  }
}

TEST_CASE("model evaluation") {
  auto th = sig();
  SUBCASE("agrees with Tarski semantics") {
    Rng rng(23);
    for (int t = 0; t < 150; ++t) {
      oracle::OModel om;
      om.size[X] = uniform(rng, 0, 2);
      om.size[Y] = uniform(rng, 0, 2);
      for (const auto& [r, ar] : th.rels) {
        for (const auto& tup : oracle::tuples(om, ar)) {
          if (coin(rng, 0.4)) om.rel[r].insert(tup);
        }
      }
      auto ctx = random_context(rng, {X, Y}, 3);
      auto phi = random_formula(rng, th, ctx, 5);
      auto expect = oracle::extension(om, ctx, phi);
      CHECK(model_eval(th, to_model(om), ctx, phi) == TupleSet(expect.begin(), expect.end()));
    }
  }
  SUBCASE("commutes with the wiring action") {
    Rng rng(24);
    for (int t = 0; t < 150; ++t) {
      oracle::OModel om;
      om.size[X] = uniform(rng, 0, 2);
      om.size[Y] = uniform(rng, 0, 2);
      for (const auto& [r, ar] : th.rels) {
        for (const auto& tup : oracle::tuples(om, ar)) {
          if (coin(rng, 0.4)) om.rel[r].insert(tup);
        }
      }
      auto m = to_model(om);
      auto shell = random_context(rng, {X, Y}, 3);
      auto out = random_context(rng, {X, Y}, 3);
      auto w = random_wiring(rng, {shell}, out, {X, Y});
      auto phi = random_formula(rng, th, shell, 4);
      CHECK(model_eval(th, m, out, act_wiring(th, w, phi)) == prd_apply(w, m.sizes(), model_eval(th, m, shell, phi)));
    }
  }
  SUBCASE("of terms") {
    Model m{{{X, {"a", "b"}}, {Y, {}}}, {{"P", {{0, 1}}}, {"Q", {}}, {"R", {}}}};
    auto t = formula_to_term(th, {X, X}, parse_scoped_formula(th, "[x:X,y:X] P(x,y)").formula);
    CHECK(model_eval(th, m, t) == TupleSet{{0, 1}});
    CHECK(model_eval(th, m, {}, Formula::truth()) == TupleSet{Tuple{}});
    CHECK(model_eval(th, m, {}, parse_formula(th, {}, {}, "exists y:Y. true")).empty());
  }
  SUBCASE("ill-formed models") {
    Model missing{{{X, {"a"}}}, {}};
    CHECK_THROWS_AS(check_model(th, missing), SortError);
    Model range{{{X, {"a"}}, {Y, {}}}, {{"Q", {{1}}}}};
    CHECK_THROWS_AS(check_model(th, range), SortError);
  }
}

TEST_CASE("axioms of a preorder") {
  auto th = parse_theory(
      "theory Preorder sort X rel P : X X\n"
      "axiom refl : [x:X] true |- P(x,x)\n"
      "axiom trans : [x:X,z:X] exists y:X. P(x,y) /\\ P(y,z) |- P(x,z)\n");
  for (const auto& om : oracle::all_models(th, 3)) {
    const auto n = om.size.at(X);
    const auto& p = om.rel.count("P") ? om.rel.at("P") : std::set<std::vector<std::size_t>>{};
    bool preorder = true;
    for (std::size_t a = 0; a < n; ++a) {
      preorder &= p.contains({a, a});
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (p.contains({a, b}) && p.contains({b, c})) preorder &= p.contains({a, c});
    }
    auto m = to_model(om);
    CHECK(check_axioms(th, m) == preorder);
    if (!preorder) CHECK(violated_axiom(th, m).has_value());
  }
}
