#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grl/dsl.hpp"
#include "grl/entail.hpp"
#include "grl/error.hpp"
#include "grl/syn.hpp"

using namespace grl;

namespace {

const Sort X{"X"};
using PObj = SynObject<TupleSet>;

TupleSet graph_of(const std::vector<std::size_t>& f) {
  TupleSet t;
  for (std::size_t i = 0; i < f.size(); ++i) t.insert({i, f[i]});
  return t;
}

}  // namespace

TEST_CASE("identities in Prd(Rel)") {
  PrdCalculus calc({{X, 3}});
  const PObj full{{X}, calc.truth({X})};
  CHECK(syn_identity(calc, full).theta == graph_of({0, 1, 2}));
  const PObj part{{X}, {{0}, {2}}};
  auto id = syn_identity(calc, part);
  CHECK(id.theta == TupleSet{{0, 0}, {2, 2}});
  CHECK(id.certificate == Verdict::yes);
  CHECK_FALSE(id.unchecked);
  const PObj unit{{}, calc.truth({})};
  CHECK(syn_identity(calc, unit).theta == TupleSet{{}});
}

TEST_CASE("the hom condition is enforced") {
  PrdCalculus calc({{X, 2}});
  const PObj a{{X}, {{0}}}, b{{X}, calc.truth({X})};
  CHECK_NOTHROW(syn_morphism(calc, a, b, TupleSet{{0, 1}}));
  CHECK_THROWS_AS(syn_morphism(calc, a, b, TupleSet{{1, 1}}), PreconditionError);
}

TEST_CASE("composition of function graphs") {
  PrdCalculus calc({{X, 3}});
  const PObj o{{X}, calc.truth({X})};
  std::vector<std::size_t> f{1, 2, 2}, g{0, 0, 1};
  auto fg = syn_compose(calc, syn_morphism(calc, o, o, graph_of(f)), syn_morphism(calc, o, o, graph_of(g)));
  CHECK(fg.theta == graph_of({g[f[0]], g[f[1]], g[f[2]]}));
  auto h = syn_morphism(calc, o, o, TupleSet{{0, 1}, {0, 2}, {2, 0}});
  CHECK(syn_compose(calc, h, syn_identity(calc, o)).theta == h.theta);
  CHECK(syn_compose(calc, syn_identity(calc, o), h).theta == h.theta);
  const PObj two{{X, X}, calc.truth({X, X})};
  CHECK_THROWS_AS(syn_compose(calc, h, syn_identity(calc, two)), ShapeError);
}

TEST_CASE("tensor of morphisms") {
  PrdCalculus calc({{X, 2}});
  const PObj o{{X}, calc.truth({X})};
  auto swap = syn_morphism(calc, o, o, graph_of({1, 0}));
  auto id = syn_identity(calc, o);
  auto t = syn_tensor(calc, swap, id);
  CHECK(t.src.context == Context{X, X});
  CHECK(t.theta == TupleSet{{0, 0, 1, 0}, {0, 1, 1, 1}, {1, 0, 0, 0}, {1, 1, 0, 1}});
}

TEST_CASE("supplied morphisms") {
  PrdCalculus calc({{X, 2}});
  const PObj o{{X}, {{1}}};
  CHECK(syn_supply(calc, o, Gen::epsilon).theta == TupleSet{{1}});
  CHECK(syn_supply(calc, o, Gen::eta).theta == TupleSet{{1}});
  auto del = syn_supply(calc, o, Gen::delta);
  CHECK(del.dst.context == Context{X, X});
  CHECK(del.theta == TupleSet{{1, 1, 1}});
  CHECK(syn_supply(calc, o, Gen::mu).theta == TupleSet{{1, 1, 1}});
  CHECK_THROWS_AS(syn_supply(calc, o, Gen::sigma), ShapeError);
}

TEST_CASE("maps, equalizers and images") {
  PrdCalculus calc({{X, 3}});
  const PObj o{{X}, calc.truth({X})};
  auto f = syn_morphism(calc, o, o, graph_of({0, 2, 2}));
  auto g = syn_morphism(calc, o, o, graph_of({0, 1, 2}));
  CHECK(syn_is_map(calc, f) == Verdict::yes);
  CHECK(syn_is_map(calc, syn_morphism(calc, o, o, TupleSet{{0, 0}, {0, 1}, {1, 1}, {2, 2}})) == Verdict::no);
  CHECK(syn_is_map(calc, syn_morphism(calc, o, o, TupleSet{{0, 0}})) == Verdict::no);
  CHECK(graphical_limits(calc, f, g, LimitKind::equalizer).pred == TupleSet{{0}, {2}});
  CHECK(graphical_limits(calc, f, f, LimitKind::image).pred == TupleSet{{0}, {2}});
  auto bad = syn_morphism(calc, o, o, TupleSet{{0, 0}});
  CHECK_THROWS_AS(graphical_limits(calc, bad, g, LimitKind::equalizer), PreconditionError);
}

TEST_CASE("a semilattice as a one-object calculus") {
  // 0 = top, 1 and 2 incomparable, 3 = bottom
  SemilatticeCalculus calc({{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}});
  CHECK(calc.top() == 0);
  const SynObject<std::size_t> a{{X}, 1}, b{{X}, 2};
  CHECK(syn_morphism(calc, a, b, std::size_t{3}).theta == 3);
  CHECK_THROWS_AS(syn_morphism(calc, a, b, std::size_t{1}), PreconditionError);
  CHECK(syn_identity(calc, a).theta == 1);
  auto f = syn_morphism(calc, a, a, std::size_t{1}), g = syn_morphism(calc, a, b, std::size_t{3});
  CHECK(syn_compose(calc, f, g).theta == 3);
  CHECK_THROWS(SemilatticeCalculus({{0, 1}, {0, 1}}));
}

TEST_CASE("syntactic category of a theory") {
  auto th = parse_theory(
      "theory Preorder sort X rel P : X X rel Q : X\n"
      "axiom refl : [x:X] true |- P(x,x)\n"
      "axiom trans : [x:X,z:X] exists y:X. P(x,y) /\\ P(y,z) |- P(x,z)\n");
  TheoryCalculus calc(th);
  auto f = [&](const Context& ctx, const std::string& s) { return parse_formula(th, ctx, default_names(ctx.size()), s); };
  const SynObject<Formula> q{{X}, f({X}, "Q(x0)")}, top{{X}, Formula::truth()};

  auto id = syn_identity(calc, q);
  CHECK(calc.equal({X, X}, id.theta, f({X, X}, "Q(x0) /\\ x0=x1")) == Verdict::yes);

  // P is idempotent under composition, by reflexivity and transitivity
  auto p = syn_morphism(calc, top, top, f({X, X}, "P(x0,x1)"));
  auto pp = syn_compose(calc, p, p);
  CHECK(calc.equal({X, X}, pp.theta, p.theta) == Verdict::yes);
  CHECK_FALSE(entails_free(th, {X, X}, p.theta, pp.theta));

  CHECK_THROWS_AS(syn_morphism(calc, q, top, f({X, X}, "P(x0,x1)")), PreconditionError);
  CHECK_NOTHROW(syn_morphism(calc, q, top, f({X, X}, "Q(x0) /\\ P(x0,x1)")));
}

TEST_CASE("undecided hom conditions") {
  auto th = parse_theory("theory Succ sort X rel S : X X axiom total : [x:X] true |- exists y:X. S(x,y)");
  TheoryCalculus calc(th, ChaseBudget{3, 1, 2000});
  const SynObject<Formula> a{{X}, Formula::truth()};
  auto loop = parse_formula(th, {X}, {"x"}, "S(x,x)");
  const SynObject<Formula> b{{X}, loop};
  auto theta = parse_formula(th, {X, X}, {"x", "y"}, "x=y");
  CHECK_THROWS_AS(syn_morphism(calc, a, b, theta), PreconditionError);
  auto m = syn_morphism(calc, a, b, theta, true);
  CHECK(m.unchecked);
  CHECK(m.certificate == Verdict::unknown);
}
