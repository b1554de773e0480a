#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grl/error.hpp"
#include "grl/wiring.hpp"
#include "oracles.hpp"

using namespace grl;

namespace {

WMor blocks(std::size_t m, std::size_t n, std::vector<std::vector<std::size_t>> bs) {
  return WMor::from_blocks(m, n, Partition::from_blocks(m + n, bs));
}

const WMor eps = generator(Gen::epsilon);
const WMor del = generator(Gen::delta);
const WMor eta = generator(Gen::eta);
const WMor mu = generator(Gen::mu);
const WMor sig = generator(Gen::sigma);
const WMor id1 = identity_w(1);
const WMor id2 = identity_w(2);

}  // namespace

TEST_CASE("generators have the tabulated cospans") {
  CHECK(eps == blocks(1, 0, {{0}}));
  CHECK(del == blocks(1, 2, {{0, 1, 2}}));
  CHECK(eta == blocks(0, 1, {{0}}));
  CHECK(mu == blocks(2, 1, {{0, 1, 2}}));
  CHECK(sig == blocks(2, 2, {{0, 3}, {1, 2}}));
  CHECK(generator(Gen::identity, 0) == WMor::flag(false));
  CHECK(generator(Gen::delta_n, 3) == blocks(1, 3, {{0, 1, 2, 3}}));
  CHECK(generator(Gen::mu_n, 0) == blocks(0, 1, {{0}}));
  // cup is eta then delta, cap is mu then epsilon
  CHECK(generator(Gen::cup) == blocks(0, 2, {{0, 1}}));
  CHECK(generator(Gen::cap) == blocks(2, 0, {{0, 1}}));
}

TEST_CASE("canonicalize") {
  CHECK(canonicalize(Cospan{1, 0, 1, {0}, {}}) == eps);
  CHECK(canonicalize(Cospan{0, 0, 1, {}, {}}) == WMor::flag(true));
  CHECK(canonicalize(Cospan{0, 0, 0, {}, {}}) == WMor::flag(false));
  // Unhit apex elements are reflected away.
  CHECK(canonicalize(Cospan{2, 2, 2, {0, 0}, {0, 1}}) == blocks(2, 2, {{0, 1, 2}, {3}}));
  CHECK(canonicalize(Cospan{1, 1, 5, {3}, {3}}) == id1);
  CHECK_THROWS_AS(canonicalize(Cospan{1, 0, 1, {1}, {}}), ShapeError);
}

TEST_CASE("canonicalize is idempotent through to_cospan") {
  for (std::size_t m = 0; m <= 6; ++m) {
    for (std::size_t n = 0; m + n <= 6; ++n) {
      for (const auto& w : enum_homs(m, n)) {
        auto c = to_cospan(w);
        CHECK(c.well_formed());
        CHECK(canonicalize(c) == w);
      }
    }
  }
}

TEST_CASE("compose") {
  CHECK(compose(del, mu) == id1);
  CHECK(compose(eta, eps) == WMor::flag(true));
  CHECK(compose(WMor::flag(false), WMor::flag(false)) == WMor::flag(false));
  CHECK(compose(mu, del) == blocks(2, 2, {{0, 1, 2, 3}}));
  CHECK(compose(WMor::flag(true), eta) == eta);
  CHECK_THROWS_AS(compose(del, eps), ShapeError);
}

TEST_CASE("compose agrees with pushout on explicit cospans") {
  const auto pushout = [](const WMor& f, const WMor& g) {
    return canonicalize(compose_pushout(to_cospan(f), to_cospan(g)));
  };
  CHECK(pushout(mu, del) == blocks(2, 2, {{0, 1, 2, 3}}));
  CHECK(pushout(eps, eta) == compose(eps, eta));
  for (std::size_t m = 0; m <= 2; ++m)
    for (std::size_t n = 0; n <= 2; ++n)
      for (std::size_t p = 0; p <= 2; ++p)
        for (const auto& f : enum_homs(m, n))
          for (const auto& g : enum_homs(n, p)) CHECK(compose(f, g) == pushout(f, g));
}

TEST_CASE("tensor") {
  CHECK(tensor(eps, WMor::flag(false)) == eps);
  CHECK(tensor(eps, WMor::flag(true)) == eps);
  CHECK(tensor(WMor::flag(true), WMor::flag(true)) == WMor::flag(true));
  CHECK(tensor(WMor::flag(false), WMor::flag(true)) == WMor::flag(true));
  CHECK(tensor(id1, id1) == id2);
  CHECK(tensor(eps, eta) == blocks(1, 1, {{0}, {1}}));
  // omega + eta;epsilon = omega iff omega is not id_0
  for (std::size_t m = 0; m <= 2; ++m)
    for (std::size_t n = 0; n <= 2; ++n)
      for (const auto& w : enum_homs(m, n))
        CHECK((tensor(w, compose(eta, eps)) == w) == (w != WMor::flag(false)));
}

TEST_CASE("leq") {
  CHECK(leq(id1, compose(eps, eta)));
  CHECK(leq(WMor::flag(true), WMor::flag(false)));
  CHECK_FALSE(leq(compose(eps, eta), id1));
  CHECK_FALSE(leq(WMor::flag(false), WMor::flag(true)));
  CHECK_THROWS_AS(leq(id1, id2), ShapeError);
}

TEST_CASE("leq matches brute-force apex maps") {
  for (std::size_t m = 0; m <= 2; ++m)
    for (std::size_t n = 0; m + n <= 3; ++n)
      for (const auto& f : enum_homs(m, n))
        for (const auto& g : enum_homs(m, n))
          CHECK(leq(f, g) == oracle::apex_map_exists(to_cospan(g), to_cospan(f)));
}

TEST_CASE("enum_homs sizes") {
  CHECK(enum_homs(0, 0).size() == 2);
  CHECK(enum_homs(1, 1).size() == 2);
  CHECK(enum_homs(2, 1).size() == 5);
  for (std::size_t k = 1; k <= 5; ++k) CHECK(enum_homs(k, 0).size() == oracle::bell(k));
  CHECK_THROWS_AS(enum_homs(5, 4), LimitError);
  auto homs = enum_homs(2, 2);
  std::sort(homs.begin(), homs.end(), [](const WMor& a, const WMor& b) {
    return a.blocks() < b.blocks();
  });
  CHECK(std::adjacent_find(homs.begin(), homs.end()) == homs.end());
}

TEST_CASE("category and order laws hold exhaustively") {
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      for (const auto& f : enum_homs(a, b)) {
        CHECK(compose(identity_w(a), f) == f);
        CHECK(compose(f, identity_w(b)) == f);
        CHECK(leq(f, f));
      }
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b)
      for (std::size_t c = 0; c <= 2; ++c)
        for (std::size_t d = 0; d <= 2; ++d)
          for (const auto& f : enum_homs(a, b))
            for (const auto& g : enum_homs(b, c))
              for (const auto& h : enum_homs(c, d))
                CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b) {
      auto homs = enum_homs(a, b);
      for (const auto& f : homs)
        for (const auto& g : homs) {
          if (leq(f, g) && leq(g, f)) CHECK(f == g);
          for (const auto& h : homs)
            if (leq(f, g) && leq(g, h)) CHECK(leq(f, h));
        }
    }
}

TEST_CASE("composition and tensor are monotone") {
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b)
      for (std::size_t c = 0; c <= 1; ++c) {
        auto fs = enum_homs(a, b);
        auto gs = enum_homs(b, c);
        for (const auto& f : fs)
          for (const auto& f2 : fs) {
            if (!leq(f, f2)) continue;
            for (const auto& g : gs)
              for (const auto& g2 : gs) {
                if (!leq(g, g2)) continue;
                CHECK(leq(compose(f, g), compose(f2, g2)));
                CHECK(leq(tensor(f, g), tensor(f2, g2)));
              }
          }
      }
}

TEST_CASE("special commutative Frobenius equations and adjunction inequalities") {
  // (co)commutativity
  CHECK(compose(del, sig) == del);
  CHECK(compose(sig, mu) == mu);
  // (co)unitality
  CHECK(compose(del, tensor(eps, id1)) == id1);
  CHECK(compose(del, tensor(id1, eps)) == id1);
  CHECK(compose(tensor(eta, id1), mu) == id1);
  CHECK(compose(tensor(id1, eta), mu) == id1);
  // (co)associativity
  CHECK(compose(del, tensor(del, id1)) == compose(del, tensor(id1, del)));
  CHECK(compose(tensor(mu, id1), mu) == compose(tensor(id1, mu), mu));
  // special and Frobenius
  CHECK(compose(del, mu) == id1);
  CHECK(compose(tensor(del, id1), tensor(id1, mu)) == compose(mu, del));
  CHECK(compose(tensor(id1, del), tensor(mu, id1)) == compose(mu, del));
  // adjunction inequalities
  CHECK(leq(id1, compose(eps, eta)));
  CHECK(leq(compose(eta, eps), WMor::flag(false)));
  CHECK(leq(compose(mu, del), id2));
  CHECK_FALSE(leq(id2, compose(mu, del)));
  // the special law's surprising half
  CHECK(leq(compose(del, mu), id1));
}

TEST_CASE("yanking") {
  const auto cup = generator(Gen::cup);
  const auto cap = generator(Gen::cap);
  CHECK(compose(tensor(cup, id1), tensor(id1, cap)) == id1);
  CHECK(compose(tensor(id1, cup), tensor(cap, id1)) == id1);
}

TEST_CASE("symmetry") {
  CHECK(compose(sig, sig) == id2);
  CHECK(compose(symmetry_w(1, 2), symmetry_w(2, 1)) == identity_w(3));
  CHECK(symmetry_w(0, 2) == id2);
}
