#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grl/error.hpp"
#include "grl/laws.hpp"

using namespace grl;

TEST_CASE("every law suite passes at the default scale") {
  for (const auto& suite : law_suites()) {
    auto r = run_laws(suite, 2, 7);
    INFO(suite);
    for (const auto& f : r.failures) INFO(f);
    CHECK(r.checked > 0);
    CHECK(r.ok());
    if (!r.ok()) MESSAGE(suite << ": " << r.failures.front());
  }
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_laws("nope", 2, 1), Error); }
