#pragma once

// Concrete syntax for theories and formulas.
//
//   theory   := "theory" IDENT decl*
//   decl     := "sort" IDENT | "rel" IDENT ":" IDENT+
//             | "axiom" IDENT ":" ctx formula "|-" formula
//   ctx      := "[" [binding ("," binding)*] "]"
//   binding  := IDENT ":" IDENT
//   formula  := conjunct ("/\" formula)?
//   conjunct := "true" | IDENT "(" [IDENT ("," IDENT)*] ")" | IDENT "=" IDENT
//             | "exists" IDENT ":" IDENT "." formula | "(" formula ")"
//
// An exists body extends as far right as possible. Comments run from '#' to
// end of line. Errors are ParseError with 1-based line and column.

#include <string>
#include <vector>

#include "grl/formula.hpp"

namespace grl {

Theory parse_theory(const std::string& text);

struct ScopedFormula {
  Context context;
  std::vector<std::string> names;
  Formula formula;
};

// "[x:X,y:Y] formula"
ScopedFormula parse_scoped_formula(const Theory& th, const std::string& text);
// A bare formula over the given named context.
Formula parse_formula(const Theory& th, const Context& ctx, const std::vector<std::string>& names,
                      const std::string& text);

std::string to_source(const Theory& th);
std::string to_string(const ScopedFormula& f);

}  // namespace grl
