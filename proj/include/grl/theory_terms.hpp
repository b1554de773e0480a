#pragma once

// Graphical terms whose shells hold formulas of a theory.

#include "grl/formula.hpp"
#include "grl/term.hpp"

namespace grl {

using FormulaTerm = GraphicalTerm<Formula>;

// The regular formula a term displays: one existential per wiring block and
// per shell variable, the shell formulas on their variables, and equalities
// tying every port to its block. Returned in normal form.
Formula term_to_formula(const Theory& th, const FormulaTerm& t);
// The unsimplified displayed formula.
Formula term_to_formula_raw(const Theory& th, const FormulaTerm& t);

// One atomic shell per normal-form atom, wired by the merge partition.
FormulaTerm formula_to_term(const Theory& th, const Context& ctx, const Formula& phi);

}  // namespace grl
