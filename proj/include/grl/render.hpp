#pragma once

// Graphviz output for wiring diagrams and terms.
//
// Shells are circles, out ports sit on one rank at the right. A block touching
// exactly two ports is drawn as a plain edge; any other block gets a dot. Each
// floating sort is an isolated dot. Output depends only on the input.

#include <string>

#include "grl/theory_terms.hpp"
#include "grl/typed_wiring.hpp"

namespace grl {

std::string render_dot(const TypedWiring& w);
// Shells are labelled with their predicates.
std::string render_dot(const FormulaTerm& t);

}  // namespace grl
