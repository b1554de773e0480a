#pragma once

// JSON forms of wirings, terms and models.
//
//   wiring: {"shells":[["X","X"]],"out":["X"],
//            "blocks":[[{"s":0,"p":0},{"o":0}],[{"s":0,"p":1}]],"floating":["Z"]}
//   term:   a wiring plus "preds":["[x:X,y:X] P(x,y)"], one per shell
//   model:  {"carriers":{"X":["a","b"]},"rels":{"P":[["a","b"]]}}
//
// Blocks are written in order of least port, shell ports before out ports.
// Malformed input raises ShapeError (or SortError / ParseError from below).

#include <string>

#include "grl/formula.hpp"
#include "grl/relsem.hpp"
#include "grl/theory_terms.hpp"
#include "grl/typed_wiring.hpp"
#include "json.hpp"

namespace grl {

using Json = nlohmann::ordered_json;

Json wiring_to_json(const TypedWiring& w);
// Every port must appear in exactly one block.
TypedWiring wiring_from_json(const Json& j);
// Tolerant reading: unlisted ports become singletons and overlapping blocks merge.
TypedWiring wiring_from_json_loose(const Json& j);

Json term_to_json(const FormulaTerm& t);
FormulaTerm term_from_json(const Theory& th, const Json& j);

Json model_to_json(const Theory& th, const Model& m);
Model model_from_json(const Theory& th, const Json& j);

// Tuples of element names.
Json tuples_to_json(const Model& m, const Context& ctx, const TupleSet& ts);

}  // namespace grl
