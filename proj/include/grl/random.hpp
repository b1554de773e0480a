#pragma once

// Seeded generators for property suites and `laws run`.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "grl/context.hpp"
#include "grl/formula.hpp"
#include "grl/partition.hpp"
#include "grl/typed_wiring.hpp"

namespace grl {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive
bool coin(Rng& rng, double p = 0.5);

Context random_context(Rng& rng, const std::vector<Sort>& sorts, std::size_t max_len);
Partition random_partition(Rng& rng, std::size_t n);
// Random sort-uniform wiring with the given boundary; floating dots are drawn
// from `sorts`.
TypedWiring random_wiring(Rng& rng, const std::vector<Context>& shells, const Context& out,
                          const std::vector<Sort>& sorts);

// Random well-sorted formula in ctx with at most `budget` connectives, mixing
// nested exists, atoms and equalities.
Formula random_formula(Rng& rng, const Theory& th, const Context& ctx, std::size_t budget);

}  // namespace grl
