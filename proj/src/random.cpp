#include "grl/random.hpp"

#include <algorithm>
#include <map>

namespace grl {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Context random_context(Rng& rng, const std::vector<Sort>& sorts, std::size_t max_len) {
  Context c(uniform(rng, 0, max_len));
  for (auto& s : c) s = sorts[uniform(rng, 0, sorts.size() - 1)];
  return c;
}

Partition random_partition(Rng& rng, std::size_t n) {
  std::vector<std::size_t> labels;
  std::size_t blocks = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto b = uniform(rng, 0, blocks);
    if (b == blocks) ++blocks;
    labels.push_back(b);
  }
  return Partition::from_labels(labels);
}

TypedWiring random_wiring(Rng& rng, const std::vector<Context>& shells, const Context& out,
                          const std::vector<Sort>& sorts) {
  Context ports;
  for (const auto& s : shells) ports.insert(ports.end(), s.begin(), s.end());
  ports.insert(ports.end(), out.begin(), out.end());
  // Partition each sort's ports independently, then interleave.
  std::map<Sort, std::vector<std::size_t>> by_sort;
  for (std::size_t i = 0; i < ports.size(); ++i) by_sort[ports[i]].push_back(i);
  std::vector<std::size_t> labels(ports.size());
  std::size_t base = 0;
  for (const auto& [s, idx] : by_sort) {
    auto p = random_partition(rng, idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) labels[idx[k]] = base + p.block_of(k);
    base += p.block_count();
  }
  std::set<Sort> floating;
  for (const auto& s : sorts) {
    if (coin(rng, 0.3)) floating.insert(s);
  }
  return TypedWiring(shells, out, Partition::from_labels(labels), std::move(floating));
}

namespace {

Formula leaf(Rng& rng, const Theory& th, const Context& env) {
  std::vector<std::string> rels;
  for (const auto& [r, ar] : th.rels) {
    bool ok = true;
    for (const auto& s : ar) ok = ok && std::find(env.begin(), env.end(), s) != env.end();
    if (ok) rels.push_back(r);
  }
  auto pick_of = [&](const Sort& s) {
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i < env.size(); ++i) {
      if (env[i] == s) c.push_back(i);
    }
    return c[uniform(rng, 0, c.size() - 1)];
  };
  auto roll = uniform(rng, 0, 9);
  if (!rels.empty() && roll < 7) {
    const auto& r = rels[uniform(rng, 0, rels.size() - 1)];
    std::vector<std::size_t> args;
    for (const auto& s : th.arity(r)) args.push_back(pick_of(s));
    return Formula::atom(r, std::move(args));
  }
  if (!env.empty() && roll < 9) {
    auto a = uniform(rng, 0, env.size() - 1);
    return Formula::eq(a, pick_of(env[a]));
  }
  return Formula::truth();
}

Formula gen(Rng& rng, const Theory& th, Context& env, std::size_t budget) {
  if (budget == 0 || coin(rng, 0.3)) return leaf(rng, th, env);
  if (!th.sorts.empty() && coin(rng, 0.35)) {
    const auto& s = th.sorts[uniform(rng, 0, th.sorts.size() - 1)];
    env.push_back(s);
    auto body = gen(rng, th, env, budget - 1);
    env.pop_back();
    return Formula::exists(s, body);
  }
  auto left_budget = uniform(rng, 0, budget - 1);
  auto a = gen(rng, th, env, left_budget);
  auto b = gen(rng, th, env, budget - 1 - left_budget);
  return Formula::conj(a, b);
}

}  // namespace

Formula random_formula(Rng& rng, const Theory& th, const Context& ctx, std::size_t budget) {
  Context env(ctx);
  return gen(rng, th, env, budget);
}

}  // namespace grl
