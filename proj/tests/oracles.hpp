#pragma once

// Test-only oracles, kept independent of the library's algorithms.

#include <cstddef>
#include <stdexcept>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grl/formula.hpp"
#include "grl/wiring.hpp"

namespace oracle {

// Set partitions of {0..n-1} by recursive insertion: each element either joins
// an existing block or opens a new one.
inline std::vector<std::vector<std::set<std::size_t>>> set_partitions(std::size_t n) {
  std::vector<std::vector<std::set<std::size_t>>> out;
  std::vector<std::set<std::size_t>> current;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == n) {
      out.push_back(current);
      return;
    }
    for (std::size_t b = 0; b < current.size(); ++b) {
      current[b].insert(k);
      go(k + 1);
      current[b].erase(k);
    }
    current.push_back({k});
    go(k + 1);
    current.pop_back();
  };
  go(0);
  return out;
}

inline std::size_t bell(std::size_t n) { return set_partitions(n).size(); }

// A 2-cell f <= g in the co-dual of cospans: some apex map from g to f
// commuting with both legs. Brute force over all apex maps.
inline bool apex_map_exists(const grl::Cospan& g, const grl::Cospan& f) {
  std::vector<std::size_t> h(g.apex, 0);
  if (g.apex > 0 && f.apex == 0) return false;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < g.dom && ok; ++i) ok = h[g.left[i]] == f.left[i];
    for (std::size_t j = 0; j < g.cod && ok; ++j) ok = h[g.right[j]] == f.right[j];
    if (ok) return true;
    std::size_t k = 0;
    while (k < g.apex && ++h[k] == f.apex) h[k++] = 0;
    if (k == g.apex) return false;
  }
}

// A finite structure with carriers {0..size-1}, kept separate from the
// library's Model so that semantic checks do not reuse its evaluator.
struct OModel {
  std::map<grl::Sort, std::size_t> size;
  std::map<std::string, std::set<std::vector<std::size_t>>> rel;
};

// Tarski satisfaction by direct recursion over the formula.
inline bool holds(const OModel& m, const grl::Formula& f, std::vector<std::size_t>& env) {
  using K = grl::Formula::Kind;
  switch (f.kind()) {
    case K::truth: return true;
    case K::atom: {
      std::vector<std::size_t> t;
      for (auto a : f.args()) t.push_back(env[a]);
      auto it = m.rel.find(f.rel());
      return it != m.rel.end() && it->second.contains(t);
    }
    case K::eq: return env[f.args()[0]] == env[f.args()[1]];
    case K::conj: return holds(m, f.lhs(), env) && holds(m, f.rhs(), env);
    case K::exists: {
      auto it = m.size.find(f.sort());
      const std::size_t n = it == m.size.end() ? 0 : it->second;
      for (std::size_t v = 0; v < n; ++v) {
        env.push_back(v);
        bool ok = holds(m, f.body(), env);
        env.pop_back();
        if (ok) return true;
      }
      return false;
    }
  }
  return false;
}

inline std::vector<std::vector<std::size_t>> tuples(const OModel& m, const grl::Context& ctx) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (const auto& s : ctx) {
    std::vector<std::vector<std::size_t>> next;
    auto it = m.size.find(s);
    const std::size_t n = it == m.size.end() ? 0 : it->second;
    for (const auto& t : out) {
      for (std::size_t v = 0; v < n; ++v) {
        auto u = t;
        u.push_back(v);
        next.push_back(std::move(u));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::set<std::vector<std::size_t>> extension(const OModel& m, const grl::Context& ctx, const grl::Formula& f) {
  std::set<std::vector<std::size_t>> out;
  for (auto t : tuples(m, ctx)) {
    if (holds(m, f, t)) out.insert(t);
  }
  return out;
}

// Every structure for the signature with each carrier of size at most max_size.
inline std::vector<OModel> all_models(const grl::Theory& th, std::size_t max_size) {
  std::vector<OModel> out{OModel{}};
  for (const auto& s : th.sorts) {
    std::vector<OModel> next;
    for (const auto& m : out) {
      for (std::size_t n = 0; n <= max_size; ++n) {
        auto c = m;
        c.size[s] = n;
        next.push_back(std::move(c));
      }
    }
    out = std::move(next);
  }
  for (const auto& [r, ar] : th.rels) {
    std::vector<OModel> next;
    for (const auto& m : out) {
      auto all = tuples(m, ar);
      if (all.size() > 16) throw std::runtime_error("all_models: relation too large");
      for (std::size_t mask = 0; mask < (std::size_t{1} << all.size()); ++mask) {
        auto c = m;
        auto& set = c.rel[r];
        for (std::size_t i = 0; i < all.size(); ++i) {
          if (mask >> i & 1) set.insert(all[i]);
        }
        next.push_back(std::move(c));
      }
    }
    out = std::move(next);
  }
  return out;
}

// phi entails psi in every listed structure.
inline bool contained(const std::vector<OModel>& models, const grl::Context& ctx, const grl::Formula& phi,
                      const grl::Formula& psi) {
  for (const auto& m : models) {
    for (auto t : tuples(m, ctx)) {
      auto u = t;
      if (holds(m, phi, t) && !holds(m, psi, u)) return false;
    }
  }
  return true;
}

// Structures where every sort has n elements and at most k facts hold in total.
inline std::vector<OModel> sparse_models(const grl::Theory& th, std::size_t n, std::size_t k) {
  OModel base;
  for (const auto& s : th.sorts) base.size[s] = n;
  std::vector<std::pair<std::string, std::vector<std::size_t>>> facts;
  for (const auto& [r, ar] : th.rels) {
    for (const auto& t : tuples(base, ar)) facts.emplace_back(r, t);
  }
  std::vector<OModel> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    auto m = base;
    for (auto i : pick) m.rel[facts[i].first].insert(facts[i].second);
    out.push_back(std::move(m));
    if (pick.size() == k) return;
    for (std::size_t i = from; i < facts.size(); ++i) {
      pick.push_back(i);
      go(i + 1);
      pick.pop_back();
    }
  };
  go(0);
  return out;
}

}  // namespace oracle
