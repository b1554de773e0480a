#include "grl/wiring.hpp"

#include <cassert>
#include <sstream>

#include "grl/error.hpp"

namespace grl {

bool Cospan::well_formed() const {
  if (left.size() != dom || right.size() != cod) return false;
  for (auto x : left) if (x >= apex) return false;
  for (auto x : right) if (x >= apex) return false;
  return true;
}

Cospan compose_pushout(const Cospan& f, const Cospan& g) {
  if (f.cod != g.dom) throw ShapeError("compose_pushout: codomain " + std::to_string(f.cod) +
                                       " does not match domain " + std::to_string(g.dom));
  DisjointSets apex(f.apex + g.apex);
  for (std::size_t j = 0; j < f.cod; ++j) apex.unite(f.right[j], f.apex + g.left[j]);
  auto classes = Partition::from_sets(apex);
  Cospan out;
  out.dom = f.dom;
  out.cod = g.cod;
  out.apex = classes.block_count();
  for (auto x : f.left) out.left.push_back(classes.block_of(x));
  for (auto x : g.right) out.right.push_back(classes.block_of(f.apex + x));
  return out;
}

WMor WMor::from_blocks(std::size_t m, std::size_t n, Partition blocks) {
  if (m + n == 0) throw ShapeError("WMor: a (0,0) morphism must be a flag");
  if (blocks.size() != m + n) throw ShapeError("WMor: partition size does not match arity");
  return WMor(m, n, std::move(blocks));
}

WMor WMor::flag(bool inhabited) { return WMor(0, 0, inhabited); }

bool WMor::inhabited() const {
  assert(is_flag());
  return std::get<bool>(body_);
}

const Partition& WMor::blocks() const {
  assert(!is_flag());
  return std::get<Partition>(body_);
}

WMor identity_w(std::size_t n) {
  if (n == 0) return WMor::flag(false);
  std::vector<std::size_t> labels(2 * n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = labels[n + i] = i;
  return WMor::from_blocks(n, n, Partition::from_labels(labels));
}

WMor symmetry_w(std::size_t a, std::size_t b) {
  const auto n = a + b;
  if (n == 0) return WMor::flag(false);
  // Domain wire i goes to codomain position (i + b) mod n.
  std::vector<std::size_t> labels(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = i;
    labels[n + (i < a ? i + b : i - a)] = i;
  }
  return WMor::from_blocks(n, n, Partition::from_labels(labels));
}

namespace {

WMor single_block(std::size_t m, std::size_t n) {
  if (m + n == 0) return WMor::flag(false);
  return WMor::from_blocks(m, n, Partition::indiscrete(m + n));
}

}  // namespace

WMor generator(Gen kind, std::size_t n) {
  switch (kind) {
    case Gen::epsilon: return single_block(1, 0);
    case Gen::delta: return single_block(1, 2);
    case Gen::eta: return single_block(0, 1);
    case Gen::mu: return single_block(2, 1);
    case Gen::sigma: return symmetry_w(1, 1);
    case Gen::delta_n: return single_block(1, n);
    case Gen::mu_n: return single_block(n, 1);
    case Gen::identity: return identity_w(n);
    case Gen::cup: return compose(generator(Gen::eta), generator(Gen::delta));
    case Gen::cap: return compose(generator(Gen::mu), generator(Gen::epsilon));
  }
  throw Error("generator: unknown kind");
}

std::string to_string(Gen kind) {
  switch (kind) {
    case Gen::epsilon: return "epsilon";
    case Gen::delta: return "delta";
    case Gen::eta: return "eta";
    case Gen::mu: return "mu";
    case Gen::sigma: return "sigma";
    case Gen::delta_n: return "delta_n";
    case Gen::mu_n: return "mu_n";
    case Gen::identity: return "identity";
    case Gen::cup: return "cup";
    case Gen::cap: return "cap";
  }
  return "?";
}

Gen gen_from_string(const std::string& name) {
  for (auto g : {Gen::epsilon, Gen::delta, Gen::eta, Gen::mu, Gen::sigma, Gen::delta_n, Gen::mu_n,
                 Gen::identity, Gen::cup, Gen::cap}) {
    if (to_string(g) == name) return g;
  }
  throw Error("unknown generator '" + name + "'");
}

WMor canonicalize(const Cospan& c) {
  if (!c.well_formed()) throw ShapeError("canonicalize: malformed cospan");
  if (c.dom + c.cod == 0) return WMor::flag(c.apex >= 1);
  std::vector<std::size_t> labels(c.left);
  labels.insert(labels.end(), c.right.begin(), c.right.end());
  return WMor::from_blocks(c.dom, c.cod, Partition::from_labels(labels));
}

Cospan to_cospan(const WMor& w) {
  Cospan c;
  c.dom = w.dom();
  c.cod = w.cod();
  if (w.is_flag()) {
    c.apex = w.inhabited() ? 1 : 0;
    return c;
  }
  const auto& p = w.blocks();
  c.apex = p.block_count();
  for (std::size_t i = 0; i < w.dom(); ++i) c.left.push_back(p.block_of(i));
  for (std::size_t j = 0; j < w.cod(); ++j) c.right.push_back(p.block_of(w.dom() + j));
  return c;
}

WMor compose(const WMor& f, const WMor& g) {
  if (f.cod() != g.dom()) {
    throw ShapeError("compose: codomain " + std::to_string(f.cod()) + " does not match domain " +
                     std::to_string(g.dom()));
  }
  const auto m = f.dom(), n = f.cod(), p = g.cod();
  if (m + p == 0) {
    const bool f_dot = f.is_flag() ? f.inhabited() : false;
    const bool g_dot = g.is_flag() ? g.inhabited() : false;
    return WMor::flag(n >= 1 || f_dot || g_dot);
  }
  if (f.is_flag()) return g;  // 0 -> 0 then 0 -> p, p >= 1: the dot is reflected away
  if (g.is_flag()) return f;
  // Points: f's ports [0, m+n), then g's ports [m+n, m+2n+p).
  DisjointSets sets(m + n + n + p);
  std::vector<std::size_t> seen(f.blocks().block_count(), sets.size());
  for (std::size_t i = 0; i < m + n; ++i) {
    auto& rep = seen[f.blocks().block_of(i)];
    if (rep == sets.size()) rep = i; else sets.unite(rep, i);
  }
  seen.assign(g.blocks().block_count(), sets.size());
  for (std::size_t i = 0; i < n + p; ++i) {
    auto& rep = seen[g.blocks().block_of(i)];
    if (rep == sets.size()) rep = m + n + i; else sets.unite(rep, m + n + i);
  }
  for (std::size_t j = 0; j < n; ++j) sets.unite(m + j, m + n + j);
  std::vector<std::size_t> labels;
  labels.reserve(m + p);
  for (std::size_t i = 0; i < m; ++i) labels.push_back(sets.find(i));
  for (std::size_t k = 0; k < p; ++k) labels.push_back(sets.find(m + n + n + k));
  return WMor::from_blocks(m, p, Partition::from_labels(labels));
}

WMor tensor(const WMor& f, const WMor& g) {
  if (f.is_flag() && g.is_flag()) return WMor::flag(f.inhabited() || g.inhabited());
  if (f.is_flag()) return g;
  if (g.is_flag()) return f;
  // Result ports: f.dom, g.dom, f.cod, g.cod. g's labels are offset past f's.
  const auto fb = f.blocks().block_count();
  std::vector<std::size_t> labels;
  for (std::size_t i = 0; i < f.dom(); ++i) labels.push_back(f.blocks().block_of(i));
  for (std::size_t i = 0; i < g.dom(); ++i) labels.push_back(fb + g.blocks().block_of(i));
  for (std::size_t j = 0; j < f.cod(); ++j) labels.push_back(f.blocks().block_of(f.dom() + j));
  for (std::size_t j = 0; j < g.cod(); ++j) labels.push_back(fb + g.blocks().block_of(g.dom() + j));
  return WMor::from_blocks(f.dom() + g.dom(), f.cod() + g.cod(), Partition::from_labels(labels));
}

bool leq(const WMor& f, const WMor& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) throw ShapeError("leq: arity mismatch");
  if (f.is_flag()) return !g.inhabited() || f.inhabited();
  return g.blocks().refines(f.blocks());
}

std::vector<WMor> enum_homs(std::size_t m, std::size_t n) {
  if (m + n > 8) throw LimitError("enum_homs: m + n = " + std::to_string(m + n) + " exceeds 8");
  if (m + n == 0) return {WMor::flag(false), WMor::flag(true)};
  std::vector<WMor> out;
  for (auto& p : all_partitions(m + n)) out.push_back(WMor::from_blocks(m, n, std::move(p)));
  return out;
}

std::string to_string(const WMor& w) {
  std::ostringstream os;
  os << "W(" << w.dom() << "," << w.cod() << ")";
  if (w.is_flag()) {
    os << (w.inhabited() ? " dot" : " id0");
    return os.str();
  }
  os << " {";
  bool first_block = true;
  for (const auto& block : w.blocks().blocks()) {
    os << (first_block ? "" : ",") << "{";
    first_block = false;
    bool first = true;
    for (auto p : block) {
      os << (first ? "" : ",") << (p < w.dom() ? "d" : "c") << (p < w.dom() ? p : p - w.dom()) + 1;
      first = false;
    }
    os << "}";
  }
  os << "}";
  return os.str();
}

}  // namespace grl
