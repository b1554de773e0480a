#include "grl/typed_wiring.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "grl/error.hpp"

namespace grl {

std::string to_string(const Context& c) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i].name;
  os << "]";
  return os.str();
}

TypedWiring::TypedWiring(std::vector<Context> shells, Context out, Partition blocks, std::set<Sort> floating)
    : shells_(std::move(shells)), out_(std::move(out)), blocks_(std::move(blocks)), floating_(std::move(floating)) {
  std::size_t ports = out_.size();
  for (const auto& s : shells_) ports += s.size();
  if (blocks_.size() != ports) {
    throw ShapeError("wiring: partition covers " + std::to_string(blocks_.size()) + " ports, expected " +
                     std::to_string(ports));
  }
  std::vector<const Sort*> block_sort(blocks_.block_count(), nullptr);
  for (std::size_t i = 0; i < ports; ++i) {
    const Sort& s = sort_of(i);
    auto& b = block_sort[blocks_.block_of(i)];
    if (b == nullptr) {
      b = &s;
    } else if (*b != s) {
      throw SortError("wiring: block mixes sorts " + b->name + " and " + s.name);
    }
    floating_.erase(s);
  }
}

std::size_t TypedWiring::shell_offset(std::size_t shell) const {
  std::size_t off = 0;
  for (std::size_t i = 0; i < shell; ++i) off += shells_[i].size();
  return off;
}

std::size_t TypedWiring::index(Port p) const {
  if (p.is_out()) {
    if (p.pos >= out_.size()) throw ShapeError("wiring: out position out of range");
    return out_offset() + p.pos;
  }
  if (p.shell >= shells_.size() || p.pos >= shells_[p.shell].size()) {
    throw ShapeError("wiring: shell port out of range");
  }
  return shell_offset(p.shell) + p.pos;
}

Port TypedWiring::port(std::size_t index) const {
  for (std::size_t s = 0; s < shells_.size(); ++s) {
    if (index < shells_[s].size()) return Port{s, index};
    index -= shells_[s].size();
  }
  assert(index < out_.size());
  return Port{Port::out, index};
}

const Sort& TypedWiring::sort_of(std::size_t index) const {
  for (const auto& s : shells_) {
    if (index < s.size()) return s[index];
    index -= s.size();
  }
  return out_.at(index);
}

std::vector<Sort> TypedWiring::block_sorts() const {
  std::vector<Sort> sorts(blocks_.block_count());
  std::vector<bool> set(blocks_.block_count(), false);
  for (std::size_t i = 0; i < port_count(); ++i) {
    auto b = blocks_.block_of(i);
    if (!set[b]) {
      sorts[b] = sort_of(i);
      set[b] = true;
    }
  }
  return sorts;
}

TypedWiring TypedWiring::flatten() const {
  Context all;
  for (const auto& s : shells_) all.insert(all.end(), s.begin(), s.end());
  return TypedWiring({all}, out_, blocks_, floating_);
}

namespace {

// One block per context entry holding `copies_in` shell copies and `copies_out`
// out copies of that entry.
TypedWiring per_wire(const Context& ctx, std::size_t copies_in, std::size_t copies_out) {
  const auto k = ctx.size();
  std::vector<std::size_t> labels;
  for (std::size_t c = 0; c < copies_in; ++c)
    for (std::size_t i = 0; i < k; ++i) labels.push_back(i);
  for (std::size_t c = 0; c < copies_out; ++c)
    for (std::size_t i = 0; i < k; ++i) labels.push_back(i);
  return TypedWiring({repeat(ctx, copies_in)}, repeat(ctx, copies_out), Partition::from_labels(labels));
}

}  // namespace

TypedWiring supply_gen(Gen kind, const Context& ctx, std::size_t n) {
  switch (kind) {
    case Gen::epsilon: return per_wire(ctx, 1, 0);
    case Gen::delta: return per_wire(ctx, 1, 2);
    case Gen::eta: return per_wire(ctx, 0, 1);
    case Gen::mu: return per_wire(ctx, 2, 1);
    case Gen::delta_n: return per_wire(ctx, 1, n);
    case Gen::mu_n: return per_wire(ctx, n, 1);
    case Gen::identity: return per_wire(ctx, 1, 1);
    case Gen::cup: return per_wire(ctx, 0, 2);
    case Gen::cap: return per_wire(ctx, 2, 0);
    case Gen::sigma: {
      // Γ ⊗ Γ -> Γ ⊗ Γ exchanging the two copies.
      const auto k = ctx.size();
      std::vector<std::size_t> labels(4 * k);
      for (std::size_t i = 0; i < k; ++i) {
        labels[i] = labels[2 * k + k + i] = i;
        labels[k + i] = labels[2 * k + i] = k + i;
      }
      return TypedWiring({repeat(ctx, 2)}, repeat(ctx, 2), Partition::from_labels(labels));
    }
  }
  throw Error("supply_gen: unknown generator");
}

TypedWiring identity_t(const std::vector<Context>& shells) {
  Context out;
  for (const auto& s : shells) out.insert(out.end(), s.begin(), s.end());
  std::vector<std::size_t> labels;
  for (std::size_t i = 0; i < out.size(); ++i) labels.push_back(i);
  for (std::size_t i = 0; i < out.size(); ++i) labels.push_back(i);
  return TypedWiring(shells, out, Partition::from_labels(labels));
}

TypedWiring lift(const WMor& w, const Sort& s) {
  Context dom(w.dom(), s), cod(w.cod(), s);
  if (w.is_flag()) {
    std::set<Sort> floating;
    if (w.inhabited()) floating.insert(s);
    return TypedWiring({dom}, cod, Partition(0), floating);
  }
  return TypedWiring({dom}, cod, w.blocks());
}

TypedWiring compose_at(const TypedWiring& outer, std::size_t shell, const TypedWiring& inner) {
  if (shell >= outer.shell_count()) throw ShapeError("compose_at: no shell " + std::to_string(shell));
  if (inner.out() != outer.shells()[shell]) {
    throw ShapeError("compose_at: inner boundary " + to_string(inner.out()) + " does not match shell " +
                     std::to_string(shell) + " context " + to_string(outer.shells()[shell]));
  }
  const auto no = outer.port_count();
  const auto ni = inner.port_count();
  // Points: outer ports [0, no), inner ports [no, no + ni).
  DisjointSets sets(no + ni);
  auto join_blocks = [&sets](const Partition& p, std::size_t base) {
    std::vector<std::size_t> rep(p.block_count(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < p.size(); ++i) {
      auto& r = rep[p.block_of(i)];
      if (r == static_cast<std::size_t>(-1)) r = base + i; else sets.unite(r, base + i);
    }
  };
  join_blocks(outer.blocks(), 0);
  join_blocks(inner.blocks(), no);
  const auto iface = outer.shell_offset(shell);
  for (std::size_t j = 0; j < inner.out().size(); ++j) sets.unite(iface + j, no + inner.out_offset() + j);

  std::vector<Context> shells;
  std::vector<std::size_t> points;  // result port order, as points
  for (std::size_t s = 0; s < outer.shell_count(); ++s) {
    if (s == shell) {
      for (std::size_t t = 0; t < inner.shell_count(); ++t) {
        shells.push_back(inner.shells()[t]);
        for (std::size_t j = 0; j < inner.shells()[t].size(); ++j) points.push_back(no + inner.shell_offset(t) + j);
      }
    } else {
      shells.push_back(outer.shells()[s]);
      for (std::size_t j = 0; j < outer.shells()[s].size(); ++j) points.push_back(outer.shell_offset(s) + j);
    }
  }
  for (std::size_t j = 0; j < outer.out().size(); ++j) points.push_back(outer.out_offset() + j);

  std::vector<std::size_t> labels;
  std::set<std::size_t> kept;
  for (auto p : points) {
    labels.push_back(sets.find(p));
    kept.insert(labels.back());
  }
  std::set<Sort> floating(outer.floating());
  floating.insert(inner.floating().begin(), inner.floating().end());
  // Classes with no surviving port become floating dots of their sort.
  for (std::size_t i = 0; i < no + ni; ++i) {
    if (!kept.contains(sets.find(i))) floating.insert(i < no ? outer.sort_of(i) : inner.sort_of(i - no));
  }
  return TypedWiring(std::move(shells), outer.out(), Partition::from_labels(labels), std::move(floating));
}

TypedWiring then(const TypedWiring& first, const TypedWiring& second) {
  if (second.shell_count() != 1) throw ShapeError("then: second wiring must have one shell");
  return compose_at(second, 0, first);
}

TypedWiring tensor_t(const TypedWiring& a, const TypedWiring& b) {
  std::vector<Context> shells(a.shells());
  shells.insert(shells.end(), b.shells().begin(), b.shells().end());
  const auto ab = a.blocks().block_count();
  std::vector<std::size_t> labels;
  for (std::size_t i = 0; i < a.out_offset(); ++i) labels.push_back(a.blocks().block_of(i));
  for (std::size_t i = 0; i < b.out_offset(); ++i) labels.push_back(ab + b.blocks().block_of(i));
  for (std::size_t j = 0; j < a.out().size(); ++j) labels.push_back(a.blocks().block_of(a.out_offset() + j));
  for (std::size_t j = 0; j < b.out().size(); ++j) labels.push_back(ab + b.blocks().block_of(b.out_offset() + j));
  std::set<Sort> floating(a.floating());
  floating.insert(b.floating().begin(), b.floating().end());
  return TypedWiring(std::move(shells), concat(a.out(), b.out()), Partition::from_labels(labels),
                     std::move(floating));
}

bool leq_t(const TypedWiring& a, const TypedWiring& b) {
  if (a.shells() != b.shells() || a.out() != b.out()) throw ShapeError("leq_t: shape mismatch");
  if (!b.blocks().refines(a.blocks())) return false;
  return std::includes(a.floating().begin(), a.floating().end(), b.floating().begin(), b.floating().end());
}

TypedWiring transpose(const TypedWiring& w) {
  if (w.shell_count() != 1) throw ShapeError("transpose: expected exactly one shell");
  const auto k = w.shells()[0].size();
  const auto n = w.out().size();
  std::vector<std::size_t> labels;
  for (std::size_t j = 0; j < n; ++j) labels.push_back(w.blocks().block_of(k + j));
  for (std::size_t i = 0; i < k; ++i) labels.push_back(w.blocks().block_of(i));
  return TypedWiring({w.out()}, w.shells()[0], Partition::from_labels(labels), w.floating());
}

TypedWiring name(const TypedWiring& w) {
  if (w.shell_count() != 1) throw ShapeError("name: expected exactly one shell");
  return TypedWiring({Context{}}, concat(w.shells()[0], w.out()), w.blocks(), w.floating());
}

TypedWiring unname(const TypedWiring& w, std::size_t split) {
  if (w.shell_count() != 1 || !w.shells()[0].empty()) {
    throw ShapeError("unname: expected one shell with empty context");
  }
  if (split > w.out().size()) throw ShapeError("unname: split exceeds boundary size");
  Context dom(w.out().begin(), w.out().begin() + static_cast<std::ptrdiff_t>(split));
  Context cod(w.out().begin() + static_cast<std::ptrdiff_t>(split), w.out().end());
  return TypedWiring({dom}, cod, w.blocks(), w.floating());
}

TypedWiring drop_empty_shell(const TypedWiring& w, std::size_t shell) {
  if (shell >= w.shell_count() || !w.shells()[shell].empty()) {
    throw ShapeError("drop_empty_shell: shell " + std::to_string(shell) + " is not an empty context");
  }
  auto shells = w.shells();
  shells.erase(shells.begin() + static_cast<std::ptrdiff_t>(shell));
  return TypedWiring(std::move(shells), w.out(), w.blocks(), w.floating());
}

TypedWiring permute_shells(const TypedWiring& w, const std::vector<std::size_t>& order) {
  if (order.size() != w.shell_count()) throw ShapeError("permute_shells: wrong permutation length");
  std::vector<bool> used(order.size(), false);
  std::vector<Context> shells;
  std::vector<std::size_t> labels;
  for (auto s : order) {
    if (s >= order.size() || used[s]) throw ShapeError("permute_shells: not a permutation");
    used[s] = true;
    shells.push_back(w.shells()[s]);
    for (std::size_t j = 0; j < w.shells()[s].size(); ++j) labels.push_back(w.blocks().block_of(w.shell_offset(s) + j));
  }
  for (std::size_t j = 0; j < w.out().size(); ++j) labels.push_back(w.blocks().block_of(w.out_offset() + j));
  return TypedWiring(std::move(shells), w.out(), Partition::from_labels(labels), w.floating());
}

WMor restrict_to(const TypedWiring& w, const Sort& s) {
  std::vector<std::size_t> labels;
  std::size_t dom = 0;
  for (std::size_t i = 0; i < w.out_offset(); ++i) {
    if (w.sort_of(i) == s) {
      labels.push_back(w.blocks().block_of(i));
      ++dom;
    }
  }
  for (std::size_t j = 0; j < w.out().size(); ++j) {
    if (w.out()[j] == s) labels.push_back(w.blocks().block_of(w.out_offset() + j));
  }
  if (labels.empty()) return WMor::flag(w.floating().contains(s));
  return WMor::from_blocks(dom, labels.size() - dom, Partition::from_labels(labels));
}

TypedWiring reassemble(const std::vector<Context>& shells, const Context& out,
                       const std::map<Sort, WMor>& components) {
  std::vector<Sort> port_sorts;
  for (const auto& s : shells) port_sorts.insert(port_sorts.end(), s.begin(), s.end());
  const auto shell_ports = port_sorts.size();
  port_sorts.insert(port_sorts.end(), out.begin(), out.end());

  std::map<Sort, std::size_t> next_in, next_out;
  std::map<std::pair<Sort, std::size_t>, std::size_t> ids;
  std::vector<std::size_t> labels;
  std::set<Sort> floating;
  for (std::size_t i = 0; i < port_sorts.size(); ++i) {
    const auto& s = port_sorts[i];
    auto it = components.find(s);
    if (it == components.end() || it->second.is_flag()) throw ShapeError("reassemble: no component for sort " + s.name);
    const auto& w = it->second;
    const auto local = i < shell_ports ? next_in[s]++ : w.dom() + next_out[s]++;
    if (local >= w.dom() + w.cod()) throw ShapeError("reassemble: component arity too small for sort " + s.name);
    auto key = std::make_pair(s, w.blocks().block_of(local));
    labels.push_back(ids.try_emplace(key, ids.size()).first->second);
  }
  for (const auto& [s, w] : components) {
    if (w.is_flag()) {
      if (w.inhabited()) floating.insert(s);
    } else if (next_in[s] != w.dom() || next_out[s] != w.cod()) {
      throw ShapeError("reassemble: component arity mismatch for sort " + s.name);
    }
  }
  return TypedWiring(shells, out, Partition::from_labels(labels), std::move(floating));
}

std::set<Sort> sorts_of(const TypedWiring& w) {
  std::set<Sort> out(w.floating());
  for (const auto& s : w.shells()) out.insert(s.begin(), s.end());
  out.insert(w.out().begin(), w.out().end());
  return out;
}

}  // namespace grl
