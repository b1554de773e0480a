#pragma once

// Sort-labelled wiring diagrams: a morphism Γ1 ⊗ ... ⊗ Γs -> Γout of the
// coproduct of one copy of the wiring po-prop per sort.
//
// Ports are numbered globally: shell 0 positions, shell 1 positions, ..., then
// out positions. Blocks are a partition of that port set, each block carrying a
// single sort. The floating set records, per sort with no boundary port, whether
// the (0,0) component is the inhabitedness dot.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "grl/context.hpp"
#include "grl/partition.hpp"
#include "grl/wiring.hpp"

namespace grl {

struct Port {
  static constexpr std::size_t out = static_cast<std::size_t>(-1);
  std::size_t shell = out;  // `out` for a port of the outer boundary
  std::size_t pos = 0;

  bool is_out() const { return shell == out; }
  auto operator<=>(const Port&) const = default;
};

class TypedWiring {
 public:
  TypedWiring() = default;
  // Validates sort-uniformity and applies per-sort absorption of floating dots.
  TypedWiring(std::vector<Context> shells, Context out, Partition blocks, std::set<Sort> floating = {});

  const std::vector<Context>& shells() const { return shells_; }
  const Context& out() const { return out_; }
  const Partition& blocks() const { return blocks_; }
  const std::set<Sort>& floating() const { return floating_; }

  std::size_t shell_count() const { return shells_.size(); }
  std::size_t port_count() const { return blocks_.size(); }
  std::size_t shell_offset(std::size_t shell) const;
  std::size_t out_offset() const { return shell_offset(shells_.size()); }
  std::size_t index(Port p) const;
  Port port(std::size_t index) const;
  const Sort& sort_of(std::size_t index) const;
  // Sort of each block, by block label.
  std::vector<Sort> block_sorts() const;

  // Concatenate all shells into one; port numbering is unchanged.
  TypedWiring flatten() const;

  bool operator==(const TypedWiring&) const = default;

 private:
  std::vector<Context> shells_;
  Context out_;
  Partition blocks_;
  std::set<Sort> floating_;
};

// The generator applied wire-wise to every entry of the context. One shell,
// carrying the generator's domain (empty for eta and cup).
TypedWiring supply_gen(Gen kind, const Context& ctx, std::size_t n = 0);
// Identity with one shell per given context, all feeding out in order.
TypedWiring identity_t(const std::vector<Context>& shells);
// Lifts an untyped morphism to a one-shell wiring with every wire of sort s.
TypedWiring lift(const WMor& w, const Sort& s);

// Operadic substitution of inner into shell i of outer.
TypedWiring compose_at(const TypedWiring& outer, std::size_t shell, const TypedWiring& inner);
// Sequential composite of one-shell wirings: first, then second.
TypedWiring then(const TypedWiring& first, const TypedWiring& second);
TypedWiring tensor_t(const TypedWiring& a, const TypedWiring& b);
bool leq_t(const TypedWiring& a, const TypedWiring& b);

TypedWiring transpose(const TypedWiring& w);
TypedWiring name(const TypedWiring& w);
TypedWiring unname(const TypedWiring& w, std::size_t split);

// Removes shell i, which must have an empty context.
TypedWiring drop_empty_shell(const TypedWiring& w, std::size_t shell);
// Reorders shells: result shell k is w's shell order[k].
TypedWiring permute_shells(const TypedWiring& w, const std::vector<std::size_t>& order);

// Per-sort component: shell ports of sort s (in global order) as domain, out
// ports of sort s as codomain.
WMor restrict_to(const TypedWiring& w, const Sort& s);
// Rebuilds a wiring from per-sort components; inverse of restrict_to over all sorts.
TypedWiring reassemble(const std::vector<Context>& shells, const Context& out,
                       const std::map<Sort, WMor>& components);
// Every sort mentioned on a port or floating.
std::set<Sort> sorts_of(const TypedWiring& w);

}  // namespace grl
