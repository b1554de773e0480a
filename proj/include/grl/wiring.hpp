#pragma once

// The po-prop of wirings: morphisms m -> n are partitions of the boundary
// ports d0..d(m-1), c0..c(n-1), except in the (0,0) hom where the two
// morphisms are "truth" (identity, no dot) and "inhabitedness" (a floating dot).
//
// The order is reverse refinement: f <= g iff g's partition refines f's,
// i.e. breaking connections moves up.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "grl/partition.hpp"

namespace grl {

// A cospan of finite sets m -> apex <- n, with legs as index maps.
struct Cospan {
  std::size_t dom = 0;
  std::size_t cod = 0;
  std::size_t apex = 0;
  std::vector<std::size_t> left;   // size dom, values < apex
  std::vector<std::size_t> right;  // size cod, values < apex

  bool well_formed() const;
  bool operator==(const Cospan&) const = default;
};

// Composite by pushout; the full apex is kept, including elements hit by no port.
Cospan compose_pushout(const Cospan& f, const Cospan& g);

class WMor {
 public:
  // Requires m + n >= 1 and blocks.size() == m + n.
  static WMor from_blocks(std::size_t m, std::size_t n, Partition blocks);
  // The (0,0) morphisms; inhabited == false is the identity.
  static WMor flag(bool inhabited);

  std::size_t dom() const { return dom_; }
  std::size_t cod() const { return cod_; }
  bool is_flag() const { return std::holds_alternative<bool>(body_); }
  bool inhabited() const;               // requires is_flag()
  const Partition& blocks() const;      // requires !is_flag()
  std::size_t cod_port(std::size_t j) const { return dom_ + j; }

  bool operator==(const WMor&) const = default;

 private:
  WMor(std::size_t m, std::size_t n, std::variant<Partition, bool> body)
      : dom_(m), cod_(n), body_(std::move(body)) {}

  std::size_t dom_ = 0;
  std::size_t cod_ = 0;
  std::variant<Partition, bool> body_;
};

enum class Gen { epsilon, delta, eta, mu, sigma, delta_n, mu_n, identity, cup, cap };

// n is the arity for delta_n, mu_n and identity; ignored otherwise.
WMor generator(Gen kind, std::size_t n = 0);
std::string to_string(Gen kind);
Gen gen_from_string(const std::string& name);

WMor canonicalize(const Cospan& c);
// The jointly surjective representative; (0,0) maps to 0->0<-0 or 0->1<-0.
Cospan to_cospan(const WMor& w);

WMor compose(const WMor& f, const WMor& g);
WMor tensor(const WMor& f, const WMor& g);
bool leq(const WMor& f, const WMor& g);

// Identity on n wires; symmetry swapping a block of a wires past b wires.
WMor identity_w(std::size_t n);
WMor symmetry_w(std::size_t a, std::size_t b);

// Every canonical morphism m -> n; requires m + n <= 8.
std::vector<WMor> enum_homs(std::size_t m, std::size_t n);

std::string to_string(const WMor& w);

}  // namespace grl
