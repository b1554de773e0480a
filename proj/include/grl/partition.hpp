#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace grl {

// Union-find over 0..n-1 with path halving; the smaller root wins so that
// representatives are always the least element of their class.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n = 0);

  std::size_t size() const { return parent_.size(); }
  std::size_t add();
  std::size_t find(std::size_t x);
  // Returns true if two distinct classes were merged.
  bool unite(std::size_t a, std::size_t b);

 private:
  std::vector<std::size_t> parent_;
};

// A set partition of {0..n-1} in restricted-growth form: label(0) = 0 and each
// new block gets the next unused label. Blocks are therefore numbered in order
// of their least element, which makes structural equality partition equality.
class Partition {
 public:
  Partition() = default;
  // The discrete partition (all singletons) of n points.
  explicit Partition(std::size_t n);

  // Any labelling; two points share a block iff they share a label.
  static Partition from_labels(std::span<const std::size_t> labels);
  static Partition from_blocks(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks);
  static Partition from_sets(DisjointSets& sets);
  // The single-block partition.
  static Partition indiscrete(std::size_t n);

  std::size_t size() const { return label_.size(); }
  std::size_t block_count() const { return blocks_; }
  std::size_t block_of(std::size_t point) const { return label_[point]; }
  bool same_block(std::size_t a, std::size_t b) const { return label_[a] == label_[b]; }
  const std::vector<std::size_t>& labels() const { return label_; }
  std::vector<std::vector<std::size_t>> blocks() const;

  // True iff every block of *this lies inside a block of coarser.
  bool refines(const Partition& coarser) const;
  // The finest common coarsening.
  Partition join(const Partition& other) const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<std::size_t> label_;
  std::size_t blocks_ = 0;
};

// All partitions of an n-element set, in lexicographic restricted-growth order.
std::vector<Partition> all_partitions(std::size_t n);

}  // namespace grl
