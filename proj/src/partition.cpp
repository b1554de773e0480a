#include "grl/partition.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>
#include <numeric>

namespace grl {

DisjointSets::DisjointSets(std::size_t n) : parent_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::add() {
  parent_.push_back(parent_.size());
  return parent_.size() - 1;
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (b < a) std::swap(a, b);
  parent_[b] = a;
  return true;
}

Partition::Partition(std::size_t n) : label_(n), blocks_(n) {
  std::iota(label_.begin(), label_.end(), std::size_t{0});
}

Partition Partition::from_labels(std::span<const std::size_t> labels) {
  Partition p;
  p.label_.resize(labels.size());
  std::map<std::size_t, std::size_t> renumber;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = renumber.try_emplace(labels[i], renumber.size());
    p.label_[i] = it->second;
  }
  p.blocks_ = renumber.size();
  return p;
}

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> labels(n, unset);
  std::size_t next = 0;
  for (const auto& block : blocks) {
    for (auto point : block) {
      assert(point < n && labels[point] == unset);
      labels[point] = next;
    }
    ++next;
  }
  for (auto& l : labels) {
    if (l == unset) l = next++;
  }
  return from_labels(labels);
}

Partition Partition::from_sets(DisjointSets& sets) {
  std::vector<std::size_t> labels(sets.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = sets.find(i);
  return from_labels(labels);
}

Partition Partition::indiscrete(std::size_t n) {
  std::vector<std::size_t> labels(n, 0);
  return from_labels(labels);
}

std::vector<std::vector<std::size_t>> Partition::blocks() const {
  std::vector<std::vector<std::size_t>> out(blocks_);
  for (std::size_t i = 0; i < label_.size(); ++i) out[label_[i]].push_back(i);
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  assert(size() == coarser.size());
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> image(blocks_, unset);
  for (std::size_t i = 0; i < label_.size(); ++i) {
    auto& target = image[label_[i]];
    if (target == unset) {
      target = coarser.label_[i];
    } else if (target != coarser.label_[i]) {
      return false;
    }
  }
  return true;
}

Partition Partition::join(const Partition& other) const {
  assert(size() == other.size());
  DisjointSets sets(size());
  std::vector<std::size_t> first_a(blocks_, size()), first_b(other.blocks_, size());
  for (std::size_t i = 0; i < size(); ++i) {
    auto& fa = first_a[label_[i]];
    if (fa == size()) fa = i; else sets.unite(fa, i);
    auto& fb = first_b[other.label_[i]];
    if (fb == size()) fb = i; else sets.unite(fb, i);
  }
  return from_sets(sets);
}

std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  std::vector<std::size_t> rgs(n, 0);
  if (n == 0) {
    out.emplace_back(0);
    return out;
  }
  // Restricted growth strings: rgs[i] <= 1 + max(rgs[0..i)).
  std::vector<std::size_t> prefix_max(n, 0);
  while (true) {
    out.push_back(Partition::from_labels(rgs));
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[j - 1];
    }
  }
  return out;
}

}  // namespace grl
