#include "grl/syn.hpp"

namespace grl {

SemilatticeCalculus::SemilatticeCalculus(std::vector<std::vector<std::size_t>> meet) : meet_(std::move(meet)) {
  const auto n = meet_.size();
  if (n == 0) throw ShapeError("semilattice: empty carrier");
  for (const auto& row : meet_) {
    if (row.size() != n) throw ShapeError("semilattice: meet table is not square");
    for (auto v : row) {
      if (v >= n) throw ShapeError("semilattice: meet out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (meet_[a][a] != a) throw PreconditionError("semilattice", "meet is not idempotent");
    for (std::size_t b = 0; b < n; ++b) {
      if (meet_[a][b] != meet_[b][a]) throw PreconditionError("semilattice", "meet is not commutative");
      for (std::size_t c = 0; c < n; ++c) {
        if (meet_[meet_[a][b]][c] != meet_[a][meet_[b][c]]) {
          throw PreconditionError("semilattice", "meet is not associative");
        }
      }
    }
  }
  // The top is the element every meet leaves unchanged.
  top_ = n;
  for (std::size_t t = 0; t < n && top_ == n; ++t) {
    bool is_top = true;
    for (std::size_t a = 0; a < n; ++a) is_top &= meet_[t][a] == a;
    if (is_top) top_ = t;
  }
  if (top_ == n) throw PreconditionError("semilattice", "no top element");
}

}  // namespace grl
