#include "grl/relsem.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "grl/error.hpp"
#include "grl/theory_terms.hpp"

namespace grl {

FinRel::FinRel(std::size_t dom, std::size_t cod, std::set<std::pair<std::size_t, std::size_t>> pairs)
    : dom_(dom), cod_(cod), pairs_(std::move(pairs)) {
  for (const auto& [a, b] : pairs_) {
    if (a >= dom_ || b >= cod_) throw ShapeError("relation: pair out of range");
  }
}

FinRel rel_identity(std::size_t n) {
  std::set<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i < n; ++i) p.emplace(i, i);
  return FinRel(n, n, std::move(p));
}

FinRel rel_compose(const FinRel& f, const FinRel& g) {
  if (f.cod() != g.dom()) throw ShapeError("rel_compose: codomain and domain differ");
  std::vector<std::vector<std::size_t>> succ(g.dom());
  for (const auto& [b, c] : g.pairs()) succ[b].push_back(c);
  std::set<std::pair<std::size_t, std::size_t>> p;
  for (const auto& [a, b] : f.pairs()) {
    for (auto c : succ[b]) p.emplace(a, c);
  }
  return FinRel(f.dom(), g.cod(), std::move(p));
}

FinRel rel_tensor(const FinRel& f, const FinRel& g) {
  std::set<std::pair<std::size_t, std::size_t>> p;
  for (const auto& [a, b] : f.pairs()) {
    for (const auto& [c, d] : g.pairs()) p.emplace(a * g.dom() + c, b * g.cod() + d);
  }
  return FinRel(f.dom() * g.dom(), f.cod() * g.cod(), std::move(p));
}

FinRel rel_dagger(const FinRel& f) {
  std::set<std::pair<std::size_t, std::size_t>> p;
  for (const auto& [a, b] : f.pairs()) p.emplace(b, a);
  return FinRel(f.cod(), f.dom(), std::move(p));
}

bool rel_leq(const FinRel& f, const FinRel& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) throw ShapeError("rel_leq: shapes differ");
  return std::includes(g.pairs().begin(), g.pairs().end(), f.pairs().begin(), f.pairs().end());
}

FinRel rel_graph(std::size_t dom, std::size_t cod, const std::vector<std::size_t>& values) {
  if (values.size() != dom) throw ShapeError("rel_graph: wrong number of values");
  std::set<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t a = 0; a < dom; ++a) p.emplace(a, values[a]);
  return FinRel(dom, cod, std::move(p));
}

bool is_function_graph(const FinRel& f) {
  std::vector<std::size_t> out(f.dom(), 0);
  for (const auto& [a, b] : f.pairs()) ++out[a];
  return std::all_of(out.begin(), out.end(), [](std::size_t k) { return k == 1; });
}

bool is_left_adjoint(const FinRel& f) {
  return rel_leq(rel_identity(f.dom()), rel_compose(f, rel_dagger(f))) &&
         rel_leq(rel_compose(rel_dagger(f), f), rel_identity(f.cod()));
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

FinRel rel_of_wiring(const WMor& w, std::size_t c) {
  if (w.is_flag()) {
    if (w.inhabited() && c == 0) return FinRel(1, 1);
    return rel_identity(1);
  }
  const auto m = w.dom(), n = w.cod();
  const auto& blocks = w.blocks();
  std::set<std::pair<std::size_t, std::size_t>> p;
  // Assign a value per block, read off both boundaries.
  std::vector<std::size_t> val(blocks.block_count(), 0);
  const auto combos = power(c, blocks.block_count());
  for (std::size_t code = 0; code < combos; ++code) {
    auto k = code;
    for (auto& v : val) {
      v = k % c;
      k /= c;
    }
    std::size_t x = 0, y = 0;
    for (std::size_t i = 0; i < m; ++i) x = x * c + val[blocks.block_of(i)];
    for (std::size_t j = 0; j < n; ++j) y = y * c + val[blocks.block_of(m + j)];
    p.emplace(x, y);
  }
  return FinRel(power(c, m), power(c, n), std::move(p));
}

FinRel rel_supply(Gen kind, std::size_t c, std::size_t n) {
  std::set<std::pair<std::size_t, std::size_t>> p;
  auto diag = [c](std::size_t x, std::size_t k) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < k; ++i) r = r * c + x;
    return r;
  };
  switch (kind) {
    case Gen::epsilon:
      for (std::size_t x = 0; x < c; ++x) p.emplace(x, 0);
      return FinRel(c, 1, std::move(p));
    case Gen::eta:
      for (std::size_t x = 0; x < c; ++x) p.emplace(0, x);
      return FinRel(1, c, std::move(p));
    case Gen::delta: return rel_supply(Gen::delta_n, c, 2);
    case Gen::mu: return rel_supply(Gen::mu_n, c, 2);
    case Gen::delta_n:
      for (std::size_t x = 0; x < c; ++x) p.emplace(x, diag(x, n));
      return FinRel(c, power(c, n), std::move(p));
    case Gen::mu_n: return rel_dagger(rel_supply(Gen::delta_n, c, n));
    case Gen::identity: return rel_identity(power(c, n));
    case Gen::sigma:
      for (std::size_t a = 0; a < c; ++a) {
        for (std::size_t b = 0; b < c; ++b) p.emplace(a * c + b, b * c + a);
      }
      return FinRel(c * c, c * c, std::move(p));
    case Gen::cup: return rel_compose(rel_supply(Gen::eta, c), rel_supply(Gen::delta, c));
    case Gen::cap: return rel_compose(rel_supply(Gen::mu, c), rel_supply(Gen::epsilon, c));
  }
  throw Error("rel_supply: unknown generator");
}

Tabulation tabulate(const FinRel& f) {
  Tabulation t;
  t.tab = f.pairs().size();
  std::set<std::pair<std::size_t, std::size_t>> r, l;
  std::size_t k = 0;
  for (const auto& [a, b] : f.pairs()) {
    r.emplace(a, k);
    l.emplace(k, b);
    ++k;
  }
  t.right = FinRel(f.dom(), t.tab, std::move(r));
  t.left = FinRel(t.tab, f.cod(), std::move(l));
  return t;
}

FinRel tabulation_hat(const Tabulation& t) {
  return rel_compose(rel_supply(Gen::delta, t.tab), rel_tensor(t.left, rel_dagger(t.right)));
}

std::size_t product_size(const Context& ctx, const Carriers& c) {
  std::size_t n = 1;
  for (const auto& s : ctx) {
    auto it = c.find(s);
    if (it == c.end()) throw SortError("no carrier for sort " + s.name);
    n *= it->second;
  }
  return n;
}

std::size_t encode(const Tuple& t, const Context& ctx, const Carriers& c) {
  if (t.size() != ctx.size()) throw ShapeError("encode: tuple length differs from context");
  std::size_t code = 0;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const auto n = c.at(ctx[i]);
    if (t[i] >= n) throw ShapeError("encode: element out of range");
    code = code * n + t[i];
  }
  return code;
}

Tuple decode(std::size_t code, const Context& ctx, const Carriers& c) {
  Tuple t(ctx.size());
  for (std::size_t i = ctx.size(); i-- > 0;) {
    const auto n = c.at(ctx[i]);
    t[i] = code % n;
    code /= n;
  }
  return t;
}

TupleSet all_tuples(const Context& ctx, const Carriers& c) {
  TupleSet out;
  const auto n = product_size(ctx, c);
  for (std::size_t k = 0; k < n; ++k) out.insert(decode(k, ctx, c));
  return out;
}

namespace {

std::size_t carrier(const Carriers& c, const Sort& s) {
  auto it = c.find(s);
  if (it == c.end()) throw SortError("no carrier for sort " + s.name);
  return it->second;
}

// Extends a partial block assignment over every unassigned block, emitting
// the out tuple for each completion.
void complete_blocks(const TypedWiring& w, const Carriers& c, const std::vector<Sort>& block_sort,
                     std::vector<long>& val, std::size_t b, TupleSet& out) {
  if (b == val.size()) {
    Tuple t;
    for (std::size_t j = 0; j < w.out().size(); ++j) t.push_back(static_cast<std::size_t>(val[w.blocks().block_of(w.out_offset() + j)]));
    out.insert(std::move(t));
    return;
  }
  if (val[b] >= 0) {
    complete_blocks(w, c, block_sort, val, b + 1, out);
    return;
  }
  const auto n = carrier(c, block_sort[b]);
  for (std::size_t v = 0; v < n; ++v) {
    val[b] = static_cast<long>(v);
    complete_blocks(w, c, block_sort, val, b + 1, out);
  }
  val[b] = -1;
}

bool floating_inhabited(const TypedWiring& w, const Carriers& c) {
  for (const auto& s : w.floating()) {
    if (carrier(c, s) == 0) return false;
  }
  return true;
}

}  // namespace

TupleSet prd_apply(const TypedWiring& w, const Carriers& c, const TupleSet& theta) {
  if (w.shell_count() != 1) throw ShapeError("prd_apply: expected a one-shell wiring");
  const auto& shell = w.shells()[0];
  TupleSet out;
  if (!floating_inhabited(w, c)) return out;
  const auto block_sort = w.block_sorts();
  for (const auto& a : theta) {
    if (a.size() != shell.size()) throw ShapeError("prd_apply: tuple length differs from shell context");
    std::vector<long> val(w.blocks().block_count(), -1);
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      if (a[i] >= carrier(c, shell[i])) throw ShapeError("prd_apply: element out of range");
      auto& v = val[w.blocks().block_of(i)];
      if (v < 0) v = static_cast<long>(a[i]); else ok = v == static_cast<long>(a[i]);
    }
    if (ok) complete_blocks(w, c, block_sort, val, 0, out);
  }
  return out;
}

std::pair<TupleSet, TupleSet> prd_pi(const TupleSet& h, std::size_t split) {
  TupleSet l, r;
  for (const auto& t : h) {
    if (t.size() < split) throw ShapeError("prd_pi: tuple shorter than split");
    l.insert(Tuple(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(split)));
    r.insert(Tuple(t.begin() + static_cast<std::ptrdiff_t>(split), t.end()));
  }
  return {l, r};
}

TupleSet prd_boxplus(const TupleSet& a, const TupleSet& b) {
  TupleSet out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      Tuple t(x);
      t.insert(t.end(), y.begin(), y.end());
      out.insert(std::move(t));
    }
  }
  return out;
}

Verdict PrdCalculus::leq(const Context&, const TupleSet& a, const TupleSet& b) const {
  return std::includes(b.begin(), b.end(), a.begin(), a.end()) ? Verdict::yes : Verdict::no;
}

TupleSet PrdCalculus::apply(const TypedWiring& w, const TupleSet& p) const { return prd_apply(w, carriers_, p); }

TupleSet PrdCalculus::boxplus(const Context&, const TupleSet& a, const Context&, const TupleSet& b) const {
  return prd_boxplus(a, b);
}

TupleSet PrdCalculus::truth(const Context& ctx) const { return all_tuples(ctx, carriers_); }

std::pair<TupleSet, TupleSet> PrdCalculus::lambda_split(const Context& c1, const Context&, const TupleSet& g) const {
  return prd_pi(g, c1.size());
}

std::string PrdCalculus::show(const Context&, const TupleSet& p) const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& t : p) {
    os << (first ? "" : ",") << "(";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ")";
    first = false;
  }
  os << "}";
  return os.str();
}

TupleSet name_of(const Kite& k, const Carriers& c) {
  if (k.rel.dom() != product_size(k.dom, c) || k.rel.cod() != product_size(k.cod, c)) {
    throw ShapeError("kite: relation does not match its boundary");
  }
  TupleSet out;
  for (const auto& [a, b] : k.rel.pairs()) {
    auto t = decode(a, k.dom, c);
    auto u = decode(b, k.cod, c);
    t.insert(t.end(), u.begin(), u.end());
    out.insert(std::move(t));
  }
  return out;
}

namespace {

void check_kites(const KiteDiagram& k) {
  if (k.kites.size() != k.wiring.shell_count()) throw ShapeError("kite diagram: one shell per kite required");
  for (std::size_t i = 0; i < k.kites.size(); ++i) {
    if (concat(k.kites[i].dom, k.kites[i].cod) != k.wiring.shells()[i]) {
      throw ShapeError("kite diagram: shell " + std::to_string(i) + " does not match kite boundary");
    }
  }
}

}  // namespace

GraphicalTerm<TupleSet> fold_kites(const KiteDiagram& k) {
  check_kites(k);
  std::vector<TupleSet> preds;
  for (const auto& kite : k.kites) preds.push_back(name_of(kite, k.carriers));
  return GraphicalTerm<TupleSet>(std::move(preds), k.wiring);
}

TupleSet evaluate_kites(const KiteDiagram& k) {
  check_kites(k);
  const auto& w = k.wiring;
  TupleSet out;
  if (!floating_inhabited(w, k.carriers)) return out;
  const auto block_sort = w.block_sorts();
  std::vector<long> val(w.blocks().block_count(), -1);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == k.kites.size()) {
      complete_blocks(w, k.carriers, block_sort, val, 0, out);
      return;
    }
    const auto& kite = k.kites[i];
    const auto off = w.shell_offset(i);
    for (const auto& [a, b] : kite.rel.pairs()) {
      auto t = decode(a, kite.dom, k.carriers);
      auto u = decode(b, kite.cod, k.carriers);
      t.insert(t.end(), u.begin(), u.end());
      auto saved = val;
      bool ok = true;
      for (std::size_t p = 0; p < t.size() && ok; ++p) {
        auto& v = val[w.blocks().block_of(off + p)];
        if (v < 0) v = static_cast<long>(t[p]); else ok = v == static_cast<long>(t[p]);
      }
      if (ok) go(i + 1);
      val = std::move(saved);
    }
  };
  go(0);
  return out;
}

Carriers Model::sizes() const {
  Carriers c;
  for (const auto& [s, elems] : carriers) c[s] = elems.size();
  return c;
}

std::size_t Model::size(const Sort& s) const {
  auto it = carriers.find(s);
  return it == carriers.end() ? 0 : it->second.size();
}

void check_model(const Theory& th, const Model& m) {
  for (const auto& s : th.sorts) {
    if (!m.carriers.contains(s)) throw SortError("model: no carrier for sort " + s.name);
  }
  for (const auto& [r, tuples] : m.rels) {
    auto it = th.rels.find(r);
    if (it == th.rels.end()) throw SortError("model: unknown relation symbol " + r);
    for (const auto& t : tuples) {
      if (t.size() != it->second.size()) throw SortError("model: tuple of wrong length in " + r);
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] >= m.size(it->second[i])) throw SortError("model: element out of range in " + r);
      }
    }
  }
}

TupleSet model_eval(const Theory& th, const Model& m, const CQNF& nf) {
  (void)th;
  TupleSet out;
  for (const auto& s : nf.floating) {
    if (m.size(s) == 0) return out;
  }
  const auto n = nf.context.size();
  const auto total = nf.node_count();
  // Each atom is checked once all its nodes are assigned: index by the last node.
  std::vector<std::vector<std::size_t>> due(total);
  for (std::size_t a = 0; a < nf.atoms.size(); ++a) {
    const auto& args = nf.atoms[a].second;
    // nodes are assigned in order of index; context nodes that are not block
    // representatives copy their representative and never appear in atoms
    due[args.empty() ? 0 : *std::max_element(args.begin(), args.end())].push_back(a);
  }
  static const TupleSet empty;
  auto holds = [&](std::size_t a, const std::vector<std::size_t>& val) {
    const auto& [r, args] = nf.atoms[a];
    auto it = m.rels.find(r);
    const TupleSet& rel = it == m.rels.end() ? empty : it->second;
    Tuple t;
    for (auto v : args) t.push_back(val[v]);
    return rel.contains(t);
  };
  std::vector<std::size_t> val(total, 0);
  std::vector<std::size_t> nullary;
  if (total == 0) {
    for (std::size_t a = 0; a < nf.atoms.size(); ++a) {
      if (!holds(a, val)) return out;
    }
    out.insert(Tuple{});
    return out;
  }
  for (auto a : due[0]) {
    if (nf.atoms[a].second.empty()) nullary.push_back(a);
  }
  for (auto a : nullary) {
    if (!holds(a, val)) return out;
  }
  // Existential search returns after the first witness.
  std::function<bool(std::size_t)> exist = [&](std::size_t v) -> bool {
    if (v == total) return true;
    const auto size = m.size(nf.node_sort(v));
    for (std::size_t x = 0; x < size; ++x) {
      val[v] = x;
      bool ok = true;
      for (auto a : due[v]) ok = ok && (nf.atoms[a].second.empty() || holds(a, val));
      if (ok && exist(v + 1)) return true;
    }
    return false;
  };
  std::function<void(std::size_t)> free = [&](std::size_t v) {
    if (v == n) {
      if (exist(n)) {
        Tuple t(val.begin(), val.begin() + static_cast<std::ptrdiff_t>(n));
        out.insert(std::move(t));
      }
      return;
    }
    std::size_t rep = v;
    for (std::size_t u = 0; u < v; ++u) {
      if (nf.merge.same_block(u, v)) {
        rep = u;
        break;
      }
    }
    if (rep != v) {
      val[v] = val[rep];
      bool ok = true;
      for (auto a : due[v]) ok = ok && (nf.atoms[a].second.empty() || holds(a, val));
      if (ok) free(v + 1);
      return;
    }
    const auto size = m.size(nf.node_sort(v));
    for (std::size_t x = 0; x < size; ++x) {
      val[v] = x;
      bool ok = true;
      for (auto a : due[v]) ok = ok && (nf.atoms[a].second.empty() || holds(a, val));
      if (ok) free(v + 1);
    }
  };
  free(0);
  return out;
}

TupleSet model_eval(const Theory& th, const Model& m, const Context& ctx, const Formula& phi) {
  return model_eval(th, m, normalize(th, ctx, phi));
}

TupleSet model_eval(const Theory& th, const Model& m, const GraphicalTerm<Formula>& t) {
  return model_eval(th, m, t.out(), term_to_formula(th, t));
}

std::optional<std::string> violated_axiom(const Theory& th, const Model& m) {
  for (const auto& ax : th.axioms) {
    auto l = model_eval(th, m, ax.context, ax.lhs);
    auto r = model_eval(th, m, ax.context, ax.rhs);
    if (!std::includes(r.begin(), r.end(), l.begin(), l.end())) return ax.name;
  }
  return std::nullopt;
}

bool check_axioms(const Theory& th, const Model& m) { return !violated_axiom(th, m).has_value(); }

}  // namespace grl
