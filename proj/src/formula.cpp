#include "grl/formula.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "grl/error.hpp"

namespace grl {

struct Formula::Node {
  Kind kind = Kind::truth;
  std::string rel;
  std::vector<std::size_t> args;
  Sort sort;
  std::vector<Formula> kids;
};

Formula::Formula() {
  static const auto truth = std::make_shared<const Node>();
  node_ = truth;
}

Formula Formula::atom(std::string rel, std::vector<std::size_t> args) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::atom;
  n->rel = std::move(rel);
  n->args = std::move(args);
  return Formula(std::move(n));
}

Formula Formula::eq(std::size_t a, std::size_t b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::eq;
  n->args = {a, b};
  return Formula(std::move(n));
}

Formula Formula::conj(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::conj;
  n->kids = {std::move(a), std::move(b)};
  return Formula(std::move(n));
}

Formula Formula::exists(Sort s, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::exists;
  n->sort = std::move(s);
  n->kids = {std::move(body)};
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::rel() const { return node_->rel; }
const std::vector<std::size_t>& Formula::args() const { return node_->args; }
const Sort& Formula::sort() const { return node_->sort; }

const Formula& Formula::lhs() const { return node_->kids.at(0); }
const Formula& Formula::rhs() const { return node_->kids.at(1); }
const Formula& Formula::body() const { return node_->kids.at(0); }

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  const Node& x = *node_;
  const Node& y = *o.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case Kind::truth: return true;
    case Kind::atom: return x.rel == y.rel && x.args == y.args;
    case Kind::eq: return x.args == y.args;
    case Kind::conj: return lhs() == o.lhs() && rhs() == o.rhs();
    case Kind::exists: return x.sort == y.sort && body() == o.body();
  }
  return false;
}

Formula conj_all(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::truth();
  Formula f = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) f = Formula::conj(*it, f);
  return f;
}

Formula exists_all(const Context& ctx, Formula body) {
  for (auto it = ctx.rbegin(); it != ctx.rend(); ++it) body = Formula::exists(*it, std::move(body));
  return body;
}

namespace {

void print(std::ostream& os, const Formula& f, std::vector<std::string>& env) {
  using K = Formula::Kind;
  auto var = [&](std::size_t i) -> const std::string& {
    if (i >= env.size()) throw ShapeError("formula: variable " + std::to_string(i) + " is unbound");
    return env[i];
  };
  switch (f.kind()) {
    case K::truth: os << "true"; return;
    case K::atom:
      os << f.rel() << "(";
      for (std::size_t i = 0; i < f.args().size(); ++i) os << (i ? "," : "") << var(f.args()[i]);
      os << ")";
      return;
    case K::eq: os << var(f.args()[0]) << "=" << var(f.args()[1]); return;
    case K::conj: {
      bool wrap_l = f.lhs().kind() == K::conj || f.lhs().kind() == K::exists;
      if (wrap_l) os << "(";
      print(os, f.lhs(), env);
      if (wrap_l) os << ")";
      os << " /\\ ";
      bool wrap_r = f.rhs().kind() == K::exists;
      if (wrap_r) os << "(";
      print(os, f.rhs(), env);
      if (wrap_r) os << ")";
      return;
    }
    case K::exists: {
      std::string n = "v" + std::to_string(env.size());
      while (std::find(env.begin(), env.end(), n) != env.end()) n += "_";
      os << "exists " << n << ":" << f.sort().name << ". ";
      env.push_back(n);
      print(os, f.body(), env);
      env.pop_back();
      return;
    }
  }
}

}  // namespace

std::string to_string(const Formula& f, const std::vector<std::string>& names) {
  std::ostringstream os;
  std::vector<std::string> env(names);
  print(os, f, env);
  return os.str();
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string to_string(const Formula& f, std::size_t free_count) { return to_string(f, default_names(free_count)); }

bool Theory::has_sort(const Sort& s) const { return std::find(sorts.begin(), sorts.end(), s) != sorts.end(); }

const Context& Theory::arity(const std::string& rel) const {
  auto it = rels.find(rel);
  if (it == rels.end()) throw SortError("unknown relation symbol " + rel);
  return it->second;
}

void Theory::add_sort(const Sort& s) {
  if (s.name.empty()) throw SortError("empty sort name");
  if (has_sort(s)) throw SortError("duplicate sort " + s.name);
  sorts.push_back(s);
}

void Theory::add_rel(const std::string& rel, Context ar) {
  if (rels.contains(rel)) throw SortError("duplicate relation symbol " + rel);
  for (const auto& s : ar) {
    if (!has_sort(s)) throw SortError("relation " + rel + " uses undeclared sort " + s.name);
  }
  rels.emplace(rel, std::move(ar));
}

void Theory::add_axiom(Sequent s) {
  for (const auto& so : s.context) {
    if (!has_sort(so)) throw SortError("axiom " + s.name + " uses undeclared sort " + so.name);
  }
  check_formula(*this, s.context, s.lhs);
  check_formula(*this, s.context, s.rhs);
  axioms.push_back(std::move(s));
}

namespace {

void check(const Theory& th, Context& env, const Formula& f) {
  auto var = [&](std::size_t i) -> const Sort& {
    if (i >= env.size()) throw SortError("variable index " + std::to_string(i) + " out of scope");
    return env[i];
  };
  switch (f.kind()) {
    case Formula::Kind::truth: return;
    case Formula::Kind::atom: {
      const auto& ar = th.arity(f.rel());
      if (ar.size() != f.args().size()) {
        throw SortError(f.rel() + " expects " + std::to_string(ar.size()) + " arguments, got " +
                        std::to_string(f.args().size()));
      }
      for (std::size_t i = 0; i < ar.size(); ++i) {
        if (var(f.args()[i]) != ar[i]) {
          throw SortError(f.rel() + " argument " + std::to_string(i + 1) + " has sort " + var(f.args()[i]).name +
                          ", expected " + ar[i].name);
        }
      }
      return;
    }
    case Formula::Kind::eq:
      if (var(f.args()[0]) != var(f.args()[1])) throw SortError("equality between different sorts");
      return;
    case Formula::Kind::conj:
      check(th, env, f.lhs());
      check(th, env, f.rhs());
      return;
    case Formula::Kind::exists:
      if (!th.has_sort(f.sort())) throw SortError("undeclared sort " + f.sort().name);
      env.push_back(f.sort());
      check(th, env, f.body());
      env.pop_back();
      return;
  }
}

}  // namespace

void check_formula(const Theory& th, const Context& ctx, const Formula& f) {
  Context env(ctx);
  check(th, env, f);
}

Formula reindex(const Formula& f, std::size_t n_old, const std::vector<std::size_t>& free_map, std::size_t n_new) {
  auto map = [&](std::size_t i) { return i < n_old ? free_map.at(i) : i - n_old + n_new; };
  switch (f.kind()) {
    case Formula::Kind::truth: return f;
    case Formula::Kind::atom: {
      std::vector<std::size_t> args;
      for (auto a : f.args()) args.push_back(map(a));
      return Formula::atom(f.rel(), std::move(args));
    }
    case Formula::Kind::eq: return Formula::eq(map(f.args()[0]), map(f.args()[1]));
    case Formula::Kind::conj:
      return Formula::conj(reindex(f.lhs(), n_old, free_map, n_new), reindex(f.rhs(), n_old, free_map, n_new));
    case Formula::Kind::exists: return Formula::exists(f.sort(), reindex(f.body(), n_old, free_map, n_new));
  }
  return f;
}

namespace {

std::vector<std::size_t> iota(std::size_t n, std::size_t from = 0) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), from);
  return v;
}

}  // namespace

Context act_gen_context(Gen kind, const Context& ctx, const std::optional<Sort>& eta_sort) {
  switch (kind) {
    case Gen::eta: {
      if (!eta_sort) throw ShapeError("act_gen: eta needs the sort of the new variable");
      auto c = ctx;
      c.push_back(*eta_sort);
      return c;
    }
    case Gen::epsilon:
      if (ctx.empty()) throw ShapeError("act_gen: epsilon on the empty context");
      return Context(ctx.begin(), ctx.end() - 1);
    case Gen::mu:
      if (ctx.size() < 2) throw ShapeError("act_gen: mu needs two trailing variables");
      if (ctx[ctx.size() - 1] != ctx[ctx.size() - 2]) throw SortError("act_gen: mu on variables of different sorts");
      return Context(ctx.begin(), ctx.end() - 1);
    case Gen::delta: {
      if (ctx.empty()) throw ShapeError("act_gen: delta on the empty context");
      auto c = ctx;
      c.push_back(ctx.back());
      return c;
    }
    default: throw ShapeError("act_gen: only eta, epsilon, mu and delta act directly; use act_wiring");
  }
}

Formula act_gen(const Theory& th, Gen kind, const Context& ctx, const Formula& phi,
                const std::optional<Sort>& eta_sort) {
  check_formula(th, ctx, phi);
  act_gen_context(kind, ctx, eta_sort);
  const auto n = ctx.size();
  switch (kind) {
    case Gen::eta: return reindex(phi, n, iota(n), n + 1);
    case Gen::epsilon: return Formula::exists(ctx.back(), phi);
    case Gen::mu: {
      auto m = iota(n);
      m[n - 1] = n - 2;
      return reindex(phi, n, m, n - 1);
    }
    case Gen::delta: return Formula::conj(reindex(phi, n, iota(n), n + 1), Formula::eq(n - 1, n));
    default: break;
  }
  throw ShapeError("act_gen: unsupported generator");
}

Formula boxplus(const Theory& th, const Context& c1, const Formula& f1, const Context& c2, const Formula& f2) {
  check_formula(th, c1, f1);
  check_formula(th, c2, f2);
  const auto n1 = c1.size(), n2 = c2.size();
  return Formula::conj(reindex(f1, n1, iota(n1), n1 + n2), reindex(f2, n2, iota(n2, n1), n1 + n2));
}

std::pair<Formula, Formula> lambda_split(const Theory& th, const Context& c1, const Context& c2,
                                         const Formula& gamma) {
  check_formula(th, concat(c1, c2), gamma);
  const auto n1 = c1.size(), n2 = c2.size();
  // In context c2 ⧺ c1 the c1 block sits after c2.
  std::vector<std::size_t> swap;
  for (std::size_t i = 0; i < n1; ++i) swap.push_back(n2 + i);
  for (std::size_t j = 0; j < n2; ++j) swap.push_back(j);
  return {exists_all(c2, gamma), exists_all(c1, reindex(gamma, n1 + n2, swap, n1 + n2))};
}

const Sort& CQNF::node_sort(std::size_t v) const {
  return v < context.size() ? context[v] : exist_vars.at(v - context.size());
}

namespace {

using Atom = std::pair<std::string, std::vector<std::size_t>>;

// Backtracking search for a sort-preserving bijection of existential variables
// carrying a's atom set onto b's.
bool iso_exists(const CQNF& a, const CQNF& b) {
  const auto n = a.context.size();
  const auto k = a.exist_vars.size();
  std::set<Atom> atoms_a(a.atoms.begin(), a.atoms.end());
  std::set<Atom> atoms_b(b.atoms.begin(), b.atoms.end());
  if (atoms_a.size() != atoms_b.size()) return false;
  std::vector<Atom> list(atoms_a.begin(), atoms_a.end());
  // Assign variables in order of first occurrence so atoms close early.
  std::vector<std::size_t> order;
  std::vector<bool> seen(k, false);
  for (const auto& [r, args] : list) {
    for (auto v : args) {
      if (v >= n && !seen[v - n]) {
        seen[v - n] = true;
        order.push_back(v - n);
      }
    }
  }
  if (order.size() != k) return false;
  std::vector<std::size_t> map(k, static_cast<std::size_t>(-1));
  std::vector<bool> used(k, false);
  auto mapped = [&](std::size_t v) { return v < n ? v : (map[v - n] == static_cast<std::size_t>(-1) ? v : n + map[v - n]); };
  auto consistent = [&]() {
    for (const auto& [r, args] : list) {
      Atom img{r, {}};
      bool complete = true;
      for (auto v : args) {
        if (v >= n && map[v - n] == static_cast<std::size_t>(-1)) {
          complete = false;
          break;
        }
        img.second.push_back(mapped(v));
      }
      if (complete && !atoms_b.contains(img)) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == order.size()) return true;
    const auto v = order[i];
    for (std::size_t t = 0; t < k; ++t) {
      if (used[t] || a.exist_vars[v] != b.exist_vars[t]) continue;
      map[v] = t;
      used[t] = true;
      if (consistent() && go(i + 1)) return true;
      used[t] = false;
      map[v] = static_cast<std::size_t>(-1);
    }
    return false;
  };
  return go(0);
}

}  // namespace

bool operator==(const CQNF& a, const CQNF& b) {
  if (a.context != b.context || a.floating != b.floating || a.exist_vars.size() != b.exist_vars.size()) return false;
  const auto n = a.context.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a.merge.same_block(i, j) != b.merge.same_block(i, j)) return false;
    }
  }
  auto sa = a.exist_vars, sb = b.exist_vars;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  return iso_exists(a, b);
}

CQBuilder::CQBuilder(Context ctx) : ctx_(std::move(ctx)), sorts_(ctx_), sets_(ctx_.size()) {}

std::size_t CQBuilder::add_node(const Sort& s) {
  sorts_.push_back(s);
  return sets_.add();
}

void CQBuilder::unite(std::size_t a, std::size_t b) {
  if (sorts_.at(a) != sorts_.at(b)) throw SortError("cannot identify variables of sorts " + sorts_[a].name + " and " + sorts_[b].name);
  sets_.unite(a, b);
}

void CQBuilder::add_atom(std::string rel, std::vector<std::size_t> args) { atoms_.emplace_back(std::move(rel), std::move(args)); }

void CQBuilder::add_floating(const Sort& s) { floating_.insert(s); }

void CQBuilder::embed(const CQNF& phi, const std::vector<std::size_t>& free_nodes) {
  const auto n = phi.context.size();
  if (free_nodes.size() != n) throw ShapeError("embed: wrong number of free nodes");
  std::vector<std::size_t> node(free_nodes);
  for (const auto& s : phi.exist_vars) node.push_back(add_node(s));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (phi.merge.same_block(i, j)) {
        unite(node[i], node[j]);
        break;
      }
    }
  }
  for (const auto& [r, args] : phi.atoms) {
    std::vector<std::size_t> mapped;
    for (auto a : args) mapped.push_back(node[a]);
    add_atom(r, std::move(mapped));
  }
  for (const auto& s : phi.floating) add_floating(s);
}

void CQBuilder::embed(const Formula& phi, const std::vector<std::size_t>& free_nodes) {
  std::vector<std::size_t> env(free_nodes);
  std::function<void(const Formula&)> go = [&](const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::truth: return;
      case Formula::Kind::atom: {
        std::vector<std::size_t> args;
        for (auto a : f.args()) args.push_back(env.at(a));
        add_atom(f.rel(), std::move(args));
        return;
      }
      case Formula::Kind::eq: unite(env.at(f.args()[0]), env.at(f.args()[1])); return;
      case Formula::Kind::conj: go(f.lhs()); go(f.rhs()); return;
      case Formula::Kind::exists:
        env.push_back(add_node(f.sort()));
        go(f.body());
        env.pop_back();
        return;
    }
  };
  go(phi);
}

CQNF CQBuilder::finish() {
  const auto n = ctx_.size();
  const auto total = sorts_.size();
  std::vector<std::size_t> root(total);
  for (std::size_t v = 0; v < total; ++v) root[v] = sets_.find(v);

  CQNF nf;
  nf.context = ctx_;
  // Existential blocks in order of first occurrence among atoms.
  std::vector<std::size_t> renamed(total, static_cast<std::size_t>(-1));
  for (std::size_t v = 0; v < n; ++v) renamed[root[v]] = root[v];
  for (const auto& [r, args] : atoms_) {
    std::vector<std::size_t> mapped;
    for (auto a : args) {
      auto& slot = renamed[root[a]];
      if (slot == static_cast<std::size_t>(-1)) {
        slot = n + nf.exist_vars.size();
        nf.exist_vars.push_back(sorts_[root[a]]);
      }
      mapped.push_back(slot);
    }
    nf.atoms.emplace_back(r, std::move(mapped));
  }
  std::set<Sort> present(ctx_.begin(), ctx_.end());
  present.insert(nf.exist_vars.begin(), nf.exist_vars.end());
  for (std::size_t v = n; v < total; ++v) {
    if (root[v] == v && renamed[v] == static_cast<std::size_t>(-1)) floating_.insert(sorts_[v]);
  }
  for (const auto& s : floating_) {
    if (!present.contains(s)) nf.floating.insert(s);
  }
  std::vector<std::size_t> labels(n + nf.exist_vars.size());
  for (std::size_t v = 0; v < n; ++v) labels[v] = root[v];
  for (std::size_t e = 0; e < nf.exist_vars.size(); ++e) labels[n + e] = n + e;
  nf.merge = Partition::from_labels(labels);
  return nf;
}

CQNF normalize(const Theory& th, const Context& ctx, const Formula& phi) {
  check_formula(th, ctx, phi);
  CQBuilder b(ctx);
  std::vector<std::size_t> free(ctx.size());
  std::iota(free.begin(), free.end(), 0);
  b.embed(phi, free);
  return b.finish();
}

Formula to_formula(const CQNF& nf) {
  const auto n = nf.context.size();
  std::vector<Formula> parts;
  for (const auto& [r, args] : nf.atoms) parts.push_back(Formula::atom(r, args));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (nf.merge.same_block(i, j)) {
        parts.push_back(Formula::eq(j, i));
        break;
      }
    }
  }
  for (const auto& s : nf.floating) parts.push_back(Formula::exists(s, Formula::truth()));
  return exists_all(nf.exist_vars, conj_all(parts));
}

std::string to_string(const CQNF& nf) {
  return to_string(to_formula(nf), nf.context.size()) + " in " + to_string(nf.context);
}

CQNF act_wiring_nf(const Theory& th, const TypedWiring& w, const CQNF& phi) {
  (void)th;
  if (w.shell_count() != 1) throw ShapeError("act_wiring: expected a one-shell wiring");
  if (w.shells()[0] != phi.context) {
    throw ShapeError("act_wiring: formula context " + to_string(phi.context) + " does not match shell " +
                     to_string(w.shells()[0]));
  }
  const auto k = w.shells()[0].size();
  CQBuilder b(w.out());
  std::vector<std::size_t> shell_nodes;
  for (const auto& s : w.shells()[0]) shell_nodes.push_back(b.add_node(s));
  auto node_of = [&](std::size_t port) { return port < k ? shell_nodes[port] : port - k; };
  std::vector<std::size_t> first(w.blocks().block_count(), static_cast<std::size_t>(-1));
  for (std::size_t p = 0; p < w.port_count(); ++p) {
    auto& f = first[w.blocks().block_of(p)];
    if (f == static_cast<std::size_t>(-1)) f = node_of(p); else b.unite(f, node_of(p));
  }
  for (const auto& s : w.floating()) b.add_floating(s);
  b.embed(phi, shell_nodes);
  return b.finish();
}

Formula act_wiring(const Theory& th, const TypedWiring& w, const Formula& phi) {
  if (w.shell_count() != 1) throw ShapeError("act_wiring: expected a one-shell wiring");
  try {
    check_formula(th, w.shells()[0], phi);
  } catch (const SortError& e) {
    throw ShapeError(std::string("act_wiring: formula does not fit shell context: ") + e.what());
  }
  return to_formula(act_wiring_nf(th, w, normalize(th, w.shells()[0], phi)));
}

}  // namespace grl
