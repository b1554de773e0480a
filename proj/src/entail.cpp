#include "grl/entail.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "grl/error.hpp"
#include "grl/partition.hpp"

namespace grl {

CanonicalStructure canonical_structure(const CQNF& nf) {
  CanonicalStructure cs;
  const auto n = nf.context.size();
  std::vector<std::size_t> elem(nf.node_count(), 0);
  std::map<std::size_t, std::size_t> of_block;
  for (std::size_t j = 0; j < n; ++j) {
    auto b = nf.merge.block_of(j);
    auto [it, fresh] = of_block.emplace(b, cs.sorts.size());
    if (fresh) cs.sorts.push_back(nf.context[j]);
    elem[j] = it->second;
    cs.distinguished.push_back(it->second);
  }
  for (std::size_t k = 0; k < nf.exist_vars.size(); ++k) {
    elem[n + k] = cs.sorts.size();
    cs.sorts.push_back(nf.exist_vars[k]);
  }
  for (const auto& s : nf.floating) cs.sorts.push_back(s);
  for (const auto& [r, args] : nf.atoms) {
    Tuple t;
    for (auto v : args) t.push_back(elem[v]);
    cs.facts.emplace(r, std::move(t));
  }
  return cs;
}

CanonicalStructure canonical_structure(const Theory& th, const FormulaTerm& t) {
  return canonical_structure(normalize(th, t.out(), term_to_formula(th, t)));
}

std::optional<std::vector<std::size_t>> find_homomorphism(const CanonicalStructure& from,
                                                          const CanonicalStructure& to, const Tuple& image) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  if (image.size() != from.distinguished.size()) throw ShapeError("find_homomorphism: image arity mismatch");
  std::vector<std::size_t> h(from.size(), unset);
  for (std::size_t i = 0; i < image.size(); ++i) {
    auto e = from.distinguished[i];
    if (image[i] >= to.size() || to.sorts[image[i]] != from.sorts[e]) return std::nullopt;
    if (h[e] != unset && h[e] != image[i]) return std::nullopt;
    h[e] = image[i];
  }

  // Greedy order: next is the free element sharing most facts with those placed.
  std::vector<std::vector<const Fact*>> touching(from.size());
  for (const auto& f : from.facts) {
    for (auto e : f.second) {
      if (touching[e].empty() || touching[e].back() != &f) touching[e].push_back(&f);
    }
  }
  std::vector<std::size_t> order;
  std::vector<bool> placed(from.size(), false);
  for (std::size_t e = 0; e < from.size(); ++e) placed[e] = h[e] != unset;
  for (;;) {
    std::size_t best = unset, best_score = 0;
    for (std::size_t e = 0; e < from.size(); ++e) {
      if (placed[e]) continue;
      std::size_t score = 1;
      for (const auto* f : touching[e]) {
        for (auto x : f->second) score += placed[x] ? 2 : 0;
        score += 1;
      }
      if (best == unset || score > best_score) best = e, best_score = score;
    }
    if (best == unset) break;
    placed[best] = true;
    order.push_back(best);
  }

  // A fact is checked at the step where its last element is assigned.
  std::vector<std::size_t> step(from.size(), 0);
  for (std::size_t k = 0; k < order.size(); ++k) step[order[k]] = k + 1;
  std::vector<std::vector<const Fact*>> due(order.size() + 1);
  for (const auto& f : from.facts) {
    std::size_t last = 0;
    for (auto e : f.second) last = std::max(last, step[e]);
    due[last].push_back(&f);
  }
  auto facts_ok = [&](std::size_t k) {
    for (const auto* f : due[k]) {
      Tuple t;
      for (auto e : f->second) t.push_back(h[e]);
      if (!to.facts.contains({f->first, t})) return false;
    }
    return true;
  };
  if (!facts_ok(0)) return std::nullopt;

  std::map<Sort, std::vector<std::size_t>> by_sort;
  for (std::size_t e = 0; e < to.size(); ++e) by_sort[to.sorts[e]].push_back(e);
  static const std::vector<std::size_t> none;
  auto candidates = [&](std::size_t e) -> const std::vector<std::size_t>& {
    auto it = by_sort.find(from.sorts[e]);
    return it == by_sort.end() ? none : it->second;
  };

  std::vector<std::size_t> pos(order.size(), 0);
  std::size_t k = 0;
  while (true) {
    if (k == order.size()) return h;
    auto e = order[k];
    const auto& cand = candidates(e);
    bool advanced = false;
    while (pos[k] < cand.size()) {
      h[e] = cand[pos[k]++];
      if (facts_ok(k + 1)) {
        advanced = true;
        break;
      }
    }
    if (advanced) {
      ++k;
      continue;
    }
    h[e] = unset;
    pos[k] = 0;
    if (k == 0) return std::nullopt;
    --k;
  }
}

bool entails_free(const Theory& th, const Context& ctx, const Formula& phi, const Formula& psi) {
  auto a = canonical_structure(normalize(th, ctx, phi));
  auto b = canonical_structure(normalize(th, ctx, psi));
  return find_homomorphism(b, a, a.distinguished).has_value();
}

bool entails_free(const Theory& th, const FormulaTerm& t, const FormulaTerm& u) {
  if (t.out() != u.out()) throw ShapeError("entails_free: terms have different outer contexts");
  auto a = canonical_structure(th, t);
  auto b = canonical_structure(th, u);
  return find_homomorphism(b, a, a.distinguished).has_value();
}

const char* to_string(EntailResult::Status s) {
  switch (s) {
    case EntailResult::Status::proved: return "proved";
    case EntailResult::Status::refuted: return "refuted";
    case EntailResult::Status::unknown: return "unknown";
  }
  return "?";
}

namespace {

// A structure under construction: elements are merged by union-find, facts are
// kept on whatever ids they were added with and canonicalized on snapshot.
class ChaseState {
 public:
  explicit ChaseState(const CanonicalStructure& cs) : sorts_(cs.sorts), uf_(cs.size()), facts_(cs.facts) {
    distinguished_ = cs.distinguished;
  }

  std::size_t live_size() {
    std::size_t n = 0;
    for (std::size_t e = 0; e < sorts_.size(); ++e) n += uf_.find(e) == e;
    return n;
  }

  // Compacted copy; `ids` maps each raw id to its compact element.
  CanonicalStructure snapshot(std::vector<std::size_t>& ids) {
    CanonicalStructure cs;
    ids.assign(sorts_.size(), 0);
    for (std::size_t e = 0; e < sorts_.size(); ++e) {
      if (uf_.find(e) == e) {
        ids[e] = cs.sorts.size();
        cs.sorts.push_back(sorts_[e]);
      }
    }
    for (std::size_t e = 0; e < sorts_.size(); ++e) ids[e] = ids[uf_.find(e)];
    std::set<Fact> canon;
    for (const auto& [r, args] : facts_) {
      Tuple t;
      for (auto e : args) t.push_back(ids[e]);
      cs.facts.emplace(r, t);
      Tuple raw;
      for (auto e : args) raw.push_back(uf_.find(e));
      canon.emplace(r, std::move(raw));
    }
    facts_ = std::move(canon);
    for (auto e : distinguished_) cs.distinguished.push_back(ids[e]);
    return cs;
  }

  // Adds rhs's structure with its distinguished elements sent to `at` (compact
  // ids, translated back through `rev`).
  bool add(const CanonicalStructure& rhs, const Tuple& at, const std::vector<std::size_t>& rev) {
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> m(rhs.size(), unset);
    bool merged = false;
    for (std::size_t i = 0; i < at.size(); ++i) {
      auto e = rhs.distinguished[i];
      auto target = rev[at[i]];
      if (m[e] == unset) {
        m[e] = target;
      } else {
        merged |= uf_.unite(m[e], target);
      }
    }
    for (std::size_t e = 0; e < rhs.size(); ++e) {
      if (m[e] == unset) {
        m[e] = uf_.add();
        sorts_.push_back(rhs.sorts[e]);
      }
    }
    for (const auto& [r, args] : rhs.facts) {
      Tuple t;
      for (auto e : args) t.push_back(m[e]);
      facts_.emplace(r, std::move(t));
    }
    return merged;
  }

 private:
  std::vector<Sort> sorts_;
  DisjointSets uf_;
  std::set<Fact> facts_;
  Tuple distinguished_;
};

struct Rule {
  CanonicalStructure lhs, rhs;
};

// All homomorphisms of `from` into `to`, distinguished elements unconstrained.
// Returned as images of from.distinguished, deduplicated.
std::set<Tuple> matches(const CanonicalStructure& from, const CanonicalStructure& to) {
  std::set<Tuple> out;
  // Enumerate images of the distinguished tuple, then ask for an extension.
  std::vector<std::size_t> firsts;  // distinct distinguished elements in order
  for (auto e : from.distinguished) {
    if (std::find(firsts.begin(), firsts.end(), e) == firsts.end()) firsts.push_back(e);
  }
  std::map<Sort, std::vector<std::size_t>> by_sort;
  for (std::size_t e = 0; e < to.size(); ++e) by_sort[to.sorts[e]].push_back(e);
  std::vector<std::size_t> pick(firsts.size(), 0);
  std::map<std::size_t, std::size_t> img;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == firsts.size()) {
      Tuple image;
      for (auto e : from.distinguished) image.push_back(img[e]);
      if (find_homomorphism(from, to, image)) out.insert(image);
      return;
    }
    for (auto c : by_sort[from.sorts[firsts[k]]]) {
      img[firsts[k]] = c;
      go(k + 1);
    }
  };
  go(0);
  return out;
}

Model to_model(const Theory& th, const CanonicalStructure& cs) {
  Model m;
  for (const auto& s : th.sorts) m.carriers[s];
  std::vector<std::size_t> local(cs.size());
  for (std::size_t e = 0; e < cs.size(); ++e) {
    auto& names = m.carriers[cs.sorts[e]];
    local[e] = names.size();
    names.push_back("e" + std::to_string(e));
  }
  for (const auto& [r, _] : th.rels) m.rels[r];
  for (const auto& [r, args] : cs.facts) {
    Tuple t;
    for (auto e : args) t.push_back(local[e]);
    m.rels[r].insert(std::move(t));
  }
  return m;
}

Tuple localize(const CanonicalStructure& cs, const Tuple& t) {
  Tuple out;
  for (auto e : t) {
    std::size_t k = 0;
    for (std::size_t x = 0; x < e; ++x) k += cs.sorts[x] == cs.sorts[e];
    out.push_back(k);
  }
  return out;
}

}  // namespace

EntailResult entails_with_axioms(const Theory& th, const Context& ctx, const Formula& phi, const Formula& psi,
                                 const ChaseBudget& budget) {
  EntailResult res;
  const auto phi_nf = normalize(th, ctx, phi);
  const auto goal = canonical_structure(normalize(th, ctx, psi));
  std::vector<Rule> rules;
  for (const auto& ax : th.axioms) {
    rules.push_back({canonical_structure(normalize(th, ax.context, ax.lhs)),
                     canonical_structure(normalize(th, ax.context, ax.rhs))});
  }

  ChaseState state(canonical_structure(phi_nf));
  std::vector<std::size_t> ids;
  bool fixpoint = false;
  for (std::size_t round = 0;; ++round) {
    auto cs = state.snapshot(ids);
    if (find_homomorphism(goal, cs, cs.distinguished)) {
      res.status = EntailResult::Status::proved;
      res.rounds = round;
      return res;
    }
    if (round == budget.depth || state.live_size() > budget.max_elements) break;

    // Restricted chase: a trigger fires only if its conclusion is not already
    // witnessed in the current structure.
    bool changed = false;
    std::vector<std::size_t> raw_of(cs.size());
    for (std::size_t raw = ids.size(); raw-- > 0;) raw_of[ids[raw]] = raw;
    for (const auto& rule : rules) {
      for (const auto& at : matches(rule.lhs, cs)) {
        std::vector<std::size_t> now_ids;
        auto now = state.snapshot(now_ids);
        // Translate the match into the current structure's compact ids.
        std::vector<std::size_t> rev(now.size());
        for (std::size_t raw = now_ids.size(); raw-- > 0;) rev[now_ids[raw]] = raw;
        Tuple here;
        for (auto c : at) here.push_back(now_ids[raw_of[c]]);
        if (find_homomorphism(rule.rhs, now, here)) continue;
        state.add(rule.rhs, here, rev);
        changed = true;
      }
    }
    res.rounds = round + 1;
    if (!changed) {
      fixpoint = true;
      break;
    }
  }

  if (fixpoint) {
    // The saturated structure is a model of the axioms in which phi holds at
    // the distinguished tuple and psi does not.
    auto cs = state.snapshot(ids);
    std::size_t largest = 0;
    std::map<Sort, std::size_t> count;
    for (const auto& s : cs.sorts) largest = std::max(largest, ++count[s]);
    auto m = to_model(th, cs);
    auto w = localize(cs, cs.distinguished);
    if (largest <= budget.model_size && check_axioms(th, m) && !model_eval(th, m, ctx, psi).contains(w)) {
      res.status = EntailResult::Status::refuted;
      res.countermodel = std::move(m);
      res.witness = std::move(w);
      return res;
    }
  }
  if (auto found = find_countermodel(th, ctx, phi, psi, budget.model_size)) {
    res.status = EntailResult::Status::refuted;
    res.countermodel = std::move(found->first);
    res.witness = std::move(found->second);
    return res;
  }
  res.status = EntailResult::Status::unknown;
  return res;
}

EntailResult entails_with_axioms(const Theory& th, const FormulaTerm& t, const FormulaTerm& u,
                                 const ChaseBudget& budget) {
  if (t.out() != u.out()) throw ShapeError("entails_with_axioms: terms have different outer contexts");
  return entails_with_axioms(th, t.out(), term_to_formula(th, t), term_to_formula(th, u), budget);
}

std::optional<std::pair<Model, Tuple>> find_countermodel(const Theory& th, const Context& ctx, const Formula& phi,
                                                         const Formula& psi, std::size_t model_size) {
  constexpr std::size_t max_bits = 20;
  constexpr std::size_t max_models = std::size_t{1} << 21;
  const auto phi_nf = normalize(th, ctx, phi);
  const auto psi_nf = normalize(th, ctx, psi);
  const auto k = th.sorts.size();

  // Carrier size vectors, smallest total first.
  std::vector<std::vector<std::size_t>> shapes;
  std::vector<std::size_t> v(k, 0);
  for (;;) {
    shapes.push_back(v);
    std::size_t i = 0;
    while (i < k && v[i] == model_size) v[i++] = 0;
    if (i == k) break;
    ++v[i];
  }
  std::stable_sort(shapes.begin(), shapes.end(), [](const auto& a, const auto& b) {
    std::size_t sa = 0, sb = 0;
    for (auto x : a) sa += x;
    for (auto x : b) sb += x;
    return sa < sb;
  });

  std::size_t tried = 0;
  for (const auto& shape : shapes) {
    Model m;
    Carriers sizes;
    for (std::size_t i = 0; i < k; ++i) {
      auto& names = m.carriers[th.sorts[i]];
      for (std::size_t e = 0; e < shape[i]; ++e) names.push_back(th.sorts[i].name + std::to_string(e));
      sizes[th.sorts[i]] = shape[i];
    }
    std::vector<std::pair<std::string, std::vector<Tuple>>> slots;
    std::size_t bits = 0;
    for (const auto& [r, ar] : th.rels) {
      auto all = all_tuples(ar, sizes);
      bits += all.size();
      slots.emplace_back(r, std::vector<Tuple>(all.begin(), all.end()));
    }
    if (bits > max_bits) continue;
    for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
      if (++tried > max_models) return std::nullopt;
      std::size_t b = 0;
      for (const auto& [r, tuples] : slots) {
        auto& rel = m.rels[r];
        rel.clear();
        for (const auto& t : tuples) {
          if (mask >> b++ & 1) rel.insert(t);
        }
      }
      if (!check_axioms(th, m)) continue;
      auto l = model_eval(th, m, phi_nf);
      if (l.empty()) continue;
      auto r = model_eval(th, m, psi_nf);
      for (const auto& t : l) {
        if (!r.contains(t)) return std::make_pair(m, t);
      }
    }
  }
  return std::nullopt;
}

Verdict TheoryCalculus::leq(const Context& ctx, const Formula& a, const Formula& b) const {
  if (th_.axioms.empty()) return entails_free(th_, ctx, a, b) ? Verdict::yes : Verdict::no;
  switch (entails_with_axioms(th_, ctx, a, b, budget_).status) {
    case EntailResult::Status::proved: return Verdict::yes;
    case EntailResult::Status::refuted: return Verdict::no;
    case EntailResult::Status::unknown: return Verdict::unknown;
  }
  return Verdict::unknown;
}

Formula TheoryCalculus::apply(const TypedWiring& w, const Formula& p) const { return act_wiring(th_, w, p); }

Formula TheoryCalculus::boxplus(const Context& c1, const Formula& a, const Context& c2, const Formula& b) const {
  return grl::boxplus(th_, c1, a, c2, b);
}

Formula TheoryCalculus::truth(const Context&) const { return Formula::truth(); }

std::pair<Formula, Formula> TheoryCalculus::lambda_split(const Context& c1, const Context& c2,
                                                         const Formula& g) const {
  return grl::lambda_split(th_, c1, c2, g);
}

std::string TheoryCalculus::show(const Context& ctx, const Formula& p) const { return to_string(p, ctx.size()); }

}  // namespace grl
