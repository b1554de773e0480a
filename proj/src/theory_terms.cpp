#include "grl/theory_terms.hpp"

#include "grl/error.hpp"

namespace grl {

Formula term_to_formula_raw(const Theory& th, const FormulaTerm& t) {
  const auto& w = t.wiring;
  const auto m = w.out().size();
  for (std::size_t i = 0; i < t.preds.size(); ++i) check_formula(th, t.shell(i), t.preds[i]);

  // Levels: out variables, then one per block, then each shell's variables.
  const auto block_sorts = w.block_sorts();
  Context binders(block_sorts.begin(), block_sorts.end());
  for (const auto& ctx : w.shells()) binders.insert(binders.end(), ctx.begin(), ctx.end());
  const auto total = m + binders.size();
  auto block_var = [&](std::size_t port) { return m + w.blocks().block_of(port); };

  std::vector<Formula> parts;
  for (std::size_t j = 0; j < m; ++j) parts.push_back(Formula::eq(j, block_var(w.out_offset() + j)));
  std::size_t level = m + block_sorts.size();
  for (std::size_t i = 0; i < t.preds.size(); ++i) {
    const auto& ctx = t.shell(i);
    std::vector<std::size_t> map;
    for (std::size_t k = 0; k < ctx.size(); ++k) {
      map.push_back(level + k);
      parts.push_back(Formula::eq(level + k, block_var(w.shell_offset(i) + k)));
    }
    parts.push_back(reindex(t.preds[i], ctx.size(), map, total));
    level += ctx.size();
  }
  for (const auto& s : w.floating()) parts.push_back(Formula::exists(s, Formula::truth()));
  return exists_all(binders, conj_all(parts));
}

Formula term_to_formula(const Theory& th, const FormulaTerm& t) {
  return to_formula(normalize(th, t.out(), term_to_formula_raw(th, t)));
}

FormulaTerm formula_to_term(const Theory& th, const Context& ctx, const Formula& phi) {
  const auto nf = normalize(th, ctx, phi);
  const auto n = ctx.size();
  std::vector<Formula> preds;
  std::vector<Context> shells;
  std::vector<std::size_t> labels;  // by node block; existential nodes are their own block
  auto node_label = [&](std::size_t v) { return nf.merge.block_of(v); };
  for (const auto& [r, args] : nf.atoms) {
    Context shell;
    std::vector<std::size_t> vars;
    for (std::size_t k = 0; k < args.size(); ++k) {
      shell.push_back(nf.node_sort(args[k]));
      vars.push_back(k);
      labels.push_back(node_label(args[k]));
    }
    shells.push_back(shell);
    preds.push_back(Formula::atom(r, vars));
  }
  for (std::size_t j = 0; j < n; ++j) labels.push_back(node_label(j));
  TypedWiring w(std::move(shells), ctx, Partition::from_labels(labels), nf.floating);
  return FormulaTerm(std::move(preds), std::move(w));
}

}  // namespace grl
