#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "grl/dsl.hpp"
#include "grl/entail.hpp"
#include "grl/error.hpp"
#include "grl/io.hpp"
#include "grl/laws.hpp"
#include "grl/render.hpp"
#include "grl/syn.hpp"

namespace grl::cli {

namespace {

struct InputError : Error {
  using Error::Error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool is_file(const std::string& arg) {
  std::error_code ec;
  return arg == "-" || std::filesystem::is_regular_file(arg, ec);
}

// A JSON argument is a file name or inline JSON text.
Json read_json(const std::string& arg) { return Json::parse(is_file(arg) ? slurp(arg) : arg); }

// A formula argument is "[x:X,...] phi", inline or in a file.
ScopedFormula read_formula(const Theory& th, const std::string& arg) {
  return parse_scoped_formula(th, is_file(arg) ? slurp(arg) : arg);
}

bool looks_like_json(const std::string& arg) {
  auto text = is_file(arg) ? slurp(arg) : arg;
  auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{';
}

// Either a term in JSON or a scoped formula; both become a term.
FormulaTerm read_term_or_formula(const Theory& th, const std::string& arg) {
  if (looks_like_json(arg)) return term_from_json(th, read_json(arg));
  auto f = read_formula(th, arg);
  return atomic_term(f.context, f.formula);
}

std::string scoped(const Context& ctx, const Formula& f) {
  return to_string(ScopedFormula{ctx, default_names(ctx.size()), f});
}

std::size_t law_scale(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("GRL_LAW_SCALE")) {
    try {
      return std::stoul(env);
    } catch (const std::exception&) {
      throw InputError(std::string("GRL_LAW_SCALE is not a number: ") + env);
    }
  }
  return 2;
}

Json morphism_json(const Context& src, const Formula& sp, const Context& dst, const Formula& dp,
                   const Formula& theta, Verdict cert) {
  Json j;
  j["src"] = scoped(src, sp);
  j["dst"] = scoped(dst, dp);
  j["theta"] = scoped(concat(src, dst), theta);
  j["certificate"] = to_string(cert);
  return j;
}

SynMorphism<Formula> read_morphism(const TheoryCalculus& calc, const std::string& arg, bool unchecked) {
  const auto j = read_json(arg);
  auto text = [&](const char* key) {
    if (!j.contains(key) || !j.at(key).is_string()) throw InputError(std::string("morphism needs a \"") + key + "\" formula");
    return parse_scoped_formula(calc.theory(), j.at(key).get<std::string>());
  };
  auto src = text("src"), dst = text("dst"), theta = text("theta");
  if (theta.context != concat(src.context, dst.context)) {
    throw InputError("morphism theta must live on the source context followed by the target context");
  }
  return syn_morphism<Formula>(calc, {src.context, src.formula}, {dst.context, dst.formula}, theta.formula, unchecked);
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  void emit(const Json& j, const std::string& human) {
    if (json_) out_ << j.dump() << "\n";
    else out_ << human << (human.empty() || human.back() == '\n' ? "" : "\n");
  }
  void emit(const Json& j) { emit(j, j.dump(2)); }

  Theory theory() const { return theory_file_.empty() ? Theory{} : parse_theory(slurp(theory_file_)); }
  ChaseBudget budget() const {
    ChaseBudget b;
    if (depth_) b.depth = *depth_;
    if (model_size_) b.model_size = *model_size_;
    return b;
  }

  int wd(const std::string& op);
  int theory_check();
  int term(const std::string& op);
  int entail();
  int model(const std::string& op);
  int syn(const std::string& op);
  int laws();

  std::ostream& out_;
  std::ostream& err_;
  bool json_ = false;
  std::uint64_t seed_ = 1;
  std::string theory_file_;
  std::optional<std::size_t> depth_, model_size_, scale_;
  std::vector<std::string> operands_;
  std::size_t shell_ = 0, i_ = 0, j_ = 0;
  std::string rule_ = "discard", pred_, wiring_, inner_, model_file_, kind_;
  bool unchecked_ = false;
};

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"Graphical regular logic: wiring diagrams, theories, entailment and models", "grl"};
  app.require_subcommand(1);
  app.add_flag("--json", json_, "machine-readable output");
  app.add_option("--seed", seed_, "seed for randomized checks");
  app.add_option("--theory", theory_file_, "theory source file");

  // Common flags are accepted before the verb or anywhere after it.
  auto common = [&](CLI::App* a) {
    a->add_flag("--json", json_, "machine-readable output");
    a->add_option("--seed", seed_, "seed for randomized checks");
    a->add_option("--theory", theory_file_, "theory source file");
  };
  std::string verb, op;
  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help, std::size_t min, std::size_t max) {
    auto* s = parent->add_subcommand(name, help);
    common(s);
    s->add_option("operands", operands_)->expected(static_cast<int>(min), static_cast<int>(max));
    if (min > 0) s->get_option("operands")->required();
    s->callback([&, name, parent] {
      verb = parent->get_name();
      op = name;
    });
    return s;
  };

  auto* wd = app.add_subcommand("wd", "wiring diagrams")->require_subcommand(1);
  sub(wd, "canon", "canonical form of a wiring", 1, 1);
  sub(wd, "compose", "substitute the second wiring into a shell of the first", 2, 2)
      ->add_option("--shell", shell_, "shell of the outer wiring");
  sub(wd, "tensor", "juxtapose two wirings", 2, 2);
  sub(wd, "leq", "order of wirings (exit 0 when below)", 2, 2);
  sub(wd, "render", "Graphviz DOT for a wiring or term", 1, 1);

  auto* th = app.add_subcommand("theory", "theories")->require_subcommand(1);
  sub(th, "check", "parse and summarize a theory", 1, 1);

  auto* term = app.add_subcommand("term", "graphical terms")->require_subcommand(1);
  sub(term, "of-formula", "the term of a formula", 1, 1);
  sub(term, "to-formula", "the normalized formula of a term", 1, 1);
  sub(term, "represent", "representation in the theory, or in a model", 1, 1)
      ->add_option("--model", model_file_, "evaluate in this model instead");
  auto* rw = sub(term, "rewrite", "apply one rewrite rule", 1, 1);
  rw->add_option("--rule", rule_, "monotone|break|nest|meet-merge|remove-true|discard")
      ->check(CLI::IsMember({"monotone", "break", "nest", "meet-merge", "remove-true", "discard"}));
  rw->add_option("--i", i_, "shell the rule acts on");
  rw->add_option("--j", j_, "second shell for meet-merge");
  rw->add_option("--pred", pred_, "weaker predicate for monotone");
  rw->add_option("--wiring", wiring_, "broken wiring for break");
  rw->add_option("--inner", inner_, "inner term for nest");

  auto* ent = app.add_subcommand("entail", "decide lhs |- rhs");
  common(ent);
  ent->add_option("operands", operands_, "lhs and rhs: terms or formulas")->expected(2)->required();
  ent->add_option("--chase-depth", depth_, "chase rounds");
  ent->add_option("--model-size", model_size_, "largest carrier searched for countermodels");
  ent->callback([&] { verb = "entail"; });

  auto* model = app.add_subcommand("model", "finite models")->require_subcommand(1);
  sub(model, "eval", "extension of a formula or term", 2, 2);
  sub(model, "check-axioms", "whether a model satisfies the theory", 1, 1);

  auto* syn = app.add_subcommand("syn", "syntactic category of a theory")->require_subcommand(1);
  for (auto* s : {sub(syn, "id", "identity on an object", 1, 1), sub(syn, "compose", "composite of two morphisms", 2, 2),
                  sub(syn, "supply", "a supplied morphism on an object", 1, 1)}) {
    s->add_flag("--unchecked", unchecked_, "admit morphisms whose hom condition is undecided");
  }
  syn->get_subcommand("supply")
      ->add_option("--kind", kind_, "epsilon|delta|eta|mu")
      ->required()
      ->check(CLI::IsMember({"epsilon", "delta", "eta", "mu"}));
  sub(syn, "laws", "syntactic category laws in Prd(Rel)", 0, 0)->add_option("--scale", scale_, "carrier size cap");

  auto* lw = app.add_subcommand("laws", "executable law suites")->require_subcommand(1);
  sub(lw, "run", "run one suite, or all", 0, 1)->add_option("--scale", scale_, "exhaustive size cap");


  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out_ << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err_ << "grl: " << e.what() << "\n";
    return input_error;
  }

  try {
    if (verb == "wd") return this->wd(op);
    if (verb == "theory") return theory_check();
    if (verb == "term") return this->term(op);
    if (verb == "entail") return entail();
    if (verb == "model") return this->model(op);
    if (verb == "syn") return this->syn(op);
    if (verb == "laws") return laws();
    err_ << "grl: no command\n";
    return input_error;
  } catch (const ParseError& e) {
    err_ << "grl: parse error at " << e.what() << "\n";
  } catch (const Json::exception& e) {
    err_ << "grl: bad json: " << e.what() << "\n";
  } catch (const Error& e) {
    err_ << "grl: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err_ << "grl: " << e.what() << "\n";
  }
  return input_error;
}

int Runner::wd(const std::string& op) {
  const auto& a = operands_;
  if (op == "canon") {
    emit(wiring_to_json(wiring_from_json_loose(read_json(a[0]))));
    return ok;
  }
  if (op == "render") {
    const auto j = read_json(a[0]);
    auto dot = j.contains("preds") ? render_dot(term_from_json(theory(), j)) : render_dot(wiring_from_json(j));
    if (json_) out_ << Json{{"dot", dot}}.dump() << "\n";
    else out_ << dot;
    return ok;
  }
  const auto w1 = wiring_from_json(read_json(a[0]));
  const auto w2 = wiring_from_json(read_json(a[1]));
  if (op == "compose") {
    if (shell_ >= w1.shell_count()) throw InputError("wd compose: no shell " + std::to_string(shell_));
    emit(wiring_to_json(compose_at(w1, shell_, w2)));
    return ok;
  }
  if (op == "tensor") {
    emit(wiring_to_json(tensor_t(w1, w2)));
    return ok;
  }
  if (w1.shells() != w2.shells() || w1.out() != w2.out()) throw InputError("wd leq: wirings have different boundaries");
  const bool below = leq_t(w1, w2);
  emit(Json{{"leq", below}}, below ? "true" : "false");
  return below ? ok : refuted;
}

int Runner::theory_check() {
  const auto th = parse_theory(slurp(operands_[0]));
  Json j;
  j["name"] = th.name;
  j["sorts"] = Json::array();
  for (const auto& s : th.sorts) j["sorts"].push_back(s.name);
  j["rels"] = Json::object();
  for (const auto& [r, ar] : th.rels) {
    j["rels"][r] = Json::array();
    for (const auto& s : ar) j["rels"][r].push_back(s.name);
  }
  j["axioms"] = Json::array();
  for (const auto& ax : th.axioms) j["axioms"].push_back(ax.name);
  std::ostringstream human;
  human << "theory " << th.name << ": " << th.sorts.size() << " sorts, " << th.rels.size() << " relations, "
        << th.axioms.size() << " axioms\n"
        << to_source(th);
  emit(j, human.str());
  return ok;
}

int Runner::term(const std::string& op) {
  const auto th = theory();
  const auto& arg = operands_[0];
  if (op == "of-formula") {
    const auto f = read_formula(th, arg);
    emit(term_to_json(formula_to_term(th, f.context, f.formula)));
    return ok;
  }
  const auto t = read_term_or_formula(th, arg);
  if (op == "to-formula") {
    const auto text = scoped(t.out(), term_to_formula(th, t));
    emit(Json{{"formula", text}}, text);
    return ok;
  }
  if (op == "represent") {
    if (!model_file_.empty()) {
      const auto m = model_from_json(th, read_json(model_file_));
      PrdCalculus calc(m.sizes());
      std::vector<TupleSet> preds;
      for (std::size_t s = 0; s < t.preds.size(); ++s) preds.push_back(model_eval(th, m, t.shell(s), t.preds[s]));
      const auto ext = represent(calc, GraphicalTerm<TupleSet>(preds, t.wiring));
      const auto rows = tuples_to_json(m, t.out(), ext);
      emit(Json{{"tuples", rows}}, rows.dump());
      return ok;
    }
    TheoryCalculus calc(th, budget());
    const auto text = scoped(t.out(), represent(calc, t));
    emit(Json{{"formula", text}}, text);
    return ok;
  }
  // rewrite
  TheoryCalculus calc(th, budget());
  RewriteRule<Formula> r;
  using K = RewriteRule<Formula>::Kind;
  static const std::map<std::string, K> kinds{{"monotone", K::monotone},     {"break", K::break_wires},
                                              {"nest", K::nest},             {"meet-merge", K::meet_merge},
                                              {"remove-true", K::remove_true}, {"discard", K::discard}};
  r.kind = kinds.at(rule_);
  r.i = i_;
  r.j = j_;
  if (!pred_.empty()) {
    auto f = read_formula(th, pred_);
    if (i_ >= t.preds.size() || f.context != t.shell(i_)) throw InputError("rewrite: --pred must live on the shell's context");
    r.pred = f.formula;
  }
  if (!wiring_.empty()) r.wiring = wiring_from_json(read_json(wiring_));
  if (!inner_.empty()) r.inner = read_term_or_formula(th, inner_);
  const auto result = rewrite(calc, r, t);
  Json j{{"relation", to_string(result.relation)}, {"term", term_to_json(result.term)}};
  emit(j, std::string(to_string(result.relation)) + "\n" + j["term"].dump(2));
  return ok;
}

int Runner::entail() {
  const auto th = theory();
  const auto lhs = read_term_or_formula(th, operands_[0]);
  const auto rhs = read_term_or_formula(th, operands_[1]);
  if (lhs.out() != rhs.out()) throw InputError("entail: the two sides have different contexts");
  const auto r = entails_with_axioms(th, lhs, rhs, budget());
  Json j{{"verdict", to_string(r.status)}, {"rounds", r.rounds}};
  std::string human = to_string(r.status);
  if (r.countermodel) {
    j["countermodel"] = model_to_json(th, *r.countermodel);
    j["witness"] = tuples_to_json(*r.countermodel, lhs.out(), {*r.witness})[0];
    human += "\ncountermodel " + j["countermodel"].dump() + "\nwitness " + j["witness"].dump();
  }
  emit(j, human);
  switch (r.status) {
    case EntailResult::Status::proved: return ok;
    case EntailResult::Status::refuted: return refuted;
    default: return unknown;
  }
}

int Runner::model(const std::string& op) {
  const auto th = theory();
  const auto m = model_from_json(th, read_json(operands_[0]));
  if (op == "eval") {
    const auto t = read_term_or_formula(th, operands_[1]);
    const auto rows = tuples_to_json(m, t.out(), model_eval(th, m, t));
    emit(Json{{"tuples", rows}}, rows.dump());
    return ok;
  }
  const auto bad = violated_axiom(th, m);
  Json j{{"satisfied", !bad}};
  if (bad) j["violated"] = *bad;
  emit(j, bad ? "violated: " + *bad : "satisfied");
  return bad ? refuted : ok;
}

int Runner::syn(const std::string& op) {
  if (op == "laws") {
    const auto scale = law_scale(scale_);
    bool all = true;
    Json rows = Json::array();
    std::ostringstream human;
    for (const auto* suite : {"syn-prd", "syn-semilattice"}) {
      const auto r = run_laws(suite, scale, seed_);
      all &= r.ok();
      rows.push_back({{"suite", r.suite}, {"checked", r.checked}, {"failures", r.failures}});
      human << r.suite << ": " << r.checked << " checks, " << r.failures.size() << " failures\n";
      for (const auto& f : r.failures) human << "  " << f << "\n";
    }
    emit(rows, human.str());
    return all ? ok : refuted;
  }
  const auto th = theory();
  TheoryCalculus calc(th, budget());
  auto object = [&](const std::string& arg) {
    auto f = read_formula(th, arg);
    return SynObject<Formula>{f.context, f.formula};
  };
  SynMorphism<Formula> m;
  if (op == "id") {
    m = syn_identity(calc, object(operands_[0]), unchecked_);
  } else if (op == "supply") {
    m = syn_supply(calc, object(operands_[0]), gen_from_string(kind_), unchecked_);
  } else {
    m = syn_compose(calc, read_morphism(calc, operands_[0], unchecked_), read_morphism(calc, operands_[1], unchecked_),
                    unchecked_);
  }
  const auto j = morphism_json(m.src.context, m.src.pred, m.dst.context, m.dst.pred, m.theta, m.certificate);
  emit(j);
  return m.certificate == Verdict::yes ? ok : unknown;
}

int Runner::laws() {
  const auto scale = law_scale(scale_);
  std::vector<std::string> suites = operands_.empty() ? law_suites() : operands_;
  const auto known = law_suites();
  for (const auto& s : suites) {
    if (std::find(known.begin(), known.end(), s) == known.end()) throw InputError("laws: unknown suite " + s);
  }
  bool all = true;
  Json rows = Json::array();
  std::ostringstream human;
  for (const auto& s : suites) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = run_laws(s, scale, seed_);
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    all &= r.ok();
    rows.push_back({{"suite", r.suite}, {"checked", r.checked}, {"failures", r.failures}, {"seconds", took.count()}});
    human << (r.ok() ? "ok   " : "FAIL ") << r.suite << ": " << r.checked << " checks in " << took.count() << " s\n";
    for (const auto& f : r.failures) human << "  " << f << "\n";
  }
  emit(rows, human.str());
  return all ? ok : refuted;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).run(args);
}

}  // namespace grl::cli
