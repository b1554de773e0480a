#include "grl/io.hpp"

#include <map>

#include "grl/dsl.hpp"
#include "grl/error.hpp"

namespace grl {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ShapeError(std::string("json: missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t index_of(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw ShapeError(std::string("json: ") + what + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::string text_of(const Json& j, const char* what) {
  if (!j.is_string()) throw ShapeError(std::string("json: ") + what + " must be a string");
  return j.get<std::string>();
}

Context context_of(const Json& j) {
  if (!j.is_array()) throw ShapeError("json: a context must be an array of sort names");
  Context c;
  for (const auto& s : j) c.push_back(Sort{text_of(s, "sort")});
  return c;
}

Json context_json(const Context& c) {
  Json j = Json::array();
  for (const auto& s : c) j.push_back(s.name);
  return j;
}

struct Frame {
  std::vector<Context> shells;
  Context out;
  std::set<Sort> floating;
  std::vector<std::vector<std::size_t>> blocks;  // global port indices
  std::size_t ports = 0;
};

Frame frame_of(const Json& j) {
  Frame f;
  const auto& shells = field(j, "shells");
  if (!shells.is_array()) throw ShapeError("json: shells must be an array");
  for (const auto& s : shells) f.shells.push_back(context_of(s));
  f.out = context_of(field(j, "out"));
  if (j.contains("floating")) {
    for (const auto& s : context_of(j.at("floating"))) f.floating.insert(s);
  }
  std::vector<std::size_t> offset;
  for (const auto& s : f.shells) {
    offset.push_back(f.ports);
    f.ports += s.size();
  }
  const auto& blocks = field(j, "blocks");
  if (!blocks.is_array()) throw ShapeError("json: blocks must be an array");
  for (const auto& b : blocks) {
    if (!b.is_array() || b.empty()) throw ShapeError("json: a block must be a non-empty array of ports");
    std::vector<std::size_t> ports;
    for (const auto& p : b) {
      if (p.is_object() && p.contains("o")) {
        const auto k = index_of(p.at("o"), "out port");
        if (k >= f.out.size()) throw ShapeError("json: out port " + std::to_string(k) + " out of range");
        ports.push_back(f.ports + k);
      } else {
        const auto s = index_of(field(p, "s"), "shell");
        const auto k = index_of(field(p, "p"), "shell port");
        if (s >= f.shells.size() || k >= f.shells[s].size()) {
          throw ShapeError("json: shell port (" + std::to_string(s) + "," + std::to_string(k) + ") out of range");
        }
        ports.push_back(offset[s] + k);
      }
    }
    f.blocks.push_back(std::move(ports));
  }
  return f;
}

}  // namespace

Json wiring_to_json(const TypedWiring& w) {
  Json j;
  j["shells"] = Json::array();
  for (const auto& s : w.shells()) j["shells"].push_back(context_json(s));
  j["out"] = context_json(w.out());
  j["blocks"] = Json::array();
  for (const auto& b : w.blocks().blocks()) {
    Json block = Json::array();
    for (auto i : b) {
      const auto p = w.port(i);
      block.push_back(p.is_out() ? Json{{"o", p.pos}} : Json{{"s", p.shell}, {"p", p.pos}});
    }
    j["blocks"].push_back(std::move(block));
  }
  j["floating"] = Json::array();
  for (const auto& s : w.floating()) j["floating"].push_back(s.name);
  return j;
}

TypedWiring wiring_from_json(const Json& j) {
  auto f = frame_of(j);
  const auto n = f.ports + f.out.size();
  std::vector<std::size_t> label(n, n);
  for (std::size_t b = 0; b < f.blocks.size(); ++b) {
    for (auto p : f.blocks[b]) {
      if (label[p] != n) throw ShapeError("json: port " + std::to_string(p) + " appears in two blocks");
      label[p] = b;
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (label[p] == n) throw ShapeError("json: port " + std::to_string(p) + " is in no block");
  }
  return TypedWiring(f.shells, f.out, Partition::from_labels(label), f.floating);
}

TypedWiring wiring_from_json_loose(const Json& j) {
  auto f = frame_of(j);
  DisjointSets sets(f.ports + f.out.size());
  for (const auto& b : f.blocks) {
    for (auto p : b) sets.unite(b.front(), p);
  }
  return TypedWiring(f.shells, f.out, Partition::from_sets(sets), f.floating);
}

Json term_to_json(const FormulaTerm& t) {
  auto j = wiring_to_json(t.wiring);
  j["preds"] = Json::array();
  for (std::size_t i = 0; i < t.preds.size(); ++i) {
    const auto& ctx = t.shell(i);
    j["preds"].push_back(to_string(ScopedFormula{ctx, default_names(ctx.size()), t.preds[i]}));
  }
  return j;
}

FormulaTerm term_from_json(const Theory& th, const Json& j) {
  auto w = wiring_from_json(j);
  const auto& preds = field(j, "preds");
  if (!preds.is_array() || preds.size() != w.shell_count()) {
    throw ShapeError("json: preds must hold one formula per shell");
  }
  std::vector<Formula> ps;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    auto f = parse_scoped_formula(th, text_of(preds[i], "pred"));
    if (f.context != w.shells()[i]) {
      throw ShapeError("json: pred " + std::to_string(i) + " has context " + to_string(f.context) +
                       " but its shell is " + to_string(w.shells()[i]));
    }
    ps.push_back(std::move(f.formula));
  }
  return FormulaTerm(std::move(ps), std::move(w));
}

Json model_to_json(const Theory& th, const Model& m) {
  Json j;
  j["carriers"] = Json::object();
  for (const auto& [s, names] : m.carriers) j["carriers"][s.name] = names;
  j["rels"] = Json::object();
  for (const auto& [r, ts] : m.rels) j["rels"][r] = tuples_to_json(m, th.arity(r), ts);
  return j;
}

Model model_from_json(const Theory& th, const Json& j) {
  Model m;
  std::map<Sort, std::map<std::string, std::size_t>> lookup;
  const auto& carriers = field(j, "carriers");
  if (!carriers.is_object()) throw ShapeError("json: carriers must be an object");
  for (const auto& [name, elems] : carriers.items()) {
    const Sort s{name};
    if (!th.has_sort(s)) throw SortError("model: unknown sort " + name);
    if (!elems.is_array()) throw ShapeError("json: carrier of " + name + " must be an array");
    auto& names = m.carriers[s];
    for (const auto& e : elems) {
      auto text = text_of(e, "element");
      if (!lookup[s].emplace(text, names.size()).second) throw ShapeError("json: element " + text + " repeated");
      names.push_back(std::move(text));
    }
  }
  for (const auto& s : th.sorts) {
    if (!m.carriers.contains(s)) throw SortError("model: no carrier for sort " + s.name);
  }
  if (j.contains("rels")) {
    const auto& rels = j.at("rels");
    if (!rels.is_object()) throw ShapeError("json: rels must be an object");
    for (const auto& [r, rows] : rels.items()) {
      const auto& ar = th.arity(r);
      if (!rows.is_array()) throw ShapeError("json: rows of " + r + " must be an array");
      auto& ts = m.rels[r];
      for (const auto& row : rows) {
        if (!row.is_array() || row.size() != ar.size()) throw ShapeError("json: a row of " + r + " has the wrong arity");
        Tuple t;
        for (std::size_t k = 0; k < ar.size(); ++k) {
          const auto& names = lookup[ar[k]];
          // rows may name elements or give their indices
          if (row[k].is_string()) {
            auto it = names.find(row[k].get<std::string>());
            if (it == names.end()) throw SortError("model: " + row[k].get<std::string>() + " is not in " + ar[k].name);
            t.push_back(it->second);
          } else {
            t.push_back(index_of(row[k], "element"));
          }
        }
        ts.insert(std::move(t));
      }
    }
  }
  for (const auto& [r, ar] : th.rels) m.rels[r];
  check_model(th, m);
  return m;
}

Json tuples_to_json(const Model& m, const Context& ctx, const TupleSet& ts) {
  Json rows = Json::array();
  for (const auto& t : ts) {
    Json row = Json::array();
    for (std::size_t k = 0; k < t.size(); ++k) row.push_back(m.carriers.at(ctx[k])[t[k]]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace grl
