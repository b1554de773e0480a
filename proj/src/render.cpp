#include "grl/render.hpp"

#include <sstream>

namespace grl {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string render(const TypedWiring& w, const std::vector<std::string>& shell_labels) {
  std::ostringstream os;
  os << "graph wiring {\n  rankdir=LR;\n  node [fontsize=10];\n  edge [fontsize=8];\n";
  for (std::size_t s = 0; s < w.shell_count(); ++s) {
    os << "  s" << s << " [shape=circle,label=" << quoted(shell_labels[s]) << "];\n";
  }
  os << "  subgraph boundary {\n    rank=same;\n";
  for (std::size_t k = 0; k < w.out().size(); ++k) {
    os << "    o" << k << " [shape=plaintext,label=" << quoted(std::to_string(k) + ":" + w.out()[k].name) << "];\n";
  }
  os << "  }\n";

  auto endpoint = [&](std::size_t index) {
    const auto p = w.port(index);
    return p.is_out() ? "o" + std::to_string(p.pos) : "s" + std::to_string(p.shell);
  };
  auto port_label = [&](std::size_t index) {
    const auto p = w.port(index);
    return p.is_out() ? w.sort_of(index).name : std::to_string(p.pos) + ":" + w.sort_of(index).name;
  };
  const auto blocks = w.blocks().blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& ports = blocks[b];
    if (ports.size() == 2) {
      os << "  " << endpoint(ports[0]) << " -- " << endpoint(ports[1])
         << " [label=" << quoted(port_label(ports[0])) << "];\n";
      continue;
    }
    os << "  b" << b << " [shape=point];\n";
    for (auto i : ports) os << "  " << endpoint(i) << " -- b" << b << " [label=" << quoted(port_label(i)) << "];\n";
  }
  for (const auto& s : w.floating()) {
    os << "  " << quoted("float_" + s.name) << " [shape=point,xlabel=" << quoted(s.name) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string render_dot(const TypedWiring& w) {
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < w.shell_count(); ++s) labels.push_back("s" + std::to_string(s));
  return render(w, labels);
}

std::string render_dot(const FormulaTerm& t) {
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < t.preds.size(); ++s) labels.push_back(to_string(t.preds[s], t.shell(s).size()));
  return render(t.wiring, labels);
}

}  // namespace grl
