#pragma once

#include <compare>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace grl {

struct Sort {
  std::string name;

  Sort() = default;
  explicit Sort(std::string n) : name(std::move(n)) {}
  auto operator<=>(const Sort&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const Sort& s) { return os << s.name; }

// An ordered list of sorts; the empty context is the monoidal unit.
using Context = std::vector<Sort>;

inline Context context(std::initializer_list<const char*> names) {
  Context c;
  for (const char* n : names) c.emplace_back(n);
  return c;
}

inline Context concat(const Context& a, const Context& b) {
  Context c(a);
  c.insert(c.end(), b.begin(), b.end());
  return c;
}

inline Context repeat(const Context& a, std::size_t times) {
  Context c;
  for (std::size_t i = 0; i < times; ++i) c.insert(c.end(), a.begin(), a.end());
  return c;
}

std::string to_string(const Context& c);

}  // namespace grl
