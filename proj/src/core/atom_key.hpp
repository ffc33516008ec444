#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/rational.hpp"

namespace definetti {

/// Canonical serialization of distribution atoms.  Keys must be injective per
/// atom type: two atoms are "the same" exactly when their keys are equal, and
/// distributions keep their support sorted by key (shorter key first, then
/// bytewise — which orders nonnegative integers numerically).

inline std::string atom_key(const std::string& s) { return s; }
inline std::string atom_key(std::int64_t v) { return std::to_string(v); }
inline std::string atom_key(int v) { return std::to_string(v); }
inline std::string atom_key(const Rational& r) { return r.str(); }

// Declared before being defined so the pair/vector overloads can nest in
// either order: arguments like std::vector<int> have no definetti-associated
// namespace, so argument-dependent lookup alone would not find these.
template <class A, class B>
std::string atom_key(const std::pair<A, B>& p);
template <class T>
std::string atom_key(const std::vector<T>& v);

template <class A, class B>
std::string atom_key(const std::pair<A, B>& p) {
  return "(" + atom_key(p.first) + "," + atom_key(p.second) + ")";
}

template <class T>
std::string atom_key(const std::vector<T>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += atom_key(v[i]);
  }
  out += "]";
  return out;
}

struct ShortLexLess {
  bool operator()(const std::string& a, const std::string& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

}  // namespace definetti
