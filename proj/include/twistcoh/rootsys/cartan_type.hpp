#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <vector>

#include "twistcoh/errors.hpp"
#include "twistcoh/exact/rational.hpp"

namespace twistcoh {

/// Family letter plus rank. Besides the usual ranges, B1 (= A1 with a
/// short root) and D2 (= A1 x A1) are accepted: they arise as folded or
/// low-rank members of the classical families.
struct CartanType {
  char family = 'A';
  int rank = 1;

  friend bool operator==(const CartanType&, const CartanType&) = default;

  std::string to_string() const { return std::string(1, family) + std::to_string(rank); }
};

inline void validate(const CartanType& t) {
  const int n = t.rank;
  bool ok = false;
  switch (t.family) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 1; break;
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 2; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default:
      throw InputError(std::string("unknown Cartan family '") + t.family + "'");
  }
  if (!ok) throw InputError("rank " + std::to_string(n) + " is out of range for family " + t.family);
}

inline CartanType make_cartan_type(char family, int rank) {
  CartanType t{static_cast<char>(std::toupper(static_cast<unsigned char>(family))), rank};
  validate(t);
  return t;
}

// Parses "E6", "d4", ...
inline CartanType parse_cartan_type(const std::string& s) {
  if (s.size() < 2) throw InputError("cannot parse Cartan type '" + s + "'");
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw InputError("trailing characters");
  } catch (const std::exception&) {
    throw InputError("cannot parse Cartan type '" + s + "'");
  }
  return make_cartan_type(s[0], rank);
}

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Closed-form order of the Weyl group.
inline BigInt weyl_order(const CartanType& t) {
  validate(t);
  const int n = t.rank;
  switch (t.family) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return BigInt(BigInt(1) << n) * factorial(n);
    case 'D': return BigInt(BigInt(1) << (n - 1)) * factorial(n);
    case 'G': return 12;
    case 'F': return 1152;
    default: break;
  }
  if (n == 6) return 51840;
  if (n == 7) return 2903040;
  return 696729600;
}

/// Degrees of the basic polynomial invariants, ascending.
inline std::vector<int> degrees(const CartanType& t) {
  validate(t);
  const int n = t.rank;
  std::vector<int> d;
  switch (t.family) {
    case 'A':
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case 'G': d = {2, 6}; break;
    case 'F': d = {2, 6, 8, 12}; break;
    case 'E':
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

// Number of roots of the classical realization.
inline int classical_root_count(const CartanType& t) {
  validate(t);
  const int n = t.rank;
  switch (t.family) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'G': return 12;
    case 'F': return 48;
    default: break;
  }
  return n == 6 ? 72 : (n == 7 ? 126 : 240);
}

}  // namespace twistcoh
