#pragma once

#include <cstdint>
#include <vector>

#include "weylmod/orbits.hpp"

namespace fx {

using namespace weylmod;

// m = (f_1, ..., f_n) from ascending integer coefficient lists
inline SepMaxIdeal ideal(const Field& F, const std::vector<std::vector<std::int64_t>>& gens) {
  SepMaxIdeal m;
  m.field = F;
  m.arity = static_cast<int>(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Elem> c;
    for (auto v : gens[i]) c.push_back(F.from_int(v));
    m.generators.emplace(static_cast<int>(i) + 1, Poly(F, c));
  }
  return m;
}

inline Poly lin(const Field& F, const Rational& root) { return Poly::linear(F.from_rational(root)); }

// (t_1 - r_1, ..., t_n - r_n) over Q
inline SepMaxIdeal q_linear(const std::vector<Rational>& roots) {
  Field Q = Field::rationals();
  SepMaxIdeal m;
  m.field = Q;
  m.arity = static_cast<int>(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) m.generators.emplace(static_cast<int>(i) + 1, lin(Q, roots[i]));
  return m;
}

inline SepMaxIdeal a_inf(const Rational& lambda) {
  Field Q = Field::rationals();
  SepMaxIdeal m;
  m.field = Q;
  m.default_generator = lin(Q, lambda);
  return m;
}

// Generate-and-filter count of tuples with sum k*i_k = i (independent of the DP).
inline std::uint64_t graded_count_enumerated(std::int64_t i, int L, int B) {
  std::uint64_t n = 0;
  std::vector<int> v(static_cast<std::size_t>(L), -B);
  if (L == 0) return i == 0 ? 1 : 0;
  while (true) {
    std::int64_t s = 0;
    for (int k = 0; k < L; ++k) s += static_cast<std::int64_t>(k + 1) * v[static_cast<std::size_t>(k)];
    if (s == i) ++n;
    std::size_t k = 0;
    while (k < v.size() && ++v[k] > B) v[k++] = -B;
    if (k == v.size()) break;
  }
  return n;
}

}  // namespace fx
