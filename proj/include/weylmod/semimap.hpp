#pragma once

#include "weylmod/orbits.hpp"

namespace weylmod {

// v |-> mat * sigma^twist(v), sigma acting entrywise on residue-field coordinates.
struct SemiMap {
  Matrix mat;
  ShiftVector twist;

  static SemiMap linear(Matrix m) { return {std::move(m), {}}; }
  std::size_t rows() const { return mat.rows(); }
  std::size_t cols() const { return mat.cols(); }

  friend bool operator==(const SemiMap& a, const SemiMap& b) { return a.mat == b.mat && a.twist == b.twist; }
  friend bool operator!=(const SemiMap& a, const SemiMap& b) { return !(a == b); }
};

inline Matrix twist_matrix(const ResidueField& rf, const Matrix& m, const ShiftVector& k) {
  if (k.is_zero()) return m;
  return m.map([&](const Elem& e) { return rf.shift(e, k); });
}

// outer after inner
inline SemiMap compose(const ResidueField& rf, const SemiMap& outer, const SemiMap& inner) {
  return {outer.mat * twist_matrix(rf, inner.mat, outer.twist), outer.twist + inner.twist};
}

inline std::optional<SemiMap> invert(const ResidueField& rf, const SemiMap& a) {
  auto inv = inverse(a.mat);
  if (!inv) return std::nullopt;
  return SemiMap{twist_matrix(rf, *inv, -a.twist), -a.twist};
}

inline SemiMap scaled(const Elem& s, const SemiMap& a) { return {s * a.mat, a.twist}; }

inline SemiMap semi_difference(const SemiMap& a, const SemiMap& b) {
  if (a.twist != b.twist) fail(Errc::ShapeMismatch, "difference of maps with different twists");
  return {a.mat - b.mat, a.twist};
}

inline Vec apply(const ResidueField& rf, const SemiMap& a, const Vec& v) {
  Vec w;
  for (const auto& e : v) w.push_back(rf.shift(e, a.twist));
  return a.mat.apply(w);
}

// K-matrix of an F-semilinear map between F^c and F^r
inline Matrix restrict_to_base(const ResidueField& rf, const SemiMap& a) {
  std::size_t e = rf.degree();
  Matrix out(rf.base, a.rows() * e, a.cols() * e);
  Matrix sh = rf.shift_matrix(a.twist);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.mat(i, j).is_zero()) continue;
      Matrix blk = rf.mult_matrix(a.mat(i, j)) * sh;
      for (std::size_t r = 0; r < e; ++r)
        for (std::size_t c = 0; c < e; ++c) out(i * e + r, j * e + c) = blk(r, c);
    }
  return out;
}

}  // namespace weylmod
