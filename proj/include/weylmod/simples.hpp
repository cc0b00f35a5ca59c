#pragma once

#include <string>
#include <vector>

#include "weylmod/weightmod.hpp"

namespace weylmod {

struct SimpleDescriptor {
  enum class Kind { S_O, S_O_p, family };
  Kind kind = Kind::S_O;
  ShiftVector p;               // S_O_p: the skeleton object
  std::vector<int> gamma;      // family: Gamma, a subset of I
  std::map<int, int> xi;       // family: Gamma -> {0,1}
  std::vector<std::string> presentation;  // generators of the parameter ring
  std::string N = "symbolic";

  std::string label() const {
    switch (kind) {
      case Kind::S_O: return "S(O)";
      case Kind::S_O_p: return "S(O," + p.to_string() + ")";
      case Kind::family: {
        std::string s = "S(O,Gamma={";
        for (std::size_t k = 0; k < gamma.size(); ++k) s += (k ? "," : "") + std::to_string(gamma[k]);
        s += "},xi={";
        bool first = true;
        for (const auto& [i, v] : xi) {
          s += (first ? "" : ",") + std::to_string(i) + ":" + std::to_string(v);
          first = false;
        }
        return s + "},N)";
      }
    }
    return "";
  }
  // free variables of the parameter ring: ('d', i) or ('c', j)
  std::vector<std::pair<char, int>> variables(const OrbitInfo& info) const {
    std::vector<std::pair<char, int>> v;
    for (int i : gamma) v.push_back({'d', i});
    for (int j : info.complement()) v.push_back({'c', j});
    return v;
  }
};

inline std::vector<SimpleDescriptor> classify_simples(const OrbitInfo& info) {
  std::vector<SimpleDescriptor> out;
  if (info.kind == OrbitKind::linear) {
    if (!info.degenerate) {
      out.push_back({SimpleDescriptor::Kind::S_O});
      return out;
    }
    for (const auto& p : info.skeleton_objects) {
      SimpleDescriptor d;
      d.kind = SimpleDescriptor::Kind::S_O_p;
      d.p = p;
      out.push_back(d);
    }
    return out;
  }
  const auto& I = info.break_set;
  auto J = info.complement();
  for (std::size_t mask = 0; mask < (std::size_t{1} << I.size()); ++mask) {
    std::vector<int> gamma;
    for (std::size_t k = 0; k < I.size(); ++k)
      if (mask >> k & 1) gamma.push_back(I[k]);
    for (std::size_t xm = 0; xm < (std::size_t{1} << gamma.size()); ++xm) {
      SimpleDescriptor d;
      d.kind = SimpleDescriptor::Kind::family;
      d.gamma = gamma;
      for (std::size_t k = 0; k < gamma.size(); ++k) {
        int v = static_cast<int>(xm >> k & 1);
        d.xi[gamma[k]] = v;
        d.presentation.push_back("d" + std::to_string(gamma[k]) + "=" + (v ? "b" : "a") + std::to_string(gamma[k]));
      }
      for (int j : J)
        d.presentation.push_back("c" + std::to_string(j) + "^{+-1}" +
                                 (info.tau.at(j) == Tau::sigma ? " (twisted by sigma_" + std::to_string(j) + ")" : ""));
      out.push_back(d);
    }
  }
  return out;
}

// S(O) for a nondegenerate characteristic-0 orbit: x acts by 1, d_i by t_i.
inline WeightModule build_S_O(const OrbitInfo& info, const std::vector<int>& indices,
                              const std::vector<ShiftVector>& window) {
  if (info.kind != OrbitKind::linear) fail(Errc::WrongCharacteristic, "S(O) is the characteristic-0 construction");
  if (info.degenerate) fail(Errc::DegenerateOrbit, "S(O) needs a nondegenerate orbit");
  std::map<ShiftVector, std::size_t> dims;
  for (const auto& g : window) dims[g] = 1;
  WeightModule M = WeightModule::blank(info, indices, window, dims);
  const Field& F = M.field();
  for (int i : indices)
    for (const auto& g : M.window) {
      if (M.x[i][g]) M.set_x(i, g, Matrix::identity(F, 1));
      if (M.d[i][g]) M.set_d(i, g, Matrix::scalar(info.t_scalar(i, g[i] - 1), 1));
    }
  return M;
}

// S(O, p): support is the region of p; maps leaving the region vanish.
inline WeightModule build_S_O_p(const OrbitInfo& info, const ShiftVector& p, const std::vector<int>& indices,
                                const std::vector<ShiftVector>& window) {
  if (info.kind != OrbitKind::linear) fail(Errc::WrongCharacteristic, "S(O,p) is the characteristic-0 construction");
  if (!info.degenerate || !is_skeleton_object(info, p)) fail(Errc::NotASkeletonObject, p.to_string() + " is not a skeleton object");
  std::map<ShiftVector, std::size_t> dims;
  for (const auto& g : window) dims[g] = region_of(info, g) == p ? 1 : 0;
  WeightModule M = WeightModule::blank(info, indices, window, dims);
  const Field& F = M.field();
  for (int i : indices)
    for (const auto& g : M.window) {
      if (!M.dim(g)) continue;
      auto up = M.step(g, i, 1), down = M.step(g, i, -1);
      if (M.x[i][g] && M.dim(up)) M.set_x(i, g, Matrix::identity(F, 1));
      if (M.d[i][g] && M.dim(down)) M.set_d(i, g, Matrix::scalar(info.t_scalar(i, g[i] - 1), 1));
    }
  return M;
}

// Every transition between nonzero weight spaces is invertible (a window-local simplicity certificate).
inline bool structural_simplicity(const WeightModule& M) {
  for (int i : M.indices)
    for (const auto& g : M.window)
      for (int s : {1, -1}) {
        auto op = s == 1 ? M.xmap(i, g) : M.dmap(i, g);
        if (!op || !M.dim(g) || !M.dim(M.step(g, i, s))) continue;
        if (!inverse(op->mat)) return false;
      }
  return true;
}

// The B-module R/RN of a characteristic-p family, with N generated by a monic
// polynomial in the single variable of R (coefficients over F, ascending).
inline SkelModuleB skeleton_simple(const SkeletonAlgebra& alg, const SimpleDescriptor& desc,
                                   const std::optional<Poly>& N) {
  const OrbitInfo& info = alg.info;
  const Field& F = alg.field();
  auto vars = desc.variables(info);
  if (vars.size() > 1)
    fail(Errc::QuotientNotFiniteDimensional,
         "parameter ring has " + std::to_string(vars.size()) + " variables; a principal ideal has an infinite quotient");
  SkelModuleB S;
  Matrix C;
  if (vars.empty()) {
    S.dim = 1;
    if (N && N->degree() > 0) fail(Errc::NotMaximal, "the parameter ring is the residue field; N must be zero");
  } else {
    if (!N) fail(Errc::NotPrincipal, "this family needs a generator for N");
    Poly g = N->over(F);
    if (g.degree() < 1) fail(Errc::NotMaximal, "N must be a proper ideal");
    if (g.coeff(0).is_zero()) fail(Errc::DegenerateGenerator, "the generator of N needs a nonzero constant term");
    g = g.monic();
    std::size_t k = static_cast<std::size_t>(g.degree());
    S.dim = k;
    C = Matrix(F, k, k);
    for (std::size_t r = 1; r < k; ++r) C(r, r - 1) = F.one();
    for (std::size_t r = 0; r < k; ++r) C(r, k - 1) = -g.coeff(r);
  }
  Matrix zero(F, S.dim, S.dim);
  for (int i : alg.I) {
    S.a[i] = zero;
    S.b[i] = zero;
  }
  for (int j : alg.J) S.c[j] = Matrix::identity(F, S.dim);
  if (!vars.empty()) {
    auto [kind, idx] = vars.front();
    if (kind == 'c') S.c[idx] = C;
    else if (desc.xi.at(idx) == 0) S.a[idx] = C;
    else S.b[idx] = C;
  }
  return S;
}

inline WeightModule build_S_char_p(const OrbitInfo& info, const SimpleDescriptor& desc, const std::optional<Poly>& N,
                                   const Limits& lim = Limits::from_env()) {
  if (info.kind != OrbitKind::cyclic) fail(Errc::WrongCharacteristic, "the family construction needs positive characteristic");
  if (desc.kind != SimpleDescriptor::Kind::family) fail(Errc::ObjectMismatch, "not a characteristic-p descriptor");
  SkeletonAlgebra alg = build_skeleton(info);
  SkelModuleB S = skeleton_simple(alg, desc, N);
  if (!relation_failures(alg, S).empty()) fail(Errc::RelationViolation, "skeleton module violates the B relations");
  WeightModule M = from_skeleton_B(alg, S);
  if (!is_simple_finite(M, lim)) fail(Errc::NotMaximal, "the quotient is not simple: N is not maximal");
  return M;
}

}  // namespace weylmod
