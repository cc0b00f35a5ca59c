#pragma once

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylmod/orbits.hpp"
#include "weylmod/semimap.hpp"
#include "weylmod/skeleton.hpp"

namespace weylmod {

// Weight spaces over a finite window of orbit points, each identified with
// F^dim (F = D/m of the base point). x_i maps the weight gamma to gamma + e_i
// and d_i maps it to gamma - e_i; entries whose target leaves the window are
// absent. In positive characteristic with period 1 the maps are semilinear.
struct WeightModule {
  OrbitInfo orbit;
  std::vector<int> indices;
  std::vector<ShiftVector> window;  // sorted
  std::map<ShiftVector, std::size_t> dims;
  std::map<int, std::map<ShiftVector, std::optional<Matrix>>> x, d;

  const Field& field() const { return orbit.field(); }
  const ResidueField& residue() const { return orbit.residue; }

  bool contains(const ShiftVector& g) const { return std::binary_search(window.begin(), window.end(), g); }
  std::size_t dim(const ShiftVector& g) const {
    auto it = dims.find(g);
    return it == dims.end() ? 0 : it->second;
  }
  ShiftVector step(const ShiftVector& g, int i, int s) const { return orbit.normalize(g + ShiftVector::unit(i, s)); }
  ShiftVector twist_x(int i) const { return orbit.twisted(i) ? ShiftVector::unit(i) : ShiftVector{}; }
  ShiftVector twist_d(int i) const { return orbit.twisted(i) ? ShiftVector::unit(i, -1) : ShiftVector{}; }

  std::optional<SemiMap> xmap(int i, const ShiftVector& g) const {
    auto it = x.find(i);
    if (it == x.end()) return std::nullopt;
    auto jt = it->second.find(g);
    if (jt == it->second.end() || !jt->second) return std::nullopt;
    return SemiMap{*jt->second, twist_x(i)};
  }
  std::optional<SemiMap> dmap(int i, const ShiftVector& g) const {
    auto it = d.find(i);
    if (it == d.end()) return std::nullopt;
    auto jt = it->second.find(g);
    if (jt == it->second.end() || !jt->second) return std::nullopt;
    return SemiMap{*jt->second, twist_d(i)};
  }

  std::size_t total_dim() const {
    std::size_t t = 0;
    for (const auto& [g, n] : dims) t += n;
    return t;
  }
  std::size_t base_dim() const { return total_dim() * residue().degree(); }
  bool twisted() const {
    for (int i : indices)
      if (orbit.twisted(i)) return true;
    return false;
  }

  void set_x(int i, const ShiftVector& g, Matrix m) { x[i][g] = std::move(m); }
  void set_d(int i, const ShiftVector& g, Matrix m) { d[i][g] = std::move(m); }

  // zero maps on every in-window transition
  static WeightModule blank(const OrbitInfo& orbit, std::vector<int> indices, std::vector<ShiftVector> window,
                            const std::map<ShiftVector, std::size_t>& dims) {
    WeightModule m;
    m.orbit = orbit;
    m.indices = std::move(indices);
    std::sort(window.begin(), window.end());
    window.erase(std::unique(window.begin(), window.end()), window.end());
    m.window = std::move(window);
    for (const auto& g : m.window) {
      auto it = dims.find(g);
      m.dims[g] = it == dims.end() ? 0 : it->second;
    }
    const Field& F = m.field();
    for (int i : m.indices)
      for (const auto& g : m.window) {
        auto up = m.step(g, i, 1), down = m.step(g, i, -1);
        if (m.contains(up)) m.x[i][g] = Matrix(F, m.dims[up], m.dims[g]);
        else m.x[i][g] = std::nullopt;
        if (m.contains(down)) m.d[i][g] = Matrix(F, m.dims[down], m.dims[g]);
        else m.d[i][g] = std::nullopt;
      }
    return m;
  }

  friend bool operator==(const WeightModule& a, const WeightModule& b) {
    return a.indices == b.indices && a.window == b.window && a.dims == b.dims && a.x == b.x && a.d == b.d &&
           a.orbit.base == b.orbit.base;
  }
};

// Coordinate box of the given radius (char 0) or the whole cyclic orbit (char p).
inline std::vector<ShiftVector> box_window(const OrbitInfo& info, const std::vector<int>& indices, int radius) {
  std::vector<ShiftVector> pts{ShiftVector{}};
  for (int i : indices) {
    std::vector<ShiftVector> next;
    int lo = info.kind == OrbitKind::linear ? -radius : 0;
    int hi = info.kind == OrbitKind::linear ? radius : info.period(i) - 1;
    for (const auto& g : pts)
      for (int k = lo; k <= hi; ++k) {
        ShiftVector h = g;
        h.set(i, k);
        next.push_back(h);
      }
    pts = std::move(next);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

inline std::vector<int> default_indices(const OrbitInfo& info) {
  if (info.base.unbounded()) fail(Errc::InvalidIdeal, "unbounded arity needs an explicit index list");
  return info.indices();
}

// ---- relation verification ----

struct RelationCheck {
  std::string id;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<ShiftVector> first_failure;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (c.failed) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.failed;
    return n;
  }
  std::size_t checked() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.checked;
    return n;
  }
  const RelationCheck* find(const std::string& id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
};

namespace detail {

inline std::optional<SemiMap> chain(const ResidueField& rf, const std::optional<SemiMap>& outer,
                                    const std::optional<SemiMap>& inner) {
  if (!outer || !inner) return std::nullopt;
  return compose(rf, *outer, *inner);
}

}  // namespace detail

inline RelationReport verify_relations(const WeightModule& M) {
  RelationReport rep;
  const ResidueField& rf = M.residue();
  const Field& F = M.field();
  auto record = [](RelationCheck& c, bool ok, const ShiftVector& g) {
    ++c.checked;
    if (!ok) {
      if (!c.failed) c.first_failure = g;
      ++c.failed;
    }
  };

  RelationCheck shape{"shape"};
  for (int i : M.indices)
    for (const auto& g : M.window) {
      auto up = M.step(g, i, 1), down = M.step(g, i, -1);
      auto X = M.xmap(i, g);
      auto D = M.dmap(i, g);
      bool ok = (X.has_value() == M.contains(up)) && (D.has_value() == M.contains(down));
      if (X) ok = ok && X->rows() == M.dim(up) && X->cols() == M.dim(g);
      if (D) ok = ok && D->rows() == M.dim(down) && D->cols() == M.dim(g);
      record(shape, ok, g);
    }
  rep.checks.push_back(shape);
  if (shape.failed) return rep;

  auto sid = [](int i) { return std::to_string(i); };
  for (int i : M.indices) {
    RelationCheck weight{"d" + sid(i) + "x" + sid(i) + "=t" + sid(i)};
    RelationCheck comm{"[d" + sid(i) + ",x" + sid(i) + "]=1"};
    for (const auto& g : M.window) {
      std::size_t n = M.dim(g);
      auto up = M.step(g, i, 1), down = M.step(g, i, -1);
      auto dx = detail::chain(rf, M.dmap(i, up), M.xmap(i, g));
      auto xd = detail::chain(rf, M.xmap(i, down), M.dmap(i, g));
      if (dx) record(weight, dx->twist.is_zero() && dx->mat == Matrix::scalar(M.orbit.t_scalar(i, g[i]), n), g);
      if (dx && xd) record(comm, dx->twist == xd->twist && dx->mat - xd->mat == Matrix::identity(F, n), g);
    }
    rep.checks.push_back(weight);
    rep.checks.push_back(comm);
  }
  for (int i : M.indices)
    for (int j : M.indices) {
      if (i == j) continue;
      // ops: 'x' -> +1, 'd' -> -1
      auto op = [&](char c, int k, const ShiftVector& g) { return c == 'x' ? M.xmap(k, g) : M.dmap(k, g); };
      auto run = [&](char ci, char cj, const std::string& id) {
        RelationCheck rc{id};
        int si = ci == 'x' ? 1 : -1, sj = cj == 'x' ? 1 : -1;
        for (const auto& g : M.window) {
          auto lhs = detail::chain(rf, op(ci, i, M.step(g, j, sj)), op(cj, j, g));
          auto rhs = detail::chain(rf, op(cj, j, M.step(g, i, si)), op(ci, i, g));
          if (lhs && rhs) record(rc, *lhs == *rhs, g);
        }
        rep.checks.push_back(rc);
      };
      if (i < j) {
        run('x', 'x', "[x" + sid(i) + ",x" + sid(j) + "]=0");
        run('d', 'd', "[d" + sid(i) + ",d" + sid(j) + "]=0");
      }
      run('x', 'd', "[x" + sid(i) + ",d" + sid(j) + "]=0");
    }
  return rep;
}

// ---- linear data for closure and intertwiners ----

struct LinearOp {
  std::size_t src, dst;
  std::string label;
  Matrix m;
};

struct LinearData {
  Field field;
  std::vector<ShiftVector> weights;
  std::vector<std::size_t> dims;
  std::vector<LinearOp> ops;
};

// Over F when every map is F-linear, otherwise restricted to K (scalars included).
inline LinearData linear_data(const WeightModule& M, bool over_base) {
  LinearData L;
  const ResidueField& rf = M.residue();
  std::size_t e = over_base ? rf.degree() : 1;
  L.field = over_base ? rf.base : M.field();
  L.weights = M.window;
  std::map<ShiftVector, std::size_t> pos;
  for (std::size_t k = 0; k < M.window.size(); ++k) {
    pos[M.window[k]] = k;
    L.dims.push_back(M.dim(M.window[k]) * e);
  }
  auto add = [&](const ShiftVector& g, const ShiftVector& h, const std::string& label, const SemiMap& s) {
    L.ops.push_back({pos[g], pos[h], label, over_base ? restrict_to_base(rf, s) : s.mat});
  };
  for (int i : M.indices)
    for (const auto& g : M.window) {
      if (auto X = M.xmap(i, g)) add(g, M.step(g, i, 1), "x" + std::to_string(i), *X);
      if (auto D = M.dmap(i, g)) add(g, M.step(g, i, -1), "d" + std::to_string(i), *D);
    }
  if (over_base && e > 1) {
    auto gens = rf.algebra_generators();
    for (const auto& g : M.window)
      for (std::size_t k = 0; k < gens.size(); ++k)
        add(g, g, "scalar" + std::to_string(k), SemiMap::linear(Matrix::scalar(gens[k], M.dim(g))));
  }
  return L;
}

// Smallest submodule containing the seeds (F-coordinates per weight); returns F-dimensions.
inline std::map<ShiftVector, std::size_t> submodule_closure(const WeightModule& M,
                                                           const std::vector<std::pair<ShiftVector, Vec>>& seeds) {
  const ResidueField& rf = M.residue();
  const Field& F = M.field();
  std::map<ShiftVector, EchelonBasis> span;
  for (const auto& g : M.window) span.emplace(g, EchelonBasis(F, M.dim(g)));
  std::deque<std::pair<ShiftVector, Vec>> todo;
  for (const auto& [g, v] : seeds) {
    if (!M.contains(g)) fail(Errc::WindowTooSmall, "seed outside the window");
    if (v.size() != M.dim(g)) fail(Errc::ShapeMismatch, "seed has the wrong length");
    Vec w;
    for (const auto& e : v) w.push_back(F.embed(e));
    if (span.at(g).insert(w)) todo.emplace_back(g, w);
  }
  while (!todo.empty()) {
    auto [g, v] = todo.front();
    todo.pop_front();
    for (int i : M.indices)
      for (int s : {1, -1}) {
        auto op = s == 1 ? M.xmap(i, g) : M.dmap(i, g);
        if (!op) continue;
        auto h = M.step(g, i, s);
        Vec w = apply(rf, *op, v);
        if (span.at(h).insert(w)) todo.emplace_back(h, w);
      }
  }
  std::map<ShiftVector, std::size_t> out;
  for (const auto& [g, b] : span) out[g] = b.dim();
  return out;
}

inline bool closure_is_full(const WeightModule& M, const std::map<ShiftVector, std::size_t>& prof) {
  for (const auto& [g, n] : prof)
    if (n != M.dim(g)) return false;
  return true;
}

inline Vec unit_vector(const Field& F, std::size_t n, std::size_t k) {
  Vec v(n, F.zero());
  v[k] = F.one();
  return v;
}

// A nonzero vector whose closure is proper, if any; exhaustive up to F-scalars.
inline std::optional<std::pair<ShiftVector, Vec>> find_proper_generator(const WeightModule& M, const Limits& lim) {
  const Field& F = M.field();
  for (const auto& g : M.window)
    for (std::size_t k = 0; k < M.dim(g); ++k) {
      Vec v = unit_vector(F, M.dim(g), k);
      if (!closure_is_full(M, submodule_closure(M, {{g, v}}))) return std::make_pair(g, v);
    }
  bool small = true;
  for (const auto& g : M.window) small = small && M.dim(g) <= 1;
  if (small) return std::nullopt;
  if (!F.is_finite())
    fail(Errc::EnumerationBudgetExceeded, "simplicity over an infinite field needs weight spaces of dimension <= 1");
  // projective points: vectors whose first nonzero entry is 1
  std::uint64_t q = static_cast<std::uint64_t>(F.order());
  long double total = 0;
  for (const auto& g : M.window) {
    long double c = 1;
    for (std::size_t k = 0; k < M.dim(g); ++k) c *= static_cast<long double>(q);
    total += (c - 1) / (q - 1);
  }
  if (total > static_cast<long double>(lim.max_enum))
    fail(Errc::EnumerationBudgetExceeded, "simplicity search over " + std::to_string(static_cast<double>(total)) + " vectors");
  auto elems = F.elements();
  for (const auto& g : M.window) {
    std::size_t n = M.dim(g);
    if (n <= 1) continue;
    for (std::size_t lead = 0; lead < n; ++lead) {
      std::size_t free = n - lead - 1;
      std::vector<std::size_t> idx(free, 0);
      while (true) {
        Vec v(n, F.zero());
        v[lead] = F.one();
        for (std::size_t k = 0; k < free; ++k) v[lead + 1 + k] = elems[idx[k]];
        if (!closure_is_full(M, submodule_closure(M, {{g, v}}))) return std::make_pair(g, v);
        std::size_t k = 0;
        while (k < free && ++idx[k] == elems.size()) idx[k++] = 0;
        if (k == free) break;
      }
    }
  }
  return std::nullopt;
}

inline bool is_simple_finite(const WeightModule& M, const Limits& lim = Limits::from_env()) {
  if (M.total_dim() == 0) return false;
  return !find_proper_generator(M, lim).has_value();
}

// ---- intertwiners ----

struct HomSpace {
  Field field;  // the field the basis is written over
  std::size_t base_factor = 1;  // [field : K]
  std::vector<ShiftVector> weights;
  std::vector<std::vector<Matrix>> basis;  // per element, one matrix per weight
  std::size_t base_dim() const { return basis.size() * base_factor; }
};

inline HomSpace hom_space(const LinearData& A, const LinearData& B, std::size_t base_factor) {
  if (A.weights != B.weights || A.ops.size() != B.ops.size())
    fail(Errc::ObjectMismatch, "modules live on different windows");
  const Field& F = A.field;
  std::size_t nw = A.weights.size();
  std::vector<std::size_t> offset(nw + 1, 0);
  for (std::size_t w = 0; w < nw; ++w) offset[w + 1] = offset[w] + B.dims[w] * A.dims[w];
  std::size_t U = offset[nw];
  // phi_w is B.dims[w] x A.dims[w]; unknown (r, c) at offset[w] + r * A.dims[w] + c
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < A.ops.size(); ++k) {
    const auto& oa = A.ops[k];
    const auto& ob = B.ops[k];
    if (oa.src != ob.src || oa.dst != ob.dst || oa.label != ob.label)
      fail(Errc::ObjectMismatch, "operator lists do not match");
    std::size_t s = oa.src, t = oa.dst;
    // phi_t * oa.m - ob.m * phi_s = 0, entry (r, c) with r < B.dims[t], c < A.dims[s]
    for (std::size_t r = 0; r < B.dims[t]; ++r)
      for (std::size_t c = 0; c < A.dims[s]; ++c) {
        Vec row(U, F.zero());
        bool any = false;
        for (std::size_t m = 0; m < A.dims[t]; ++m)
          if (!oa.m(m, c).is_zero()) {
            row[offset[t] + r * A.dims[t] + m] += oa.m(m, c);
            any = true;
          }
        for (std::size_t m = 0; m < B.dims[s]; ++m)
          if (!ob.m(r, m).is_zero()) {
            row[offset[s] + m * A.dims[s] + c] -= ob.m(r, m);
            any = true;
          }
        if (any) rows.push_back(std::move(row));
      }
  }
  HomSpace H;
  H.field = F;
  H.base_factor = base_factor;
  H.weights = A.weights;
  std::vector<Vec> sol;
  if (rows.empty()) {
    for (std::size_t u = 0; u < U; ++u) sol.push_back(unit_vector(F, U, u));
  } else {
    sol = nullspace(Matrix::from_rows(F, rows, U));
  }
  for (const auto& v : sol) {
    std::vector<Matrix> phi;
    for (std::size_t w = 0; w < nw; ++w) {
      Matrix m(F, B.dims[w], A.dims[w]);
      for (std::size_t r = 0; r < B.dims[w]; ++r)
        for (std::size_t c = 0; c < A.dims[w]; ++c) m(r, c) = v[offset[w] + r * A.dims[w] + c];
      phi.push_back(std::move(m));
    }
    H.basis.push_back(std::move(phi));
  }
  return H;
}

inline void check_compatible(const WeightModule& M, const WeightModule& N) {
  if (M.window != N.window || M.indices != N.indices || !(M.orbit.base == N.orbit.base))
    fail(Errc::ObjectMismatch, "modules over different orbits or windows");
}

inline HomSpace hom_space(const WeightModule& M, const WeightModule& N) {
  check_compatible(M, N);
  bool base = M.twisted();
  std::size_t factor = base ? 1 : M.residue().degree();
  return hom_space(linear_data(M, base), linear_data(N, base), factor);
}

namespace detail {

using Endo = std::vector<Matrix>;

inline Endo endo_mul(const Endo& a, const Endo& b) {
  Endo r;
  for (std::size_t w = 0; w < a.size(); ++w) r.push_back(a[w] * b[w]);
  return r;
}
inline bool endo_zero(const Endo& a) {
  for (const auto& m : a)
    if (!m.is_zero()) return false;
  return true;
}
inline bool endo_invertible(const Endo& a) {
  for (const auto& m : a)
    if (m.rows() && !inverse(m)) return false;
  return true;
}
inline bool endo_nilpotent(Endo a, std::size_t n) {
  Endo p = a;
  for (std::size_t k = 0; k < n && !endo_zero(p); ++k) p = endo_mul(p, a);
  return endo_zero(p);
}
inline Endo endo_combo(const HomSpace& H, const Vec& c) {
  Endo r;
  for (std::size_t w = 0; w < H.weights.size(); ++w) {
    Matrix m(H.field, H.basis[0][w].rows(), H.basis[0][w].cols());
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!c[k].is_zero()) m = m + c[k] * H.basis[k][w];
    r.push_back(std::move(m));
  }
  return r;
}
inline Elem endo_trace(const Field& F, const Endo& a) {
  Elem t = F.zero();
  for (const auto& m : a)
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}
inline bool endo_commutative(const HomSpace& H) {
  for (std::size_t k = 0; k < H.basis.size(); ++k)
    for (std::size_t l = k + 1; l < H.basis.size(); ++l)
      if (endo_mul(H.basis[k], H.basis[l]) != endo_mul(H.basis[l], H.basis[k])) return false;
  return true;
}
inline Poly derivative(const Poly& f) {
  std::vector<Elem> c;
  for (std::size_t k = 1; k < f.coeffs().size(); ++k) c.push_back(f.field().from_int(static_cast<std::int64_t>(k)) * f.coeffs()[k]);
  return Poly(f.field(), std::move(c));
}
// smallest monic m with m(a) = 0 inside the span of H
inline Poly endo_minimal_polynomial(const HomSpace& H, const Endo& a) {
  const Field& F = H.field;
  Endo p;
  for (const auto& m : H.basis[0]) p.push_back(Matrix::identity(F, m.rows()));
  std::vector<Vec> cols;
  auto flat = [](const Endo& e) {
    Vec v;
    for (const auto& m : e)
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
  };
  for (std::size_t n = 0; n <= H.basis.size(); ++n) {
    cols.push_back(flat(p));
    Matrix M(F, cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < cols[j].size(); ++i) M(i, j) = cols[j][i];
    auto ker = nullspace(M);
    if (!ker.empty()) return Poly(F, ker.front()).monic();
    p = endo_mul(p, a);
  }
  fail(Errc::EnumerationBudgetExceeded, "no minimal polynomial within the algebra dimension");
}

}  // namespace detail

// Decides whether the algebra spanned by E.basis (an endomorphism ring) is local.
inline bool endomorphism_ring_is_local(const HomSpace& E, const Limits& lim) {
  const Field& F = E.field;
  std::size_t dim = E.basis.size();
  if (dim == 0) return false;
  if (dim == 1) return true;
  std::size_t total = 0;
  for (const auto& m : E.basis[0]) total += m.rows();

  if (F.is_finite()) {
    long double count = 1;
    for (std::size_t k = 0; k < dim; ++k) count *= static_cast<long double>(F.order());
    if (count <= static_cast<long double>(lim.max_enum)) {
      auto elems = F.elements();
      std::vector<std::size_t> idx(dim, 0);
      while (true) {
        Vec c;
        for (auto i : idx) c.push_back(elems[i]);
        auto phi = detail::endo_combo(E, c);
        if (!detail::endo_zero(phi) && detail::endo_mul(phi, phi) == phi) {
          bool one = true;
          for (const auto& m : phi) one = one && m.is_identity();
          if (!one) return false;
        }
        std::size_t k = 0;
        while (k < dim && ++idx[k] == elems.size()) idx[k++] = 0;
        if (k == dim) return true;
      }
    }
  }
  // Fitting: in a local ring every element is nilpotent or invertible
  std::vector<Vec> probes;
  for (std::size_t k = 0; k < dim; ++k) probes.push_back(unit_vector(F, dim, k));
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t l = k + 1; l < dim; ++l) {
      Vec v(dim, F.zero());
      v[k] = v[l] = F.one();
      probes.push_back(v);
    }
  for (const auto& c : probes) {
    auto phi = detail::endo_combo(E, c);
    if (!detail::endo_invertible(phi) && !detail::endo_nilpotent(phi, total)) return false;
  }
  if (F.characteristic() == 0) {
    // radical = kernel of the trace form; local iff the quotient is one-dimensional
    Matrix gram(F, dim, dim);
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t l = 0; l < dim; ++l)
        gram(k, l) = detail::endo_trace(F, detail::endo_mul(detail::endo_combo(E, unit_vector(F, dim, k)),
                                                            detail::endo_combo(E, unit_vector(F, dim, l))));
    std::size_t semisimple = rank(gram);
    if (semisimple == 1) return true;
    if (detail::endo_commutative(E)) {
      // A/J is a product of fields. A reducible radical of a minimal polynomial
      // exposes an idempotent; an irreducible one of degree dim A/J makes A/J a field.
      for (std::int64_t s = 2; s <= 7; ++s) {
        Vec c;
        Elem w = F.one();
        for (std::size_t k = 0; k < dim; ++k, w *= F.from_int(s)) c.push_back(w);
        Poly m = detail::endo_minimal_polynomial(E, detail::endo_combo(E, c));
        Poly r = m.divmod(gcd(m, detail::derivative(m))).first.monic();
        Tri t = is_irreducible(r, lim);
        if (t == Tri::no) return false;
        if (t == Tri::yes && static_cast<std::size_t>(r.degree()) == semisimple) return true;
      }
    }
  }
  fail(Errc::EnumerationBudgetExceeded, "endomorphism algebra too large to decide indecomposability");
}

// End(M) local <=> M indecomposable (finite dimension).
inline bool is_indecomposable_finite(const WeightModule& M, const Limits& lim = Limits::from_env()) {
  if (M.total_dim() == 0) return false;
  return endomorphism_ring_is_local(hom_space(M, M), lim);
}

inline WeightModule direct_sum(const WeightModule& M, const WeightModule& N) {
  check_compatible(M, N);
  std::map<ShiftVector, std::size_t> dims;
  for (const auto& g : M.window) dims[g] = M.dim(g) + N.dim(g);
  WeightModule S = WeightModule::blank(M.orbit, M.indices, M.window, dims);
  for (int i : M.indices)
    for (const auto& g : M.window) {
      if (auto a = M.x.at(i).at(g)) S.set_x(i, g, block_diag(M.field(), {*a, *N.x.at(i).at(g)}));
      if (auto a = M.d.at(i).at(g)) S.set_d(i, g, block_diag(M.field(), {*a, *N.d.at(i).at(g)}));
    }
  return S;
}

// Evaluates a word of x/d steps on a module; nullopt when it leaves the window.
inline std::optional<SemiMap> evaluate_word(const WeightModule& M, const std::vector<GStep>& word) {
  std::optional<SemiMap> acc;
  for (const auto& s : word) {
    auto op = s.op == 'x' ? M.xmap(s.index, s.from) : M.dmap(s.index, s.from);
    if (!op) return std::nullopt;
    acc = acc ? compose(M.residue(), *op, *acc) : *op;
  }
  return acc;
}

// ---- translation functors ----

// char 0: the expanded module of a skeleton module over A(F, I)
inline WeightModule from_skeleton_A(const OrbitInfo& info, const SkelModuleA& S, const std::vector<int>& indices,
                                    const std::vector<ShiftVector>& window) {
  if (info.kind != OrbitKind::linear) fail(Errc::WrongCharacteristic, "A-skeleton modules need characteristic 0");
  if (S.I != info.break_set) fail(Errc::ObjectMismatch, "skeleton module over the wrong break set");
  for (int i : info.break_set)
    if (std::find(indices.begin(), indices.end(), i) == indices.end())
      fail(Errc::WindowTooSmall, "window indices must cover the break set");
  std::map<ShiftVector, std::size_t> dims;
  for (const auto& g : window) dims[g] = S.dim(canonical_skeleton_rep(info, g));
  WeightModule M = WeightModule::blank(info, indices, window, dims);
  const Field& F = M.field();
  for (int i : indices)
    for (const auto& g : M.window) {
      ShiftVector delta = canonical_skeleton_rep(info, g);
      std::size_t n = M.dim(g);
      if (M.x[i][g]) {
        if (info.in_break(i) && g[i] == 0) M.set_x(i, g, S.a.at({delta, i}));
        else M.set_x(i, g, Matrix::identity(F, n));
      }
      if (M.d[i][g]) {
        if (info.in_break(i) && g[i] == 1) M.set_d(i, g, S.b.at({delta - ShiftVector::unit(i), i}));
        else M.set_d(i, g, Matrix::scalar(info.t_scalar(i, g[i] - 1), n));
      }
    }
  return M;
}

inline SkelModuleA to_skeleton_A(const WeightModule& M) {
  const OrbitInfo& info = M.orbit;
  if (info.kind != OrbitKind::linear) fail(Errc::WrongCharacteristic, "A-skeleton modules need characteristic 0");
  SkelModuleA S;
  S.field = M.field();
  S.I = info.break_set;
  for (const auto& alpha : info.skeleton_objects) {
    if (!M.contains(alpha)) fail(Errc::WindowTooSmall, "window misses skeleton object " + alpha.to_string());
    S.dims[alpha] = M.dim(alpha);
  }
  for (const auto& alpha : info.skeleton_objects)
    for (int i : S.I) {
      if (alpha[i] != 0) continue;
      ShiftVector beta = alpha + ShiftVector::unit(i);
      auto X = M.xmap(i, alpha);
      auto D = M.dmap(i, beta);
      if (!X || !D) fail(Errc::WindowTooSmall, "window misses a crossing at " + alpha.to_string());
      S.a[{alpha, i}] = X->mat;
      S.b[{alpha, i}] = D->mat;
    }
  return S;
}

// char p: the expanded module of a skeleton module over B(F, I, J, tau); the window is the whole orbit
inline WeightModule from_skeleton_B(const SkeletonAlgebra& alg, const SkelModuleB& S) {
  const OrbitInfo& info = alg.info;
  if (info.kind != OrbitKind::cyclic) fail(Errc::WrongCharacteristic, "B-skeleton modules need positive characteristic");
  auto indices = info.indices();
  auto window = orbit_points(info);
  std::map<ShiftVector, std::size_t> dims;
  for (const auto& g : window) dims[g] = S.dim;
  WeightModule M = WeightModule::blank(info, indices, window, dims);
  const ResidueField& rf = M.residue();
  const Field& F = M.field();
  Matrix id = Matrix::identity(F, S.dim);
  for (int i : indices) {
    int r = info.period(i);
    bool brk = info.in_break(i);
    SemiMap G = brk ? SemiMap{S.a.at(i), {}} : SemiMap{S.c.at(i), M.twist_x(i)};
    std::optional<SemiMap> Ginv;
    if (!brk) {
      Ginv = invert(rf, G);
      if (!Ginv) fail(Errc::RelationViolation, "c_" + std::to_string(i) + " is not invertible");
    }
    Elem P = F.one();
    for (int g = 1; g < r; ++g) P *= info.t_scalar(i, g);
    for (const auto& g : window) {
      std::int64_t gi = g[i];
      M.set_x(i, g, gi == 0 ? G.mat : id);
      // d at coordinate gi lands at gi - 1 and undoes x there up to t
      std::int64_t below = (gi - 1 + r) % r;
      Elem s = info.t_scalar(i, below);
      if (below != 0) M.set_d(i, g, Matrix::scalar(s, S.dim));
      else if (brk) M.set_d(i, g, P.inverse() * S.b.at(i));
      else M.set_d(i, g, scaled(s, *Ginv).mat);
    }
  }
  return M;
}

inline SkelModuleB to_skeleton_B(const SkeletonAlgebra& alg, const WeightModule& M) {
  const OrbitInfo& info = alg.info;
  const ResidueField& rf = M.residue();
  ShiftVector w;
  if (!M.contains(w)) fail(Errc::WindowTooSmall, "window misses the base point");
  SkelModuleB S;
  S.dim = M.dim(w);
  for (const auto& gi : alg.table) {
    if (gi.inverse) continue;
    auto v = evaluate_word(M, gi.word);
    if (!v) fail(Errc::WindowTooSmall, "window misses part of the word for " + gi.generator);
    int i = gi.word.front().index;
    if (gi.generator[0] == 'a') S.a[i] = v->mat;
    else if (gi.generator[0] == 'b') S.b[i] = v->mat;
    else S.c[i] = v->mat;
  }
  return S;
}

}  // namespace weylmod
