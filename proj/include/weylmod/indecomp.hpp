#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "weylmod/simples.hpp"
#include "weylmod/weightmod.hpp"

namespace weylmod {

// ---- block type ----

struct RepType {
  std::string value;  // finite | tame | wild
  std::string reason;
};

inline RepType classify_block(const OrbitInfo& info) {
  if (info.kind == OrbitKind::linear) {
    std::size_t k = info.degenerate ? info.break_set.size() : 0;
    if (k == 0) return {"finite", "char 0: nondegenerate orbit"};
    if (k == 1) return {"finite", "char 0: maximal break of order 1"};
    if (k == 2) return {"tame", "char 0: maximal break of order 2"};
    return {"wild", "char 0: maximal break of order >= 3"};
  }
  if (info.indices().size() == 1) return {"tame", "char p: n = 1"};
  return {"wild", "char p: n >= 2"};
}

// ---- quivers ----

enum class QuiverKind { Q1, Q2 };

inline std::string quiver_name(QuiverKind k) { return k == QuiverKind::Q1 ? "Q1" : "Q2"; }

inline QuiverKind parse_quiver(const std::string& s) {
  if (s == "Q1" || s == "q1") return QuiverKind::Q1;
  if (s == "Q2" || s == "q2") return QuiverKind::Q2;
  throw SchemaError("unknown quiver '" + s + "'");
}

struct QArrow {
  std::string name;
  std::size_t src, tgt;
};

// path = arrows applied left to right; an empty rhs means the path vanishes
struct QRelation {
  std::vector<std::size_t> lhs, rhs;
};

struct Quiver {
  QuiverKind kind;
  std::vector<std::string> vertices;
  std::vector<QArrow> arrows;
  std::vector<QRelation> relations;

  std::size_t arrow_index(const std::string& name) const {
    for (std::size_t k = 0; k < arrows.size(); ++k)
      if (arrows[k].name == name) return k;
    throw SchemaError("unknown arrow '" + name + "' for " + quiver_name(kind));
  }
};

// Skeleton objects are bit vectors over I; these name the vertex of an object
// and the arrow that leaves it along i.
inline std::size_t skeleton_vertex(QuiverKind k, const std::vector<int>& I, const ShiftVector& alpha) {
  if (k == QuiverKind::Q1) return static_cast<std::size_t>(alpha[I.at(0)]);
  static const std::size_t gamma[2][2] = {{0, 1}, {3, 2}};  // [alpha_i][alpha_j]
  return gamma[alpha[I.at(0)]][alpha[I.at(1)]];
}

inline std::string skeleton_arrow(QuiverKind k, const std::vector<int>& I, const ShiftVector& alpha, int i) {
  if (k == QuiverKind::Q1) return alpha[i] == 0 ? "a" : "b";
  std::size_t u = skeleton_vertex(k, I, alpha), v = skeleton_vertex(k, I, SkelModuleA::flip(alpha, i));
  return v == (u + 1) % 4 ? "a" + std::to_string(u) : "b" + std::to_string(v);
}

inline std::vector<int> model_break_set(QuiverKind k) {
  return k == QuiverKind::Q1 ? std::vector<int>{1} : std::vector<int>{1, 2};
}

// Relations are the skeleton relations transported through the vertex map.
inline Quiver make_quiver(QuiverKind k) {
  Quiver q{k, {}, {}, {}};
  if (k == QuiverKind::Q1) {
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 0, 1}, {"b", 1, 0}};
  } else {
    q.vertices = {"0", "1", "2", "3"};
    for (std::size_t v = 0; v < 4; ++v) q.arrows.push_back({"a" + std::to_string(v), v, (v + 1) % 4});
    for (std::size_t v = 0; v < 4; ++v) q.arrows.push_back({"b" + std::to_string(v), (v + 1) % 4, v});
  }
  auto I = model_break_set(k);
  auto arr = [&](const ShiftVector& a, int i) { return q.arrow_index(skeleton_arrow(k, I, a, i)); };
  for (const auto& alpha : bit_vectors(I)) {
    for (int i : I) q.relations.push_back({{arr(alpha, i), arr(SkelModuleA::flip(alpha, i), i)}, {}});
    for (int i : I)
      for (int j : I)
        if (i < j)
          q.relations.push_back({{arr(alpha, j), arr(SkelModuleA::flip(alpha, j), i)},
                                 {arr(alpha, i), arr(SkelModuleA::flip(alpha, i), j)}});
  }
  return q;
}

inline const Quiver& quiver(QuiverKind k) {
  static const Quiver q1 = make_quiver(QuiverKind::Q1), q2 = make_quiver(QuiverKind::Q2);
  return k == QuiverKind::Q1 ? q1 : q2;
}

struct QuiverRep {
  QuiverKind quiver = QuiverKind::Q1;
  Field field;
  std::vector<std::size_t> dims;
  std::map<std::string, Matrix> arrows;
  std::string label;

  static QuiverRep zero(QuiverKind k, const Field& f, std::vector<std::size_t> dims, std::string label = "") {
    const Quiver& q = weylmod::quiver(k);
    if (dims.size() != q.vertices.size()) throw SchemaError("dimension vector has the wrong length");
    QuiverRep r{k, f, std::move(dims), {}, std::move(label)};
    for (const auto& a : q.arrows) r.arrows.emplace(a.name, Matrix(f, r.dims[a.tgt], r.dims[a.src]));
    return r;
  }

  const Matrix& arrow(const std::string& n) const { return arrows.at(n); }
  Matrix& arrow(const std::string& n) { return arrows.at(n); }
  std::size_t total_dim() const {
    std::size_t t = 0;
    for (auto d : dims) t += d;
    return t;
  }

  friend bool operator==(const QuiverRep& x, const QuiverRep& y) {
    return x.quiver == y.quiver && x.field == y.field && x.dims == y.dims && x.arrows == y.arrows;
  }
};

inline Matrix path_matrix(const QuiverRep& r, const std::vector<std::size_t>& path, std::size_t start) {
  const Quiver& q = quiver(r.quiver);
  Matrix m = Matrix::identity(r.field, r.dims[start]);
  for (auto k : path) m = r.arrow(q.arrows[k].name) * m;
  return m;
}

inline std::vector<std::string> relation_failures(const QuiverRep& r) {
  const Quiver& q = quiver(r.quiver);
  std::vector<std::string> out;
  if (r.dims.size() != q.vertices.size()) return {"dimension vector has the wrong length"};
  for (const auto& a : q.arrows) {
    auto it = r.arrows.find(a.name);
    if (it == r.arrows.end()) out.push_back("missing arrow " + a.name);
    else if (it->second.rows() != r.dims[a.tgt] || it->second.cols() != r.dims[a.src])
      out.push_back("shape of " + a.name);
  }
  if (!out.empty()) return out;
  auto name = [&](const std::vector<std::size_t>& p) {
    std::string s;
    for (auto it = p.rbegin(); it != p.rend(); ++it) s += q.arrows[*it].name;
    return s.empty() ? std::string("0") : s;
  };
  for (const auto& rel : q.relations) {
    std::size_t s = q.arrows[rel.lhs.front()].src;
    Matrix l = path_matrix(r, rel.lhs, s);
    bool ok = rel.rhs.empty() ? l.is_zero() : l == path_matrix(r, rel.rhs, s);
    if (!ok) out.push_back(name(rel.lhs) + "=" + name(rel.rhs));
  }
  return out;
}

inline LinearData linear_data(const QuiverRep& r) {
  const Quiver& q = quiver(r.quiver);
  LinearData L;
  L.field = r.field;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    L.weights.push_back(ShiftVector::unit(1, static_cast<std::int64_t>(v) + 1));
    L.dims.push_back(r.dims[v]);
  }
  for (const auto& a : q.arrows) L.ops.push_back({a.src, a.tgt, a.name, r.arrow(a.name)});
  return L;
}

inline HomSpace quiver_hom(const QuiverRep& m, const QuiverRep& n) {
  if (m.quiver != n.quiver || m.field != n.field) fail(Errc::ObjectMismatch, "representations of different quivers");
  return hom_space(linear_data(m), linear_data(n), 1);
}

inline bool is_indecomposable_rep(const QuiverRep& r, const Limits& lim = Limits::from_env()) {
  if (r.total_dim() == 0) return false;
  return endomorphism_ring_is_local(quiver_hom(r, r), lim);
}

// Exhaustive search for an invertible intertwiner (finite fields only).
inline bool isomorphic_finite(const QuiverRep& m, const QuiverRep& n, const Limits& lim = Limits::from_env()) {
  if (m.quiver != n.quiver || m.dims != n.dims) return false;
  const Field& F = m.field;
  if (!F.is_finite()) fail(Errc::InfiniteDimension, "exhaustive isomorphism search needs a finite field");
  HomSpace H = quiver_hom(m, n);
  std::size_t dim = H.basis.size();
  if (dim == 0) return m.total_dim() == 0;
  long double count = 1;
  for (std::size_t k = 0; k < dim; ++k) count *= static_cast<long double>(F.order());
  if (count > static_cast<long double>(lim.max_enum)) fail(Errc::EnumerationBudgetExceeded, "Hom space too large to search");
  auto elems = F.elements();
  std::vector<std::size_t> idx(dim, 0);
  while (true) {
    Vec c;
    for (auto i : idx) c.push_back(elems[i]);
    if (detail::endo_invertible(detail::endo_combo(H, c))) return true;
    std::size_t k = 0;
    while (k < dim && ++idx[k] == elems.size()) idx[k++] = 0;
    if (k == dim) return false;
  }
}

// Invariants that separate members of the classification lists.
struct RepFingerprint {
  std::vector<std::size_t> dims;
  std::vector<std::size_t> ranks;
  std::vector<std::size_t> hom_to, hom_from;
  friend bool operator==(const RepFingerprint&, const RepFingerprint&) = default;
};

inline RepFingerprint fingerprint(const QuiverRep& r, const std::vector<QuiverRep>& probes) {
  RepFingerprint f;
  f.dims = r.dims;
  for (const auto& a : quiver(r.quiver).arrows) f.ranks.push_back(rank(r.arrow(a.name)));
  for (const auto& p : probes) {
    f.hom_to.push_back(quiver_hom(r, p).basis.size());
    f.hom_from.push_back(quiver_hom(p, r).basis.size());
  }
  return f;
}

// ---- classification lists ----

inline std::vector<QuiverRep> q1_indecomposables(const Field& F) {
  std::vector<QuiverRep> out;
  out.push_back(QuiverRep::zero(QuiverKind::Q1, F, {1, 0}, "S_1"));
  out.push_back(QuiverRep::zero(QuiverKind::Q1, F, {0, 1}, "S_2"));
  auto ma = QuiverRep::zero(QuiverKind::Q1, F, {1, 1}, "M_a");
  ma.arrow("a")(0, 0) = F.one();
  out.push_back(ma);
  auto mb = QuiverRep::zero(QuiverKind::Q1, F, {1, 1}, "M_b");
  mb.arrow("b")(0, 0) = F.one();
  out.push_back(mb);
  return out;
}

// f = x^e + z_e x^(e-1) + ... + z_1 gives the matrix of x on F[x]/(f).
inline Matrix companion(const Poly& f) {
  if (!f.is_monic() || f.degree() < 1) fail(Errc::InvalidIdeal, "companion matrix needs a monic polynomial of degree >= 1");
  std::size_t e = static_cast<std::size_t>(f.degree());
  Matrix m(f.field(), e, e);
  for (std::size_t r = 1; r < e; ++r) m(r, r - 1) = f.field().one();
  for (std::size_t r = 0; r < e; ++r) m(r, e - 1) = -f.coeff(r);
  return m;
}

// Powers of monic irreducibles other than x, degree <= max_deg. Over Q only
// integer coefficients of absolute value <= height are tried.
inline std::vector<Poly> ind0_polynomials(const Field& F, int max_deg, int height = 2, const Limits& lim = {}) {
  std::vector<Poly> irr;
  Poly x = Poly::x(F);
  if (F.is_finite()) {
    for (int d = 1; d <= max_deg; ++d)
      for (const auto& g : monic_irreducibles(F, d, lim))
        if (g != x) irr.push_back(g);
  } else {
    for (int d = 1; d <= std::min(max_deg, 3); ++d) {
      std::vector<std::int64_t> c(static_cast<std::size_t>(d), -height);
      while (true) {
        std::vector<Elem> co;
        for (auto v : c) co.push_back(F.from_int(v));
        co.push_back(F.one());
        Poly g(F, co);
        if (g != x && is_irreducible(g, lim) == Tri::yes) irr.push_back(g);
        std::size_t k = 0;
        while (k < c.size() && ++c[k] > height) c[k++] = -height;
        if (k == c.size()) break;
      }
    }
  }
  std::vector<Poly> out;
  for (const auto& g : irr)
    for (unsigned n = 1; static_cast<int>(n) * g.degree() <= max_deg; ++n) out.push_back(g.pow(n));
  return out;
}

inline std::vector<QuiverRep> q2_indecomposables(const Field& F, int max_string_len, int max_poly_deg, int height = 2,
                                                 const Limits& lim = {}) {
  std::vector<QuiverRep> out;
  auto at = [](std::int64_t v) { return static_cast<std::size_t>(((v % 4) + 4) % 4); };
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<std::size_t> d(4, 0);
    d[i] = 1;
    out.push_back(QuiverRep::zero(QuiverKind::Q2, F, d, "S_" + std::to_string(i)));
  }
  for (std::size_t i = 0; i < 4; ++i) {
    auto m = QuiverRep::zero(QuiverKind::Q2, F, {1, 1, 1, 1}, "M_" + std::to_string(i));
    m.arrow("a" + std::to_string(i))(0, 0) = F.one();
    m.arrow("a" + std::to_string(at(i + 1)))(0, 0) = F.one();
    m.arrow("b" + std::to_string(at(i - 1)))(0, 0) = F.one();
    m.arrow("b" + std::to_string(at(i - 2)))(0, 0) = F.one();
    out.push_back(m);
  }
  // strings: e_k sits at vertex j + k - 1; vertices of parity eps send a forward and b backward
  for (int n = 2; n <= max_string_len; ++n)
    for (int j = 0; j < 4; ++j)
      for (int eps = 0; eps < 2; ++eps) {
        std::vector<std::size_t> d(4, 0), pos(static_cast<std::size_t>(n) + 1);
        for (int k = 1; k <= n; ++k) pos[k] = d[at(j + k - 1)]++;
        auto m = QuiverRep::zero(QuiverKind::Q2, F, d,
                                 "M_{" + std::to_string(n) + "," + std::to_string(j) + "," + std::to_string(eps) + "}");
        for (int k = 1; k <= n; ++k) {
          std::size_t l = at(j + k - 1);
          if (static_cast<int>(l % 2) != eps) continue;
          if (k < n) m.arrow("a" + std::to_string(l))(pos[k + 1], pos[k]) = F.one();
          if (k > 1) m.arrow("b" + std::to_string(at(l + 3)))(pos[k - 1], pos[k]) = F.one();
        }
        out.push_back(m);
      }
  for (const auto& f : ind0_polynomials(F, max_poly_deg, height, lim)) {
    std::size_t e = static_cast<std::size_t>(f.degree());
    Matrix I = Matrix::identity(F, e), C = companion(f);
    auto m1 = QuiverRep::zero(QuiverKind::Q2, F, {e, e, e, e}, "M_{" + f.to_string("x") + ",1}");
    m1.arrow("a0") = m1.arrow("a2") = m1.arrow("b1") = I;
    m1.arrow("b3") = C;
    out.push_back(m1);
    auto m2 = QuiverRep::zero(QuiverKind::Q2, F, {e, e, e, e}, "M_{" + f.to_string("x") + ",2}");
    m2.arrow("b0") = m2.arrow("b2") = m2.arrow("a1") = I;
    m2.arrow("a3") = C;
    out.push_back(m2);
  }
  return out;
}

// ---- brute-force oracle ----

struct BruteForceResult {
  std::uint64_t tuples = 0;   // relation-satisfying arrow tuples
  std::uint64_t classes = 0;  // isomorphism classes among them
  std::vector<QuiverRep> indecomposables;  // least-encoding representative per class
};

namespace detail {

inline std::vector<std::pair<Matrix, Matrix>> general_linear(const Field& F, std::size_t d, const Limits& lim) {
  std::vector<std::pair<Matrix, Matrix>> out;
  auto elems = F.elements();
  std::uint64_t q = elems.size(), total = 1;
  for (std::size_t k = 0; k < d * d; ++k) {
    total *= q;
    if (total > lim.max_enum) fail(Errc::EnumerationBudgetExceeded, "GL(" + std::to_string(d) + ") too large to enumerate");
  }
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Matrix m(F, d, d);
    std::uint64_t v = idx;
    for (std::size_t k = 0; k < d * d; ++k, v /= q) m(k / d, k % d) = elems[v % q];
    if (auto inv = inverse(m)) out.push_back({m, *inv});
  }
  return out;
}

}  // namespace detail

inline BruteForceResult brute_force_indecomposables(QuiverKind kind, const Field& F, const std::vector<std::size_t>& dims,
                                                    const Limits& lim = Limits::from_env()) {
  if (!F.is_finite()) fail(Errc::InfiniteDimension, "brute-force enumeration needs a finite field");
  const Quiver& Q = quiver(kind);
  if (dims.size() != Q.vertices.size()) throw SchemaError("dimension vector has the wrong length");
  auto elems = F.elements();
  const std::uint64_t q = elems.size();

  // encoding: arrow entries in quiver order, row-major, first entry least significant
  std::size_t slots = 0;
  for (const auto& a : Q.arrows) slots += dims[a.tgt] * dims[a.src];
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < slots; ++k) {
    total *= q;
    if (total > lim.max_enum) fail(Errc::EnumerationBudgetExceeded, "too many arrow tuples to enumerate");
  }
  auto decode = [&](std::uint64_t idx) {
    QuiverRep r = QuiverRep::zero(kind, F, dims);
    for (const auto& a : Q.arrows) {
      Matrix& m = r.arrow(a.name);
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j, idx /= q) m(i, j) = elems[idx % q];
    }
    return r;
  };
  auto encode = [&](const QuiverRep& r) {
    std::uint64_t idx = 0, w = 1;
    for (const auto& a : Q.arrows) {
      const Matrix& m = r.arrow(a.name);
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j, w *= q) idx += w * F.index_of(m(i, j));
    }
    return idx;
  };

  BruteForceResult res;
  std::vector<std::uint64_t> valid;
  for (std::uint64_t idx = 0; idx < total; ++idx)
    if (relation_failures(decode(idx)).empty()) valid.push_back(idx);
  res.tuples = valid.size();

  // base change only matters at vertices touched by a nonempty arrow
  std::vector<std::size_t> acting;
  for (std::size_t v = 0; v < dims.size(); ++v)
    for (const auto& a : Q.arrows)
      if ((a.src == v || a.tgt == v) && dims[a.src] && dims[a.tgt]) {
        acting.push_back(v);
        break;
      }
  std::vector<std::vector<std::pair<Matrix, Matrix>>> gl(dims.size());
  long double order = 1;
  for (auto v : acting) {
    gl[v] = detail::general_linear(F, dims[v], lim);
    order *= static_cast<long double>(gl[v].size());
  }
  if (order * static_cast<long double>(valid.size()) > static_cast<long double>(lim.max_oracle))
    fail(Errc::EnumerationBudgetExceeded, "orbit sweep exceeds the oracle budget");

  std::set<std::uint64_t> seen;
  for (auto idx : valid) {
    if (seen.count(idx)) continue;
    QuiverRep r = decode(idx);
    ++res.classes;
    std::vector<std::size_t> pick(acting.size(), 0);
    while (true) {
      QuiverRep s = r;
      for (const auto& a : Q.arrows) {
        Matrix m = r.arrow(a.name);
        if (m.empty()) continue;
        for (std::size_t k = 0; k < acting.size(); ++k) {
          auto v = acting[k];
          if (a.tgt == v) m = gl[v][pick[k]].first * m;
          if (a.src == v) m = m * gl[v][pick[k]].second;
        }
        s.arrow(a.name) = m;
      }
      seen.insert(encode(s));
      std::size_t k = 0;
      while (k < acting.size() && ++pick[k] == gl[acting[k]].size()) pick[k++] = 0;
      if (k == acting.size()) break;
    }
    // valid is ascending, so the first unseen member is the least encoding of its class
    if (is_indecomposable_rep(r, lim)) {
      r.label = "class#" + std::to_string(res.classes);
      res.indecomposables.push_back(r);
    }
  }
  return res;
}

inline std::vector<QuiverRep> restrict_to_dims(const std::vector<QuiverRep>& list, const std::vector<std::size_t>& dims) {
  std::vector<QuiverRep> out;
  for (const auto& r : list)
    if (r.dims == dims) out.push_back(r);
  return out;
}

// ---- skeleton transport ----

inline SkelModuleA rep_to_skeleton(const QuiverRep& r, const std::vector<int>& I) {
  if (I.size() != (r.quiver == QuiverKind::Q1 ? 1u : 2u))
    fail(Errc::WrongBreakOrder, quiver_name(r.quiver) + " does not match a break of order " + std::to_string(I.size()));
  std::map<ShiftVector, std::size_t> dims;
  for (const auto& alpha : bit_vectors(I)) dims[alpha] = r.dims[skeleton_vertex(r.quiver, I, alpha)];
  SkelModuleA S = SkelModuleA::zero(r.field, I, dims);
  for (const auto& alpha : bit_vectors(I))
    for (int i : I) {
      if (alpha[i] != 0) continue;
      ShiftVector beta = alpha + ShiftVector::unit(i);
      S.a[{alpha, i}] = r.arrow(skeleton_arrow(r.quiver, I, alpha, i));
      S.b[{alpha, i}] = r.arrow(skeleton_arrow(r.quiver, I, beta, i));
    }
  return S;
}

inline QuiverRep skeleton_to_rep(const SkelModuleA& S) {
  if (S.I.size() != 1 && S.I.size() != 2) fail(Errc::WrongBreakOrder, "only breaks of order 1 or 2 have a quiver");
  QuiverKind k = S.I.size() == 1 ? QuiverKind::Q1 : QuiverKind::Q2;
  std::vector<std::size_t> dims(quiver(k).vertices.size(), 0);
  for (const auto& alpha : bit_vectors(S.I)) dims[skeleton_vertex(k, S.I, alpha)] = S.dim(alpha);
  QuiverRep r = QuiverRep::zero(k, S.field, dims);
  for (const auto& alpha : bit_vectors(S.I))
    for (int i : S.I) r.arrow(skeleton_arrow(k, S.I, alpha, i)) = S.arrow(alpha, i);
  return r;
}

// ---- weight-module constructions ----

struct NamedModule {
  std::string label;
  WeightModule module;
};

inline void require_break_order(const OrbitInfo& info, std::size_t n) {
  if (info.kind != OrbitKind::linear) fail(Errc::WrongCharacteristic, "this construction is characteristic 0 only");
  std::size_t k = info.degenerate ? info.break_set.size() : 0;
  if (k != n)
    fail(Errc::WrongBreakOrder, "needs a maximal break of order " + std::to_string(n) + ", got " + std::to_string(k));
}

// The four indecomposables of an order-1 break.
inline std::vector<NamedModule> build_order1_modules(const OrbitInfo& info, const std::vector<int>& indices,
                                                     const std::vector<ShiftVector>& window) {
  require_break_order(info, 1);
  int i = info.break_set.front();
  std::string si = std::to_string(i);
  auto q = q1_indecomposables(info.field());
  std::vector<NamedModule> out;
  out.push_back({"S(O,m)", build_S_O_p(info, ShiftVector{}, indices, window)});
  out.push_back({"S(O,sigma_" + si + "(m))", build_S_O_p(info, ShiftVector::unit(i), indices, window)});
  out.push_back({"M(O,x_" + si + ")", from_skeleton_A(info, rep_to_skeleton(q[2], info.break_set), indices, window)});
  out.push_back({"M(O,d_" + si + ")", from_skeleton_A(info, rep_to_skeleton(q[3], info.break_set), indices, window)});
  return out;
}

inline WeightModule build_order2_module(const OrbitInfo& info, const QuiverRep& rep, const std::vector<int>& indices,
                                        const std::vector<ShiftVector>& window) {
  require_break_order(info, 2);
  if (rep.quiver != QuiverKind::Q2) fail(Errc::WrongBreakOrder, "an order-2 break needs a Q2 representation");
  if (rep.field != info.field()) fail(Errc::FieldMismatch, "representation over the wrong field");
  auto bad = relation_failures(rep);
  if (!bad.empty()) fail(Errc::RelationViolation, "representation fails " + bad.front());
  return from_skeleton_A(info, rep_to_skeleton(rep, info.break_set), indices, window);
}

// F' of a Q1 or Q2 representation, whichever matches the break order.
inline WeightModule build_rep_module(const OrbitInfo& info, const QuiverRep& rep, const std::vector<int>& indices,
                                     const std::vector<ShiftVector>& window) {
  if (rep.quiver == QuiverKind::Q2) return build_order2_module(info, rep, indices, window);
  require_break_order(info, 1);
  if (rep.field != info.field()) fail(Errc::FieldMismatch, "representation over the wrong field");
  auto bad = relation_failures(rep);
  if (!bad.empty()) fail(Errc::RelationViolation, "representation fails " + bad.front());
  return from_skeleton_A(info, rep_to_skeleton(rep, info.break_set), indices, window);
}

inline QuiverRep to_quiver_rep(const WeightModule& M) { return skeleton_to_rep(to_skeleton_A(M)); }

}  // namespace weylmod
