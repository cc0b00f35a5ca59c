#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "weylmod/exactfield.hpp"
#include "weylmod/linalg.hpp"
#include "weylmod/shift_vector.hpp"

namespace weylmod {

// m = (f_1(t_1), ..., f_n(t_n)) with each f_i univariate. With no arity the
// ideal lives in K[t_1, t_2, ...] and every index without an explicit
// generator uses `default_generator`.
struct SepMaxIdeal {
  Field field;
  std::optional<int> arity;
  std::map<int, Poly> generators;
  std::optional<Poly> default_generator;
  bool assume_irreducible = false;

  bool unbounded() const { return !arity.has_value(); }

  void check_index(int i) const {
    if (i < 1 || (arity && i > *arity))
      fail(Errc::IndexOutOfArity, "index " + std::to_string(i) + " outside arity " + (arity ? std::to_string(*arity) : "inf"));
  }

  Poly generator(int i) const {
    check_index(i);
    auto it = generators.find(i);
    if (it != generators.end()) return it->second;
    if (default_generator) return *default_generator;
    fail(Errc::InvalidIdeal, "no generator at index " + std::to_string(i));
  }

  // indices that carry data: 1..n, or the explicit overrides when unbounded
  std::vector<int> indices() const {
    std::vector<int> out;
    if (arity)
      for (int i = 1; i <= *arity; ++i) out.push_back(i);
    else
      for (const auto& [i, f] : generators) out.push_back(i);
    return out;
  }

  friend bool operator==(const SepMaxIdeal& a, const SepMaxIdeal& b) {
    return a.field == b.field && a.arity == b.arity && a.generators == b.generators &&
           a.default_generator == b.default_generator && a.assume_irreducible == b.assume_irreducible;
  }
};

namespace detail {

// t - c with c an integer of the prime field (denominator 1 over Q)
inline std::optional<std::int64_t> integer_root_shift(const Poly& f) {
  if (f.degree() != 1) return std::nullopt;
  Elem c = -f.coeff(0);
  if (!c.in_prime_field()) return std::nullopt;
  Elem c0 = c.to_prime_field();
  if (c0.field().kind() == FieldKind::prime) return c0.residue();
  const Rational& q = c0.rational();
  if (boost::multiprecision::denominator(q) != 1) return std::nullopt;
  Integer n = boost::multiprecision::numerator(q);
  if (boost::multiprecision::abs(n) > Integer(std::int64_t{1} << 62)) fail(Errc::InvalidIdeal, "shift too large");
  return static_cast<std::int64_t>(n);
}

}  // namespace detail

inline void validate_shape(const SepMaxIdeal& m) {
  if (!m.field.data()) fail(Errc::InvalidIdeal, "ideal without a field");
  auto check = [&](const Poly& f, const std::string& where) {
    if (f.field() != m.field) fail(Errc::FieldMismatch, where + ": generator over the wrong field");
    if (f.degree() < 1 || !f.is_monic()) fail(Errc::InvalidIdeal, where + ": generator must be monic of degree >= 1");
  };
  for (const auto& [i, f] : m.generators) {
    m.check_index(i);
    check(f, "index " + std::to_string(i));
  }
  if (m.arity) {
    if (*m.arity < 1) fail(Errc::InvalidIdeal, "arity must be positive");
    for (int i = 1; i <= *m.arity; ++i)
      if (!m.generators.count(i) && !m.default_generator)
        fail(Errc::InvalidIdeal, "missing generator at index " + std::to_string(i));
  } else {
    if (!m.default_generator) fail(Errc::InvalidIdeal, "unbounded arity needs a default generator");
    check(*m.default_generator, "default");
    if (m.field.characteristic() != 0) return;  // rejected later by orbit_info
    // the default must never break: linear t - lambda with lambda not an integer
    if (m.default_generator->degree() != 1 || detail::integer_root_shift(*m.default_generator))
      fail(Errc::InvalidIdeal, "default generator must be t - lambda with lambda not an integer");
  }
}

inline SepMaxIdeal sigma_apply(const SepMaxIdeal& m, const ShiftVector& gamma) {
  SepMaxIdeal r = m;
  for (const auto& [i, g] : gamma.entries()) {
    m.check_index(i);
    Poly f = m.generator(i).shift(-g);
    if (m.unbounded() && f == *m.default_generator) r.generators.erase(i);
    else r.generators[i] = f;
  }
  return r;
}

// D/m as a tower over K, one level per generator of degree >= 2, in index order.
struct ResidueField {
  Field base;
  Field field;
  std::vector<int> level_index;
  std::map<int, Elem> theta;  // residue of t_i
  std::optional<Elem> default_theta;

  std::size_t degree() const { return field.absolute_degree() / base.absolute_degree(); }

  Elem t_bar(int i) const {
    auto it = theta.find(i);
    if (it != theta.end()) return it->second;
    if (default_theta) return *default_theta;
    fail(Errc::IndexOutOfArity, "no residue for index " + std::to_string(i));
  }

  // the automorphism t_i -> t_i - k_i; only meaningful for indices whose
  // generator is shift invariant
  Elem shift(const Elem& x, const ShiftVector& k) const {
    if (k.is_zero()) return x;
    return shift_level(field.embed(x), field, static_cast<int>(level_index.size()) - 1, k);
  }

  // coordinates over K, coefficient-major from the top level down
  Vec to_base(const Elem& x) const {
    Vec out;
    flatten(field.embed(x), field, out);
    return out;
  }
  Elem from_base(const Vec& v) const {
    std::size_t pos = 0;
    return build(field, v, pos);
  }
  std::vector<Elem> base_basis() const {
    std::vector<Elem> out;
    std::size_t e = degree();
    for (std::size_t k = 0; k < e; ++k) {
      Vec v(e, base.zero());
      v[k] = base.one();
      out.push_back(from_base(v));
    }
    return out;
  }
  Matrix mult_matrix(const Elem& lambda) const {
    auto basis = base_basis();
    Matrix m(base, basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto col = to_base(lambda * basis[j]);
      for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
    }
    return m;
  }
  Matrix shift_matrix(const ShiftVector& k) const {
    auto basis = base_basis();
    Matrix m(base, basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto col = to_base(shift(basis[j], k));
      for (std::size_t i = 0; i < col.size(); ++i) m(i, j) = col[i];
    }
    return m;
  }
  // generators of F as a K-algebra
  std::vector<Elem> algebra_generators() const {
    std::vector<Elem> out;
    Field f = field;
    std::vector<Field> levels;
    while (f != base) {
      levels.push_back(f);
      f = f.base();
    }
    for (const auto& l : levels) out.push_back(field.embed(l.gen()));
    return out;
  }

 private:
  Elem shift_level(const Elem& x, const Field& f, int level, const ShiftVector& k) const {
    if (level < 0) return x;
    std::vector<Elem> c;
    for (const auto& y : x.coeffs()) c.push_back(shift_level(y, f.base(), level - 1, k));
    Poly p(f.base(), c);
    std::int64_t s = k[level_index[static_cast<std::size_t>(level)]];
    if (s != 0) p = p.shift(-s);
    return f.from_coeffs(p.coeffs());
  }
  void flatten(const Elem& x, const Field& f, Vec& out) const {
    if (f == base) {
      out.push_back(x);
      return;
    }
    for (std::size_t k = 0; k < f.ext_degree(); ++k)
      flatten(k < x.coeffs().size() ? x.coeffs()[k] : f.base().zero(), f.base(), out);
  }
  Elem build(const Field& f, const Vec& v, std::size_t& pos) const {
    if (f == base) return v.at(pos++);
    std::vector<Elem> c;
    for (std::size_t k = 0; k < f.ext_degree(); ++k) c.push_back(build(f.base(), v, pos));
    return f.from_coeffs(std::move(c));
  }
};

enum class OrbitKind { linear, cyclic };
enum class Tau { one, sigma };

struct OrbitInfo {
  SepMaxIdeal input;
  SepMaxIdeal base;            // maximal break when degenerate
  ShiftVector input_offset;    // input = sigma^{input_offset}(base)
  OrbitKind kind = OrbitKind::linear;
  std::vector<int> break_set;
  bool degenerate = false;
  std::map<int, int> periods;  // char p only
  std::map<int, Tau> tau;      // char p only
  std::vector<ShiftVector> skeleton_objects;
  ResidueField residue;
  bool certified = true;

  std::int64_t characteristic() const { return base.field.characteristic(); }
  const Field& field() const { return residue.field; }
  std::vector<int> indices() const { return base.indices(); }
  bool in_break(int i) const { return std::find(break_set.begin(), break_set.end(), i) != break_set.end(); }
  // J = indices outside the break set
  std::vector<int> complement() const {
    std::vector<int> out;
    for (int i : indices())
      if (!in_break(i)) out.push_back(i);
    return out;
  }
  // 0 means infinite (char 0)
  int period(int i) const {
    if (kind == OrbitKind::linear) return 0;
    auto it = periods.find(i);
    return it == periods.end() ? static_cast<int>(characteristic()) : it->second;
  }
  // x_i acts semilinearly on a single weight space
  bool twisted(int i) const { return kind == OrbitKind::cyclic && period(i) == 1; }
  // scalar by which t_i acts on the weight gamma
  Elem t_scalar(int i, std::int64_t gamma_i) const { return residue.t_bar(i) + field().from_int(gamma_i); }

  ShiftVector normalize(const ShiftVector& g) const {
    if (kind == OrbitKind::linear) return g;
    ShiftVector r;
    for (const auto& [i, v] : g.entries()) {
      std::int64_t p = period(i);
      r.set(i, ((v % p) + p) % p);
    }
    return r;
  }
};

inline OrbitInfo orbit_info(const SepMaxIdeal& m, const Limits& lim = Limits{}) {
  validate_shape(m);
  const std::int64_t p = m.field.characteristic();
  if (p != 0 && m.unbounded())
    fail(Errc::InfiniteCharPOrbit, "positive characteristic needs a finite number of variables");

  OrbitInfo info;
  info.input = m;
  info.kind = p == 0 ? OrbitKind::linear : OrbitKind::cyclic;
  info.base = m;

  for (int i : m.indices()) {
    Poly f = m.generator(i);
    if (p == 0) {
      if (auto c = detail::integer_root_shift(f)) {
        info.break_set.push_back(i);
        info.input_offset.set(i, *c);
      }
    } else {
      info.periods[i] = f.shift(1) == f ? 1 : static_cast<int>(p);
      info.tau[i] = info.periods[i] == 1 ? Tau::sigma : Tau::one;
      for (std::int64_t k = 0; k < p && f.degree() == 1; ++k)
        if (f.shift(k) == Poly::x(m.field)) {
          info.break_set.push_back(i);
          info.input_offset.set(i, k);
          break;
        }
    }
  }
  info.base = sigma_apply(m, -info.input_offset);
  info.degenerate = !info.break_set.empty();

  // residue tower over the base point
  ResidueField& rf = info.residue;
  rf.base = m.field;
  Field cur = m.field;
  bool certified = true;
  std::map<int, std::size_t> level_of;
  for (int i : info.base.indices()) {
    Poly f = info.base.generator(i);
    if (f.degree() == 1) continue;
    Tri irr = is_irreducible(f.over(cur), lim);
    if (irr == Tri::no)
      fail(Errc::NotMaximal, "generator at index " + std::to_string(i) + " is reducible over the residue tower");
    if (irr == Tri::unknown) {
      if (!m.assume_irreducible)
        fail(Errc::UncertifiedIrreducibility,
             "cannot certify irreducibility of the generator at index " + std::to_string(i) + "; set assume_irreducible");
      certified = false;
    }
    cur = Field::extension(cur, f.over(cur).coeffs(), irr == Tri::yes);
    level_of[i] = rf.level_index.size();
    rf.level_index.push_back(i);
  }
  rf.field = cur;
  for (int i : info.base.indices()) {
    Poly f = info.base.generator(i);
    if (f.degree() == 1) {
      rf.theta.emplace(i, cur.embed(-f.coeff(0)));
    } else {
      // generator of level level_of[i], lifted to the top
      Field g = cur;
      for (std::size_t up = rf.level_index.size() - 1; up > level_of[i]; --up) g = g.base();
      rf.theta.emplace(i, cur.embed(g.gen()));
    }
  }
  if (info.base.unbounded()) rf.default_theta = cur.embed(-info.base.default_generator->coeff(0));
  info.certified = certified && cur.certified();

  // skeleton objects: {0,1}^I in the linear degenerate case
  if (info.kind == OrbitKind::linear && info.degenerate) {
    std::size_t s = info.break_set.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
      ShiftVector d;
      for (std::size_t k = 0; k < s; ++k)
        if (mask >> k & 1) d.set(info.break_set[k], 1);
      info.skeleton_objects.push_back(d);
    }
    std::sort(info.skeleton_objects.begin(), info.skeleton_objects.end());
  } else {
    info.skeleton_objects.push_back(ShiftVector{});
  }
  return info;
}

inline ShiftVector canonical_skeleton_rep(const OrbitInfo& info, const ShiftVector& gamma) {
  ShiftVector d;
  if (info.kind != OrbitKind::linear) return d;
  for (int i : info.break_set)
    if (gamma[i] >= 1) d.set(i, 1);
  return d;
}

// the delta whose region { delta_i = 1: gamma_i - 1 >= 0, delta_i = 0: gamma_i <= 0 } contains gamma
inline ShiftVector region_of(const OrbitInfo& info, const ShiftVector& gamma) {
  if (info.kind != OrbitKind::linear) return ShiftVector{};
  for (const auto& delta : info.skeleton_objects) {
    bool inside = true;
    for (int i : info.break_set) {
      std::int64_t k = gamma[i] - delta[i];
      if (delta[i] == 1 ? k < 0 : k > 0) inside = false;
    }
    if (inside) return delta;
  }
  fail(Errc::NotASkeletonObject, "no region contains " + gamma.to_string());
}

inline bool is_skeleton_object(const OrbitInfo& info, const ShiftVector& d) {
  return std::find(info.skeleton_objects.begin(), info.skeleton_objects.end(), d) != info.skeleton_objects.end();
}

// every point of a cyclic orbit, as shift vectors over the base
inline std::vector<ShiftVector> orbit_points(const OrbitInfo& info) {
  if (info.kind != OrbitKind::cyclic) fail(Errc::InfiniteDimension, "linear orbits are infinite");
  std::vector<ShiftVector> pts{ShiftVector{}};
  for (int i : info.indices()) {
    std::vector<ShiftVector> next;
    for (const auto& g : pts)
      for (int k = 0; k < info.period(i); ++k) {
        ShiftVector h = g;
        h.set(i, k);
        next.push_back(h);
      }
    pts = std::move(next);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace weylmod
