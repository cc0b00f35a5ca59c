#pragma once

#include <map>
#include <string>
#include <vector>

#include "weylmod/orbits.hpp"
#include "weylmod/semimap.hpp"

namespace weylmod {

// ---- the algebra A(F, I): objects {0,1}^I, every hom space one-dimensional ----

enum class Letter { a, b };

struct SkelMorphismA {
  ShiftVector source, target;
  Elem coeff;
  std::map<int, Letter> letters;

  bool is_zero() const { return coeff.is_zero(); }
  friend bool operator==(const SkelMorphismA& u, const SkelMorphismA& v) {
    return u.source == v.source && u.target == v.target && u.coeff == v.coeff && u.letters == v.letters;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s = coeff.is_one() ? "" : coeff.to_string() + "*";
    if (letters.empty()) return s + "1_" + source.to_string();
    bool first = true;
    for (const auto& [i, l] : letters) {
      s += (first ? "" : ".") + std::string(l == Letter::a ? "a" : "b") + std::to_string(i);
      first = false;
    }
    return s;
  }
};

inline bool is_bit_vector(const ShiftVector& v, const std::vector<int>& I) {
  for (const auto& [i, x] : v.entries())
    if (x != 1 || std::find(I.begin(), I.end(), i) == I.end()) return false;
  return true;
}

inline SkelMorphismA identity_A(const Field& f, const ShiftVector& alpha) { return {alpha, alpha, f.one(), {}}; }

// a_{alpha,i}: alpha -> alpha + e_i, needs alpha_i = 0
inline SkelMorphismA gen_a(const Field& f, const ShiftVector& alpha, int i) {
  if (alpha[i] != 0) fail(Errc::ObjectMismatch, "a_i needs bit i clear");
  return {alpha, alpha + ShiftVector::unit(i), f.one(), {{i, Letter::a}}};
}

// b_{alpha,i}: alpha + e_i -> alpha
inline SkelMorphismA gen_b(const Field& f, const ShiftVector& alpha, int i) {
  if (alpha[i] != 0) fail(Errc::ObjectMismatch, "b_i needs bit i clear at its target");
  return {alpha + ShiftVector::unit(i), alpha, f.one(), {{i, Letter::b}}};
}

// u after v
inline SkelMorphismA skel_compose(const SkelMorphismA& u, const SkelMorphismA& v) {
  if (u.source != v.target) fail(Errc::ObjectMismatch, "composing " + u.to_string() + " after " + v.to_string());
  SkelMorphismA r{v.source, u.target, u.coeff * v.coeff, {}};
  if (r.coeff.is_zero()) return r;
  for (const auto& [i, l] : v.letters) r.letters[i] = l;
  for (const auto& [i, l] : u.letters) {
    if (r.letters.count(i)) {  // a b or b a at the same index
      r.coeff = r.coeff.field().zero();
      r.letters.clear();
      return r;
    }
    r.letters[i] = l;
  }
  return r;
}

// the unique normal-form monomial alpha -> beta
inline SkelMorphismA hom_space_A(const Field& f, const ShiftVector& alpha, const ShiftVector& beta) {
  SkelMorphismA m{alpha, beta, f.one(), {}};
  auto idx = (alpha + beta).support();
  for (int i : idx) {
    if (beta[i] > alpha[i]) m.letters[i] = Letter::a;
    if (alpha[i] > beta[i]) m.letters[i] = Letter::b;
  }
  return m;
}

// ---- the algebra B(F, I, J, tau): one object, twisted coefficients ----

struct Token {
  char letter;         // 'a', 'b' or 'c'
  std::int64_t power;  // >= 1 for a and b, nonzero for c
  friend bool operator==(const Token& x, const Token& y) { return x.letter == y.letter && x.power == y.power; }
};

struct SkelMorphismB {
  Elem coeff;
  std::map<int, Token> word;
  bool is_zero() const { return coeff.is_zero(); }
  friend bool operator==(const SkelMorphismB& u, const SkelMorphismB& v) { return u.coeff == v.coeff && u.word == v.word; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s = coeff.to_string();
    for (const auto& [i, t] : word) s += "*" + std::string(1, t.letter) + std::to_string(i) + "^" + std::to_string(t.power);
    return s;
  }
};

// ---- descriptor of the skeleton algebra with the image table of G ----

struct GStep {
  char op;  // 'x' or 'd'
  int index;
  ShiftVector from;
};

struct GImage {
  std::string generator;
  ShiftVector source, target;
  std::vector<GStep> word;  // applied first to last
  bool inverse = false;     // image is the inverse of the word
};

struct SkeletonAlgebra {
  char kind = 'A';  // 'A' (char 0) or 'B' (char p)
  OrbitInfo info;
  std::vector<int> I, J;
  std::map<int, Tau> tau;
  std::vector<ShiftVector> objects;
  std::vector<GImage> table;
  bool linear_over_field = true;  // false when some tau_j = sigma

  const ResidueField& residue() const { return info.residue; }
  const Field& field() const { return info.field(); }

  // sigma^k on F for the twist carried by one token
  ShiftVector token_twist(int i, const Token& t) const {
    auto it = tau.find(i);
    if (it == tau.end() || it->second == Tau::one) return {};
    std::int64_t k = t.letter == 'b' ? -t.power : t.power;
    return ShiftVector::unit(i, k);
  }
  ShiftVector word_twist(const std::map<int, Token>& w) const {
    ShiftVector s;
    for (const auto& [i, t] : w) s = s + token_twist(i, t);
    return s;
  }

  SkelMorphismB unit(const Elem& c) const { return {field().embed(c), {}}; }
  SkelMorphismB gen(char letter, int i, std::int64_t power = 1) const {
    bool inI = std::find(I.begin(), I.end(), i) != I.end();
    bool inJ = std::find(J.begin(), J.end(), i) != J.end();
    if ((letter == 'c' && !inJ) || (letter != 'c' && !inI)) fail(Errc::ObjectMismatch, "no generator " + std::string(1, letter) + std::to_string(i));
    if (letter != 'c' && power < 1) fail(Errc::ObjectMismatch, "a and b powers are positive");
    if (power == 0) return unit(field().one());
    return {field().one(), {{i, Token{letter, power}}}};
  }

  // u after v: (x w)(y w') = x tau^w(y) w w'
  SkelMorphismB compose(const SkelMorphismB& u, const SkelMorphismB& v) const {
    Field F = field();
    if (u.is_zero() || v.is_zero()) return {F.zero(), {}};
    Elem c = u.coeff * residue().shift(v.coeff, word_twist(u.word));
    std::map<int, Token> w = v.word;
    for (const auto& [i, t] : u.word) {
      auto it = w.find(i);
      if (it == w.end()) {
        w[i] = t;
        continue;
      }
      if (it->second.letter != t.letter) return {F.zero(), {}};
      it->second.power += t.power;
      if (it->second.power == 0) w.erase(it);
    }
    return {c, w};
  }
};

inline SkeletonAlgebra build_skeleton(const OrbitInfo& info) {
  SkeletonAlgebra s;
  s.info = info;
  s.objects = info.skeleton_objects;
  s.I = info.break_set;
  Field F = info.field();
  if (info.kind == OrbitKind::linear) {
    s.kind = 'A';
    for (const auto& alpha : s.objects)
      for (int i : s.I) {
        if (alpha[i] != 0) continue;
        ShiftVector beta = alpha + ShiftVector::unit(i);
        std::string tag = "_{" + alpha.key(s.I) + ";" + std::to_string(i) + "}";
        s.table.push_back({"a" + tag, alpha, beta, {{'x', i, alpha}}});
        s.table.push_back({"b" + tag, beta, alpha, {{'d', i, beta}}});
      }
    return s;
  }
  if (info.base.unbounded()) fail(Errc::InfiniteCharPOrbit, "positive characteristic needs finitely many variables");
  s.kind = 'B';
  s.J = info.complement();
  s.tau = info.tau;
  for (const auto& [j, t] : s.tau)
    if (t == Tau::sigma) s.linear_over_field = false;
  ShiftVector w;
  for (int i : info.indices()) {
    int r = info.period(i);
    GImage x{std::string(info.in_break(i) ? "a" : "c") + std::to_string(i), w, w, {}};
    for (int g = 0; g < r; ++g) x.word.push_back({'x', i, ShiftVector::unit(i, g)});
    GImage d{std::string(info.in_break(i) ? "b" : "c^-1_") + std::to_string(i), w, w, {}};
    // d first steps from 0 to r-1, then down to 1, then to 0
    d.word.push_back({'d', i, {}});
    for (int g = r - 1; g >= 1; --g) d.word.push_back({'d', i, ShiftVector::unit(i, g)});
    if (!info.in_break(i)) {
      d.word = x.word;
      d.inverse = true;
    }
    s.table.push_back(std::move(x));
    s.table.push_back(std::move(d));
  }
  return s;
}

// ---- modules over the skeleton algebras ----

// A-module: a space per object and matrices for a_{alpha,i}, b_{alpha,i}.
struct SkelModuleA {
  Field field;
  std::vector<int> I;
  std::map<ShiftVector, std::size_t> dims;
  std::map<std::pair<ShiftVector, int>, Matrix> a;  // V(alpha) -> V(alpha+e_i)
  std::map<std::pair<ShiftVector, int>, Matrix> b;  // V(alpha+e_i) -> V(alpha)

  std::size_t dim(const ShiftVector& v) const {
    auto it = dims.find(v);
    return it == dims.end() ? 0 : it->second;
  }
  // the generator leaving alpha along i
  Matrix arrow(const ShiftVector& alpha, int i) const {
    if (alpha[i] == 0) return a.at({alpha, i});
    return b.at({alpha - ShiftVector::unit(i), i});
  }
  static ShiftVector flip(const ShiftVector& v, int i) {
    ShiftVector r = v;
    r.set(i, 1 - v[i]);
    return r;
  }

  std::size_t total_dim() const {
    std::size_t t = 0;
    for (const auto& [k, d] : dims) t += d;
    return t;
  }

  friend bool operator==(const SkelModuleA& x, const SkelModuleA& y) {
    return x.I == y.I && x.dims == y.dims && x.a == y.a && x.b == y.b;
  }

  // zero module shaped over the skeleton of I
  static SkelModuleA zero(const Field& f, const std::vector<int>& I, const std::map<ShiftVector, std::size_t>& dims);

  // a b = b a = 0 and the commuting squares
  std::vector<std::string> relation_failures() const;
};

inline std::vector<ShiftVector> bit_vectors(const std::vector<int>& I) {
  std::vector<ShiftVector> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << I.size()); ++mask) {
    ShiftVector d;
    for (std::size_t k = 0; k < I.size(); ++k)
      if (mask >> k & 1) d.set(I[k], 1);
    out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline SkelModuleA SkelModuleA::zero(const Field& f, const std::vector<int>& I,
                                     const std::map<ShiftVector, std::size_t>& given) {
  SkelModuleA m;
  m.field = f;
  m.I = I;
  for (const auto& alpha : bit_vectors(I)) {
    auto it = given.find(alpha);
    m.dims[alpha] = it == given.end() ? 0 : it->second;
  }
  for (const auto& alpha : bit_vectors(I))
    for (int i : I) {
      if (alpha[i] != 0) continue;
      ShiftVector beta = alpha + ShiftVector::unit(i);
      m.a[{alpha, i}] = Matrix(f, m.dims[beta], m.dims[alpha]);
      m.b[{alpha, i}] = Matrix(f, m.dims[alpha], m.dims[beta]);
    }
  return m;
}

inline std::vector<std::string> SkelModuleA::relation_failures() const {
  std::vector<std::string> out;
  for (const auto& alpha : bit_vectors(I)) {
    for (int i : I) {
      ShiftVector beta = flip(alpha, i);
      if (arrow(alpha, i).rows() != dim(beta) || arrow(alpha, i).cols() != dim(alpha))
        out.push_back("shape at " + alpha.to_string() + " along " + std::to_string(i));
      else if (!(arrow(beta, i) * arrow(alpha, i)).is_zero())
        out.push_back("ab=0 at " + alpha.to_string() + " along " + std::to_string(i));
    }
    for (int i : I)
      for (int j : I) {
        if (j <= i) continue;
        Matrix lhs = arrow(flip(alpha, j), i) * arrow(alpha, j);
        Matrix rhs = arrow(flip(alpha, i), j) * arrow(alpha, i);
        if (lhs != rhs) out.push_back("square at " + alpha.to_string() + " on " + std::to_string(i) + "," + std::to_string(j));
      }
  }
  return out;
}

// B-module: one space with a_i, b_i (i in I) and c_j (j in J), semilinear per tau.
struct SkelModuleB {
  std::size_t dim = 0;
  std::map<int, Matrix> a, b, c;

  friend bool operator==(const SkelModuleB& x, const SkelModuleB& y) {
    return x.dim == y.dim && x.a == y.a && x.b == y.b && x.c == y.c;
  }
};

inline SemiMap b_generator(const SkeletonAlgebra& s, const SkelModuleB& m, char letter, int i) {
  const auto& src = letter == 'a' ? m.a : letter == 'b' ? m.b : m.c;
  Token t{letter, 1};
  return {src.at(i), s.token_twist(i, t)};
}

inline std::vector<std::string> relation_failures(const SkeletonAlgebra& s, const SkelModuleB& m) {
  std::vector<std::string> out;
  const ResidueField& rf = s.residue();
  std::vector<std::pair<char, int>> gens;
  for (int i : s.I) {
    gens.push_back({'a', i});
    gens.push_back({'b', i});
    if (!m.a.count(i) || !m.b.count(i)) {
      out.push_back("missing a/b at " + std::to_string(i));
      return out;
    }
    auto ab = compose(rf, b_generator(s, m, 'a', i), b_generator(s, m, 'b', i));
    auto ba = compose(rf, b_generator(s, m, 'b', i), b_generator(s, m, 'a', i));
    if (!ab.mat.is_zero() || !ba.mat.is_zero()) out.push_back("ab=ba=0 at " + std::to_string(i));
  }
  for (int j : s.J) {
    if (!m.c.count(j)) {
      out.push_back("missing c at " + std::to_string(j));
      return out;
    }
    gens.push_back({'c', j});
    if (!inverse(m.c.at(j))) out.push_back("c not invertible at " + std::to_string(j));
  }
  for (std::size_t u = 0; u < gens.size(); ++u)
    for (std::size_t v = u + 1; v < gens.size(); ++v) {
      if (gens[u].second == gens[v].second) continue;
      auto U = b_generator(s, m, gens[u].first, gens[u].second);
      auto V = b_generator(s, m, gens[v].first, gens[v].second);
      if (compose(rf, U, V) != compose(rf, V, U))
        out.push_back(std::string("commute ") + gens[u].first + std::to_string(gens[u].second) + "," + gens[v].first +
                      std::to_string(gens[v].second));
    }
  return out;
}

}  // namespace weylmod
