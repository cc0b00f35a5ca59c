#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "weylmod/error.hpp"

namespace weylmod {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { rationals, prime, extension };

class Elem;
class Poly;
struct FieldData;

// Handle to an immutable field descriptor. Copies share the descriptor.
class Field {
 public:
  Field() = default;
  explicit Field(std::shared_ptr<const FieldData> d) : d_(std::move(d)) {}

  static Field rationals();
  static Field prime(std::int64_t p);
  // K[t]/(modulus). The modulus must be monic of degree >= 2 over `base`.
  static Field extension(const Field& base, const std::vector<Elem>& modulus,
                         bool certified = true);

  FieldKind kind() const;
  std::int64_t characteristic() const;
  bool is_finite() const { return characteristic() != 0; }
  const Field& base() const;
  const std::vector<Elem>& modulus() const;
  bool certified() const;       // whole tower
  std::size_t ext_degree() const;    // over base (1 for prime fields)
  std::size_t absolute_degree() const;  // over the prime field
  Integer order() const;  // 0 for infinite fields
  int depth() const;      // 0 for prime fields

  Elem zero() const;
  Elem one() const;
  Elem from_int(std::int64_t n) const;
  Elem from_integer(const Integer& n) const;
  Elem from_rational(const Rational& q) const;
  // element of an extension from coefficients over base (reduced)
  Elem from_coeffs(std::vector<Elem> c) const;
  Elem gen() const;
  // e lives in a subfield of this tower
  Elem embed(const Elem& e) const;
  bool contains_subfield(const Field& f) const;

  // finite fields only
  std::vector<Elem> elements() const;
  std::uint64_t index_of(const Elem& e) const;
  Elem from_index(std::uint64_t idx) const;

  std::string describe() const;
  const FieldData* data() const { return d_.get(); }

  friend bool operator==(const Field& a, const Field& b);
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  std::shared_ptr<const FieldData> d_;
};

class Elem {
 public:
  using Rep = std::variant<std::int64_t, Rational, std::vector<Elem>>;

  Elem() = default;
  Elem(Field f, Rep r) : f_(std::move(f)), r_(std::move(r)) {}

  const Field& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;

  std::int64_t residue() const { return std::get<std::int64_t>(r_); }
  const Rational& rational() const { return std::get<Rational>(r_); }
  // coefficients over the base, ascending, no trailing zeros
  const std::vector<Elem>& coeffs() const { return std::get<std::vector<Elem>>(r_); }
  const Rep& rep() const { return r_; }

  Elem operator-() const;
  Elem inverse() const;
  Elem pow(std::int64_t k) const;

  friend Elem operator+(const Elem& a, const Elem& b);
  friend Elem operator-(const Elem& a, const Elem& b);
  friend Elem operator*(const Elem& a, const Elem& b);
  friend Elem operator/(const Elem& a, const Elem& b) { return a * b.inverse(); }
  Elem& operator+=(const Elem& b) { return *this = *this + b; }
  Elem& operator-=(const Elem& b) { return *this = *this - b; }
  Elem& operator*=(const Elem& b) { return *this = *this * b; }
  friend bool operator==(const Elem& a, const Elem& b);
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

  // true when the element lies in the prime field; value reported via out-params
  bool in_prime_field() const;
  Elem to_prime_field() const;  // precondition: in_prime_field()
  std::string to_string() const;

 private:
  Field f_;
  Rep r_;
};

struct FieldData {
  FieldKind kind = FieldKind::rationals;
  std::int64_t p = 0;
  Field base;
  std::vector<Elem> modulus;
  bool certified = true;
  std::size_t degree = 1;
  std::size_t absolute = 1;
  int depth = 0;
};

namespace detail {

inline void check_same(const Field& a, const Field& b) {
  if (!(a == b)) fail(Errc::FieldMismatch, "operands live in different fields: " + a.describe() + " vs " + b.describe());
}

inline std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

inline std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a = mod_norm(a, p);
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d <= p / d; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void trim(std::vector<Elem>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// Dense polynomial helpers over a field; coefficient vectors are ascending.
inline std::vector<Elem> padd(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  std::vector<Elem> r = a.size() >= b.size() ? a : b;
  const auto& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] = a.size() >= b.size() ? r[i] + s[i] : s[i] + r[i];
  trim(r);
  return r;
}

inline std::vector<Elem> pneg(std::vector<Elem> a) {
  for (auto& c : a) c = -c;
  return a;
}

inline std::vector<Elem> pmul(const Field& f, const std::vector<Elem>& a, const std::vector<Elem>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Elem> r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline std::pair<std::vector<Elem>, std::vector<Elem>> pdivmod(const Field& f, std::vector<Elem> a,
                                                                const std::vector<Elem>& b) {
  if (b.empty()) fail(Errc::DivisionByZeroPoly, "polynomial division by zero");
  if (a.size() < b.size()) return {{}, std::move(a)};
  Elem lead_inv = b.back().inverse();
  std::vector<Elem> q(a.size() - b.size() + 1, f.zero());
  for (std::size_t k = a.size(); k-- >= b.size();) {
    Elem c = a[k] * lead_inv;
    if (c.is_zero()) continue;
    std::size_t shift = k + 1 - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {std::move(q), std::move(a)};
}

// Inverse of a modulo m, both over f; a must be coprime to m.
inline std::vector<Elem> pinvmod(const Field& f, const std::vector<Elem>& a, const std::vector<Elem>& m) {
  std::vector<Elem> r0 = m, r1 = a, s0{}, s1{f.one()};
  while (!r1.empty()) {
    auto [q, r] = pdivmod(f, r0, r1);
    auto s2 = padd(s0, pneg(pmul(f, q, s1)));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) fail(Errc::NotMaximal, "element is not invertible: modulus is reducible");
  Elem c = r0[0].inverse();
  for (auto& x : s0) x = x * c;
  return s0;
}

}  // namespace detail

// ---- Field ---------------------------------------------------------------

inline Field Field::rationals() {
  static const Field q{std::make_shared<const FieldData>()};
  return q;
}

inline Field Field::prime(std::int64_t p) {
  if (!detail::is_prime(p)) fail(Errc::InvalidField, "GF(" + std::to_string(p) + "): not a prime");
  auto d = std::make_shared<FieldData>();
  d->kind = FieldKind::prime;
  d->p = p;
  return Field{d};
}

inline Field Field::extension(const Field& base, const std::vector<Elem>& modulus, bool certified) {
  std::vector<Elem> m;
  m.reserve(modulus.size());
  for (const auto& c : modulus) m.push_back(base.embed(c));
  detail::trim(m);
  if (m.size() < 3) fail(Errc::InvalidField, "extension modulus must have degree >= 2");
  if (!m.back().is_one()) fail(Errc::InvalidField, "extension modulus must be monic");
  auto d = std::make_shared<FieldData>();
  d->kind = FieldKind::extension;
  d->p = base.characteristic();
  d->base = base;
  d->modulus = std::move(m);
  d->certified = certified && base.certified();
  d->degree = d->modulus.size() - 1;
  d->absolute = d->degree * base.absolute_degree();
  d->depth = base.depth() + 1;
  return Field{d};
}

inline FieldKind Field::kind() const { return d_->kind; }
inline std::int64_t Field::characteristic() const { return d_->p; }
inline const Field& Field::base() const { return d_->base; }
inline const std::vector<Elem>& Field::modulus() const { return d_->modulus; }
inline bool Field::certified() const { return d_->certified; }
inline std::size_t Field::ext_degree() const { return d_->degree; }
inline std::size_t Field::absolute_degree() const { return d_->absolute; }
inline int Field::depth() const { return d_->depth; }

inline Integer Field::order() const {
  if (characteristic() == 0) return 0;
  Integer r = 1;
  for (std::size_t i = 0; i < absolute_degree(); ++i) r *= characteristic();
  return r;
}

inline Elem Field::zero() const {
  switch (kind()) {
    case FieldKind::rationals: return Elem(*this, Rational(0));
    case FieldKind::prime: return Elem(*this, std::int64_t{0});
    case FieldKind::extension: return Elem(*this, std::vector<Elem>{});
  }
  return {};
}

inline Elem Field::one() const { return from_int(1); }

inline Elem Field::from_int(std::int64_t n) const {
  switch (kind()) {
    case FieldKind::rationals: return Elem(*this, Rational(n));
    case FieldKind::prime: return Elem(*this, detail::mod_norm(n, d_->p));
    case FieldKind::extension: {
      Elem c = base().from_int(n);
      if (c.is_zero()) return zero();
      return Elem(*this, std::vector<Elem>{c});
    }
  }
  return {};
}

inline Elem Field::from_integer(const Integer& n) const {
  if (kind() == FieldKind::rationals) return Elem(*this, Rational(n));
  if (kind() == FieldKind::prime) {
    Integer r = n % d_->p;
    if (r < 0) r += d_->p;
    return Elem(*this, static_cast<std::int64_t>(r));
  }
  Elem c = base().from_integer(n);
  if (c.is_zero()) return zero();
  return Elem(*this, std::vector<Elem>{c});
}

inline Elem Field::from_rational(const Rational& q) const {
  if (kind() == FieldKind::rationals) return Elem(*this, q);
  Elem den = from_integer(boost::multiprecision::denominator(q));
  if (den.is_zero()) fail(Errc::FieldMismatch, "denominator vanishes in characteristic " + std::to_string(characteristic()));
  return from_integer(boost::multiprecision::numerator(q)) / den;
}

inline Elem Field::from_coeffs(std::vector<Elem> c) const {
  if (kind() != FieldKind::extension) {
    if (c.empty()) return zero();
    if (c.size() == 1) return embed(c[0]);
    fail(Errc::FieldMismatch, "polynomial representative given for a prime field");
  }
  for (auto& x : c) x = base().embed(x);
  detail::trim(c);
  if (c.size() >= d_->modulus.size()) c = detail::pdivmod(base(), std::move(c), d_->modulus).second;
  return Elem(*this, std::move(c));
}

inline Elem Field::gen() const {
  if (kind() != FieldKind::extension) fail(Errc::FieldMismatch, "prime fields have no adjoined generator");
  return from_coeffs({base().zero(), base().one()});
}

inline bool Field::contains_subfield(const Field& f) const {
  for (const Field* g = this;; g = &g->base()) {
    if (*g == f) return true;
    if (g->kind() != FieldKind::extension) return false;
  }
}

inline Elem Field::embed(const Elem& e) const {
  if (e.field() == *this) return e;
  if (kind() != FieldKind::extension || !base().contains_subfield(e.field()))
    fail(Errc::FieldMismatch, "cannot embed element of " + e.field().describe() + " into " + describe());
  Elem c = base().embed(e);
  if (c.is_zero()) return zero();
  return Elem(*this, std::vector<Elem>{c});
}

inline std::vector<Elem> Field::elements() const {
  if (!is_finite()) fail(Errc::InfiniteDimension, "cannot enumerate an infinite field");
  std::uint64_t q = static_cast<std::uint64_t>(order());
  std::vector<Elem> out;
  out.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) out.push_back(from_index(i));
  return out;
}

inline std::uint64_t Field::index_of(const Elem& e) const {
  if (kind() == FieldKind::prime) return static_cast<std::uint64_t>(e.residue());
  if (kind() != FieldKind::extension) fail(Errc::InfiniteDimension, "index_of on an infinite field");
  std::uint64_t bq = static_cast<std::uint64_t>(base().order());
  std::uint64_t r = 0, scale = 1;
  for (const auto& c : e.coeffs()) {
    r += base().index_of(c) * scale;
    scale *= bq;
  }
  return r;
}

inline Elem Field::from_index(std::uint64_t idx) const {
  if (kind() == FieldKind::prime) return Elem(*this, static_cast<std::int64_t>(idx));
  if (kind() != FieldKind::extension) fail(Errc::InfiniteDimension, "from_index on an infinite field");
  std::uint64_t bq = static_cast<std::uint64_t>(base().order());
  std::vector<Elem> c;
  for (std::size_t k = 0; k < ext_degree(); ++k) {
    c.push_back(base().from_index(idx % bq));
    idx /= bq;
  }
  detail::trim(c);
  return Elem(*this, std::move(c));
}

inline std::string Field::describe() const {
  if (!d_) return "<null field>";
  switch (kind()) {
    case FieldKind::rationals: return "Q";
    case FieldKind::prime: return "GF(" + std::to_string(d_->p) + ")";
    case FieldKind::extension: {
      std::string s = base().describe() + "[u" + std::to_string(depth()) + "]/(";
      for (std::size_t k = d_->modulus.size(); k-- > 0;) {
        s += "(" + d_->modulus[k].to_string() + ")";
        if (k) s += "*u^" + std::to_string(k) + " + ";
      }
      return s + ")";
    }
  }
  return "";
}

inline bool operator==(const Field& a, const Field& b) {
  if (a.d_ == b.d_) return true;
  if (!a.d_ || !b.d_) return false;
  if (a.kind() != b.kind() || a.characteristic() != b.characteristic()) return false;
  if (a.kind() != FieldKind::extension) return true;
  return a.base() == b.base() && a.modulus() == b.modulus();
}

// ---- Elem ----------------------------------------------------------------

inline bool Elem::is_zero() const {
  switch (r_.index()) {
    case 0: return std::get<0>(r_) == 0;
    case 1: return std::get<1>(r_) == 0;
    default: return std::get<2>(r_).empty();
  }
}

inline bool Elem::is_one() const {
  switch (r_.index()) {
    case 0: return std::get<0>(r_) == 1;
    case 1: return std::get<1>(r_) == 1;
    default: {
      const auto& c = std::get<2>(r_);
      return c.size() == 1 && c[0].is_one();
    }
  }
}

inline Elem Elem::operator-() const {
  switch (r_.index()) {
    case 0: {
      std::int64_t v = std::get<0>(r_);
      return Elem(f_, v == 0 ? v : f_.characteristic() - v);
    }
    case 1: return Elem(f_, Rational(-std::get<1>(r_)));
    default: return Elem(f_, detail::pneg(std::get<2>(r_)));
  }
}

inline Elem operator+(const Elem& a, const Elem& b) {
  detail::check_same(a.f_, b.f_);
  switch (a.r_.index()) {
    case 0: {
      std::int64_t p = a.f_.characteristic();
      std::int64_t s = std::get<0>(a.r_) + std::get<0>(b.r_);
      return Elem(a.f_, s >= p ? s - p : s);
    }
    case 1: return Elem(a.f_, Rational(std::get<1>(a.r_) + std::get<1>(b.r_)));
    default: return Elem(a.f_, detail::padd(std::get<2>(a.r_), std::get<2>(b.r_)));
  }
}

inline Elem operator-(const Elem& a, const Elem& b) { return a + (-b); }

inline Elem operator*(const Elem& a, const Elem& b) {
  detail::check_same(a.f_, b.f_);
  switch (a.r_.index()) {
    case 0: return Elem(a.f_, detail::mulmod(std::get<0>(a.r_), std::get<0>(b.r_), a.f_.characteristic()));
    case 1: return Elem(a.f_, Rational(std::get<1>(a.r_) * std::get<1>(b.r_)));
    default: {
      const Field& base = a.f_.base();
      auto prod = detail::pmul(base, std::get<2>(a.r_), std::get<2>(b.r_));
      if (prod.size() >= a.f_.modulus().size()) prod = detail::pdivmod(base, std::move(prod), a.f_.modulus()).second;
      return Elem(a.f_, std::move(prod));
    }
  }
}

inline Elem Elem::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZeroPoly, "inverse of zero");
  switch (r_.index()) {
    case 0: {
      std::int64_t p = f_.characteristic();
      return Elem(f_, detail::powmod(std::get<0>(r_), p - 2, p));
    }
    case 1: return Elem(f_, Rational(1 / std::get<1>(r_)));
    default: return Elem(f_, detail::pinvmod(f_.base(), std::get<2>(r_), f_.modulus()));
  }
}

inline Elem Elem::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  Elem r = f_.one(), b = *this;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

inline bool operator==(const Elem& a, const Elem& b) {
  if (!(a.f_ == b.f_)) return false;
  return a.r_ == b.r_;
}

inline bool Elem::in_prime_field() const {
  if (r_.index() != 2) return true;
  const auto& c = std::get<2>(r_);
  return c.empty() || (c.size() == 1 && c[0].in_prime_field());
}

inline Elem Elem::to_prime_field() const {
  if (r_.index() != 2) return *this;
  const auto& c = std::get<2>(r_);
  if (c.empty()) {
    const Field* f = &f_;
    while (f->kind() == FieldKind::extension) f = &f->base();
    return f->zero();
  }
  return c[0].to_prime_field();
}

inline std::string Elem::to_string() const {
  switch (r_.index()) {
    case 0: return std::to_string(std::get<0>(r_));
    case 1: return std::get<1>(r_).str();
    default: {
      const auto& c = std::get<2>(r_);
      if (c.empty()) return "0";
      std::string var = "u" + std::to_string(f_.depth());
      std::string s;
      for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string cs = c[k].to_string();
        if (c[k].field().kind() == FieldKind::extension) cs = "(" + cs + ")";
        if (k == 0) s += cs;
        else s += (c[k].is_one() ? "" : cs + "*") + var + (k > 1 ? "^" + std::to_string(k) : "");
      }
      return s;
    }
  }
  return "";
}

// ---- Poly ----------------------------------------------------------------

class Poly {
 public:
  Poly() = default;
  explicit Poly(Field f) : f_(std::move(f)) {}
  Poly(Field f, std::vector<Elem> c) : f_(std::move(f)), c_(std::move(c)) {
    for (auto& x : c_) x = f_.embed(x);
    detail::trim(c_);
  }
  static Poly constant(const Elem& e) { return Poly(e.field(), {e}); }
  static Poly x(const Field& f) { return Poly(f, {f.zero(), f.one()}); }
  // t - c
  static Poly linear(const Elem& c) { return Poly(c.field(), {-c, c.field().one()}); }
  static Poly from_ints(const Field& f, std::initializer_list<std::int64_t> c) {
    std::vector<Elem> v;
    for (auto x : c) v.push_back(f.from_int(x));
    return Poly(f, std::move(v));
  }

  const Field& field() const { return f_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  // -1 stands for the zero polynomial's -infinity
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  Elem coeff(std::size_t k) const { return k < c_.size() ? c_[k] : f_.zero(); }
  const Elem& lead() const { return c_.back(); }

  Poly monic() const {
    if (is_zero()) return *this;
    Elem inv = lead().inverse();
    std::vector<Elem> r;
    for (const auto& c : c_) r.push_back(c * inv);
    return Poly(f_, std::move(r));
  }

  Elem eval(const Elem& x) const {
    Elem v = f_.embed(x);
    Elem r = v.field().zero();
    for (std::size_t k = c_.size(); k-- > 0;) r = r * v + v.field().embed(c_[k]);
    return r;
  }

  // f(t + k)
  Poly shift(std::int64_t k) const { return shift_by(f_.from_int(k)); }
  Poly shift_by(const Elem& a) const {
    Elem s = f_.embed(a);
    Poly lin(f_, {s, f_.one()});
    Poly r(f_);
    for (std::size_t k = c_.size(); k-- > 0;) r = r * lin + Poly(f_, {c_[k]});
    return r;
  }

  // map coefficients into a larger field of the tower
  Poly over(const Field& g) const {
    std::vector<Elem> r;
    for (const auto& c : c_) r.push_back(g.embed(c));
    return Poly(g, std::move(r));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    detail::check_same(a.f_, b.f_);
    return Poly(a.f_, detail::padd(a.c_, b.c_));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    detail::check_same(a.f_, b.f_);
    return Poly(a.f_, detail::padd(a.c_, detail::pneg(b.c_)));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    detail::check_same(a.f_, b.f_);
    return Poly(a.f_, detail::pmul(a.f_, a.c_, b.c_));
  }
  friend Poly operator*(const Elem& s, const Poly& a) { return Poly::constant(a.f_.embed(s)) * a; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::pair<Poly, Poly> divmod(const Poly& g) const {
    detail::check_same(f_, g.f_);
    auto [q, r] = detail::pdivmod(f_, c_, g.c_);
    return {Poly(f_, std::move(q)), Poly(f_, std::move(r))};
  }
  Poly operator%(const Poly& g) const { return divmod(g).second; }

  Poly pow(unsigned k) const {
    Poly r = Poly::constant(f_.one()), b = *this;
    while (k) {
      if (k & 1) r = r * b;
      b = b * b;
      k >>= 1;
    }
    return r;
  }

  std::string to_string(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k].is_zero()) continue;
      if (!s.empty()) s += " + ";
      std::string cs = c_[k].to_string();
      if (f_.kind() == FieldKind::extension) cs = "(" + cs + ")";
      if (k == 0) s += cs;
      else s += (c_[k].is_one() ? "" : cs + "*") + var + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return s;
  }

 private:
  Field f_;
  std::vector<Elem> c_;
};

inline Poly gcd(Poly a, Poly b) {
  detail::check_same(a.field(), b.field());
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---- irreducibility --------------------------------------------------------

enum class Tri { no, yes, unknown };

inline const char* tri_name(Tri t) {
  return t == Tri::yes ? "true" : t == Tri::no ? "false" : "unknown";
}

namespace detail {

// calls fn on every monic polynomial of exact degree d over a finite field;
// stops early when fn returns true
inline bool for_each_monic(const Field& f, int d, const std::function<bool(const Poly&)>& fn) {
  auto elems = f.elements();
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  while (true) {
    std::vector<Elem> c;
    for (auto i : idx) c.push_back(elems[i]);
    c.push_back(f.one());
    if (fn(Poly(f, std::move(c)))) return true;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == elems.size()) idx[k++] = 0;
    if (k == idx.size()) return false;
  }
}

inline std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  if (n > Integer(1000000000000LL)) fail(Errc::EnumerationBudgetExceeded, "rational root search: constant too large");
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

inline bool has_rational_root(const Poly& f) {
  // f over Q; scale to integer coefficients
  Integer l = 1;
  for (const auto& c : f.coeffs()) {
    Integer den = boost::multiprecision::denominator(c.rational());
    l = l / boost::multiprecision::gcd(l, den) * den;
  }
  std::vector<Integer> a;
  for (const auto& c : f.coeffs()) a.push_back(boost::multiprecision::numerator(c.rational()) * (l / boost::multiprecision::denominator(c.rational())));
  if (a[0] == 0) return true;
  for (const auto& u : divisors(a[0]))
    for (const auto& v : divisors(a.back()))
      for (int sg : {1, -1}) {
        Rational r(u * sg, v);
        if (f.eval(f.field().from_rational(r)).is_zero()) return true;
      }
  return false;
}

}  // namespace detail

inline Tri is_irreducible(const Poly& f, const Limits& lim = {}) {
  if (f.degree() < 1 || !f.is_monic()) fail(Errc::InvalidIdeal, "irreducibility test needs a monic polynomial of degree >= 1");
  if (f.degree() == 1) return Tri::yes;
  const Field& F = f.field();
  if (F.is_finite()) {
    if (f.degree() > lim.irreducible_max_degree || F.order() > lim.irreducible_max_order)
      fail(Errc::EnumerationBudgetExceeded, "trial division beyond degree/order budget for " + F.describe());
    for (int d = 1; d <= f.degree() / 2; ++d) {
      bool hit = detail::for_each_monic(F, d, [&](const Poly& g) { return (f % g).is_zero(); });
      if (hit) return Tri::no;
    }
    return Tri::yes;
  }
  if (F.kind() == FieldKind::rationals) {
    if (f.degree() <= 3) return detail::has_rational_root(f) ? Tri::no : Tri::yes;
    return Tri::unknown;
  }
  // tower over Q: only polynomials with rational coefficients are decided
  std::vector<Elem> qc;
  for (const auto& c : f.coeffs()) {
    if (!c.in_prime_field()) return Tri::unknown;
    qc.push_back(c.to_prime_field());
  }
  Poly fq(Field::rationals(), qc);
  if (fq.degree() <= 3) {
    if (detail::has_rational_root(fq)) return Tri::no;
    std::size_t e = F.absolute_degree();
    if (std::gcd(static_cast<std::size_t>(fq.degree()), e) == 1) return Tri::yes;
  }
  return Tri::unknown;
}

// Monic irreducible polynomials of degree d over a finite field, in index order.
inline std::vector<Poly> monic_irreducibles(const Field& f, int d, const Limits& lim = {}) {
  std::vector<Poly> out;
  detail::for_each_monic(f, d, [&](const Poly& g) {
    if (is_irreducible(g, lim) == Tri::yes) out.push_back(g);
    return false;
  });
  return out;
}

// GF(q) for a prime power q, built from the first monic irreducible in index order.
inline Field finite_field(std::uint64_t q) {
  if (q < 2) fail(Errc::InvalidField, "field order must be >= 2");
  std::uint64_t p = 2;
  while (q % p) ++p;
  int k = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) fail(Errc::InvalidField, std::to_string(q) + " is not a prime power");
  Field base = Field::prime(static_cast<std::int64_t>(p));
  if (k == 1) return base;
  Limits lim;
  lim.irreducible_max_degree = std::max(k, lim.irreducible_max_degree);
  lim.irreducible_max_order = std::max<std::uint64_t>(p, lim.irreducible_max_order);
  auto irr = monic_irreducibles(base, k, lim);
  return Field::extension(base, irr.front().coeffs(), true);
}

}  // namespace weylmod
