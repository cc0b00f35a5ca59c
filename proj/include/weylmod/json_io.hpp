#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "weylmod/indecomp.hpp"
#include "weylmod/weightmod.hpp"

namespace weylmod {

using json = nlohmann::json;

inline constexpr const char* kSchema = "weylmod/1";

namespace detail {

[[noreturn]] inline void bad(const std::string& what) { throw SchemaError(what); }

inline const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

inline std::int64_t as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) bad(what + " must be an integer");
  return j.get<std::int64_t>();
}

inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer n(s.substr(0, slash)), d(s.substr(slash + 1));
    if (d == 0) bad("zero denominator in '" + s + "'");
    return Rational(n, d);
  } catch (const std::runtime_error&) {
    bad("not a rational number: '" + s + "'");
  }
}

}  // namespace detail

// ---- fields and elements ----

inline json to_json(const Field& f);
inline json to_json(const Elem& e);

inline json to_json(const Field& f) {
  switch (f.kind()) {
    case FieldKind::rationals: return {{"kind", "Q"}};
    case FieldKind::prime: return {{"kind", "GF"}, {"p", f.characteristic()}};
    case FieldKind::extension: {
      json mod = json::array();
      for (const auto& c : f.modulus()) mod.push_back(to_json(c));
      return {{"kind", "Ext"}, {"base", to_json(f.base())}, {"modulus", mod}, {"certified", f.certified()}};
    }
  }
  return {};
}

inline Elem elem_from_json(const Field& f, const json& j);

inline Field field_from_json(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "Q") return Field::rationals();
    if (s.rfind("gf", 0) == 0 || s.rfind("GF", 0) == 0) {
      try {
        return finite_field(std::stoull(s.substr(2)));
      } catch (const std::logic_error&) {
        detail::bad("bad field name '" + s + "'");
      }
    }
    detail::bad("bad field name '" + s + "'");
  }
  std::string kind = detail::member(j, "kind").get<std::string>();
  if (kind == "Q") return Field::rationals();
  if (kind == "GF") {
    if (j.contains("q")) return finite_field(static_cast<std::uint64_t>(detail::as_int(j.at("q"), "q")));
    return Field::prime(detail::as_int(detail::member(j, "p"), "p"));
  }
  if (kind == "Ext") {
    Field base = field_from_json(detail::member(j, "base"));
    const json& m = detail::member(j, "modulus");
    if (!m.is_array()) detail::bad("modulus must be an array");
    std::vector<Elem> mod;
    for (const auto& c : m) mod.push_back(elem_from_json(base, c));
    bool cert = j.value("certified", true);
    return Field::extension(base, mod, cert);
  }
  detail::bad("unknown field kind '" + kind + "'");
}

inline json to_json(const Elem& e) {
  const Field& f = e.field();
  switch (f.kind()) {
    case FieldKind::rationals: {
      const Rational& q = e.rational();
      std::string s = boost::multiprecision::numerator(q).str();
      if (boost::multiprecision::denominator(q) != 1) s += "/" + boost::multiprecision::denominator(q).str();
      return s;
    }
    case FieldKind::prime: return e.residue();
    case FieldKind::extension: {
      json a = json::array();
      for (std::size_t k = 0; k < f.ext_degree(); ++k)
        a.push_back(to_json(k < e.coeffs().size() ? e.coeffs()[k] : f.base().zero()));
      return a;
    }
  }
  return {};
}

// Scalars are accepted for extension fields and embedded from the prime field.
inline Elem elem_from_json(const Field& f, const json& j) {
  switch (f.kind()) {
    case FieldKind::rationals:
      if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
      if (j.is_string()) return f.from_rational(detail::parse_rational(j.get<std::string>()));
      detail::bad("rational elements are integers or \"num/den\" strings");
    case FieldKind::prime:
      return f.from_int(detail::as_int(j, "prime-field element"));
    case FieldKind::extension: {
      if (!j.is_array()) return f.embed(elem_from_json(f.base(), j));
      if (j.size() > f.ext_degree()) detail::bad("extension element has too many coefficients");
      std::vector<Elem> c;
      for (const auto& x : j) c.push_back(elem_from_json(f.base(), x));
      return f.from_coeffs(std::move(c));
    }
  }
  detail::bad("unsupported field");
}

inline json to_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

inline Poly poly_from_json(const Field& f, const json& j) {
  const json& c = j.is_object() ? detail::member(j, "coeffs") : j;
  if (!c.is_array() || c.empty()) detail::bad("a polynomial is a nonempty coefficient array, constant term first");
  std::vector<Elem> co;
  for (const auto& x : c) co.push_back(elem_from_json(f, x));
  return Poly(f, co);
}

inline json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(to_json(m(i, k)));
    rows.push_back(r);
  }
  return rows;
}

inline Matrix matrix_from_json(const Field& f, const json& j, std::size_t rows, std::size_t cols,
                               const std::string& where) {
  if (!j.is_array() || j.size() != rows) detail::bad(where + ": expected " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) detail::bad(where + ": expected " + std::to_string(cols) + " columns");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = elem_from_json(f, j[i][k]);
  }
  return m;
}

inline json to_json(const ShiftVector& v) {
  json o = json::object();
  for (const auto& [i, x] : v.entries()) o[std::to_string(i)] = x;
  return o;
}

inline ShiftVector shift_from_json(const json& j) {
  if (!j.is_object()) detail::bad("a shift vector is an object index -> integer");
  ShiftVector v;
  for (const auto& [k, x] : j.items()) {
    int i = 0;
    try {
      i = std::stoi(k);
    } catch (const std::logic_error&) {
      detail::bad("bad index '" + k + "'");
    }
    v.set(i, detail::as_int(x, "shift entry"));
  }
  return v;
}

inline ShiftVector shift_from_key(const std::string& key, const std::vector<int>& idx) {
  std::vector<std::int64_t> vals;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      vals.push_back(std::stoll(part));
    } catch (const std::logic_error&) {
      detail::bad("bad weight key '" + key + "'");
    }
  }
  if (key.empty() && idx.empty()) return {};
  if (vals.size() != idx.size()) detail::bad("weight key '" + key + "' does not match the index list");
  return ShiftVector::dense(idx, vals);
}

// ---- ideals ----

inline json to_json(const SepMaxIdeal& m) {
  json gens = json::object();
  for (const auto& [i, f] : m.generators) gens[std::to_string(i)] = to_json(f);
  json j = {{"schema", kSchema},
            {"field", to_json(m.field)},
            {"arity", m.arity ? json(*m.arity) : json("inf")},
            {"generators", gens},
            {"assume_irreducible", m.assume_irreducible}};
  if (m.default_generator) j["default"] = to_json(*m.default_generator);
  return j;
}

inline SepMaxIdeal ideal_from_json(const json& j) {
  SepMaxIdeal m;
  m.field = field_from_json(detail::member(j, "field"));
  const json& a = detail::member(j, "arity");
  if (a.is_string()) {
    if (a.get<std::string>() != "inf") detail::bad("arity is a positive integer or \"inf\"");
  } else {
    m.arity = static_cast<int>(detail::as_int(a, "arity"));
  }
  if (j.contains("generators")) {
    const json& g = j.at("generators");
    if (!g.is_object()) detail::bad("generators is an object index -> polynomial");
    for (const auto& [k, p] : g.items()) {
      int i = 0;
      try {
        i = std::stoi(k);
      } catch (const std::logic_error&) {
        detail::bad("bad generator index '" + k + "'");
      }
      m.generators.emplace(i, poly_from_json(m.field, p));
    }
  }
  if (j.contains("default") && !j.at("default").is_null()) m.default_generator = poly_from_json(m.field, j.at("default"));
  m.assume_irreducible = j.value("assume_irreducible", false);
  return m;
}

// ---- weight modules ----

inline json to_json(const WeightModule& M) {
  const auto& idx = M.indices;
  json window = json::array(), spaces = json::object(), x = json::object(), d = json::object();
  for (const auto& g : M.window) {
    json w = json::array();
    for (int i : idx) w.push_back(g[i]);
    window.push_back(w);
    spaces[g.key(idx)] = M.dim(g);
  }
  for (int i : idx) {
    json xi = json::object(), di = json::object();
    for (const auto& g : M.window) {
      const auto& a = M.x.at(i).at(g);
      const auto& b = M.d.at(i).at(g);
      xi[g.key(idx)] = a ? to_json(*a) : json("out");
      di[g.key(idx)] = b ? to_json(*b) : json("out");
    }
    x[std::to_string(i)] = xi;
    d[std::to_string(i)] = di;
  }
  return {{"schema", kSchema}, {"orbit", to_json(M.orbit.input)}, {"indices", idx}, {"window", window},
          {"spaces", spaces},  {"x", x},                          {"d", d},           {"field", to_json(M.field())}};
}

inline WeightModule module_from_json(const json& j, const Limits& lim = Limits::from_env()) {
  OrbitInfo info = orbit_info(ideal_from_json(detail::member(j, "orbit")), lim);
  std::vector<int> idx;
  for (const auto& v : detail::member(j, "indices")) idx.push_back(static_cast<int>(detail::as_int(v, "index")));
  std::vector<ShiftVector> window;
  for (const auto& w : detail::member(j, "window")) {
    if (!w.is_array() || w.size() != idx.size()) detail::bad("window points must list one entry per index");
    std::vector<std::int64_t> vals;
    for (const auto& v : w) vals.push_back(detail::as_int(v, "window entry"));
    window.push_back(info.normalize(ShiftVector::dense(idx, vals)));
  }
  std::map<ShiftVector, std::size_t> dims;
  for (const auto& [k, v] : detail::member(j, "spaces").items())
    dims[shift_from_key(k, idx)] = static_cast<std::size_t>(detail::as_int(v, "space dimension"));
  WeightModule M = WeightModule::blank(info, idx, window, dims);
  const Field& F = M.field();
  for (const char* op : {"x", "d"}) {
    const json& ops = detail::member(j, op);
    for (int i : idx) {
      const json& oi = detail::member(ops, std::to_string(i).c_str());
      for (const auto& g : M.window) {
        std::string key = g.key(idx);
        const json& e = detail::member(oi, key.c_str());
        std::string where = std::string(op) + std::to_string(i) + " at " + key;
        bool up = op[0] == 'x';
        ShiftVector h = M.step(g, i, up ? 1 : -1);
        if (!M.contains(h)) {
          if (e != "out") detail::bad(where + ": target leaves the window, expected \"out\"");
          continue;
        }
        Matrix m = matrix_from_json(F, e, M.dim(h), M.dim(g), where);
        if (up) M.set_x(i, g, std::move(m));
        else M.set_d(i, g, std::move(m));
      }
    }
  }
  return M;
}

// ---- quiver representations ----

inline json to_json(const QuiverRep& r) {
  json arrows = json::object();
  for (const auto& [n, m] : r.arrows) arrows[n] = to_json(m);
  json j = {{"schema", kSchema}, {"quiver", quiver_name(r.quiver)}, {"field", to_json(r.field)},
            {"dims", r.dims},    {"arrows", arrows}};
  if (!r.label.empty()) j["label"] = r.label;
  return j;
}

inline QuiverRep rep_from_json(const json& j) {
  QuiverKind k = parse_quiver(detail::member(j, "quiver").get<std::string>());
  Field f = field_from_json(detail::member(j, "field"));
  std::vector<std::size_t> dims;
  for (const auto& v : detail::member(j, "dims")) {
    auto d = detail::as_int(v, "dimension");
    if (d < 0) detail::bad("dimensions are nonnegative");
    dims.push_back(static_cast<std::size_t>(d));
  }
  QuiverRep r = QuiverRep::zero(k, f, dims, j.value("label", ""));
  const json& arrows = j.contains("arrows") ? j.at("arrows") : json::object();
  for (const auto& a : quiver(k).arrows)
    if (arrows.contains(a.name)) r.arrow(a.name) = matrix_from_json(f, arrows.at(a.name), dims[a.tgt], dims[a.src], a.name);
  for (const auto& [n, m] : arrows.items()) quiver(k).arrow_index(n);
  return r;
}

// ---- orbit summaries ----

inline json to_json(const OrbitInfo& info) {
  json skel = json::array();
  for (const auto& s : info.skeleton_objects) skel.push_back(to_json(s));
  json j = {{"schema", kSchema},
            {"kind", info.kind == OrbitKind::linear ? "linear" : "cyclic"},
            {"degenerate", info.degenerate},
            {"break_set", info.break_set},
            {"skeleton", skel},
            {"base", to_json(info.base)},
            {"input_offset", to_json(info.input_offset)},
            {"residue_field", to_json(info.field())},
            {"certified", info.certified}};
  j["base"].erase("schema");
  if (info.kind == OrbitKind::cyclic) {
    json per = json::object(), tau = json::object();
    for (int i : info.indices()) {
      per[std::to_string(i)] = info.period(i);
      auto t = info.tau.find(i);
      tau[std::to_string(i)] = t != info.tau.end() && t->second == Tau::sigma ? "sigma" : "one";
    }
    j["periods"] = per;
    j["tau"] = tau;
  }
  return j;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace weylmod
