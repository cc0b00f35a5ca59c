// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>

#include "fixtures.hpp"
#include "weylmod/heisenberg.hpp"
#include "weylmod/indecomp.hpp"
#include "weylmod/json_io.hpp"

using namespace weylmod;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

struct Check {
  bool ok = true;
  std::string why;
  void require(bool c, const std::string& msg) {
    if (!c && ok) {
      ok = false;
      why = msg;
    }
  }
};

std::vector<std::vector<std::size_t>> dim_vectors(std::size_t verts, std::size_t max_entry, std::size_t max_total) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> d(verts, 0);
  while (true) {
    std::size_t t = 0;
    for (auto v : d) t += v;
    if (t >= 1 && t <= max_total) out.push_back(d);
    std::size_t k = 0;
    while (k < verts && ++d[k] > max_entry) d[k++] = 0;
    if (k == verts) break;
  }
  return out;
}

std::string dims_str(const std::vector<std::size_t>& d) {
  std::string s;
  for (auto v : d) s += std::to_string(v);
  return s;
}

// brute-force classes and generated list match one-to-one up to isomorphism
bool lists_agree(const std::vector<QuiverRep>& brute, const std::vector<QuiverRep>& gen) {
  if (brute.size() != gen.size()) return false;
  std::vector<int> hits(gen.size(), 0);
  for (const auto& b : brute) {
    int m = 0;
    for (std::size_t g = 0; g < gen.size(); ++g)
      if (isomorphic_finite(b, gen[g])) {
        ++m;
        ++hits[g];
      }
    if (m != 1) return false;
  }
  for (int h : hits)
    if (h != 1) return false;
  return true;
}

Check c1() {
  Check c;
  auto info = orbit_info(ideal_from_json(read_json_file(std::string(WEYLMOD_SAMPLES) + "/f2_t2t1.json")));
  auto desc = classify_simples(info).front();
  auto M = build_S_char_p(info, desc, poly_from_json(F2, read_json_file(std::string(WEYLMOD_SAMPLES) + "/n_c3c1.json")));
  c.require(M.base_dim() == 6, "dimension " + std::to_string(M.base_dim()));
  c.require(is_simple_finite(M), "not simple");
  return c;
}

Check c2() {
  Check c;
  for (std::int64_t p : {2, 3, 5}) {
    Field F = Field::prime(p);
    for (std::int64_t a = 0; a < p; ++a) {
      auto info = orbit_info(fx::ideal(F, {{a, 1}}));
      for (const auto& d : classify_simples(info)) {
        std::vector<std::optional<Poly>> params{std::nullopt};
        if (!d.gamma.empty()) {
          params.clear();
          for (std::int64_t l = 1; l < p; ++l) params.push_back(Poly::from_ints(F, {-l, 1}));
        }
        for (const auto& N : params) {
          auto M = build_S_char_p(info, d, N);
          c.require(M.base_dim() == static_cast<std::size_t>(p),
                    "p=" + std::to_string(p) + " " + d.label() + " dimension " + std::to_string(M.base_dim()));
          c.require(verify_relations(M).all_pass(), "relations fail for " + d.label());
        }
      }
    }
  }
  return c;
}

Check c3() {
  Check c;
  std::vector<std::tuple<SepMaxIdeal, std::string, std::string>> cases{
      {fx::q_linear({Rational(1, 2)}), "finite", "char 0: nondegenerate orbit"},
      {fx::q_linear({0, Rational(1, 2)}), "finite", "char 0: maximal break of order 1"},
      {fx::q_linear({0, 0}), "tame", "char 0: maximal break of order 2"},
      {fx::q_linear({0, 0, 0}), "wild", "char 0: maximal break of order >= 3"},
      {fx::ideal(F2, {{1, 1, 1}}), "tame", "char p: n = 1"},
      {fx::ideal(F3, {{0, 1}, {1, 0, 1}}), "wild", "char p: n >= 2"},
  };
  for (const auto& [m, type, reason] : cases) {
    auto t = classify_block(orbit_info(m));
    c.require(t.value == type && t.reason == reason, "got " + t.value + " / " + t.reason + ", want " + reason);
  }
  return c;
}

Check c4() {
  Check c;
  auto gen = q1_indecomposables(F2);
  for (const auto& d : dim_vectors(2, 2, 4)) {
    auto brute = brute_force_indecomposables(QuiverKind::Q1, F2, d);
    c.require(lists_agree(brute.indecomposables, restrict_to_dims(gen, d)), "mismatch at " + dims_str(d));
  }
  c.require(brute_force_indecomposables(QuiverKind::Q1, F2, {1, 1}).indecomposables.size() == 2, "(1,1) count");
  return c;
}

Check c5() {
  Check c;
  auto gen = q2_indecomposables(F2, 4, 1);
  std::size_t total = 0;
  for (const auto& d : dim_vectors(4, 4, 4)) {
    auto brute = brute_force_indecomposables(QuiverKind::Q2, F2, d);
    c.require(lists_agree(brute.indecomposables, restrict_to_dims(gen, d)), "mismatch at " + dims_str(d));
    total += brute.indecomposables.size();
  }
  c.why = c.ok ? std::to_string(total) + " classes" : c.why;
  return c;
}

Check c6() {
  Check c;
  std::size_t count = 0;
  auto verify = [&](const WeightModule& M, const std::string& what) {
    ++count;
    auto r = verify_relations(M);
    c.require(r.all_pass(), what + " fails relations");
  };
  // simples over Q, n <= 3
  for (const auto& roots : std::vector<std::vector<Rational>>{{Rational(1, 2)},
                                                               {0},
                                                               {0, Rational(1, 3)},
                                                               {0, 0},
                                                               {Rational(1, 2), Rational(2, 3)},
                                                               {0, 0, Rational(1, 2)},
                                                               {0, 0, 0}}) {
    auto info = orbit_info(fx::q_linear(roots));
    auto idx = info.indices();
    for (int radius : {2, idx.size() <= 2 ? 4 : 2}) {
      auto win = box_window(info, idx, radius);
      for (const auto& d : classify_simples(info))
        verify(d.kind == SimpleDescriptor::Kind::S_O ? build_S_O(info, idx, win) : build_S_O_p(info, d.p, idx, win),
               d.label());
    }
  }
  // tower: residue field Q(i)
  {
    auto info = orbit_info(ideal_from_json(read_json_file(std::string(WEYLMOD_SAMPLES) + "/q_nondeg.json")));
    auto idx = info.indices();
    for (int radius : {1, 2, 3}) verify(build_S_O(info, idx, box_window(info, idx, radius)), "tower S(O)");
  }
  // char p simples over F2 and F3
  std::size_t before = count;
  for (const auto& [F, gens] : std::vector<std::pair<Field, std::vector<std::vector<std::int64_t>>>>{
           {F2, {{1, 1, 1}}}, {F2, {{0, 1}}}, {F3, {{1, 0, 1}}}, {F3, {{2, 1}}}, {F3, {{0, 1}, {1, 1}}}}) {
    auto info = orbit_info(fx::ideal(F, gens));
    for (const auto& d : classify_simples(info)) {
      // every small parameter; those outside the family are rejected by the builder
      std::vector<std::optional<Poly>> params{std::nullopt, Poly::from_ints(F, {1, 1, 0, 1})};
      for (std::int64_t l = 1; l < F.characteristic(); ++l) params.push_back(Poly::from_ints(F, {-l, 1}));
      for (const auto& N : params) {
        WeightModule M;
        try {
          M = build_S_char_p(info, d, N);
        } catch (const DomainError&) {
          continue;
        }
        verify(M, d.label());
      }
    }
  }
  c.require(count - before >= 10, "too few char p simples");
  // indecomposables over Q
  {
    auto info = orbit_info(fx::q_linear({0, Rational(1, 2)}));
    auto idx = info.indices();
    for (const auto& m : build_order1_modules(info, idx, box_window(info, idx, 3))) verify(m.module, m.label);
    auto two = orbit_info(fx::q_linear({0, 0}));
    auto i2 = two.indices();
    auto win = box_window(two, i2, 3);
    for (const auto& r : q2_indecomposables(Q, 4, 2)) verify(build_order2_module(two, r, i2, win), r.label);
  }
  // heisenberg windows
  for (int n = 1; n <= 3; ++n) {
    auto info = orbit_info(fx::a_inf(Rational(1, 2)));
    std::vector<int> idx;
    for (int k = 1; k <= n; ++k) idx.push_back(k);
    verify(build_S_O(info, idx, box_window(info, idx, 2)), "A_inf window");
  }
  auto h = heisenberg_action_check(orbit_info(fx::a_inf(Rational(1, 2))), 3, 2);
  c.require(h.modules_relations_failed == 0, "heisenberg module relations");
  c.require(count >= 60, "only " + std::to_string(count) + " modules");
  if (c.ok) c.why = std::to_string(count) + " modules";
  return c;
}

Check c7() {
  Check c;
  auto one = orbit_info(fx::q_linear({0, Rational(1, 2)}));
  auto two = orbit_info(fx::q_linear({0, 0}));
  std::size_t cases = 0;
  auto round_trip = [&](const OrbitInfo& info, const QuiverRep& r) {
    auto idx = info.indices();
    auto win = box_window(info, idx, 2);
    auto M = build_rep_module(info, r, idx, win);
    ++cases;
    c.require(to_quiver_rep(M) == r, r.label + ": F'F not identity");
    c.require(from_skeleton_A(info, to_skeleton_A(M), idx, win) == M, r.label + ": FF' not identity");
  };
  for (const auto& r : q1_indecomposables(Q)) round_trip(one, r);
  for (const auto& r : q2_indecomposables(Q, 5, 2)) round_trip(two, r);
  for (const auto& roots : std::vector<std::vector<Rational>>{{Rational(1, 2)}, {0}, {0, 0}, {0, Rational(1, 3), 0}}) {
    auto info = orbit_info(fx::q_linear(roots));
    auto idx = info.indices();
    auto win = box_window(info, idx, 3);
    for (const auto& p : info.skeleton_objects) {
      auto M = info.degenerate ? build_S_O_p(info, p, idx, win) : build_S_O(info, idx, win);
      ++cases;
      c.require(from_skeleton_A(info, to_skeleton_A(M), idx, win) == M, "simple at " + p.to_string());
    }
  }
  if (c.ok) c.why = std::to_string(cases) + " cases";
  return c;
}

Check c8() {
  Check c;
  auto info = orbit_info(fx::q_linear({0}));
  std::vector<int> idx{1};
  auto win = box_window(info, idx, 3);
  auto mods = build_order1_modules(info, idx, win);
  c.require(mods.size() == 4, "count");
  if (!c.ok) return c;
  // isomorphism invariants: dimension profile, rank of x at 0, rank of d at e1
  std::set<std::tuple<std::vector<std::size_t>, std::size_t, std::size_t>> seen;
  ShiftVector e1 = ShiftVector::unit(1);
  for (const auto& m : mods) {
    std::vector<std::size_t> prof;
    for (const auto& g : win) prof.push_back(m.module.dim(g));
    auto x = m.module.xmap(1, ShiftVector{});
    auto d = m.module.dmap(1, e1);
    seen.insert({prof, x ? rank(x->mat) : 0, d ? rank(d->mat) : 0});
    c.require(is_indecomposable_finite(m.module), m.label + " decomposes");
  }
  c.require(seen.size() == 4, "two modules share invariants");
  const Field& K = info.field();
  for (auto [k, gen] : {std::pair{2, ShiftVector{}}, std::pair{3, e1}}) {
    const auto& M = mods[k].module;
    c.require(closure_is_full(M, submodule_closure(M, {{gen, unit_vector(K, 1, 0)}})), mods[k].label + " not cyclic");
    c.require(!is_simple_finite(M), mods[k].label + " simple");
  }
  c.require(is_simple_finite(mods[0].module) && is_simple_finite(mods[1].module), "S modules not simple");
  return c;
}

Check c9() {
  Check c;
  auto info = orbit_info(fx::q_linear({0, 0}));
  auto idx = info.indices();
  auto win = box_window(info, idx, 3);
  auto reps = restrict_to_dims(q2_indecomposables(Q, 2, 1), {1, 0, 0, 0});
  c.require(reps.size() == 1, "S_0 missing");
  if (!c.ok) return c;
  auto M = build_order2_module(info, reps.front(), idx, win);
  for (const auto& g : win)
    c.require(M.dim(g) == (g[1] <= 0 && g[2] <= 0 ? 1u : 0u), "support at " + g.to_string());
  for (int i : idx) {
    auto x = M.xmap(i, ShiftVector{});
    c.require(!x || x->mat.is_zero(), "x_" + std::to_string(i) + " acts on the corner");
  }
  c.require(verify_relations(M).all_pass(), "relations");
  return c;
}

Check c10() {
  Check c;
  for (std::int64_t i = -3; i <= 3; ++i)
    for (int B = 0; B <= 6; ++B) {
      auto n = graded_count(i, 4, B);
      c.require(n == fx::graded_count_enumerated(i, 4, B), "enumerator mismatch at " + std::to_string(i));
      if (B > std::abs(i)) c.require(graded_count(i, 4, B - 1) < n, "not increasing at i=" + std::to_string(i));
    }
  return c;
}

Check c11() {
  Check c;
  auto r = heisenberg_action_check(orbit_info(fx::a_inf(Rational(-1, 2))), 4, 2);
  c.require(r.all_pass(), r.first_failure);
  c.require(r.central_charge == "1", "charge " + r.central_charge);
  if (c.ok) c.why = std::to_string(r.brackets_checked) + " brackets";
  return c;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"char 2 simple of dimension 6", c1},
      {"char p simples have dimension p", c2},
      {"block type table", c3},
      {"Q1 oracle over F2", c4},
      {"Q2 oracle over F2, total <= 4", c5},
      {"relation suite", c6},
      {"functor round trips", c7},
      {"order-1 indecomposables", c8},
      {"S_0 quadrant", c9},
      {"graded counts grow", c10},
      {"Heisenberg brackets", c11},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = criteria[k].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (c.ok ? "PASS " : "FAIL ") << k + 1 << " " << criteria[k].first;
    if (!c.why.empty()) std::cout << " (" << c.why << ")";
    std::cout << " [" << secs << "s]\n";
    failed += !c.ok;
  }
  return failed == 0 ? 0 : 1;
}
