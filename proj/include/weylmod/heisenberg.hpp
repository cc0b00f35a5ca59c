#pragma once

#include <string>
#include <vector>

#include "weylmod/simples.hpp"

namespace weylmod {

// S(O) of a nondegenerate A_inf orbit is graded by deg(gamma) = -sum k*gamma_k,
// with e_k = d_k and e_{-k} = x_k for k >= 1.
inline std::int64_t graded_degree(const ShiftVector& g) {
  std::int64_t s = 0;
  for (const auto& [k, v] : g.entries()) s += k * v;
  return -s;
}

inline void require_heisenberg_orbit(const OrbitInfo& info) {
  if (info.kind != OrbitKind::linear) fail(Errc::WrongCharacteristic, "the graded demo lives in characteristic 0");
  if (info.degenerate) fail(Errc::DegenerateOrbit, "the graded demo needs a nondegenerate orbit");
}

// Tuples (i_1..i_l), l <= L, |i_k| <= B, sum k*i_k = i; the empty tuple counts when i = 0.
inline std::uint64_t graded_count(std::int64_t i, int L, int B) {
  if (L < 0 || B < 0) fail(Errc::InvalidIdeal, "length and bound must be nonnegative");
  // reach[s] = number of prefixes with weighted sum s, offset by the largest reachable magnitude
  std::int64_t span = static_cast<std::int64_t>(B) * L * (L + 1) / 2;
  if (i > span || i < -span) return 0;
  std::vector<std::uint64_t> reach(static_cast<std::size_t>(2 * span + 1), 0);
  reach[static_cast<std::size_t>(span)] = 1;
  for (int k = 1; k <= L; ++k) {
    std::vector<std::uint64_t> next(reach.size(), 0);
    for (std::size_t s = 0; s < reach.size(); ++s) {
      if (!reach[s]) continue;
      for (int v = -B; v <= B; ++v) {
        std::int64_t t = static_cast<std::int64_t>(s) + static_cast<std::int64_t>(k) * v;
        if (t >= 0 && t < static_cast<std::int64_t>(next.size())) next[static_cast<std::size_t>(t)] += reach[s];
      }
    }
    reach = std::move(next);
  }
  return reach[static_cast<std::size_t>(i + span)];
}

inline std::uint64_t graded_count(std::int64_t i, int L, int B, const OrbitInfo& info) {
  require_heisenberg_orbit(info);
  return graded_count(i, L, B);
}

// The weights of S^(i): support in 1..L, entries bounded by B, degree i.
inline std::vector<ShiftVector> graded_basis(std::int64_t i, int L, int B) {
  std::vector<ShiftVector> out;
  std::vector<int> v(static_cast<std::size_t>(L), -B);
  if (L == 0) return i == 0 ? std::vector<ShiftVector>{ShiftVector{}} : out;
  while (true) {
    ShiftVector g;
    for (int k = 0; k < L; ++k) g.set(k + 1, v[static_cast<std::size_t>(k)]);
    if (graded_degree(g) == -i) out.push_back(g);
    std::size_t k = 0;
    while (k < v.size() && ++v[k] > B) v[k++] = -B;
    if (k == v.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct HeisenbergReport {
  std::size_t brackets_checked = 0, bracket_failures = 0;
  std::size_t grading_checked = 0, grading_failures = 0;
  std::size_t modules_relations_failed = 0;
  std::string central_charge = "1";
  std::string first_failure;
  bool all_pass() const { return bracket_failures == 0 && grading_failures == 0 && modules_relations_failed == 0; }
};

// e_a on the weight g: nullopt when it leaves the window
inline std::optional<std::pair<ShiftVector, SemiMap>> heisenberg_generator(const WeightModule& M, int a,
                                                                          const ShiftVector& g) {
  int k = a > 0 ? a : -a;
  auto op = a > 0 ? M.dmap(k, g) : M.xmap(k, g);
  if (!op) return std::nullopt;
  return std::pair{M.step(g, k, a > 0 ? -1 : 1), *op};
}

inline HeisenbergReport heisenberg_action_check(const OrbitInfo& info, int indices, int radius) {
  require_heisenberg_orbit(info);
  std::vector<int> idx;
  for (int k = 1; k <= indices; ++k) idx.push_back(k);
  WeightModule M = build_S_O(info, idx, box_window(info, idx, radius));
  HeisenbergReport rep;
  if (!verify_relations(M).all_pass()) ++rep.modules_relations_failed;
  const ResidueField& rf = M.residue();
  const Field& F = M.field();
  auto note = [&](const std::string& s) {
    if (rep.first_failure.empty()) rep.first_failure = s;
  };
  std::vector<int> gens;
  for (int k : idx) {
    gens.push_back(k);
    gens.push_back(-k);
  }
  for (const auto& g : M.window) {
    for (int a : gens) {
      auto e = heisenberg_generator(M, a, g);
      if (!e) continue;
      ++rep.grading_checked;
      if (graded_degree(e->first) != graded_degree(g) + a) {
        ++rep.grading_failures;
        note("grading of e_" + std::to_string(a) + " at " + g.to_string());
      }
    }
    for (int a : gens)
      for (int b : gens) {
        auto ea = heisenberg_generator(M, a, g), eb = heisenberg_generator(M, b, g);
        if (!ea || !eb) continue;
        auto eab = heisenberg_generator(M, a, eb->first), eba = heisenberg_generator(M, b, ea->first);
        if (!eab || !eba) continue;
        ++rep.brackets_checked;
        Matrix lhs = compose(rf, eab->second, eb->second).mat - compose(rf, eba->second, ea->second).mat;
        Elem c = a == -b ? F.from_int(a > 0 ? 1 : -1) : F.zero();
        if (lhs != Matrix::scalar(c, M.dim(g))) {
          ++rep.bracket_failures;
          note("[e_" + std::to_string(a) + ",e_" + std::to_string(b) + "] at " + g.to_string());
        }
      }
  }
  return rep;
}

}  // namespace weylmod
