#pragma once

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "weylmod/heisenberg.hpp"
#include "weylmod/indecomp.hpp"
#include "weylmod/json_io.hpp"
#include "weylmod/simples.hpp"

namespace weylmod::cli {

namespace detail {

inline void emit(std::ostream& out, json j) {
  if (!j.contains("schema")) j["schema"] = kSchema;
  out << j.dump(2) << "\n";
}

inline json error_object(const std::string& name, const std::string& msg) {
  return {{"schema", kSchema}, {"error", name}, {"message", msg}};
}

inline std::vector<int> pick_indices(const OrbitInfo& info, int count) {
  if (count <= 0) return default_indices(info);
  std::vector<int> idx;
  for (int k = 1; k <= count; ++k) {
    info.base.check_index(k);
    idx.push_back(k);
  }
  return idx;
}

inline SepMaxIdeal heisenberg_default() {
  SepMaxIdeal m;
  m.field = Field::rationals();
  m.default_generator = Poly::linear(m.field.from_rational(Rational(1, 2)));
  return m;
}

inline json descriptor_json(const SimpleDescriptor& d, std::size_t index) {
  static const char* kinds[] = {"S_O", "S_O_p", "family"};
  json j = {{"index", index}, {"label", d.label()}, {"kind", kinds[static_cast<int>(d.kind)]}};
  if (d.kind == SimpleDescriptor::Kind::S_O_p) j["p"] = to_json(d.p);
  if (d.kind == SimpleDescriptor::Kind::family) {
    json xi = json::object();
    for (const auto& [i, v] : d.xi) xi[std::to_string(i)] = v;
    j["gamma"] = d.gamma;
    j["xi"] = xi;
    j["presentation"] = d.presentation;
    j["N"] = d.N;
  }
  return j;
}

inline json module_json(const WeightModule& M, const std::string& label) {
  json j = to_json(M);
  j["label"] = label;
  j["dimension"] = {{"over_residue", M.total_dim()}, {"over_K", M.base_dim()}};
  return j;
}

inline std::string word_string(const std::vector<GStep>& w) {
  std::string s;
  for (auto it = w.rbegin(); it != w.rend(); ++it) s += std::string(1, it->op) + std::to_string(it->index) + "@" + it->from.to_string() + (std::next(it) == w.rend() ? "" : " ");
  return s;
}

}  // namespace detail

// Runs one command; returns the process exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weight modules over Weyl algebras", "weylmod"};
  app.require_subcommand(1);
  std::uint64_t budget = 0, seed = 0;
  app.add_option("--budget", budget, "enumeration budget (overrides WEYLMOD_MAX_ENUM)");
  app.add_option("--seed", seed, "seed for sampling-based checks")->capture_default_str();

  std::string file, rep_file, n_file, quiver_s = "q2", field_s = "gf2", dims_s, ideal_file;
  int window = 3, which = 0, max_string = 6, max_poly_deg = 3, height = 2, indices = 0;
  std::int64_t degree = 0;
  int len = 4, bound = 2, radius = 2;

  auto* orbit = app.add_subcommand("orbit", "orbit data of an ideal")->require_subcommand(1);
  auto* orbit_info_cmd = orbit->add_subcommand("info", "break set, periods and skeleton objects");
  orbit_info_cmd->add_option("ideal", file)->required();

  auto* block = app.add_subcommand("block", "representation type of a block")->require_subcommand(1);
  auto* block_classify = block->add_subcommand("classify", "finite, tame or wild");
  block_classify->add_option("ideal", file)->required();

  auto* skeleton = app.add_subcommand("skeleton", "skeleton algebra")->require_subcommand(1);
  auto* skeleton_show = skeleton->add_subcommand("show", "objects and generator images");
  skeleton_show->add_option("ideal", file)->required();

  auto* simples = app.add_subcommand("simples", "simple weight modules")->require_subcommand(1);
  auto* simples_list = simples->add_subcommand("list", "classification descriptors");
  simples_list->add_option("ideal", file)->required();
  auto* simples_build = simples->add_subcommand("build", "construct one simple module");
  simples_build->add_option("ideal", file)->required();
  simples_build->add_option("--which", which, "descriptor index")->required();
  simples_build->add_option("--N", n_file, "polynomial JSON generating N");
  simples_build->add_option("--window", window, "window radius")->capture_default_str();
  simples_build->add_option("--indices", indices, "use indices 1..m");

  auto* indecomp = app.add_subcommand("indecomp", "indecomposable modules")->require_subcommand(1);
  auto* indecomp_list = indecomp->add_subcommand("list", "classification of the block");
  indecomp_list->add_option("ideal", file)->required();
  indecomp_list->add_option("--max-string", max_string)->capture_default_str();
  indecomp_list->add_option("--max-poly-deg", max_poly_deg)->capture_default_str();
  indecomp_list->add_option("--height", height, "coefficient bound for band polynomials over Q")->capture_default_str();
  auto* indecomp_build = indecomp->add_subcommand("build", "weight module of a quiver representation");
  indecomp_build->add_option("ideal", file)->required();
  indecomp_build->add_option("--rep", rep_file)->required();
  indecomp_build->add_option("--window", window)->capture_default_str();
  indecomp_build->add_option("--indices", indices, "use indices 1..m");

  auto* module = app.add_subcommand("module", "checks on a module JSON")->require_subcommand(1);
  auto* module_verify = module->add_subcommand("verify", "Weyl relations on the window");
  module_verify->add_option("module", file)->required();
  auto* module_simple = module->add_subcommand("simple-check", "simplicity oracle");
  module_simple->add_option("module", file)->required();
  auto* module_indec = module->add_subcommand("indec-check", "indecomposability oracle");
  module_indec->add_option("module", file)->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force oracles")->require_subcommand(1);
  auto* oracle_enum = oracle->add_subcommand("enumerate", "indecomposables of a quiver by exhaustion");
  oracle_enum->add_option("--quiver", quiver_s)->capture_default_str();
  oracle_enum->add_option("--field", field_s)->capture_default_str();
  oracle_enum->add_option("--dims", dims_s, "comma-separated dimension vector")->required();

  auto* heis = app.add_subcommand("heisenberg", "graded A_inf demo")->require_subcommand(1);
  auto* heis_dim = heis->add_subcommand("graded-dim", "truncated graded dimension");
  heis_dim->add_option("--degree", degree)->required();
  heis_dim->add_option("--len", len)->capture_default_str();
  heis_dim->add_option("--bound", bound)->capture_default_str();
  heis_dim->add_option("--ideal", ideal_file);
  auto* heis_check = heis->add_subcommand("check", "bracket and grading checks");
  heis_check->add_option("--radius", radius)->capture_default_str();
  heis_check->add_option("--indices", indices)->capture_default_str();
  heis_check->add_option("--ideal", ideal_file);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    detail::emit(out, detail::error_object("UsageError", e.what()));
    err << e.what() << "\n";
    return 2;
  }

  Limits lim = Limits::from_env();
  if (budget) lim.max_enum = lim.max_oracle = budget;
  auto load_info = [&](const std::string& path) { return orbit_info(ideal_from_json(read_json_file(path)), lim); };

  try {
    if (*orbit_info_cmd) {
      detail::emit(out, to_json(load_info(file)));
    } else if (*block_classify) {
      auto t = classify_block(load_info(file));
      detail::emit(out, {{"type", t.value}, {"reason", t.reason}});
    } else if (*skeleton_show) {
      SkeletonAlgebra s = build_skeleton(load_info(file));
      json objs = json::array(), gens = json::array(), tau = json::object();
      for (const auto& o : s.objects) objs.push_back(to_json(o));
      for (const auto& g : s.table)
        gens.push_back({{"generator", g.generator},
                        {"source", to_json(g.source)},
                        {"target", to_json(g.target)},
                        {"image", (g.inverse ? "(" + detail::word_string(g.word) + ")^-1" : detail::word_string(g.word))}});
      for (const auto& [j, t] : s.tau) tau[std::to_string(j)] = t == Tau::sigma ? "sigma" : "one";
      detail::emit(out, {{"algebra", std::string(1, s.kind)}, {"I", s.I}, {"J", s.J}, {"tau", tau}, {"objects", objs},
                         {"generators", gens}});
    } else if (*simples_list) {
      auto list = classify_simples(load_info(file));
      json d = json::array();
      for (std::size_t k = 0; k < list.size(); ++k) d.push_back(detail::descriptor_json(list[k], k));
      detail::emit(out, {{"count", list.size()}, {"descriptors", d}});
    } else if (*simples_build) {
      OrbitInfo info = load_info(file);
      auto list = classify_simples(info);
      if (which < 0 || static_cast<std::size_t>(which) >= list.size())
        throw SchemaError("--which must be below " + std::to_string(list.size()));
      const auto& desc = list[static_cast<std::size_t>(which)];
      WeightModule M;
      if (desc.kind == SimpleDescriptor::Kind::family) {
        std::optional<Poly> N;
        if (!n_file.empty()) N = poly_from_json(info.field(), read_json_file(n_file));
        M = build_S_char_p(info, desc, N, lim);
      } else {
        auto idx = detail::pick_indices(info, indices);
        auto win = box_window(info, idx, window);
        M = desc.kind == SimpleDescriptor::Kind::S_O ? build_S_O(info, idx, win) : build_S_O_p(info, desc.p, idx, win);
      }
      detail::emit(out, detail::module_json(M, desc.label()));
    } else if (*indecomp_list) {
      OrbitInfo info = load_info(file);
      RepType t = classify_block(info);
      json j = {{"block", {{"type", t.value}, {"reason", t.reason}}}};
      if (info.kind != OrbitKind::linear)
        fail(Errc::WrongCharacteristic, "indecomposables are only constructed in characteristic 0");
      std::size_t k = info.degenerate ? info.break_set.size() : 0;
      std::vector<QuiverRep> reps;
      if (k == 0) {
        j["quiver"] = nullptr;
        j["modules"] = {"S(O)"};
      } else if (k == 1) {
        j["quiver"] = "Q1";
        reps = q1_indecomposables(info.field());
      } else if (k == 2) {
        j["quiver"] = "Q2";
        reps = q2_indecomposables(info.field(), max_string, max_poly_deg, height, lim);
      } else {
        fail(Errc::WrongBreakOrder, "wild block: no classification of indecomposables");
      }
      json arr = json::array();
      for (const auto& r : reps) {
        json rj = to_json(r);
        rj.erase("schema");
        arr.push_back(rj);
      }
      j["count"] = k == 0 ? 1 : reps.size();
      j["representations"] = arr;
      detail::emit(out, j);
    } else if (*indecomp_build) {
      OrbitInfo info = load_info(file);
      QuiverRep rep = rep_from_json(read_json_file(rep_file));
      auto idx = detail::pick_indices(info, indices);
      WeightModule M = build_rep_module(info, rep, idx, box_window(info, idx, window));
      detail::emit(out, detail::module_json(M, rep.label.empty() ? "F'(rep)" : "F'(" + rep.label + ")"));
    } else if (*module_verify) {
      WeightModule M = module_from_json(read_json_file(file), lim);
      RelationReport r = verify_relations(M);
      json checks = json::array();
      for (const auto& c : r.checks) {
        json cj = {{"id", c.id}, {"checked", c.checked}, {"failed", c.failed}};
        if (c.first_failure) cj["first_failure"] = to_json(*c.first_failure);
        checks.push_back(cj);
      }
      detail::emit(out, {{"all_pass", r.all_pass()}, {"checked", r.checked()}, {"failures", r.failures()}, {"checks", checks}});
    } else if (*module_simple) {
      WeightModule M = module_from_json(read_json_file(file), lim);
      detail::emit(out, {{"simple", is_simple_finite(M, lim)}, {"dimension", M.base_dim()}});
    } else if (*module_indec) {
      WeightModule M = module_from_json(read_json_file(file), lim);
      detail::emit(out, {{"indecomposable", is_indecomposable_finite(M, lim)}, {"dimension", M.base_dim()}});
    } else if (*oracle_enum) {
      QuiverKind qk = parse_quiver(quiver_s);
      Field F = field_from_json(json(field_s));
      std::vector<std::size_t> dims;
      std::stringstream ss(dims_s);
      std::string part;
      while (std::getline(ss, part, ',')) {
        try {
          dims.push_back(std::stoul(part));
        } catch (const std::logic_error&) {
          throw SchemaError("bad --dims entry '" + part + "'");
        }
      }
      auto res = brute_force_indecomposables(qk, F, dims, lim);
      std::size_t total = 0;
      for (auto d : dims) total += d;
      auto gen = qk == QuiverKind::Q1 ? q1_indecomposables(F)
                                      : q2_indecomposables(F, static_cast<int>(std::max<std::size_t>(total, 1)),
                                                           static_cast<int>(std::max<std::size_t>(total / 4, 1)), 2, lim);
      json reps = json::array();
      for (const auto& r : res.indecomposables) {
        json rj = to_json(r);
        rj.erase("schema");
        reps.push_back(rj);
      }
      detail::emit(out, {{"quiver", quiver_name(qk)},
                         {"field", to_json(F)},
                         {"dims", dims},
                         {"tuples", res.tuples},
                         {"classes", res.classes},
                         {"indecomposables", res.indecomposables.size()},
                         {"classification_count", restrict_to_dims(gen, dims).size()},
                         {"representatives", reps}});
    } else if (*heis_dim) {
      OrbitInfo info = orbit_info(ideal_file.empty() ? detail::heisenberg_default() : ideal_from_json(read_json_file(ideal_file)), lim);
      detail::emit(out, {{"degree", degree}, {"len", len}, {"bound", bound}, {"count", graded_count(degree, len, bound, info)}});
    } else if (*heis_check) {
      OrbitInfo info = orbit_info(ideal_file.empty() ? detail::heisenberg_default() : ideal_from_json(read_json_file(ideal_file)), lim);
      auto r = heisenberg_action_check(info, indices > 0 ? indices : 4, radius);
      json j = {{"all_pass", r.all_pass()},
                {"brackets_checked", r.brackets_checked},
                {"bracket_failures", r.bracket_failures},
                {"grading_checked", r.grading_checked},
                {"grading_failures", r.grading_failures},
                {"relation_failures", r.modules_relations_failed},
                {"central_charge", r.central_charge}};
      if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
      detail::emit(out, j);
    }
  } catch (const DomainError& e) {
    detail::emit(out, detail::error_object(e.name(), e.what()));
    err << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const SchemaError& e) {
    detail::emit(out, detail::error_object("SchemaError", e.what()));
    err << "SchemaError: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    detail::emit(out, detail::error_object("SchemaError", e.what()));
    err << "SchemaError: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace weylmod::cli
