// Copyright 2026 The symlu Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "io.hpp"
#include "symlu/classify.hpp"
#include "symlu/mixed.hpp"
#include "symlu/verify.hpp"

namespace symlu::cli {

namespace {

using io::Json;

constexpr std::uint64_t kDefaultSeed = 20260516;

enum class Mode { Json, Csv, Human };

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string deg(double rad) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", rad * 180.0 / kPi);
  return buf;
}

void flatten(const Json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "." + std::to_string(i), rows);
  } else if (j.is_number_float()) {
    rows.emplace_back(prefix, fmt(j.get<double>()));
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

struct Report {
  Json json;
  /// Optional per-mode renderers; flattened key/value output otherwise.
  std::function<void(std::ostream&)> csv;
  std::function<void(std::ostream&)> human;
  int code = kOk;
};

void emit(const Report& r, Mode mode, std::ostream& out) {
  if (mode == Mode::Json) {
    out << io::dump(r.json) << '\n';
    return;
  }
  const auto& custom = mode == Mode::Csv ? r.csv : r.human;
  if (custom) {
    custom(out);
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(r.json, "", rows);
  if (mode == Mode::Csv) out << "key,value\n";
  for (const auto& [k, v] : rows)
    out << k << (mode == Mode::Csv ? "," : ": ") << v << '\n';
}

Json group_to_json(const PointGroup& g) {
  Json gens = Json::array();
  for (const auto& r : g.generators)
    gens.push_back(Json{{"axis", io::vec3_to_json(r.axis())},
                        {"angle", snap_angle(r.angle())}});
  Json j{{"group", to_string(g.tag)}, {"m", g.m}, {"order", g.order},
         {"continuous", !g.finite()}};
  if (g.tag != GroupTag::Trivial && g.tag != GroupTag::Tetrahedral &&
      g.tag != GroupTag::Octahedral && g.tag != GroupTag::Icosahedral)
    j["axis"] = io::vec3_to_json(g.axis);
  j["generators"] = gens;
  return j;
}

Json witness_to_json(const StabilizerWitness& w) {
  return Json{{"family", w.family},
              {"residual", w.residual},
              {"accepted", w.accepted},
              {"factors", io::local_to_json(w.U)}};
}

Report classify_report(const ClassificationResult& res, const Json& input) {
  Report r;
  Json j{{"class", res.cls.label()}, {"n", res.cls.n}};
  if (res.cls.tag == StabilizerTag::GhzGeneral ||
      res.cls.tag == StabilizerTag::GhzBalanced)
    j["t"] = res.cls.t;
  if (res.cls.tag == StabilizerTag::DickeGeneral ||
      res.cls.tag == StabilizerTag::DickeBalanced)
    j["k"] = res.cls.k;
  if (res.cls.group) j["group"] = group_to_json(*res.cls.group);
  j["canonical"] = res.canonical ? io::state_to_json(*res.canonical) : Json(nullptr);
  j["g"] = res.transform ? io::matrix_to_json(res.transform->matrix()) : Json(nullptr);
  if (res.local_transform) j["local_transform"] = io::local_to_json(*res.local_transform);
  Json gens = Json::array();
  for (const auto& g : res.generators) gens.push_back(io::local_to_json(g));
  j["generators"] = gens;
  j["state"] = input;
  r.json = j;
  r.human = [res](std::ostream& out) {
    out << "class " << res.cls.label() << " (n = " << res.cls.n << ")\n";
    if (res.cls.tag == StabilizerTag::GhzGeneral)
      out << "t = " << fmt(res.cls.t) << "  (a = cos(pi t/4), b = sin(pi t/4))\n";
    if (res.cls.tag == StabilizerTag::DickeGeneral ||
        res.cls.tag == StabilizerTag::DickeBalanced)
      out << "canonical Dicke index k = " << res.cls.k << "\n";
    if (res.cls.group)
      out << "point group " << to_string(res.cls.group->tag) << ", order "
          << res.cls.group->order << "\n";
    out << res.generators.size() << " stabilizer generators\n";
  };
  return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Local unitary classification of symmetric multiqubit states",
               "symlu"};
  app.require_subcommand(1);
  app.fallthrough();

  double tol = 1e-8;
  std::uint64_t seed = kDefaultSeed;
  bool as_json = false, as_csv = false, as_human = false;
  app.add_option("--tol", tol, "Equality tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Random seed");
  auto* fj = app.add_flag("--json", as_json, "JSON output (default)");
  auto* fc = app.add_flag("--csv", as_csv, "CSV output");
  auto* fh = app.add_flag("--human", as_human, "Human-readable output");
  fc->excludes(fj);
  fh->excludes(fj)->excludes(fc);

  // mkstate
  auto* mk = app.add_subcommand("mkstate", "Build a symmetric pure state");
  mk->require_subcommand(1);
  auto* mk_dicke = mk->add_subcommand("dicke", "Dicke state D_n^(k)");
  int dn = 0, dk = 0;
  mk_dicke->add_option("n", dn, "Qubits")->required();
  mk_dicke->add_option("k", dk, "Excitations")->required();
  auto* mk_ghz = mk->add_subcommand("ghz", "a|0...0> + b|1...1>");
  int gn = 0;
  std::vector<double> ga, gb;
  double gt = 0;
  mk_ghz->add_option("n", gn, "Qubits")->required();
  auto* o_a = mk_ghz->add_option("--a", ga, "Amplitude a as RE IM")->expected(2);
  auto* o_b = mk_ghz->add_option("--b", gb, "Amplitude b as RE IM")->expected(2);
  auto* o_t = mk_ghz->add_option("--t", gt, "a = cos(pi t/4), b = sin(pi t/4)");
  o_t->excludes(o_a)->excludes(o_b);
  auto* mk_points = mk->add_subcommand("from-points", "State from Bloch points");
  std::string points_path;
  mk_points->add_option("file", points_path, "Points JSON, - for stdin")->required();
  auto* mk_random = mk->add_subcommand("random", "Random symmetric state");
  int rn = 0;
  mk_random->add_option("n", rn, "Qubits")->required();

  auto* maj = app.add_subcommand("majorana", "Majorana points of a state");
  std::string maj_path;
  maj->add_option("state", maj_path, "State JSON, - for stdin")->required();

  auto* sym = app.add_subcommand("symmetry", "Rotational symmetry group");
  std::string sym_path;
  sym->add_option("state", sym_path, "State or points JSON, - for stdin")->required();

  auto* cls = app.add_subcommand("classify", "Local unitary stabilizer class");
  std::string cls_path;
  cls->add_option("state", cls_path, "State JSON, - for stdin")->required();

  auto* eq = app.add_subcommand("equiv", "Pure-state local unitary equivalence");
  std::string eq_a, eq_b;
  eq->add_option("a", eq_a, "First state")->required();
  eq->add_option("b", eq_b, "Second state")->required();

  auto* eqm = app.add_subcommand("equiv-mixed",
                                 "Mixed-state equivalence by a single g");
  std::string eqm_a, eqm_b;
  int grid = 12, restarts = 8;
  std::optional<double> threshold;
  bool fallback = false;
  eqm->add_option("a", eqm_a, "First density matrix or state")->required();
  eqm->add_option("b", eqm_b, "Second density matrix or state")->required();
  eqm->add_option("--grid", grid, "Euler lattice points per angle")
      ->check(CLI::Range(4, 256));
  eqm->add_option("--restarts", restarts, "Random restarts")
      ->check(CLI::NonNegativeNumber);
  eqm->add_option("--threshold", threshold, "Frobenius acceptance threshold")
      ->check(CLI::PositiveNumber);
  eqm->add_flag("--two-qubit-fallback", fallback,
                "For n = 2, brute-force search over (g1, g2)");

  auto* ver = app.add_subcommand("verify", "Brute-force stabilizer oracles");
  std::string ver_path;
  bool class_check = false;
  int search_grid = 12;
  ver->add_option("state", ver_path, "State or density JSON")->required();
  ver->add_flag("--class-check", class_check,
                "Compare search results against the classification");
  ver->add_option("--search-grid", search_grid, "Euler lattice points per angle")
      ->check(CLI::Range(4, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  const Mode mode = as_csv ? Mode::Csv : as_human ? Mode::Human : Mode::Json;
  Tolerances tols;
  tols.equality = tol;

  try {
    Report r;
    if (mk->parsed()) {
      std::optional<SymmetricPureState> psi;
      if (mk_dicke->parsed()) {
        psi = dicke(dn, dk);
      } else if (mk_ghz->parsed()) {
        if (*o_t) {
          psi = ghz(gn, std::cos(kPi * gt / 4), std::sin(kPi * gt / 4));
        } else if (*o_a || *o_b) {
          if (!*o_a || !*o_b) throw DomainError("ghz needs both --a and --b");
          psi = ghz(gn, cplx(ga[0], ga[1]), cplx(gb[0], gb[1]));
        } else {
          psi = ghz(gn);
        }
      } else if (mk_points->parsed()) {
        psi = io::state_from_json(io::read_json(points_path, in), tols.cluster);
      } else {
        std::mt19937_64 rng(seed);
        psi = SymmetricPureState::random(rn, rng);
      }
      r.json = io::state_to_json(*psi);
      r.csv = [p = *psi](std::ostream& o) {
        o << "k,re,im\n";
        for (int k = 0; k <= p.n(); ++k)
          o << k << ',' << fmt(p[k].real()) << ',' << fmt(p[k].imag()) << '\n';
      };
    } else if (maj->parsed()) {
      auto psi = io::state_from_json(io::read_json(maj_path, in), tols.cluster);
      auto config = majorana_points(psi, tols.cluster);
      r.json = io::config_to_json(config);
      r.csv = [config](std::ostream& o) {
        o << "theta,phi,multiplicity,x,y,z\n";
        for (const auto& c : config.clusters()) {
          const Vec3& v = c.point.vec();
          o << fmt(c.point.theta()) << ',' << fmt(c.point.phi()) << ','
            << c.multiplicity << ',' << fmt(v.x()) << ',' << fmt(v.y()) << ','
            << fmt(v.z()) << '\n';
        }
      };
      r.human = [config](std::ostream& o) {
        o << config.n() << " Majorana points\n";
        for (const auto& c : config.clusters())
          o << "  theta " << deg(c.point.theta()) << " deg, phi "
            << deg(c.point.phi()) << " deg, multiplicity " << c.multiplicity
            << '\n';
      };
    } else if (sym->parsed()) {
      auto input = io::read_json(sym_path, in);
      auto psi = io::state_from_json(input, tols.cluster);
      auto g = symmetry_group(majorana_points(psi, tols.cluster), tols.match);
      r.json = group_to_json(g);
      r.json["state"] = io::state_to_json(psi);
      r.human = [g](std::ostream& o) {
        o << "group " << to_string(g.tag);
        if (g.m) o << " (m = " << g.m << ")";
        o << ", order " << (g.finite() ? std::to_string(g.order) : "infinite")
          << '\n';
        for (const auto& gen : g.generators)
          o << "  generator: " << deg(snap_angle(gen.angle())) << " deg about ["
            << fmt(gen.axis().x()) << ", " << fmt(gen.axis().y()) << ", "
            << fmt(gen.axis().z()) << "]\n";
      };
    } else if (cls->parsed()) {
      auto input = io::read_json(cls_path, in);
      ClassificationResult res =
          input.is_object() && input.contains("matrix")
              ? classify_density(io::density_from_json(input), tols)
              : classify_state(io::state_from_json(input, tols.cluster), tols);
      r = classify_report(res, input);
    } else if (eq->parsed()) {
      auto a = io::state_from_json(io::read_json(eq_a, in), tols.cluster);
      auto b = io::state_from_json(io::read_json(eq_b, in), tols.cluster);
      auto g = lu_equivalent_pure(a, b, tol, tols.match);
      r.json = Json{{"equivalent", g.has_value()}};
      if (g) r.json["g"] = io::matrix_to_json(g->matrix());
      r.json["state"] = io::state_to_json(a);
      r.code = g ? kOk : kFalse;
      r.human = [g](std::ostream& o) {
        o << (g ? "equivalent" : "not equivalent") << '\n';
      };
    } else if (eqm->parsed()) {
      auto a = io::density_from_json(io::read_json(eqm_a, in));
      auto b = io::density_from_json(io::read_json(eqm_b, in));
      EquivalenceSearchConfig cfg;
      cfg.grid_alpha = cfg.grid_beta = cfg.grid_gamma = grid;
      cfg.restarts = restarts;
      cfg.threshold = threshold;
      cfg.seed = seed;
      MixedEquivalence res;
      if (a.n() == 2 && b.n() == 2) {
        if (!fallback)
          throw UnsupportedError(
              "single-g mixed-state equivalence is only guaranteed for n >= 3; "
              "pass --two-qubit-fallback for a brute-force (g1, g2) search "
              "without that guarantee");
        res = two_qubit_equivalent(a, b, cfg);
      } else {
        res = lu_equivalent_mixed(a, b, cfg);
      }
      r.json = Json{{"verdict", to_string(res.verdict)},
                    {"equivalent", res.verdict == MixedVerdict::Equivalent},
                    {"distance", res.distance},
                    {"threshold", res.threshold},
                    {"reason", res.reason},
                    {"no_completeness_guarantee", res.no_completeness_guarantee}};
      if (res.g) r.json["g"] = io::matrix_to_json(res.g->matrix());
      if (res.local) r.json["local"] = io::local_to_json(*res.local);
      r.json["density"] = io::density_to_json(a);
      r.code = res.verdict == MixedVerdict::Equivalent ? kOk : kFalse;
      r.human = [res](std::ostream& o) {
        o << to_string(res.verdict) << " (distance " << fmt(res.distance)
          << ", threshold " << fmt(res.threshold) << ")\n"
          << res.reason << '\n';
        if (res.no_completeness_guarantee)
          o << "two-qubit fallback: no completeness guarantee\n";
      };
    } else if (ver->parsed()) {
      auto input = io::read_json(ver_path, in);
      const bool dense = input.is_object() && input.contains("matrix");
      StabilizerSearchConfig cfg;
      cfg.grid = search_grid;
      Json j;
      bool ok = true;
      if (!dense && class_check) {
        auto rep = cross_check(io::state_from_json(input, tols.cluster), cfg, tols);
        j["class"] = rep.classification.cls.label();
        Json gc = Json::array();
        for (const auto& w : rep.generator_checks)
          gc.push_back(Json{{"residual", w.residual}, {"accepted", w.accepted}});
        j["generator_checks"] = gc;
        Json ws = Json::array(), an = Json::array();
        for (const auto& w : rep.witnesses) ws.push_back(witness_to_json(w));
        for (const auto& w : rep.anomalies) an.push_back(witness_to_json(w));
        j["witnesses"] = ws;
        j["identical_count"] = rep.identical_count;
        j["anomalies"] = an;
        j["order_mismatch"] = rep.order_mismatch;
        ok = rep.ok();
      } else {
        DensityMatrix rho = io::density_from_json(input);
        auto ws = sample_stabilizer(rho, cfg);
        Json arr = Json::array(), an = Json::array();
        std::optional<ClassificationResult> res;
        if (class_check) res = classify_density(rho, tols);
        if (res) j["class"] = res->cls.label();
        for (const auto& w : ws) {
          arr.push_back(witness_to_json(w));
          if (res && !res->stabilizer_contains(w.U, 1e-6)) an.push_back(witness_to_json(w));
        }
        j["witnesses"] = arr;
        if (res) j["anomalies"] = an;
        ok = an.empty();
      }
      j["ok"] = ok;
      j["state"] = input;
      r.json = j;
      r.code = ok ? kOk : kFalse;
      r.human = [j](std::ostream& o) {
        if (j.contains("class")) o << "class " << j["class"].get<std::string>() << '\n';
        o << j["witnesses"].size() << " stabilizer witnesses";
        if (j.contains("anomalies")) o << ", " << j["anomalies"].size() << " anomalies";
        o << '\n' << (j["ok"].get<bool>() ? "oracles agree" : "ORACLE DISAGREEMENT")
          << '\n';
      };
    }
    emit(r, mode, out);
    return r.code;
  } catch (const AmbiguousClassification& e) {
    out << io::dump(Json{{"error", e.what()},
                         {"candidates", Json::array({e.first(), e.second()})}})
        << '\n';
    return kDomain;
  } catch (const DomainError& e) {
    out << io::dump(Json{{"error", e.what()}}) << '\n';
    return kDomain;
  } catch (const UnsupportedError& e) {
    out << io::dump(Json{{"error", e.what()}, {"unsupported", true}}) << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    out << io::dump(Json{{"error", e.what()}, {"internal", true}}) << '\n';
    return kInternal;
  }
}

}  // namespace symlu::cli
