// Command-line driver: generate folding maps and run the verification suites.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "foldmap.hpp"

using namespace foldmap;

namespace {

constexpr int kExitUsage = 64;

struct Globals {
  std::string format = "json";
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

std::vector<Family> families_from(const std::string& s) {
  if (s == "all") return {kAllFamilies.begin(), kAllFamilies.end()};
  return {parse_family(s)};
}

int emit(const VerificationReport& r, const Globals& g) {
  if (g.format == "text") {
    std::cout << to_text(r);
  } else {
    std::cout << to_json(r).dump(2) << "\n";
  }
  return r.exit_code();
}

std::string poly_text(const Poly& p, const std::string& format) {
  return format == "latex" ? p.to_latex() : p.to_string();
}

int cmd_gen(const std::string& family, unsigned n, const std::string& half, const Globals& g) {
  PolyMap2 m;
  if (!half.empty()) {
    if (half == "b_sqrt2") {
      m = half_fold(HalfFold::B_sqrt2);
    } else if (half == "g_sqrt3") {
      m = half_fold(HalfFold::G_sqrt3);
    } else {
      throw std::invalid_argument("unknown half fold '" + half + "' (expected b_sqrt2 or g_sqrt3)");
    }
  } else {
    m = fold(parse_family(family), n);
  }
  if (g.format == "json") {
    std::cout << to_json(m).dump(2) << "\n";
  } else {
    std::cout << m.label << " (" << model_name(m.model) << ")\n"
              << "  " << poly_text(m.first, g.format) << "\n"
              << "  " << poly_text(m.second, g.format) << "\n";
  }
  return 0;
}

int cmd_aut(const std::string& family, unsigned n, bool claimed_only, const Globals& g) {
  if (n < 2) throw std::invalid_argument("aut needs --n >= 2");
  SuiteConfig cfg;
  cfg.families = {parse_family(family)};
  cfg.min_n = cfg.max_n = n;
  cfg.aut_solve = !claimed_only;
  cfg.jobs = g.jobs;
  VerificationReport r = run_suite("aut", cfg);
  if (g.format == "json") {
    const CaseResult& c = r.cases.front();
    json out = c.detail;
    out["family"] = family_name(cfg.families.front());
    out["n"] = n;
    out["mode"] = claimed_only ? "claimed" : "solve";
    out["verdict"] = verdict_name(c.verdict);
    if (!c.witness.empty()) out["witness"] = c.witness;
    std::cout << out.dump(2) << "\n";
    return r.exit_code();
  }
  return emit(r, g);
}

int cmd_proj(const std::string& family, unsigned n, const std::string& half, const Globals& g) {
  HomogMap3 h;
  if (half == "b_sqrt2") {
    h = homogenize_map(half_fold(HalfFold::B_sqrt2));
  } else if (half == "g_sqrt3") {
    h = homogenize_map(half_fold(HalfFold::G_sqrt3));
  } else if (half.empty()) {
    if (n < 1) throw std::invalid_argument("proj needs --n >= 1");
    h = homogenize_fold(parse_family(family), n);
  } else {
    throw std::invalid_argument("unknown half fold '" + half + "'");
  }
  json out = detail::proj_json(h);
  if (g.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "degree " << out["degree"] << ", morphism " << out["morphism"] << ", indeterminacy "
              << out["indeterminacy"].dump() << "\n";
    for (const auto& c : h.comp) std::cout << "  " << poly_text(c, g.format) << "\n";
  }
  return out["unresolved_factor_degree"].get<int>() > 0 ? 2 : 0;
}

int cmd_oracle(const std::string& family, unsigned n, int trials, double tol, const Globals& g) {
  ScalingReport s = check_scaling(parse_family(family), n, trials, tol, g.seed);
  json out{{"family", family_name(s.family)}, {"n", n}, {"trials", trials}, {"tol", tol},
           {"seed", g.seed}, {"max_residual", s.max_residual}, {"pass", s.pass()}};
  if (g.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << family_name(s.family) << " n=" << n << " max_residual=" << s.max_residual
              << (s.pass() ? " pass" : " fail") << "\n";
  }
  return s.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Folding maps of rank-two root systems: generation and exact verification"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text", "latex"}));
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1U, 256U));

  std::string family = "b2";     // commands on a single map
  std::string families = "all";  // suites
  unsigned n = 2;
  std::string half;
  auto family_opt = [&](CLI::App* sub, bool allow_all) {
    std::vector<std::string> names{"a2", "b2", "g2", "A2", "B2", "G2"};
    if (allow_all) {
      names.push_back("all");
      sub->add_option("--family", families, "Family: a2, b2, g2 or all")->check(CLI::IsMember(names));
    } else {
      sub->add_option("--family", family, "Family: a2, b2 or g2")->check(CLI::IsMember(names));
    }
  };

  auto* gen = app.add_subcommand("gen", "Print the n-th folding map");
  family_opt(gen, false);
  gen->add_option("--n", n, "Index n >= 0");
  gen->add_option("--half", half, "Print a half fold instead: b_sqrt2 or g_sqrt3");

  auto* verify = app.add_subcommand("verify", "Run commutation or leading-term checks");
  verify->require_subcommand(1);
  unsigned max_n = 0;
  auto* v_commute = verify->add_subcommand("commute", "F_m o F_n = F_mn for 0 <= m, n <= max-n");
  auto* v_leading = verify->add_subcommand("leading", "Leading-term expansions up to max-n");
  for (auto* sub : {v_commute, v_leading}) {
    family_opt(sub, true);
    sub->add_option("--max-n", max_n, "Largest index checked");
  }

  auto* aut = app.add_subcommand("aut", "Affine automorphism group of F_n");
  family_opt(aut, false);
  aut->add_option("--n", n, "Index n >= 2");
  auto* solve_flag = aut->add_flag("--solve", "Solve the commutation equations (default)");
  auto* claimed_flag = aut->add_flag("--claimed", "Only check the stated group");
  solve_flag->excludes(claimed_flag);

  auto* proj = app.add_subcommand("proj", "Projective degree and indeterminacy of F_n");
  family_opt(proj, false);
  proj->add_option("--n", n, "Index n >= 1");
  proj->add_option("--half", half, "Use a half fold instead: b_sqrt2 or g_sqrt3");

  auto* oracle = app.add_subcommand("oracle", "Numerical check against Weyl orbit sums");
  int trials = 100;
  double tol = 1e-7;
  family_opt(oracle, false);
  oracle->add_option("--n", n, "Index n >= 0");
  oracle->add_option("--trials", trials, "Random torus points")->check(CLI::PositiveNumber);
  oracle->add_option("--tol", tol, "Pass threshold on the max residual")->check(CLI::PositiveNumber);
  oracle->add_option("--seed", g.seed, "Seed for the torus points");

  auto* report = app.add_subcommand("report", "Run a verification suite");
  std::string suite = "all";
  report->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(suite_names()));
  family_opt(report, true);
  bool timing = false;
  report->add_flag("--timing", timing, "Include wall-clock duration in JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(family, n, half, g);
    if (*verify) {
      SuiteConfig cfg;
      cfg.families = families_from(families);
      cfg.max_n = max_n;
      cfg.jobs = g.jobs;
      return emit(run_suite(*v_commute ? "commute" : "leading", cfg), g);
    }
    if (*aut) return cmd_aut(family, n, claimed_flag->count() > 0, g);
    if (*proj) return cmd_proj(family, n, half, g);
    if (*oracle) return cmd_oracle(family, n, trials, tol, g);
    if (*report) {
      SuiteConfig cfg;
      cfg.families = families_from(families);
      cfg.seed = g.seed;
      cfg.jobs = g.jobs;
      VerificationReport r = run_suite(suite, cfg);
      if (g.format == "text") {
        std::cout << to_text(r);
      } else {
        std::cout << to_json(r, timing).dump(2) << "\n";
      }
      return r.exit_code();
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
