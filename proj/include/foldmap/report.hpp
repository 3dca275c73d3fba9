#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "foldmap/automorphism.hpp"
#include "foldmap/leading_terms.hpp"
#include "foldmap/poly_json.hpp"
#include "foldmap/projective.hpp"
#include "foldmap/weyl_oracle.hpp"

namespace foldmap {

enum class Verdict { Pass, Fail, Unresolved };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Unresolved: return "unresolved";
  }
  return "?";
}

struct CaseResult {
  std::string key;  // sort key, e.g. "commute/B2/03/05"
  json inputs;
  Verdict verdict = Verdict::Pass;
  std::string witness;
  json detail;
};

struct VerificationReport {
  std::string suite;
  std::vector<CaseResult> cases;
  double duration_s = 0;

  std::size_t count(Verdict v) const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [&](const auto& c) { return c.verdict == v; }));
  }
  /// 0 all pass, 1 any fail, 2 unresolved present without fails.
  int exit_code() const {
    if (count(Verdict::Fail) > 0) return 1;
    if (count(Verdict::Unresolved) > 0) return 2;
    return 0;
  }
};

inline json to_json(const VerificationReport& r, bool timing = false) {
  json cases = json::array();
  for (const auto& c : r.cases) {
    json j{{"key", c.key}, {"inputs", c.inputs}, {"verdict", verdict_name(c.verdict)}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    if (!c.detail.is_null()) j["detail"] = c.detail;
    cases.push_back(std::move(j));
  }
  json out{{"suite", r.suite},
           {"cases", std::move(cases)},
           {"counts",
            {{"pass", r.count(Verdict::Pass)}, {"fail", r.count(Verdict::Fail)}, {"unresolved", r.count(Verdict::Unresolved)}}}};
  if (timing) out["duration_s"] = r.duration_s;
  return out;
}

inline std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  for (const auto& c : r.cases) {
    os << verdict_name(c.verdict) << "  " << c.key;
    if (!c.witness.empty()) os << "  (" << c.witness << ")";
    os << "\n";
  }
  os << r.suite << ": " << r.count(Verdict::Pass) << " pass, " << r.count(Verdict::Fail) << " fail, "
     << r.count(Verdict::Unresolved) << " unresolved\n";
  return os.str();
}

struct SuiteConfig {
  std::vector<Family> families{kAllFamilies.begin(), kAllFamilies.end()};
  unsigned min_n = 0;  // 0: suite default
  unsigned max_n = 0;  // 0: suite default
  int trials = 100;
  double tol = 1e-7;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool aut_solve = true;  // false: check claimed groups only
};

namespace detail {

inline std::string pad(unsigned n) { return (n < 10 ? "0" : "") + std::to_string(n); }

inline unsigned leading_default_max(Family f) { return f == Family::G2 ? 30 : 40; }

using CaseFn = std::function<CaseResult()>;

// Runs the cases on `jobs` threads; output order is by key regardless.
inline std::vector<CaseResult> run_cases(const std::vector<CaseFn>& fns, unsigned jobs) {
  std::vector<CaseResult> out(fns.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < fns.size(); k = next++) {
      try {
        out[k] = fns[k]();
      } catch (const std::exception& e) {
        out[k].verdict = Verdict::Fail;
        out[k].witness = std::string("exception: ") + e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1U, jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  return out;
}

inline json point_list(const IndeterminacyReport& ir) {
  json pts = json::array();
  for (const auto& p : ir.points) pts.push_back(point_string(p));
  return pts;
}

inline std::vector<CaseFn> commute_cases(const SuiteConfig& cfg) {
  std::vector<CaseFn> fns;
  const unsigned hi = cfg.max_n ? cfg.max_n : 6;
  for (Family f : cfg.families) {
    for (unsigned m = cfg.min_n; m <= hi; ++m) {
      for (unsigned n = m; n <= hi; ++n) {
        fns.push_back([f, m, n] {
          CommuteReport r = verify_commute(f, m, n);
          return CaseResult{"commute/" + family_name(f) + "/" + pad(m) + "/" + pad(n),
                            {{"family", family_name(f)}, {"m", m}, {"n", n}},
                            r.pass() ? Verdict::Pass : Verdict::Fail, r.witness, {}};
        });
      }
    }
  }
  return fns;
}

inline std::vector<CaseFn> leading_cases(const SuiteConfig& cfg) {
  std::vector<CaseFn> fns;
  for (Family f : cfg.families) {
    const unsigned lo = std::max(cfg.min_n, std::min(leading_min_n(f, Coordinate::First), leading_min_n(f, Coordinate::Second)));
    const unsigned hi = cfg.max_n ? cfg.max_n : leading_default_max(f);
    for (unsigned n = lo; n <= hi; ++n) {
      fns.push_back([f, n] {
        LeadingReport r = verify_leading(f, n);
        CaseResult c{"leading/" + family_name(f) + "/" + pad(n), {{"family", family_name(f)}, {"n", n}},
                     r.pass() ? Verdict::Pass : Verdict::Fail, "", json::array()};
        for (const auto& ch : r.checks) {
          c.detail.push_back({{"coordinate", coordinate_name(ch.coordinate)},
                              {"pass", ch.pass},
                              {"slack", ch.slack},
                              {"residual_degree", ch.residual_degree}});
          if (!ch.pass && c.witness.empty()) {
            c.witness = std::string(coordinate_name(ch.coordinate)) + " coordinate, term " + ch.offending_term;
          }
        }
        return c;
      });
    }
  }
  return fns;
}

inline json solution_json(const SolutionSet& s) {
  json el = json::array();
  for (const auto& e : s.elements) el.push_back(e.to_string());
  return {{"order", s.order()}, {"label", s.label}, {"elements", el}};
}

inline std::vector<CaseFn> aut_cases(const SuiteConfig& cfg) {
  std::vector<CaseFn> fns;
  const unsigned lo = std::max(2U, cfg.min_n);
  const unsigned hi = cfg.max_n ? cfg.max_n : 10;
  const bool solve = cfg.aut_solve;
  for (Family f : cfg.families) {
    for (unsigned n = lo; n <= hi; ++n) {
      fns.push_back([f, n, solve] {
        SolutionSet claimed = claimed_group(f, n);
        CaseResult c{"aut/" + family_name(f) + "/" + pad(n),
                     {{"family", family_name(f)}, {"n", n}, {"mode", solve ? "solve" : "claimed"}},
                     Verdict::Pass, "", {}};
        const PolyMap2 fn = fold(f, n);
        for (const auto& e : claimed.elements) {
          if (!is_member(e, fn)) {
            c.verdict = Verdict::Fail;
            c.witness = "claimed element " + e.to_string() + " does not commute with F_n";
            return c;
          }
        }
        if (claimed.label != expected_group_label(f, n)) {
          c.verdict = Verdict::Fail;
          c.witness = "claimed group has label " + claimed.label + ", expected " + expected_group_label(f, n);
          return c;
        }
        c.detail = solution_json(claimed);
        if (!solve) return c;
        SolveResult r = solve_aut(f, n);
        c.detail = solution_json(r.solutions);
        c.detail["branches"] = r.branches;
        if (!r.complete()) {
          c.verdict = Verdict::Unresolved;
          c.witness = r.unresolved.front();
          c.detail["unresolved"] = r.unresolved;
        } else if (!(r.solutions.elements == claimed.elements)) {
          c.verdict = Verdict::Fail;
          c.witness = "solver found " + std::to_string(r.solutions.order()) + " maps, claimed group has " +
                      std::to_string(claimed.order());
        }
        return c;
      });
    }
  }
  return fns;
}

inline json proj_json(const HomogMap3& h) {
  IndeterminacyReport ir = indeterminacy(h);
  return {{"degree", h.degree()},
          {"morphism", ir.empty()},
          {"indeterminacy", point_list(ir)},
          {"unresolved_factor_degree", ir.unresolved_degree()}};
}

inline std::vector<CaseFn> proj_cases(const SuiteConfig& cfg) {
  std::vector<CaseFn> fns;
  const unsigned lo = std::max(2U, cfg.min_n);
  const unsigned hi = cfg.max_n ? cfg.max_n : 12;
  for (Family f : cfg.families) {
    for (unsigned n = lo; n <= hi; ++n) {
      fns.push_back([f, n] {
        HomogMap3 h = homogenize_fold(f, n);
        IndeterminacyReport ir = indeterminacy(h);
        CaseResult c{"proj/" + family_name(f) + "/" + pad(n), {{"family", family_name(f)}, {"n", n}}, Verdict::Pass,
                     "", proj_json(h)};
        std::vector<std::string> want;
        if (f == Family::G2) {
          want.push_back("[0:1:0]");
          if (n % 2 == 1) want.push_back("[1:0:0]");
        }
        std::vector<std::string> got;
        for (const auto& p : ir.points) {
          got.push_back(point_string(p));
          if (!vanishes_at(h, p)) {
            c.verdict = Verdict::Fail;
            c.witness = "reported point " + got.back() + " is not a common zero";
            return c;
          }
        }
        if (ir.unresolved_factor) {
          c.verdict = Verdict::Unresolved;
          c.witness = "unresolved factor " + ir.unresolved_factor->to_string();
        } else if (h.degree() != expected_degree(f, n)) {
          c.verdict = Verdict::Fail;
          c.witness = "degree " + std::to_string(h.degree()) + ", expected " + std::to_string(expected_degree(f, n));
        } else if (got != want) {
          c.verdict = Verdict::Fail;
          c.witness = "indeterminacy " + c.detail["indeterminacy"].dump();
        }
        return c;
      });
    }
  }
  return fns;
}

inline std::vector<CaseFn> oracle_cases(const SuiteConfig& cfg) {
  std::vector<CaseFn> fns;
  const unsigned lo = std::max(1U, cfg.min_n);
  const unsigned hi = cfg.max_n ? cfg.max_n : 6;
  for (Family f : cfg.families) {
    for (unsigned n = lo; n <= hi; ++n) {
      fns.push_back([f, n, cfg] {
        ScalingReport s = check_scaling(f, n, cfg.trials, cfg.tol, cfg.seed);
        CaseResult c{"oracle/" + family_name(f) + "/" + pad(n),
                     {{"family", family_name(f)}, {"n", n}, {"trials", cfg.trials}, {"tol", cfg.tol}, {"seed", cfg.seed}},
                     s.pass() ? Verdict::Pass : Verdict::Fail, "",
                     {{"max_residual", s.max_residual}, {"pass", s.pass()}}};
        if (!s.pass()) {
          std::ostringstream os;
          os << "residual " << s.max_residual << " at t = (" << s.worst_point[0] << ", " << s.worst_point[1] << ")";
          c.witness = os.str();
        }
        return c;
      });
    }
  }
  if (std::find(cfg.families.begin(), cfg.families.end(), Family::B2) != cfg.families.end()) {
    for (unsigned n = 0; n <= 15; ++n) {
      fns.push_back([n] {
        FunctionalReport r = verify_B_functional(n);
        return CaseResult{"oracle/B2-chebyshev/" + pad(n), {{"family", "B2"}, {"n", n}},
                          r.pass ? Verdict::Pass : Verdict::Fail, r.witness, {}};
      });
    }
  }
  return fns;
}

}  // namespace detail

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"commute", "leading", "aut", "proj", "oracle", "all"};
  return names;
}

/// Runs one named suite; throws std::invalid_argument for an unknown name.
inline VerificationReport run_suite(const std::string& name, const SuiteConfig& cfg = {}) {
  std::vector<detail::CaseFn> fns;
  auto add = [&](std::vector<detail::CaseFn> more) { fns.insert(fns.end(), more.begin(), more.end()); };
  const bool all = name == "all";
  if (name == "commute" || all) add(detail::commute_cases(cfg));
  if (name == "leading" || all) add(detail::leading_cases(cfg));
  if (name == "aut" || all) add(detail::aut_cases(cfg));
  if (name == "proj" || all) add(detail::proj_cases(cfg));
  if (name == "oracle" || all) add(detail::oracle_cases(cfg));
  if (fns.empty() && std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport r{name, detail::run_cases(fns, cfg.jobs), 0};
  r.duration_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace foldmap
