#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "symcycle/symcycle.hpp"

namespace {

using namespace symcycle;

struct CycleChoice {
  SymmetricCycle cycle;
  std::string descriptor;
};

/// Cycle selection shared by the subcommands: an explicit file wins, the
/// distinguished cycle R is the default otherwise.
CycleChoice resolve_cycle(const std::string& path, int t) {
  if (!path.empty()) {
    SymmetricCycle cycle = load_cycle_file(path);
    if (t != 0 && cycle.t() != t)
      throw DomainError("--t disagrees with the cycle file (t = " +
                        std::to_string(cycle.t()) + ")");
    return {std::move(cycle), "file:" + path};
  }
  if (t == 0) throw DomainError("need --t N or --cycle FILE");
  return {distinguished_cycle(t), "distinguished"};
}

template <class F>
std::int64_t time_ns(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() -
                                                              start)
      .count();
}

template <class T>
void do_not_optimize(const T& value) {
  asm volatile("" : : "r,m"(value) : "memory");
}

std::string render_intervals(const IntervalSet& a) {
  std::string out;
  for (std::size_t i = 0; i < a.intervals().size(); ++i) {
    if (i) out += " u ";
    out += "[" + std::to_string(a.intervals()[i].lo) + "," +
           std::to_string(a.intervals()[i].hi) + "]";
  }
  return out;
}

int run_matrices(const std::string& cycle_path, int t, bool json) {
  const CycleChoice choice = resolve_cycle(cycle_path, t);
  const int tt = choice.cycle.t();
  const IntMatrix m = matrix_M(choice.cycle);
  const IntMatrix w = matrix_W(choice.cycle);
  const IntMatrix n = matrix_N(tt);
  const bool even = (tt % 2 == 0);
  const std::string refusal = "P(" + std::to_string(tt) + ") refused: t odd, N(t) is singular";

  if (json) {
    nlohmann::json j;
    j["t"] = tt;
    j["cycle"] = choice.descriptor;
    j["M"] = matrix_to_json(m);
    j["W"] = matrix_to_json(w);
    j["N"] = matrix_to_json(n);
    j["P"] = even ? matrix_to_json(matrix_P(tt)) : nlohmann::json(nullptr);
    if (!even) j["notice"] = refusal;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "cycle: " << choice.descriptor << ", t = " << tt << "\n\n";
  std::cout << "M(D) =\n" << render_matrix(m) << "\n";
  std::cout << "W(D) =\n" << render_matrix(w) << "\n";
  std::cout << "N(" << tt << ") =\n" << render_matrix(n) << "\n";
  if (even)
    std::cout << "P(" << tt << ") =\n" << render_matrix(matrix_P(tt));
  else
    std::cout << refusal << "\n";
  return 0;
}

int run_decompose(const std::string& cycle_path, int t, const std::string& target_text,
                  bool subtope_kind, bool check, bool json) {
  const SignVector target = SignVector::parse(target_text);
  if (t != 0 && target.t() != t)
    throw DomainError("--t disagrees with the target length");
  const CycleChoice choice = resolve_cycle(cycle_path, t != 0 ? t : target.t());
  if (target.t() != choice.cycle.t())
    throw DomainError("target length disagrees with the cycle");

  const SubtopeSequence seq = subtope_sequence(choice.cycle);
  nlohmann::json j;
  std::ostringstream text;

  Decomposition dec;
  if (subtope_kind) {
    if (target.zero_count() != 1)
      throw DomainError("--subtope target must have exactly one zero");
    const Subtope s{target};
    const auto [plus, minus] = subtope_to_tope_pair(s);
    const TernaryCoords x_plus = tope_coords(plus, choice.cycle);
    const TernaryCoords x_minus = tope_coords(minus, choice.cycle);
    const CoeffVector xbar = xbar_of_subtope(s, choice.cycle);
    dec = subtope_decomposition(s, choice.cycle);

    text << "target: " << to_string(s) << " (subtope)\n";
    text << "cycle: " << choice.descriptor << ", t = " << choice.cycle.t() << "\n";
    text << "T'  = " << to_string(plus) << "   x(T')  = " << coords_string(x_plus) << "\n";
    text << "T'' = " << to_string(minus) << "   x(T'') = " << coords_string(x_minus) << "\n";
    text << "xbar: " << coeff_string(xbar) << "\n";
    text << "decomposition: " << render_decomposition(dec) << "\n";

    j = decomposition_to_json(s, dec, choice.cycle);
    j["kind"] = "subtope";
    j["tope_pair"] = {to_string(plus), to_string(minus)};
    j["x_pair"] = {std::vector<int>(x_plus.x.begin(), x_plus.x.end()),
                   std::vector<int>(x_minus.x.begin(), x_minus.x.end())};
    j["xbar"] = xbar;
  } else {
    if (target.zero_count() != 0)
      throw DomainError("tope target must have no zeros (use --subtope for one zero)");
    const Tope tope{target};
    const TernaryCoords x = tope_coords(tope, choice.cycle);
    const CoeffVector xbar = xbar_of_tope(tope, choice.cycle);
    const VertexDecomposition vdec = vertex_decomposition(tope, choice.cycle);
    dec = tope_decomposition(tope, choice.cycle);

    text << "target: " << to_string(tope) << " (tope)\n";
    text << "cycle: " << choice.descriptor << ", t = " << choice.cycle.t() << "\n";
    text << "x:    " << coords_string(x) << "\n";
    text << "xbar: " << coeff_string(xbar) << "\n";
    text << "vertices: " << render_vertex_decomposition(vdec) << "\n";
    text << "decomposition: " << render_decomposition(dec) << "\n";

    j = decomposition_to_json(tope, dec, choice.cycle);
    j["kind"] = "tope";
    j["x"] = std::vector<int>(x.x.begin(), x.x.end());
    j["xbar"] = xbar;
    j["vertices"] = vdec.indices;
  }

  bool check_ok = true;
  if (check) {
    const auto recon = reconstruct(dec, seq);
    check_ok = (recon == std::vector<std::int64_t>(target.entries().begin(),
                                                   target.entries().end()));
    text << "check: " << (check_ok ? "reconstruction exact" : "RECONSTRUCTION MISMATCH") << "\n";
    j["check"] = check_ok ? "pass" : "fail";
  }

  std::cout << (json ? j.dump(2) + "\n" : text.str());
  return check_ok ? 0 : 1;
}

int run_closedform(int t, const std::string& neg, bool check, bool json) {
  if (t < 2) throw DomainError("need --t >= 2");
  if (t % 2 != 0)
    throw SingularError("closed form needs even t (N(t) is singular for odd t)");
  const IntervalSet a = parse_interval_spec(neg, t);
  const CoeffVector xbar = closed_form_xbar(a);
  const char* label = to_label(closed_form_case(a));

  bool check_ok = true;
  if (check) {
    const CoeffVector solved =
        xbar_of_tope(tope_from_negative_part(a.elements(), t), distinguished_cycle(t));
    check_ok = (xbar == solved);
  }

  if (json) {
    nlohmann::json j;
    j["t"] = t;
    j["neg"] = neg;
    auto& ivs = j["intervals"] = nlohmann::json::array();
    for (const Interval& iv : a.intervals()) ivs.push_back({iv.lo, iv.hi});
    j["case"] = label;
    j["rho"] = a.rho();
    j["xbar"] = xbar;
    if (check) j["check"] = check_ok ? "pass" : "fail";
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "A = " << render_intervals(a) << "   (case " << label << ", rho = " << a.rho()
              << ")\n";
    std::cout << "xbar: " << coeff_string(xbar) << "\n";
    if (check)
      std::cout << "check: " << (check_ok ? "matches the exact solve" : "SOLVE MISMATCH")
                << "\n";
  }
  return check_ok ? 0 : 1;
}

int run_verify(const std::string& cycle_path, int t, const std::string& scope_name,
               std::uint64_t seed, int random_cycles, int enum_cap, bool json) {
  const Scope scopes = scope_from_name(scope_name);
  std::vector<VerificationReport> reports;
  const CycleChoice choice = resolve_cycle(cycle_path, t);
  reports.push_back(verify_suite(choice.cycle, choice.descriptor, scopes, enum_cap));
  for (int i = 0; i < random_cycles; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    reports.push_back(verify_suite(random_symmetric_cycle(choice.cycle.t(), s),
                                   "random(seed=" + std::to_string(s) + ")", scopes, enum_cap));
  }

  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass();

  if (json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) j.push_back(report_to_json(r));
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) std::cout << render_report(r);
  }
  return pass ? 0 : 1;
}

int run_bench(const std::string& t_list, int reps, int solve_cap, std::uint64_t seed,
              bool csv) {
  std::vector<int> sizes;
  {
    std::stringstream ss{t_list};
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw ParseError("empty entry in --t list");
      sizes.push_back(std::stoi(item));
    }
    if (sizes.empty()) throw ParseError("--t list is empty");
  }
  if (reps < 1) throw DomainError("--reps must be positive");

  if (csv) std::cout << "t,rho,closed_ns,solve_ns,speedup\n";

  for (int t : sizes) {
    if (t < 2 || t % 2 != 0)
      throw SingularError("bench needs even t >= 2 (got " + std::to_string(t) + ")");

    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t)));
    std::uniform_int_distribution<int> coin(0, 1);

    std::vector<IntervalSet> sets;
    double rho_sum = 0;
    while (static_cast<int>(sets.size()) < reps) {
      std::vector<int> a;
      for (int e = 1; e <= t; ++e)
        if (coin(rng)) a.push_back(e);
      if (a.empty()) continue;
      sets.push_back(canonical_intervals(a, t));
      rho_sum += sets.back().rho();
    }
    const double rho_mean = rho_sum / reps;

    std::int64_t closed_min = -1, closed_sum = 0;
    for (const IntervalSet& a : sets) {
      const std::int64_t ns = time_ns([&] { do_not_optimize(closed_form_xbar(a)); });
      closed_sum += ns;
      closed_min = (closed_min < 0) ? ns : std::min(closed_min, ns);
    }

    const bool solve_runs = (t <= solve_cap);
    std::int64_t solve_min = -1, solve_sum = 0;
    if (solve_runs) {
      const IntMatrix w = matrix_W(distinguished_cycle(t));  // not timed
      for (const IntervalSet& a : sets) {
        const Tope target = tope_from_negative_part(a.elements(), t);
        const std::vector<std::int64_t> rhs(target.entries().begin(), target.entries().end());
        const std::int64_t ns = time_ns([&] { do_not_optimize(exact::solve_left(w, rhs)); });
        solve_sum += ns;
        solve_min = (solve_min < 0) ? ns : std::min(solve_min, ns);
      }
    }

    char rho_buf[32], speed_buf[32];
    std::snprintf(rho_buf, sizeof rho_buf, "%.1f", rho_mean);
    if (solve_runs)
      std::snprintf(speed_buf, sizeof speed_buf, "%.1f",
                    static_cast<double>(solve_min) / static_cast<double>(std::max<std::int64_t>(closed_min, 1)));

    if (csv) {
      std::cout << t << "," << rho_buf << "," << closed_min << ","
                << (solve_runs ? std::to_string(solve_min) : "NA") << ","
                << (solve_runs ? speed_buf : "NA") << "\n";
    } else {
      std::cout << "t=" << t << "  rho=" << rho_buf << "  closed_ns min=" << closed_min
                << " mean=" << (closed_sum / reps);
      if (solve_runs)
        std::cout << "  solve_ns min=" << solve_min << " mean=" << (solve_sum / reps)
                  << "  speedup=" << speed_buf << "\n";
      else
        std::cout << "  solve: skipped (t > solve cap " << solve_cap << ")\n";
    }
    if (!solve_runs && csv)
      std::cerr << "note: solve skipped at t=" << t << " (above --solve-cap " << solve_cap
                << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symmetric-cycle decompositions of topes and subtopes in H(t,2)"};
  app.require_subcommand(1);

  auto* matrices = app.add_subcommand("matrices", "print M(D), W(D), N(t) and P(t)");
  int mat_t = 0;
  std::string mat_cycle;
  bool mat_dist = false, mat_json = false;
  matrices->add_option("--t", mat_t, "ground-set size");
  auto* mat_cycle_opt = matrices->add_option("--cycle", mat_cycle, "cycle file (text or JSON)");
  matrices->add_flag("--distinguished", mat_dist, "use the distinguished cycle (default)")
      ->excludes(mat_cycle_opt);
  matrices->add_flag("--json", mat_json, "machine-readable output");

  auto* decompose = app.add_subcommand("decompose", "decompose a tope or subtope over the cycle subtopes");
  int dec_t = 0;
  std::string dec_cycle, dec_target_opt, dec_target_pos;
  bool dec_subtope = false, dec_check = false, dec_json = false, dec_dist = false;
  decompose->add_option("--t", dec_t, "ground-set size");
  auto* dec_cycle_opt = decompose->add_option("--cycle", dec_cycle, "cycle file (text or JSON)");
  decompose->add_flag("--distinguished", dec_dist, "use the distinguished cycle (default)")
      ->excludes(dec_cycle_opt);
  decompose->add_flag("--subtope", dec_subtope, "target is a subtope (exactly one zero)");
  decompose->add_flag("--check", dec_check, "verify the reconstruction in-process");
  decompose->add_flag("--json", dec_json, "machine-readable output");
  decompose->add_option("--target", dec_target_opt,
                        "sign vector over '+','-','0' (use --target=... or a positional after --)");
  decompose->add_option("TARGET", dec_target_pos, "sign vector target");

  auto* closedform = app.add_subcommand("closedform",
                                        "closed-form coefficients for a negated subset over the distinguished cycle");
  int cf_t = 0;
  std::string cf_neg;
  bool cf_check = false, cf_json = false;
  closedform->add_option("--t", cf_t, "ground-set size (even)")->required();
  closedform->add_option("--neg", cf_neg, "negative part, e.g. \"2-3,5\" or \"1-t\"")->required();
  closedform->add_flag("--check", cf_check, "cross-check against the exact solve path");
  closedform->add_flag("--json", cf_json, "machine-readable output");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  int ver_t = 0, ver_random = 0, ver_cap = default_enum_cap();
  std::string ver_cycle, ver_scope = "all";
  std::uint64_t ver_seed = 1;
  bool ver_json = false, ver_dist = false;
  verify->add_option("--t", ver_t, "ground-set size");
  auto* ver_cycle_opt = verify->add_option("--cycle", ver_cycle, "cycle file (text or JSON)");
  verify->add_flag("--distinguished", ver_dist, "use the distinguished cycle (default)")
      ->excludes(ver_cycle_opt);
  verify->add_option("--scope", ver_scope, "all|rank|matrices|topes|subtopes|closedform");
  verify->add_option("--seed", ver_seed, "seed for --random cycles");
  verify->add_option("--random", ver_random, "also verify this many random cycles");
  verify->add_option("--enum-cap", ver_cap,
                     "brute-force enumeration cap (env SYMCYCLE_ENUM_CAP)");
  verify->add_flag("--json", ver_json, "machine-readable output");

  auto* bench = app.add_subcommand("bench", "closed-form kernel vs dense exact solve");
  std::string bench_t;
  int bench_reps = 5, bench_cap = 256;
  std::uint64_t bench_seed = 1;
  bool bench_csv = false;
  bench->add_option("--t", bench_t, "comma-separated even sizes, e.g. 64,256,1024")->required();
  bench->add_option("--reps", bench_reps, "repetitions per size");
  bench->add_option("--solve-cap", bench_cap, "largest t for the dense solve column");
  bench->add_option("--seed", bench_seed, "seed for random negative parts");
  bench->add_flag("--csv", bench_csv, "CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (matrices->parsed()) return run_matrices(mat_cycle, mat_t, mat_json);
    if (decompose->parsed()) {
      if (!dec_target_opt.empty() && !dec_target_pos.empty())
        throw DomainError("give the target once (option or positional)");
      const std::string target = !dec_target_opt.empty() ? dec_target_opt : dec_target_pos;
      if (target.empty()) throw DomainError("missing target sign vector");
      return run_decompose(dec_cycle, dec_t, target, dec_subtope, dec_check, dec_json);
    }
    if (closedform->parsed()) return run_closedform(cf_t, cf_neg, cf_check, cf_json);
    if (verify->parsed())
      return run_verify(ver_cycle, ver_t, ver_scope, ver_seed, ver_random, ver_cap, ver_json);
    if (bench->parsed()) return run_bench(bench_t, bench_reps, bench_cap, bench_seed, bench_csv);
  } catch (const SingularError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const OracleContradictionError& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
