#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <future>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ngon/ngon.hpp"

namespace ngon::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

/// Parsed command line, shared by all subcommands.
struct CliConfig {
  std::string command;
  int n = 0;
  std::string zeta_list;               // explicit "p/q,p/q,…"
  std::optional<std::uint64_t> seed;
  int trials = 1;
  std::string side = "lhs";
  std::string format;
  std::string out_path;
  int min_n = 5;
  int max_n = 12;
  std::string depth = "full";
  int jobs = 1;
  bool parallel = false;
};

/// The assignment used for trial k (0-based): explicit list, seed + k, or consecutive then seed k.
inline ZetaAssignment zeta_for_trial(const CliConfig& cfg, int n, int k) {
  if (!cfg.zeta_list.empty()) {
    std::vector<Rat> values;
    std::stringstream ss(cfg.zeta_list);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(Rat::parse(item));
    if (static_cast<int>(values.size()) != n) {
      throw InvalidInput("--zeta has " + std::to_string(values.size()) + " values, expected n=" + std::to_string(n));
    }
    return ZetaAssignment::from_values(std::move(values));
  }
  if (cfg.seed) return ZetaAssignment::seeded_random(n, *cfg.seed + static_cast<std::uint64_t>(k));
  if (k == 0) return ZetaAssignment::consecutive(n);
  return ZetaAssignment::seeded_random(n, static_cast<std::uint64_t>(k));
}

namespace detail {

inline void validate(const CliConfig& cfg) {
  if (cfg.trials < 1) throw InvalidInput("--trials must be >= 1");
  if (!cfg.zeta_list.empty() && cfg.seed) throw InvalidInput("--zeta and --seed are mutually exclusive");
  if (!cfg.zeta_list.empty() && cfg.trials != 1) throw InvalidInput("an explicit --zeta allows a single trial");
}

// Runs `body` against the configured sink (stdout or --out).
template <class Body>
int with_output(const CliConfig& cfg, std::ostream& out, Body&& body) {
  if (cfg.out_path.empty()) return body(out);
  std::ostringstream buffer;
  int code = body(buffer);
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw InvalidInput("cannot write to '" + cfg.out_path + "'");
  file << buffer.str();
  if (!file.flush()) throw InvalidInput("cannot write to '" + cfg.out_path + "'");
  return code;
}

inline std::string describe_mismatch(const Mismatch& m) {
  return "first difference at row " + std::to_string(m.row + 1) + " (" + m.row_simplex + "), column " +
         std::to_string(m.col + 1) + " (" + m.col_simplex + "): lhs=" + m.lhs.to_string() +
         " rhs=" + m.rhs.to_string();
}

}  // namespace detail

inline int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  require_polygon(cfg.n);
  std::vector<VerificationReport> reports;
  for (int k = 0; k < cfg.trials; ++k) {
    VerifyOptions opts;
    opts.parallel_sides = cfg.parallel;
    reports.push_back(verify_equation(cfg.n, zeta_for_trial(cfg, cfg.n, k), opts));
  }
  int verified = 0;
  for (const auto& r : reports) verified += r.equal ? 1 : 0;
  const bool ok = verified == cfg.trials;

  for (const auto& r : reports)
    if (r.first_mismatch) err << "n=" << r.n << " " << r.zeta_description << ": " << detail::describe_mismatch(*r.first_mismatch) << "\n";

  return detail::with_output(cfg, out, [&](std::ostream& os) {
    if (cfg.format == "json") {
      if (reports.size() == 1) {
        os << to_json(reports.front()).dump(2) << "\n";
      } else {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        os << arr.dump(2) << "\n";
      }
    } else {
      for (const auto& r : reports) {
        os << "n=" << r.n << " assignment=" << r.zeta_description << ": equal: " << (r.equal ? "true" : "false")
           << ", shape " << r.rows << "x" << r.cols << "\n";
        if (r.first_mismatch) os << "  " << detail::describe_mismatch(*r.first_mismatch) << "\n";
      }
      os << "verified " << verified << "/" << cfg.trials << " assignments\n";
    }
    return ok ? kOk : kMismatch;
  });
}

inline int cmd_show(const CliConfig& cfg, std::ostream& out) {
  require_polygon(cfg.n);
  const Side side = cfg.side == "rhs" ? Side::rhs : Side::lhs;
  const auto seq = equation_sequence(cfg.n, side);
  const auto path = triangulation_path(cfg.n, seq);
  return detail::with_output(cfg, out, [&](std::ostream& os) {
    os << (side == Side::lhs ? "LHS" : "RHS") << " of the " << cfg.n << "-gon equation: " << seq.moves.size()
       << " moves\n";
    for (std::size_t k = 0; k < path.size(); ++k) {
      std::string pairs;
      for (const auto& p : path[k].pairs()) pairs += (pairs.empty() ? "" : " ") + pair_label(p);
      os << "(" << k + 1 << ") " << to_text(path[k]) << "   [" << pairs << "]\n";
      if (k < seq.moves.size()) {
        os << "    " << seq.moves[k].label() << "  extended matrix " << path[k + 1].size() << "x" << path[k].size()
           << "\n";
      }
    }
    return kOk;
  });
}

inline int cmd_export(const CliConfig& cfg, std::ostream& out) {
  require_polygon(cfg.n);
  const auto zeta = zeta_for_trial(cfg, cfg.n, 0);
  const auto seqs = equation_sequences(cfg.n);
  const auto lhs = side_steps(seqs.lhs, zeta);
  const auto rhs = side_steps(seqs.rhs, zeta);
  return detail::with_output(cfg, out, [&](std::ostream& os) {
    if (cfg.format == "latex") {
      os << "% " << cfg.n << "-gon equation, assignment " << zeta.description() << "\n";
      os << "\\begin{eqnarray}\n&&" << side_to_latex(lhs) << "\\\\\n&=&" << side_to_latex(rhs)
         << "\\end{eqnarray}\n";
    } else if (cfg.format == "text") {
      for (const auto* steps : {&lhs, &rhs}) {
        for (std::size_t k = 0; k < steps->size(); ++k) {
          const auto& s = (*steps)[k];
          os << (steps == &lhs ? "lhs" : "rhs") << " step " << k + 1 << " " << s.move.label() << "  rows "
             << to_text(s.after) << " | cols " << to_text(s.before) << "\n"
             << to_text(s.matrix);
        }
      }
    } else {
      Json doc;
      doc["n"] = cfg.n;
      Json zj = Json::array();
      for (const auto& z : zeta.values()) zj.push_back(z.to_string());
      doc["zeta"] = std::move(zj);
      doc["assignment"] = zeta.description();
      doc["lhs"] = Json::array();
      for (const auto& s : lhs) doc["lhs"].push_back(to_json(s));
      doc["rhs"] = Json::array();
      for (const auto& s : rhs) doc["rhs"].push_back(to_json(s));
      doc["f_vectors"] = fvectors_to_json(zeta);
      doc["version"] = kVersion;
      os << doc.dump(2) << "\n";
    }
    return kOk;
  });
}

struct SuiteRow {
  int n = 0;
  int verified = 0;
  int trials = 0;
  int properties_passed = 0;
  int properties_total = 0;
  double millis = 0;
  std::vector<std::string> failures;
};

inline SuiteRow run_suite_row(const CliConfig& cfg, int n) {
  auto start = std::chrono::steady_clock::now();
  SuiteRow row{n, 0, cfg.trials, 0, 0, 0, {}};
  const Depth depth = cfg.depth == "quick" ? Depth::quick : Depth::full;
  for (int k = 0; k < cfg.trials; ++k) {
    const auto zeta = zeta_for_trial(cfg, n, k);
    auto report = verify_equation(n, zeta);
    row.verified += report.equal ? 1 : 0;
    if (report.first_mismatch)
      row.failures.push_back(zeta.description() + ": " + detail::describe_mismatch(*report.first_mismatch));
    for (const auto& p : run_property_suite(n, zeta, depth)) {
      ++row.properties_total;
      row.properties_passed += p.passed ? 1 : 0;
      if (!p.passed) row.failures.push_back(zeta.description() + ": " + p.name + ": " + p.counterexample);
    }
  }
  row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

inline int cmd_suite(const CliConfig& cfg, std::ostream& out) {
  require_polygon(cfg.min_n);
  if (cfg.min_n > cfg.max_n) {
    throw InvalidInput("--min-n (" + std::to_string(cfg.min_n) + ") exceeds --max-n (" + std::to_string(cfg.max_n) + ")");
  }
  if (!cfg.zeta_list.empty()) throw InvalidInput("suite does not take an explicit --zeta");
  if (cfg.jobs < 1) throw InvalidInput("--jobs must be >= 1");

  std::vector<SuiteRow> rows;
  if (cfg.jobs == 1) {
    for (int n = cfg.min_n; n <= cfg.max_n; ++n) rows.push_back(run_suite_row(cfg, n));
  } else {
    std::vector<std::future<SuiteRow>> pending;
    for (int n = cfg.min_n; n <= cfg.max_n; ++n) {
      if (static_cast<int>(pending.size()) == cfg.jobs) {
        rows.push_back(pending.front().get());
        pending.erase(pending.begin());
      }
      pending.push_back(std::async(std::launch::async, [&cfg, n] { return run_suite_row(cfg, n); }));
    }
    for (auto& f : pending) rows.push_back(f.get());
  }

  bool ok = true;
  for (const auto& r : rows) ok = ok && r.verified == r.trials && r.properties_passed == r.properties_total;
  return detail::with_output(cfg, out, [&](std::ostream& os) {
    if (cfg.format == "json") {
      Json arr = Json::array();
      for (const auto& r : rows) {
        arr.push_back(Json{{"n", r.n},
                           {"verified", r.verified},
                           {"trials", r.trials},
                           {"properties_passed", r.properties_passed},
                           {"properties_total", r.properties_total},
                           {"failures", r.failures}});
      }
      os << arr.dump(2) << "\n";
    } else {
      os << std::left << std::setw(5) << "n" << std::setw(10) << "verified" << std::setw(12) << "properties"
         << "time_ms\n";
      for (const auto& r : rows) {
        os << std::left << std::setw(5) << r.n << std::setw(10)
           << (std::to_string(r.verified) + "/" + std::to_string(r.trials)) << std::setw(12)
           << (std::to_string(r.properties_passed) + "/" + std::to_string(r.properties_total)) << std::fixed
           << std::setprecision(1) << r.millis << "\n";
        for (const auto& f : r.failures) os << "    FAIL " << f << "\n";
      }
      os << (ok ? "all verified" : "FAILURES") << "\n";
    }
    return ok ? kOk : kMismatch;
  });
}

/// Entry point of the `ngon` tool. Exit codes: 0 verified, 1 mismatch, 2 usage or input error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact matrix solution of the n-gon equation: build, inspect and verify"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_zeta = [&](CLI::App* sub) {
    sub->add_option("--zeta", cfg.zeta_list, "explicit comma-separated zeta values (\"p/q\")");
    sub->add_option("--seed", cfg.seed, "seed for random distinct integer zeta values");
  };

  auto* verify = app.add_subcommand("verify", "check LHS == RHS for the n-gon equation");
  verify->add_option("--n", cfg.n, "polygon size (>= 5)")->required();
  add_zeta(verify);
  verify->add_option("--trials", cfg.trials, "number of assignments to check");
  verify->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", cfg.out_path, "write output here instead of stdout");
  verify->add_flag("--parallel", cfg.parallel, "compute the two sides on separate threads");

  auto* show = app.add_subcommand("show", "print the triangulations and moves of one side");
  show->add_option("--n", cfg.n, "polygon size (>= 5)")->required();
  show->add_option("--side", cfg.side, "lhs or rhs")->check(CLI::IsMember({"lhs", "rhs"}));
  show->add_option("--out", cfg.out_path, "write output here instead of stdout");

  auto* exp = app.add_subcommand("export", "write the extended matrices and f-vectors");
  exp->add_option("--n", cfg.n, "polygon size (>= 5)")->required();
  add_zeta(exp);
  exp->add_option("--format", cfg.format, "json, latex or text")->check(CLI::IsMember({"json", "latex", "text"}));
  exp->add_option("--out", cfg.out_path, "write output here instead of stdout");

  auto* suite = app.add_subcommand("suite", "verify and run all properties over a range of n");
  suite->add_option("--min-n", cfg.min_n, "first n");
  suite->add_option("--max-n", cfg.max_n, "last n");
  suite->add_option("--seed", cfg.seed, "seed for random assignments (trial k uses seed + k)");
  suite->add_option("--trials", cfg.trials, "assignments per n");
  suite->add_option("--depth", cfg.depth, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  suite->add_option("--jobs", cfg.jobs, "worker threads");
  suite->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  suite->add_option("--out", cfg.out_path, "write output here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    detail::validate(cfg);
    if (*verify) return cmd_verify(cfg, out, err);
    if (*show) return cmd_show(cfg, out);
    if (*exp) return cmd_export(cfg, out);
    return cmd_suite(cfg, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return kMismatch;
  }
}

}  // namespace ngon::cli
