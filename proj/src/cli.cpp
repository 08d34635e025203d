#include "sixvertex/cli.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "sixvertex/fschur.hpp"
#include "sixvertex/shapes.hpp"

namespace sixvertex::cli {

namespace {

int parse_int(const std::string& token) {
  int value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("not an integer: " + token);
  }
  return value;
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream is(csv);
  while (std::getline(is, token, ',')) out.push_back(token);
  return out;
}

Partition parse_partition(const std::string& csv, int n) {
  std::vector<int> parts;
  for (const std::string& token : split_csv(csv)) parts.push_back(parse_int(token));
  if (static_cast<int>(parts.size()) != n) {
    throw std::invalid_argument("partition has " + std::to_string(parts.size()) +
                                " parts but --n is " + std::to_string(n));
  }
  return Partition(std::move(parts));
}

std::vector<Rational> parse_rationals(const std::string& csv) {
  std::vector<Rational> out;
  for (const std::string& token : split_csv(csv)) out.push_back(rational_from_string(token));
  return out;
}

std::string partition_text(const Partition& p) {
  std::string s = "(";
  for (int i = 1; i <= p.part_count(); ++i) {
    if (i > 1) s += ',';
    s += std::to_string(p.part(i));
  }
  return s + ")";
}

int thread_count() {
  const char* env = std::getenv("SIXVERTEX_THREADS");
  if (env == nullptr) return 1;
  int k = 0;
  const auto [ptr, ec] = std::from_chars(env, env + std::string_view(env).size(), k);
  if (ec != std::errc() || *ptr != '\0' || k < 1) return 1;
  return k;
}

using CheckBody = std::function<std::pair<bool, std::string>()>;

CheckRecord timed_check(std::string check, std::string inputs, const CheckBody& body) {
  CheckRecord rec;
  rec.check = std::move(check);
  rec.inputs = std::move(inputs);
  const auto start = std::chrono::steady_clock::now();
  try {
    auto [pass, details] = body();
    rec.pass = pass;
    rec.details = std::move(details);
  } catch (const std::exception& e) {
    rec.pass = false;
    rec.details = std::string("exception: ") + e.what();
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::vector<CheckRecord> run_tasks(const std::vector<std::function<CheckRecord()>>& tasks) {
  std::vector<CheckRecord> results(tasks.size());
  const int workers = thread_count();
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
      results[i] = tasks[i]();
    }
  };
  std::vector<std::future<void>> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  return results;
}

// ----- the individual checks (shared by `verify ...` and verify_all)

std::string lambda_inputs(const Partition& lambda) {
  return "n=" + std::to_string(lambda.part_count()) + " lambda=" + partition_text(lambda);
}

CheckRecord check_bijection(const Partition& lambda) {
  return timed_check("bijection", lambda_inputs(lambda), [&]() -> std::pair<bool, std::string> {
    const auto patterns = enumerate_gt(lambda);
    const auto states = enumerate_states(lambda, EnumerationStrategy::via_gt);

    std::vector<std::vector<std::vector<int>>> staircase_keys;
    for (const GTPattern& g : patterns) {
      const Staircase s = gt_to_staircase(g);  // constructor re-checks invariants
      staircase_keys.push_back(s.columns());
      if (!(staircase_to_gt(s) == g)) {
        return {false, "staircase round trip broken at " + render_gt(g)};
      }
      const IceState state = gt_to_state(g, lambda);
      if (!(state_to_gt(state) == g)) {
        return {false, "state round trip broken at " + render_gt(g)};
      }
    }
    for (const IceState& s : states) {
      if (!(gt_to_state(state_to_gt(s), lambda) == s)) {
        return {false, "state -> pattern -> state is not the identity"};
      }
    }
    std::sort(staircase_keys.begin(), staircase_keys.end());
    const bool distinct =
        std::adjacent_find(staircase_keys.begin(), staircase_keys.end()) == staircase_keys.end();
    const bool counts = patterns.size() == states.size() && patterns.size() == staircase_keys.size();
    std::string details = "patterns=" + std::to_string(patterns.size()) +
                          " states=" + std::to_string(states.size()) +
                          " staircases=" + std::to_string(staircase_keys.size());
    return {distinct && counts, std::move(details)};
  });
}

CheckRecord check_strategy(const Partition& lambda) {
  return timed_check("strategy", lambda_inputs(lambda), [&]() -> std::pair<bool, std::string> {
    const auto via_gt = enumerate_states(lambda, EnumerationStrategy::via_gt);
    const auto backtracked = enumerate_states(lambda, EnumerationStrategy::backtrack);
    std::string details = "via_gt=" + std::to_string(via_gt.size()) +
                          " backtrack=" + std::to_string(backtracked.size());
    return {via_gt == backtracked, std::move(details)};
  });
}

CheckRecord check_symmetry(const Partition& lambda, const RectWeightTable& rect) {
  return timed_check("symmetry", lambda_inputs(lambda), [&]() -> std::pair<bool, std::string> {
    const LaurentPoly z = partition_function(lambda, rect);
    const LaurentPoly normalized = row_power_monomial(z.space(), -1) * z;
    return {is_symmetric_in_x(normalized), "x^-delta * Z under all adjacent transpositions"};
  });
}

CheckRecord check_degree(const Partition& lambda, const RectWeightTable& rect) {
  return timed_check("degree", lambda_inputs(lambda), [&]() -> std::pair<bool, std::string> {
    const int n = lambda.part_count();
    const int bound = lambda.sum() + n * (n - 1) / 2;
    const int degree = partition_function(lambda, rect).total_x_degree();
    return {degree <= bound,
            "x-degree " + std::to_string(degree) + " <= " + std::to_string(bound)};
  });
}

CheckRecord check_vanishing(const Partition& lambda, const Partition& mu, VanishingTarget target) {
  const std::string inputs = lambda_inputs(lambda) + " mu=" + partition_text(mu) +
                             (target == VanishingTarget::schur ? " target=schur" : " target=z");
  return timed_check("vanishing", inputs, [&]() -> std::pair<bool, std::string> {
    const VanishingResult r = vanishing_check(lambda, mu, target);
    std::string details;
    if (lambda == mu) {
      details = "diagonal value " + render_canonical(r.value);
    } else if (!r.lambda_in_mu) {
      details = r.value_is_zero ? "vanishes" : "nonzero: " + render_canonical(r.value);
    } else {
      details = "contained, nothing asserted";
    }
    return {r.pass, std::move(details)};
  });
}

CheckRecord check_main(const Partition& lambda, const RectWeightTable& rect) {
  return timed_check("main", lambda_inputs(lambda), [&]() -> std::pair<bool, std::string> {
    const MainTheoremCertificate cert = verify_main_theorem(lambda, rect);
    return {cert.pass, "lhs = " + cert.lhs_text + " ; rhs = " + cert.rhs_text};
  });
}

CheckRecord check_star_triangle(const BoundarySextuple& b, const RectWeightTable& rect,
                                const CrossingWeightTable& cross) {
  const std::string inputs = "case=" + std::to_string(b.mask()) + " boundary=" + b.name();
  return timed_check("yang-baxter", inputs, [&]() -> std::pair<bool, std::string> {
    const StarTriangleSides sides = star_triangle_sides(b, rect, cross);
    return {sides.left == sides.right,
            "lhs = " + render_canonical(sides.left) + " ; rhs = " + render_canonical(sides.right)};
  });
}

// ----- report plumbing

void emit_report(const Report& report, bool as_json, std::ostream& os) {
  if (as_json) {
    for (const CheckRecord& rec : report.records) {
      const nlohmann::json line{{"suite", report.suite}, {"check", rec.check},
                                {"inputs", rec.inputs}, {"pass", rec.pass},
                                {"details", rec.details}, {"seconds", rec.seconds}};
      os << line.dump() << '\n';
    }
    const nlohmann::json tail{{"suite", report.suite}, {"overall", report.overall()},
                              {"checks", report.records.size()}};
    os << tail.dump() << '\n';
    return;
  }
  for (const CheckRecord& rec : report.records) {
    os << (rec.pass ? "[PASS] " : "[FAIL] ") << rec.check;
    if (!rec.inputs.empty()) os << ' ' << rec.inputs;
    os << " (" << std::fixed << std::setprecision(3) << rec.seconds << "s)\n";
    if (!rec.pass && !rec.details.empty()) os << "       " << rec.details << '\n';
  }
  os << "overall: " << (report.overall() ? "PASS" : "FAIL") << " (" << report.records.size()
     << " checks)\n";
}

int finish_report(Report report, bool as_json, const std::string& out_path, std::ostream& out) {
  std::ostringstream text;
  emit_report(report, as_json, text);
  out << text.str();
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw std::invalid_argument("cannot open report file: " + out_path);
    file << text.str();
  }
  return report.overall() ? 0 : 1;
}

std::vector<Partition> suite_partitions(int n_max, int first_max) {
  std::vector<Partition> suite;
  for (int n = 1; n <= n_max; ++n) {
    for (Partition& p : partitions_in_box(n, first_max)) suite.push_back(std::move(p));
  }
  return suite;
}

}  // namespace

bool Report::overall() const {
  for (const CheckRecord& rec : records) {
    if (!rec.pass) return false;
  }
  return true;
}

Report verify_all(int n_max, int first_max, const RectWeightTable& rect,
                  const CrossingWeightTable& cross) {
  if (n_max < 1 || first_max < 0) throw std::invalid_argument("bad suite bounds");
  const std::vector<Partition> suite = suite_partitions(n_max, first_max);
  const std::vector<Partition> grid = partitions_in_box(n_max, first_max);

  std::vector<std::function<CheckRecord()>> tasks;
  for (const Partition& p : suite) tasks.push_back([p] { return check_bijection(p); });
  for (const Partition& p : suite) tasks.push_back([p] { return check_strategy(p); });
  for (const Partition& p : suite) {
    tasks.push_back([p, &rect] { return check_symmetry(p, rect); });
  }
  for (const Partition& p : suite) {
    tasks.push_back([p, &rect] { return check_degree(p, rect); });
  }
  for (const Partition& lambda : grid) {
    for (const Partition& mu : grid) {
      tasks.push_back([lambda, mu] { return check_vanishing(lambda, mu, VanishingTarget::schur); });
      tasks.push_back([lambda, mu] { return check_vanishing(lambda, mu, VanishingTarget::z); });
    }
  }
  for (const BoundarySextuple& b : BoundarySextuple::all()) {
    tasks.push_back([b, &rect, &cross] { return check_star_triangle(b, rect, cross); });
  }
  for (const Partition& p : suite) {
    tasks.push_back([p, &rect] { return check_main(p, rect); });
  }

  Report report;
  report.suite = "verify-all";
  report.records = run_tasks(tasks);
  return report;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact six-vertex-model partition functions and factorial Schur polynomials",
               "sixvertex"};
  app.require_subcommand(1);

  int n = 0;
  std::string lambda_csv;
  std::string mu_csv;
  std::string a_csv;
  std::string format = "ascii";
  std::string strategy = "gt";
  std::string in_path;
  std::string out_path;
  int num_a = 0;
  int degree = 0;
  int case_mask = -1;
  int n_max = 3;
  int first_max = 3;
  bool as_json = false;

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List all ice states for a boundary");
  enumerate_cmd->add_option("--n", n, "number of rows")->required();
  enumerate_cmd->add_option("--lambda", lambda_csv, "partition, comma-separated parts")->required();
  enumerate_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"ascii", "json"}));
  enumerate_cmd->add_option("--strategy", strategy, "enumeration strategy")
      ->check(CLI::IsMember({"gt", "backtrack"}));

  auto* z_cmd = app.add_subcommand("z", "Partition function Z as an exact Laurent polynomial");
  z_cmd->add_option("--n", n, "number of rows")->required();
  z_cmd->add_option("--lambda", lambda_csv, "partition, comma-separated parts")->required();
  z_cmd->add_flag("--json", as_json, "emit polynomial JSON");

  auto* schur_cmd = app.add_subcommand("schur", "Factorial Schur polynomial");
  schur_cmd->add_option("--n", n, "number of x variables")->required();
  schur_cmd->add_option("--lambda", lambda_csv, "partition, comma-separated parts")->required();
  schur_cmd->add_option("--na", num_a, "number of a variables")->required();
  schur_cmd->add_flag("--json", as_json, "emit polynomial JSON");

  auto* bijection_cmd =
      app.add_subcommand("bijection", "Check the pattern/staircase/state bijections for one shape");
  bijection_cmd->add_option("--n", n, "number of rows")->required();
  bijection_cmd->add_option("--lambda", lambda_csv, "partition, comma-separated parts")->required();
  bijection_cmd->add_flag("--json", as_json, "emit line-delimited JSON records");
  bijection_cmd->add_option("--out", out_path, "also write the report to this file");

  auto* expand_cmd =
      app.add_subcommand("expand", "Expand a symmetric polynomial in the factorial Schur basis");
  expand_cmd->add_option("--n", n, "number of x variables")->required();
  expand_cmd->add_option("--degree", degree, "degree bound for the expansion")->required();
  expand_cmd->add_option("--a", a_csv, "numeric a values, comma-separated rationals")->required();
  expand_cmd->add_option("--lambda", lambda_csv,
                         "expand x^-delta * Z for this partition instead of reading JSON");
  expand_cmd->add_option("--in", in_path, "polynomial JSON file (default: stdin)");
  expand_cmd->add_flag("--json", as_json, "emit line-delimited JSON records");

  auto* verify_cmd = app.add_subcommand("verify", "Verify identities");
  verify_cmd->require_subcommand(1);

  auto* vmain = verify_cmd->add_subcommand("main", "Z * a-prefactor = x^delta * schur");
  vmain->add_option("--n", n, "number of rows")->required();
  vmain->add_option("--lambda", lambda_csv, "partition, comma-separated parts")->required();
  vmain->add_flag("--json", as_json, "emit line-delimited JSON records");
  vmain->add_option("--out", out_path, "also write the report to this file");

  auto* vyb = verify_cmd->add_subcommand("yang-baxter", "Star-triangle identity");
  vyb->add_option("--case", case_mask, "single 6-bit boundary mask (default: all 20)");
  vyb->add_flag("--json", as_json, "emit line-delimited JSON records");
  vyb->add_option("--out", out_path, "also write the report to this file");

  auto* vvan = verify_cmd->add_subcommand("vanishing", "Specialization vanishing / diagonal value");
  vvan->add_option("--n", n, "number of rows")->required();
  vvan->add_option("--lambda", lambda_csv, "partition, comma-separated parts")->required();
  vvan->add_option("--mu", mu_csv, "specialization partition, comma-separated parts")->required();
  vvan->add_flag("--json", as_json, "emit line-delimited JSON records");
  vvan->add_option("--out", out_path, "also write the report to this file");

  auto* vsym = verify_cmd->add_subcommand("symmetry", "Symmetry of x^-delta * Z");
  vsym->add_option("--n", n, "number of rows")->required();
  vsym->add_option("--lambda", lambda_csv, "partition, comma-separated parts")->required();
  vsym->add_flag("--json", as_json, "emit line-delimited JSON records");
  vsym->add_option("--out", out_path, "also write the report to this file");

  auto* vall = verify_cmd->add_subcommand("all", "The whole battery over a bounded suite");
  vall->add_option("--n-max", n_max, "largest row count (default 3)");
  vall->add_option("--lambda1-max", first_max, "largest first part (default 3)");
  vall->add_flag("--json", as_json, "emit line-delimited JSON records");
  vall->add_option("--out", out_path, "also write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (enumerate_cmd->parsed()) {
      const Partition lambda = parse_partition(lambda_csv, n);
      const auto states = enumerate_states(lambda, strategy == "gt"
                                                       ? EnumerationStrategy::via_gt
                                                       : EnumerationStrategy::backtrack);
      if (format == "json") {
        for (const IceState& s : states) out << state_to_json(s).dump() << '\n';
      } else {
        for (const IceState& s : states) out << render_state(s) << '\n';
        out << "states: " << states.size() << '\n';
      }
      return 0;
    }

    if (z_cmd->parsed()) {
      const Partition lambda = parse_partition(lambda_csv, n);
      const LaurentPoly z = partition_function(lambda);
      out << (as_json ? poly_to_json(z).dump() : render_canonical(z)) << '\n';
      return 0;
    }

    if (schur_cmd->parsed()) {
      const Partition lambda = parse_partition(lambda_csv, n);
      const LaurentPoly s = factorial_schur(lambda, n, num_a);
      out << (as_json ? poly_to_json(s).dump() : render_canonical(s)) << '\n';
      return 0;
    }

    if (bijection_cmd->parsed()) {
      const Partition lambda = parse_partition(lambda_csv, n);
      Report report;
      report.suite = "bijection";
      report.records.push_back(check_bijection(lambda));
      report.records.push_back(check_strategy(lambda));
      return finish_report(std::move(report), as_json, out_path, out);
    }

    if (expand_cmd->parsed()) {
      const std::vector<Rational> a_values = parse_rationals(a_csv);
      LaurentPoly f(VarSpace{1, 1});
      if (!lambda_csv.empty()) {
        if (!in_path.empty()) {
          throw std::invalid_argument("--lambda and --in are mutually exclusive");
        }
        const Partition lambda = parse_partition(lambda_csv, n);
        const LaurentPoly z = partition_function(lambda);
        f = row_power_monomial(z.space(), -1) * z;
      } else {
        nlohmann::json j;
        if (!in_path.empty()) {
          std::ifstream file(in_path);
          if (!file) throw std::invalid_argument("cannot open polynomial file: " + in_path);
          file >> j;
        } else {
          std::cin >> j;
        }
        f = poly_from_json(j);
        if (f.space().nx != n) {
          throw std::invalid_argument("polynomial disagrees with --n");
        }
      }
      const ExpansionResult result = expand_in_factorial_basis(f, degree, a_values);
      for (const auto& [mu, c] : result.coeffs) {
        if (as_json) {
          out << nlohmann::json{{"mu", mu.parts()}, {"c", rational_to_string(c)}}.dump() << '\n';
        } else {
          out << "c" << partition_text(mu) << " = " << rational_to_string(c) << '\n';
        }
      }
      return 0;
    }

    if (vmain->parsed()) {
      const Partition lambda = parse_partition(lambda_csv, n);
      Report report;
      report.suite = "main";
      report.records.push_back(check_main(lambda, RectWeightTable::standard()));
      return finish_report(std::move(report), as_json, out_path, out);
    }

    if (vyb->parsed()) {
      Report report;
      report.suite = "yang-baxter";
      const auto rect = RectWeightTable::standard();
      const auto cross = CrossingWeightTable::standard();
      if (case_mask >= 0) {
        report.records.push_back(
            check_star_triangle(BoundarySextuple::from_mask(case_mask), rect, cross));
      } else {
        for (const BoundarySextuple& b : BoundarySextuple::all()) {
          report.records.push_back(check_star_triangle(b, rect, cross));
        }
      }
      return finish_report(std::move(report), as_json, out_path, out);
    }

    if (vvan->parsed()) {
      const Partition lambda = parse_partition(lambda_csv, n);
      const Partition mu = parse_partition(mu_csv, n);
      Report report;
      report.suite = "vanishing";
      report.records.push_back(check_vanishing(lambda, mu, VanishingTarget::schur));
      report.records.push_back(check_vanishing(lambda, mu, VanishingTarget::z));
      return finish_report(std::move(report), as_json, out_path, out);
    }

    if (vsym->parsed()) {
      const Partition lambda = parse_partition(lambda_csv, n);
      Report report;
      report.suite = "symmetry";
      report.records.push_back(check_symmetry(lambda, RectWeightTable::standard()));
      return finish_report(std::move(report), as_json, out_path, out);
    }

    if (vall->parsed()) {
      Report report = verify_all(n_max, first_max);
      return finish_report(std::move(report), as_json, out_path, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  err << "error: no subcommand handled\n";
  return 2;
}

}  // namespace sixvertex::cli
