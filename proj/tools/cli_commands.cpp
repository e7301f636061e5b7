#include "cli_commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "mertens/divisor_classes.hpp"
#include "mertens/harness.hpp"
#include "mertens/int_math.hpp"
#include "mertens/integer_matrix.hpp"
#include "mertens/matrix_builders.hpp"
#include "mertens/mertens_sieve.hpp"
#include "mertens/quotient_algebra.hpp"
#include "mertens/spectral.hpp"

namespace mertens::cli {

namespace {

struct Options {
  std::int64_t n = 0;
  std::int64_t k = 0;
  bool json = false;
  bool with_unbounded = false;
  std::string which;
  std::string method = "power";
  double tol = PowerOptions{}.tol;
  std::int64_t max_iter = PowerOptions{}.max_iter;
  std::uint64_t seed = PowerOptions{}.seed;
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::int64_t step = 1;
  bool restrict_forms = false;
  unsigned threads = 1;
  std::string out_path;
  std::int64_t sieve_cap = 0;
};

std::int64_t effective_cap(const Options& o) {
  return o.sieve_cap > 0 ? o.sieve_cap : sieve_cap_from_env();
}

void print_classes(const Options& o, std::ostream& out) {
  const ClassStructure cs(o.n);
  if (o.json) {
    nlohmann::json j;
    j["n"] = cs.n();
    j["s"] = cs.size();
    j["reps"] = std::vector<std::int64_t>(cs.reps().begin(), cs.reps().end());
    auto classes = nlohmann::json::array();
    for (const std::int64_t k : cs.reps()) {
      classes.push_back({{"rep", k}, {"first", cs.predecessor(k) + 1}, {"last", k}});
    }
    j["classes"] = std::move(classes);
    out << j.dump(2) << '\n';
    return;
  }
  out << "n = " << cs.n() << '\n' << "s = " << cs.size() << '\n' << "reps =";
  for (const std::int64_t k : cs.reps()) out << ' ' << k;
  out << '\n';
  for (const std::int64_t k : cs.reps()) {
    out << "class " << k << ": " << cs.predecessor(k) + 1 << ".." << k << '\n';
  }
  out << "class inf: " << cs.n() + 1 << "..\n";
}

// The multiplication table of the class labels, with "0" standing for the
// unbounded class (or "inf" and an extra row/column with --with-unbounded).
void print_table(const Options& o, std::ostream& out) {
  const QuotientAlgebra algebra(o.n);
  const ClassStructure& cs = algebra.classes();
  const std::string unbounded = o.with_unbounded ? "inf" : "0";
  std::vector<std::string> labels;
  for (const std::int64_t k : cs.reps()) labels.push_back(std::to_string(k));
  if (o.with_unbounded) labels.push_back("inf");

  std::size_t width = 1;
  for (const auto& l : labels) width = std::max(width, l.size());
  const std::size_t s = cs.size();

  out << std::setw(static_cast<int>(width)) << "" << " |";
  for (const auto& l : labels) out << ' ' << std::setw(static_cast<int>(width)) << l;
  out << '\n' << std::string(width + 1, '-') << '+'
      << std::string(labels.size() * (width + 1), '-') << '\n';
  for (std::size_t a = 0; a < labels.size(); ++a) {
    out << std::setw(static_cast<int>(width)) << labels[a] << " |";
    for (std::size_t b = 0; b < labels.size(); ++b) {
      std::string cell = unbounded;
      if (a < s && b < s) {
        const std::int32_t p = algebra.product_index(a, b);
        if (p != QuotientAlgebra::kZero) cell = labels[static_cast<std::size_t>(p)];
      }
      out << ' ' << std::setw(static_cast<int>(width)) << cell;
    }
    out << '\n';
  }
}

void print_matrix(const Options& o, std::ostream& out) {
  const QuotientAlgebra algebra(o.n);
  const ClassStructure& cs = algebra.classes();
  const std::string& w = o.which;
  auto table = [&] { return MertensTable::build(cs.n(), effective_cap(o)); };

  IntegerMatrix m;
  if (w == "T") {
    m = build_T(cs);
  } else if (w == "U") {
    m = build_U_direct(cs);
  } else if (w == "M") {
    m = build_M_direct(cs, table());
  } else if (w == "rho-u") {
    m = algebra.regular_representation(algebra.project_ones());
  } else if (w == "rho-mu") {
    m = algebra.regular_representation(project_mobius(algebra, table()));
  } else if (w.starts_with("rho-")) {
    std::int64_t k = 0;
    std::istringstream is(w.substr(4));
    if (!(is >> k) || !is.eof()) throw std::invalid_argument("unknown matrix '" + w + "'");
    m = algebra.regular_representation(algebra.basis(k));
  } else {
    throw std::invalid_argument("unknown matrix '" + w +
                                "' (expected T, U, M, rho-u, rho-mu or rho-<k>)");
  }
  write_csv(out, m);
}

int run_verify(const Options& o, std::ostream& out) {
  const MertensTable table = MertensTable::build(o.n, effective_cap(o));
  bool all = true;
  for (const CheckResult& r : run_structural_checks(o.n, table)) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) out << ": " << r.detail;
    out << '\n';
    all = all && r.passed;
  }
  return all ? 0 : 1;
}

void print_norm(const Options& o, std::ostream& out) {
  const MertensTable table = MertensTable::build(o.n, effective_cap(o));
  const ClassStructure cs(o.n);
  const IntegerMatrix m = build_M_direct(cs, table);
  const SpectralMethod method = parse_spectral_method(o.method);
  const SpectralResult r = method == SpectralMethod::kPower
                               ? spectral_norm_power(m, PowerOptions{o.tol, o.max_iter, o.seed})
                               : spectral_norm_dense(m);
  out << std::setprecision(15);
  out << "n = " << o.n << '\n'
      << "s = " << cs.size() << '\n'
      << "mertens_n = " << table.mertens(o.n) << '\n'
      << "method = " << to_string(r.method) << '\n'
      << "norm = " << r.norm << '\n'
      << "iterations = " << r.iterations << '\n'
      << "converged = " << (r.converged ? "true" : "false") << '\n';
  if (o.n > 1) {
    out << "w = " << normalized_exponent(r.norm, o.n) << '\n';
  } else {
    out << "w = undefined\n";
  }
}

void run_sweep_command(const Options& o, std::ostream& out) {
  SweepConfig config;
  config.n_from = o.from;
  config.n_to = o.to;
  config.n_step = o.step;
  config.restrict_forms = o.restrict_forms;
  config.method = parse_spectral_method(o.method);
  config.power = PowerOptions{o.tol, o.max_iter, o.seed};
  config.sieve_cap = effective_cap(o);
  config.threads = o.threads;
  config.output_path = o.out_path;
  config.validate();

  const std::vector<SweepRecord> records = run_sweep(config);
  std::ofstream file(config.output_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + config.output_path + " for writing");
  write_sweep_csv(file, records);
  file.close();
  if (!file) throw std::runtime_error("failed writing " + config.output_path);

  std::size_t unconverged = 0;
  for (const auto& r : records) unconverged += r.converged ? 0 : 1;
  out << "wrote " << records.size() << " records to " << config.output_path;
  if (unconverged != 0) out << " (" << unconverged << " not converged)";
  out << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric Mertens matrices: class structure, construction and spectral norms",
               "mertens-matrix"};
  app.require_subcommand(1);
  Options o;

  auto add_cap = [&o](CLI::App* sub) {
    sub->add_option("--sieve-cap", o.sieve_cap,
                    "Largest sieve limit allowed (default: $MERTENS_SIEVE_CAP or 1e8)")
        ->check(CLI::PositiveNumber);
  };
  auto add_solver = [&o](CLI::App* sub) {
    sub->add_option("--method", o.method, "Spectral method")
        ->check(CLI::IsMember({"power", "dense"}));
    sub->add_option("--tol", o.tol, "Power-iteration tolerance")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--seed", o.seed, "Seed of the start vector");
    sub->add_option("--max-iter", o.max_iter, "Power-iteration limit")->check(CLI::PositiveNumber);
  };

  auto* classes = app.add_subcommand("classes", "Class representatives and intervals for n");
  classes->add_option("--n", o.n, "n")->required()->check(CLI::PositiveNumber);
  classes->add_flag("--json", o.json, "Emit JSON");

  auto* mertens_cmd = app.add_subcommand("mertens", "Print the Mertens function M(K)");
  mertens_cmd->add_option("--k", o.k, "K")->required()->check(CLI::PositiveNumber);
  add_cap(mertens_cmd);

  auto* table = app.add_subcommand("table", "Multiplication table of the class labels");
  table->add_option("--n", o.n, "n")->required()->check(CLI::PositiveNumber);
  table->add_flag("--with-unbounded", o.with_unbounded, "Keep the unbounded class as 'inf'");

  auto* matrix = app.add_subcommand("matrix", "Emit one matrix as CSV");
  matrix->add_option("--n", o.n, "n")->required()->check(CLI::PositiveNumber);
  matrix->add_option("--which", o.which, "T, U, M, rho-u, rho-mu or rho-<k>")->required();
  add_cap(matrix);

  auto* verify = app.add_subcommand("verify", "Run the structural identity checks for n");
  verify->add_option("--n", o.n, "n")->required()->check(CLI::PositiveNumber);
  add_cap(verify);

  auto* norm = app.add_subcommand("norm", "Spectral norm of the Mertens matrix for n");
  norm->add_option("--n", o.n, "n")->required()->check(CLI::PositiveNumber);
  add_solver(norm);
  add_cap(norm);

  auto* sweep = app.add_subcommand("sweep", "Sweep n and write the CSV of norms");
  sweep->add_option("--from", o.from, "First n")->required()->check(CLI::Range(std::int64_t{2}, INT64_MAX));
  sweep->add_option("--to", o.to, "Last n")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--step", o.step, "Step between n")->check(CLI::PositiveNumber);
  sweep->add_flag("--restrict", o.restrict_forms, "Keep only n = k^2 and n = k^2 + k");
  sweep->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  sweep->add_option("--out", o.out_path, "Output CSV path")->required();
  add_solver(sweep);
  add_cap(sweep);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*classes) {
      print_classes(o, out);
    } else if (*mertens_cmd) {
      const MertensTable t = MertensTable::build(o.k, effective_cap(o));
      out << t.mertens(o.k) << '\n';
    } else if (*table) {
      print_table(o, out);
    } else if (*matrix) {
      print_matrix(o, out);
    } else if (*verify) {
      return run_verify(o, out);
    } else if (*norm) {
      print_norm(o, out);
    } else if (*sweep) {
      run_sweep_command(o, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace mertens::cli
