#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mertens/mertens_sieve.hpp"
#include "mertens/spectral.hpp"

namespace mertens {

enum class RestrictedForm { kSquare, kSquarePlusRoot, kOther };

std::string_view to_string(RestrictedForm form) noexcept;

/// kSquare when n = k^2, kSquarePlusRoot when n = k^2 + k, else kOther.
RestrictedForm classify_restricted_form(std::int64_t n);

/// All k^2 and k^2 + k in [n_from, n_to], ascending. These are exactly the n
/// at which the number of classes grows by one.
std::vector<std::int64_t> restricted_values(std::int64_t n_from, std::int64_t n_to);

struct SweepConfig {
  std::int64_t n_from = 1000;
  std::int64_t n_to = 1000;
  std::int64_t n_step = 1;
  bool restrict_forms = false;  ///< keep only k^2 and k^2 + k
  SpectralMethod method = SpectralMethod::kPower;
  PowerOptions power{};
  std::int64_t sieve_cap = kDefaultSieveCap;
  unsigned threads = 1;  ///< 0 picks hardware_concurrency
  std::string output_path;

  /// Throws std::invalid_argument when n_from < 2, n_from > n_to or
  /// n_step < 1.
  void validate() const;
};

struct SweepRecord {
  std::int64_t n = 0;
  std::int64_t s = 0;
  std::int64_t mertens_n = 0;
  double norm = 0.0;
  double ratio = 0.0;  ///< norm / sqrt(n)
  double w = 0.0;      ///< ln(norm) / ln(n) - 1/2
  RestrictedForm restricted_form = RestrictedForm::kOther;
  bool converged = false;
};

/// The n values a config selects: n_from, n_from + step, ... up to n_to,
/// or with restrict_forms the restricted values in [n_from, n_to].
std::vector<std::int64_t> sweep_values(const SweepConfig& config);

/// One record for n, reusing a table with limit >= n.
SweepRecord evaluate(std::int64_t n, const MertensTable& table, const SweepConfig& config);

/// Builds one table up to n_to, evaluates every selected n (on a worker
/// pool when threads != 1) and returns records in ascending n. Results do
/// not depend on the thread count.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

/// Same, with a caller-provided table (limit >= n_to).
std::vector<SweepRecord> run_sweep(const SweepConfig& config, const MertensTable& table);

inline constexpr std::string_view kSweepCsvHeader =
    "n,s,mertens_n,norm,ratio,w,restricted_form,converged";

/// Header plus one row per record; reals printed with 15 significant digits.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);

/// w as defined for records: ln(norm) / ln(n) - 0.5.
double normalized_exponent(double norm, std::int64_t n);

}  // namespace mertens
