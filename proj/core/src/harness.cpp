#include "mertens/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "mertens/divisor_classes.hpp"
#include "mertens/int_math.hpp"
#include "mertens/matrix_builders.hpp"

namespace mertens {

std::string_view to_string(RestrictedForm form) noexcept {
  switch (form) {
    case RestrictedForm::kSquare:
      return "SQUARE";
    case RestrictedForm::kSquarePlusRoot:
      return "SQUARE_PLUS_ROOT";
    case RestrictedForm::kOther:
      break;
  }
  return "OTHER";
}

RestrictedForm classify_restricted_form(std::int64_t n) {
  const std::int64_t k = isqrt(n);
  if (k * k == n) return RestrictedForm::kSquare;
  if (k * k + k == n) return RestrictedForm::kSquarePlusRoot;
  return RestrictedForm::kOther;
}

std::vector<std::int64_t> restricted_values(std::int64_t n_from, std::int64_t n_to) {
  if (n_from > n_to) throw std::invalid_argument("restricted_values needs n_from <= n_to");
  std::vector<std::int64_t> out;
  for (std::int64_t k = std::max<std::int64_t>(1, isqrt(std::max<std::int64_t>(n_from, 0)));
       k * k <= n_to; ++k) {
    if (k * k >= n_from) out.push_back(k * k);
    if (k * k + k >= n_from && k * k + k <= n_to) out.push_back(k * k + k);
  }
  return out;
}

void SweepConfig::validate() const {
  if (n_from < 2) throw std::invalid_argument("sweep needs n_from >= 2 (w is undefined at n = 1)");
  if (n_from > n_to) throw std::invalid_argument("sweep needs n_from <= n_to");
  if (n_step < 1) throw std::invalid_argument("sweep step must be >= 1");
}

std::vector<std::int64_t> sweep_values(const SweepConfig& config) {
  config.validate();
  if (config.restrict_forms) return restricted_values(config.n_from, config.n_to);
  std::vector<std::int64_t> out;
  for (std::int64_t n = config.n_from; n <= config.n_to; n += config.n_step) out.push_back(n);
  return out;
}

double normalized_exponent(double norm, std::int64_t n) {
  return std::log(norm) / std::log(static_cast<double>(n)) - 0.5;
}

SweepRecord evaluate(std::int64_t n, const MertensTable& table, const SweepConfig& config) {
  const ClassStructure cs(n);
  const IntegerMatrix m = build_M_direct(cs, table);
  const SpectralResult spectral = config.method == SpectralMethod::kPower
                                      ? spectral_norm_power(m, config.power)
                                      : spectral_norm_dense(m);
  SweepRecord r;
  r.n = n;
  r.s = static_cast<std::int64_t>(cs.size());
  r.mertens_n = table.mertens(n);
  r.norm = spectral.norm;
  r.ratio = spectral.norm / std::sqrt(static_cast<double>(n));
  r.w = normalized_exponent(spectral.norm, n);
  r.restricted_form = classify_restricted_form(n);
  r.converged = spectral.converged;
  return r;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  config.validate();
  const MertensTable table = MertensTable::build(config.n_to, config.sieve_cap);
  return run_sweep(config, table);
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config, const MertensTable& table) {
  const std::vector<std::int64_t> values = sweep_values(config);
  if (table.limit() < config.n_to) {
    throw std::invalid_argument("Mertens table is smaller than the sweep range");
  }
  std::vector<SweepRecord> records(values.size());

  unsigned workers = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(values.size())));

  // Each slot is written by exactly one worker, so the output order is fixed
  // by the value list and not by scheduling.
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  auto work = [&] {
    try {
      for (std::size_t i = next++; i < values.size(); i = next++) {
        records[i] = evaluate(values[i], table, config);
      }
    } catch (...) {
      const std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = values.size();
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << kSweepCsvHeader << '\n';
  char line[256];
  for (const SweepRecord& r : records) {
    const std::string_view form = to_string(r.restricted_form);
    std::snprintf(line, sizeof line, "%" PRId64 ",%" PRId64 ",%" PRId64 ",%.15g,%.15g,%.15g,%.*s,%s\n",
                  r.n, r.s, r.mertens_n, r.norm, r.ratio, r.w, static_cast<int>(form.size()),
                  form.data(), r.converged ? "true" : "false");
    out << line;
  }
}

}  // namespace mertens
