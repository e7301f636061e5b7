#include "mertens/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace mertens {

namespace {

void require_symmetric(const IntegerMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("spectral norm needs a symmetric matrix");
}

std::vector<double> to_double(const IntegerMatrix& m, double shift = 0.0) {
  std::vector<double> a(m.entries().begin(), m.entries().end());
  for (std::size_t i = 0; i < m.size(); ++i) a[i * m.size() + i] += shift;
  return a;
}

void matvec(const std::vector<double>& a, std::size_t s, const std::vector<double>& x,
            std::vector<double>& y) {
  for (std::size_t i = 0; i < s; ++i) {
    const double* row = a.data() + i * s;
    double acc = 0.0;
    for (std::size_t j = 0; j < s; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

std::vector<double> start_vector(std::size_t s, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<double> v(s);
  // Raw engine bits rather than a distribution: the engine output is fixed
  // by the standard, distributions are not.
  for (double& x : v) x = static_cast<double>(gen() >> 11) * 0x1.0p-52 - 1.0;
  const double norm = std::sqrt(dot(v, v));
  for (double& x : v) x /= norm;
  return v;
}

struct PowerRun {
  double eigenvalue = 0.0;  ///< signed Rayleigh quotient at exit
  std::int64_t iterations = 0;
  bool converged = false;
  bool tie_suspected = false;
  std::vector<double> vector;
};

// Plain power iteration on the dense matrix a. With detect_tie, gives up
// early once the +/- tie signature is seen.
PowerRun power_iterate(const std::vector<double>& a, std::size_t s, const PowerOptions& opt,
                       bool detect_tie) {
  constexpr std::int64_t kWindow = 64;
  PowerRun run;
  std::vector<double> v = start_vector(s, opt.seed);
  std::vector<double> w(s);
  double previous_mag = -1.0;
  double checkpoint_residual = -1.0;

  for (std::int64_t it = 1; it <= opt.max_iter; ++it) {
    matvec(a, s, v, w);
    const double rq = dot(v, w);
    double residual_sq = 0.0;
    for (std::size_t i = 0; i < s; ++i) {
      const double r = w[i] - rq * v[i];
      residual_sq += r * r;
    }
    const double residual = std::sqrt(residual_sq);
    const double mag = std::abs(rq);
    const double image_norm = std::sqrt(dot(w, w));
    run.eigenvalue = rq;
    run.iterations = it;

    if (image_norm == 0.0) {
      // v is in the kernel; only reachable for the zero matrix in practice.
      run.eigenvalue = 0.0;
      run.converged = true;
      run.vector = std::move(v);
      return run;
    }
    if (previous_mag >= 0.0 && std::abs(mag - previous_mag) <= opt.tol * mag &&
        residual <= opt.tol * mag) {
      run.converged = true;
      run.vector = std::move(v);
      return run;
    }
    if (detect_tie && it % kWindow == 0) {
      const bool stalled = checkpoint_residual >= 0.0 && residual > 0.5 * checkpoint_residual;
      if (stalled && mag < (1.0 - 1e-3) * image_norm) {
        run.tie_suspected = true;
        return run;
      }
      checkpoint_residual = residual;
    }
    previous_mag = mag;
    if (it == opt.max_iter) break;
    for (std::size_t i = 0; i < s; ++i) v[i] = w[i] / image_norm;
  }
  run.vector = std::move(v);
  return run;
}

}  // namespace

std::string_view to_string(SpectralMethod method) noexcept {
  return method == SpectralMethod::kPower ? "power" : "dense";
}

SpectralMethod parse_spectral_method(std::string_view name) {
  if (name == "power") return SpectralMethod::kPower;
  if (name == "dense") return SpectralMethod::kDenseOracle;
  throw std::invalid_argument("unknown spectral method '" + std::string(name) +
                              "' (expected power or dense)");
}

SpectralResult spectral_norm_power(const IntegerMatrix& m, const PowerOptions& options) {
  if (!(options.tol > 0.0 && options.tol < 1.0)) {
    throw std::invalid_argument("power iteration tolerance must lie in (0, 1)");
  }
  if (options.max_iter < 1) throw std::invalid_argument("max_iter must be positive");
  require_symmetric(m);

  SpectralResult result;
  result.method = SpectralMethod::kPower;
  const std::size_t s = m.size();
  if (s == 0 || m.max_abs_entry() == 0) {
    result.converged = true;
    return result;
  }

  const PowerRun plain = power_iterate(to_double(m), s, options, /*detect_tie=*/true);
  if (!plain.tie_suspected) {
    result.norm = std::abs(plain.eigenvalue);
    result.iterations = plain.iterations;
    result.converged = plain.converged;
    result.eigenvector = plain.vector;
    return result;
  }

  // Shifting by +c and -c makes the top and the bottom of the spectrum
  // dominant in turn.
  const double c = 1.0 + static_cast<double>(m.max_abs_entry());
  PowerOptions rest = options;
  rest.max_iter = std::max<std::int64_t>(1, options.max_iter - plain.iterations);
  const PowerRun up = power_iterate(to_double(m, c), s, rest, false);
  const PowerRun down = power_iterate(to_double(m, -c), s, rest, false);
  result.shifted = true;
  const double top = std::abs(up.eigenvalue - c);
  const double bottom = std::abs(down.eigenvalue + c);
  result.norm = std::max(top, bottom);
  result.eigenvector = top >= bottom ? up.vector : down.vector;
  result.iterations = plain.iterations + up.iterations + down.iterations;
  result.converged = up.converged && down.converged;
  return result;
}

SpectralResult spectral_norm_dense(const IntegerMatrix& m) {
  const std::size_t s = m.size();
  if (s > kDenseOracleMaxSize) {
    throw std::invalid_argument("dense oracle limited to size " +
                                std::to_string(kDenseOracleMaxSize) + ", got " + std::to_string(s));
  }
  require_symmetric(m);

  SpectralResult result;
  result.method = SpectralMethod::kDenseOracle;
  std::vector<double> a = to_double(m);
  auto at = [&a, s](std::size_t i, std::size_t j) -> double& { return a[i * s + j]; };

  double frobenius_sq = 0.0;
  for (const double x : a) frobenius_sq += x * x;
  const double threshold = 1e-12 * std::sqrt(frobenius_sq);

  auto off_norm = [&] {
    double acc = 0.0;
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        if (i != j) acc += at(i, j) * at(i, j);
      }
    }
    return std::sqrt(acc);
  };

  constexpr int kMaxSweeps = 100;
  while (off_norm() > threshold) {
    if (result.iterations == kMaxSweeps) break;
    ++result.iterations;
    for (std::size_t p = 0; p + 1 < s; ++p) {
      for (std::size_t q = p + 1; q < s; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (std::size_t k = 0; k < s; ++k) {
          if (k == p || k == q) continue;
          const double g = at(k, p);
          const double h = at(k, q);
          const double new_p = c * g - sn * h;
          const double new_q = sn * g + c * h;
          at(k, p) = at(p, k) = new_p;
          at(k, q) = at(q, k) = new_q;
        }
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0.0;
      }
    }
  }

  result.converged = off_norm() <= threshold;
  for (std::size_t i = 0; i < s; ++i) result.norm = std::max(result.norm, std::abs(at(i, i)));
  return result;
}

}  // namespace mertens
