#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "mertens/integer_matrix.hpp"

namespace mertens {

enum class SpectralMethod { kPower, kDenseOracle };

std::string_view to_string(SpectralMethod method) noexcept;
/// Accepts "power" and "dense"; throws std::invalid_argument otherwise.
SpectralMethod parse_spectral_method(std::string_view name);

/// Largest eigenvalue magnitude of a symmetric matrix, i.e. its 2-norm.
struct SpectralResult {
  double norm = 0.0;
  std::int64_t iterations = 0;  ///< power iterations, or Jacobi sweeps for the oracle
  SpectralMethod method = SpectralMethod::kPower;
  bool converged = false;
  bool shifted = false;  ///< the +/- tie fallback was used
  /// Unit eigenvector estimate for the returned magnitude (power method only).
  std::vector<double> eigenvector;
};

struct PowerOptions {
  double tol = 1e-10;
  std::int64_t max_iter = 100'000;
  std::uint64_t seed = 42;
};

/// Power iteration from a seeded pseudo-random start vector.
///
/// Stops when successive Rayleigh-quotient magnitudes agree to tol relative
/// and the residual |Av - lambda v| is at most tol |lambda| |v|. When the
/// two extreme eigenvalues have (nearly) equal magnitude and opposite signs
/// the iteration stalls with |v'Av| visibly below |Av|; it then restarts on
/// A + cI and A - cI, c = 1 + max|a_ij|, to pick up both extremes.
///
/// Throws std::invalid_argument for a non-symmetric matrix or bad options.
/// Exhausting max_iter is not an error: the best estimate comes back with
/// converged = false.
SpectralResult spectral_norm_power(const IntegerMatrix& m, const PowerOptions& options = {});

/// Size limit of the dense oracle.
inline constexpr std::size_t kDenseOracleMaxSize = 2048;

/// Cyclic Jacobi eigenvalue sweeps until the off-diagonal Frobenius norm is
/// at most 1e-12 of the full Frobenius norm; returns max |eigenvalue|.
/// Throws std::invalid_argument for non-symmetric input or size above
/// kDenseOracleMaxSize.
SpectralResult spectral_norm_dense(const IntegerMatrix& m);

}  // namespace mertens
