#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mertens/divisor_classes.hpp"
#include "mertens/integer_matrix.hpp"
#include "mertens/mertens_sieve.hpp"
#include "mertens/quotient_algebra.hpp"

namespace mertens {

struct SymmetricMatrixPair {
  IntegerMatrix u_matrix;  ///< floor(n/(i j))
  IntegerMatrix m_matrix;  ///< M(floor(n/(i j)))
  IntegerMatrix t_matrix;  ///< anti-triangular ones
};

/// Ones on and above the anti-diagonal: T(r, c) = 1 iff r + c <= s - 1
/// (0-based positions). Equivalently, over labels, i * j <= n.
IntegerMatrix build_T(const ClassStructure& cs);

/// U(i, j) = floor(n / (i j)) over representative labels.
IntegerMatrix build_U_direct(const ClassStructure& cs);

/// M(i, j) = Mertens(floor(n / (i j))). Requires mt.limit() >= n.
IntegerMatrix build_M_direct(const ClassStructure& cs, const MertensTable& mt);

/// T * rho(pi(u)), through the regular representation.
IntegerMatrix build_U_via_rho(const QuotientAlgebra& algebra);

/// T * rho(pi(mu)); pi(mu) needs Mertens values at the representatives only.
IntegerMatrix build_M_via_rho(const QuotientAlgebra& algebra, const MertensTable& mt);

/// pi(mu) with coordinates M(k) - M(k-).
QuotientVector project_mobius(const QuotientAlgebra& algebra, const MertensTable& mt);

SymmetricMatrixPair build_matrices(const ClassStructure& cs, const MertensTable& mt);

/// Outcome of one structural check. `detail` names the first offending
/// entry on failure.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// rho(pi(u)) * rho(pi(mu)) == I in exact arithmetic.
CheckResult verify_inverse_identity(const QuotientAlgebra& algebra, const MertensTable& mt);

/// U and M symmetric.
CheckResult verify_symmetry(const ClassStructure& cs, const MertensTable& mt);

/// Direct and representation-based builds agree entrywise for U and M.
CheckResult verify_dual_path(const QuotientAlgebra& algebra, const MertensTable& mt);

/// For each basis k: T rho(k) is 0/1 and (T rho(k))(i, j) = 1 iff
/// i j <= floor(n/k) iff k <= floor(n/(i j)).
CheckResult verify_basis_pattern(const QuotientAlgebra& algebra);

/// M(1,1) = Mertens(n), U(1,1) = n, and the first column of U is reps reversed.
CheckResult verify_corner(const ClassStructure& cs, const MertensTable& mt);

/// All of the above, in a fixed order.
std::vector<CheckResult> run_structural_checks(std::int64_t n, const MertensTable& mt);

}  // namespace mertens
