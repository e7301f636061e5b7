#include "mertens/matrix_builders.hpp"

#include <sstream>
#include <stdexcept>

#include "mertens/int_math.hpp"

namespace mertens {

namespace {

void require_limit(const ClassStructure& cs, const MertensTable& mt) {
  if (mt.limit() < cs.n()) {
    throw std::invalid_argument("Mertens table limit " + std::to_string(mt.limit()) +
                                " is below n = " + std::to_string(cs.n()));
  }
}

std::string describe(const ClassStructure& cs, const EntryMismatch& m) {
  std::ostringstream os;
  os << "entry (" << cs.rep(m.row) << ", " << cs.rep(m.col) << "): " << m.lhs << " vs " << m.rhs;
  return os.str();
}

CheckResult compare(std::string name, const ClassStructure& cs, const IntegerMatrix& a,
                    const IntegerMatrix& b) {
  CheckResult r{std::move(name), true, {}};
  if (const auto bad = first_mismatch(a, b)) {
    r.passed = false;
    r.detail = a.size() == b.size() ? describe(cs, *bad) : "size mismatch";
  }
  return r;
}

}  // namespace

IntegerMatrix build_T(const ClassStructure& cs) {
  const std::size_t s = cs.size();
  IntegerMatrix t(s);
  for (std::size_t r = 0; r < s; ++r) {
    for (std::size_t c = 0; r + c < s; ++c) t(r, c) = 1;
  }
  return t;
}

IntegerMatrix build_U_direct(const ClassStructure& cs) {
  const std::size_t s = cs.size();
  const auto reps = cs.reps();
  IntegerMatrix u(s);
  for (std::size_t r = 0; r < s; ++r) {
    for (std::size_t c = 0; c < s; ++c) u(r, c) = floor_div_product(cs.n(), reps[r], reps[c]);
  }
  return u;
}

IntegerMatrix build_M_direct(const ClassStructure& cs, const MertensTable& mt) {
  require_limit(cs, mt);
  const std::size_t s = cs.size();
  const auto reps = cs.reps();
  IntegerMatrix m(s);
  for (std::size_t r = 0; r < s; ++r) {
    // Symmetric by construction; fill the upper triangle and mirror.
    for (std::size_t c = r; c < s; ++c) {
      const std::int64_t v = mt.mertens_unchecked(floor_div_product(cs.n(), reps[r], reps[c]));
      m(r, c) = v;
      m(c, r) = v;
    }
  }
  return m;
}

QuotientVector project_mobius(const QuotientAlgebra& algebra, const MertensTable& mt) {
  require_limit(algebra.classes(), mt);
  return algebra.project_from_prefix([&mt](std::int64_t k) { return mt.mertens(k); });
}

IntegerMatrix build_U_via_rho(const QuotientAlgebra& algebra) {
  return build_T(algebra.classes()) * algebra.regular_representation(algebra.project_ones());
}

IntegerMatrix build_M_via_rho(const QuotientAlgebra& algebra, const MertensTable& mt) {
  return build_T(algebra.classes()) *
         algebra.regular_representation(project_mobius(algebra, mt));
}

SymmetricMatrixPair build_matrices(const ClassStructure& cs, const MertensTable& mt) {
  return SymmetricMatrixPair{build_U_direct(cs), build_M_direct(cs, mt), build_T(cs)};
}

CheckResult verify_inverse_identity(const QuotientAlgebra& algebra, const MertensTable& mt) {
  const IntegerMatrix product = algebra.regular_representation(algebra.project_ones()) *
                                algebra.regular_representation(project_mobius(algebra, mt));
  return compare("inverse-identity", algebra.classes(), product,
                 IntegerMatrix::identity(algebra.dimension()));
}

CheckResult verify_symmetry(const ClassStructure& cs, const MertensTable& mt) {
  CheckResult r{"symmetry", true, {}};
  const IntegerMatrix u = build_U_direct(cs);
  const IntegerMatrix m = build_M_direct(cs, mt);
  const IntegerMatrix t = build_T(cs);
  if (!u.is_symmetric()) {
    r.passed = false;
    r.detail = "U is not symmetric";
  } else if (!m.is_symmetric()) {
    r.passed = false;
    r.detail = "M is not symmetric";
  } else if (!t.is_symmetric()) {
    r.passed = false;
    r.detail = "T is not symmetric";
  }
  return r;
}

CheckResult verify_dual_path(const QuotientAlgebra& algebra, const MertensTable& mt) {
  const ClassStructure& cs = algebra.classes();
  CheckResult u = compare("dual-path", cs, build_U_direct(cs), build_U_via_rho(algebra));
  if (!u.passed) {
    u.detail = "U " + u.detail;
    return u;
  }
  CheckResult m = compare("dual-path", cs, build_M_direct(cs, mt), build_M_via_rho(algebra, mt));
  if (!m.passed) m.detail = "M " + m.detail;
  return m;
}

CheckResult verify_basis_pattern(const QuotientAlgebra& algebra) {
  const ClassStructure& cs = algebra.classes();
  const std::int64_t n = cs.n();
  const auto reps = cs.reps();
  const IntegerMatrix t = build_T(cs);
  CheckResult r{"basis-pattern", true, {}};
  for (const std::int64_t k : reps) {
    const IntegerMatrix trk = t * algebra.regular_representation(algebra.basis(k));
    for (std::size_t a = 0; a < reps.size() && r.passed; ++a) {
      for (std::size_t b = 0; b < reps.size(); ++b) {
        const std::int64_t v = trk(a, b);
        const bool by_label = floor_div_product(n, reps[a], reps[b]) >= k;
        std::int64_t ij = 0;
        const bool by_bar = !__builtin_mul_overflow(reps[a], reps[b], &ij) && ij <= n / k;
        if ((v != 0 && v != 1) || (v == 1) != by_label || by_label != by_bar) {
          r.passed = false;
          std::ostringstream os;
          os << "k = " << k << ", entry (" << reps[a] << ", " << reps[b] << ") = " << v;
          r.detail = os.str();
          break;
        }
      }
    }
    if (!r.passed) break;
  }
  return r;
}

CheckResult verify_corner(const ClassStructure& cs, const MertensTable& mt) {
  CheckResult r{"corner", true, {}};
  const IntegerMatrix u = build_U_direct(cs);
  const IntegerMatrix m = build_M_direct(cs, mt);
  if (m(0, 0) != mt.mertens(cs.n())) {
    r.passed = false;
    r.detail = "M(1,1) = " + std::to_string(m(0, 0)) + " but Mertens(n) = " +
               std::to_string(mt.mertens(cs.n()));
    return r;
  }
  if (u(0, 0) != cs.n()) {
    r.passed = false;
    r.detail = "U(1,1) = " + std::to_string(u(0, 0));
    return r;
  }
  const std::size_t s = cs.size();
  for (std::size_t i = 0; i < s; ++i) {
    if (u(i, 0) != cs.rep(s - 1 - i)) {
      r.passed = false;
      r.detail = "first column of U differs from reversed reps at row " + std::to_string(cs.rep(i));
      return r;
    }
  }
  return r;
}

std::vector<CheckResult> run_structural_checks(std::int64_t n, const MertensTable& mt) {
  const QuotientAlgebra algebra(n);
  const ClassStructure& cs = algebra.classes();
  return {verify_symmetry(cs, mt), verify_dual_path(algebra, mt), verify_basis_pattern(algebra),
          verify_inverse_identity(algebra, mt), verify_corner(cs, mt)};
}

}  // namespace mertens
