#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zbrace/brace.hpp"
#include "zbrace/check.hpp"
#include "zbrace/families.hpp"

namespace zbrace {

/// The z-deformed map r_z(x, y) = (sigma_x(y), tau_y(x)) as dense tables,
/// with sigma_x(y) = x o y - x o z + z and tau_y(x) = sigma_x(y)^-1 o x o y.
class ZDeformedSolution {
 public:
  /// Wraps raw tables without checking anything; verification is the
  /// business of the check functions below.
  static ZDeformedSolution from_tables(SkewBrace brace, Elem z, std::vector<Elem> sigma,
                                       std::vector<Elem> tau);

  const SkewBrace& brace() const noexcept { return brace_; }
  Elem z() const noexcept { return z_; }
  Elem order() const noexcept { return brace_.order(); }

  /// sigma_x(y)
  Elem sigma(Elem x, Elem y) const noexcept { return tables_->sigma[std::size_t{x} * n_ + y]; }
  /// tau_y(x)
  Elem tau(Elem y, Elem x) const noexcept { return tables_->tau[std::size_t{y} * n_ + x]; }
  std::pair<Elem, Elem> operator()(Elem x, Elem y) const noexcept {
    return {sigma(x, y), tau(y, x)};
  }

  std::span<const Elem> sigma_table() const noexcept { return tables_->sigma; }
  std::span<const Elem> tau_table() const noexcept { return tables_->tau; }

  /// Encoded pair map x*n + y -> sigma_x(y)*n + tau_y(x).
  std::vector<std::uint64_t> pair_map() const;

 private:
  struct Tables {
    std::vector<Elem> sigma;  // [x][y]
    std::vector<Elem> tau;    // [y][x]
  };
  ZDeformedSolution(SkewBrace brace, Elem z, std::shared_ptr<const Tables> tables)
      : brace_(std::move(brace)), z_(z), n_(brace_.order()), tables_(std::move(tables)) {}

  SkewBrace brace_;
  Elem z_;
  Elem n_;
  std::shared_ptr<const Tables> tables_;
};

/// Throws InadmissibleZ.
ZDeformedSolution build_solution(const SkewBrace& b, Elem z);

/// The map r*_z built from hat-sigma_x(y) = -x o z^-1 + x o y o z^-1 and
/// hat-tau_y(x) = hat-sigma_x(y)^-1 o x o y. Verifies that it inverts r_z on
/// both sides; throws InadmissibleZ or InverseCheckFailed (witness x, y).
ZDeformedSolution inverse_solution(const SkewBrace& b, Elem z);

// --- map-level checks -------------------------------------------------------

/// The three braid constraints over all (eta, x, y).
Section verify_braid_constraints(const ZDeformedSolution& s, const SweepOptions& opts);

/// Every sigma_x and every tau_y is a bijection of the carrier.
Check nondegeneracy_check(const ZDeformedSolution& s);

/// r_z is a bijection of the pair space; a failure reports two colliding
/// preimages (x1, y1, x2, y2).
Check transpose_identity_check(const ZDeformedSolution& s);
bool transpose_identity_holds(const ZDeformedSolution& s);

/// sigma_x(y) o tau_y(x) = x o y.
Check product_identity_check(const ZDeformedSolution& s);

struct Involutivity {
  bool involutive = false;
  /// The left-brace and a o z = z + a criterion, evaluated independently.
  bool criterion = false;
  /// On non-involution: x, y, r(x,y), r(r(x,y)) as six indices.
  std::vector<Elem> witness;
};

/// r_z o r_z = id, cross-checked against the criterion; throws
/// CriterionMismatch if the two disagree.
Involutivity is_involutive(const ZDeformedSolution& s);

/// sigma^z = sigma^1 evaluated from the tables.
bool sigma_equals_rump(const SkewBrace& b, Elem z);
/// For all a: a o z = z + a.
bool rump_condition(const SkewBrace& b, Elem z);

/// r*_z o r_z = r_z o r*_z = id and the four componentwise conditions.
Section inverse_check(const ZDeformedSolution& s);

/// Properties (1)-(6) of sigma^z and tau^z for an admissible z.
Section proposition_checks(const ZDeformedSolution& s, const SweepOptions& opts);

/// Identity sharing, left distributivity, its ternary form, two-sidedness.
Section brace_law_checks(const SkewBrace& b, const SweepOptions& opts);

/// Conjugation identity r_1(a, -a^-1 + b + a^-1) = r_GV(a, b), r_GV = r_1^-1,
/// and r_GV = r_1 for left braces.
Section gv_correspondence_check(const SkewBrace& b);

// --- dedup ------------------------------------------------------------------

struct CriterionComparison {
  std::string name;
  std::vector<std::vector<Elem>> classes;
  bool agrees = false;
};

struct DedupPartition {
  /// Classes of z with identical (sigma, tau) tables, each ascending, ordered
  /// by smallest member.
  std::vector<std::vector<Elem>> classes;
  std::vector<CriterionComparison> criteria;
  std::vector<std::string> notes;
};

DedupPartition dedup_solutions(const SkewBrace& b, std::span<const Elem> zs);

}  // namespace zbrace
