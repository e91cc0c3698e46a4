#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zbrace/check.hpp"
#include "zbrace/perm.hpp"
#include "zbrace/solution.hpp"

namespace zbrace {

/// The matrix sum over x, y of e_{x, sigma_x(y)} (x) e_{y, tau_y(x)}: its
/// entry in row (x, y) sits in column (sigma_x(y), tau_y(x)).
PermMatrix rcheck_matrix(const ZDeformedSolution& s);

/// The flip (x, y) -> (y, x).
PermMatrix permutation_P(std::uint32_t n);

/// r = P * rcheck.
PermMatrix r_matrix(const ZDeformedSolution& s);

/// rcheck_12 rcheck_23 rcheck_12 = rcheck_23 rcheck_12 rcheck_23.
Check braid_relation_check(const PermMatrix& rcheck, const SweepOptions& opts,
                           std::string name = "braid_relation");
/// r_12 r_13 r_23 = r_23 r_13 r_12.
Check ybe_check(const PermMatrix& r, const SweepOptions& opts);

/// Arity-3 members of the twist bundle.
enum class Lift3 { F_1_23, Fstar_12_3, Fhatstar_1_23, Fhat_12_3, F123, Fhat123 };

std::string_view to_string(Lift3 m);

/// F = sum e_{x,x} (x) V_x and Fhat = sum W_y (x) e_{y,y} with their
/// per-element families, coproducts and arity-3 lifts.
///
/// F and Fhat are materialised; the families are built on demand and the
/// arity-3 members are evaluated pointwise, so large carriers never hold a
/// whole n^3 table unless one is exported.
class TwistBundle {
 public:
  explicit TwistBundle(ZDeformedSolution s);

  const ZDeformedSolution& solution() const noexcept { return s_; }
  std::uint32_t dim() const noexcept { return s_.order(); }

  const PermMatrix& F() const noexcept { return F_; }
  const PermMatrix& Fhat() const noexcept { return Fhat_; }

  /// y -> sigma_x(y)
  PermMatrix V(Elem x) const;
  /// eta -> tau_y(eta)
  PermMatrix W(Elem y) const;
  /// (x, y) -> (sigma_eta(x), sigma_{tau_x(eta)}(y))
  PermMatrix DeltaV(Elem eta) const;
  /// (eta, x) -> (tau_{sigma_x(y)}(eta), tau_y(x))
  PermMatrix DeltaW(Elem y) const;

  /// Image of the basis column (eta, x, y) under an arity-3 member.
  std::uint64_t apply(Lift3 member, std::uint64_t col) const noexcept;
  PermMatrix materialize(Lift3 member) const;

  /// sigma_x^-1(v) and tau_y^-1(v).
  Elem sigma_inv(Elem x, Elem v) const noexcept { return sigma_inv_[std::size_t{x} * dim() + v]; }
  Elem tau_inv(Elem y, Elem v) const noexcept { return tau_inv_[std::size_t{y} * dim() + v]; }

 private:
  ZDeformedSolution s_;
  PermMatrix F_;
  PermMatrix Fhat_;
  std::vector<Elem> sigma_inv_;
  std::vector<Elem> tau_inv_;
};

/// Delta(V_x) and Delta(W_x) commute with rcheck for every x.
Section coproduct_commutation_check(const TwistBundle& bundle, const PermMatrix& rcheck,
                                    const SweepOptions& opts);

/// rcheck_12 F*_{12,3} = F*_{12,3} rcheck_12, rcheck_23 F_{1,23} = F_{1,23} rcheck_23,
/// rcheck_12 Fhat_{12,3} = Fhat_{12,3} rcheck_12, rcheck_23 Fhat*_{1,23} = Fhat*_{1,23} rcheck_23.
Section lift_commutation_check(const TwistBundle& bundle, const PermMatrix& rcheck,
                               const SweepOptions& opts);

/// F_12 F*_{12,3} = F_23 F_{1,23} = F_123 and Fhat_12 Fhat_{12,3} = Fhat_23 Fhat*_{1,23}
/// = Fhat_123, plus F_{1,23} = (id (x) Delta) F and Fhat_{12,3} = (Delta (x) id) Fhat.
Section cocycle_check(const TwistBundle& bundle, const SweepOptions& opts);

/// F rcheck F^-1 and Fhat rcheck Fhat^-1 against their closed forms.
PermMatrix twisted_rcheck_F(const TwistBundle& bundle, const PermMatrix& rcheck);
PermMatrix twisted_rcheck_Fhat(const TwistBundle& bundle, const PermMatrix& rcheck);

/// Closed forms of the twisted matrices, or nullopt if the displayed sums are
/// not permutation matrices.
std::optional<PermMatrix> closed_form_rF(const ZDeformedSolution& s);
std::optional<PermMatrix> closed_form_rFhat(const ZDeformedSolution& s);

/// Conjugates equal the closed forms and satisfy the braid relation; in
/// the involutive case both equal P.
Section twisted_solution_check(const TwistBundle& bundle, const PermMatrix& rcheck,
                               const SweepOptions& opts);

/// Delta_F(V_x) = V_x (x) V_x, Delta_Fhat(W_y) = W_y (x) W_y, and the mixed
/// closed forms of Delta_F(W_y) and Delta_Fhat(V_eta).
Section twisted_coproduct_check(const TwistBundle& bundle);

struct Defect {
  std::string name;
  SparseIntMatrix difference;
  /// Smallest basis column where the two sides differ.
  std::optional<std::uint64_t> first_column;
};

/// (id (x) Delta) Delta(V_eta) - (Delta (x) id) Delta(V_eta).
Defect coassociativity_defect(const TwistBundle& bundle, Elem eta);
/// (Delta (x) id) r - r_13 r_23.
Defect r_left_coproduct_defect(const TwistBundle& bundle);
/// (id (x) Delta) r - r_13 r_12.
Defect r_right_coproduct_defect(const TwistBundle& bundle);

/// The three comparisons above for every eta, reported as informational
/// checks carrying the defect size and first differing column.
Section coassociativity_section(const TwistBundle& bundle, const SweepOptions& opts);

}  // namespace zbrace
