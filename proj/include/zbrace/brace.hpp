#pragma once

#include <string>
#include <vector>

#include "zbrace/group.hpp"

namespace zbrace {

/// Where a brace came from. Families that have closed-form element values
/// (cyclic units, odd matrices) are recognised by `family`.
struct BraceInfo {
  std::string family = "custom";
  std::string params;
  unsigned exponent = 0;  // cyclic2n only: carrier is U(Z/2^exponent)

  bool operator==(const BraceInfo&) const = default;
};

/// A finite left skew brace (B, +, o) on a shared index carrier.
///
/// Validated on construction: both groups share their identity and left
/// distributivity a o (b + c) = a o b - a + a o c holds everywhere.
class SkewBrace {
 public:
  const FiniteGroup& add() const noexcept { return add_; }
  const FiniteGroup& mul() const noexcept { return mul_; }
  const BraceInfo& info() const noexcept { return info_; }

  Elem order() const noexcept { return add_.order(); }
  Elem identity() const noexcept { return add_.identity(); }
  bool is_left_brace() const noexcept { return left_brace_; }
  bool is_two_sided() const noexcept { return two_sided_; }

  Elem plus(Elem a, Elem b) const noexcept { return add_.op(a, b); }
  Elem neg(Elem a) const noexcept { return add_.inv(a); }
  Elem minus(Elem a, Elem b) const noexcept { return add_.op(a, add_.inv(b)); }
  /// a - b + c in the additive group.
  Elem heap(Elem a, Elem b, Elem c) const noexcept { return plus(minus(a, b), c); }
  Elem circ(Elem a, Elem b) const noexcept { return mul_.op(a, b); }
  Elem circ_inv(Elem a) const noexcept { return mul_.inv(a); }

  const std::string& label(Elem a) const { return add_.label(a); }
  const std::vector<std::string>& labels() const noexcept { return add_.labels(); }

  SkewBrace with_info(BraceInfo info) const;

 private:
  SkewBrace(FiniteGroup add, FiniteGroup mul, BraceInfo info, bool left, bool two_sided)
      : add_(std::move(add)), mul_(std::move(mul)), info_(std::move(info)),
        left_brace_(left), two_sided_(two_sided) {}

  FiniteGroup add_;
  FiniteGroup mul_;
  BraceInfo info_;
  bool left_brace_;
  bool two_sided_;

  friend SkewBrace make_skew_brace(FiniteGroup, FiniteGroup, BraceInfo);
};

/// Throws IdentityMismatch or NotLeftDistributive (witness a,b,c).
SkewBrace make_skew_brace(FiniteGroup add, FiniteGroup mul, BraceInfo info = {});

struct Limits {
  Elem carrier_cap = 4096;
  unsigned max_exponent = 16;
};

/// Soc(B): every b with a o b = a + b for all a, in ascending order.
std::vector<Elem> socle(const SkewBrace& b);

/// Whether (a - b + c) o z = a o z - b o z + c o z for all a, b, c.
bool is_admissible(const SkewBrace& b, Elem z);

/// All admissible z, ascending. The full carrier for two-sided braces.
std::vector<Elem> admissible_z(const SkewBrace& b);

}  // namespace zbrace
