#include "zbrace/export.hpp"

#include <ostream>

#include "zbrace/error.hpp"
#include "zbrace/tensor.hpp"

namespace zbrace {

Elem resolve_element(const SkewBrace& b, const std::string& text) {
  if (auto e = find_label(b.add(), text)) return *e;
  if (text.size() > 1 && text[0] == '#' &&
      text.find_first_not_of("0123456789", 1) == std::string::npos && text.size() < 12) {
    const auto k = std::stoull(text.substr(1));
    if (k < b.order()) return static_cast<Elem>(k);
  }
  throw Error(ErrorKind::UnknownObject, "no element '" + text + "' in the carrier");
}

std::vector<std::string> exportable_objects() {
  return {"rcheck", "r",        "P",        "F",        "Fhat",       "rF",
          "rFhat",  "F123",     "Fhat123",  "V:x",      "W:y",        "DeltaV:x",
          "DeltaW:y", "defect:V:x", "defect:rleft", "defect:rright"};
}

SparseIntMatrix export_object(const std::string& name, const ZDeformedSolution& s) {
  const auto colon = name.find(':');
  const std::string head = name.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
  auto element = [&] { return resolve_element(s.brace(), arg); };

  if (colon == std::string::npos) {
    if (head == "P") return to_sparse(permutation_P(s.order()));
    if (head == "rcheck") return to_sparse(rcheck_matrix(s));
    if (head == "r") return to_sparse(r_matrix(s));
    const TwistBundle t(s);
    if (head == "F") return to_sparse(t.F());
    if (head == "Fhat") return to_sparse(t.Fhat());
    if (head == "rF") return to_sparse(twisted_rcheck_F(t, rcheck_matrix(s)));
    if (head == "rFhat") return to_sparse(twisted_rcheck_Fhat(t, rcheck_matrix(s)));
    if (head == "F123") return to_sparse(t.materialize(Lift3::F123));
    if (head == "Fhat123") return to_sparse(t.materialize(Lift3::Fhat123));
  } else if (head == "defect") {
    const TwistBundle t(s);
    if (arg == "rleft") return r_left_coproduct_defect(t).difference;
    if (arg == "rright") return r_right_coproduct_defect(t).difference;
    if (arg.rfind("V:", 0) == 0) {
      return coassociativity_defect(t, resolve_element(s.brace(), arg.substr(2))).difference;
    }
  } else {
    const TwistBundle t(s);
    if (head == "V") return to_sparse(t.V(element()));
    if (head == "W") return to_sparse(t.W(element()));
    if (head == "DeltaV") return to_sparse(t.DeltaV(element()));
    if (head == "DeltaW") return to_sparse(t.DeltaW(element()));
  }
  throw Error(ErrorKind::UnknownObject, "unknown object '" + name + "'");
}

void export_matrix(const std::string& name, const ZDeformedSolution& s, std::ostream& out) {
  write_coordinate(out, export_object(name, s));
}

}  // namespace zbrace
