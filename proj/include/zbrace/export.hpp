#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zbrace/perm.hpp"
#include "zbrace/solution.hpp"

namespace zbrace {

/// Resolves an element by label, or "#k" for index k; throws UnknownObject.
Elem resolve_element(const SkewBrace& b, const std::string& text);

/// Object names accepted by export_matrix.
std::vector<std::string> exportable_objects();

/// Builds the named operator for s:
///   rcheck r P F Fhat rF rFhat F123 Fhat123 V:x W:y DeltaV:x DeltaW:y
/// and the defect matrices defect:V:x, defect:rleft, defect:rright.
/// Throws UnknownObject.
SparseIntMatrix export_object(const std::string& name, const ZDeformedSolution& s);

/// Writes export_object(name, s) in coordinate form.
void export_matrix(const std::string& name, const ZDeformedSolution& s, std::ostream& out);

}  // namespace zbrace
