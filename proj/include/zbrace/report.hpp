#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zbrace/check.hpp"
#include "zbrace/solution.hpp"

namespace zbrace {

/// Selects which tensor-level sections matrix_suite runs.
struct TensorChecks {
  bool braid = true;       // braid relation for rcheck, YBE for r
  bool commute = true;     // coproduct and lift commutation
  bool cocycle = true;
  bool twisted = true;     // twisted matrices and their closed forms
  bool grouplike = true;   // twisted coproducts
  bool defect = true;      // coassociativity defects (informational)
};

/// Admissibility, braid constraints, non-degeneracy, bijectivity,
/// involutivity with its criterion cross-check, the inverse solution, the
/// product identity and the sigma/tau properties, in that order.
std::vector<Section> map_suite(const ZDeformedSolution& s, const SweepOptions& opts);

/// Tensor-level sections in a fixed order: braid, commute, cocycle,
/// twisted, grouplike, defect.
std::vector<Section> matrix_suite(const ZDeformedSolution& s, const SweepOptions& opts,
                                  const TensorChecks& which = {});

struct ReportConfig {
  /// Brace source: a family with its parameter string, a brace file, or the
  /// unbounded odd-fraction brace (family "oddfractions").
  std::string family;
  std::string params;
  std::optional<std::filesystem::path> file;
  /// Labels of the selected z; empty means every admissible z.
  std::vector<std::string> z;
  bool maps = true;
  bool matrices = false;
  bool dedup = true;
  /// Adds the r_1 / Guarnieri-Vendramin comparison to the brace sections.
  bool gv = false;
  bool timings = false;
  SweepOptions sweep;
};

/// Reads a report configuration (see docs/formats.md); relative file paths
/// resolve against `base`. Throws SchemaError.
ReportConfig parse_report_config(const std::string& text, const std::filesystem::path& base = {});

struct Report {
  std::string text;  // serialized JSON document, byte-stable for fixed inputs
  bool ok = true;    // false if any check failed
};

Report run_report(const ReportConfig& config);

/// Human-readable listing used by the command-line tool.
void print_sections(std::ostream& out, const std::vector<Section>& sections,
                    const SkewBrace& b);

}  // namespace zbrace
