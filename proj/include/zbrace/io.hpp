#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "zbrace/brace.hpp"
#include "zbrace/families.hpp"

namespace zbrace {

/// Builds a built-in family instance from its name and parameter string,
/// the same strings a brace carries in BraceInfo:
///   cyclic2n   "n=3"
///   oddmatrix  ""
///   trivial    "group=S3" or "group=Z4"
///   radical    "ring=2z8", "ring=z4" or "ring=zero-Z3"
///   product    "cyclic2n(n=2) x trivial(group=S3)"
/// Throws SchemaError on anything else, plus the family's own errors.
SkewBrace make_family(const std::string& family, const std::string& params,
                      const Limits& limits = {});

/// Canonical display name: family(params), or the family alone.
std::string describe(const BraceInfo& info);

struct BraceFile {
  std::string name;
  SkewBrace brace;
};

/// Reads a brace document (see docs/formats.md). Schema violations throw
/// SchemaError naming the JSON path; table violations throw the group or
/// brace error. A `family` entry is kept only if regenerating the family
/// reproduces the tables exactly.
BraceFile parse_brace(std::istream& in);
BraceFile parse_brace_text(const std::string& text);
BraceFile read_brace_file(const std::filesystem::path& path);

/// Canonical form: fixed key order, one table row per line.
void write_brace(const BraceFile& file, std::ostream& out);
void write_brace(const SkewBrace& b, std::ostream& out);
std::string brace_to_text(const BraceFile& file);
void write_brace_file(const BraceFile& file, const std::filesystem::path& path);

}  // namespace zbrace
