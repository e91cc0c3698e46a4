#include "zbrace/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "zbrace/error.hpp"

namespace zbrace {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "zbrace-brace/1";

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::SchemaError, path + ": " + what);
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(' ');
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(' ') - first + 1);
}

// "key=value" -> value, SchemaError otherwise.
std::string param_value(const std::string& params, const std::string& key) {
  const std::string prefix = key + "=";
  if (params.rfind(prefix, 0) != 0) {
    schema("params", "expected '" + prefix + "...', got '" + params + "'");
  }
  return params.substr(prefix.size());
}

unsigned parse_unsigned(const std::string& text, const std::string& what) {
  if (text.empty() || text.size() > 9 || text.find_first_not_of("0123456789") != std::string::npos) {
    schema("params", "bad " + what + " '" + text + "'");
  }
  return static_cast<unsigned>(std::stoul(text));
}

FiniteGroup named_group(const std::string& name) {
  if (name.size() >= 2 && name[0] == 'S') return symmetric_group(parse_unsigned(name.substr(1), "degree"));
  if (name.size() >= 2 && name[0] == 'Z') {
    const unsigned k = parse_unsigned(name.substr(1), "order");
    if (k == 0) schema("params", "group Z0");
    return cyclic_group(k);
  }
  schema("params", "unknown group '" + name + "' (expected S<d> or Z<k>)");
}

RingTables named_ring(const std::string& name) {
  if (name.rfind("zero-", 0) == 0) return zero_ring(named_group(name.substr(5)));
  const auto z = name.find('z');
  if (z == std::string::npos) schema("params", "unknown ring '" + name + "'");
  const unsigned step = z == 0 ? 1 : parse_unsigned(name.substr(0, z), "step");
  const unsigned modulus = parse_unsigned(name.substr(z + 1), "modulus");
  if (modulus == 0 || step == 0) schema("params", "unknown ring '" + name + "'");
  return residue_ring(modulus, step);
}

// Splits "a(..) x b(..)" at top-level " x ".
std::vector<std::string> split_factors(const std::string& params) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (params[i] == '(') ++depth;
    if (params[i] == ')') --depth;
    if (depth == 0 && params.compare(i, 3, " x ") == 0) {
      out.push_back(trim(params.substr(start, i - start)));
      start = i + 3;
      i += 2;
    }
  }
  out.push_back(trim(params.substr(start)));
  return out;
}

SkewBrace factor(const std::string& text, const Limits& limits) {
  const auto open = text.find('(');
  if (open == std::string::npos) return make_family(text, "", limits);
  if (text.back() != ')') schema("params", "unbalanced factor '" + text + "'");
  return make_family(text.substr(0, open), text.substr(open + 1, text.size() - open - 2), limits);
}

}  // namespace

SkewBrace make_family(const std::string& family, const std::string& params, const Limits& limits) {
  if (family == "cyclic2n") return cyclic_unit_brace(parse_unsigned(param_value(params, "n"), "n"), limits);
  if (family == "oddmatrix") {
    if (!params.empty()) schema("params", "oddmatrix takes no parameters");
    return odd_matrix_brace();
  }
  if (family == "trivial") {
    const std::string name = param_value(params, "group");
    return trivial_skew_brace(named_group(name), name);
  }
  if (family == "radical") {
    const std::string name = param_value(params, "ring");
    return from_radical_ring(named_ring(name), name);
  }
  if (family == "product") {
    const auto parts = split_factors(params);
    if (parts.size() < 2) schema("params", "product needs 'A x B', got '" + params + "'");
    SkewBrace acc = factor(parts[0], limits);
    for (std::size_t i = 1; i < parts.size(); ++i) acc = product_brace(acc, factor(parts[i], limits), limits);
    return acc;
  }
  schema("family", "unknown family '" + family + "'");
}

std::string describe(const BraceInfo& info) {
  return info.params.empty() ? info.family : info.family + "(" + info.params + ")";
}

BraceFile parse_brace_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    schema("$", std::string("not a JSON document: ") + e.what());
  }
  if (!doc.is_object()) schema("$", "expected an object");

  if (doc.contains("format") && doc["format"] != kFormat) {
    schema("$.format", std::string("expected \"") + kFormat + "\"");
  }
  std::string name = "custom";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) schema("$.name", "expected a string");
    name = doc["name"].get<std::string>();
  }
  if (!doc.contains("order") || !doc["order"].is_number_unsigned() || doc["order"].get<std::uint64_t>() == 0 ||
      doc["order"].get<std::uint64_t>() > 65536) {
    schema("$.order", "expected an integer in [1, 65536]");
  }
  const auto n = doc["order"].get<Elem>();

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const json& l = doc["labels"];
    if (!l.is_array() || l.size() != n) schema("$.labels", "expected " + std::to_string(n) + " strings");
    for (std::size_t i = 0; i < n; ++i) {
      if (!l[i].is_string()) schema("$.labels[" + std::to_string(i) + "]", "expected a string");
      labels.push_back(l[i].get<std::string>());
    }
  }

  auto table = [&](const char* key) {
    const std::string path = std::string("$.") + key;
    if (!doc.contains(key)) schema(path, "missing");
    const json& t = doc[key];
    if (!t.is_array() || t.size() != n) schema(path, "expected " + std::to_string(n) + " rows");
    std::vector<Elem> flat;
    flat.reserve(std::size_t{n} * n);
    for (std::size_t r = 0; r < n; ++r) {
      const std::string rp = path + "[" + std::to_string(r) + "]";
      if (!t[r].is_array() || t[r].size() != n) schema(rp, "expected " + std::to_string(n) + " entries");
      for (std::size_t c = 0; c < n; ++c) {
        const json& v = t[r][c];
        if (!v.is_number_unsigned() || v.get<std::uint64_t>() > 0xffffffffULL) {
          schema(rp + "[" + std::to_string(c) + "]", "expected a non-negative index");
        }
        flat.push_back(v.get<Elem>());
      }
    }
    return flat;
  };
  auto add = validate_group(n, table("add"), labels);
  auto mul = validate_group(n, table("mul"), labels);
  SkewBrace b = make_skew_brace(std::move(add), std::move(mul));

  if (doc.contains("family")) {
    const json& f = doc["family"];
    if (!f.is_object() || !f.contains("name") || !f["name"].is_string() ||
        (f.contains("params") && !f["params"].is_string())) {
      schema("$.family", "expected {\"name\": string, \"params\": string}");
    }
    const std::string params = f.value("params", "");
    try {
      SkewBrace regen = make_family(f["name"].get<std::string>(), params);
      if (regen.add().same_table(b.add()) && regen.mul().same_table(b.mul()) &&
          regen.labels() == b.labels()) {
        b = b.with_info(regen.info());
      }
    } catch (const Error&) {
      // An unknown or unbuildable family leaves the brace custom.
    }
  }
  return BraceFile{std::move(name), std::move(b)};
}

BraceFile parse_brace(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_brace_text(buf.str());
}

BraceFile read_brace_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SchemaError, path.string() + ": cannot open");
  return parse_brace(in);
}

void write_brace(const BraceFile& file, std::ostream& out) {
  const SkewBrace& b = file.brace;
  const Elem n = b.order();
  out << "{\n";
  out << "  \"format\": " << json(kFormat).dump() << ",\n";
  out << "  \"name\": " << json(file.name).dump() << ",\n";
  if (b.info().family != "custom") {
    out << "  \"family\": {\"name\": " << json(b.info().family).dump()
        << ", \"params\": " << json(b.info().params).dump() << "},\n";
  }
  out << "  \"order\": " << n << ",\n";
  out << "  \"labels\": " << json(b.labels()).dump(-1, ' ', false) << ",\n";
  auto rows = [&](const char* key, const FiniteGroup& g, bool last) {
    out << "  \"" << key << "\": [\n";
    for (Elem r = 0; r < n; ++r) {
      out << "    [";
      for (Elem c = 0; c < n; ++c) out << (c ? ", " : "") << g.op(r, c);
      out << (r + 1 < n ? "],\n" : "]\n");
    }
    out << (last ? "  ]\n" : "  ],\n");
  };
  rows("add", b.add(), false);
  rows("mul", b.mul(), true);
  out << "}\n";
}

void write_brace(const SkewBrace& b, std::ostream& out) {
  write_brace(BraceFile{describe(b.info()), b}, out);
}

std::string brace_to_text(const BraceFile& file) {
  std::ostringstream out;
  write_brace(file, out);
  return out.str();
}

void write_brace_file(const BraceFile& file, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::SchemaError, path.string() + ": cannot write");
  write_brace(file, out);
}

}  // namespace zbrace
