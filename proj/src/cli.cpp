#include "zbrace/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "zbrace/error.hpp"
#include "zbrace/export.hpp"
#include "zbrace/io.hpp"
#include "zbrace/report.hpp"

namespace zbrace {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Elem> select_z(const SkewBrace& b, const std::string& spec) {
  if (spec == "all") return admissible_z(b);
  std::vector<Elem> out;
  for (const auto& t : split_list(spec)) out.push_back(resolve_element(b, t));
  if (out.empty()) throw Error(ErrorKind::SchemaError, "--z: empty selection");
  return out;
}

std::string braces(const SkewBrace& b, const std::vector<Elem>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + b.label(v[i]);
  return s + "}";
}

bool all_ok(const std::vector<Section>& v) {
  return std::ranges::all_of(v, [](const Section& s) { return s.ok(); });
}

// Writes to `path`, or to `out` when the path is empty or "-".
template <class Fn>
void emit(const std::string& path, std::ostream& out, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::SchemaError, "-o: cannot write " + path);
  fn(file);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of skew braces and z-deformed braid solutions", "zbrace"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "zbrace 1.0.0");

  SweepOptions opts = sweep_options_from_env();
  app.add_option("--budget", opts.budget, "largest point space swept exhaustively");
  app.add_option("--samples", opts.samples, "sample count above the budget");
  app.add_option("--seed", opts.seed, "sampling seed");
  app.add_option("--threads", opts.threads, "worker threads")->check(CLI::PositiveNumber);

  std::string file, z = "all", output, level = "all", checks = "commute,cocycle,twisted,grouplike,defect";
  std::string family, params, group, ring, factors, name, object, config;
  unsigned n = 0;
  bool dedup = false, timings = false, gv = false;

  auto* make = app.add_subcommand("make", "write a built-in family instance as a brace file");
  make->add_option("--family", family, "family name")
      ->required()
      ->check(CLI::IsMember({"cyclic2n", "oddmatrix", "radical", "trivial", "product"}));
  make->add_option("--n", n, "cyclic2n exponent");
  make->add_option("--group", group, "trivial: S<d> or Z<k>");
  make->add_option("--ring", ring, "radical: <s>z<m> or zero-Z<k>");
  make->add_option("--factors", factors, "product: 'cyclic2n(n=2) x trivial(group=S3)'");
  make->add_option("--name", name, "document name");
  make->add_option("-o,--output", output, "output file (default stdout)");

  auto* validate = app.add_subcommand("validate", "check a brace file");
  validate->add_option("file", file)->required();

  auto* soc = app.add_subcommand("socle", "print Soc(B)");
  soc->add_option("file", file)->required();

  auto* solve = app.add_subcommand("solve", "build the solutions r_z");
  solve->add_option("file", file)->required();
  solve->add_option("--z", z, "all or a comma-separated label list");
  solve->add_flag("--dedup", dedup, "partition z by identical solutions");

  auto* verify = app.add_subcommand("verify", "run the map and matrix suites");
  verify->add_option("file", file)->required();
  verify->add_option("--z", z, "all or a comma-separated label list");
  verify->add_option("--level", level)->check(CLI::IsMember({"maps", "matrices", "all"}));
  verify->add_flag("--gv", gv, "also compare r_1 with the Guarnieri-Vendramin solution");

  auto* twist = app.add_subcommand("twist", "run selected twist checks");
  twist->add_option("file", file)->required();
  twist->add_option("--z", z, "all or a comma-separated label list");
  twist->add_option("--check", checks, "comma list of commute, cocycle, twisted, grouplike, defect");

  auto* exp = app.add_subcommand("export", "write an operator in coordinate form");
  exp->add_option("file", file)->required();
  exp->add_option("--z", z, "one label")->required();
  exp->add_option("--object", object, "rcheck, r, P, F, Fhat, rF, rFhat, V:x, ...")->required();
  exp->add_option("-o,--output", output, "output file (default stdout)");

  auto* rep = app.add_subcommand("report", "run a configured verification report");
  rep->add_option("--config", config, "configuration file")->required();
  rep->add_option("-o,--output", output, "output file (default stdout)");
  rep->add_flag("--timings", timings, "include elapsed seconds per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*make) {
      std::string p = params;
      if (family == "cyclic2n") {
        if (!n) throw Error(ErrorKind::SchemaError, "--n: required for cyclic2n");
        p = "n=" + std::to_string(n);
      } else if (family == "trivial") {
        if (group.empty()) throw Error(ErrorKind::SchemaError, "--group: required for trivial");
        p = "group=" + group;
      } else if (family == "radical") {
        if (ring.empty()) throw Error(ErrorKind::SchemaError, "--ring: required for radical");
        p = "ring=" + ring;
      } else if (family == "product") {
        if (factors.empty()) throw Error(ErrorKind::SchemaError, "--factors: required for product");
        p = factors;
      }
      SkewBrace b = make_family(family, p);
      BraceFile doc{name.empty() ? describe(b.info()) : name, std::move(b)};
      emit(output, out, [&](std::ostream& o) { write_brace(doc, o); });
      return 0;
    }
    if (*rep) {
      std::ifstream in(config);
      if (!in) throw Error(ErrorKind::SchemaError, "--config: cannot open " + config);
      std::ostringstream text;
      text << in.rdbuf();
      ReportConfig cfg = parse_report_config(text.str(), std::filesystem::path(config).parent_path());
      cfg.timings = cfg.timings || timings;
      const Report r = run_report(cfg);
      emit(output, out, [&](std::ostream& o) { o << r.text; });
      return r.ok ? 0 : 1;
    }

    const BraceFile doc = read_brace_file(file);
    const SkewBrace& b = doc.brace;

    if (*validate) {
      out << doc.name << ": order " << b.order() << ", family " << describe(b.info()) << "\n"
          << "left brace: " << (b.is_left_brace() ? "yes" : "no")
          << ", two-sided: " << (b.is_two_sided() ? "yes" : "no") << "\n";
      const std::vector<Section> laws{brace_law_checks(b, opts)};
      print_sections(out, laws, b);
      return all_ok(laws) ? 0 : 1;
    }
    if (*soc) {
      out << braces(b, socle(b)) << "\n";
      return 0;
    }
    const std::vector<Elem> zs = select_z(b, z);
    if (*solve) {
      for (Elem e : zs) {
        const auto s = build_solution(b, e);
        const Involutivity inv = is_involutive(s);
        out << "z=" << b.label(e) << ": " << (inv.involutive ? "involutive" : "not involutive") << "\n";
      }
      if (dedup) {
        const DedupPartition d = dedup_solutions(b, zs);
        out << "classes:\n";
        for (const auto& c : d.classes) out << "  " << braces(b, c) << "\n";
        for (const auto& c : d.criteria) {
          out << "criterion " << c.name << ": " << (c.agrees ? "agrees" : "differs") << "\n";
        }
        for (const auto& note : d.notes) out << note << "\n";
      }
      return 0;
    }
    if (*exp) {
      if (zs.size() != 1) throw Error(ErrorKind::SchemaError, "--z: export takes exactly one z");
      const auto s = build_solution(b, zs.front());
      const SparseIntMatrix m = export_object(object, s);
      emit(output, out, [&](std::ostream& o) { write_coordinate(o, m); });
      return 0;
    }

    TensorChecks which;
    if (*twist) {
      which = TensorChecks{false, false, false, false, false, false};
      for (const auto& c : split_list(checks)) {
        if (c == "commute") which.commute = true;
        else if (c == "cocycle") which.cocycle = true;
        else if (c == "twisted") which.twisted = true;
        else if (c == "grouplike") which.grouplike = true;
        else if (c == "defect") which.defect = true;
        else throw Error(ErrorKind::SchemaError, "--check: unknown check '" + c + "'");
      }
    }
    bool ok = true;
    if (gv) {
      const std::vector<Section> secs{gv_correspondence_check(b)};
      print_sections(out, secs, b);
      ok = all_ok(secs);
    }
    for (Elem e : zs) {
      const auto s = build_solution(b, e);
      std::vector<Section> secs;
      if (*verify && level != "matrices") secs = map_suite(s, opts);
      if (*twist || level != "maps") {
        auto more = matrix_suite(s, opts, which);
        secs.insert(secs.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
      }
      out << "== z=" << b.label(e) << "\n";
      print_sections(out, secs, b);
      ok = ok && all_ok(secs);
    }
    return ok ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what();
    if (!e.witness().empty()) {
      err << " (witness:";
      for (auto w : e.witness()) err << " " << w;
      err << ")";
    }
    err << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace zbrace
