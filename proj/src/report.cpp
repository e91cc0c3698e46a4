#include "zbrace/report.hpp"

#include <algorithm>
#include <ostream>

#include "json.hpp"
#include "zbrace/error.hpp"
#include "zbrace/export.hpp"
#include "zbrace/io.hpp"
#include "zbrace/lazy_brace.hpp"
#include "zbrace/tensor.hpp"

namespace zbrace {

namespace {

using ojson = nlohmann::ordered_json;
using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

std::string join_labels(const SkewBrace& b, const std::vector<std::uint64_t>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out += (i ? ", " : "") + (w[i] < b.order() ? b.label(static_cast<Elem>(w[i])) : "#" + std::to_string(w[i]));
  }
  return out;
}

Status section_status(const Section& s) {
  if (!s.ok()) return Status::fail;
  const bool sampled = std::ranges::any_of(s.checks, [](const Check& c) { return c.status == Status::sampled; });
  return sampled ? Status::sampled : Status::pass;
}

ojson check_json(const Check& c, const SkewBrace* b, bool timings) {
  ojson j;
  j["name"] = c.name;
  j["status"] = std::string(to_string(c.status));
  j["points"] = c.points;
  if (!c.witness.empty()) {
    j["witness"] = c.witness;
    if (b) {
      ojson labels = ojson::array();
      for (auto w : c.witness) {
        labels.push_back(w < b->order() ? b->label(static_cast<Elem>(w)) : "#" + std::to_string(w));
      }
      j["witness_labels"] = labels;
    }
  }
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (!c.notes.empty()) j["notes"] = c.notes;
  if (timings) j["seconds"] = c.seconds;
  return j;
}

ojson section_json(const Section& s, const SkewBrace* b, bool timings) {
  ojson j;
  j["name"] = s.name;
  j["status"] = std::string(to_string(section_status(s)));
  j["checks"] = ojson::array();
  for (const auto& c : s.checks) j["checks"].push_back(check_json(c, b, timings));
  return j;
}

ojson sections_json(const std::vector<Section>& v, const SkewBrace* b, bool timings) {
  ojson out = ojson::array();
  for (const auto& s : v) out.push_back(section_json(s, b, timings));
  return out;
}

ojson labels_json(const SkewBrace& b, const std::vector<Elem>& v) {
  ojson out = ojson::array();
  for (Elem e : v) out.push_back(b.label(e));
  return out;
}

struct Tally {
  std::uint64_t checks = 0, failed = 0, sampled = 0;
  void add(const std::vector<Section>& v) {
    for (const auto& s : v) {
      for (const auto& c : s.checks) {
        ++checks;
        failed += c.status == Status::fail;
        sampled += c.status == Status::sampled;
      }
    }
  }
};

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::SchemaError, path + ": " + what);
}

std::uint64_t get_count(const json& doc, const char* key, std::uint64_t fallback) {
  if (!doc.contains(key)) return fallback;
  if (!doc[key].is_number_unsigned()) schema(std::string("$.") + key, "expected a non-negative integer");
  return doc[key].get<std::uint64_t>();
}

std::string get_string(const json& doc, const char* key) {
  if (!doc[key].is_string()) schema(std::string("$.") + key, "expected a string");
  return doc[key].get<std::string>();
}

Report lazy_report(const ReportConfig& cfg) {
  const auto lb = odd_fractions();
  if (cfg.z.empty()) schema("$.z", "the odd-fraction brace needs an explicit z list");
  std::vector<Rational> zs;
  for (const auto& t : cfg.z) zs.push_back(parse_odd_fraction(t));

  ojson doc;
  doc["artifact"] = "zbrace";
  doc["version"] = kVersion;
  doc["options"] = {{"samples", cfg.sweep.samples}, {"seed", cfg.sweep.seed}};
  doc["brace"] = {{"name", lb.name}, {"family", "oddfractions"}, {"order", "infinite"}};
  Tally tally;
  doc["solutions"] = ojson::array();
  for (const auto& z : zs) {
    std::vector<Section> secs{sampled_verify_lazy(lb, z, cfg.sweep.samples, cfg.sweep.seed)};
    tally.add(secs);
    doc["solutions"].push_back({{"z", lb.show(z)}, {"sections", sections_json(secs, nullptr, cfg.timings)}});
  }
  if (cfg.dedup) {
    Section sec{"distinguishing_elements", {}};
    for (std::size_t i = 0; i < zs.size(); ++i) {
      for (std::size_t k = i + 1; k < zs.size(); ++k) {
        const auto a = distinguishing_element(lb, zs[i], zs[k]);
        const std::string name = "z=" + lb.show(zs[i]) + " vs w=" + lb.show(zs[k]);
        const bool same = lb.equal(zs[i], zs[k]);
        Check c = make_check(name, same ? !a : a.has_value(), 1000);
        c.detail = a ? "-a o z + z != -a o w + w at a = " + lb.show(*a) : "no distinguishing element";
        sec.add(std::move(c));
      }
    }
    std::vector<Section> secs{sec};
    tally.add(secs);
    doc["dedup"] = section_json(sec, nullptr, cfg.timings);
  }
  doc["summary"] = {{"checks", tally.checks}, {"failed", tally.failed}, {"sampled", tally.sampled},
                    {"status", tally.failed ? "fail" : "pass"}};
  return Report{doc.dump(2) + "\n", tally.failed == 0};
}

}  // namespace

std::vector<Section> map_suite(const ZDeformedSolution& s, const SweepOptions& opts) {
  const SkewBrace& b = s.brace();
  const std::uint64_t n = b.order();
  std::vector<Section> out;

  Section adm{"admissibility", {}};
  adm.add(make_check("z_right_distributive", is_admissible(b, s.z()), n * n));
  out.push_back(std::move(adm));

  out.push_back(verify_braid_constraints(s, opts));

  Section nd{"nondegeneracy", {}};
  nd.add(nondegeneracy_check(s));
  nd.add(transpose_identity_check(s));
  out.push_back(std::move(nd));

  Section inv{"involutivity", {}};
  try {
    const Involutivity r = is_involutive(s);
    Check c = make_check("involutive_matches_criterion", true, n * n,
                         r.involutive ? "involutive" : "not involutive");
    if (!r.involutive) {
      std::vector<std::uint64_t> w(r.witness.begin(), r.witness.end());
      c.detail += "; r(r(x, y)) != (x, y) at (x, y, r(x, y), r(r(x, y))) = (" + join_labels(b, w) + ")";
    }
    inv.add(std::move(c));
    if (b.is_left_brace()) {
      const auto soc = socle(b);
      const bool in_socle = std::ranges::binary_search(soc, s.z());
      inv.add(make_check("involutive_iff_z_in_socle", r.involutive == in_socle, n * n,
                         in_socle ? "z in Soc(B)" : "z not in Soc(B)"));
    }
  } catch (const Error& e) {
    Check c = make_check("involutive_matches_criterion", false, n * n, e.what());
    c.witness = e.witness();
    inv.add(std::move(c));
  }
  inv.add(make_check("sigma_equals_rump_iff_condition",
                     sigma_equals_rump(b, s.z()) == rump_condition(b, s.z()), n * n));
  out.push_back(std::move(inv));

  out.push_back(inverse_check(s));

  Section prod{"product_identity", {}};
  prod.add(product_identity_check(s));
  out.push_back(std::move(prod));

  out.push_back(proposition_checks(s, opts));
  return out;
}

std::vector<Section> matrix_suite(const ZDeformedSolution& s, const SweepOptions& opts,
                                  const TensorChecks& which) {
  std::vector<Section> out;
  const PermMatrix rc = rcheck_matrix(s);
  if (which.braid) {
    Section sec{"matrix_braid", {}};
    sec.add(braid_relation_check(rc, opts, "rcheck_braid_relation"));
    sec.add(ybe_check(permutation_P(s.order()) * rc, opts));
    out.push_back(std::move(sec));
  }
  const bool any_bundle = which.commute || which.cocycle || which.twisted || which.grouplike || which.defect;
  if (!any_bundle) return out;
  const TwistBundle bundle(s);
  if (which.commute) {
    out.push_back(coproduct_commutation_check(bundle, rc, opts));
    out.push_back(lift_commutation_check(bundle, rc, opts));
  }
  if (which.cocycle) out.push_back(cocycle_check(bundle, opts));
  if (which.twisted) out.push_back(twisted_solution_check(bundle, rc, opts));
  if (which.grouplike) out.push_back(twisted_coproduct_check(bundle));
  if (which.defect) out.push_back(coassociativity_section(bundle, opts));
  return out;
}

ReportConfig parse_report_config(const std::string& text, const std::filesystem::path& base) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    schema("$", std::string("not a JSON document: ") + e.what());
  }
  if (!doc.is_object()) schema("$", "expected an object");
  static const std::vector<std::string> known{"family", "params", "n", "group", "ring", "factors",
                                              "file", "z", "level", "dedup", "gv", "timings",
                                              "budget", "samples", "seed", "threads"};
  for (const auto& [key, _] : doc.items()) {
    if (std::ranges::find(known, key) == known.end()) schema("$." + key, "unknown key");
  }

  ReportConfig cfg;
  cfg.sweep = sweep_options_from_env();
  if (doc.contains("file") == doc.contains("family")) schema("$", "exactly one of \"family\" or \"file\"");
  if (doc.contains("file")) {
    std::filesystem::path p = get_string(doc, "file");
    cfg.file = p.is_relative() && !base.empty() ? base / p : p;
  } else {
    cfg.family = get_string(doc, "family");
    int given = 0;
    if (doc.contains("params")) cfg.params = get_string(doc, "params"), ++given;
    if (doc.contains("n")) cfg.params = "n=" + std::to_string(get_count(doc, "n", 0)), ++given;
    if (doc.contains("group")) cfg.params = "group=" + get_string(doc, "group"), ++given;
    if (doc.contains("ring")) cfg.params = "ring=" + get_string(doc, "ring"), ++given;
    if (doc.contains("factors")) {
      const json& f = doc["factors"];
      if (!f.is_array() || f.size() < 2) schema("$.factors", "expected at least two factor strings");
      std::string joined;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (!f[i].is_string()) schema("$.factors[" + std::to_string(i) + "]", "expected a string");
        joined += (i ? " x " : "") + f[i].get<std::string>();
      }
      cfg.params = joined;
      ++given;
    }
    if (given > 1) schema("$", "give the family parameters once");
  }

  if (doc.contains("z")) {
    const json& z = doc["z"];
    if (z.is_string()) {
      if (z != "all") cfg.z.push_back(z.get<std::string>());
    } else if (z.is_array()) {
      for (std::size_t i = 0; i < z.size(); ++i) {
        if (!z[i].is_string()) schema("$.z[" + std::to_string(i) + "]", "expected a label string");
        cfg.z.push_back(z[i].get<std::string>());
      }
    } else {
      schema("$.z", "expected \"all\", a label or a list of labels");
    }
  }
  if (doc.contains("level")) {
    const std::string level = get_string(doc, "level");
    if (level == "maps") {
      cfg.maps = true, cfg.matrices = false;
    } else if (level == "matrices") {
      cfg.maps = false, cfg.matrices = true;
    } else if (level == "all" || level == "maps+matrices") {
      cfg.maps = cfg.matrices = true;
    } else {
      schema("$.level", "expected maps, matrices, all or maps+matrices");
    }
  }
  for (const char* key : {"dedup", "gv", "timings"}) {
    if (doc.contains(key) && !doc[key].is_boolean()) schema(std::string("$.") + key, "expected a boolean");
  }
  cfg.dedup = doc.value("dedup", true);
  cfg.timings = doc.value("timings", false);
  cfg.gv = doc.value("gv", false);
  cfg.sweep.budget = get_count(doc, "budget", cfg.sweep.budget);
  cfg.sweep.samples = get_count(doc, "samples", cfg.sweep.samples);
  cfg.sweep.seed = get_count(doc, "seed", cfg.sweep.seed);
  cfg.sweep.threads = static_cast<unsigned>(std::max<std::uint64_t>(1, get_count(doc, "threads", cfg.sweep.threads)));
  return cfg;
}

Report run_report(const ReportConfig& cfg) {
  if (!cfg.file && cfg.family == "oddfractions") return lazy_report(cfg);

  BraceFile source = cfg.file ? read_brace_file(*cfg.file)
                              : BraceFile{"", make_family(cfg.family, cfg.params)};
  if (source.name.empty()) source.name = describe(source.brace.info());
  const SkewBrace& b = source.brace;

  std::vector<Elem> zs;
  if (cfg.z.empty()) {
    zs = admissible_z(b);
  } else {
    for (const auto& t : cfg.z) zs.push_back(resolve_element(b, t));
  }
  // Fixed order: ascending carrier index, duplicates dropped.
  std::ranges::sort(zs);
  zs.erase(std::unique(zs.begin(), zs.end()), zs.end());

  ojson doc;
  doc["artifact"] = "zbrace";
  doc["version"] = kVersion;
  doc["options"] = {{"budget", cfg.sweep.budget}, {"samples", cfg.sweep.samples}, {"seed", cfg.sweep.seed}};
  doc["brace"] = {{"name", source.name},
                  {"family", b.info().family},
                  {"params", b.info().params},
                  {"order", b.order()},
                  {"left_brace", b.is_left_brace()},
                  {"two_sided", b.is_two_sided()},
                  {"socle", labels_json(b, socle(b))},
                  {"admissible", labels_json(b, admissible_z(b))}};

  Tally tally;
  std::vector<Section> laws{brace_law_checks(b, cfg.sweep)};
  if (cfg.gv) laws.push_back(gv_correspondence_check(b));
  tally.add(laws);
  doc["brace_sections"] = sections_json(laws, &b, cfg.timings);

  std::vector<ZDeformedSolution> sols;
  for (Elem z : zs) sols.push_back(build_solution(b, z));

  doc["solutions"] = ojson::array();
  if (cfg.maps) {
    for (const auto& s : sols) {
      const auto secs = map_suite(s, cfg.sweep);
      tally.add(secs);
      doc["solutions"].push_back({{"z", b.label(s.z())}, {"sections", sections_json(secs, &b, cfg.timings)}});
    }
  }
  if (cfg.dedup) {
    const DedupPartition d = dedup_solutions(b, zs);
    ojson dj;
    dj["z"] = labels_json(b, zs);
    dj["classes"] = ojson::array();
    for (const auto& c : d.classes) dj["classes"].push_back(labels_json(b, c));
    dj["criteria"] = ojson::array();
    for (const auto& c : d.criteria) {
      ojson cj{{"name", c.name}, {"agrees", c.agrees}, {"classes", ojson::array()}};
      for (const auto& k : c.classes) cj["classes"].push_back(labels_json(b, k));
      dj["criteria"].push_back(cj);
    }
    dj["status"] = "pass";
    dj["notes"] = d.notes;
    doc["dedup"] = dj;
  }
  doc["tensor"] = ojson::array();
  if (cfg.matrices) {
    for (const auto& s : sols) {
      const auto secs = matrix_suite(s, cfg.sweep);
      tally.add(secs);
      doc["tensor"].push_back({{"z", b.label(s.z())}, {"sections", sections_json(secs, &b, cfg.timings)}});
    }
  }
  doc["summary"] = {{"checks", tally.checks}, {"failed", tally.failed}, {"sampled", tally.sampled},
                    {"status", tally.failed ? "fail" : "pass"}};
  return Report{doc.dump(2) + "\n", tally.failed == 0};
}

void print_sections(std::ostream& out, const std::vector<Section>& sections, const SkewBrace& b) {
  for (const auto& s : sections) {
    out << s.name << ": " << to_string(section_status(s)) << "\n";
    for (const auto& c : s.checks) {
      out << "  [" << to_string(c.status) << "] " << c.name << "  points=" << c.points;
      if (!c.witness.empty()) out << "  witness=(" << join_labels(b, c.witness) << ")";
      if (!c.detail.empty()) out << "  " << c.detail;
      out << "\n";
      for (const auto& note : c.notes) out << "    " << note << "\n";
    }
  }
}

}  // namespace zbrace
