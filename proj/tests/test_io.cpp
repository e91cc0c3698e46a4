#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "zbrace/cli.hpp"
#include "zbrace/error.hpp"
#include "zbrace/export.hpp"
#include "zbrace/io.hpp"
#include "zbrace/report.hpp"
#include "zbrace/tensor.hpp"

using namespace zbrace;

namespace {

const std::string data = ZBRACE_TEST_DATA;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::SchemaError;
}

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "zbrace");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string exported(const std::string& object, const ZDeformedSolution& s) {
  std::ostringstream out;
  export_matrix(object, s, out);
  return out.str();
}

}  // namespace

TEST(BraceFile, RoundTrip) {
  const auto b = cyclic_unit_brace(3);
  const std::string text = brace_to_text(BraceFile{"c3", b});
  const BraceFile back = parse_brace_text(text);
  EXPECT_EQ(back.name, "c3");
  EXPECT_TRUE(back.brace.add().same_table(b.add()));
  EXPECT_TRUE(back.brace.mul().same_table(b.mul()));
  EXPECT_EQ(back.brace.labels(), b.labels());
  EXPECT_EQ(back.brace.info(), b.info());
  EXPECT_EQ(brace_to_text(back), text);
}

TEST(BraceFile, RoundTripEveryInstance) {
  for (const auto& [name, b] : fixtures::small_instances()) {
    const std::string text = brace_to_text(BraceFile{name, b});
    EXPECT_EQ(brace_to_text(parse_brace_text(text)), text) << name;
  }
}

TEST(BraceFile, CommittedFileParses) {
  const auto f = read_brace_file(data + "/cyclic2.brace");
  EXPECT_EQ(f.brace.order(), 2u);
  EXPECT_EQ(f.brace.info().family, "cyclic2n");
}

TEST(BraceFile, SchemaErrors) {
  try {
    parse_brace_text(R"({"order": 2, "add": [[0, 1]], "mul": [[0, 1], [1, 0]]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SchemaError);
    EXPECT_NE(std::string(e.what()).find("$.add"), std::string::npos);
  }
  EXPECT_EQ(kind_of([] { parse_brace_text("[1, 2]"); }), ErrorKind::SchemaError);
  EXPECT_EQ(kind_of([] { parse_brace_text("{"); }), ErrorKind::SchemaError);
  EXPECT_EQ(kind_of([] { parse_brace_text(R"({"order": 1, "add": [[-1]], "mul": [[0]]})"); }),
            ErrorKind::SchemaError);
  EXPECT_EQ(kind_of([] {
              parse_brace_text(R"({"order": 2, "labels": ["a"], "add": [[0,1],[1,0]], "mul": [[0,1],[1,0]]})");
            }),
            ErrorKind::SchemaError);
}

TEST(BraceFile, TableErrorsPropagate) {
  EXPECT_EQ(kind_of([] { read_brace_file(data + "/corrupted.brace"); }), ErrorKind::NotLeftDistributive);
  EXPECT_EQ(kind_of([] { parse_brace_text(R"({"order": 2, "add": [[0,1],[0,1]], "mul": [[0,1],[1,0]]})"); }),
            ErrorKind::NoIdentity);
}

TEST(BraceFile, FamilyKeptOnlyWhenTablesMatch) {
  const auto b = cyclic_unit_brace(2);
  std::string text = brace_to_text(BraceFile{"x", b});
  const auto pos = text.find("n=2");
  text.replace(pos, 3, "n=3");
  EXPECT_EQ(parse_brace_text(text).brace.info().family, "custom");
}

TEST(Families, NamedConstruction) {
  EXPECT_EQ(make_family("cyclic2n", "n=4").order(), 8u);
  EXPECT_EQ(make_family("trivial", "group=S3").order(), 6u);
  EXPECT_EQ(make_family("trivial", "group=Z5").order(), 5u);
  EXPECT_EQ(make_family("radical", "ring=2z8").order(), 4u);
  EXPECT_EQ(make_family("radical", "ring=zero-Z3").order(), 3u);
  const auto p = make_family("product", "cyclic2n(n=2) x trivial(group=S3)");
  EXPECT_EQ(p.order(), 12u);
  EXPECT_EQ(make_family(p.info().family, p.info().params).labels(), p.labels());
  EXPECT_EQ(make_family("oddmatrix", "").order(), 256u);
  EXPECT_EQ(kind_of([] { make_family("klein", ""); }), ErrorKind::SchemaError);
  EXPECT_EQ(kind_of([] { make_family("cyclic2n", "m=3"); }), ErrorKind::SchemaError);
  EXPECT_EQ(kind_of([] { make_family("radical", "ring=z4"); }), ErrorKind::NotRadical);
}

TEST(Export, SwapAtTwo) {
  const auto s = build_solution(cyclic_unit_brace(2), 0);
  EXPECT_EQ(exported("P", s), "4 4 4\n0 0 1\n1 2 1\n2 1 1\n3 3 1\n");
}

TEST(Export, RcheckIsAPermutation) {
  const auto b = cyclic_unit_brace(3);
  const auto s = build_solution(b, resolve_element(b, "3"));
  std::istringstream in(exported("rcheck", s));
  std::uint64_t rows, cols, nnz;
  in >> rows >> cols >> nnz;
  EXPECT_EQ(rows, 16u);
  EXPECT_EQ(cols, 16u);
  EXPECT_EQ(nnz, 16u);
  std::vector<int> row_hits(16), col_hits(16);
  std::uint64_t r, c, prev = 0;
  long v;
  while (in >> r >> c >> v) {
    EXPECT_EQ(v, 1);
    EXPECT_GE(r, prev);
    prev = r;
    ++row_hits[r];
    ++col_hits[c];
  }
  EXPECT_TRUE(std::ranges::all_of(row_hits, [](int h) { return h == 1; }));
  EXPECT_TRUE(std::ranges::all_of(col_hits, [](int h) { return h == 1; }));
}

TEST(Export, OneElementBraceEveryObject) {
  const auto s = build_solution(trivial_skew_brace(cyclic_group(1), "Z1"), 0);
  for (const char* obj : {"rcheck", "r", "P", "F", "Fhat", "rF", "rFhat", "V:0", "W:0", "DeltaV:0",
                          "DeltaW:#0", "F123", "Fhat123"}) {
    EXPECT_EQ(exported(obj, s), "1 1 1\n0 0 1\n") << obj;
  }
}

TEST(Export, ObjectsAndErrors) {
  const auto b = cyclic_unit_brace(3);
  const auto s = build_solution(b, resolve_element(b, "3"));
  EXPECT_EQ(exported("V:5", s), exported("V:#2", s));
  EXPECT_EQ(export_object("F123", s).entries.size(), 64u);
  EXPECT_EQ(export_object("DeltaW:7", s).rows, 16u);
  EXPECT_FALSE(export_object("defect:rleft", s).entries.empty());
  EXPECT_EQ(kind_of([&] { export_object("Q", s); }), ErrorKind::UnknownObject);
  EXPECT_EQ(kind_of([&] { export_object("V:2", s); }), ErrorKind::UnknownObject);
  EXPECT_EQ(kind_of([&] { export_object("V:#9", s); }), ErrorKind::UnknownObject);
}

TEST(Report, Cyclic3FullSuite) {
  const auto cfg = parse_report_config(slurp(data + "/cyclic3_report.json"), data);
  const Report r = run_report(cfg);
  EXPECT_TRUE(r.ok);
  EXPECT_NE(r.text.find("discrepancy-note"), std::string::npos);
  EXPECT_NE(r.text.find("\"coassociativity\""), std::string::npos);
  EXPECT_EQ(r.text.find("\"seconds\""), std::string::npos);
  EXPECT_EQ(run_report(cfg).text, r.text);
}

TEST(Report, DeterministicAcrossThreadsAndSampling) {
  auto cfg = parse_report_config(R"({"family": "cyclic2n", "n": 4, "z": ["3", "5"], "level": "all",
                                     "budget": 100, "samples": 300, "seed": 9})");
  cfg.sweep.threads = 1;
  const Report one = run_report(cfg);
  cfg.sweep.threads = 4;
  EXPECT_EQ(run_report(cfg).text, one.text);
  EXPECT_NE(one.text.find("\"sampled\""), std::string::npos);
}

TEST(Report, TrivialS3AllPass) {
  const Report r = run_report(parse_report_config(slurp(data + "/trivial_s3_report.json"), data));
  EXPECT_TRUE(r.ok);
}

TEST(Report, BraceFileSourceAndAdmissibleSelection) {
  const std::string path = ::testing::TempDir() + "/lopsided.brace";
  write_brace_file(BraceFile{"lopsided", fixtures::lopsided_brace()}, path);
  const Report r = run_report(parse_report_config(R"({"file": ")" + path + R"(", "z": "all"})"));
  EXPECT_TRUE(r.ok);
  EXPECT_NE(r.text.find(R"("admissible": [)"), std::string::npos);
  EXPECT_EQ(kind_of([&] { run_report(parse_report_config(R"({"file": ")" + path + R"(", "z": "1"})")); }),
            ErrorKind::InadmissibleZ);
}

TEST(Report, OddFractions) {
  const Report r = run_report(
      parse_report_config(R"({"family": "oddfractions", "z": ["1", "3/5", "3", "5"], "samples": 500})"));
  EXPECT_TRUE(r.ok);
  EXPECT_NE(r.text.find("at a = 3"), std::string::npos);
}

TEST(Report, MalformedConfig) {
  EXPECT_EQ(kind_of([] { parse_report_config("{"); }), ErrorKind::SchemaError);
  EXPECT_EQ(kind_of([] { parse_report_config(R"({"family": "cyclic2n", "n": 3, "colour": 1})"); }),
            ErrorKind::SchemaError);
  EXPECT_EQ(kind_of([] { parse_report_config(R"({"n": 3})"); }), ErrorKind::SchemaError);
  EXPECT_EQ(kind_of([] { parse_report_config(R"({"family": "cyclic2n", "n": 3, "level": "tensor"})"); }),
            ErrorKind::SchemaError);
  EXPECT_EQ(kind_of([] { parse_report_config(R"({"family": "cyclic2n", "n": 3, "z": 3})"); }),
            ErrorKind::SchemaError);
}

TEST(Cli, VerifyPasses) {
  const auto r = cli({"verify", data + "/cyclic3.brace", "--z", "3", "--level", "all"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("cocycle: pass"), std::string::npos);
}

TEST(Cli, CorruptedInputExitsTwo) {
  const auto r = cli({"verify", data + "/corrupted.brace", "--z", "1", "--level", "all"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("NotLeftDistributive"), std::string::npos);
  EXPECT_NE(r.err.find("witness"), std::string::npos);
}

TEST(Cli, SolveDedup) {
  const auto r = cli({"solve", data + "/cyclic2.brace", "--z", "all", "--dedup"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("classes:\n  {1, 3}\ncriterion"), std::string::npos) << r.out;
}

TEST(Cli, SocleAndValidate) {
  EXPECT_EQ(cli({"socle", data + "/cyclic3.brace"}).out, "{1, 5}\n");
  EXPECT_EQ(cli({"validate", data + "/cyclic3.brace"}).code, 0);
}

TEST(Cli, UsageErrorsNameTheFlag) {
  auto r = cli({"verify", data + "/cyclic3.brace", "--level", "tensor"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--level"), std::string::npos) << r.err;
  r = cli({"verify", data + "/cyclic3.brace", "--frobnicate"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--frobnicate"), std::string::npos) << r.err;
  r = cli({"make", "--family", "cyclic2n"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--n"), std::string::npos) << r.err;
  r = cli({"twist", data + "/cyclic3.brace", "--z", "3", "--check", "spin"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--check"), std::string::npos) << r.err;
  EXPECT_EQ(cli({}).code, 2);
}

TEST(Cli, FailedCheckExitsOne) {
  const std::string s3 = ::testing::TempDir() + "/s3.brace";
  ASSERT_EQ(cli({"make", "--family", "trivial", "--group", "S3", "-o", s3}).code, 0);
  EXPECT_EQ(cli({"verify", s3, "--z", "all", "--level", "maps"}).code, 0);
  // The conjugated correspondence fails for nonabelian addition.
  const auto r = cli({"verify", s3, "--z", "123", "--level", "maps", "--gv"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("[fail] gv_conjugation"), std::string::npos) << r.out;
}

TEST(Cli, TwistAndExport) {
  auto r = cli({"twist", data + "/cyclic3.brace", "--z", "3", "--check", "defect,grouplike"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("nonzero defect"), std::string::npos);
  EXPECT_EQ(r.out.find("cocycle"), std::string::npos);
  r = cli({"export", data + "/cyclic2.brace", "--z", "1", "--object", "P"});
  EXPECT_EQ(r.out, "4 4 4\n0 0 1\n1 2 1\n2 1 1\n3 3 1\n");
  r = cli({"export", data + "/cyclic2.brace", "--z", "1", "--object", "nope"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, MakeWritesCanonicalFile) {
  const std::string out = ::testing::TempDir() + "/c3.brace";
  EXPECT_EQ(cli({"make", "--family", "cyclic2n", "--n", "3", "-o", out}).code, 0);
  EXPECT_EQ(slurp(out), slurp(data + "/cyclic3.brace"));
}

TEST(Cli, BinaryExitCodes) {
  const std::string bin = ZBRACE_CLI_PATH;
  EXPECT_EQ(std::system((bin + " verify " + data + "/cyclic3.brace --z 3 --level all > /dev/null").c_str()), 0);
  const int rc = std::system((bin + " validate " + data + "/corrupted.brace 2> /dev/null").c_str());
  EXPECT_EQ(WEXITSTATUS(rc), 2);
}
