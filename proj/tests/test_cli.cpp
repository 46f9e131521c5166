#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "passhom/cli.hpp"

using namespace passhom;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return CliResult{code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / fs::path("passhom_cli_test")) {
    fs::create_directories(path_);
  }
  std::string file(const std::string& name, const std::string& content) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

 private:
  fs::path path_;
};

const std::string kFlat = "surface genus=1 boundary=1\n";
const std::string kTrefoil =
    "surface genus=1 boundary=1\ntwist a1 -1\ntwist b1 -1\ncross a1 over b1 +\n";

}  // namespace

TEST_CASE("validate") {
  TempDir dir;
  SUBCASE("prints the elaborated matrix") {
    const auto r = cli({"validate", dir.file("trefoil.srf", kTrefoil)});
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "valid: true\ngenus: 1\nboundary: 1\nrank: 2\nseifert genus=1 boundary=1\n-1 1\n0 -1\n");
  }
  SUBCASE("invalid seifert block") {
    const auto r = cli({"validate", dir.file("bad.srf", "seifert genus=1 boundary=1\n0 0\n0 0\n")});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("NotSeifert") != std::string::npos);
  }
  SUBCASE("empty file") {
    const auto r = cli({"validate", dir.file("empty.srf", "")});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("MissingSurfaceHeader") != std::string::npos);
  }
  SUBCASE("missing file") {
    const auto r = cli({"validate", "/nonexistent/nowhere.srf"});
    CHECK(r.exit_code == 2);
  }
}

TEST_CASE("member") {
  TempDir dir;
  const std::string flat = dir.file("flat.srf", kFlat);
  const std::string trefoil = dir.file("trefoil.srf", kTrefoil);

  SUBCASE("single twist on the trefoil handle") {
    const auto r = cli({"member", trefoil, "--word", "T[a1]"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "member: true\n");
  }
  SUBCASE("single twist on the flat handle, with witness") {
    const auto r = cli({"member", flat, "--word", "T[a1]", "--witness"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "member: false\nwitness: 0,1\n");
  }
  SUBCASE("empty word is the identity") {
    const auto r = cli({"member", flat});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "member: true\n");
  }
  SUBCASE("named words resolve from the document") {
    const std::string named = dir.file("named.srf", kFlat + "word dbl T[a1]^2\n");
    const auto r = cli({"member", named, "--word", "dbl"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "member: true\n");
    const auto missing = cli({"member", named, "--word", "nosuch"});
    CHECK(missing.exit_code == 2);
  }
  SUBCASE("bad word syntax") {
    const auto r = cli({"member", flat, "--word", "T[a1"});
    CHECK(r.exit_code == 2);
  }
}

TEST_CASE("passcount") {
  TempDir dir;
  const std::string flat = dir.file("flat.srf", kFlat);
  const std::string trefoil = dir.file("trefoil.srf", kTrefoil);

  SUBCASE("worked examples") {
    CHECK(cli({"passcount", flat, "--word", "T[a1]^2"}).out == "signed_pass_count: 1\n");
    CHECK(cli({"passcount", trefoil, "--word", "T[a1]"}).out == "signed_pass_count: 0\n");
  }
  SUBCASE("non-member is exit 2 with an OddParity message") {
    const auto r = cli({"passcount", flat, "--word", "T[a1]"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("OddParity") != std::string::npos);
    CHECK(r.err.find("not realizable") != std::string::npos);
  }
}

TEST_CASE("sequence") {
  TempDir dir;
  const std::string trefoil = dir.file("trefoil.srf", kTrefoil);
  const std::string mirror = dir.file("mirror.srf", "seifert genus=1 boundary=1\n1 1\n0 1\n");
  const std::string flat = dir.file("flat.srf", kFlat);

  SUBCASE("equivalent pair yields the two diagonal moves") {
    const auto r = cli({"sequence", trefoil, mirror});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "pass 1 1 +\npass 2 2 +\nnet: 2\n");
  }
  SUBCASE("file against itself is empty with net 0") {
    const auto r = cli({"sequence", trefoil, trefoil});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "net: 0\n");
  }
  SUBCASE("inequivalent pair reports the distinguishing twist") {
    const auto r = cli({"sequence", flat, trefoil});
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("result: not regularly homotopic\n") != std::string::npos);
    CHECK(r.out.find("witness: 1,0\n") != std::string::npos);
    CHECK(r.out.find("witness_radical: false\n") != std::string::npos);
  }
  SUBCASE("signature mismatch is invalid input") {
    const std::string pants = dir.file("pants.srf", "surface genus=0 boundary=3\n");
    CHECK(cli({"sequence", flat, pants}).exit_code == 2);
  }
}

TEST_CASE("verify") {
  TempDir dir;
  const std::string trefoil = dir.file("trefoil.srf", kTrefoil);
  const std::string mirror = dir.file("mirror.srf", "seifert genus=1 boundary=1\n1 1\n0 1\n");

  SUBCASE("replaying the generated sequence succeeds") {
    const std::string seq = dir.file("seq.txt", "pass 1 1 +\npass 2 2 +\n");
    const auto r = cli({"verify", trefoil, seq, mirror});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "verified: true\n");
  }
  SUBCASE("wrong sequence is a negative decision") {
    const std::string seq = dir.file("wrong.txt", "pass 1 2 +\n");
    const auto r = cli({"verify", trefoil, seq, mirror});
    CHECK(r.exit_code == 3);
    CHECK(r.out == "verified: false\n");
  }
  SUBCASE("out-of-range moves are invalid input") {
    const std::string seq = dir.file("oob.txt", "pass 9 9 +\n");
    CHECK(cli({"verify", trefoil, seq, mirror}).exit_code == 2);
  }
}

TEST_CASE("selftest") {
  SUBCASE("all properties pass at seed 1, size 6") {
    const auto r = cli({"selftest", "--seed", "1", "--size", "6"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("seed: 1\n") != std::string::npos);
    CHECK(r.out.find("failures: 0") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
  SUBCASE("fixed seed reproduces identical output") {
    const auto first = cli({"selftest", "--seed", "7", "--size", "3"});
    CHECK(first.exit_code == 0);
    const auto second = cli({"selftest", "--seed", "7", "--size", "3"});
    CHECK(second.out == first.out);
    const auto other_seed = cli({"selftest", "--seed", "8", "--size", "3"});
    CHECK(other_seed.exit_code == 0);
  }
  SUBCASE("size zero passes vacuously") {
    const auto r = cli({"selftest", "--seed", "1", "--size", "0"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("failures: 0") != std::string::npos);
    CHECK(r.out.find("(0 cases)") != std::string::npos);
  }
}

TEST_CASE("usage errors and help") {
  CHECK(cli({}).exit_code == 2);
  CHECK(cli({"frobnicate"}).exit_code == 2);
  CHECK(cli({"member"}).exit_code == 2);  // missing file argument

  const auto help = cli({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("selftest") != std::string::npos);
}
