// End-to-end tests of the skl-cli binary: exit codes and output formats.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "skewlat/generators.hpp"
#include "skewlat/skl_format.hpp"

namespace fs = std::filesystem;
using namespace skewlat;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / "skl_cli_tests";
  fs::create_directories(dir);
  return dir;
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const auto out_path = scratch_dir() / "cli_out.txt";
  const std::string cmd =
      env + " " + std::string(SKL_CLI_PATH) + " " + args + " > " +
      out_path.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_path);
  std::ostringstream os;
  os << in.rdbuf();
  r.out = os.str();
  return r;
}

std::string write_algebra(const SkewLattice& a, const std::string& name) {
  const auto path = scratch_dir() / name;
  std::ofstream out(path);
  out << serialize_algebra(a);
  return path.string();
}

}  // namespace

TEST_CASE("cli: validate") {
  const auto good = write_algebra(gen_xn(2), "x2.skl");
  REQUIRE(run_cli("validate " + good).exit_code == 0);

  SECTION("corrupted table exits 1 and names the law with a witness") {
    const auto path = scratch_dir() / "broken.skl";
    std::ofstream(path) << "skewlat v1\nelements 2 e f\nmeet\ne e\ne e\n"
                           "join\ne e\ne e\n";
    const auto r = run_cli("validate " + path.string());
    REQUIRE(r.exit_code == 1);
    REQUIRE(r.out.find("FAIL") != std::string::npos);
    REQUIRE(r.out.find("idempotent") != std::string::npos);
    REQUIRE(r.out.find("(f)") != std::string::npos);
  }
  SECTION("syntax errors exit 2 with a line number") {
    const auto path = scratch_dir() / "syntax.skl";
    std::ofstream(path) << "skewlat v1\nelements 2 e f\nmeet\ne q\ne e\n"
                           "join\ne e\ne e\n";
    const auto r = run_cli("validate " + path.string());
    REQUIRE(r.exit_code == 2);
    REQUIRE(r.out.find("line 4") != std::string::npos);
  }
  SECTION("missing file exits 2") {
    REQUIRE(run_cli("validate /nonexistent/file.skl").exit_code == 2);
  }
}

TEST_CASE("cli: usage errors exit 2") {
  REQUIRE(run_cli("frobnicate").exit_code == 2);
  REQUIRE(run_cli("").exit_code == 2);
  REQUIRE(run_cli("generate xn -o /tmp/x.skl --n 0").exit_code == 2);
}

TEST_CASE("cli: classify") {
  const auto path = write_algebra(gen_xn(2), "x2.skl");
  SECTION("text output, exit reflects agreement not the verdicts") {
    const auto r = run_cli("classify " + path);
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("categorical") != std::string::npos);
    REQUIRE(r.out.find("false") != std::string::npos);
    REQUIRE(r.out.find("forbidden subalgebra: X_2") != std::string::npos);
  }
  SECTION("json output parses and carries the schema fields") {
    const auto r = run_cli("classify --json " + path);
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    for (const char* key :
         {"properties", "modes", "agreement", "witnesses", "forbidden"})
      REQUIRE(j.contains(key));
    REQUIRE(j["properties"]["categorical"] == false);
    REQUIRE(j["properties"]["order_closed"] == true);
    REQUIRE(j["modes"]["categorical"].size() == 5);
    REQUIRE(j["modes"]["strictly_categorical"].size() == 8);
    REQUIRE(j["forbidden"]["kind"] == "X");
    REQUIRE(j["forbidden"]["n"] == 2);
    REQUIRE(j["forbidden"]["embedding"].size() == 8);
  }
}

TEST_CASE("cli: forbidden") {
  const auto none = write_algebra(gen_xn(1), "x1.skl");
  const auto r1 = run_cli("forbidden " + none);
  REQUIRE(r1.exit_code == 0);
  REQUIRE(r1.out.find("none") != std::string::npos);

  const auto hit = write_algebra(gen_yn(3), "y3.skl");
  const auto r2 = run_cli("forbidden --json " + hit);
  REQUIRE(r2.exit_code == 0);
  const auto j = nlohmann::json::parse(r2.out);
  REQUIRE(j["kind"] == "Y");
  REQUIRE(j["n"] == 3);

  SECTION("json null when no forbidden subalgebra exists") {
    const auto r3 = run_cli("forbidden --json " + none);
    REQUIRE(r3.exit_code == 0);
    REQUIRE(nlohmann::json::parse(r3.out).is_null());
  }
  SECTION("invalid algebras are refused") {
    const auto path = scratch_dir() / "broken2.skl";
    std::ofstream(path) << "skewlat v1\nelements 2 e f\nmeet\ne e\ne e\n"
                           "join\ne e\ne e\n";
    REQUIRE(run_cli("forbidden " + path.string()).exit_code == 1);
    REQUIRE(run_cli("decompose " + path.string()).exit_code == 1);
    REQUIRE(run_cli("classify " + path.string()).exit_code == 1);
  }
}

TEST_CASE("cli: decompose") {
  const auto path = write_algebra(gen_xn(2), "x2.skl");
  const auto r = run_cli("decompose " + path);
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out.find("D-classes (3)") != std::string::npos);
  REQUIRE(r.out.find("left-handed") != std::string::npos);
  REQUIRE(r.out.find("{b1,b2}") != std::string::npos);
  REQUIRE(r.out.find("reflective: yes") != std::string::npos);

  const auto rj = run_cli("decompose --json " + path);
  const auto j = nlohmann::json::parse(rj.out);
  REQUIRE(j["d_classes"].size() == 3);
  REQUIRE(j["chains"].size() == 1);
  REQUIRE(j["chains"][0]["components"].size() == 1);
  REQUIRE(j["chains"][0]["factors"] == false);
}

TEST_CASE("cli: generate round trips") {
  const auto out = (scratch_dir() / "gen.skl").string();
  SECTION("xn") {
    REQUIRE(run_cli("generate xn --n 3 -o " + out).exit_code == 0);
    std::ifstream in(out);
    std::ostringstream os;
    os << in.rdbuf();
    REQUIRE(parse_algebra(os.str()) == gen_xn(3));
  }
  SECTION("rectangular and product") {
    const auto r1 = (scratch_dir() / "r.skl").string();
    const auto c1 = (scratch_dir() / "c.skl").string();
    REQUIRE(run_cli("generate rectangular --p 2 --q 2 -o " + r1).exit_code == 0);
    REQUIRE(run_cli("generate chain --n 3 -o " + c1).exit_code == 0);
    const auto p = (scratch_dir() / "p.skl").string();
    REQUIRE(run_cli("generate product " + r1 + " " + c1 + " -o " + p).exit_code ==
            0);
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    REQUIRE(parse_algebra(os.str()).size() == 12);
  }
  SECTION("primitive from a JSON spec") {
    const auto spec = scratch_dir() / "prim.json";
    std::ofstream(spec) << R"({
      "upper_cosets": [["a1","a2"],["a3","a4"]],
      "lower_cosets": [["b1","b2"],["b3","b4"]],
      "bijections": [
        [[[0,0],[1,1]], [[0,0],[1,1]]],
        [[[0,0],[1,1]], [[0,1],[1,0]]]
      ]
    })";
    REQUIRE(run_cli("generate primitive --spec " + spec.string() + " -o " + out)
                .exit_code == 0);
    std::ifstream in(out);
    std::ostringstream os;
    os << in.rdbuf();
    REQUIRE(parse_algebra(os.str()) == gen_twisted_primitive(true));
  }
  SECTION("the SKL_MAX_CARRIER env var caps products") {
    const auto x = write_algebra(gen_xn(2), "x2.skl");
    const auto r =
        run_cli("generate product " + x + " " + x + " -o " + out,
                "SKL_MAX_CARRIER=16");
    REQUIRE(r.exit_code == 2);
    REQUIRE(r.out.find("exceeds max 16") != std::string::npos);
  }
}

TEST_CASE("cli: generate corpus writes one file per algebra") {
  const auto dir = scratch_dir() / "corpus";
  fs::remove_all(dir);
  const auto r = run_cli("generate corpus --seed 1 -o " + dir.string());
  REQUIRE(r.exit_code == 0);
  std::size_t count = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (count == 0) {
      std::ifstream in(e.path());
      std::ostringstream os;
      os << in.rdbuf();
      REQUIRE(validate(parse_algebra(os.str())).ok);
    }
    ++count;
  }
  REQUIRE(count >= 200);
  fs::remove_all(dir);
}

TEST_CASE("cli: crosscheck over files") {
  const auto a = write_algebra(gen_xn(2), "x2.skl");
  const auto b = write_algebra(gen_partial_functions(2, 2), "pf.skl");
  const auto r = run_cli("crosscheck " + a + " " + b);
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out.find("algebras checked: 2") != std::string::npos);
  REQUIRE(r.out.find("invariant failures: 0") != std::string::npos);
  REQUIRE(r.out.find("elapsed:") != std::string::npos);
}
