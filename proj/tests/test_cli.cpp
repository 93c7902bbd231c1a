#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

#include "hermspec/mixed_graph.hpp"

#include "test_util.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp_or_empty(const fs::path& p) {
  std::ifstream in(p);
  if (!in) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the installed binary with stdout/stderr captured in temp files.
CliResult run_cli(const std::string& args) {
  static int seq = 0;
  const std::string stamp = std::to_string(::getpid()) + "_" + std::to_string(seq++);
  fs::path out = fs::temp_directory_path() / ("hermspec_out_" + stamp);
  fs::path err = fs::temp_directory_path() / ("hermspec_err_" + stamp);
  std::string cmd = "\"" + std::string(HERMSPEC_CLI_PATH) + "\" " + args + " > \"" +
                    out.string() + "\" 2> \"" + err.string() + "\"";
  int st = std::system(cmd.c_str());
  REQUIRE(st != -1);
  CliResult r;
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  r.out = slurp_or_empty(out);
  r.err = slurp_or_empty(err);
  fs::remove(out);
  fs::remove(err);
  return r;
}

std::string q(const std::string& path) { return "\"" + path + "\""; }

// Temp .mg file that cleans up after itself.
struct TempGraphFile {
  fs::path path;
  explicit TempGraphFile(const std::string& body) {
    static int seq = 0;
    path = fs::temp_directory_path() /
           ("hermspec_g_" + std::to_string(::getpid()) + "_" + std::to_string(seq++) + ".mg");
    std::ofstream(path) << body;
  }
  ~TempGraphFile() { fs::remove(path); }
  std::string arg() const { return q(path.string()); }
};

bool has_substr(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli spectrum") {
  const std::string d2 = q(testutil::fixture_path("fig1_d2.mg"));

  CliResult r = run_cli("spectrum " + d2);
  CHECK(r.code == 0);
  CHECK(has_substr(r.out, "n = 4, m = 6"));
  CHECK(has_substr(r.out, "  1.73205080757\n"));
  CHECK(has_substr(r.out, "spectral radius = 1.73205080757"));

  CliResult j = run_cli("spectrum " + d2 + " --json");
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["n"] == 4);
  CHECK(doc["m"] == 6);
  REQUIRE(doc["eigenvalues"].size() == 4);
  CHECK(doc["eigenvalues"][0].get<double>() ==
        Catch::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(doc["spectral_radius"].get<double>() ==
        Catch::Approx(std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("cli charpoly") {
  const std::string tri = q(testutil::fixture_path("triangle_imaginary.mg"));

  CliResult both = run_cli("charpoly " + tri + " --method both");
  CHECK(both.code == 0);
  CHECK(both.out == "λ^3 - 3λ\n");

  CliResult sachs = run_cli("charpoly " + tri + " --method sachs");
  CHECK(sachs.code == 0);
  CHECK(sachs.out == both.out);

  CliResult j = run_cli("charpoly " + tri + " --json");
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["method"] == "leverrier");
  CHECK(doc["degree"] == 3);
  CHECK(doc["coefficients"] == nlohmann::json({"1", "0", "-3", "0"}));
  CHECK(doc["display"] == "λ^3 - 3λ");

  CHECK(run_cli("charpoly " + tri + " --method bogus").code == 2);
}

TEST_CASE("cli classify") {
  SECTION("a 4-cycle is out of scope") {
    CliResult r = run_cli("classify " + q(testutil::fixture_path("fig1_d1.mg")) + " --json");
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["outcome"] == "out_of_scope");
    CHECK(has_substr(doc["reason"].get<std::string>(), "4-cycle"));
  }

  SECTION("the hexagon is a Smith graph with radius exactly 2") {
    CliResult gen = run_cli("family gen C6");
    REQUIRE(gen.code == 0);
    TempGraphFile c6(gen.out);

    CliResult r = run_cli("classify " + c6.arg());
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["outcome"] == "in_list");
    CHECK(doc["family_tag"] == "SmithUnderlying");
    CHECK(doc["embedding"].size() == 6);
    CHECK(doc["crosscheck"]["class"] == "exactly");

    CliResult below = run_cli("classify " + c6.arg() + " --exact-bound 5/2 --json");
    REQUIRE(below.code == 0);
    CHECK(nlohmann::json::parse(below.out)["crosscheck"]["class"] == "below");

    CliResult above = run_cli("classify " + c6.arg() + " --exact-bound 1.5 --json");
    REQUIRE(above.code == 0);
    CHECK(nlohmann::json::parse(above.out)["crosscheck"]["class"] == "above");

    CHECK(run_cli("classify " + c6.arg() + " --exact-bound x").code == 2);
    CHECK(run_cli("classify " + c6.arg() + " --exact-bound 1/0").code == 2);
  }

  SECTION("eq2 list membership for the negative pentagon") {
    CliResult gen = run_cli("family gen C5 --signs minus");
    REQUIRE(gen.code == 0);
    TempGraphFile c5(gen.out);
    CliResult r = run_cli("classify " + c5.arg() + " --eq2 --json");
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["outcome"] == "in_list");
    CHECK(doc["family_tag"] == "Cn_minus_odd");
  }

  SECTION("disconnected input, whole and per component") {
    TempGraphFile two("v 4\n0 -- 1\n2 -- 3\n");
    CliResult whole = run_cli("classify " + two.arg() + " --json");
    REQUIRE(whole.code == 0);
    auto doc = nlohmann::json::parse(whole.out);
    CHECK(doc["outcome"] == "out_of_scope");
    CHECK(has_substr(doc["reason"].get<std::string>(), "disconnected"));

    CliResult parts = run_cli("classify " + two.arg() + " --components --json");
    REQUIRE(parts.code == 0);
    auto arr = nlohmann::json::parse(parts.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 2);
    CHECK(arr[0]["outcome"] == "in_list");
    CHECK(arr[1]["outcome"] == "in_list");
  }
}

TEST_CASE("cli family gen") {
  CliResult r = run_cli("family gen \"C6(2,0,0,2)\" --signs minus");
  REQUIRE(r.code == 0);
  hermspec::MixedGraph G = hermspec::parse_mixed_graph(r.out);
  CHECK(G.num_vertices() == 10);
  CHECK(G.num_edges() == 10);

  TempGraphFile f(r.out);
  CliResult cyc = run_cli("cycles " + f.arg() + " --json");
  REQUIRE(cyc.code == 0);
  auto arr = nlohmann::json::parse(cyc.out);
  REQUIRE(arr.size() == 1);
  CHECK(arr[0]["length"] == 6);
  CHECK(arr[0]["sign"] == "negative");

  SECTION("unrealizable sign pattern exits 1") {
    CliResult bad = run_cli("family gen \"theta(2,3,3)\" --signs minus");
    CHECK(bad.code == 1);
    CHECK(has_substr(bad.err, "error:"));
    CHECK(has_substr(bad.err, "length 4"));
  }

  SECTION("grammar and flag validation exit 2") {
    CHECK(run_cli("family gen Q7").code == 2);
    CHECK(run_cli("family gen C6 --signs sideways").code == 2);
  }
}

TEST_CASE("cli cycles") {
  CliResult r = run_cli("cycles " + q(testutil::fixture_path("fig1_d1.mg")));
  CHECK(r.code == 0);
  CHECK(r.out ==
        "(0 1 3) length 3: positive\n"
        "(1 2 3) length 3: negative\n"
        "(0 1 2 3) length 4: negative\n");

  CliResult tri = run_cli("cycles " + q(testutil::fixture_path("triangle_imaginary.mg")) +
                          " --json");
  REQUIRE(tri.code == 0);
  auto arr = nlohmann::json::parse(tri.out);
  REQUIRE(arr.size() == 1);
  CHECK(arr[0]["vertices"] == nlohmann::json({0, 1, 2}));
  CHECK(arr[0]["sign"] == "imaginary(-i)");

  CliResult gen = run_cli("family gen P4");
  REQUIRE(gen.code == 0);
  TempGraphFile p4(gen.out);
  CliResult none = run_cli("cycles " + p4.arg());
  CHECK(none.code == 0);
  CHECK(none.out == "no cycles\n");
}

TEST_CASE("cli verify") {
  fs::path report = fs::temp_directory_path() /
                    ("hermspec_report_" + std::to_string(::getpid()) + ".json");
  CliResult r = run_cli("verify --max-n 3 --json " + q(report.string()));
  REQUIRE(r.code == 0);
  CHECK(has_substr(r.out, "[PASS] cross_check.le2_biconditional"));
  CHECK_FALSE(has_substr(r.out, "[FAIL]"));
  CHECK(has_substr(r.out, "13/13 checks passed"));

  auto doc = nlohmann::json::parse(slurp_or_empty(report));
  fs::remove(report);
  CHECK(doc["scope"]["max_n"] == 3);
  CHECK(doc["scope"]["orientation_mode"] == "one_per_sign_vector");
  CHECK(doc["summary"]["failed"] == 0);
  CHECK(doc["checks"].size() == 13);

  SECTION("scope validation") {
    CliResult over = run_cli("verify --max-n 11");
    CHECK(over.code == 2);
    CHECK(has_substr(over.err, "exceeds the cap"));
    CHECK(run_cli("verify --max-n 0").code == 2);
  }
}

TEST_CASE("cli usage errors") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("bogus").code == 2);
  CHECK(run_cli("--help").code == 0);
  CHECK(has_substr(run_cli("--help").out, "spectrum"));

  CliResult missing = run_cli("spectrum /nonexistent/graph.mg");
  CHECK(missing.code == 2);
  CHECK(has_substr(missing.err, "cannot open"));

  TempGraphFile bad("v 2\n0 ~~ 1\n");
  CliResult parse = run_cli("spectrum " + bad.arg());
  CHECK(parse.code == 2);
  CHECK(has_substr(parse.err, "edge operator"));
}
