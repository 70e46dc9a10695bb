#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "surjtop/report.hpp"

using namespace surjtop;

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run_cli(std::vector<std::string> const& args, cli::Environment env = {}) {
    std::ostringstream out, err;
    int const          code = cli::run(args, out, err, env);
    return {code, out.str(), err.str()};
  }

  std::filesystem::path temp_file(std::string const& name, std::string const& content) {
    auto const path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
  }
}  // namespace

TEST_CASE("classify JSON") {
  auto const r = run_cli({"classify", "<x,y | x^4 y x y>", "--format", "json"});
  REQUIRE(r.code == cli::exit_ok);
  auto const j = Json::parse(r.out);
  CHECK(j["hypothesis_ok"] == true);
  CHECK(j["totals"]["free_classes"] == 3);
  CHECK(j["totals"]["strongly_surjective"] == 1);
  CHECK(j["alphas"].size() == 2);
  CHECK(r.out == run_cli({"classify", "<x,y | x^4 y x y>", "--format", "json"}).out);
}

TEST_CASE("classify outside the hypothesis") {
  for (std::string const text : {"< x | x^2 >", "< x, y | x y x y^-1 >",
                                 "< x, y | x y x^-1 y^-1 >"}) {
    auto const r = run_cli({"classify", text, "--format", "json"});
    CHECK(r.code == cli::exit_hypothesis);
    auto const j = Json::parse(r.out);
    CHECK(j["hypothesis_ok"] == false);
    CHECK(j["alphas"].empty());
    CHECK(r.err.find("hypothesis failed") != std::string::npos);
  }
}

TEST_CASE("h2 with a twisted system") {
  auto const r = run_cli({"h2", "<x | x^2>", "--alpha", "x=-1", "--format", "json"});
  REQUIRE(r.code == cli::exit_ok);
  auto const j = Json::parse(r.out);
  CHECK(j["h2"]["free_rank"] == 1);
  CHECK(j["h2"]["torsion"].empty());
  CHECK(j["order"].is_null());

  auto const t = run_cli({"h2", "<x,y | x^4 y x y>", "--alpha", "y=-1", "--format", "table"});
  CHECK(t.code == cli::exit_ok);
  CHECK(t.out.find("Z/3") != std::string::npos);

  auto const bad = run_cli({"h2", "<x,y | x^4 y x y>", "--alpha", "x=-1"});
  CHECK(bad.code == cli::exit_invalid);
}

TEST_CASE("parse errors carry positions") {
  auto const r = run_cli({"parse", "< x, y | x z >"});
  CHECK(r.code == cli::exit_invalid);
  CHECK(r.err.find("unknown-generator") != std::string::npos);
  CHECK(r.err.find("^") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).code == cli::exit_usage);
  CHECK(run_cli({"bogus"}).code == cli::exit_usage);
  CHECK(run_cli({"classify"}).code == cli::exit_usage);
  CHECK(run_cli({"classify", "<x|x^3>", "--format", "xml"}).code == cli::exit_usage);
  CHECK(run_cli({"family"}).code == cli::exit_usage);
  CHECK(run_cli({"parse", "/nonexistent/file.txt"}).code == cli::exit_invalid);
}

TEST_CASE("format selection") {
  std::vector<std::string> const args{"systems", "<x,y | x^4 y x y>"};
  cli::Environment               tty;
  tty.stdout_is_terminal = true;
  CHECK(run_cli(args, tty).out.rfind("presentation:", 0) == 0);
  CHECK(run_cli(args).out.front() == '{');
  cli::Environment env = tty;
  env.format_variable  = "json";
  CHECK(run_cli(args, env).out.front() == '{');
  auto with_flag = args;
  with_flag.insert(with_flag.end(), {"--format", "table"});
  CHECK(run_cli(with_flag, env).out.rfind("presentation:", 0) == 0);
  env.format_variable = "yaml";
  CHECK(run_cli(args, env).code == cli::exit_usage);
}

TEST_CASE("file input and output") {
  auto const in = temp_file("surjtop_cli_input.txt",
                            "# example\n\n< x, y | x^3 y^2 >\n");
  auto const out_path = std::filesystem::temp_directory_path() / "surjtop_cli_out.json";
  std::filesystem::remove(out_path);
  auto const r = run_cli({"classify", in.string(), "--out", out_path.string()});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out.empty());
  std::ifstream     f(out_path);
  std::stringstream ss;
  ss << f.rdbuf();
  auto const j = Json::parse(ss.str());
  CHECK(j["alphas"][1]["c_star"] == 3);

  auto const bad = temp_file("surjtop_cli_bad.txt", "# two lines\n<x|x>\n<y|y>\n");
  CHECK(run_cli({"parse", bad.string()}).code == cli::exit_invalid);
  std::filesystem::remove(in);
  std::filesystem::remove(bad);
  std::filesystem::remove(out_path);
}

TEST_CASE("family and realize") {
  auto const f = run_cli({"family", "example-k1", "--k", "5", "--format", "json"});
  REQUIRE(f.code == cli::exit_ok);
  auto const j = Json::parse(f.out);
  CHECK(j["presentation"] == "< x, y | x^6 y x y >");
  CHECK(j["computed_order"] == 5);
  CHECK(j["verified"] == true);
  CHECK(run_cli({"family", "--family", "case3", "--n", "2"}).code == cli::exit_ok);
  CHECK(run_cli({"family", "example-k1", "--k", "2"}).code == cli::exit_invalid);

  auto const r = run_cli({"realize", "--a", "3", "--b", "2", "--c", "5", "--format", "table"});
  REQUIRE(r.code == cli::exit_ok);
  CHECK(r.out.find("order 5 under beta2, verified") != std::string::npos);
  CHECK(run_cli({"realize", "--a", "2", "--b", "4", "--c", "3"}).code == cli::exit_invalid);
  CHECK(run_cli({"realize", "--a", "3", "--b", "2"}).code == cli::exit_invalid);
}

TEST_CASE("sweep") {
  auto const r = run_cli({"sweep", "--family", "case1", "--p", "0..2", "--q", "0..1",
                          "--j", "0..3", "--format", "json"});
  REQUIRE(r.code == cli::exit_ok);
  auto const j = Json::parse(r.out);
  CHECK(j["rows"].size() == 24);
  CHECK(j["all_match"] == true);
  CHECK(j["rows"][0]["params"]["p"] == 0);
  CHECK(j["rows"][23]["params"]["j"] == 3);

  auto const real = run_cli({"sweep", "--family", "realize", "--a", "2..5", "--b", "2..5",
                             "--c", "1..5", "--format", "json"});
  REQUIRE(real.code == cli::exit_ok);
  for (auto const& row : Json::parse(real.out)["rows"]) {
    CHECK(row["match"] == true);
  }
  CHECK(run_cli({"sweep", "--family", "case1", "--j", "5..2"}).code == cli::exit_invalid);
}
