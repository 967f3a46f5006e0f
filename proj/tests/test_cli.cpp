#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bgg/cli.hpp"

namespace {

struct RunResult {
  int rc;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int rc = bgg::cli::run(std::move(args), out, err);
  return {rc, out.str(), err.str()};
}

std::string a1_path() {
  return std::string(BGG_REPO_DIR) + "/data/a1_block.json";
}

}  // namespace

TEST_CASE("kl pair queries", "[cli]") {
  auto r = run_cli({"kl", "--type", "A1", "e", "s"});
  CHECK(r.rc == 0);
  CHECK(r.out == "1\n");

  r = run_cli({"kl", "--type", "A3", "e", "tsut"});
  CHECK(r.rc == 0);
  CHECK(r.out == "1 + q\n");

  r = run_cli({"kl", "--type", "A3", "st", "e"});  // incomparable: zero
  CHECK(r.rc == 0);
  CHECK(r.out == "0\n");

  // Unreduced input words are accepted and reduced.
  r = run_cli({"kl", "--type", "A3", "ss", "sstsut"});
  CHECK(r.rc == 0);
  CHECK(r.out == "1 + q\n");
}

TEST_CASE("kl census output", "[cli]") {
  auto r = run_cli({"kl", "--type", "A3"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("P[e,tsut] = 1 + q") != std::string::npos);
  CHECK(r.out.find("P[t,tsut] = 1 + q") != std::string::npos);
  CHECK(r.out.find("P[su,stuts] = 1 + q") != std::string::npos);
  CHECK(r.out.find("not rationally smooth (2): tsut stuts") != std::string::npos);

  auto r2 = run_cli({"kl", "--type", "A2"});
  CHECK(r2.rc == 0);
  CHECK(r2.out.find("every Kazhdan-Lusztig polynomial") != std::string::npos);
}

TEST_CASE("json output re-renders to the text output", "[cli]") {
  for (std::vector<std::string> base :
       {std::vector<std::string>{"kl", "--type", "A3"},
        std::vector<std::string>{"kl", "--type", "A3", "t", "tsut"},
        std::vector<std::string>{"verify", a1_path()}}) {
    auto text = run_cli(base);
    base.push_back("--format");
    base.push_back("json");
    auto js = run_cli(base);
    REQUIRE(js.rc == text.rc);
    auto parsed = nlohmann::json::parse(js.out);
    std::string rendered;
    if (base[0] == "verify")
      rendered = bgg::cli::render_verify(parsed);
    else if (base.size() > 5)
      rendered = bgg::cli::render_kl_pair(parsed);
    else
      rendered = bgg::cli::render_kl_census(parsed);
    CHECK(rendered == text.out);
  }
}

TEST_CASE("verify accepts the bundled block", "[cli]") {
  auto r = run_cli({"verify", "--algebra", a1_path()});
  CHECK(r.rc == 0);
  CHECK(r.out.find("axioms: ok") != std::string::npos);
  CHECK(r.out.find("total dimension: 5") != std::string::npos);
  CHECK(r.out.find("standard dimensions: e:1 s:2") != std::string::npos);
}

TEST_CASE("verify rejects a non highest weight presentation", "[cli]") {
  // Same quiver as the bundled block but with only the other cycle killed:
  // a loop survives at s and endomorphisms of the standard module grow.
  auto doc = nlohmann::json::parse(std::ifstream(a1_path()));
  doc["relations"] = nlohmann::json::array();
  doc["relations"].push_back(nlohmann::json::array(
      {{{"coeff", "1"}, {"path", {"e_s", "s_e"}}}}));
  auto tmp = std::filesystem::temp_directory_path() / "bgg_cli_loop.json";
  std::ofstream(tmp) << doc.dump(2);

  auto r = run_cli({"verify", tmp.string()});
  CHECK(r.rc == 1);
  CHECK(r.out.find("axioms: FAILED") != std::string::npos);
  std::filesystem::remove(tmp);
}

TEST_CASE("bad invocations exit with code 2", "[cli]") {
  CHECK(run_cli({}).rc == 2);
  CHECK(run_cli({"frobnicate"}).rc == 2);
  CHECK(run_cli({"kl"}).rc == 2);                        // missing --type
  CHECK(run_cli({"kl", "--type", "Z9"}).rc == 2);        // unknown type
  CHECK(run_cli({"kl", "--type", "A3", "e"}).rc == 2);   // half a pair
  CHECK(run_cli({"kl", "--type", "A3", "x", "y"}).rc == 2);
  CHECK(run_cli({"verify"}).rc == 2);                    // no file
  CHECK(run_cli({"verify", "/nonexistent/algebra.json"}).rc == 2);
  CHECK(run_cli({"kl", "--type", "A3", "--format", "yaml"}).rc == 2);

  auto help = run_cli({"--help"});
  CHECK(help.rc == 0);
  CHECK(help.out.find("kl") != std::string::npos);
}

TEST_CASE("byte identical reruns", "[cli]") {
  auto a = run_cli({"kl", "--type", "A3"});
  auto b = run_cli({"kl", "--type", "A3"});
  CHECK(a.out == b.out);
  auto c = run_cli({"verify", a1_path(), "--format", "json"});
  auto d = run_cli({"verify", a1_path(), "--format", "json"});
  CHECK(c.out == d.out);
}
