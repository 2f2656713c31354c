#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(ATLAS_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

std::string data(const std::string& name) { return std::string(ATLAS_DATA) + "/" + name; }

std::string write_tmp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/atlas_cli_" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("coboundary " + data("coboundary_half_wedge.json")).code == 0);
  CHECK(run("verify single-automorphism").code == 0);
  CHECK(run("verify no-such-suite").code == 2);
  CHECK(run("coboundary /no/such/file.json").code == 2);

  // malformed rational 1/0
  auto bad = write_tmp("bad.json", R"({"rank":1,"p":[2],"b":[{"ij":[1,0],"value":"1/0"}]})");
  CHECK(run("invariants " + bad).code == 2);

  // Z-membership violation: precondition error, exit 3
  auto nz = write_tmp("nz.json", R"({"rank":1,"p":[3],"q":[1],"b":[{"ij":[1,1],"value":"1/2"}]})");
  CHECK(run("invariants " + nz).code == 3);
}

TEST_CASE("reports are deterministic and round-trip") {
  std::vector<std::string> cmds = {
      "coboundary " + data("coboundary_integer_tensor.json"),
      "coboundary " + data("coboundary_half_wedge.json"),
      "class " + data("class_gm_mixed.json"),
      "invariants " + data("rank1_single_automorphism.json"),
      "invariants " + data("rank2_pair.json"),
      "resolve " + data("resolve_rank4.json"),
      "hjr " + data("rank3_a_class.json"),
  };
  for (const auto& c : cmds) {
    auto r1 = run(c);
    auto r2 = run(c);
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
    auto parsed = nlohmann::json::parse(r1.out);
    CHECK(parsed.contains("schema"));
  }
}

TEST_CASE("witness output cobounds") {
  auto r = run("coboundary " + data("coboundary_integer_tensor.json") + " --witness");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("is_coboundary").get<bool>());
  CHECK(j.contains("witness"));
  CHECK(j.at("witness").at("arity").get<int>() == 2);
}

TEST_CASE("expected report contents") {
  auto j = nlohmann::json::parse(run("invariants " + data("rank1_single_automorphism.json")).out);
  CHECK(j.at("rank1").at("D1").get<std::string>() == "2");
  CHECK(j.at("rank1").at("Lambda").get<std::string>() == "T + Z_2");
  CHECK(j.at("rank1").at("outer_period").get<std::string>() == "12");
  auto diag = j.at("coordinates").at("b_diagonal").at(0);
  CHECK(diag.at("cyclic").at("value").get<std::string>() == "0");
  CHECK(diag.at("circle").get<std::string>() == "1/2");

  auto h = nlohmann::json::parse(run("coboundary " + data("cochain_heisenberg.json")).out);
  CHECK(!h.at("is_cocycle").get<bool>());
}
