#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using gpk::cli::run;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("gpk_cli_" + name);
  std::ofstream(path) << body;
  return path;
}

std::string identity_text() {
  std::string s = "10 10\n";
  for (int r = 0; r < 10; ++r) {
    for (int c = 0; c < 10; ++c) s += (c ? " " : "") + std::to_string(r == c);
    s += "\n";
  }
  return s;
}

}  // namespace

TEST_CASE("usage errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"sqroot", "--prime", "91", "4"}).code == 2);
  CHECK(call({"count", "--prime", "11", "--random", "1"}).code == 3);
  CHECK(call({"certify", "--prime", "103", "--matrix", "/nonexistent/file"}).code == 2);
}

TEST_CASE("sqroot") {
  const auto r = call({"--format", "json", "--no-timestamp", "sqroot", "--prime", "103", "4"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["is_square"] == true);
  CHECK(j["root"] == 2);
  CHECK_FALSE(j.contains("generated_at"));
  CHECK(call({"sqroot", "--prime", "103", "5"}).code == 1);
}

TEST_CASE("traces") {
  const auto r = call({"--format", "json", "--no-timestamp", "traces", "--all"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  REQUIRE(j["type1_table"].size() == 3);
  CHECK(j["type1_table"][0]["trace"] == -13);
  CHECK(j["type1_table"][2]["trace"] == 3);

  const auto h = call({"traces", "--type2", "9,1"});
  CHECK(h.code != 0);
  const auto t = call({"--format", "json", "traces", "--type2", "5,5"});
  REQUIRE(t.code == 0);
  CHECK(json::parse(t.out)["type2"]["trace"] == 1);
  const auto d = call({"traces", "--dtau"});
  CHECK(d.code == 0);
  CHECK(d.out.find("-1") != std::string::npos);
}

TEST_CASE("bwb and lemmas") {
  const auto r = call({"--format", "json", "--no-timestamp", "bwb", "--alpha", "0,0", "--beta", "0,0,0", "--twist", "6"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["degree"] == 0);
  CHECK(j["dim"] == 2520);

  const auto neg = call({"--format", "json", "bwb", "--alpha", "0,0", "--beta", "0,0,0", "--twist", "-5"});
  REQUIRE(neg.code == 0);
  CHECK(json::parse(neg.out)["degree"] == 6);

  CHECK(call({"bwb", "--alpha", "0", "--beta", "0,0,0"}).code == 2);

  const auto l = call({"--format", "json", "--no-timestamp", "lemmas", "--which", "all"});
  REQUIRE(l.code == 0);
  const auto lj = json::parse(l.out);
  CHECK(lj["claims"].size() == 42);
  for (const auto& c : lj["claims"]) CHECK(c["pass"] == true);
}

TEST_CASE("count and l-class") {
  const auto r = call({"--format", "json", "--no-timestamp", "count", "--prime", "2", "--random", "1"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["n_Gr"] == 155);
  CHECK(j["n_X"] == j["n_Y"]);
  CHECK(j["n_Q"] == j["n_Q_from_X"]);
  CHECK(j["verdict"] == "n_X = n_Y");

  const auto q3 = call({"--format", "json", "count", "--prime", "3", "--random", "5"});
  REQUIRE(q3.code == 0);
  CHECK_FALSE(json::parse(q3.out).contains("n_Q"));

  const auto l = call({"--format", "json", "--no-timestamp", "l-class", "--identity", "--eval", "2,3"});
  REQUIRE(l.code == 0);
  const auto lj = json::parse(l.out);
  REQUIRE(lj["evaluations"].size() == 2);
  CHECK(lj["evaluations"][0]["Gr(2,5)"] == 155);
  CHECK(lj["evaluations"][1]["Gr(2,5)"] == 1210);
}

TEST_CASE("JSON output is reproducible without timestamps") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--format", "json", "--no-timestamp", "traces", "--all"},
        std::vector<std::string>{"--format", "json", "--no-timestamp", "lemmas"},
        std::vector<std::string>{"--format", "json", "--no-timestamp", "count", "--prime", "3", "--random", "7"},
        std::vector<std::string>{"--format", "json", "--no-timestamp", "l-class", "--identity"}}) {
    const auto a = call(args), b = call(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("generated_at") == std::string::npos);
  }
}

TEST_CASE("certify exit codes") {
  const auto id = write_temp("identity.txt", identity_text());
  const auto r = call({"--format", "json", "--no-timestamp", "certify", "--prime", "103", "--matrix", id.string(),
                       "--stop-at-first-failure"});
  CHECK(r.code == 1);
  const auto j = json::parse(r.out);
  CHECK(j["smooth"] == false);
  CHECK(r.out.find("millis") == std::string::npos);

  const auto bad = write_temp("bad.txt", "3 3\n1 2\n");
  CHECK(call({"certify", "--prime", "103", "--matrix", bad.string()}).code == 2);
  std::filesystem::remove(id);
  std::filesystem::remove(bad);
}
