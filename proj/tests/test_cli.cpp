#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = eqlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("eqlab_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

// Report text with the job-count echoes removed.
std::string without_jobs(const std::string& report) {
  auto j = nlohmann::ordered_json::parse(report);
  j.erase("command");
  j["parameters"].erase("jobs");
  return j.dump(2);
}

const std::string kC8EdgeList = "8\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 0\n";

}  // namespace

TEST_CASE("check exit codes", "[cli]") {
  CHECK(run({"check", "--property", "degree-equipartite", "Es\\o"}).code == 0);  // C6
  CHECK(run({"check", "--property", "equipartite", "C~"}).code == 0);

  const Result c8 = run({"check", "--property", "degree-equipartite", temp_file("c8.txt", kC8EdgeList)});
  CHECK(c8.code == 1);
  CHECK(c8.out.find("{0,1,2,5}") != std::string::npos);

  const Result odd = run({"check", "--property", "degree-equipartite", "D??"});
  CHECK(odd.code == 2);
  CHECK_FALSE(odd.err.empty());

  CHECK(run({"check", "--property", "degree-equipartite", "A_x"}).code == 2);
  CHECK(run({"check", "--property", "bogus", "C~"}).code == 2);
  CHECK(run({"check", "C~"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", "--property", "degree-equipartite", temp_file("bad.txt", "4\n0 9\n")}).code == 2);
}

TEST_CASE("check JSON report", "[cli]") {
  const Result r = run({"check", "--property", "degree-equipartite", "--json", "--deterministic",
                        temp_file("c8j.txt", kC8EdgeList)});
  REQUIRE(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == eqlab::cli::kReportSchema);
  CHECK(j["command"].get<std::string>().rfind("check ", 0) == 0);
  CHECK_FALSE(j.contains("wall_time_seconds"));
  REQUIRE(j["records"].size() == 1);
  const auto& rec = j["records"][0];
  CHECK(rec["graph6"].is_string());

  const Result timed = run({"check", "--property", "degree-equipartite", "--json", "C~"});
  CHECK(nlohmann::json::parse(timed.out).contains("wall_time_seconds"));
}

TEST_CASE("deterministic JSON is byte-identical across job counts", "[cli]") {
  const Result one = run({"verify-theorem", "--order", "6", "--json", "--deterministic", "--jobs", "1"});
  const Result four = run({"verify-theorem", "--order", "6", "--json", "--deterministic", "--jobs", "4"});
  REQUIRE(one.code == 0);
  REQUIRE(four.code == 0);
  // Only the echoed invocation and the jobs parameter may differ.
  CHECK(without_jobs(one.out) == without_jobs(four.out));
  CHECK(one.out == run({"verify-theorem", "--order", "6", "--json", "--deterministic", "--jobs", "1"}).out);
  const auto j = nlohmann::json::parse(one.out);
  CHECK(j["records"].size() == 156);

  const Result w1 = run({"check", "--property", "weakly-equipartite", "--json", "--deterministic", "--jobs", "1",
                         temp_file("c8d.txt", kC8EdgeList)});
  const Result w3 = run({"check", "--property", "weakly-equipartite", "--json", "--deterministic", "--jobs", "3",
                         temp_file("c8d.txt", kC8EdgeList)});
  CHECK(without_jobs(w1.out) == without_jobs(w3.out));
}

TEST_CASE("classify", "[cli]") {
  const Result c4 = run({"classify", "C]"});
  CHECK(c4.code == 0);
  CHECK(c4.out.find("COCKTAIL_K2N_MINUS_NK2(n=2)") != std::string::npos);
  CHECK(c4.out.find("TWO_KN_PLUS_NK2(n=2)") != std::string::npos);
  CHECK(c4.out.find("COMPLETE_BIPARTITE_KNN(n=2)") != std::string::npos);

  const Result petersen = run({"classify", "IheA@GUAo"});
  CHECK(petersen.code == 0);
  CHECK(petersen.out.find("not in characterization") != std::string::npos);

  const Result k8 = run({"classify", "G~~~~{"});
  CHECK(k8.out.find("COMPLETE_K2N(n=4)") != std::string::npos);
}

TEST_CASE("verify-theorem and spectral-search", "[cli]") {
  const Result four = run({"verify-theorem", "--order", "4", "--json", "--deterministic"});
  REQUIRE(four.code == 0);
  const auto j = nlohmann::json::parse(four.out);
  CHECK(j["records"].size() == 11);
  CHECK(j["summary"]["disagreements"] == 0);
  CHECK(j["summary"]["degree_equipartite"] == 4);
  CHECK(j["summary"]["in_characterization"] == 4);

  CHECK(run({"verify-theorem", "--order", "10"}).code == 2);
  CHECK(run({"verify-theorem", "--order", "5"}).code == 2);

  const Result cubic = run({"spectral-search", "--order", "8", "--degree", "3", "--json", "--deterministic"});
  REQUIRE(cubic.code == 0);
  CHECK(nlohmann::json::parse(cubic.out)["records"].size() == 6);
  CHECK(run({"spectral-search", "--order", "12", "--degree", "3"}).code == 2);
  CHECK(run({"spectral-search", "--order", "10"}).code == 2);
}

TEST_CASE("enumerate and convert", "[cli]") {
  const Result e = run({"enumerate", "--order", "4"});
  CHECK(e.code == 0);
  CHECK(std::count(e.out.begin(), e.out.end(), '\n') == 11);
  CHECK(run({"enumerate", "--order", "9"}).code == 2);
  const Result cycles = run({"enumerate", "--order", "6", "--degree", "2"});
  CHECK(std::count(cycles.out.begin(), cycles.out.end(), '\n') == 2);

  const Result to_g6 = run({"convert", "--to", "graph6", temp_file("c4.txt", "4\n0 1\n1 2\n2 3\n3 0\n")});
  CHECK(to_g6.code == 0);
  CHECK(to_g6.out == "Cl\n");
  const Result to_edges = run({"convert", "--to", "edgelist", "Cl"});
  CHECK(to_edges.out == "4\n0 1\n0 3\n1 2\n2 3\n");
}

TEST_CASE("EQLAB_MAX_ORDER lowers caps", "[cli]") {
  ::setenv("EQLAB_MAX_ORDER", "4", 1);
  CHECK(run({"enumerate", "--order", "6"}).code == 2);
  CHECK(run({"enumerate", "--order", "4"}).code == 0);
  CHECK(run({"check", "--property", "degree-equipartite", "Es\\o"}).code == 2);
  ::setenv("EQLAB_MAX_ORDER", "100", 1);
  CHECK(run({"enumerate", "--order", "9"}).code == 2);
  ::setenv("EQLAB_MAX_ORDER", "abc", 1);
  CHECK(run({"enumerate", "--order", "4"}).code == 2);
  ::unsetenv("EQLAB_MAX_ORDER");
}
