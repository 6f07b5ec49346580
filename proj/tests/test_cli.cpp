#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "oracles.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;

  json first() const { return json::parse(out.substr(0, out.find('\n'))); }
  std::vector<json> lines() const {
    std::vector<json> v;
    std::istringstream in(out);
    for (std::string l; std::getline(in, l);) v.push_back(json::parse(l));
    return v;
  }
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = permlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("contains") {
  const auto r = run({"contains", "--host", "491867532", "--pattern", "51342"});
  CHECK(r.code == 0);
  CHECK(r.first()["result"] == true);
  CHECK(r.err.find("contains") != std::string::npos);
  CHECK(run({"contains", "--host", "2314", "--pattern", "321"}).first()["result"] == false);
}

TEST_CASE("occurrences") {
  const auto r = run({"occurrences", "--host", "4321", "--pattern", "321"});
  CHECK(r.first()["count"] == 4);
  CHECK(r.first()["occurrences"][0] == json::array({1, 2, 3}));
}

TEST_CASE("member") {
  CHECK(run({"member", "--perm", "321654", "--pattern", "321", "--t", "1"}).first()["result"] == false);
  CHECK(run({"member", "--perm", "321654", "--pattern", "321", "--t", "2"}).first()["result"] == true);
  CHECK(run({"member", "--perm", "3421", "--pattern", "321", "--method", "structural"}).first()["result"] == true);
  CHECK(run({"member", "--perm", "4321", "--pattern", "321", "--method", "shape"}).first()["result"] == false);
  CHECK(run({"member", "--perm", "2143", "--basis", "123,2143", "--t", "0"}).first()["result"] == false);
  CHECK(run({"member", "--perm", "4321", "--pattern", "231", "--method", "shape"}).code == 2);
}

TEST_CASE("essential and rsk") {
  const auto e = run({"essential", "--perm", "1742653"}).first();
  CHECK(e["positions"] == json::array({3, 7}));
  CHECK(e["classes"]["7"] == "small");
  const auto r = run({"rsk", "--perm", "231"}).first();
  CHECK(r["shape"] == json::array({2, 1}));
  CHECK(r["P"] == json::parse("[[1,3],[2]]"));
  CHECK(r["in_av321p1"] == true);
}

TEST_CASE("count by every method") {
  const auto r = run({"count", "--pattern", "321", "--t", "1", "--n", "4", "--method", "formula"});
  CHECK(r.code == 0);
  CHECK(r.first()["count"] == 23);
  for (const std::string pattern : {"231", "321"}) {
    json reference;
    for (const std::string method : {"bruteforce", "gf", "formula", "functional-eq"}) {
      const auto c = run({"count", "--pattern", pattern, "--t", "1", "--nmax", "8", "--method", method});
      if (c.code != 0) continue;
      if (reference.is_null()) reference = c.first()["counts"];
      CHECK(c.first()["counts"] == reference);
    }
  }
  const auto structural = run({"count", "--pattern", "231", "--structural", "small-essential", "--nmax", "7"});
  const auto gf = run({"count", "--pattern", "231", "--structural", "small-essential", "--nmax", "7", "--method", "gf"});
  CHECK(structural.first()["counts"] == gf.first()["counts"]);
}

TEST_CASE("count output formats and fixtures") {
  const auto csv = run({"count", "--pattern", "321", "--t", "1", "--nmax", "4", "--method", "formula", "--format", "csv"});
  CHECK(csv.out == "n,count\n0,1\n1,1\n2,2\n3,6\n4,23\n");
  const auto b = run({"count", "--pattern", "321", "--t", "1", "--nmax", "2", "--method", "gf", "--format", "bfile"});
  CHECK(b.out == "0 1\n1 1\n2 2\n");
  const auto dir = std::filesystem::temp_directory_path() / "permlab_cli_fixtures";
  std::filesystem::remove_all(dir);
  CHECK(run({"count", "--pattern", "231", "--t", "0", "--nmax", "5", "--seed-fixtures", dir.string()}).code == 0);
  CHECK(oracle::read_lines((dir / "av_231_t0_bruteforce.csv").string()).size() == 7);
  std::filesystem::remove_all(dir);
}

TEST_CASE("large coefficients are exact") {
  const auto r = run({"series", "--gf", "av231p1", "--order", "40"});
  const json coeffs = r.first()["coefficients"];
  REQUIRE(coeffs.size() == 41);
  CHECK(coeffs[4] == 24);
  CHECK(coeffs[40].is_string());
  const auto custom = run({"series", "--expr", "(1; -1; 0, 2)", "--order", "5"}).first()["coefficients"];
  CHECK(custom == json::array({1, 1, 2, 5, 14, 42}));
}

TEST_CASE("basis and sort") {
  const auto b = run({"basis", "--pattern", "321", "--t", "1", "--max-len", "7"}).first();
  CHECK(b["size"] == 26);
  CHECK(b["antichain"] == true);
  CHECK(b["complete_under_bound"] == false);
  CHECK(b["elements"][0] == "4,3,2,1");
  const auto s = run({"sort", "--perm", "231", "--machine", "stack", "--buffers", "1", "--verbose"}).first();
  CHECK(s["sortable"] == true);
  CHECK(!s["moves"].empty());
  CHECK(run({"sort", "--n", "5", "--machine", "queues2"}).first()["count"] == 42);
}

TEST_CASE("verify reports per check") {
  const auto r = run({"verify", "--suite", "rsk", "--nmax", "6"});
  CHECK(r.code == 0);
  for (const auto& line : r.lines()) CHECK(line["passed"] == true);
  CHECK(r.err.find("checks passed") != std::string::npos);
  const auto m = run({"verify", "--suite", "machines", "--nmax", "6"});
  CHECK(m.code == 1);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"contains", "--host", "12"}).code == 2);
  CHECK(run({"contains", "--host", "11", "--pattern", "1"}).code == 2);
  CHECK(run({"count", "--pattern", "321", "--n", "11"}).code == 2);
  CHECK(run({"count", "--pattern", "1234", "--t", "1", "--n", "5", "--method", "formula"}).code == 2);
  CHECK(run({"count", "--pattern", "321", "--n", "4", "--nmax", "5"}).code == 2);
  CHECK(run({"verify", "--suite", "nothing"}).code == 2);
  CHECK(run({"sort", "--perm", "21", "--machine", "deque"}).code == 2);
  CHECK(run({"series", "--gf", "unknown"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
}
