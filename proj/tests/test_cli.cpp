#include <gpencil/cli.hpp>

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using gpencil::cli::run;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line))
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("eig prints four decimals by default") {
  auto r = invoke({"eig", "--range", "1..5"});
  CHECK(r.code == 0);
  CHECK(r.out == "6.4798, -0.6118, -1.0000, -3.3489, -4.5191\n");
  r = invoke({"eig", "--range", "1..6"});
  CHECK(r.out == "6.8501, 2.5592, -0.7419, -1.3749, -3.4396, -5.8528\n");
  r = invoke({"--digits", "2", "eig", "--set", "1,2,3,4,5", "--pencil", "max-min"});
  CHECK(r.out == "2.24, -1.00, -1.00, -1.00, -2.24\n");
  r = invoke({"eig", "--set", "1,2,3", "--closed-form"});
  CHECK(r.code == 0);
  CHECK(r.out == "2.4495, -1.0000, -2.4495\n");
}

TEST_CASE("charpoly, multiplicity and surd-eval") {
  auto r = invoke({"charpoly", "--range", "1..5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("-16x^5 - 48x^4 + 528x^3 + 2480x^2 + 2880x + 960") != std::string::npos);
  r = invoke({"multiplicity", "--range", "1..4"});
  CHECK(r.out.rfind("multiplicity of -1: 2", 0) == 0);
  r = invoke({"surd-eval", "--range", "1..5", "--radicand", "42"});
  CHECK(r.out == "p(sqrt(42)) = 20448 - 3168*sqrt(42)\n");
  r = invoke({"charpoly", "--a", "2,1;1,2", "--b", "1,0;0,1"});
  CHECK(r.out.rfind("det(A - x B) = x^2 - 4x + 3", 0) == 0);
}

TEST_CASE("JSON output round-trips exact values") {
  auto r = invoke({"--format", "json", "charpoly", "--range", "1..5"});
  REQUIRE(r.code == 0);
  auto recs = lines(r.out);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["command"] == "charpoly");
  CHECK(recs[0]["payload"]["coefficients"] == json({"960", "2880", "2480", "528", "-48", "-16"}));

  r = invoke({"--format", "json", "build", "--set", "1/2,3", "--matrix", "max"});
  recs = lines(r.out);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["payload"]["rows"][0] == json({"1/2", "3"}));

  r = invoke({"--format", "json", "eig", "--set", "2,3,5"});
  recs = lines(r.out);
  CHECK(recs[0]["payload"]["digits"] == 4);
  CHECK(recs[0]["payload"]["values"].size() == 3);

  r = invoke({"--format", "json", "build", "--range", "1..40", "--matrix", "lcm"});
  recs = lines(r.out);
  // lcm(37, 39) exceeds nothing but values are still strings.
  CHECK(recs[0]["payload"]["rows"][36][38] == "1443");
}

TEST_CASE("CSV output") {
  const auto r = invoke({"--format", "csv", "eig", "--set", "1,4", "--pencil", "max-min"});
  CHECK(r.code == 0);
  std::istringstream is(r.out);
  std::string header, first, second;
  std::getline(is, header);
  std::getline(is, first);
  std::getline(is, second);
  CHECK(header == "index,value,digits");
  CHECK(first.rfind("1,", 0) == 0);
  CHECK(std::stod(first.substr(2)) == doctest::Approx(2.0));
  CHECK(std::stod(second.substr(2)) == doctest::Approx(-2.0));
}

TEST_CASE("scan output and exit code") {
  auto r = invoke({"scan", "--max-n", "11"});
  CHECK(r.code == 0);
  CHECK(r.out.find("n > 3: 4, 5, 8-11") != std::string::npos);
  CHECK(r.out.find("(n <= 3): 3") != std::string::npos);
  r = invoke({"--format", "json", "scan", "--max-n", "6", "--certify"});
  const auto recs = lines(r.out);
  REQUIRE(recs.size() == 7);
  CHECK(recs[2]["payload"]["verdict"] == "certified-zero");
  CHECK(recs[5]["payload"]["verdict"] == "certified-nonzero");
  CHECK(recs[6]["payload"]["members"] == json({4, 5}));
}

TEST_CASE("interlace reports") {
  auto r = invoke({"interlace", "--range", "1..6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("VIOLATED") == std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"eig", "--set", "1,,2"}).code == 2);
  CHECK(invoke({"eig", "--set", "1,abc"}).code == 2);
  CHECK(invoke({"eig"}).code == 2);
  CHECK(invoke({"--format", "xml", "eig", "--set", "1,2"}).code == 2);
  CHECK(invoke({"eig", "--set", "1,2,2"}).code == 1);
  CHECK(invoke({"eig", "--set", "0,2"}).code == 1);
  CHECK(invoke({"charpoly", "--set", "1/2,2"}).code == 1);
  CHECK(invoke({"eig", "--a", "1,0;0,1", "--b", "1,2;2,1"}).code == 1);
  CHECK(invoke({"surd-eval", "--range", "1..3", "--radicand", "4"}).code == 1);
  CHECK(invoke({"eig", "--range", "1..4", "--closed-form"}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
}
