#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "waring/certificates.hpp"
#include "waring/cli.hpp"
#include "waring/errors.hpp"
#include "waring/parse.hpp"

using namespace waring;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("rank subcommands") {
  CHECK(run({"rank", "generic", "--n", "2", "--k", "3", "--d", "2"}).out == "3 (proven)\n");
  auto j = Json::parse(run({"rank", "generic", "--n", "3", "--k", "2", "--d", "1", "--json"}).out);
  CHECK(j["schema"] == 1);
  CHECK(j["value"] == 3);
  CHECK(j["exceptional"] == true);
  CHECK(run({"rank", "series", "--n", "2", "--degrees", "2,2", "--cutoff", "4"}).out == "1,2,1,0,0\n");
  CHECK(run({"rank", "codim", "--n", "2", "--k", "3", "--d", "2", "--s", "1"}).out == "3\n");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kParseError);
  CHECK(run({"--help"}).code == cli::kOk);
  CHECK(run({"rank", "generic", "--n", "2"}).code == cli::kParseError);
  CHECK(run({"decompose", "sylvester", "--poly", "x^^2"}).code == cli::kParseError);
  CHECK(run({"rank", "series", "--n", "2", "--degrees", "2,a"}).code == cli::kParseError);
  CHECK(run({"decompose", "sextic-cubes", "--poly", "x^5*y + y^6"}).code == cli::kOk);
  CHECK(run({"decompose", "sextic-cubes", "--poly", "x^4*y"}).code == cli::kPrecondition);
  CHECK(run({"decompose", "canonical", "--poly", "x^6 + x*y^5", "--k", "3", "--d", "2"}).code == cli::kPrecondition);
  CHECK(run({"monomial", "factor", "--exponents", "1,7", "--k", "4"}).code == cli::kPrecondition);
  CHECK(run({"verify", "cert", "/nonexistent/cert.json"}).code == cli::kParseError);
  // A budget of one fiber point leaves only the heuristic fallback.
  auto b = run({"krank", "bound", "--poly", "x^8 + 2*x^7*y - 3*x^5*y^3 + x^2*y^6 + 5*y^8", "--k", "4", "--budget", "1",
                "--no-numeric", "--samples", "10"});
  CHECK(b.code == cli::kBudget);
  CHECK(b.out.find("upper:") != std::string::npos);
}

TEST_CASE("worked example from the command line") {
  auto r = run({"decompose", "sextic-cubes", "--poly", "x^6+3*x^5*y-3*x^4*y^2-11*x^3*y^3+9*x^2*y^4+21*x*y^5-y^6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(x^2 + x*y - 2*y^2)^3") != std::string::npos);
  CHECK(r.out.find("(x*y + 2*y^2)^3") != std::string::npos);
  CHECK(r.out.find("-1*(x*y + y^2)^3") != std::string::npos);
  CHECK(r.out.find("residual: 0 (exact)") != std::string::npos);
}

TEST_CASE("json certificates round trip") {
  const std::vector<std::vector<std::string>> cmds{
      {"decompose", "sylvester", "--poly", "3*x^2*y + 9*x*y^2 + 7*y^3", "--json"},
      {"decompose", "sylvester", "--poly", "x^5 + 2*x*y^4 - y^5", "--json"},
      {"decompose", "two-squares", "--poly", "x^4 + 3*x^2*y^2 + y^4", "--json"},
      {"decompose", "sextic-cubes", "--poly", "x^6 + 3*x*y^5 + y^6", "--json"},
      {"decompose", "sextic-cubes", "--poly", "x^6 + 3*x*y^5 + y^6", "--fold", "--json"},
      {"decompose", "canonical", "--poly", "x^6 - 2*x^5*y + x^3*y^3 + 4*y^6", "--k", "2", "--d", "3", "--json"},
      {"decompose", "canonical", "--poly", "x^6 + x*y^5", "--k", "3", "--d", "2", "--relaxed", "--json"},
      {"monomial", "factor", "--exponents", "3,10,11", "--k", "4", "--json"},
      {"krank", "bound", "--poly", "x^6*y^2 - x^3*y^5 + x^2*y^6 - x*y^7", "--k", "4", "--samples", "50", "--json"},
  };
  for (const auto& c : cmds) {
    auto r = run(c);
    REQUIRE(r.code == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["schema"] == kSchemaVersion);
    auto check = check_certificate(doc);
    CHECK_MESSAGE(check.ok, c[1] << " " << check.message);
    // Tampering with one coefficient breaks the certificate.
    if (doc["kind"] == "power-sum") {
      doc["terms"][0]["lambda"] = "12345";
      CHECK_FALSE(check_certificate(doc).ok);
    }
  }
  auto k = Json::parse(run(cmds.back()).out);
  CHECK(k["upper"] == 4);
  CHECK(k["upperCertificate"]["exact"] == true);
  CHECK(k["upperCertificate"]["terms"][0]["lambda"].is_string());
  CHECK(k.contains("lower"));
  CHECK(k.contains("lowerConfidence"));

  CHECK_THROWS_AS(check_certificate(Json::parse(R"({"kind": "nope"})")), ParseError);
  CHECK_THROWS_AS(check_certificate(Json::parse(R"({"schema": 2, "kind": "power-sum"})")), ParseError);
}

TEST_CASE("seeded runs are reproducible") {
  const std::vector<std::string> cmd{"krank", "bound", "--poly", "x^8 + 2*x^7*y - 3*x^5*y^3 + x^2*y^6 + 5*y^8",
                                     "--k", "4", "--budget", "60", "--samples", "40", "--seed", "7", "--json"};
  auto a = run(cmd), b = run(cmd);
  CHECK(a.out == b.out);
  setenv("WARING_SEED", "7", 1);
  auto e = run({cmd.begin(), cmd.end() - 3});
  unsetenv("WARING_SEED");
  auto withflag = run({cmd.begin(), cmd.end() - 1});
  CHECK(e.out == withflag.out);
  setenv("WARING_SEED", "oops", 1);
  CHECK(run({cmd.begin(), cmd.end() - 3}).code == cli::kParseError);
  unsetenv("WARING_SEED");
}

TEST_CASE("worked example suite") {
  auto names = cli::worked_example_names();
  CHECK(std::is_sorted(names.begin(), names.end()));
  auto r = run({"verify", "paper-examples", "--jobs", "3"});
  CHECK(r.code == 0);
  for (const auto& n : names) CHECK(r.out.find("PASS " + n) != std::string::npos);
  auto j = Json::parse(run({"verify", "examples", "--json"}).out);
  CHECK(j["ok"] == true);
  CHECK(j["cases"].size() == names.size());
}
