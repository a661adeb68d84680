#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lctkit/cli/cli.hpp"
#include "lctkit/ledger/report_json.hpp"
#include "lctkit/ledger/rigidity.hpp"
#include "lctkit/ledger/verification.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = lctkit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
  const Result r = invoke(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("documented invocations") {
  CHECK(invoke({"lct", "--ideal", "x^2, y^3"}).out == "{\"lct\":\"5/6\",\"normal\":[\"3\",\"2\"],\"xi\":\"6/5\"}\n");

  const json rigidity = invoke_json({"rigidity", "--n", "4"});
  CHECK(rigidity["h0"] == 15);
  CHECK(rigidity["bound_improved"] == "15/1");
  CHECK(rigidity["verdict"] == "equality");

  const json lattice = invoke_json({"lattice", "--a", "3,2"});
  CHECK(lattice["count"] == 5);
  CHECK(lattice["bound_pairing"] == "9/2");
}

TEST_CASE("monomial subcommands") {
  const std::string polygon = "y^7, y^5*x, y^3*x^2, y*x^4, x^6";
  const json newton = invoke_json({"newton", "-i", polygon});
  CHECK(newton["xi"] == "5/2");
  CHECK(newton["normal"] == json({"1", "1"}));
  CHECK(invoke_json({"colength", "-i", polygon})["colength"] == 20);
  CHECK(invoke_json({"colength", "-i", "x^2"})["colength"] == 2);
  CHECK(invoke_json({"colength", "-i", "x^2", "--vars", "x,y"})["colength"] == "inf");
  CHECK(invoke_json({"lct", "-i", polygon, "--c", "2/5"})["verdict"] == "log-canonical");
  CHECK(invoke_json({"lct", "-i", polygon, "--c", "3/7"})["verdict"] == "not-log-canonical");
  CHECK(invoke_json({"lct", "-i", "1"})["lct"] == "inf");

  const json point = invoke_json({"newton", "-i", "x^2, y^2", "--point", "1,1"});
  CHECK(point["contains"] == true);

  const json upper = invoke_json({"multiplier", "-i", "x^2, y^3", "--c", "5/6"});
  CHECK(upper["trivial"] == true);
  const json strict = invoke_json({"multiplier", "-i", "x^2, y^3", "--c", "5/6", "--strict"});
  CHECK(strict["trivial"] == false);

  const json parsed = invoke_json({"parse", "-i", "x*y, x^2, x^3*y", "--vars", "x,y,z"});
  CHECK(parsed["vars"] == json({"x", "y", "z"}));
  CHECK(parsed["generators"] == json({{1, 1, 0}, {2, 0, 0}}));
}

TEST_CASE("initial ideal and semidecision subcommands") {
  const json lex = invoke_json({"initial", "-p", "x + y^2, y^3"});
  CHECK(lex["status"] == "certified");
  CHECK(lex["standard_count"] == 3);
  CHECK(lex["generators"] == json({{0, 2}, {1, 1}, {2, 0}}));

  const json weighted = invoke_json({"initial", "-p", "x + y^2, y^3", "--order", "weight", "--weights", "1,1"});
  CHECK(weighted["generators"] == json({{0, 3}, {1, 0}}));

  const json fixed = invoke_json({"initial", "-p", "x^2 + y^3", "--trunc", "6"});
  CHECK(fixed["status"] == "heuristic");

  const json yes = invoke_json({"semidecide", "-p", "x + y^5", "--c", "1", "--order", "weight", "--weights", "1,1"});
  CHECK(yes["verdict"] == "log-canonical");
  const json unknown = invoke_json({"semidecide", "-p", "x + y^5", "--c", "1"});
  CHECK(unknown["verdict"] == "unknown");
  CHECK(unknown["threshold"] == "1/5");

  const Result capped = invoke({"initial", "-p", "x^2 + y^3", "--max-trunc", "8"});
  CHECK(capped.code == 1);
  CHECK(json::parse(capped.err)["error"]["kind"] == "limit_exceeded");
}

TEST_CASE("ledger subcommands round-trip through the report readers") {
  for (std::uint64_t n : {3u, 4u, 5u, 17u}) {
    const json j = invoke_json({"rigidity", "--n", std::to_string(n)});
    CHECK(lctkit::rigidity_from_json(j) == lctkit::rigidity_check(n));
  }

  const json colength = invoke_json({"verify", "--suite", "colength", "--n", "2", "--box", "3"});
  CHECK(lctkit::verification_from_json(colength) == lctkit::verify_colength_theorem(2, 3));
  CHECK(colength["passed"] == true);

  const json all = invoke_json({"verify", "--suite", "all", "--n", "2", "--box", "2"});
  CHECK(all.contains("colength"));
  CHECK(all.contains("multiplier"));
  CHECK(all["multiplier"]["failures"].empty());

  const json degrees = invoke_json({"degrees", "--d", "4", "--m", "3,3"});
  CHECK(degrees["bezout_degree"] == 36);
  const json quoted = invoke_json({"degrees", "--d", "4", "--m", "100000,100000,100000,100000"});
  CHECK(quoted["bezout_degree"] == "400000000000000000000");

  const json bounds = invoke_json({"bounds", "--n", "13"});
  CHECK(bounds["larger"] == "cyclic");
  CHECK(bounds["computed_crossover"] == 13);
  CHECK(invoke_json({"bounds", "--n", "6", "--crossover"})["rows"].size() == 6);
}

TEST_CASE("formula subcommands") {
  CHECK(invoke_json({"weighted", "--m", "2,3,6"})["threshold"] == "1/1");
  CHECK(invoke_json({"weighted", "--m", "2,3", "--c", "5/6"})["verdict"] == "log-canonical");
  CHECK(invoke_json({"corti", "--weights", "1,3", "--c", "1/2"})["bound"] == "64/3");
  const json blowup = invoke_json({"blowup", "--codim", "2", "--c", "1", "--mult", "3/2"});
  CHECK(blowup["margin"] == "-1/2");
  CHECK(blowup["canonical_necessary"] == false);
  CHECK(blowup["log_canonical_necessary"] == true);
  CHECK(invoke_json({"witness", "-i", "x^2, y^3", "--weights", "3,2", "--c", "1"})["holds"] == true);
  CHECK(invoke_json({"criterion", "-p", "x^2 + y^3", "--weights", "3,2", "--c", "5/6"})["satisfied"] == true);

  const json registry = invoke_json({"registry"});
  CHECK(registry["schema_version"] == 1);
  CHECK_FALSE(registry["entries"].empty());
  CHECK(invoke_json({"registry", "--name", "ksc-6.45", "--param", "r=5"})["threshold"] == "7/10");
  CHECK(invoke({"registry", "--name", "ksc-6.45"}).code == 1);
}

TEST_CASE("exit codes and error objects") {
  const Result missing = invoke({"lct"});
  CHECK(missing.code == 2);
  CHECK(json::parse(missing.err)["error"]["kind"] == "usage");

  CHECK(invoke({}).code == 2);
  CHECK(invoke({"lct", "--bogus", "1"}).code == 2);
  CHECK(invoke({"initial", "-p", "x", "-i", "x"}).code == 2);
  CHECK(invoke({"initial", "-p", "x", "--order", "weight"}).code == 2);
  CHECK(invoke({"verify", "--suite", "everything"}).code == 2);

  const Result bad = invoke({"lct", "-i", "x^2 + y"});
  CHECK(bad.code == 1);
  const json error = json::parse(bad.err);
  CHECK(error["error"]["kind"] == "parse_error");
  CHECK(bad.out.empty());

  const Result domain = invoke({"lattice", "--a", "3,-2"});
  CHECK(domain.code == 1);
  CHECK(json::parse(domain.err)["error"]["kind"] == "domain_error");

  const Result table = invoke({"rigidity", "--n", "2", "--table"});
  CHECK(table.code == 1);
  CHECK(table.err.rfind("error (domain_error)", 0) == 0);

  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"lct", "--help"}).code == 0);
}

TEST_CASE("file input, table output and determinism") {
  const std::string path = "cli_test_ideal.txt";
  {
    std::ofstream f(path);
    f << "y^7, y^5*x, y^3*x^2, y*x^4, x^6\n";
  }
  CHECK(invoke_json({"lct", "--ideal", "@" + path})["lct"] == "2/5");
  std::remove(path.c_str());
  CHECK(invoke({"lct", "--ideal", "@" + path}).code == 1);

  const Result table = invoke({"lct", "-i", "x^2, y^3", "--table"});
  CHECK(table.code == 0);
  CHECK(table.out == "lct     5/6\nnormal  (3, 2)\nxi      6/5\n");

  const std::vector<std::string> args = {"verify", "--suite", "all", "--n", "2", "--box", "3"};
  CHECK(invoke(args).out == invoke(args).out);
  CHECK(invoke({"newton", "-i", "x^3, x*y, y^3"}).out == invoke({"newton", "-i", "x^3, x*y, y^3"}).out);
}
