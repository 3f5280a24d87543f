#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "minmat/cli.hpp"
#include "minmat/matrix_core.hpp"
#include "minmat/symfun.hpp"

using namespace minmat;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json payload(const Result& r) { return json::parse(r.out).at("payload"); }

}  // namespace

TEST_CASE("matrix") {
  auto r = run({"matrix", "min", "--n", "3", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "c1,c2,c3\n1,1,1\n1,2,2\n1,2,3\n");

  r = run({"matrix", "delta", "--inc", "2,3,4", "--format", "plain"});
  CHECK(r.code == 0);
  CHECK(r.out == "2 2 2\n2 5 5\n2 5 9\n");

  CHECK(run({"matrix", "min", "--n", "0"}).code == 2);
  CHECK(run({"matrix", "c", "--n", "4", "--k", "4"}).code == 2);
  CHECK(run({"matrix", "theta", "--inc", "1,2"}).code == 2);
  CHECK(run({"matrix", "delta", "--inc", "1,x"}).code == 2);
  CHECK(run({"matrix", "square", "--n", "2"}).code == 2);
}

TEST_CASE("matrix JSON round-trips") {
  const auto check = [](std::vector<std::string> args, const ExactMatrix& expected) {
    const auto r = run(args);
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc.at("tool") == "minmat");
    CHECK(doc.at("version") == cli::kVersion);
    const json rows = doc.at("payload").at("matrix");
    ExactMatrix parsed(static_cast<Index>(rows.size()), static_cast<Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        parsed(static_cast<Index>(i), static_cast<Index>(j)) = parse_bigint(rows[i][j].get<std::string>());
      }
    }
    CHECK(parsed == expected);
  };
  check({"matrix", "min", "--n", "7"}, min_matrix(7));
  check({"matrix", "c", "--n", "9", "--k", "3"}, c_matrix(9, 3));
  check({"matrix", "theta", "--inc", "3,1,2,5"}, theta_matrix(Increments{3, 1, 2, 5}));
  check({"matrix", "delta", "--inc", "123456789012345678901234567890,-1"},
        delta_matrix(Increments{BigInt("123456789012345678901234567890"), BigInt(-1)}));
}

TEST_CASE("det") {
  auto r = run({"det", "delta", "--inc", "2,3,4", "--method", "both", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "method,value\nclosed,24\nbareiss,24\n");

  r = run({"det", "min", "--n", "50"});
  CHECK(r.code == 0);
  CHECK(payload(r).at("values").at("closed") == "1");

  r = run({"det", "theta", "--inc", "2,3,5", "--method", "both"});
  CHECK(r.code == 0);
  CHECK(payload(r).at("values").at("closed") == "10");
  CHECK(payload(r).at("values").at("bareiss") == "10");
  CHECK(payload(r).at("agree") == true);

  r = run({"det", "c", "--n", "9", "--k", "4", "--method", "bareiss", "--format", "plain"});
  CHECK(r.out == "bareiss: 4\n");
  CHECK(run({"det", "min", "--n", "3", "--method", "guess"}).code == 2);
}

TEST_CASE("symfun") {
  auto r = run({"symfun", "--n", "3", "--method", "all"});
  REQUIRE(r.code == 0);
  const json rows = payload(r).at("rows");
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].at("k") == 2);
  for (const auto& [method, value] : rows[1].at("values").items()) CHECK(value == "5");
  CHECK(rows[1].at("values").size() == 6);

  r = run({"symfun", "--n", "5", "--k", "1", "--format", "csv"});
  CHECK(r.out == "k,closed\n1,15\n");
  r = run({"symfun", "--n", "4", "--k", "4", "--format", "csv"});
  CHECK(r.out == "k,closed\n4,1\n");

  r = run({"symfun", "--n", "20", "--method", "all"});
  CHECK(r.code == 0);
  CHECK(payload(r).at("skipped") == json::array({"minors"}));
  CHECK(run({"symfun", "--n", "20", "--method", "minors"}).code == 2);
  CHECK(run({"symfun", "--n", "3", "--k", "5"}).code == 2);
  CHECK(run({"symfun", "--n", "3", "--method", "eigen"}).code == 2);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "fibonacci", "--n-max", "100"});
  CHECK(r.code == 0);
  CHECK(payload(r).at("passed") == true);

  r = run({"verify", "--suite", "dets", "--n-max", "1", "--format", "plain"});
  CHECK(r.code == 0);
  CHECK(r.out.find("vacuous") != std::string::npos);

  CHECK(run({"verify", "--suite", "nothing", "--n-max", "3"}).code == 2);
}

TEST_CASE("simulate") {
  auto r = run({"simulate", "--n", "8", "--m", "200000", "--sigma", "1", "--seed", "42"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("seed") == 42);
  CHECK(doc.at("payload").at("deviation").get<double>() <= 0.2);

  r = run({"simulate", "--n", "1", "--dist", "rademacher"});
  CHECK(payload(r).at("deviation").get<double>() == 0.0);

  CHECK(run({"simulate", "--m", "1"}).code == 2);
  CHECK(run({"simulate", "--dist", "cauchy"}).code == 2);
  CHECK(run({"simulate", "--m", "100", "--tolerance", "0"}).code == 1);
}

TEST_CASE("bench") {
  auto r = run({"bench", "--n-list", "8,10", "--methods", "closed,minors", "--format", "csv"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "method,n,k,seconds,value,status");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 4);

  r = run({"bench", "--n-list", "100", "--methods", "closed"});
  CHECK(r.code == 0);
  const json bench_rows = payload(r).at("rows");
  REQUIRE(bench_rows.size() == 1);
  CHECK(bench_rows[0].at("value") == to_decimal(symfun_closed(100, 50)));
  CHECK(run({"bench", "--methods", "unknown"}).code == 2);
}

TEST_CASE("help and parse errors") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"det"}).code == 2);
}

#ifdef MINMAT_BIN
TEST_CASE("exit codes of the installed binary") {
  const auto status = [](const std::string& args) {
    const std::string cmd = std::string(MINMAT_BIN) + " " + args + " > /dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("det delta --inc 2,3,4 --method both") == 0);
  CHECK(status("matrix min --n 0") == 2);
  CHECK(status("simulate --m 1") == 2);
  CHECK(status("simulate --m 100 --tolerance 0") == 1);
  CHECK(status("verify --suite all --n-max 6") == 0);
}
#endif
