#include <doctest.h>

#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hconv/cli.hpp"
#include "hconv/errors.hpp"

using namespace hconv;
using namespace hconv::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t line_count(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("parse_grid") {
  const std::vector<double> g = parse_grid("0, 1/3,0.5 ,1");
  REQUIRE(g.size() == 4);
  CHECK(g[1] == 1.0 / 3.0);
  CHECK(g[2] == 0.5);
  CHECK(parse_grid("").empty());
  CHECK_THROWS_AS(parse_grid("1,,2"), DomainError);
  CHECK_THROWS_AS(parse_grid("1/0"), DomainError);
  CHECK_THROWS_AS(parse_grid("abc"), DomainError);
}

TEST_CASE("parse_function") {
  const FunctionSpec p = parse_function("poly:1,0,3");
  CHECK(p.f(2.0) == 13.0);
  CHECK(p.f_prime(2.0) == 12.0);
  const FunctionSpec w = parse_function("pow:2,1.5");
  CHECK(w.f(4.0) == doctest::Approx(16.0));
  CHECK(w.f_prime(4.0) == doctest::Approx(6.0));
  const FunctionSpec e = parse_function("exp:2,3");
  CHECK(e.f(0.0) == 3.0);
  CHECK(e.f_prime(0.0) == 6.0);
  CHECK(parse_function("exp:1").f(1.0) == doctest::Approx(std::exp(1.0)));
  CHECK_THROWS_AS(parse_function("sin:1"), DomainError);
  CHECK_THROWS_AS(parse_function("poly"), DomainError);
  CHECK_THROWS_AS(parse_function("pow:1"), DomainError);
}

TEST_CASE("parse_modulus") {
  CHECK(parse_modulus("t", std::nullopt).kind() == ModulusKind::Identity);
  CHECK(parse_modulus("1", std::nullopt).kind() == ModulusKind::Constant);
  CHECK(parse_modulus("1/t", std::nullopt).kind() == ModulusKind::Reciprocal);
  CHECK(parse_modulus("t^s", 0.25).s_param() == 0.25);
  CHECK(parse_modulus("t^0.5", std::nullopt).s_param() == 0.5);
  CHECK_THROWS_AS(parse_modulus("t^s", std::nullopt), DomainError);
  CHECK_THROWS_AS(parse_modulus("t^2", std::nullopt), DomainError);
  CHECK_THROWS_AS(parse_modulus("sqrt", std::nullopt), DomainError);
}

TEST_CASE("verify on a sound configuration exits 0") {
  const Outcome o = call({"verify", "--function", "poly:0,0,1", "--interval", "0", "1"});
  CHECK(o.code == kExitSound);
  CHECK(o.out.rfind("alpha,lambda,q,s,p,bound_kind,branch,lhs,rhs,margin,sound,status\n", 0) ==
        0);
  CHECK(o.out.find("0.13888888888888887") != std::string::npos);
  CHECK(line_count(o.out) == 2);
}

TEST_CASE("a falsified certificate exits 1") {
  const Outcome o = call({"verify", "--function", "pow:1,1.5", "--interval", "0", "1"});
  CHECK(o.code == kExitViolation);
  CHECK(o.out.find("rejected") != std::string::npos);
  CHECK_FALSE(o.err.empty());
}

TEST_CASE("configuration errors exit 2") {
  CHECK(call({"verify", "--alpha-grid", ""}).code == kExitConfig);
  CHECK(call({"verify", "--alpha-grid", "1.5"}).code == kExitConfig);
  CHECK(call({"verify", "--interval", "1", "0"}).code == kExitConfig);
  CHECK(call({"verify", "--bound", "nonsense"}).code == kExitConfig);
  CHECK(call({"verify", "--bound", "holder", "--q-grid", "1"}).code == kExitConfig);
  CHECK(call({"verify", "--bound", "power-mean", "--p", "2"}).code == kExitConfig);
  CHECK(call({"verify", "--bound", "alomari14"}).code == kExitConfig);
  CHECK(call({"verify", "--format", "xml"}).code == kExitConfig);
  CHECK(call({"frobnicate"}).code == kExitConfig);
  CHECK(call({}).code == kExitConfig);
}

TEST_CASE("rows the integrator cannot settle exit 3") {
  // 1/x on [0, 1] has no finite mean
  const Outcome o = call({"verify", "--function", "pow:1,-1", "--interval", "0", "1",
                          "--class", "convex"});
  CHECK(o.code == kExitOracle);
  CHECK(o.out.find("inconclusive") != std::string::npos);
}

TEST_CASE("sweep covers the full grid") {
  const Outcome o = call({"sweep", "--alpha-grid", "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1",
                          "--lambda-grid", "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1",
                          "--samples", "200"});
  CHECK(o.code == kExitSound);
  CHECK(line_count(o.out) == 122);
}

TEST_CASE("reports are byte-identical across runs and formats agree") {
  const std::vector<std::string> base = {"verify", "--function", "exp:1", "--interval", "-1",
                                         "2",      "--q-grid",   "1,2",  "--samples",  "500"};
  const Outcome a = call(base);
  const Outcome b = call(base);
  CHECK(a.out == b.out);

  std::vector<std::string> js = base;
  js.insert(js.end(), {"--format", "json"});
  const Outcome j = call(js);
  REQUIRE(j.code == kExitSound);
  const nlohmann::json doc = nlohmann::json::parse(j.out);
  REQUIRE(doc.is_array());
  CHECK(doc.size() == line_count(a.out) - 1);
  CHECK(doc[0]["status"] == "sound");
  CHECK(doc[1]["q"] == 2.0);
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = "hconv_cli_test_out.csv";
  const Outcome o = call({"compare", "--kinds", "power-mean,iscan13", "--out", path});
  CHECK(o.code == kExitSound);
  CHECK(o.out.empty());
  std::ifstream in(path, std::ios::binary);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.rfind("alpha,lambda,q,s,p,lhs,power-mean,iscan13,argmin\n", 0) == 0);
  std::remove(path.c_str());
}

TEST_CASE("identity and hadamard subcommands") {
  const Outcome i = call({"identity", "--cases", "20", "--seed", "4"});
  CHECK(i.code == kExitSound);
  CHECK(line_count(i.out) == 21);

  const Outcome h = call({"hadamard", "--cases", "10", "--variant", "s-convex", "--s-grid",
                          "0.25,0.75"});
  CHECK(h.code == kExitSound);
  CHECK(line_count(h.out) == 21);

  const Outcome f = call({"hadamard", "--function", "poly:0,0,-1", "--interval", "0", "1",
                          "--variant", "classical"});
  CHECK(f.code == kExitViolation);
}
