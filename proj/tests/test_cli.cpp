#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dynq/cli.hpp"
#include "dynq/io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dynq::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return std::string(DYNQ_FIXTURES) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << text;
  return path.string();
}

}  // namespace

TEST_CASE("roots lists the three A2 roots") {
  const Result r = run({"roots", "--quiver", fixture("a2.quiver")});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"count\": 3") != std::string::npos);
  const Result t =
      run({"roots", "--quiver", fixture("a2.quiver"), "--format", "text"});
  CHECK(t.out.find("3 positive roots") != std::string::npos);
}

TEST_CASE("output is byte-deterministic") {
  for (const std::string cmd :
       {std::string("show"), std::string("ar"), std::string("homext"),
        std::string("cc"), std::string("verify")}) {
    const Result r1 = run({cmd, "--quiver", fixture("d4_subspace.quiver")});
    const Result r2 = run({cmd, "--quiver", fixture("d4_subspace.quiver")});
    CHECK(r1.out == r2.out);
    CHECK(r1.code == r2.code);
  }
}

TEST_CASE("nonempty matches the worked A2 example") {
  const Result empty = run({"nonempty", "--quiver", fixture("a2.quiver"),
                            "--e", "1,0", "--d", "1,1"});
  CHECK(empty.code == 0);
  CHECK(empty.out == "empty\n");
  const Result ok = run({"nonempty", "--quiver", fixture("a2.quiver"), "--e",
                         "0,1", "--d", "1,1"});
  CHECK(ok.out.find("non-empty") != std::string::npos);
  const Result js = run({"nonempty", "--quiver", fixture("a2.quiver"), "--e",
                         "0,1", "--d", "1,1", "--format", "json"});
  CHECK(js.out.find("\"nonempty\": true") != std::string::npos);
}

TEST_CASE("verify exits 0 on the D4 quiver and reports every mesh") {
  const Result r = run({"verify", "--quiver", fixture("d4_subspace.quiver")});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"all_pass\": true") != std::string::npos);
  // 8 meshes on D4: 12 indecomposables, 4 projective.
  std::size_t meshes = 0, pos = 0;
  while ((pos = r.out.find("\"kind\": \"mesh\"", pos)) != std::string::npos) {
    ++meshes;
    pos += 1;
  }
  CHECK(meshes == 8);
}

TEST_CASE("poincare and fpoly worked examples") {
  const Result p = run({"poincare", "--quiver", fixture("d4_subspace.quiver"),
                        "--summands", "1,1,1,2;1,1,1,1", "--e", "1,1,1,2",
                        "--format", "text"});
  CHECK(p.code == 0);
  CHECK(p.out == "1 + 4*q^2 + q^4\n");

  const Result f = run({"fpoly", "--quiver", fixture("a2.quiver"), "--d",
                        "1,1", "--format", "text"});
  CHECK(f.out == "1 + y2 + y1*y2\n");

  const Result all = run({"fpoly", "--quiver", fixture("a2.quiver"), "--all"});
  CHECK(all.code == 0);
  CHECK(all.out.find("f_polynomial") != std::string::npos);

  const Result both = run({"fpoly", "--quiver", fixture("a2.quiver"), "--all",
                           "--d", "1,1"});
  CHECK(both.code == 1);
}

TEST_CASE("decomp output names the summands") {
  const Result r = run({"decomp", "--quiver", fixture("a2.quiver"), "--d",
                        "2,1", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(1,1)") != std::string::npos);
  CHECK(r.out.find("(1,0)") != std::string::npos);
}

TEST_CASE("ar --dot emits GraphViz") {
  const Result r = run({"ar", "--quiver", fixture("a2.quiver"), "--dot"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("digraph AR {", 0) == 0);
}

TEST_CASE("homext csv") {
  const Result r =
      run({"homext", "--quiver", fixture("a2.quiver"), "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("x,y,hom,ext\n", 0) == 0);
}

TEST_CASE("oracle-count on the bundled fixture") {
  const Result r = run({"oracle-count", "--rep", fixture("d4_E.rep.json"),
                        "--e", "1,1,1,2", "--primes", "2,3,5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"pretty\": \"1 + 4*t + t^2\"") != std::string::npos);
  CHECK(r.out.find("\"chi\": \"6\"") != std::string::npos);
}

TEST_CASE("cc emits g-vectors and terms") {
  const Result r = run({"cc", "--quiver", fixture("a2.quiver")});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"g_vector\"") != std::string::npos);
  CHECK(r.out.find("\"cc_terms\"") != std::string::npos);
}

TEST_CASE("error paths exit 1 with a message") {
  const Result nofile = run({"roots", "--quiver", "/nonexistent.quiver"});
  CHECK(nofile.code == 1);
  CHECK(nofile.err.find("error") != std::string::npos);

  const std::string bad =
      write_temp("dynq_bad.quiver", "type: A2\narrows: 1->2, 2->3\n");
  const Result badq = run({"roots", "--quiver", bad});
  CHECK(badq.code == 1);
  CHECK(badq.err.find("wrong rank") != std::string::npos);

  const Result badvec = run({"nonempty", "--quiver", fixture("a2.quiver"),
                             "--e", "1", "--d", "1,1"});
  CHECK(badvec.code == 1);

  const Result nocmd = run({"frobnicate"});
  CHECK(nocmd.code == 1);

  const Result help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("roots") != std::string::npos);
}

TEST_CASE("polynomial JSON round-trips bit-exactly") {
  dynq::MultiPoly p(2);
  p.add_term({3, -1}, dynq::BigInt("123456789012345678901234567890"));
  p.add_term({0, 0}, 1);
  p.add_term({-2, 5}, -7);
  const dynq::Json j = dynq::poly_json(p);
  const dynq::MultiPoly q = dynq::poly_from_json(j, 2);
  CHECK(q == p);
  CHECK(dynq::poly_json(q).dump() == j.dump());
}

TEST_CASE("--out writes the same bytes as stdout") {
  const auto path = std::filesystem::temp_directory_path() / "dynq_roots.json";
  const Result direct = run({"roots", "--quiver", fixture("a2.quiver")});
  const Result filed = run({"roots", "--quiver", fixture("a2.quiver"), "--out",
                            path.string()});
  CHECK(filed.code == 0);
  CHECK(filed.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == direct.out);
}
