#include <doctest.h>

#include <sstream>

#include "connperm/cli.hpp"

using connperm::run_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented examples") {
  auto r = run({"bij", "omr", "--perm", "6,5,7,4,2,10,3,8,9,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "sigma=(1,2)(3,4,5)(6,7,8,9);alpha=(1,6)(2,5)(3,7)(4)(8)(9)\n");
  CHECK(run({"count", "indecomposable", "--n", "7"}).out == "3447\n");
  CHECK(run({"poly", "Mprime", "--m", "4"}).out == "5*y^4 + 22*y^3 + 32*y^2 + 15*y\n");
}

TEST_CASE("exit codes") {
  auto r = run({"bij", "omr", "--perm", "3,1,2,5,4"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("decomposable") != std::string::npos);
  CHECK(run({"bij", "omr", "--perm", "3,1,x"}).code == 2);
  CHECK(run({"bij", "omr", "--perm", "1,1"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"count", "widgets", "--n", "3"}).code == 2);
  CHECK(run({"count", "indecomposable"}).code == 2);
  CHECK(run({"count", "indecomposable", "--n", "0"}).code == 2);
  CHECK(run({"count", "indecomposable", "--n", "3", "--format", "xml"}).code == 2);
  CHECK(run({"bij", "fft", "--perm", "2,1", "--format", "csv"}).code == 2);
  CHECK(run({"count", "indecomposable", "--n", "65"}).code == 1);
  CHECK(run({"count", "indecomposable", "--n", "65", "--limit", "65"}).code == 0);
  CHECK(run({"count", "hypermaps", "--n", "6", "--brute"}).code == 1);
  CHECK(run({"bij", "omr-inv", "--sigma", "(1,2)", "--alpha", "(1)(2)(3)"}).code == 1);
  CHECK(run({"bij", "omr-inv", "--sigma", "(1)(2)", "--alpha", "(1)(2)"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("counts") {
  CHECK(run({"count", "hypermaps", "--n", "3"}).out == "13\n");
  CHECK(run({"count", "hypermaps", "--n", "3", "--labeled"}).out == "26\n");
  CHECK(run({"count", "hypermaps", "--n", "3", "--brute"}).out == "13\n");
  CHECK(run({"count", "hypermaps", "--n", "3", "--labeled", "--brute"}).out == "26\n");
  CHECK(run({"count", "indecomposable", "--n", "6", "--brute"}).out == "461\n");
  CHECK(run({"count", "maps", "--m", "3"}).out == "74\n");
  CHECK(run({"count", "maps", "--m", "3", "--v", "1"}).out == "15\n");
  CHECK(run({"count", "maps", "--m", "0"}).out == "1\n");
  CHECK(run({"count", "stirling-indec", "--n", "7"}).out == "720 1452 974 270 30 1\n");
  CHECK(run({"count", "stirling-indec", "--n", "5", "--k", "2"}).out == "34\n");
  CHECK(run({"count", "indecomposable", "--n", "7", "--format", "json"}).out ==
        "{\"count\":\"indecomposable\",\"n\":7,\"value\":\"3447\"}\n");
  CHECK(run({"count", "indecomposable", "--n", "7", "--format", "csv"}).out == "n,value\n7,3447\n");
  CHECK(run({"count", "stirling-indec", "--n", "3", "--format", "csv"}).out == "n,k,value\n3,1,2\n3,2,1\n");
}

TEST_CASE("tables") {
  const auto plain = run({"table", "stirling-indec", "--max-n", "7"});
  CHECK(plain.out == "1\n1\n2 1\n6 6 1\n24 34 12 1\n120 210 110 20 1\n720 1452 974 270 30 1\n");
  const auto csv = run({"table", "stirling-indec", "--max-n", "3", "--format", "csv"});
  CHECK(csv.out == "n,k,value\n1,1,1\n2,1,1\n3,1,2\n3,2,1\n");
  const auto joint = run({"table", "joint", "--max-n", "3", "--format", "csv"});
  CHECK(joint.out == "n,p,q,value\n1,1,1,1\n2,2,2,1\n2,1,1,1\n3,3,3,1\n3,2,2,2\n3,2,1,1\n3,1,2,1\n3,1,1,1\n");
  CHECK(run({"table", "joint", "--max-n", "6", "--brute"}).out == run({"table", "joint", "--max-n", "6"}).out);
  CHECK(run({"table", "joint", "--max-n", "9", "--brute"}).code == 1);
}

TEST_CASE("bijections") {
  CHECK(run({"bij", "omr-inv", "--sigma", "(1,6)(2,5)(3,7)(4)(8)(9)", "--alpha", "(1,2)(3,4,5)(6,7,8,9)"}).out ==
        "4,6,5,7,3,8,1,9,10,2\n");
  CHECK(run({"bij", "fft", "--perm", "4,7,2,1,3,6,5,9,8"}).out == "4,1,6,7,5,3,2,9,8\n");
  CHECK(run({"bij", "fft", "--perm", "(1,4)(2,7,5,3)(6)(8,9)"}).out == "4,1,6,7,5,3,2,9,8\n");
  CHECK(run({"bij", "fft-inv", "--perm", "4,1,6,7,5,3,2,9,8"}).out == "(4,1)(6)(7,5,3,2)(9,8)\n");
  CHECK(run({"bij", "delta", "--perm", "3,7,5,8,9,2,6,4,1"}).out ==
        "a a a a b0 a a a b0 b1 a a b0 b4 b2 b1 b1 b1\n");
  CHECK(run({"bij", "delta", "--perm", "2,1", "--scheme", "rv"}).out == "a a b1 b1\n");
  CHECK(run({"bij", "delta", "--perm", "2,1", "--format", "json"}).out == "[\"a\",\"a\",\"b0\",\"b1\"]\n");
  CHECK(run({"bij", "delta-inv", "--path", "a a a a b0 a a a b0 b1 a a b0 b4 b2 b1 b1 b1"}).out ==
        "3,7,5,8,9,2,6,4,1\n");
  CHECK(run({"bij", "delta-inv", "--path", "a a b1 b1", "--scheme", "rv"}).out == "2,1\n");
  CHECK(run({"bij", "delta-inv", "--path", "a a b0 b2"}).code == 1);
  CHECK(run({"bij", "phi", "--perm", "6,5,7,4,2,10,3,8,9,1"}).out == "4,6,5,7,3,8,1,9,10,2\n");
  CHECK(run({"bij", "psi-prime", "--perm", "4,3,2,1"}).out == "sigma=(1,2);alpha=(1,2)\n");
  CHECK(run({"bij", "psi-prime", "--perm", "3,4,1,2", "--format", "json"}).out ==
        "{\"n\":2,\"sigma\":[[1],[2]],\"alpha\":[[1,2]],\"is_map\":true}\n");
  CHECK(run({"bij", "omr", "--perm", "3,2,1", "--format", "json"}).out ==
        "{\"n\":2,\"sigma\":[[1,2]],\"alpha\":[[1],[2]]}\n");
  CHECK(run({"bij", "fft", "--perm", "2,1", "--format", "json"}).out == "[2,1]\n");
  CHECK(run({"bij", "omr"}).code == 2);
}

TEST_CASE("polynomials and probabilities") {
  CHECK(run({"poly", "A", "--n", "4"}).out == "x^4 + 6*x^3 + 11*x^2 + 6*x\n");
  CHECK(run({"poly", "C", "--n", "4"}).out == "x^3 + 6*x^2 + 6*x\n");
  CHECK(run({"poly", "L", "--n", "3"}).out == "x^3 + 3*x^2*y + x*y^2 + x*y\n");
  CHECK(run({"poly", "Lprime", "--n", "3"}).out == "x^2*y + x*y^2 + x*y\n");
  CHECK(run({"poly", "M", "--m", "2"}).out == "2*y^2 + y\n");
  CHECK(run({"poly", "Mprime", "--m", "2", "--format", "json"}).out ==
        "[{\"x\":0,\"y\":2,\"c\":\"1\"},{\"x\":0,\"y\":1,\"c\":\"1\"}]\n");
  CHECK(run({"poly", "Mprime", "--m", "2", "--format", "csv"}).out == "p,q,value\n0,2,1\n0,1,1\n");
  CHECK(run({"poly", "M", "--n", "2"}).code == 2);
  CHECK(run({"poly", "L", "--n", "65"}).code == 1);
  CHECK(run({"prob", "transitive", "--n", "3"}).out == "13/18\n");
  CHECK(run({"prob", "transitive", "--n", "3", "--brute"}).out == "13/18\n");
  CHECK(run({"prob", "transitive", "--n", "4", "--format", "json"}).out == "{\"n\":4,\"probability\":\"71/96\"}\n");
  CHECK(run({"prob", "transitive", "--n", "4", "--format", "csv"}).out == "n,numerator,denominator\n4,71,96\n");
}

TEST_CASE("verify") {
  const auto ok = run({"verify", "--max-n", "4"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out == run({"verify", "--max-n", "4"}).out);
  const auto bad = run({"verify", "--max-n", "4", "--fault", "skip-rotation"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL hypermap-census  witness: sigma=(1,2)(3);alpha=(1)(2,3)") != std::string::npos);
  const auto json = run({"verify", "--max-n", "3", "--format", "json"});
  CHECK(json.code == 0);
  CHECK(json.out.rfind("[{\"check\":\"indecomposable-counts\",\"status\":\"pass\"}", 0) == 0);
  CHECK(run({"verify", "--max-n", "9"}).code == 1);
  CHECK(run({"verify", "--fault", "nonsense"}).code == 2);
}
