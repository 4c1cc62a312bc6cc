#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "uglov/io.hpp"

using namespace uglov;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const cli::Hooks* hooks = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, hooks);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("good") {
  auto r = run({"good", "--l", "[[4],[2,1]]", "--s", "2,0", "--e", "4", "--i", "1", "--remove"});
  CHECK(r.code == 0);
  CHECK(r.out == "(1,4,1)\n");
  r = run({"good", "--l", "[[4],[2,1]]", "--s", "2,0", "--e", "4", "--i", "1", "--remove", "--json"});
  CHECK(r.out == "[1,4,1]\n");
  r = run({"good", "--l", "-|-", "--s", "2,0", "--e", "4", "--i", "1", "--remove"});
  CHECK(r.out == "none\n");
  r = run({"good", "--l", "[[],[]]", "--s", "2,0", "--e", "4", "--i", "2", "--add"});
  CHECK(r.out == "(1,1,1)\n");
}

TEST_CASE("input errors exit 2 and name the field") {
  auto r = run({"good", "--l", "[[1,2]]", "--s", "0", "--e", "3", "--i", "0", "--add"});
  CHECK(r.code == 2);
  CHECK(r.err.find("component 1") != std::string::npos);
  CHECK(run({"good", "--l", "[[1]]", "--s", "0,1", "--e", "3", "--i", "0", "--add"}).code == 2);
  CHECK(run({"good", "--l", "[[1]]", "--s", "0", "--e", "1", "--i", "0", "--add"}).code == 2);
  CHECK(run({"good", "--l", "[[1]]", "--s", "0", "--e", "3", "--i", "5", "--add"}).code == 2);
  CHECK(run({"good", "--l", "[[1]]", "--s", "0", "--e", "3", "--i", "0"}).code == 2);
  CHECK(run({"label", "--trivial", "-j", "3", "-n", "2", "--s", "0,1", "--e", "3"}).code == 2);
  CHECK(run({"gseq", "--l", "[[1],[1]]", "--s", "0,1", "--e", "2"}).code == 2);
  CHECK(run({"member", "--l", "[[1],[1]]", "--s", "3,0", "--e", "2", "--flotw"}).code == 2);
  CHECK(run({"build", "--g", "[0,1,1]", "--s", "0", "--e", "3"}).code == 2);
  CHECK(run({"iso", "--l", "[[1],[]]", "--s", "0,1", "--to", "0,2", "--e", "4"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("word, member, gseq, build, enumerate") {
  CHECK(run({"word", "--l", "[[4],[2,1]]", "--s", "2,0", "--e", "4", "--i", "1"}).out ==
        "RAR R(1,2,2) A(2,1,1) R(1,4,1) -> A^0 R^1\n");
  CHECK(run({"word", "--l", "[[4],[2,1]]", "--s", "2,0", "--e", "4", "--i", "1", "--json"}).out ==
        R"({"word":"RAR","nodes":[[1,2,2],[2,1,1],[1,4,1]],"reduced":{"A":0,"R":1}})" "\n");
  CHECK(run({"member", "--l", "[[4],[2,1]]", "--s", "2,0", "--e", "4"}).out == "true\n");
  CHECK(run({"member", "--l", "[[1,1,1]]", "--s", "0", "--e", "3", "--flotw"}).out == "false\n");
  CHECK(run({"gseq", "--l", "[[4],[2,1]]", "--s", "2,0", "--e", "4"}).out == "[0,1,2,3,3,0,1]\n");
  CHECK(run({"gseq", "--l", "[[1],[1]]", "--s", "0,1", "--e", "2", "--peel"}).out ==
        R"({"apex":[[1],[1]],"g":[]})" "\n");
  CHECK(run({"build", "--g", "[0,1,2,3,3,0,1]", "--s", "2,0", "--e", "4"}).out == "[[4],[2,1]]\n");
  CHECK(run({"build", "--g", "[0,1,2,3,3,0,1]", "--s", "2,0", "--e", "4", "--display"}).out == "4|2.1\n");
  CHECK(run({"enumerate", "--s", "0", "--e", "3", "-n", "4", "--json"}).out == "[[[2,1,1]],[[2,2]],[[3,1]],[[4]]]\n");
  CHECK(run({"enumerate", "--s", "0", "--e", "2", "-n", "10", "--count"}).out == "10\n");
}

TEST_CASE("iso, mullineux, label") {
  CHECK(run({"iso", "--l", "[[5,5,3,1],[3,1]]", "--s", "1,0", "--to", "0,1", "--e", "7", "--check"}).out ==
        "[[5,3,1],[5,3,1]]\n");
  CHECK(run({"iso", "--l", "[[4],[2,1]]", "--s", "2,0", "--sigma", R"({"perm":[2,1],"shift":[1,0]})", "--e", "4"}).out ==
        "[[2,1],[4]]\n");
  CHECK(run({"mullineux", "--l", "[[4]]", "--s", "0", "--e", "3"}).out == "[[2,2]]\n");
  CHECK(run({"label", "--trivial", "-j", "2", "-n", "5", "--s", "3,0,7,3", "--e", "4"}).out == "[[],[3],[2],[]]\n");
  CHECK(run({"label", "--sign", "-j", "1", "-n", "0", "--s", "0,1", "--e", "3"}).out == "[[],[]]\n");
  CHECK(run({"label", "--sign", "-j", "2", "-n", "4", "--s", "0,1", "--e", "3", "--typeb", "--check"}).out ==
        "[[2],[2]]\n");
  CHECK(run({"label", "--sign", "-j", "2", "-n", "7", "--s", "3,0,7,3", "--e", "4", "--closed", "--check"}).code == 0);
}

TEST_CASE("JSON outputs parse back") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"build", "--g", "[0,1,2,3,3,0,1]", "--s", "2,0", "--e", "4", "--json"},
           {"mullineux", "--l", "4|2.1", "--s", "2,0", "--e", "4", "--json"},
           {"label", "--sign", "-j", "1", "-n", "9", "--s", "3,0,7,3", "--e", "4", "--json"},
           {"iso", "--l", "[[4],[2,1]]", "--s", "2,0", "--to", "0,6", "--e", "4", "--json"}}) {
    const auto r = run(args);
    REQUIRE(r.code == 0);
    CHECK_NOTHROW(parse_multipartition(r.out));
  }
}

TEST_CASE("verify") {
  auto r = run({"verify", "--max-n", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("result: PASS") != std::string::npos);

  r = run({"verify", "--max-n", "5", "--max-e", "3", "--samples", "20"});
  CHECK(r.code == 0);
  CHECK(r.out.find("s1>s2/row 2/whole") != std::string::npos);

  const std::string path = "verify_report_test.txt";
  r = run({"verify", "--max-n", "4", "--max-e", "3", "--samples", "10", "--report", path});
  CHECK(r.code == 0);
  std::ifstream file(path);
  std::stringstream text;
  text << file.rdbuf();
  CHECK(text.str().find("CONFORMANCE") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("verify reports an injected fault with a counterexample") {
  cli::Hooks hooks;
  hooks.verify_routes.trivial_closed = [](const OneDimRep& rep, const Charge& charge) {
    auto label = label_trivial_closed(rep, charge);
    if (rep.size == 3 && charge.level() == 2) return Multipartition::single(2, 1, Partition::column(3));
    return label;
  };
  const auto r = run({"verify", "--max-n", "4", "--max-e", "3", "--samples", "10"}, &hooks);
  CHECK(r.code == 1);
  CHECK(r.err.find("counterexample: trivial-closed") != std::string::npos);
  CHECK(r.err.find("n=3") != std::string::npos);
  CHECK(r.out.find("result: FAIL") != std::string::npos);
}

TEST_CASE("iso rejects a group element of the wrong level") {
  CHECK(run({"iso", "--l", "[[1],[]]", "--s", "0,1", "--sigma", R"({"perm":[1],"shift":[0]})", "--e", "4"}).code == 2);
}
