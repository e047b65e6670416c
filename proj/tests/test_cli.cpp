#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "salg/cli.hpp"
#include "salg/corpus.hpp"
#include "salg/dsl.hpp"

using namespace salg;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& file) { return std::string(SALG_CORPUS_DIR) + "/" + file; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Writes `text` to a scratch file and returns its path.
std::string scratch(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("salg_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("documented examples") {
  const Run k = run({"ksdim", corpus("xy.salg")});
  CHECK(k.code == 0);
  CHECK(k.out == "Ksdim = 1|0\n");

  const Run o = run({"orbit", corpus("a11.salg"), "--derivation", "x->0; y->1", "--point", "x=2"});
  CHECK(o.code == 0);
  CHECK(o.out == "I = (x - 2), orbit ≅ Λ(y), sdim 0|1, stabilizer trivial\n");

  const Run r = run({"odd-regular", corpus("lambda2.salg"), "--seq", "y1,y2"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
}

TEST_CASE("predicates exit 1 when false") {
  CHECK(run({"odd-regular", corpus("xy.salg"), "--seq", "y"}).code == kExitFalse);
  const Run p = run({"odd-params", corpus("xy1y2.salg"), "--seq", "y1, y2"});
  CHECK(p.code == kExitFalse);
  CHECK(p.out.rfind("false\n", 0) == 0);
  CHECK(run({"odd-params", corpus("xy1y2.salg"), "--seq", "y1"}).code == 0);
  CHECK(run({"hc", "graded", "--builtin", "unipotent"}).code == kExitFalse);
  CHECK(run({"hc", "graded", "--builtin", "gl1"}).code == 0);
}

TEST_CASE("input errors exit 2 with a message") {
  const Run missing = run({"ksdim", corpus("nope.salg")});
  CHECK(missing.code == kExitInput);
  CHECK(missing.err.find("cannot read") != std::string::npos);

  const std::string bad = scratch("bad.salg", "superalgebra A even x rel x* end\n");
  const Run syntax = run({"ksdim", bad});
  CHECK(syntax.code == kExitInput);
  CHECK(syntax.err.find("1:28") != std::string::npos);

  CHECK(run({"frobnicate"}).code == kExitInput);
  CHECK(run({"ann", corpus("xy.salg")}).code == kExitInput);
  CHECK(run({"ksdim", corpus("xy.salg"), "--field", "fp", "4"}).code == kExitInput);
  CHECK(run({"ksdim", corpus("xy.salg"), "--field", "r"}).code == kExitInput);
  CHECK(run({"odd-params", corpus("xy.salg"), "--seq", "x"}).code == kExitInput);
  CHECK(run({"localize", corpus("xy.salg"), "--at", "y"}).code == kExitInput);
  CHECK(run({"orbit", corpus("xy.salg"), "--derivation", "y -> 1", "--point", "x = 0"}).code == kExitInput);
  CHECK(run({"orbit", corpus("a11.salg"), "--point", "x = 0", "--pivot", "3"}).code == kExitInput);
  CHECK(run({"hc", "validate"}).code == kExitInput);
  CHECK(run({"hc", "mul", "--builtin", "unipotent", "--lhs", "g=[[2, 0], [0, 1]]; e=[s]", "--rhs", "e=[t]"})
            .code == kExitInput);
}

TEST_CASE("help exits 0") {
  const Run h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("ksdim") != std::string::npos);
}

TEST_CASE("algebra commands") {
  CHECK(run({"bar", corpus("square.salg")}).out == "superalgebra Square_bar\n  even x\n  rel x^2\nend\n");
  const Run gr = run({"gr", corpus("square.salg")});
  CHECK(gr.out.find("rel x^2\n") != std::string::npos);
  CHECK(run({"ann", corpus("lambda2.salg"), "--elem", "y1y2"}).out == "Ann(y1y2) = (y1, y2)\n");
  CHECK(run({"ann", corpus("xy.salg"), "--elem", "0"}).out == "Ann(0) = (1)\n");
  const Run phi = run({"phi-dim", corpus("xy.salg"), "--point", "x = 0"});
  CHECK(phi.out.rfind("dim Phi = 1\nbasis: y\n", 0) == 0);
  CHECK(run({"localize", corpus("xy.salg"), "--at", "0"}).out == "zero ring\n");
  const Run loc = run({"localize", corpus("xy.salg"), "--at", "x"});
  CHECK(loc.out.find("even x t") != std::string::npos);
  CHECK(run({"ksdim", corpus("twisted.salg")}).out.rfind("Ksdim = 2|1\n", 0) == 0);
  CHECK(run({"ksdim", corpus("xy.salg"), "--field", "fp", "7"}).out == "Ksdim = 1|0\n");
}

TEST_CASE("mono-check") {
  const std::string kx = scratch("kx.salg", "superalgebra K even x end\n");
  const std::string kxy = corpus("a11.salg");
  CHECK(run({"mono-check", kx, kxy, "--map", "x -> x"}).code == kExitFalse);
  CHECK(run({"mono-check", kxy, kxy, "--map", "x -> x; y -> y"}).code == 0);
  CHECK(run({"mono-check", kxy, corpus("xy.salg"), "--map", "x -> x; y -> y"}).code == 0);
  // not well defined: xy = 0 in the source but not in the target
  CHECK(run({"mono-check", corpus("xy.salg"), kxy, "--map", "x -> x; y -> y"}).code == kExitInput);
}

TEST_CASE("pair commands") {
  CHECK(run({"hc", "validate", "--builtin", "osp12"}).out.find("valid: true") != std::string::npos);
  CHECK(run({"hc", "validate", corpus("unipotent.shc")}).code == 0);
  CHECK(run({"hc", "sdim", "--builtin", "gl1"}).out == "sdim = 1|1\n");
  CHECK(run({"hc", "sdim", "--builtin", "osp12"}).out == "sdim = 3|2\n");
  const Run m = run({"hc", "mul", "--builtin", "unipotent", "--lhs", "e=[s]", "--rhs", "e=[t]"});
  CHECK(m.out == "g=[[1, -st], [0, 1]]; e=[s + t]\n");
  const Run right = run({"hc", "mul", "--builtin", "unipotent", "--lhs", "e=[s]", "--rhs", "e=[t]",
                         "--strategy", "rightmost"});
  CHECK(right.out == m.out);
  CHECK(run({"hc", "inv", "--builtin", "gl1", "--lhs", "g=[[2]]; e=[s]"}).out == "g=[[1/2]]; e=[-2*s]\n");
  const std::string coeff = scratch("st.salg", "superalgebra C odd s t end\n");
  CHECK(run({"hc", "mul", "--builtin", "gl1", "--coeff", coeff, "--lhs", "g=[[2]]; e=[s]", "--rhs",
             "g=[[3]]; e=[t]"})
            .out == "g=[[6]]; e=[1/3*s + t]\n");
  const Run gr = run({"hc", "graded", "--builtin", "osp12", "--show-gr"});
  CHECK(gr.out.find("hcpair gr_osp12") != std::string::npos);
  const std::string shc = scratch("gr.shc", gr.out.substr(gr.out.find("hcpair")));
  CHECK(run({"hc", "validate", shc}).code == 0);
  CHECK(run({"hc", "graded", shc}).code == 0);
}

TEST_CASE("verify-orbits uses the document's points") {
  const Run v = run({"verify-orbits", corpus("scaled.salg")});
  CHECK(v.code == 0);
  CHECK(v.out.find("at x = 0: I = (x, y), orbit is a point, sdim 0|0, stabilizer full") != std::string::npos);
  CHECK(v.out.find("at x = 3: I = (x - 3), orbit ≅ Λ(y), sdim 0|1, stabilizer trivial") != std::string::npos);
  CHECK(v.out.find("FAIL") == std::string::npos);
  const Run two = run({"verify-orbits", corpus("a11.salg"), "--point", "x = 1", "--point", "x = 5"});
  CHECK(two.code == 0);
  CHECK(two.out.find("at x = 5") != std::string::npos);
}

TEST_CASE("json envelope") {
  const Run j = run({"--json", "ksdim", corpus("xy1y2.salg")});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["command"] == "ksdim");
  CHECK(doc["result"]["even"] == 1);
  CHECK(doc["result"]["odd"] == 1);
  CHECK(doc["certificate"]["elements"] == nlohmann::json::array({"y1"}));
  CHECK(doc.contains("inputs"));

  const Run o = run({"orbit", corpus("a11.salg"), "--json"});
  const auto orbit = nlohmann::json::parse(o.out);
  CHECK(orbit["command"] == "orbit");
  CHECK(orbit["result"]["ideal"] == nlohmann::json::array({"x - 2"}));
  CHECK_FALSE(orbit.contains("certificate"));

  const Run p = run({"--json", "odd-regular", corpus("xy.salg"), "--seq", "y"});
  CHECK(p.code == kExitFalse);
  CHECK(nlohmann::json::parse(p.out)["result"] == false);

  const Run e = run({"--json", "ksdim", corpus("nope.salg")});
  CHECK(e.code == kExitInput);
  CHECK(nlohmann::json::parse(e.out).contains("error"));

  CHECK(run({"--json", "hc", "sdim", "--builtin", "gl2"}).out == run({"--json", "hc", "sdim", "--builtin", "gl2"}).out);
}

TEST_CASE("bundled corpus files are canonical and match the built-in copies") {
  for (const auto& c : corpus_algebras()) {
    const std::string text = slurp(corpus(c.file));
    CHECK_MESSAGE(text == c.text, c.file);
    CHECK_MESSAGE(render_manifest(parse_manifest(text)) == text, c.file);
  }
  for (const auto& p : corpus_pairs()) {
    const std::string text = slurp(corpus(p.file));
    CHECK_MESSAGE(render_manifest(parse_manifest(text)) == text, p.file);
    CHECK(text == render_manifest(Manifest{PairDoc{builtin_pair(p.builtin)}, {}}));
  }
}

TEST_CASE("selftest subset") {
  const Run s = run({"selftest", "--only", "1,9"});
  CHECK(s.code == 0);
  CHECK(s.out.find("criterion 1: PASS") != std::string::npos);
  CHECK(s.out.find("criterion 9: PASS") != std::string::npos);
  CHECK(s.out.find("criterion 2") == std::string::npos);
}
