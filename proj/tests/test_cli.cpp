#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

// End-to-end checks against the installed binary: every invocation goes
// through the real argv parsing, file loading and exit-code mapping.

namespace {

namespace fs = std::filesystem;

const std::string& binary() {
  static std::string bin = [] {
    const char* b = std::getenv("POSET_CUBE_BIN");
    REQUIRE_MESSAGE(b != nullptr, "POSET_CUBE_BIN must point at the CLI binary");
    return std::string(b);
  }();
  return bin;
}

const fs::path& scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "poset-cube-cli-tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& f) {
  std::ifstream in(f);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_file(const std::string& name, const std::string& text) {
  fs::path f = scratch() / name;
  std::ofstream(f) << text;
  return f;
}

struct RunResult {
  int exit = -1;
  std::string out; // stdout and stderr interleaved
};

RunResult run(const std::string& args, const std::string& stdin_text = "",
              const std::string& env_prefix = "") {
  static int counter = 0;
  fs::path in = scratch() / ("in" + std::to_string(counter));
  fs::path out = scratch() / ("out" + std::to_string(counter));
  ++counter;
  std::ofstream(in) << stdin_text;
  std::string cmd = env_prefix + " '" + binary() + "' " + args + " < '" +
                    in.string() + "' > '" + out.string() + "' 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("gen output feeds straight back in as input") {
  RunResult g = run("gen chain --n 3");
  REQUIRE(g.exit == 0);
  CHECK(contains(g.out, "poset v1"));
  CHECK(contains(g.out, "elements x0 x1 x2"));

  RunResult p = run("params -", g.out);
  CHECK(p.exit == 0);
  CHECK(contains(p.out, "closed-form"));
  CHECK(contains(p.out, "iir"));
}

TEST_CASE("params emits a machine-readable report") {
  RunResult g = run("gen chain --n 3");
  RunResult p = run("params - --json", g.out);
  REQUIRE(p.exit == 0);
  auto j = nlohmann::json::parse(p.out);
  CHECK(j["schema"] == "poset-cube/1");
  CHECK(j["report"] == "params");
  CHECK(j["n"] == 3);
  CHECK(j["ch"] == 2);
  CHECK(j["dim2"] == 2);
  CHECK(j["cw"] == 2);
  CHECK(j["iir"] == 2);

  RunResult w = run("params - --witness --method brute", g.out);
  CHECK(w.exit == 0);
  CHECK(contains(w.out, "\"ground\""));
}

TEST_CASE("check reports membership through the exit code") {
  RunResult g = run("gen chain --n 3");
  RunResult miss = run("check - --property miir", g.out);
  CHECK(miss.exit == 1);
  CHECK(contains(miss.out, "false"));
  CHECK(contains(miss.out, "fails no-chain-block"));

  RunResult hit = run("check - --property nmiir", g.out);
  CHECK(hit.exit == 0);
  CHECK(contains(hit.out, "true"));

  RunResult sigma = run("gen sigma");
  REQUIRE(sigma.exit == 0);
  RunResult flagship = run("check - --property miir", sigma.out);
  CHECK(flagship.exit == 0);
  CHECK(contains(flagship.out, "all three structural properties hold"));

  CHECK(run("check - --property nonsense", g.out).exit == 2);
}

TEST_CASE("rep canonical, validate and reduce round-trip") {
  RunResult g = run("gen chain --n 3");
  fs::path pf = write_file("c3.poset", g.out);

  RunResult canon = run("rep canonical " + pf.string());
  REQUIRE(canon.exit == 0);
  auto j = nlohmann::json::parse(canon.out);
  CHECK(j["ground"].size() == 3);

  fs::path rf = write_file("c3-canon.json", canon.out);
  RunResult ok = run("rep validate " + pf.string() + " --rep " + rf.string());
  CHECK(ok.exit == 0);
  CHECK(contains(ok.out, "valid"));

  // an order-breaking representation is rejected with a reason
  RunResult a2 = run("gen antichain --n 2");
  fs::path af = write_file("a2.poset", a2.out);
  fs::path badf = write_file("a2-bad.json",
                             R"({"ground":["1"],"sets":{"x0":["1"],"x1":["1"]}})");
  RunResult bad = run("rep validate " + af.string() + " --rep " + badf.string());
  CHECK(bad.exit == 2);
  CHECK(contains(bad.out, "invalid:"));

  // malformed json is an input error, not a validation verdict
  fs::path brokenf = write_file("broken.json", "{\"ground\": [");
  RunResult broken = run("rep validate " + pf.string() + " --rep " + brokenf.string());
  CHECK(broken.exit == 2);
  CHECK(contains(broken.out, "input error"));

  RunResult red = run("rep reduce " + pf.string() + " --rep " + rf.string());
  REQUIRE(red.exit == 0);
  auto jr = nlohmann::json::parse(red.out);
  CHECK(jr["ground"].size() == 2); // chain of 3 tightens to prefixes of {1,2}

  fs::path redf = write_file("c3-reduced.json", red.out);
  RunResult verdict = run("rep irreducible " + pf.string() + " --rep " + redf.string());
  CHECK(verdict.exit == 0);
  CHECK(contains(verdict.out, "irreducible"));

  RunResult loose = run("rep irreducible " + pf.string() + " --rep " + rf.string());
  CHECK(loose.exit == 1);
  CHECK(contains(loose.out, "reducible"));
  // the witness after the verdict line parses as a representation
  auto jw = nlohmann::json::parse(loose.out.substr(loose.out.find('\n') + 1));
  CHECK(jw.contains("ground"));
  CHECK(jw.contains("sets"));

  RunResult maxi = run("rep max-irreducible " + pf.string());
  REQUIRE(maxi.exit == 0);
  auto jm = nlohmann::json::parse(maxi.out);
  CHECK(jm["ground"].size() == 2); // the 3-chain tops out at ground 2
}

TEST_CASE("decompose prints blocks and components") {
  RunResult lam = run("gen lambda");
  RunResult blocks = run("decompose - --blocks", lam.out);
  CHECK(blocks.exit == 0);
  CHECK(contains(blocks.out, "# blocks: 2"));
  CHECK(contains(blocks.out, "# part 1"));

  RunResult z = run("gen z");
  RunResult comps = run("decompose - --components", z.out);
  CHECK(comps.exit == 0);
  CHECK(contains(comps.out, "# components: 3"));

  RunResult cj = run("decompose - --components --json", z.out);
  REQUIRE(cj.exit == 0);
  auto j = nlohmann::json::parse(cj.out);
  CHECK(j["schema"] == "poset-cube/1");
  CHECK(j["parts"].size() == 3);
  CHECK(j["parts"][0].contains("elements"));
  CHECK(j["parts"][0].contains("embedding"));
}

TEST_CASE("enumerate writes one canonical file per type") {
  fs::path dir = scratch() / "enum3";
  fs::create_directories(dir);
  RunResult e = run("enumerate --n 3 --out " + dir.string());
  REQUIRE(e.exit == 0);
  CHECK(contains(e.out, "5 posets written"));
  int files = 0;
  fs::path one;
  for (const auto& f : fs::directory_iterator(dir)) {
    ++files;
    one = f.path();
  }
  CHECK(files == 5);
  RunResult back = run("params " + one.string());
  CHECK(back.exit == 0);

  RunResult listing = run("enumerate --n 3");
  CHECK(listing.exit == 0);
  CHECK(contains(listing.out, "# isomorphism types of size 3: 5"));
}

TEST_CASE("twin generator writes the representation next to the poset") {
  fs::path rf = scratch() / "twin.json";
  RunResult g = run("gen twin --n 4 --i 3 --rep-file " + rf.string());
  REQUIRE(g.exit == 0);
  fs::path pf = write_file("twin.poset", g.out);
  RunResult ok = run("rep validate " + pf.string() + " --rep " + rf.string());
  CHECK(ok.exit == 0);
  CHECK(contains(ok.out, "valid"));
  auto j = nlohmann::json::parse(slurp(rf));
  CHECK(j["ground"].size() == 8);
}

TEST_CASE("dot renders the cover diagram") {
  RunResult g = run("gen chain --n 2");
  RunResult d = run("dot -", g.out);
  CHECK(d.exit == 0);
  CHECK(contains(d.out, "digraph poset"));
  CHECK(contains(d.out, "\"x0\" -> \"x1\";"));

  RunResult lam = run("gen lambda");
  fs::path pf = write_file("lam.poset", lam.out);
  RunResult canon = run("rep canonical " + pf.string());
  fs::path rf = write_file("lam-canon.json", canon.out);
  RunResult dr = run("dot " + pf.string() + " --rep " + rf.string());
  CHECK(dr.exit == 0);
  CHECK(contains(dr.out, "top {a,b,top}"));
}

TEST_CASE("brute-force cap comes from the environment") {
  RunResult g = run("gen chain --n 6");
  fs::path pf = write_file("c6.poset", g.out);
  RunResult capped = run("params " + pf.string() + " --method brute", "",
                         "POSET_CUBE_CAP=5");
  CHECK(capped.exit == 3);
  CHECK(contains(capped.out, "cap exceeded"));

  RunResult lifted = run("params " + pf.string() + " --method brute", "",
                         "POSET_CUBE_CAP=6");
  CHECK(lifted.exit == 0);

  CHECK(run("params " + pf.string(), "", "POSET_CUBE_CAP=abc").exit == 2);
  CHECK(run("params " + pf.string(), "", "POSET_CUBE_CAP=0").exit == 2);
  CHECK(run("params " + pf.string(), "", "POSET_CUBE_CAP=65").exit == 2);
}

TEST_CASE("bad input and usage map to exit 2, help to exit 0") {
  RunResult garbage = run("params -", "garbage\n");
  CHECK(garbage.exit == 2);
  CHECK(contains(garbage.out, "input error"));

  CHECK(run("params " + (scratch() / "missing.poset").string()).exit == 2);
  CHECK(run("params").exit == 2);          // missing required positional
  CHECK(run("frobnicate").exit == 2);      // unknown subcommand
  CHECK(run("--help").exit == 0);
  CHECK(run("params --help").exit == 0);

  // a cycle is caught at parse time
  RunResult cyc = run("params -", "poset v1\nelements a b\nrel a < b\nrel b < a\n");
  CHECK(cyc.exit == 2);
  CHECK(contains(cyc.out, "input error"));
}

TEST_CASE("verify runs the invariant suite end to end") {
  RunResult v = run("verify --max-n 2 --sample-n6 3");
  CHECK(v.exit == 0);
  CHECK(contains(v.out, "catalog: 3 posets (n <= 2) exhaustive, 3 sampled of size 6 (seed 0)"));
  CHECK(contains(v.out, "summary: pass=36 fail=0 inconclusive=0 total=36"));
  CHECK(contains(v.out, "fan-iir-resolution"));

  RunResult j = run("verify --max-n 2 --sample-n6 2 --json");
  REQUIRE(j.exit == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["schema"] == "poset-cube/1");
  CHECK(parsed["report"] == "verify");
  CHECK(parsed["checks"].size() == 36);
  CHECK(parsed["summary"]["pass"] == 36);
  CHECK(parsed["summary"]["fail"] == 0);
}

} // TEST_SUITE

