#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "anncat/model_io.hpp"
#include "cli.hpp"
#include "support.hpp"

using namespace anncat;
namespace fs = std::filesystem;

namespace {

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int                code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  fs::path scratch() {
    static fs::path const dir = [] {
      fs::path p = fs::path(ANNCAT_TEST_SCRATCH) / "cli";
      fs::remove_all(p);
      fs::create_directories(p);
      return p;
    }();
    return dir;
  }

  std::string write_model(std::string const& name, SkeletalModel const& m) {
    auto path = (scratch() / name).string();
    save_model(path, {m, name, ""});
    return path;
  }

  std::string write_text(std::string const& name, std::string const& text) {
    auto          path = (scratch() / name).string();
    std::ofstream(path) << text;
    return path;
  }

  SkeletalModel d14_violator() {
    auto m = testing::trivial_model(2);
    m.table(TableId::Ldist).data()[(1 * 2 + 1) * 2 + 1] = 1;
    return m;
  }

  SkeletalModel lhat_violator() {
    auto m = testing::trivial_model(2);
    m.table(TableId::Ldist).data()[(1 * 2 + 0) * 2 + 1] = 1;
    return m;
  }

  int run_binary(std::string const& args) {
    std::string cmd = std::string(ANNCAT_BIN) + " " + args + " > /dev/null 2>&1";
    int         raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  }

}  // namespace

TEST_CASE("check") {
  auto triv = write_model("trivial.json", testing::trivial_model(2));
  CHECK(run({"check", triv, "--suite", "ann"}).code == 0);

  auto viol = write_model("d14.json", d14_violator());
  auto r    = run({"check", viol, "--suite", "ann3", "--format", "json"});
  CHECK(r.code == 1);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["passed"] == false);
  CHECK(doc["diagrams"][0]["name"] == "d1.4");
  CHECK(doc["diagrams"][0]["failures"][0]["assignment"] == nlohmann::json{1, 1});
  CHECK(doc["diagrams"][0]["failures"][0]["lhs"] == 1);
  CHECK(doc["diagrams"][0]["failures"][0]["rhs"] == 0);
  CHECK(doc["diagrams"][1]["passed"] == true);

  auto text = run({"check", viol, "--suite", "ann3"});
  CHECK(text.out.find("(X,Y)=(1,1) lhs=1 rhs=0") != std::string::npos);

  CHECK(run({"check", triv, "--suite", "nonsense"}).code == 2);
  CHECK(run({"check", (scratch() / "missing.json").string()}).code == 2);
}

TEST_CASE("check rejects tables that are not a ring") {
  auto path = write_text("nonassoc.json", R"({
    "ring": {"add": [[0,1,2],[1,2,0],[2,0,1]], "mul": [[0,0,0],[0,1,2],[0,1,0]],
             "zero": 0, "one": 1},
    "module": {"add": [[0]], "zero": 0, "left_action": [[0],[0],[0]],
               "right_action": [[0,0,0]]}})");
  auto r = run({"check", path, "--suite", "ann"});
  CHECK(r.code == 2);
  CHECK(r.err.find("multiplicative associativity") != std::string::npos);
  CHECK(run({"validate", path}).code == 2);
  CHECK(run({"validate", write_model("ok.json", testing::trivial_model(3))}).code == 0);
}

TEST_CASE("reports are byte-identical across runs") {
  auto viol = write_model("d14_again.json", d14_violator());
  auto out1 = (scratch() / "r1.json").string();
  auto out2 = (scratch() / "r2.json").string();
  CHECK(run({"check", viol, "--suite", "ann", "--out", out1}).code == 1);
  CHECK(run({"check", viol, "--suite", "ann", "--out", out2}).code == 1);
  CHECK(read_file(out1) == read_file(out2));
  auto doc = nlohmann::json::parse(read_file(out1));
  CHECK(doc["tool"] == "anncat");
  CHECK(doc["input_digest"].get<std::string>().rfind("sha256:", 0) == 0);
}

TEST_CASE("derive") {
  auto triv = run({"derive", write_model("t.json", testing::trivial_model(3)), "--format",
                   "json"});
  CHECK(triv.code == 0);
  auto doc = nlohmann::json::parse(triv.out);
  CHECK(doc["lhat"]["table"] == nlohmann::json{0, 0, 0});
  CHECK(doc["rhat"]["table"] == nlohmann::json{0, 0, 0});

  auto bad = run({"derive", write_model("lhat.json", lhat_violator()), "--format", "json"});
  CHECK(bad.code == 1);
  doc = nlohmann::json::parse(bad.out);
  CHECK(doc["lhat"]["consistent"] == false);
  CHECK(doc["lhat"]["conflicts"][0]["A"] == 1);
  CHECK(doc["lhat"]["conflicts"][0]["X"] == 1);
  CHECK(doc["lhat"]["conflicts"][0]["candidate"] == 1);
  CHECK(doc["lhat"]["conflicts"][0]["reference"] == 0);
  CHECK(doc["rhat"]["consistent"] == true);

  // A non-trivial ann model: R(X,Y,0) = 1 and L(0,X,Y) = 1 for all X, Y.
  auto m = testing::trivial_model(2);
  for (Elem X = 0; X < 2; ++X) {
    for (Elem Y = 0; Y < 2; ++Y) {
      m.table(TableId::Ldist).data()[(0 * 2 + X) * 2 + Y] = 1;
      m.table(TableId::Rdist).data()[(X * 2 + Y) * 2 + 0] = 1;
    }
  }
  auto ann_path = write_model("ann.json", m);
  CHECK(run({"check", ann_path, "--suite", "ann"}).code == 0);
  CHECK(run({"derive", ann_path}).code == 0);
}

TEST_CASE("explain") {
  auto triv = write_model("explain_t.json", testing::trivial_model(2));
  auto r    = run({"explain", triv, "d1.4", "1,1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("lhs value 0, rhs value 0: equal") != std::string::npos);

  auto viol = write_model("explain_v.json", d14_violator());
  r         = run({"explain", viol, "d1.4", "1,1"});
  CHECK(r.code == 1);
  CHECK(r.out.find("lhs value 1, rhs value 0: unequal") != std::string::npos);
  CHECK(r.out.find("L(1,X,Y)") != std::string::npos);

  std::mt19937_64 rng(12);
  auto            R = cyclic_ring(4);
  auto            m = testing::random_model(R, ring_bimodule(R), rng);
  auto            path = write_model("explain_r.json", m);
  auto            s    = testing::d11_sides(m, 3, 2, 1, 3);
  r = run({"explain", path, "d1.1", "3,2,1,3"});
  CHECK(r.out.find("lhs value " + std::to_string(s.lhs) + ", rhs value "
                   + std::to_string(s.rhs))
        != std::string::npos);

  CHECK(run({"explain", triv, "d1.4", "1"}).code == 2);
  CHECK(run({"explain", triv, "d1.4", "1,2"}).code == 2);
  CHECK(run({"explain", triv, "d9.9", "1,1"}).code == 2);
  CHECK(run({"explain", triv, "nat_c", "1,1", "--generics", "1,0"}).code == 0);
  CHECK(run({"explain", triv, "nat_c", "1,1"}).code == 2);

  auto lh = write_model("explain_lhat.json", lhat_violator());
  r       = run({"explain", lh, "d1.5", "1,1"});
  CHECK(r.code == 1);
  CHECK(r.out.find("cannot evaluate") != std::string::npos);
}

TEST_CASE("search") {
  auto r = run({"search", "--ring", "z2", "--module", "regular", "--vary", "none"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["counts"]["visited"] == 1);
  CHECK(doc["counterexamples"].empty());
  CHECK(doc["conclusion"] == "no counterexample in this space");

  auto random = std::vector<std::string>{"search", "--ring", "z3", "--vary", "L,R,g,d",
                                         "--random", "--seed", "9", "--count", "200"};
  auto a = run(random), b = run(random);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  random[7] = "10";
  CHECK(run(random).out != a.out);

  CHECK(run({"search", "--ring", "z5"}).code == 2);
  CHECK(run({"search", "--ring", "z3", "--module", "z2"}).code == 2);
  CHECK(run({"search", "--vary", "L,lhat"}).code == 2);
  CHECK(run({"search", "--ring", "z3", "--vary", "L,R"}).code == 2);
  CHECK(run({"search", "--random", "--count", "5"}).code == 2);
  CHECK(run({"search", "--seed", "5"}).code == 2);
  CHECK(run({"search", "--no-strict-base"}).code == 2);
  CHECK(run({"search", "--bogus"}).code == 2);
}

TEST_CASE("search from a base model writes no counterexample for an ann base") {
  auto base = write_model("base.json", testing::trivial_model(2));
  auto r    = run({"search", "--no-strict-base", "--base", base, "--vary", "g,d", "--outdir",
                   (scratch() / "cex").string()});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["space"]["strict_base"] == false);
  CHECK(doc["counts"]["visited"] == 16);
  CHECK(run({"search", "--no-strict-base", "--base", base, "--ring", "z2"}).code == 2);
}

TEST_CASE("exit codes of the installed binary") {
  auto triv = write_model("bin_t.json", testing::trivial_model(2));
  auto viol = write_model("bin_v.json", d14_violator());
  CHECK(run_binary("check " + triv + " --suite ann") == 0);
  CHECK(run_binary("check " + viol + " --suite ann3") == 1);
  CHECK(run_binary("check " + triv + " --suite nope") == 2);
  CHECK(run_binary("search --ring z2 --vary none") == 0);
  CHECK(run_binary("") == 2);
  CHECK(run_binary("--help") == 0);
}
