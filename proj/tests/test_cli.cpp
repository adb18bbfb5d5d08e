#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lmhs/commands.hpp"
#include "lmhs/errors.hpp"
#include "lmhs/genus2.hpp"
#include "support/instances.hpp"

using namespace lmhs;

namespace {

const std::string kRoot = LMHS_SOURCE_DIR;
const std::string kBinary = LMHS_BINARY;

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE_MESSAGE(f.good(), "cannot open " << path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct Run {
  int code = -1;
  std::string out, err;
};

Run run_cli(const std::string& args) {
  static int counter = 0;
  std::string base = "/tmp/lmhs_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++);
  std::string cmd = kBinary + " " + args + " > " + base + ".out 2> " + base + ".err";
  int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(base + ".out");
  r.err = slurp(base + ".err");
  std::remove((base + ".out").c_str());
  std::remove((base + ".err").c_str());
  return r;
}

DegenerationInput from_instance(const testing::Instance& inst) {
  DegenerationInput in;
  in.lattice = inst.lattice;
  in.nilpotents = inst.nilpotents;
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < inst.nilpotents.size(); ++i) all.push_back(i);
  in.cones = {NamedCone{"sigma", all}};
  in.F = inst.F;
  return in;
}

}  // namespace

TEST_CASE("genus-2 example document reproduces the built-in fixture") {
  Genus2Fixture g = builtin_genus2();
  DegenerationInput in = parse_input(genus2_example());
  CHECK(in.q_derived);
  CHECK(in.lattice.Q == g.lattice.Q);
  CHECK(in.nilpotents == g.cone.generators);
  REQUIRE(in.F);
  CHECK(*in.F == g.F);
  REQUIRE(in.xi);
  CHECK(in.xi->is_log);
  CHECK(in.xi->matrix == g.frame.log_xi);
  CHECK(in.monodromy.size() == 3);
  CHECK(slurp(kRoot + "/fixtures/genus2.json") == render_json(genus2_example()));
}

TEST_CASE("derived form is unique only with enough constraints") {
  Genus2Fixture g = builtin_genus2();
  std::vector<GMatrix> gammas = {genus2_gamma(1, 0, 0), genus2_gamma(0, 1, 0), genus2_gamma(0, 0, 1)};
  CHECK(derive_form(gammas, 4, 1, &g.F) == g.lattice.Q);
  CHECK_THROWS_AS(derive_form(gammas, 4, 1), InvariantError);
  CHECK_THROWS_AS(derive_form({}, 4, 1, &g.F), InvariantError);
  GMatrix sym = derive_form(gammas, 4, 2, &g.F);
  CHECK(sym.transpose() == sym);
}

TEST_CASE("documents survive a JSON round trip") {
  Json doc = genus2_example();
  CHECK(to_json(parse_input(doc)) == doc);
  CHECK(to_json(parse_input_text(doc.dump())) == doc);

  for (auto& inst : testing::fixture_corpus()) {
    CAPTURE(inst.name);
    DegenerationInput in = from_instance(inst);
    Json j = to_json(in);
    DegenerationInput back = parse_input(j);
    CHECK(back.lattice.Q == inst.lattice.Q);
    CHECK(back.nilpotents == inst.nilpotents);
    CHECK(*back.F == inst.F);
    CHECK(to_json(back) == j);
  }
}

TEST_CASE("numeric matrix entries are rejected") {
  Json doc = genus2_example();
  doc["nilpotents"][0][3][0] = 1;
  try {
    parse_input(doc);
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(e.path() == "/nilpotents/0/3/0");
  }
}

TEST_CASE("malformed corpus raises the recorded error kinds") {
  Json manifest = Json::parse(slurp(kRoot + "/fixtures/malformed/manifest.json"));
  CHECK(manifest.size() >= 10);
  for (auto& [file, expect] : manifest.items()) {
    CAPTURE(file);
    std::string text = slurp(kRoot + "/fixtures/malformed/" + file);
    std::string kind, path;
    bool threw = false;
    try {
      DegenerationInput in = parse_input_text(text);
      run_command("deligne", in, {});
    } catch (const SchemaError& e) {
      threw = true;
      kind = e.kind();
      path = e.path();
    } catch (const Error& e) {
      threw = true;
      kind = e.kind();
    }
    REQUIRE(threw);
    CHECK(kind == expect["kind"].get<std::string>());
    if (expect.contains("path")) CHECK(path == expect["path"].get<std::string>());
  }
}

TEST_CASE("non-commuting generators and parity violations are named") {
  auto message_of = [](const std::string& file) {
    try {
      parse_input_text(slurp(kRoot + "/fixtures/malformed/" + file));
    } catch (const InvariantError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message_of("noncommuting.json").find("commute") != std::string::npos);
  CHECK(message_of("parity.json").find("parity") != std::string::npos);
}

TEST_CASE("reports are deterministic and carry verdicts") {
  DegenerationInput in = parse_input(genus2_example());
  for (const char* cmd : {"deligne", "check-lmhs", "weight-compat", "sl2", "extension-tower", "ample-cone", "period-report"}) {
    CAPTURE(cmd);
    CommandResult a = run_command(cmd, in, {});
    CommandResult b = run_command(cmd, in, {});
    CHECK(render_json(a.report) == render_json(b.report));
    CHECK(render_text(a.report) == render_text(b.report));
    CHECK(a.exit_code == 0);
    CHECK(a.report["schema"] == kSchema);
  }

  Json d = run_command("deligne", in, {}).report;
  CHECK(d["bigrading"].size() == 4);
  CHECK(d["recovers_W"] == true);
  CHECK(d["recovers_F"] == true);
  CHECK(d["r_split"] == true);

  Json p = run_command("period-report", in, {}).report;
  CHECK(p["torelli"] == true);
  CHECK(p["horizontal"][0]["tau"]["text"] == "t1");
  for (auto& deck : p["deck"]) CHECK(deck["coordinate_ok"] == true);

  CommandOptions opts;
  opts.cone = "sigma";
  CHECK(run_command("sl2", in, opts).report["cone"]["name"] == "sigma");
  opts.cone = "nope";
  CHECK_THROWS_AS(run_command("sl2", in, opts), SchemaError);
}

TEST_CASE("text rendering draws the Hodge-Deligne diamond") {
  DegenerationInput in = parse_input(genus2_example());
  std::string text = render_text(run_command("deligne", in, {}).report);
  CHECK(text.find("deligne: completed") == 0);
  CHECK(text.find("     1\n   1   1\n     1\n") != std::string::npos);
}

TEST_CASE("command line: exit codes, stable bytes and error documents") {
  const std::string g2 = kRoot + "/fixtures/genus2.json";
  Run ex = run_cli("example genus2");
  CHECK(ex.code == 0);
  CHECK(ex.out == slurp(g2));

  Run a = run_cli("period-report --format json --input " + g2);
  Run b = run_cli("period-report --format json --input " + g2);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["verdict"] == "completed");

  Run np = run_cli("check-lmhs --format json --input " + kRoot + "/fixtures/dim2_not_polarized.json");
  CHECK(np.code == 2);
  CHECK(Json::parse(np.out)["verdict"] == "not-polarized");

  Run bad = run_cli("deligne --input " + kRoot + "/fixtures/malformed/numeric_entry.json");
  CHECK(bad.code == 1);
  CHECK(bad.out.empty());
  Json err = Json::parse(bad.err);
  CHECK(err["error"]["kind"] == "SchemaError");
  CHECK(err["error"]["path"] == "/lattice/Q/0/3");

  CHECK(run_cli("deligne --input /nonexistent/file.json").code == 1);
  CHECK(run_cli("no-such-command").code == 1);
  CHECK(run_cli("deligne --input " + g2 + " --format yaml").code == 1);
}
