#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "bialg/commands.hpp"
#include "bialg/dsl.hpp"
#include "bialg/sampler.hpp"

using namespace bialg;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string fixture(const std::string& name) {
  return slurp(std::string(FIXTURE_DIR) + "/" + name);
}

std::string golden(const std::string& name) {
  return slurp(std::string(GOLDEN_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("rejected inputs report the exact line and column") {
  for (const auto& entry : std::filesystem::directory_iterator(GOLDEN_DIR)) {
    std::filesystem::path path = entry.path();
    if (path.filename().string().find("err") != 0 || path.extension() != ".alg") continue;
    CAPTURE(path.string());
    std::string text = slurp(path.string());
    std::string expected = slurp(path.replace_extension(".expected").string());
    SampleConfig cfg;
    Outcome out = run_on_text("validate", {}, text, cfg, ReportFormat::text);
    CHECK(out.exit_code == 2);
    CHECK(out.output == expected);
  }
}

TEST_CASE("well formed file renders canonically and reparses to itself") {
  std::string text = golden("valid01_full.alg");
  StructureFile f = parse_structure(text);
  std::string canon = render(f);
  CHECK(canon == golden("valid01_full.expected"));
  StructureFile again = parse_structure(canon);
  CHECK(again == f);
  CHECK(render(again) == canon);
}

TEST_CASE("render is a fixed point on every fixture") {
  for (const auto& entry : std::filesystem::directory_iterator(FIXTURE_DIR)) {
    if (entry.path().extension() != ".alg") continue;
    CAPTURE(entry.path().string());
    StructureFile f = parse_structure(slurp(entry.path().string()));
    std::string canon = render(f);
    StructureFile g = parse_structure(canon);
    CHECK(g == f);
    CHECK(render(g) == canon);
  }
}

TEST_CASE("expression parser round trips rendered polynomials") {
  BasePatch base{{"x", "y", "z"}};
  SampleStream s(91);
  for (int t = 0; t < 64; ++t) {
    Scalar f = s.scalar(3, 3);
    CHECK(parse_scalar(to_string(f, base), base) == f);
  }
  // explicit grammar corners
  CHECK(parse_scalar("-x^2 + 3/2*y - 1", base) ==
        -Scalar::variable(3, 0) * Scalar::variable(3, 0) +
            Scalar::constant(3, Rational(3, 2)) * Scalar::variable(3, 1) -
            Scalar::constant(3, 1));
  CHECK(parse_scalar("(x + y)^2 - x^2 - y^2 - 2*x*y", base).is_zero());
  CHECK_THROWS_AS(parse_scalar("x + ", base), ParseError);
  CHECK_THROWS_AS(parse_scalar("q", base), ParseError);
}

TEST_CASE("identical runs produce byte identical reports") {
  std::string text = fixture("contact_pair.alg");
  SampleConfig cfg;
  cfg.seed = 7;
  Outcome a = run_on_text("check-pair", {"contact_pair"}, text, cfg, ReportFormat::json);
  Outcome b = run_on_text("check-pair", {"contact_pair"}, text, cfg, ReportFormat::json);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);

  Outcome c = run_on_text("induce", {"contact_pair"}, text, cfg, ReportFormat::text);
  Outcome d = run_on_text("induce", {"contact_pair"}, text, cfg, ReportFormat::text);
  CHECK(c.exit_code == 0);
  CHECK(c.output == d.output);
}

TEST_CASE("exit codes separate failing checks from unusable input") {
  SampleConfig cfg;
  // all checks pass
  CHECK(run_on_text("validate", {}, fixture("poisson_plane.alg"), cfg, ReportFormat::text)
            .exit_code == 0);
  // well formed input, failing identity
  Outcome bad = run_on_text("validate", {}, fixture("bad_jacobi.alg"), cfg, ReportFormat::text);
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("FAIL") != std::string::npos);
  // unusable: unknown name
  Outcome unknown =
      run_on_text("check-pair", {"nonsense"}, fixture("contact_pair.alg"), cfg, ReportFormat::text);
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.output.find("error:") == 0);
  // unusable: wrong arity
  Outcome arity = run_on_text("triangular", {"TM"}, fixture("poisson_plane.alg"), cfg,
                              ReportFormat::text);
  CHECK(arity.exit_code == 2);
  // unusable: unknown command
  CHECK(run_on_text("frobnicate", {}, fixture("poisson_plane.alg"), cfg, ReportFormat::text)
            .exit_code == 2);
}

TEST_CASE("json reports follow the documented schema") {
  SampleConfig cfg;
  cfg.seed = 3;
  Outcome out =
      run_on_text("check-pair", {"contact_pair"}, fixture("contact_pair.alg"), cfg,
                  ReportFormat::json);
  REQUIRE(out.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(out.output);
  CHECK(doc["command"] == "check-pair");
  CHECK(doc["seed"] == 3);
  REQUIRE(doc["checks"].is_array());
  CHECK(doc["checks"].size() == 30);
  for (const auto& chk : doc["checks"]) {
    CHECK(chk.contains("name"));
    CHECK(chk.contains("paper_ref"));
    CHECK(chk["status"] == "pass");
    CHECK_FALSE(chk.contains("counterexample"));
  }

  Outcome bad = run_on_text("validate", {}, fixture("bad_algebroid.alg"), cfg, ReportFormat::json);
  CHECK(bad.exit_code == 1);
  nlohmann::json baddoc = nlohmann::json::parse(bad.output);
  bool witnessed = false;
  for (const auto& chk : baddoc["checks"]) {
    if (chk["status"] == "pass") continue;
    CHECK(chk["status"] == "fail");
    REQUIRE(chk.contains("counterexample"));
    CHECK(chk["counterexample"].contains("inputs"));
    CHECK(chk["counterexample"]["residual"] != "0");
    witnessed = true;
  }
  CHECK(witnessed);

  Outcome induced =
      run_on_text("induce", {"contact"}, fixture("contact_r3.alg"), cfg, ReportFormat::json);
  REQUIRE(induced.exit_code == 0);
  nlohmann::json idoc = nlohmann::json::parse(induced.output);
  CHECK(idoc.contains("induced"));
  CHECK(idoc.contains("emitted"));
}

TEST_CASE("semantic shape errors are caught at parse time") {
  SampleConfig cfg;
  // morphism matrix must be target rank by source rank
  std::string bad_morphism = fixture("contact_pair.alg") +
                             "\nmorphism wrong : contact_pair -> contact_pair = [[1, 0], [0, 1]];\n";
  Outcome m = run_on_text("validate", {}, bad_morphism, cfg, ReportFormat::text);
  CHECK(m.exit_code == 2);
  CHECK(m.output.find("error:") == 0);

  // a pair must join algebroids of one rank; jacobi structures lift to dim+1
  std::string text = fixture("contact_r3.alg");
  CHECK_NOTHROW(parse_structure(text));
  StructureFile f = parse_structure(text);
  CHECK(f.find_jacobi("contact") != nullptr);

  // referencing a cocycle owned by the other side is rejected
  std::string wrong_owner = fixture("contact_pair.alg");
  auto pos = wrong_owner.find("pair contact_pair");
  REQUIRE(pos != std::string::npos);
  std::string mutated = wrong_owner.substr(0, pos) +
                        "pair broken = (contact_ext, contact_x0; contact_jet, contact_theta);\n";
  Outcome o = run_on_text("validate", {}, mutated, cfg, ReportFormat::text);
  CHECK(o.exit_code == 2);
  CHECK(o.output.find("not declared on") != std::string::npos);
}

TEST_CASE("commands surface construction failures as failing reports") {
  SampleConfig cfg;
  Outcome tri = run_on_text("triangular", {"TM", "zero", "P"}, fixture("bad_mc.alg"), cfg,
                            ReportFormat::text);
  CHECK(tri.exit_code == 1);
  CHECK(tri.output.find("FAIL maurer_cartan") != std::string::npos);
  CHECK(tri.output.find("(-2)*e[1,2,3]") != std::string::npos);

  Outcome jac =
      run_on_text("jacobi", {"broken"}, fixture("bad_jacobi.alg"), cfg, ReportFormat::json);
  CHECK(jac.exit_code == 1);
  nlohmann::json doc = nlohmann::json::parse(jac.output);
  bool failed = false;
  for (const auto& chk : doc["checks"])
    if (chk["status"] == "fail") failed = true;
  CHECK(failed);
}

TEST_CASE("emitted structure files reparse and reverify") {
  SampleConfig cfg;
  Outcome out = run_on_text("dualize", {"contact_pair"}, fixture("contact_pair.alg"), cfg,
                            ReportFormat::text);
  REQUIRE(out.exit_code == 0);
  auto pos = out.output.find("manifold");
  REQUIRE(pos != std::string::npos);
  std::string emitted = out.output.substr(pos);
  StructureFile f = parse_structure(emitted);
  CHECK(f.find_pair("contact_pair_dual") != nullptr);
  Outcome again = run_on_text("check-pair", {"contact_pair_dual"}, emitted, cfg, ReportFormat::text);
  CHECK(again.exit_code == 0);
}
