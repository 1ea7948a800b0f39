#include <doctest.h>

#include <cstdio>

#include "gpcat/gorenstein.hpp"
#include "gpcat/gpcat.h"
#include "gpcat/io.hpp"
#include "gpcat/report.hpp"
#include "helpers.hpp"

using namespace gpcat;
using namespace testing;

namespace {

std::string fixture(const std::string& rel) { return std::string(GPCAT_FIXTURE_DIR) + "/" + rel; }

RunResult run_command(const std::string& command, std::vector<std::string> inputs, std::string kind = "",
                      std::map<std::string, std::string> options = {}) {
  RunConfig cfg;
  cfg.command = command;
  cfg.kind = std::move(kind);
  cfg.options = std::move(options);
  for (auto& in : inputs) cfg.inputs.push_back(fixture(in));
  return run(cfg);
}

}  // namespace

TEST_CASE("report basics") {
  RunResult g = run_command("gdim", {"categories/square.toml"});
  CHECK(g.exit_code == 0);
  CHECK(g.report["schema"] == "gpcat-report/1");
  CHECK(g.report["result"]["value"] == 2);
  CHECK(g.report["inputs"].size() == 1);
  CHECK(g.report["inputs"][0]["sha256"] == sha256_hex(read_file(fixture("categories/square.toml"))));
  CHECK(run_command("gdim", {"categories/square.toml"}).text == g.text);

  RunConfig cut;
  cut.command = "gdim";
  cut.cutoff = 2;
  cut.inputs = {fixture("categories/chain3.toml")};
  RunResult c = run(cut);
  CHECK(c.exit_code == 2);
  CHECK(c.report["status"] == "inconclusive");
  CHECK(c.report["result"]["value"] == "≥2");

  RunResult bad = run_command("gdim", {"categories/none.toml"});
  CHECK(bad.exit_code == 1);
  CHECK(bad.report["error"]["kind"] == "io");
  CHECK(run_command("frobnicate", {}).exit_code == 1);
  CHECK(run_command("check", {"representations/a2_simple1.toml"}, "nonsense").exit_code == 1);
  CHECK(run_command("check", {"representations/a2_right_simple2.toml"}, "monic").exit_code == 1);
  CHECK(run_command("derived", {"representations/a2_simple1.toml"}).exit_code == 1);
}

TEST_CASE("report verdicts match the library") {
  RunResult m = run_command("check", {"representations/a2_simple1.toml"}, "monic");
  CHECK(m.exit_code == 0);
  CHECK(m.report["result"]["member"] == "no");
  CHECK(m.report["result"] == is_monic(load_representation(fixture("representations/a2_simple1.toml")).rep).to_json());

  RunResult gp = run_command("check", {"representations/discrepancy_lambda2.toml"}, "gp");
  CHECK(gp.report["result"]["member"] == "yes");
  auto p2 = load_representation(fixture("representations/discrepancy_lambda2.toml")).rep;
  Nakayama nk(p2.category_ptr(), 16);
  CHECK(gp.report["result"] == is_gp_functor(nk, p2, self_injective_dimension(p2.base_ptr(), 16)).to_json());

  RunResult d = run_command("check", {"representations/discrepancy_lambda2.toml"}, "discrepancy");
  CHECK(d.report["result"]["first"]["member"] == "yes");
  CHECK(d.report["result"]["second"]["member"] == "no");
  CHECK(d.report["inputs"].size() == 3);

  for (const char* rep : {"a2_simple1", "a2_proj1", "a2_sum", "square_zero_corner", "loop_free"}) {
    const std::string rel = std::string("representations/") + rep + ".toml";
    auto f = load_representation(fixture(rel)).rep;
    Nakayama n(f.category_ptr(), 16);
    CHECK(run_command("check", {rel}, "gproj-p").report["result"] == is_gproj_P(n, f).to_json());
  }

  RunResult e = run_command("enumerate", {"categories/a2_f2.toml"}, "", {{"dims", "1,1"}});
  CHECK(e.report["result"]["count"] == 5);
  CHECK(run_command("enumerate", {"categories/a2.toml"}, "", {{"dims", "1,1"}}).exit_code == 1);
  CHECK(run_command("enumerate", {"categories/a2_f2.toml"}, "", {{"dims", "1"}}).exit_code == 1);
}

TEST_CASE("fixture corpus") {
  RunResult f = run_command("fixtures", {}, "", {{"dir", GPCAT_FIXTURE_DIR}});
  CHECK(f.exit_code == 0);
  CHECK(f.report["result"]["count"].get<std::size_t>() >= 8);
  for (const auto& e : f.report["result"]["fixtures"]) {
    CHECK_MESSAGE(e["valid"] == true, e["path"].get<std::string>());
    const std::string path = fixture(e["path"].get<std::string>());
    json doc = parse_document(read_file(path), path);
    CHECK(parse_document(serialize_document(doc)) == doc);
  }
  // The square as a tensor product A2 (x) A2.
  auto sq = load_category(fixture("categories/square.toml"));
  auto a = load_category(fixture("categories/a2.toml"));
  auto t = tensor_category(*a, *a);
  std::vector<std::size_t> ds, dt;
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) {
      ds.push_back(sq->hom_dim(x, y));
      dt.push_back(t->hom_dim(x, y));
    }
  std::sort(ds.begin(), ds.end());
  std::sort(dt.begin(), dt.end());
  CHECK(ds == dt);
  CHECK(sq->total_dim() == t->total_dim());
}

TEST_CASE("c interface") {
  gpcat_config* cfg = gpcat_config_new("gdim");
  REQUIRE(cfg);
  CHECK(gpcat_config_add_input(cfg, fixture("categories/chain2.toml").c_str()) == GPCAT_OK);
  CHECK(gpcat_config_set(cfg, "cutoff", "8") == GPCAT_OK);
  CHECK(gpcat_config_set(cfg, "cutoff", "0") == GPCAT_ERR_ARGUMENT);
  CHECK(gpcat_config_set(cfg, "cutoff", "-1") == GPCAT_ERR_ARGUMENT);
  CHECK(gpcat_config_set(cfg, "field", "F4") != GPCAT_OK);
  CHECK(std::string(gpcat_last_error()).size() > 0);
  CHECK(gpcat_config_set(cfg, "colour", "x") == GPCAT_ERR_ARGUMENT);
  gpcat_report* rep = nullptr;
  CHECK(gpcat_run(cfg, &rep) == 0);
  json j = json::parse(gpcat_report_json(rep));
  CHECK(j["result"]["value"] == 2);
  CHECK(j["cutoff"] == 8);
  CHECK(gpcat_report_exit_code(rep) == 0);
  gpcat_report_free(rep);
  gpcat_config_free(cfg);

  gpcat_category* c = nullptr;
  CHECK(gpcat_category_load(fixture("categories/square.toml").c_str(), &c) == GPCAT_OK);
  CHECK(gpcat_category_object_count(c) == 4);
  CHECK(gpcat_category_hom_dim(c, 0, 3) == 1);
  CHECK(gpcat_category_hom_dim(c, 0, 9) == -1);
  gpcat_category_free(c);
  CHECK(gpcat_category_load("/nonexistent.toml", &c) == GPCAT_ERR_IO);
}
