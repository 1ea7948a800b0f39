#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "gpcat/gpcat.h"

#ifndef GPCAT_DEFAULT_FIXTURE_DIR
#define GPCAT_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace {

struct Options {
  std::string cutoff = "16";
  std::string limit;
  std::string field;
  std::string out;
  bool json = false;
  std::vector<std::string> inputs;
  std::string kind;
  std::string functor = "nu";
  std::string degree;
  std::string x;
  std::string f;
  std::string dims;
  std::string route;
  std::string dir = GPCAT_DEFAULT_FIXTURE_DIR;
};

void summarize(const nlohmann::json& report) {
  if (report.contains("error")) {
    std::cerr << "error (" << report["error"]["kind"].get<std::string>() << "): " << report["error"]["message"].get<std::string>()
              << "\n";
    return;
  }
  const auto& r = report["result"];
  std::cout << report["command"].get<std::string>() << ": " << report["status"].get<std::string>() << "\n";
  if (r.contains("member")) {
    std::cout << "member: " << r["member"].get<std::string>() << " (" << r["route"].get<std::string>() << ")\n";
  } else if (r.contains("first") && r.contains("second")) {
    std::cout << "as given: " << r["first"]["member"].get<std::string>() << "\nswapped: " << r["second"]["member"].get<std::string>()
              << "\n";
  } else if (r.contains("value") && !r["value"].is_object()) {
    std::cout << "value: " << (r["value"].is_string() ? r["value"].get<std::string>() : r["value"].dump()) << "\n";
  } else {
    std::cout << r.dump(2) << "\n";
  }
  std::cout << "(use --json for the full report)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nakayama functors and Gorenstein projectives for bound quiver categories"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--cutoff", o.cutoff, "Resolution length cutoff (default 16)");
  app.add_option("--limit", o.limit, "Enumeration budget (raw candidates)");
  app.add_option("--field", o.field, "Override the field: Q or F<p>");
  app.add_option("--out", o.out, "Write the JSON report to this path");
  app.add_flag("--json", o.json, "Print the full JSON report");

  auto files = [&](CLI::App* sub, const char* what) { sub->add_option("files", o.inputs, what)->required(); };
  files(app.add_subcommand("cat-info", "Objects, arrows, relations and hom bases"), "category file");
  files(app.add_subcommand("gdim", "Gorenstein dimension of P"), "category file");
  files(app.add_subcommand("resolve", "Minimal projective resolution"), "representation file");
  files(app.add_subcommand("nakayama", "nu and nu^- of a representation"), "representation file");
  auto* derived = app.add_subcommand("derived", "L_i nu or R^i nu^-");
  files(derived, "representation file");
  derived->add_option("--functor", o.functor, "nu or nu-minus")->check(CLI::IsMember({"nu", "nu-minus"}));
  derived->add_option("--degree", o.degree, "Degree i")->required();
  auto* tor = app.add_subcommand("tor", "Tor_i(M, F) for a right module M, degrees 0..N");
  files(tor, "right module file, then representation file");
  tor->add_option("--degree", o.degree, "Highest degree N (default 4)");
  auto* ext = app.add_subcommand("ext", "Ext^i(M, F) for a left module M, degrees 0..N");
  files(ext, "left module file, then representation file");
  ext->add_option("--degree", o.degree, "Highest degree N (default 4)");
  auto* check = app.add_subcommand("check", "Membership tests with certificates");
  check->add_option("kind", o.kind, "gproj-p, monic, gp, lifted or discrepancy")
      ->required()
      ->check(CLI::IsMember({"gproj-p", "monic", "gp", "lifted", "discrepancy"}));
  files(check, "representation file");
  check->add_option("--x", o.x, "gproj_P or P_proj (lifted)");
  check->add_option("--f", o.f, "gp or proj (lifted)");
  check->add_option("--route", o.route, "automatic, shortcut or full (gproj-p)");
  files(app.add_subcommand("profile-base", "Self-injective dimension of a base algebra"), "category file");
  auto* enumerate = app.add_subcommand("enumerate", "All representations with bounded dimensions over F_p");
  files(enumerate, "category file");
  enumerate->add_option("--dims", o.dims, "Comma-separated bound per object")->required();
  auto* fixtures = app.add_subcommand("fixtures", "List and validate the bundled fixtures");
  fixtures->add_option("--dir", o.dir, "Fixture directory");

  CLI11_PARSE(app, argc, argv);
  CLI::App* sub = app.get_subcommands().front();

  gpcat_config* cfg = gpcat_config_new(sub->get_name().c_str());
  auto set = [&](const char* key, const std::string& value) {
    if (value.empty()) return true;
    if (gpcat_config_set(cfg, key, value.c_str()) == GPCAT_OK) return true;
    std::cerr << "error: " << gpcat_last_error() << "\n";
    return false;
  };
  bool ok = set("cutoff", o.cutoff) && set("limit", o.limit) && set("field", o.field) && set("out", o.out) &&
            set("kind", o.kind) && set("degree", o.degree) && set("x", o.x) && set("f", o.f) && set("dims", o.dims) &&
            set("route", o.route);
  if (ok && sub->get_name() == "derived") ok = set("functor", o.functor);
  if (ok && sub->get_name() == "fixtures") ok = set("dir", o.dir);
  for (const auto& in : o.inputs) ok = ok && gpcat_config_add_input(cfg, in.c_str()) == GPCAT_OK;
  if (!ok) {
    gpcat_config_free(cfg);
    return 1;
  }
  gpcat_report* report = nullptr;
  const int code = gpcat_run(cfg, &report);
  const char* text = gpcat_report_json(report);
  if (o.json)
    std::fputs(text, stdout);
  else
    summarize(nlohmann::json::parse(text));
  gpcat_report_free(report);
  gpcat_config_free(cfg);
  return code;
}
