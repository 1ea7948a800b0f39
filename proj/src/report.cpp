#include "gpcat/report.hpp"

#include <filesystem>
#include <fstream>

#include "gpcat/gorenstein.hpp"
#include "gpcat/io.hpp"

namespace gpcat {

namespace {

struct Outcome {
  json result;
  bool inconclusive = false;
};

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text[0] == '-') throw Error(ErrorKind::argument, what + " must be a non-negative integer, got '" + text + "'");
  return v;
}

json dims_json(const Representation& r) {
  const Category& c = r.category();
  json d = json::object();
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    if (!r.has_base()) {
      d[c.object_name(x)] = r.dim(x, 0);
      continue;
    }
    json v = json::array();
    for (std::size_t b = 0; b < r.base().object_count(); ++b) v.push_back(r.dim(x, b));
    d[c.object_name(x)] = v;
  }
  return d;
}

json module_body(const Representation& r) {
  json doc = representation_to_document(r, "", "");
  doc.erase("representation");
  return doc;
}

class Runner {
 public:
  explicit Runner(const RunConfig& cfg) : cfg_(cfg) {
    if (cfg.field) field_ = Field::from_name(*cfg.field);
    if (cfg.cutoff == 0) throw Error(ErrorKind::argument, "--cutoff must be positive");
  }

  json inputs() const {
    json list = json::array();
    for (const auto& [path, digest] : digests_) list.push_back({{"path", path}, {"sha256", digest}});
    return list;
  }

  Outcome dispatch() {
    const std::string& c = cfg_.command;
    if (c == "cat-info") return cat_info();
    if (c == "gdim") return gdim();
    if (c == "resolve") return resolve();
    if (c == "nakayama") return nakayama();
    if (c == "derived") return derived();
    if (c == "tor" || c == "ext") return tor_ext(c == "tor");
    if (c == "check") return check();
    if (c == "profile-base") return profile_base();
    if (c == "enumerate") return enumerate();
    if (c == "fixtures") return fixtures();
    throw Error(ErrorKind::argument, "unknown command '" + c + "'");
  }

 private:
  void record(const std::string& path) { digests_[path] = sha256_hex(read_file(path)); }

  const std::string& input(std::size_t i, const char* what) const {
    if (cfg_.inputs.size() <= i) throw Error(ErrorKind::argument, cfg_.command + ": missing " + what + " file");
    return cfg_.inputs[i];
  }

  void expect_inputs(std::size_t n) const {
    if (cfg_.inputs.size() > n) throw Error(ErrorKind::argument, cfg_.command + ": too many input files");
  }

  std::string option(const std::string& key, const std::string& fallback = "") const {
    auto it = cfg_.options.find(key);
    if (it != cfg_.options.end()) return it->second;
    if (fallback.empty()) throw Error(ErrorKind::argument, cfg_.command + ": missing --" + key);
    return fallback;
  }

  CategoryPtr category(std::size_t i) {
    const std::string& path = input(i, "category");
    record(path);
    return load_category(path, field_);
  }

  LoadedRepresentation rep(std::size_t i, bool allow_right = false) {
    const std::string& path = input(i, "representation");
    LoadedRepresentation r = load_representation(path, field_);
    for (const auto& f : r.files) record(f);
    if (r.right && !allow_right) throw Error(ErrorKind::argument, path + ": expected a left module, got side = \"right\"");
    return r;
  }

  Outcome cat_info() {
    expect_inputs(1);
    CategoryPtr c = category(0);
    json objects = json::array(), arrows = json::array(), relations = json::array(), homs = json::array();
    for (std::size_t x = 0; x < c->object_count(); ++x) objects.push_back(c->object_name(x));
    for (std::size_t a = 0; a < c->arrow_count(); ++a)
      arrows.push_back({{"name", c->arrow(a).name}, {"source", c->object_name(c->arrow(a).source)},
                        {"target", c->object_name(c->arrow(a).target)}});
    for (const auto& r : c->relations()) {
      json terms = json::array();
      for (const auto& t : r.terms)
        terms.push_back({t.coefficient.to_string(), c->path_label(c->arrow(t.path.front()).source, t.path)});
      relations.push_back(terms);
    }
    for (std::size_t x = 0; x < c->object_count(); ++x)
      for (std::size_t y = 0; y < c->object_count(); ++y) {
        if (c->hom_dim(x, y) == 0) continue;
        json basis = json::array();
        for (std::size_t i = 0; i < c->hom_dim(x, y); ++i) basis.push_back(c->basis_label(x, y, i));
        homs.push_back({{"source", c->object_name(x)}, {"target", c->object_name(y)}, {"basis", basis}});
      }
    json r;
    r["objects"] = objects;
    r["arrows"] = arrows;
    r["relations"] = relations;
    r["hom"] = homs;
    r["total_dim"] = c->total_dim();
    r["nilpotency_index"] = c->nilpotency_index();
    r["field"] = c->field().name();
    return {r};
  }

  Outcome gdim() {
    expect_inputs(1);
    Nakayama nk(category(0), cfg_.cutoff);
    GorensteinDimension g = nk.gorenstein_dimension();
    json r;
    r["value"] = g.is_finite() ? json(g.value) : json(g.to_string());
    r["pdim_D_left"] = g.left.to_string();
    r["pdim_D_right"] = g.right.to_string();
    return {r, !g.is_finite()};
  }

  Outcome resolve() {
    expect_inputs(1);
    LoadedRepresentation f = rep(0, true);
    const Module& m = f.rep.module();
    Resolution res = projective_resolution(m, cfg_.cutoff);
    const Category& t = m.category();
    json terms = json::array();
    for (std::size_t n = 0; n < res.terms.size(); ++n) {
      json gens = json::array();
      for (auto g : res.generators[n]) gens.push_back(t.object_name(g));
      terms.push_back({{"degree", n}, {"generators", gens}, {"dims", res.terms[n].dims()}});
    }
    json r;
    r["terms"] = terms;
    r["completed"] = res.completed;
    r["pdim"] = res.completed ? json(*res.length()) : json("≥" + std::to_string(cfg_.cutoff));
    return {r, !res.completed};
  }

  Outcome nakayama() {
    expect_inputs(1);
    LoadedRepresentation f = rep(0);
    Nakayama nk(f.rep.category_ptr(), cfg_.cutoff);
    NuRep nu = nk.nu(f.rep);
    NuMinusRep num = nk.nu_minus(f.rep);
    json r;
    r["nu"] = module_body(nu.value);
    r["nu_minus"] = module_body(num.value);
    return {r};
  }

  Outcome derived() {
    expect_inputs(1);
    LoadedRepresentation f = rep(0);
    const std::string functor = option("functor", "nu");
    const std::size_t degree = parse_count(option("degree"), "--degree");
    Nakayama nk(f.rep.category_ptr(), cfg_.cutoff);
    json r;
    r["functor"] = functor;
    r["degree"] = degree;
    if (functor == "nu") {
      r["value"] = module_body(nk.left_derived_nu(f.rep, degree));
    } else if (functor == "nu-minus") {
      json dims = json::object();
      for (std::size_t x = 0; x < f.rep.category().object_count(); ++x)
        dims[f.rep.category().object_name(x)] = nk.right_derived_nu_minus_at(f.rep, x, degree).dims();
      r["value"] = {{"dims", dims}};
    } else {
      throw Error(ErrorKind::argument, "--functor must be nu or nu-minus");
    }
    return {r};
  }

  Outcome tor_ext(bool is_tor) {
    expect_inputs(2);
    LoadedRepresentation m = rep(0, true);
    LoadedRepresentation f = rep(1);
    if (m.rep.has_base()) throw Error(ErrorKind::argument, "the first module must not have a base");
    if (is_tor != m.right)
      throw Error(ErrorKind::argument, is_tor ? "tor expects a right module (side = \"right\") first" : "ext expects a left module first");
    const std::size_t top = parse_count(option("degree", "4"), "--degree");
    json table = json::array();
    bool inconclusive = false;
    for (std::size_t i = 0; i <= top; ++i) {
      try {
        Module v = is_tor ? tor(m.rep.module(), f.rep, i, cfg_.cutoff) : ext(m.rep.module(), f.rep, i, cfg_.cutoff);
        table.push_back({{"degree", i}, {"dims", v.dims()}, {"total", v.total_dim()}});
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::inconclusive) throw;
        table.push_back({{"degree", i}, {"dims", nullptr}, {"total", "inconclusive-at-cutoff"}});
        inconclusive = true;
      }
    }
    return {{{"table", table}}, inconclusive};
  }

  Outcome verdict(const Verdict& v) { return {v.to_json(), v.member == Member::inconclusive}; }

  Outcome check() {
    const std::string& k = cfg_.kind;
    expect_inputs(1);
    LoadedRepresentation f = rep(0);
    if (k == "monic") return verdict(is_monic(f.rep));
    Nakayama nk(f.rep.category_ptr(), cfg_.cutoff);
    if (k == "gproj-p") {
      const std::string route = option("route", "automatic");
      GprojRoute r = route == "automatic" ? GprojRoute::automatic
                     : route == "shortcut"  ? GprojRoute::shortcut
                     : route == "full"      ? GprojRoute::full
                                            : throw Error(ErrorKind::argument, "--route must be automatic, shortcut or full");
      return verdict(is_gproj_P(nk, f.rep, r));
    }
    if (k == "gp") return verdict(is_gp_functor(nk, f.rep, self_injective_dimension(f.rep.base_ptr(), cfg_.cutoff)));
    if (k == "lifted")
      return verdict(lifted_class_membership(nk, f.rep, x_class_from_name(option("x")), f_class_from_name(option("f")),
                                             self_injective_dimension(f.rep.base_ptr(), cfg_.cutoff)));
    if (k == "discrepancy") {
      if (!f.rep.has_base()) throw Error(ErrorKind::argument, "discrepancy needs a representation with a base algebra");
      Representation other = f.rep.swapped(tensor_category(f.rep.base(), f.rep.category()));
      DiscrepancyResult d = discrepancy_probe(f.rep, other, cfg_.cutoff);
      return {d.to_json(), d.first.member == Member::inconclusive || d.second.member == Member::inconclusive};
    }
    throw Error(ErrorKind::argument, "unknown check '" + k + "' (gproj-p, monic, gp, lifted, discrepancy)");
  }

  Outcome profile_base() {
    expect_inputs(1);
    BaseProfile p = self_injective_dimension(category(0), cfg_.cutoff);
    return {p.to_json(), p.status != BaseProfile::Status::computed};
  }

  Outcome enumerate() {
    expect_inputs(1);
    CategoryPtr c = category(0);
    std::vector<std::size_t> bounds;
    const std::string text = option("dims");
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      if (comma == std::string::npos) comma = text.size();
      bounds.push_back(parse_count(text.substr(start, comma - start), "--dims entry"));
      start = comma + 1;
    }
    if (bounds.size() != c->object_count())
      throw Error(ErrorKind::argument, "--dims needs " + std::to_string(c->object_count()) + " comma-separated bounds");
    Enumerator e(c, bounds, cfg_.enumeration_limit);
    json modules = json::array();
    while (auto m = e.next()) modules.push_back(module_body(Representation(*m)));
    json r;
    r["count"] = modules.size();
    r["raw_size"] = e.raw_size();
    r["bounds"] = bounds;
    r["modules"] = modules;
    return {r};
  }

  Outcome fixtures() {
    expect_inputs(0);
    const std::string dir = option("dir");
    json list = json::array();
    for (const auto& rel : list_fixtures(dir)) {
      const std::string path = (std::filesystem::path(dir) / rel).string();
      json entry;
      entry["path"] = rel;
      entry["sha256"] = sha256_hex(read_file(path));
      json doc = parse_document(read_file(path), path);
      try {
        if (doc.contains("category")) {
          entry["kind"] = "category";
          auto c = category_from_document(doc);
          entry["objects"] = c->object_count();
          entry["total_dim"] = c->total_dim();
        } else {
          entry["kind"] = "representation";
          auto r = load_representation(path);
          entry["dims"] = dims_json(r.rep);
          entry["side"] = r.right ? "right" : "left";
        }
        entry["valid"] = true;
      } catch (const Error& e) {
        entry["valid"] = false;
        entry["error"] = e.what();
      }
      list.push_back(entry);
    }
    return {{{"count", list.size()}, {"fixtures", list}}};
  }

  const RunConfig& cfg_;
  std::optional<Field> field_;
  std::map<std::string, std::string> digests_;
};

std::string command_name(const RunConfig& cfg) { return cfg.kind.empty() ? cfg.command : cfg.command + " " + cfg.kind; }

}  // namespace

std::vector<std::string> list_fixtures(const std::string& dir) {
  std::vector<std::string> out;
  std::error_code ec;
  std::filesystem::recursive_directory_iterator it(dir, ec);
  if (ec) throw Error(ErrorKind::io, "cannot list '" + dir + "'");
  for (const auto& entry : it)
    if (entry.is_regular_file() && entry.path().extension() == ".toml")
      out.push_back(std::filesystem::relative(entry.path(), dir).generic_string());
  std::sort(out.begin(), out.end());
  return out;
}

RunResult run(const RunConfig& config) {
  RunResult res;
  json report;
  report["schema"] = report_schema;
  report["command"] = command_name(config);
  report["cutoff"] = config.cutoff;
  report["field"] = config.field ? json(*config.field) : json(nullptr);
  report["inputs"] = json::array();
  json options = json::object();
  for (const auto& [k, v] : config.options) options[k] = v;
  report["options"] = options;
  try {
    Runner runner(config);
    try {
      Outcome o = runner.dispatch();
      report["result"] = o.result;
      report["status"] = o.inconclusive ? "inconclusive" : "ok";
      res.exit_code = o.inconclusive ? 2 : 0;
    } catch (const Error& e) {
      const bool inc = e.kind() == ErrorKind::inconclusive;
      report["status"] = inc ? "inconclusive" : "error";
      report["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
      res.exit_code = inc ? 2 : 1;
    }
    report["inputs"] = runner.inputs();
  } catch (const Error& e) {
    report["status"] = "error";
    report["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    res.exit_code = 1;
  } catch (const std::exception& e) {
    report["status"] = "error";
    report["error"] = {{"kind", "internal"}, {"message", e.what()}};
    res.exit_code = 1;
  }
  res.text = report.dump(2) + "\n";
  res.report = std::move(report);
  if (!config.out.empty()) {
    std::ofstream out(config.out, std::ios::binary);
    out << res.text;
    if (!out) {
      res.report["status"] = "error";
      res.report["error"] = {{"kind", "io"}, {"message", "cannot write '" + config.out + "'"}};
      res.text = res.report.dump(2) + "\n";
      res.exit_code = 1;
    }
  }
  return res;
}

}  // namespace gpcat
