#include "gpcat/gpcat.h"

#include "gpcat/io.hpp"
#include "gpcat/report.hpp"

struct gpcat_config {
  gpcat::RunConfig config;
};

struct gpcat_report {
  gpcat::RunResult result;
};

struct gpcat_category {
  gpcat::CategoryPtr category;
};

namespace {

thread_local std::string last_error;

gpcat_status fail(gpcat_status s, const std::string& message) {
  last_error = message;
  return s;
}

gpcat_status status_of(gpcat::ErrorKind k) {
  switch (k) {
    case gpcat::ErrorKind::parse:
      return GPCAT_ERR_PARSE;
    case gpcat::ErrorKind::io:
      return GPCAT_ERR_IO;
    case gpcat::ErrorKind::argument:
      return GPCAT_ERR_ARGUMENT;
    case gpcat::ErrorKind::inconclusive:
      return GPCAT_ERR_INCONCLUSIVE;
    default:
      return GPCAT_ERR_VALIDATION;
  }
}

gpcat_status parse_size(const char* value, std::size_t& out) {
  std::string s(value);
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    return fail(GPCAT_ERR_ARGUMENT, "expected a non-negative integer, got '" + s + "'");
  try {
    out = std::stoull(s);
  } catch (const std::exception&) {
    return fail(GPCAT_ERR_ARGUMENT, "integer out of range: '" + s + "'");
  }
  return GPCAT_OK;
}

}  // namespace

extern "C" {

const char* gpcat_version(void) { return "1.0.0"; }

const char* gpcat_last_error(void) { return last_error.c_str(); }

gpcat_config* gpcat_config_new(const char* command) {
  if (!command) {
    fail(GPCAT_ERR_ARGUMENT, "command is null");
    return nullptr;
  }
  auto* c = new gpcat_config;
  c->config.command = command;
  return c;
}

void gpcat_config_free(gpcat_config* config) { delete config; }

gpcat_status gpcat_config_add_input(gpcat_config* config, const char* path) {
  if (!config || !path) return fail(GPCAT_ERR_ARGUMENT, "null argument");
  config->config.inputs.emplace_back(path);
  return GPCAT_OK;
}

gpcat_status gpcat_config_set(gpcat_config* config, const char* key, const char* value) {
  if (!config || !key || !value) return fail(GPCAT_ERR_ARGUMENT, "null argument");
  const std::string k(key);
  auto& c = config->config;
  if (k == "kind") {
    c.kind = value;
  } else if (k == "cutoff") {
    std::size_t v = 0;
    if (gpcat_status s = parse_size(value, v); s != GPCAT_OK) return s;
    if (v == 0) return fail(GPCAT_ERR_ARGUMENT, "cutoff must be positive");
    c.cutoff = v;
  } else if (k == "limit") {
    std::size_t v = 0;
    if (gpcat_status s = parse_size(value, v); s != GPCAT_OK) return s;
    c.enumeration_limit = v;
  } else if (k == "field") {
    try {
      gpcat::Field::from_name(value);
    } catch (const gpcat::Error& e) {
      return fail(status_of(e.kind()), e.what());
    }
    c.field = value;
  } else if (k == "out") {
    c.out = value;
  } else if (k == "functor" || k == "degree" || k == "x" || k == "f" || k == "dims" || k == "route" || k == "dir") {
    c.options[k] = value;
  } else {
    return fail(GPCAT_ERR_ARGUMENT, "unknown configuration key '" + k + "'");
  }
  return GPCAT_OK;
}

int gpcat_run(const gpcat_config* config, gpcat_report** report) {
  if (!config || !report) {
    fail(GPCAT_ERR_ARGUMENT, "null argument");
    return 1;
  }
  auto* r = new gpcat_report;
  r->result = gpcat::run(config->config);
  if (r->result.report.contains("error")) last_error = r->result.report["error"]["message"].get<std::string>();
  *report = r;
  return r->result.exit_code;
}

const char* gpcat_report_json(const gpcat_report* report) { return report ? report->result.text.c_str() : ""; }

int gpcat_report_exit_code(const gpcat_report* report) { return report ? report->result.exit_code : 1; }

void gpcat_report_free(gpcat_report* report) { delete report; }

gpcat_status gpcat_category_load(const char* path, gpcat_category** out) {
  if (!path || !out) return fail(GPCAT_ERR_ARGUMENT, "null argument");
  try {
    *out = new gpcat_category{gpcat::load_category(path)};
    return GPCAT_OK;
  } catch (const gpcat::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::exception& e) {
    return fail(GPCAT_ERR_INTERNAL, e.what());
  }
}

size_t gpcat_category_object_count(const gpcat_category* c) { return c ? c->category->object_count() : 0; }

long gpcat_category_hom_dim(const gpcat_category* c, size_t x, size_t y) {
  if (!c || x >= c->category->object_count() || y >= c->category->object_count()) return -1;
  return static_cast<long>(c->category->hom_dim(x, y));
}

void gpcat_category_free(gpcat_category* c) { delete c; }

}  // extern "C"
