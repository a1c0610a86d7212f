#include "zcross/zcross.h"

#include <cstring>
#include <string>

#include "scenario.hpp"

struct zcross_report {
  std::string json;
  std::string text;
};

namespace {

thread_local std::string g_last_error;

zcross_status status_of(const zcross::Error& e) {
  return e.internal() ? ZCROSS_ERROR_INTERNAL : ZCROSS_ERROR_VALIDATION;
}

zcross_status run_impl(const zcross::Json& scenario_doc, const char* options_json,
                       zcross_report** out) {
  zcross::Scenario scenario = zcross::parse_scenario(scenario_doc);
  zcross::RunOptions options =
      zcross::parse_options_text(options_json ? options_json : "");
  zcross::Json report = zcross::run_scenario(scenario, options);
  auto* handle = new zcross_report;
  handle->json = report.dump(2);
  handle->text = zcross::render_text(report);
  *out = handle;
  return ZCROSS_OK;
}

template <typename Fn>
zcross_status guarded(zcross_report** out, Fn&& fn) {
  if (out == nullptr) {
    g_last_error = "output handle pointer is null";
    return ZCROSS_ERROR_ARGUMENT;
  }
  *out = nullptr;
  try {
    return fn();
  } catch (const zcross::Error& e) {
    g_last_error = e.what();
    if (!e.detail().empty()) g_last_error += "\ncounterexample: " + e.detail();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ZCROSS_ERROR_VALIDATION;
  }
}

}  // namespace

extern "C" {

const char* zcross_version(void) { return "zcross 1.0.0"; }

zcross_status zcross_run_scenario(const char* scenario_json, const char* options_json,
                                  zcross_report** out) {
  return guarded(out, [&]() -> zcross_status {
    if (scenario_json == nullptr) {
      g_last_error = "scenario JSON is null";
      return ZCROSS_ERROR_ARGUMENT;
    }
    zcross::Json doc = zcross::Json::parse(scenario_json, nullptr, false);
    if (doc.is_discarded())
      throw zcross::Error(zcross::ErrorCode::SchemaError, "scenario is not valid JSON");
    return run_impl(doc, options_json, out);
  });
}

zcross_status zcross_run_demo(const char* name, const char* options_json,
                              zcross_report** out) {
  return guarded(out, [&]() -> zcross_status {
    if (name == nullptr) {
      g_last_error = "demo name is null";
      return ZCROSS_ERROR_ARGUMENT;
    }
    return run_impl(zcross::demo_scenario(name), options_json, out);
  });
}

const char* zcross_report_json(const zcross_report* report) {
  return report ? report->json.c_str() : nullptr;
}

const char* zcross_report_text(const zcross_report* report) {
  return report ? report->text.c_str() : nullptr;
}

void zcross_report_free(zcross_report* report) { delete report; }

const char* zcross_demos_json(void) {
  static const std::string listing = [] {
    zcross::Json arr = zcross::Json::array();
    for (const std::string& name : zcross::demo_names()) {
      zcross::Json doc = zcross::demo_scenario(name);
      arr.push_back(zcross::Json{{"name", name},
                                 {"description", doc.value("description", std::string())}});
    }
    return arr.dump(2);
  }();
  return listing.c_str();
}

zcross_status zcross_demo_scenario_json(const char* name, char** out) {
  if (out == nullptr) {
    g_last_error = "output pointer is null";
    return ZCROSS_ERROR_ARGUMENT;
  }
  *out = nullptr;
  if (name == nullptr) {
    g_last_error = "demo name is null";
    return ZCROSS_ERROR_ARGUMENT;
  }
  try {
    std::string text = zcross::demo_scenario(name).dump(2);
    *out = new char[text.size() + 1];
    std::memcpy(*out, text.c_str(), text.size() + 1);
    return ZCROSS_OK;
  } catch (const zcross::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ZCROSS_ERROR_VALIDATION;
  }
}

void zcross_string_free(char* text) { delete[] text; }

const char* zcross_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
