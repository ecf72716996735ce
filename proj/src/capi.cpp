#include "suq2/suq2_c.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "suq2/runner.hpp"

struct suq2_ctx {
  suq2::runner::RunConfig cfg;
  std::string last_error;
  int last_pass = 0;
};

namespace {
char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}
}  // namespace

extern "C" {

suq2_status suq2_ctx_create(const char* config_json, suq2_ctx** out) {
  if (!out) return SUQ2_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  try {
    nlohmann::json j = nlohmann::json::object();
    if (config_json && *config_json) j = nlohmann::json::parse(config_json);
    auto cfg = suq2::runner::RunConfig::from_json(j);
    *out = new suq2_ctx{cfg, "", 0};
    return SUQ2_OK;
  } catch (const nlohmann::json::exception&) {
    return SUQ2_ERR_PARSE;
  } catch (const std::invalid_argument&) {
    return SUQ2_ERR_INVALID_ARGUMENT;
  } catch (...) {
    return SUQ2_ERR_INTERNAL;
  }
}

void suq2_ctx_free(suq2_ctx* ctx) { delete ctx; }

suq2_status suq2_run(suq2_ctx* ctx, const char* command,
                     const char* params_json, char** report_json) {
  if (!ctx || !command || !report_json) return SUQ2_ERR_INVALID_ARGUMENT;
  *report_json = nullptr;
  ctx->last_error.clear();
  try {
    nlohmann::json params = nlohmann::json::object();
    if (params_json && *params_json)
      params = nlohmann::json::parse(params_json);
    nlohmann::json report =
        suq2::runner::run_command(ctx->cfg, command, params);
    ctx->last_pass = report.value("pass", false) ? 1 : 0;
    *report_json = dup_string(report.dump(2));
    return *report_json ? SUQ2_OK : SUQ2_ERR_INTERNAL;
  } catch (const nlohmann::json::exception& e) {
    ctx->last_error = std::string("json: ") + e.what();
    return SUQ2_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    ctx->last_error = e.what();
    return SUQ2_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return SUQ2_ERR_INTERNAL;
  }
}

int suq2_last_pass(const suq2_ctx* ctx) { return ctx ? ctx->last_pass : 0; }

const char* suq2_last_error(const suq2_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

void suq2_string_free(char* s) { std::free(s); }

const char* suq2_version(void) { return "1.0.0"; }

}  // extern "C"
