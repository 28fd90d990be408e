#include "eqb/eqb_c.h"

#include <cstring>
#include <string>

#include "eqb/io.hpp"

struct eqb_ctx {
  eqb::RunConfig cfg;
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int error_code(const eqb::Error& e) {
  switch (e.code()) {
    case eqb::ErrorCode::parse:
    case eqb::ErrorCode::domain: return EQB_E_INPUT;
    case eqb::ErrorCode::numeric: return EQB_E_NUMERIC;
    case eqb::ErrorCode::gap: return EQB_E_GAP;
    case eqb::ErrorCode::symmetry: return EQB_E_SYMMETRY;
    case eqb::ErrorCode::internal: return EQB_E_INTERNAL;
  }
  return EQB_E_INTERNAL;
}

int outcome_code(eqb::Outcome o) {
  switch (o) {
    case eqb::Outcome::Guaranteed: return EQB_GUARANTEED;
    case eqb::Outcome::Unknown: return EQB_UNKNOWN;
    case eqb::Outcome::Impossible: return EQB_IMPOSSIBLE;
  }
  return EQB_E_INTERNAL;
}

template <typename Fn>
int guarded(eqb_ctx* ctx, char** out, Fn fn) {
  if (!ctx) return EQB_E_INPUT;
  if (out) *out = nullptr;
  try {
    return fn();
  } catch (const eqb::Error& e) {
    ctx->last_error = e.what();
    return error_code(e);
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return EQB_E_INTERNAL;
  }
}

}  // namespace

extern "C" {

eqb_ctx* eqb_ctx_new(void) { return new eqb_ctx(); }

void eqb_ctx_free(eqb_ctx* ctx) { delete ctx; }

int eqb_ctx_set_seed(eqb_ctx* ctx, uint64_t seed) {
  if (!ctx) return EQB_E_INPUT;
  ctx->cfg.seed = seed;
  return 0;
}

int eqb_ctx_set_tolerance(eqb_ctx* ctx, const char* name, double value) {
  if (!ctx || !name) return EQB_E_INPUT;
  if (value <= 0) {
    ctx->last_error = "tolerances must be positive";
    return EQB_E_INPUT;
  }
  std::string n = name;
  if (n == "tol-int") {
    ctx->cfg.tol_int = value;
  } else if (n == "tol-gap") {
    ctx->cfg.tol_gap = value;
  } else {
    ctx->last_error = "unknown tolerance name: " + n;
    return EQB_E_INPUT;
  }
  return 0;
}

int eqb_ctx_set_format(eqb_ctx* ctx, int format) {
  if (!ctx) return EQB_E_INPUT;
  if (format != EQB_FORMAT_TEXT && format != EQB_FORMAT_JSON) {
    ctx->last_error = "unknown format";
    return EQB_E_INPUT;
  }
  ctx->cfg.format = format == EQB_FORMAT_JSON ? eqb::OutputFormat::json
                                              : eqb::OutputFormat::text;
  return 0;
}

const char* eqb_last_error(const eqb_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

int eqb_group_report(eqb_ctx* ctx, const char* spec, char** out) {
  return guarded(ctx, out, [&]() {
    if (!spec || !out) {
      ctx->last_error = "null argument";
      return EQB_E_INPUT;
    }
    std::string s = spec;
    eqb::GroupPtr g = (!s.empty() && (s[0] == '{' || s[0] == '"'))
                          ? eqb::parse_group_json(s)
                          : eqb::parse_group_name(s);
    *out = dup_string(eqb::group_report(g, ctx->cfg));
    return 0;
  });
}

int eqb_clifford_report(eqb_ctx* ctx, int p, int q, char** out) {
  return guarded(ctx, out, [&]() {
    if (!out) {
      ctx->last_error = "null argument";
      return EQB_E_INPUT;
    }
    *out = dup_string(eqb::clifford_report(p, q, ctx->cfg));
    return 0;
  });
}

int eqb_check(eqb_ctx* ctx, const char* kind, const char* document_json,
              char** out) {
  return guarded(ctx, out, [&]() {
    if (!document_json || !out) {
      ctx->last_error = "null argument";
      return EQB_E_INPUT;
    }
    auto result =
        eqb::run_check(document_json, ctx->cfg, kind ? kind : "");
    *out = dup_string(result.report);
    return outcome_code(result.outcome);
  });
}

int eqb_swan(eqb_ctx* ctx, const char* document_json, char** out) {
  return guarded(ctx, out, [&]() {
    if (!document_json || !out) {
      ctx->last_error = "null argument";
      return EQB_E_INPUT;
    }
    *out = dup_string(eqb::run_swan(document_json, ctx->cfg));
    return 0;
  });
}

int eqb_circle(eqb_ctx* ctx, const char* document_json, char** out) {
  return guarded(ctx, out, [&]() {
    if (!document_json || !out) {
      ctx->last_error = "null argument";
      return EQB_E_INPUT;
    }
    auto result = eqb::run_circle(document_json, ctx->cfg);
    *out = dup_string(result.report);
    return outcome_code(result.outcome);
  });
}

int eqb_bloch(eqb_ctx* ctx, const char* model_json, char** out) {
  return guarded(ctx, out, [&]() {
    if (!model_json || !out) {
      ctx->last_error = "null argument";
      return EQB_E_INPUT;
    }
    *out = dup_string(eqb::run_bloch(model_json, ctx->cfg));
    return 0;
  });
}

void eqb_string_free(char* s) { delete[] s; }

}  // extern "C"
