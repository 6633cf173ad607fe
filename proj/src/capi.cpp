#include "qfw/qfw.h"

#include <cstring>
#include <string>

#include "qfw/fixtures.hpp"
#include "qfw/verify.hpp"

struct qfw_context {
  std::uint64_t seed = 0;
  std::size_t depth = 2;
  std::string error;
};

namespace {

using qfw::ErrorKind;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qfw_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::Usage: return QFW_USAGE;
    case ErrorKind::Schema: return QFW_SCHEMA;
    case ErrorKind::Internal: return QFW_INTERNAL;
    default: return QFW_INVALID;
  }
}

qfw_verdict verdict_of(qfw::Verdict v) {
  switch (v) {
    case qfw::Verdict::Yes: return QFW_YES;
    case qfw::Verdict::No: return QFW_NO;
    case qfw::Verdict::Vacuous: return QFW_VACUOUS;
    case qfw::Verdict::Inconsistent: return QFW_INCONSISTENT;
  }
  return QFW_INCONSISTENT;
}

template <class F>
qfw_status guarded(qfw_context* ctx, F&& body) {
  if (!ctx) return QFW_USAGE;
  ctx->error.clear();
  try {
    body();
    return QFW_OK;
  } catch (const qfw::Error& e) {
    ctx->error = e.what();
    return status_of(e.kind());
  } catch (const qfw::json::exception& e) {
    ctx->error = std::string("Schema: ") + e.what();
    return QFW_SCHEMA;
  } catch (const std::exception& e) {
    ctx->error = std::string("Internal: ") + e.what();
    return QFW_INTERNAL;
  }
}

qfw::json parse_doc(const char* text, std::size_t index) {
  try {
    return qfw::json::parse(text);
  } catch (const qfw::json::parse_error& e) {
    throw qfw::Error(ErrorKind::Schema, "input " + std::to_string(index) + ": malformed JSON: " + e.what());
  }
}

}  // namespace

extern "C" {

qfw_context* qfw_context_new(uint64_t seed) {
  auto* c = new (std::nothrow) qfw_context;
  if (c) c->seed = seed;
  return c;
}

void qfw_context_free(qfw_context* ctx) { delete ctx; }

void qfw_context_set_depth(qfw_context* ctx, size_t depth) {
  if (ctx) ctx->depth = depth;
}

const char* qfw_last_error(const qfw_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

qfw_status qfw_run_command(qfw_context* ctx, const char* command, const char* const* inputs, size_t n_inputs,
                           char** report_json, qfw_verdict* verdict) {
  return guarded(ctx, [&] {
    if (!command || !report_json || !verdict || (n_inputs && !inputs))
      throw qfw::Error(ErrorKind::Usage, "null argument");
    std::vector<qfw::json> docs;
    for (std::size_t i = 0; i < n_inputs; ++i) {
      if (!inputs[i]) throw qfw::Error(ErrorKind::Usage, "null input");
      docs.push_back(parse_doc(inputs[i], i));
    }
    auto r = qfw::run_command(command, docs, {ctx->seed, ctx->depth});
    *report_json = dup(qfw::result_to_json(r, ctx->seed).dump(2));
    *verdict = verdict_of(r.report.verdict);
  });
}

qfw_status qfw_verify_report(qfw_context* ctx, const char* report_json, int* ok) {
  return guarded(ctx, [&] {
    if (!report_json || !ok) throw qfw::Error(ErrorKind::Usage, "null argument");
    auto v = qfw::verify::report(parse_doc(report_json, 0));
    *ok = v.ok ? 1 : 0;
    if (!v.ok) ctx->error = v.failures.front();
  });
}

qfw_status qfw_run_battery(qfw_context* ctx, const char* fixtures_dir, char** report_json, size_t* failures) {
  return guarded(ctx, [&] {
    if (!report_json || !failures) throw qfw::Error(ErrorKind::Usage, "null argument");
    auto fixtures = fixtures_dir ? qfw::load_corpus(fixtures_dir) : qfw::corpus();
    auto items = qfw::battery(fixtures, ctx->seed);
    std::size_t bad = 0;
    for (auto& it : items) bad += !it.pass();
    *failures = bad;
    *report_json = dup(qfw::battery_to_json(items, ctx->seed).dump(2));
  });
}

qfw_status qfw_export_fixtures(qfw_context* ctx, const char* out_dir) {
  return guarded(ctx, [&] {
    if (!out_dir) throw qfw::Error(ErrorKind::Usage, "null argument");
    qfw::export_corpus(qfw::corpus(), out_dir);
  });
}

void qfw_string_free(char* s) { std::free(s); }

}  // extern "C"
