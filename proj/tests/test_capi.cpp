#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "qfw/qfw.h"

namespace {
const char* kC2 = R"({"p": 5, "hom": {"source": {"dim": 1, "mul": [[[1]]], "unit": [1]},
  "target": {"dim": 2, "mul": [[[1,0],[0,1]],[[0,1],[1,0]]], "unit": [1,0]}, "matrix": [[1],[0]]}})";
}

TEST_CASE("run a command through the C API") {
  qfw_context* ctx = qfw_context_new(1);
  REQUIRE(ctx);
  char* out = nullptr;
  qfw_verdict v = QFW_INCONSISTENT;
  const char* in[] = {kC2};
  REQUIRE(qfw_run_command(ctx, "check-extension", in, 1, &out, &v) == QFW_OK);
  CHECK(v == QFW_YES);
  auto report = nlohmann::json::parse(out);
  CHECK(report["verdict"] == "yes");
  CHECK(report["seed"] == 1);

  int ok = 0;
  CHECK(qfw_verify_report(ctx, out, &ok) == QFW_OK);
  CHECK(ok == 1);
  qfw_string_free(out);
  qfw_context_free(ctx);
}

TEST_CASE("error codes") {
  qfw_context* ctx = qfw_context_new(0);
  char* out = nullptr;
  qfw_verdict v;
  const char* bad_json[] = {"{"};
  CHECK(qfw_run_command(ctx, "check-extension", bad_json, 1, &out, &v) == QFW_SCHEMA);
  CHECK(std::string(qfw_last_error(ctx)).find("malformed") != std::string::npos);

  const char* in[] = {kC2};
  CHECK(qfw_run_command(ctx, "no-such-command", in, 1, &out, &v) == QFW_USAGE);
  CHECK(qfw_run_command(ctx, "check-coring", in, 1, &out, &v) == QFW_SCHEMA);
  CHECK(qfw_run_command(ctx, "similar", in, 1, &out, &v) == QFW_USAGE);

  const char* not_assoc[] = {R"({"p": 5, "algebra": {"dim": 1, "mul": [[[2]]], "unit": [1]}})"};
  CHECK(qfw_run_command(ctx, "check-bimodule", not_assoc, 1, &out, &v) != QFW_OK);

  CHECK(qfw_run_command(nullptr, "verify", in, 1, &out, &v) == QFW_USAGE);
  CHECK(qfw_run_command(ctx, nullptr, in, 1, &out, &v) == QFW_USAGE);
  qfw_context_free(ctx);
}
