// Command-line front end over the C API.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "qfw/qfw.h"

namespace {

enum Exit { kYes = 0, kNo = 1, kInput = 2, kInconsistent = 3 };

struct Context {
  qfw_context* ctx;
  explicit Context(std::uint64_t seed) : ctx(qfw_context_new(seed)) {}
  ~Context() { qfw_context_free(ctx); }
};

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

int exit_for_status(qfw_status s) { return s == QFW_INTERNAL ? kInconsistent : kInput; }

int exit_for_verdict(qfw_verdict v) {
  switch (v) {
    case QFW_YES:
    case QFW_VACUOUS: return kYes;
    case QFW_NO: return kNo;
    case QFW_INCONSISTENT: return kInconsistent;
  }
  return kInconsistent;
}

void emit(const std::string& text, const std::string& report_path, const std::string& summary) {
  if (report_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream(report_path) << text << "\n";
    std::cout << summary << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificate-emitting checks for quasi-Frobenius bimodules, extensions, corings and graded rings"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::uint64_t seed = 0;
  std::string report_path;
  std::size_t depth = 2;
  bool run_battery = false;
  std::string fixtures_dir;
  app.add_option("--seed", seed, "Seed for the randomized searches")->capture_default_str();
  app.add_option("--report", report_path, "Write the JSON report here instead of stdout");
  app.add_flag("--battery", run_battery, "Run the fixture corpus");
  app.add_option("--fixtures", fixtures_dir, "Fixture directory for --battery (default: built-in corpus)");

  struct Sub {
    const char* name;
    const char* help;
    std::size_t inputs;
  };
  const Sub subs[] = {
      {"check-bimodule", "Is the bimodule quasi-Frobenius?", 1},
      {"check-extension", "Is the ring extension quasi-Frobenius?", 1},
      {"check-coring", "Is the coring quasi-Frobenius?", 1},
      {"check-graded", "Is restriction to the identity component a quasi-Frobenius functor?", 1},
      {"decompose", "Krull-Schmidt decomposition of a module or bimodule", 1},
      {"similar", "Are two modules or bimodules similar?", 2},
      {"divides", "Is the first a summand of a power of the second?", 2},
      {"dual-sequence", "Iterated left and right duals of a bimodule", 1},
      {"sweedler", "Sweedler coring of a ring extension", 1},
      {"verify", "Re-check every certificate in a report", 1},
  };
  std::vector<std::string> files;
  std::string output_path;
  std::string export_dir;
  for (const auto& s : subs) {
    auto* sc = app.add_subcommand(s.name, s.help);
    sc->add_option("inputs", files, "Input JSON file(s)")->required()->expected(static_cast<int>(s.inputs));
    if (std::string(s.name) == "dual-sequence") sc->add_option("--depth", depth, "Duals taken on each side")->capture_default_str();
    if (std::string(s.name) == "sweedler") sc->add_option("--output", output_path, "Write the coring document here");
  }
  auto* exp = app.add_subcommand("export-fixtures", "Write the built-in corpus as fixture files");
  exp->add_option("dir", export_dir, "Target directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInput;
  }

  Context c(seed);
  if (!c.ctx) return kInconsistent;
  qfw_context_set_depth(c.ctx, depth);

  if (*exp) {
    qfw_status st = qfw_export_fixtures(c.ctx, export_dir.c_str());
    if (st != QFW_OK) {
      std::cerr << "error: " << qfw_last_error(c.ctx) << "\n";
      return exit_for_status(st);
    }
    return kYes;
  }

  if (run_battery) {
    char* out = nullptr;
    std::size_t failures = 0;
    qfw_status st = qfw_run_battery(c.ctx, fixtures_dir.empty() ? nullptr : fixtures_dir.c_str(), &out, &failures);
    if (st != QFW_OK) {
      std::cerr << "error: " << qfw_last_error(c.ctx) << "\n";
      return exit_for_status(st);
    }
    auto bundle = nlohmann::ordered_json::parse(out);
    for (auto& r : bundle["reports"])
      std::cerr << (r["pass"].get<bool>() ? "PASS " : "FAIL ") << r["name"].get<std::string>() << " (expected "
                << r["expected"].get<std::string>() << ", got " << r["got"].get<std::string>() << ")\n";
    emit(out, report_path,
         "battery: " + std::to_string(bundle["passed"].get<std::size_t>()) + "/" +
             std::to_string(bundle["total"].get<std::size_t>()) + " passed");
    qfw_string_free(out);
    return failures == 0 ? kYes : kNo;
  }

  CLI::App* chosen = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
  if (!chosen) {
    std::cerr << app.help();
    return kInput;
  }
  std::string name = chosen->get_name();

  std::vector<std::string> texts(files.size());
  for (std::size_t i = 0; i < files.size(); ++i)
    if (!read_file(files[i], texts[i])) {
      std::cerr << "error: cannot read " << files[i] << "\n";
      return kInput;
    }

  std::vector<const char*> ptrs;
  for (auto& t : texts) ptrs.push_back(t.c_str());
  char* out = nullptr;
  qfw_verdict verdict = QFW_INCONSISTENT;
  qfw_status st = qfw_run_command(c.ctx, name.c_str(), ptrs.data(), ptrs.size(), &out, &verdict);
  if (st != QFW_OK) {
    std::cerr << "error: " << qfw_last_error(c.ctx) << "\n";
    return exit_for_status(st);
  }
  std::string text = out;
  qfw_string_free(out);

  if (name == "sweedler" && !output_path.empty()) {
    auto j = nlohmann::ordered_json::parse(text);
    std::ofstream(output_path) << j["output"].dump(2) << "\n";
  }
  static const char* names[] = {"yes", "no", "vacuous", "inconsistent"};
  emit(text, report_path, std::string("verdict: ") + names[verdict]);
  return exit_for_verdict(verdict);
}
