#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "verona/cli/commands.hpp"

namespace fs = std::filesystem;
using namespace verona;
using namespace verona::cli;

namespace {

int run_command(const std::string& path, bool text, const std::string& out_path) {
  std::string doc;
  try {
    doc = read_file(path);
  } catch (const Error& err) {
    std::cerr << "verona: " << err.what() << "\n";
    return 2;
  }
  const Report report = run_document(doc);
  const std::string rendered = text ? render_text(report) : render_json(report);
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "verona: cannot write " << out_path << "\n";
      return 2;
    }
    out << rendered;
  }
  if (report.error) std::cerr << "verona: " << report.error->kind << ": " << report.error->message << "\n";
  return report.exit_code();
}

std::optional<std::string> expected_error(const std::string& doc) {
  try {
    const Json j = parse_document(doc);
    if (j.is_object() && j.contains("expect_error") && j.at("expect_error").is_string())
      return j.at("expect_error").get<std::string>();
  } catch (const Error&) {
  }
  return std::nullopt;
}

int selftest(const fs::path& corpus, bool update) {
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(corpus, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  if (ec || files.empty()) {
    std::cerr << "verona: no scenarios found in " << corpus << "\n";
    return 2;
  }
  std::sort(files.begin(), files.end());
  const fs::path golden_dir = corpus / "golden";
  int failures = 0;
  for (const auto& file : files) {
    const std::string doc = read_file(file.string());
    const Report first = run_document(doc), second = run_document(doc);
    const std::string bytes = render_json(first);
    std::string problem;
    if (bytes != render_json(second)) problem = "non-deterministic output";
    if (problem.empty() && report_from_json(Json::parse(bytes)) != first) problem = "report does not round-trip";
    const auto want_error = expected_error(doc);
    if (problem.empty()) {
      if (want_error) {
        if (!first.error || first.error->kind != *want_error) problem = "expected error " + *want_error;
      } else if (first.status != Status::Ok) {
        problem = "status " + status_name(first.status) +
                  (first.error ? " (" + first.error->kind + ": " + first.error->message + ")" : "");
      }
    }
    const fs::path golden = golden_dir / file.filename();
    if (problem.empty()) {
      if (update) {
        fs::create_directories(golden_dir);
        std::ofstream(golden, std::ios::binary) << bytes;
      } else if (!fs::exists(golden)) {
        problem = "missing golden report";
      } else if (read_file(golden.string()) != bytes) {
        problem = "differs from golden report";
      }
    }
    std::cout << (problem.empty() ? "PASS " : "FAIL ") << file.filename().string();
    if (!problem.empty()) std::cout << ": " << problem;
    std::cout << "\n";
    if (!problem.empty()) ++failures;
  }
  std::cout << files.size() - failures << "/" << files.size() << " scenarios passed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Grassmannian interpolation and Veronese web integrability checks"};
  app.require_subcommand(1);

  std::string scenario, out_path;
  bool text = false;
  auto* run = app.add_subcommand("run", "Run one scenario and print its report");
  run->add_option("scenario", scenario, "Scenario JSON file")->required();
  run->add_flag("--text", text, "Human-readable summary instead of JSON");
  run->add_option("--out", out_path, "Write the report to a file");

  std::string corpus = VERONA_DEFAULT_CORPUS;
  bool update = false;
  auto* self = app.add_subcommand("selftest", "Run the bundled scenario corpus against its golden reports");
  self->add_option("--corpus", corpus, "Scenario directory");
  self->add_flag("--update-golden", update, "Rewrite the golden reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }
  if (*run) return run_command(scenario, text, out_path);
  return selftest(corpus, update);
}
