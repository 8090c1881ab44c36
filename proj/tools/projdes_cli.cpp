// Command-line frontend. All computation goes through the C API in
// projdes/projdes.h; this file only parses arguments and moves strings.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "projdes/projdes.h"

namespace {

struct DesignHandle {
  pd_design* d = nullptr;
  ~DesignHandle() { pd_design_free(d); }
};

struct ReportHandle {
  char* s = nullptr;
  ~ReportHandle() { pd_string_free(s); }
};

int report_status(pd_status st) {
  if (st == PD_EINVAL || st == PD_EINTERNAL)
    std::cerr << "error: " << pd_last_error() << "\n";
  return static_cast<int>(st);
}

/// --tol wins; otherwise PROJDES_TOL; otherwise 0 (library defaults).
/// Returns false (usage error) when the env value is not a positive number.
bool resolve_tol(bool tol_set, double& tol) {
  if (tol_set) return true;
  const char* env = std::getenv("PROJDES_TOL");
  if (!env) {
    tol = 0.0;
    return true;
  }
  char* end = nullptr;
  double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0)) {
    std::cerr << "error: PROJDES_TOL must be a positive number, got \"" << env << "\"\n";
    return false;
  }
  tol = v;
  return true;
}

bool write_text(const std::string& path, const char* text) {
  if (path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.flush();
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction, verification and analysis of projective designs"};
  app.set_version_flag("--version", pd_version());
  app.require_subcommand(1);

  std::string input, output, format = "text", which, field;
  int t = 0, n = 1, n_max = 10, s_max = 12, t_max = 0, jobs = 1;
  double tol = 0.0;
  bool tol_set = false;

  auto add_common = [&](CLI::App* cmd, bool with_tol) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--output", output, "Write the report to a file instead of stdout");
    if (with_tol)
      cmd->add_option("--tol", tol, "Tolerance for float-backend checks")
          ->check(CLI::PositiveNumber)
          ->each([&](const std::string&) { tol_set = true; });
  };

  CLI::App* verify = app.add_subcommand("verify", "Check design strength and tightness");
  verify->add_option("file", input, "Design file")->required();
  verify->add_option("--t", t, "Strength to verify")->required()->check(CLI::PositiveNumber);
  add_common(verify, true);

  CLI::App* construct = app.add_subcommand("construct", "Emit a built-in design");
  construct->add_option("which", which, "cp1-5design or rp1-polygon")
      ->required()
      ->check(CLI::IsMember({"cp1-5design", "rp1-polygon"}));
  construct->add_option("--t", t, "Polygon strength (rp1-polygon only)");
  add_common(construct, true);

  CLI::App* bma = app.add_subcommand("bma", "Build and verify the design's matrix algebra");
  bma->add_option("file", input, "Design file")->required();
  bma->add_option("--t", t, "Design strength")->required()->check(CLI::PositiveNumber);
  add_common(bma, true);

  CLI::App* census = app.add_subcommand("census", "Rank-comparison table over all fields");
  census->add_option("--n-max", n_max, "Largest projective dimension")->check(CLI::PositiveNumber);
  census->add_option("--s-max", s_max, "Largest s (strength t = 2s - 1)")->check(CLI::PositiveNumber);
  census->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_common(census, false);

  CLI::App* rationality = app.add_subcommand("rationality", "Angle-set rationality in the real projective line");
  rationality->add_option("--t-max", t_max, "Largest strength")->required()->check(CLI::PositiveNumber);
  add_common(rationality, false);

  CLI::App* bound = app.add_subcommand("bound", "Cardinality bound and tight angle roots");
  bound->add_option("--field", field, "R, C or H")
      ->required()
      ->check(CLI::IsMember({"R", "C", "H"}));
  bound->add_option("--n", n, "Projective dimension")->required()->check(CLI::PositiveNumber);
  bound->add_option("--t", t, "Strength")->required()->check(CLI::PositiveNumber);
  add_common(bound, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(PD_EINVAL);
  }

  if (!resolve_tol(tol_set, tol)) return static_cast<int>(PD_EINVAL);

  if (app.got_subcommand(verify)) {
    DesignHandle d;
    if (pd_status st = pd_design_load(input.c_str(), &d.d); st != PD_OK) return report_status(st);
    ReportHandle report;
    pd_status st = pd_verify(d.d, t, tol, format.c_str(), nullptr, &report.s);
    if (st == PD_OK || st == PD_FAIL)
      if (!write_text(output, report.s)) return static_cast<int>(PD_EINVAL);
    return report_status(st);
  }

  if (app.got_subcommand(construct)) {
    DesignHandle d;
    if (pd_status st = pd_design_construct(which.c_str(), t, &d.d); st != PD_OK)
      return report_status(st);
    ReportHandle info;
    if (pd_status st = pd_design_info(d.d, tol, format.c_str(), &info.s); st != PD_OK)
      return report_status(st);
    if (!output.empty()) {
      if (pd_status st = pd_design_save(d.d, output.c_str()); st != PD_OK)
        return report_status(st);
      std::cout << info.s;
    } else {
      ReportHandle text;
      if (pd_status st = pd_design_to_json(d.d, &text.s); st != PD_OK) return report_status(st);
      std::cout << text.s;
      std::cerr << info.s;
    }
    return 0;
  }

  if (app.got_subcommand(bma)) {
    DesignHandle d;
    if (pd_status st = pd_design_load(input.c_str(), &d.d); st != PD_OK) return report_status(st);
    ReportHandle report;
    pd_status st = pd_bma(d.d, t, tol, format.c_str(), nullptr, &report.s);
    if (st == PD_OK || st == PD_FAIL)
      if (!write_text(output, report.s)) return static_cast<int>(PD_EINVAL);
    return report_status(st);
  }

  if (app.got_subcommand(census)) {
    ReportHandle report;
    if (pd_status st = pd_census(nullptr, n_max, s_max, jobs, format.c_str(), &report.s);
        st != PD_OK)
      return report_status(st);
    return write_text(output, report.s) ? 0 : static_cast<int>(PD_EINVAL);
  }

  if (app.got_subcommand(rationality)) {
    ReportHandle report;
    if (pd_status st = pd_rationality(t_max, format.c_str(), &report.s); st != PD_OK)
      return report_status(st);
    return write_text(output, report.s) ? 0 : static_cast<int>(PD_EINVAL);
  }

  if (app.got_subcommand(bound)) {
    ReportHandle report;
    if (pd_status st = pd_bound(field.c_str(), n, t, format.c_str(), &report.s); st != PD_OK)
      return report_status(st);
    return write_text(output, report.s) ? 0 : static_cast<int>(PD_EINVAL);
  }

  return static_cast<int>(PD_EINVAL);
}
