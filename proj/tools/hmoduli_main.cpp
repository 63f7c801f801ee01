// Command-line front door: moduli reports, sweeps, published-value checks
// and finite-loop surveys. Exit codes: 0 success, 1 usage or input error,
// 2 when a comparison against the published values disagrees.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hmoduli/diagonal_file.hpp"
#include "hmoduli/report_io.hpp"

namespace {

using namespace hmoduli;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagreement = 2;

/// Resolves --output against the HMODULI_OUT_DIR environment variable
/// (absolute paths win) and writes, or prints to stdout when no path given.
void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::path target(output_path);
  if (const char* dir = std::getenv("HMODULI_OUT_DIR");
      dir && *dir && target.is_relative())
    target = std::filesystem::path(dir) / target;
  std::ofstream out(target);
  if (!out) throw std::runtime_error("cannot write " + target.string());
  out << text;
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

ExtensionProblem build_problem(const std::vector<unsigned>& deg_xs,
                               unsigned deg_y,
                               const std::string& diagonal_path,
                               std::optional<unsigned> truncation) {
  if (diagonal_path.empty()) {
    if (deg_xs.size() == 1)
      return ExtensionProblem::eilenberg_maclane(deg_xs[0], deg_y, truncation);
    return ExtensionProblem::eilenberg_maclane_multi(deg_xs, deg_y, truncation);
  }
  unsigned min_trunc = 0;
  for (unsigned d : deg_xs) min_trunc = std::max(min_trunc, d);
  if (truncation) min_trunc = std::max(min_trunc, *truncation);
  auto [fibre, nu] = parse_diagonal_file(diagonal_path, min_trunc);
  std::vector<GeneratorSpec> x1;
  for (std::size_t i = 0; i < deg_xs.size(); ++i)
    x1.push_back({deg_xs.size() == 1 ? std::string("x")
                                     : "x" + std::to_string(i + 1),
                  deg_xs[i]});
  return ExtensionProblem::make(std::move(x1), fibre, nu);
}

int run_report(const std::vector<unsigned>& deg_xs, unsigned deg_y,
               const std::string& diagonal_path,
               std::optional<unsigned> truncation, const std::string& format,
               const std::string& output_path) {
  ExtensionProblem p = build_problem(deg_xs, deg_y, diagonal_path, truncation);
  ModuliReport report = moduli_report(p);
  if (format == "table")
    emit(to_table(report), output_path);
  else
    emit(render(to_json(report, p)), output_path);
  return kExitOk;
}

int run_sweep(unsigned deg_y, unsigned k_max, const std::string& format,
              const std::string& output_path) {
  Json doc;
  doc["schema"] = "hmoduli/1";
  doc["kind"] = "sweep";
  doc["deg_y"] = deg_y;
  doc["k_max"] = k_max;
  doc["reports"] = Json::array();
  std::string tables;
  for (unsigned k = 2; k <= k_max; ++k) {
    ExtensionProblem p = ExtensionProblem::eilenberg_maclane(k * deg_y, deg_y);
    ModuliReport report = moduli_report(p);
    if (format == "table")
      tables += to_table(report) + "\n";
    else
      doc["reports"].push_back(to_json(report, p));
  }
  emit(format == "table" ? tables : render(doc), output_path);
  return kExitOk;
}

int run_closed_form(unsigned deg_y, unsigned k_max,
                    const std::string& output_path) {
  Json doc;
  doc["schema"] = "hmoduli/1";
  doc["kind"] = "closed-form-sweep";
  doc["checks"] = Json::array();
  bool all = true;
  for (unsigned k = 2; k <= k_max; ++k) {
    ClosedFormCheck check = closed_form_check(k, deg_y);
    if (!check.all_match) {
      all = false;
      for (const auto& c : check.comparisons)
        if (!c.match)
          std::cerr << "disagreement at k=" << k << " space=" << c.space
                    << "\n  computed:  " << to_json(c.computed).dump()
                    << "\n  reference: " << to_json(c.reference).dump()
                    << "\n";
    }
    doc["checks"].push_back(to_json(check));
  }
  doc["all_match"] = all;
  emit(render(doc), output_path);
  return all ? kExitOk : kExitDisagreement;
}

int run_assertion(unsigned k, unsigned deg_y, const std::string& output_path) {
  AssertionRecord rec = assertion_classification(k * deg_y, deg_y);
  emit(render(to_json(rec)), output_path);
  if (!rec.agrees)
    for (const auto& rel : rec.relations)
      if (!rel.holds)
        std::cerr << "disagreement: " << rel.description
                  << "\n  lhs: " << to_json(rel.lhs).dump()
                  << "\n  rhs: " << to_json(rel.rhs).dump() << "\n";
  return rec.agrees ? kExitOk : kExitDisagreement;
}

int run_loops_survey(unsigned order, const std::string& output_path) {
  emit(render(to_json(implication_survey(order))), output_path);
  return kExitOk;
}

int run_loops_check(const std::string& path, const std::string& output_path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table file: " + path);
  CayleyTable t = read_table(in);
  Json doc;
  doc["schema"] = "hmoduli/1";
  doc["kind"] = "loop-check";
  doc["order"] = t.order;
  doc["valid"] = validate(t);
  if (doc["valid"].get<bool>()) {
    Json props;
    for (PropertyTag tag : kAllTags)
      props[std::string(tag_name(tag))] = has_property(t, tag);
    doc["properties"] = props;
  }
  emit(render(doc), output_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact moduli computations for H-space multiplications"};
  app.require_subcommand(1);

  std::vector<unsigned> deg_xs;
  unsigned deg_y = 2, k_max = 12, k = 4, order = 5;
  std::string diagonal_path, format = "json", output_path, table_path;
  std::optional<unsigned> truncation;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", output_path,
                    "write the document here instead of stdout (relative "
                    "paths resolve against $HMODULI_OUT_DIR)");
  };

  CLI::App* report = app.add_subcommand("report", "full per-degree report");
  report->add_option("--deg-x", deg_xs, "base generator degree (repeatable)")
      ->required();
  report->add_option("--deg-y", deg_y, "fibre generator degree")->required();
  report->add_option("--diagonal-file", diagonal_path,
                     "fibre description file overriding the one-generator "
                     "binomial fibre");
  report->add_option("--truncation", truncation,
                     "truncation degree (default: highest --deg-x)");
  report->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  add_output(report);

  CLI::App* sweep =
      app.add_subcommand("sweep", "reports for every power k=2..k-max");
  sweep->add_option("--deg-y", deg_y, "fibre generator degree")->required();
  sweep->add_option("--k-max", k_max, "largest power")->check(CLI::Range(2u, 64u));
  sweep->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  add_output(sweep);

  CLI::App* cfc = app.add_subcommand(
      "closed-form-check",
      "compare residual kernels with the published closed forms");
  cfc->add_option("--deg-y", deg_y, "fibre generator degree");
  cfc->add_option("--k-max", k_max, "largest power")->check(CLI::Range(2u, 64u));
  add_output(cfc);

  CLI::App* assertion = app.add_subcommand(
      "assertion", "check the strict-inclusion taxonomy for one power");
  assertion->add_option("--k", k, "power of the fibre generator")->required();
  assertion->add_option("--deg-y", deg_y, "fibre generator degree");
  add_output(assertion);

  CLI::App* survey =
      app.add_subcommand("loops-survey", "exhaustive finite-loop survey");
  survey->add_option("--order", order, "loop order")->check(CLI::Range(1u, 6u));
  add_output(survey);

  CLI::App* check =
      app.add_subcommand("loops-check", "validate one multiplication table");
  check->add_option("--file", table_path, "table file")->required();
  add_output(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (report->parsed())
      return run_report(deg_xs, deg_y, diagonal_path, truncation, format,
                        output_path);
    if (sweep->parsed()) return run_sweep(deg_y, k_max, format, output_path);
    if (cfc->parsed()) return run_closed_form(deg_y, k_max, output_path);
    if (assertion->parsed()) return run_assertion(k, deg_y, output_path);
    if (survey->parsed()) return run_loops_survey(order, output_path);
    if (check->parsed()) return run_loops_check(table_path, output_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
