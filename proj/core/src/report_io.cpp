#include "hmoduli/report_io.hpp"

#include <iomanip>
#include <sstream>

namespace hmoduli {

namespace {

Json envelope(const char* kind) {
  Json j;
  j["schema"] = "hmoduli/1";
  j["kind"] = kind;
  return j;
}

Json rows_of(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json to_json(const Subspace& s) {
  Json j;
  j["ambient_dim"] = s.ambient_dim();
  j["dim"] = s.dim();
  j["basis_rows"] = rows_of(s.basis());
  return j;
}

Json to_json(const ModuliReport& report, const ExtensionProblem& problem) {
  Json j = envelope("moduli-report");
  Json x1 = Json::array();
  for (const auto& g : problem.x1)
    x1.push_back({{"name", g.name}, {"degree", g.degree}});
  Json x2gens = Json::array();
  for (const auto& g : problem.x2.generators())
    x2gens.push_back({{"name", g.name}, {"degree", g.degree}});
  Json mu2;
  for (std::size_t i = 0; i < problem.x2.generators().size(); ++i)
    mu2[problem.x2.generators()[i].name] =
        format_element(problem.mu2.morphism().image(i));
  j["problem"] = {{"x1", std::move(x1)},
                  {"x2", {{"generators", std::move(x2gens)},
                          {"truncation", problem.x2.truncation()}}},
                  {"mu2", std::move(mu2)}};

  Json per_gen = Json::array();
  for (const auto& gr : report.per_generator) {
    Json g;
    g["generator"] = gr.generator.name;
    g["degree"] = gr.generator.degree;
    g["ambient_basis"] = gr.ambient_basis;
    g["dim_V"] = gr.dim_v;
    Json spaces;
    for (const auto& s : gr.spaces) spaces[s.name] = to_json(s.space);
    g["spaces"] = std::move(spaces);
    Json quotients;
    for (const auto& [name, d] : gr.quotients) quotients[name] = d;
    g["quotients"] = std::move(quotients);
    Json lattice = Json::array();
    for (const auto& edge : gr.lattice)
      lattice.push_back({{"outer", edge.outer},
                         {"inner", edge.inner},
                         {"contains", edge.holds}});
    g["lattice"] = std::move(lattice);
    g["case"] = gr.case_label;
    per_gen.push_back(std::move(g));
  }
  j["per_generator"] = std::move(per_gen);
  Json totals;
  for (const auto& [name, d] : report.totals) totals[name] = d;
  j["totals"] = std::move(totals);
  return j;
}

Json to_json(const ClosedFormCheck& check) {
  Json j = envelope("closed-form-check");
  j["k"] = check.k;
  j["deg_y"] = check.deg_y;
  Json comparisons = Json::array();
  for (const auto& cmp : check.comparisons) {
    comparisons.push_back({{"space", cmp.space},
                           {"oracle_only", cmp.oracle_only},
                           {"match", cmp.match},
                           {"computed", to_json(cmp.computed)},
                           {"reference", to_json(cmp.reference)}});
  }
  j["comparisons"] = std::move(comparisons);
  j["all_match"] = check.all_match;
  return j;
}

Json to_json(const AssertionRecord& record) {
  Json j = envelope("assertion-check");
  j["deg_x"] = record.deg_x;
  j["deg_y"] = record.deg_y;
  j["k"] = record.k;
  j["expected_case"] = record.expected_case;
  Json relations = Json::array();
  for (const auto& r : record.relations)
    relations.push_back({{"relation", r.description},
                         {"holds", r.holds},
                         {"lhs", to_json(r.lhs)},
                         {"rhs", to_json(r.rhs)}});
  j["relations"] = std::move(relations);
  j["agrees"] = record.agrees;
  return j;
}

namespace {

Json table_json(const CayleyTable& t) {
  Json rows = Json::array();
  for (unsigned r = 0; r < t.order; ++r) {
    Json row = Json::array();
    for (unsigned c = 0; c < t.order; ++c) row.push_back(t.at(r, c));
    rows.push_back(std::move(row));
  }
  return {{"order", t.order}, {"rows", std::move(rows)}};
}

}  // namespace

Json to_json(const ImplicationSurvey& survey) {
  Json j = envelope("loops-survey");
  j["order"] = survey.order;
  j["total"] = survey.total;
  Json counts;
  for (std::size_t i = 0; i < kAllTags.size(); ++i)
    counts[std::string(tag_name(kAllTags[i]))] = survey.property_counts[i];
  j["property_counts"] = std::move(counts);
  j["counterexamples"] = {
      {"moufang_not_inversive", survey.moufang_not_inversive},
      {"moufang_not_flexible", survey.moufang_not_flexible},
      {"flexible_not_power_associative",
       survey.flexible_not_power_associative}};
  j["independence"] = {
      {"power_associative_not_inversive",
       survey.power_associative_not_inversive},
      {"inversive_not_power_associative",
       survey.inversive_not_power_associative}};
  if (survey.pa_not_inv_witness)
    j["pa_not_inv_witness"] = table_json(*survey.pa_not_inv_witness);
  if (survey.inv_not_pa_witness)
    j["inv_not_pa_witness"] = table_json(*survey.inv_not_pa_witness);
  return j;
}

std::string to_table(const ModuliReport& report) {
  std::ostringstream os;
  os << "| generator | degree | case | dim V";
  for (const char* name : {"inv", "pa", "mo", "sa", "imhd"})
    os << " | " << name;
  os << " | S_inv | S_pa | S_mo | S_sa |\n";
  os << "|---|---|---|---";
  for (int i = 0; i < 9; ++i) os << "|---";
  os << "|\n";
  for (const auto& gr : report.per_generator) {
    os << "| " << gr.generator.name << " | " << gr.generator.degree << " | "
       << gr.case_label << " | " << gr.dim_v;
    for (const auto& s : gr.spaces)
      if (s.name != "V") os << " | " << s.space.dim();
    for (const auto& [name, d] : gr.quotients)
      if (name != "V/imhd") os << " | " << d;
    os << " |\n";
  }
  return os.str();
}

}  // namespace hmoduli
