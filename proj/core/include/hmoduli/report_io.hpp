#ifndef HMODULI_REPORT_IO_HPP
#define HMODULI_REPORT_IO_HPP

#include <string>

#include <json.hpp>

#include "hmoduli/latin.hpp"
#include "hmoduli/moduli.hpp"

namespace hmoduli {

/// All documents share the envelope {"schema": "hmoduli/1", ...} with fixed
/// key order and rationals rendered as "p/q" strings, so identical inputs
/// yield byte-identical output.
using Json = nlohmann::ordered_json;

Json to_json(const Subspace& s);
Json to_json(const ModuliReport& report, const ExtensionProblem& problem);
Json to_json(const ClosedFormCheck& check);
Json to_json(const AssertionRecord& record);
Json to_json(const ImplicationSurvey& survey);

/// Aligned markdown rendering of a moduli report.
std::string to_table(const ModuliReport& report);

}  // namespace hmoduli

#endif
