#ifndef LAYERED_REPORT_JSON_HPP
#define LAYERED_REPORT_JSON_HPP

#include <string>

#include <json.hpp>

#include "layered/classify.hpp"
#include "layered/scan.hpp"
#include "layered/verify.hpp"

namespace layered {

enum class OutputFormat { lines, csv, json };
std::optional<OutputFormat> parse_format(std::string_view name);

void to_json(nlohmann::json& j, const PartitionWitness& w);
void from_json(const nlohmann::json& j, PartitionWitness& w);
void to_json(nlohmann::json& j, const ClassificationReport& r);
void from_json(const nlohmann::json& j, ClassificationReport& r);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

// Renderers shared by the CLI and the test suites; output is byte-deterministic.
std::string render_classification(const ClassificationReport& r, OutputFormat f,
                                  bool with_witnesses);
std::string render_scan(const std::vector<ScanRecord>& records,
                        const std::vector<NumberClass>& requested, OutputFormat f);
std::string render_witness(const PartitionWitness& w, OutputFormat f);
std::string render_verification(const VerificationReport& r, OutputFormat f);

} // namespace layered

#endif
