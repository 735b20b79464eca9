#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "padic/campaign.hpp"
#include "padic/exponent.hpp"
#include "padic/operator.hpp"
#include "padic/uncertainty.hpp"
#include "padic/vector.hpp"

namespace padic {

/// Insertion-ordered JSON keeps every emitted document's key order stable,
/// which the byte-level reproducibility guarantees rely on.
using json = nlohmann::ordered_json;

json exponent_to_json(const Exponent& e);
Exponent exponent_from_json(const json& j);

json vector_to_json(const PVector& v);
PVector vector_from_json(const json& j);

json operator_to_json(const POperator& op);
/// `fallback_p` supplies the prime when the document omits "p" (operators
/// nested in an instance file).
POperator operator_from_json(const json& j, std::optional<Prime> fallback_p = std::nullopt);

json verdict_to_json(const Verdict& v);

json instance_to_json(const Instance& inst);

/// The part of an instance file the evaluator needs; campaign failure
/// captures are a superset of this shape, so they re-load through the same
/// parser.
struct EvalInstance {
    Prime p;
    PVector x;
    POperator a;
    POperator b;
    std::vector<PVector> witnesses;
};

EvalInstance eval_instance_from_json(const json& j);

json config_to_json(const CampaignConfig& config);
CampaignConfig config_from_json(const json& j);

json report_to_json(const CampaignReport& report);

enum class ReportFormat { json, csv, text };
ReportFormat report_format_from_string(const std::string& name);

std::string emit_report(const CampaignReport& report, ReportFormat format);

} // namespace padic
