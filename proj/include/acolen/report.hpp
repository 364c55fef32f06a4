#ifndef ACOLEN_REPORT_HPP
#define ACOLEN_REPORT_HPP

#include "acolen/asymptotics.hpp"
#include "acolen/families.hpp"

#include <string>
#include <vector>

namespace acolen {

enum class OutputFormat { json, csv, text };

OutputFormat parse_format(const std::string& name);

/// CSV with header `index,colength,a_n_num,a_n_den`.
std::string emit_sequence_csv(const std::vector<SequencePoint>& seq);
std::string emit_sequence_json(const std::vector<SequencePoint>& seq);
std::string emit_sequence_text(const std::vector<SequencePoint>& seq);
std::string emit_sequence(const std::vector<SequencePoint>& seq, OutputFormat fmt);

/// Verification report as JSON {claim, witness_range, lhs, rhs, tolerance,
/// pass} with rationals rendered as num/den plus a 12-digit decimal.
std::string emit_report_json(const VerifyReport& rep);
std::string emit_report_text(const VerifyReport& rep);
std::string emit_report(const VerifyReport& rep, OutputFormat fmt);

std::string emit_limit_json(const LimitEstimate& est);
std::string emit_limit_text(const LimitEstimate& est);

std::string emit_classification_json(const ClassificationReport& rep);
std::string emit_classification_text(const ClassificationReport& rep);

}  // namespace acolen

#endif
