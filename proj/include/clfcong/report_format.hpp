#pragma once

#include <string>
#include <vector>

#include "clfcong/congruences.hpp"
#include "clfcong/identities.hpp"

namespace clfcong {

enum class ReportFormat { Text, Json, Csv };

// Throws InvalidArgument for anything but "text", "json" or "csv".
ReportFormat parse_report_format(std::string_view name);

// Row fields, in order: check, p, exponent, lhs, rhs, valuation, pass, error.
// Residues are decimal strings; valuation equal to exponent + 3 means "at
// least". Elapsed times are never written, so output is reproducible.
std::string format_reports(const std::vector<VerificationReport>& reports, ReportFormat format);

std::string format_identities(const std::vector<IdentitySummary>& summaries, ReportFormat format);

} // namespace clfcong
