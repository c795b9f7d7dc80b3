#pragma once

#include "hessrec/experiments/study.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace hessrec {

enum class ReportFormat { csv, markdown };

std::optional<ReportFormat> parse_format(std::string_view name);

/// csv: metadata as "# key: value" lines, then
///   dof,h,<m>_err,<m>_order,<m>_h_order,...
/// with errors as %.2e, h as %.6e and orders as %.2f (empty on the first row).
/// markdown: metadata as HTML comments, then a table with a Dof column and a
/// De/order column pair per method.
std::string emit_report(const StudyReport& report, ReportFormat format);

/// Reads back emit_report(..., csv). Throws ParseError on malformed input.
StudyReport parse_csv_report(std::string_view text);

} // namespace hessrec
