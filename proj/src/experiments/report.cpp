#include "hessrec/experiments/report.hpp"

#include "hessrec/error.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace hessrec {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string order_text(const std::optional<double>& o, const char* missing) {
  return o ? fmt("%.2f", *o) : std::string(missing);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos)
      return out;
    start = pos + 1;
  }
}

double parse_real(std::string_view s, int line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(line, "expected a number, got '" + std::string(s) + "'");
  return v;
}

std::optional<double> parse_optional(std::string_view s, int line) {
  if (s.empty())
    return std::nullopt;
  return parse_real(s, line);
}

} // namespace

std::optional<ReportFormat> parse_format(std::string_view name) {
  if (name == "csv")
    return ReportFormat::csv;
  if (name == "markdown" || name == "md")
    return ReportFormat::markdown;
  return std::nullopt;
}

std::string emit_report(const StudyReport& report, ReportFormat format) {
  std::string out;
  if (format == ReportFormat::csv) {
    for (const std::string& m : report.metadata)
      out += "# " + m + "\n";
    out += "dof,h";
    for (RecoveryMethod m : report.methods) {
      const std::string c(column_name(m));
      out += "," + c + "_err," + c + "_order," + c + "_h_order";
    }
    out += "\n";
    for (const StudyRow& r : report.rows) {
      out += std::to_string(r.dof) + "," + fmt("%.6e", r.h);
      for (std::size_t m = 0; m < report.methods.size(); ++m)
        out += "," + fmt("%.2e", r.errors[m]) + "," + order_text(r.dof_orders[m], "") + "," +
               order_text(r.h_orders[m], "");
      out += "\n";
    }
    return out;
  }

  for (const std::string& m : report.metadata)
    out += "<!-- " + m + " -->\n";
  out += "| Dof |";
  std::string rule = "|---:|";
  for (RecoveryMethod m : report.methods) {
    out += " De " + std::string(to_string(m)) + " | order |";
    rule += "---:|---:|";
  }
  out += "\n" + rule + "\n";
  for (const StudyRow& r : report.rows) {
    out += "| " + std::to_string(r.dof) + " |";
    for (std::size_t m = 0; m < report.methods.size(); ++m)
      out += " " + fmt("%.2e", r.errors[m]) + " | " + order_text(r.dof_orders[m], "-") + " |";
    out += "\n";
  }
  return out;
}

StudyReport parse_csv_report(std::string_view text) {
  StudyReport report;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty())
      continue;
    if (line.rfind("# ", 0) == 0) {
      report.metadata.push_back(line.substr(2));
      continue;
    }
    const auto cells = split(line, ',');
    if (!header_seen) {
      if (cells.size() < 2 || cells[0] != "dof" || cells[1] != "h" || (cells.size() - 2) % 3 != 0)
        throw ParseError(line_no, "malformed report header");
      for (std::size_t i = 2; i < cells.size(); i += 3) {
        const std::string_view col = cells[i];
        if (col.size() < 5 || col.substr(col.size() - 4) != "_err")
          throw ParseError(line_no, "expected an error column, got '" + std::string(col) + "'");
        const auto m = parse_method(col.substr(0, col.size() - 4));
        if (!m)
          throw ParseError(line_no, "unknown method column '" + std::string(col) + "'");
        report.methods.push_back(*m);
      }
      header_seen = true;
      continue;
    }
    if (cells.size() != 2 + 3 * report.methods.size())
      throw ParseError(line_no, "wrong number of fields");
    StudyRow row;
    std::size_t dof = 0;
    const auto [ptr, ec] = std::from_chars(cells[0].data(), cells[0].data() + cells[0].size(), dof);
    if (ec != std::errc() || ptr != cells[0].data() + cells[0].size())
      throw ParseError(line_no, "expected a dof count, got '" + std::string(cells[0]) + "'");
    row.dof = dof;
    row.h = parse_real(cells[1], line_no);
    for (std::size_t m = 0; m < report.methods.size(); ++m) {
      row.errors.push_back(parse_real(cells[2 + 3 * m], line_no));
      row.dof_orders.push_back(parse_optional(cells[3 + 3 * m], line_no));
      row.h_orders.push_back(parse_optional(cells[4 + 3 * m], line_no));
    }
    report.rows.push_back(std::move(row));
  }
  if (!header_seen)
    throw ParseError(line_no, "missing report header");
  return report;
}

} // namespace hessrec
