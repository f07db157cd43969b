#ifndef KCSC_REPORT_TEXT_HPP
#define KCSC_REPORT_TEXT_HPP

#include <string>
#include <vector>

#include "kcsc/report/report.hpp"

namespace kcsc::report {

/// Column-aligned plain-text table; every row must have as many cells as the header.
std::string format_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

std::string format_vector(const std::vector<Rational>& v);

/// Cone table (cone, order, isolated, SU, vertex), balancing, tuning and verdict.
std::string format_report(const FeasibilityReport& r);

/// One line per file: file, verdict or error.
std::string format_batch(const std::vector<BatchEntry>& entries);

}  // namespace kcsc::report

#endif  // KCSC_REPORT_TEXT_HPP
