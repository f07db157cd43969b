#include "kcsc/report/text.hpp"

#include <algorithm>
#include <sstream>

namespace kcsc::report {

std::string format_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    if (row.size() != header.size()) throw InputError("table row has the wrong number of cells");
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      text += cells[c];
      if (c + 1 < cells.size()) text += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out << text << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : rows) line(row);
  return out.str();
}

std::string format_vector(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + kcsc::to_string(v[i]);
  return out + ")";
}

std::string format_report(const FeasibilityReport& r) {
  std::ostringstream out;
  out << "fan " << r.name << "  (m = " << r.dim << ", s = " << kcsc::to_string(r.s) << ")\n\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : r.cones)
    rows.push_back({c.label, kcsc::to_string(c.order), c.smooth ? "-" : (c.isolated ? "yes" : "no"),
                    c.smooth ? "-" : (c.su ? "SU" : "U"), format_vector(c.vertex)});
  out << format_table({"cone", "|G|", "isolated", "group", "vertex of P_" + std::to_string(r.polytope.k) + "K"}, rows);

  out << "\npolytope: " << r.polytope.vertex_count << " vertices, volume " << kcsc::to_string(r.polytope.volume)
      << ", barycenter " << format_vector(r.polytope.barycenter) << '\n';

  if (r.balancing) {
    const auto& b = *r.balancing;
    out << "balancing of the SU points: rank " << b.rank << " of " << b.d << ", "
        << (b.balanced ? "positive witness found" : "no positive full-rank witness") << '\n';
    if (b.b) {
      std::vector<std::vector<std::string>> w;
      for (std::size_t j = 0; j < b.points.size(); ++j)
        w.push_back({b.points[j], kcsc::to_string((*b.b)[j]), kcsc::to_string((*b.c)[j])});
      out << format_table({"point", "b", "c"}, w);
    }
  }

  if (!r.tuning.empty()) {
    std::vector<std::vector<std::string>> t;
    for (const auto& x : r.tuning)
      t.push_back({x.point, x.B_radicand.to_string(), x.C ? x.C->to_string() : "-",
                   x.budget ? (x.budget->verdict ? "holds" : "fails") : "-",
                   x.b_tilde_error_exponent ? kcsc::to_string(*x.b_tilde_error_exponent) : "-"});
    out << "\ntuning (eps = " << kcsc::to_string(r.tuning.front().epsilon)
        << ", delta = " << kcsc::to_string(r.tuning.front().delta) << ")\n";
    out << format_table({"point", "B^2m", "C", "budget", "b~ error exponent"}, t);
  }

  out << "\nverdict: " << to_string(r.verdict) << '\n';
  for (const auto& n : r.notes) out << "  note: " << n << '\n';
  return out.str();
}

std::string format_batch(const std::vector<BatchEntry>& entries) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : entries)
    rows.push_back({e.file, e.report ? to_string(e.report->verdict) : "ERROR", e.error});
  return format_table({"file", "verdict", "error"}, rows);
}

}  // namespace kcsc::report
