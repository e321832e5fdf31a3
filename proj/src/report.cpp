#include "sigmaforge/report.hpp"

#include <algorithm>
#include <sstream>

namespace sigmaforge {

std::string to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::Ok: return "ok";
    case ReportStatus::NotApplicable: return "not-applicable";
    case ReportStatus::ScaleLimited: return "scale-limited";
    case ReportStatus::Inconsistent: return "inconsistent";
  }
  return "?";
}

ReportStatus PropertyReport::worst_status() const {
  ReportStatus worst = status;
  for (const PropertyReport& sub : sub_reports)
    worst = std::max(worst, sub.worst_status());
  return worst;
}

bool PropertyReport::any_failure() const {
  if (status == ReportStatus::Ok && !verdict) return true;
  for (const PropertyReport& sub : sub_reports)
    if (sub.any_failure()) return true;
  return false;
}

bool PropertyReport::well_formed() const {
  for (const PropertyReport& sub : sub_reports)
    if (!sub.well_formed()) return false;
  if (verdict || status != ReportStatus::Ok) return true;
  if (!witnesses.empty()) return true;
  for (const PropertyReport& sub : sub_reports)
    if (!sub.verdict || sub.status != ReportStatus::Ok) return true;
  return false;
}

void to_json(nlohmann::json& j, const PropertyReport& r) {
  j = nlohmann::json{{"check", r.check},
                     {"sigma", r.sigma},
                     {"verdict", r.verdict},
                     {"status", to_string(r.status)},
                     {"note", r.note},
                     {"witnesses", r.witnesses},
                     {"sub_reports", r.sub_reports}};
}

std::string render_text(const PropertyReport& r, int indent) {
  std::string pad(static_cast<size_t>(indent) * 2, ' ');
  std::ostringstream os;
  const char* tag = r.verdict ? "[PASS]" : "[FAIL]";
  if (r.status == ReportStatus::NotApplicable) tag = "[N/A ]";
  if (r.status == ReportStatus::ScaleLimited) tag = "[SCALE]";
  if (r.status == ReportStatus::Inconsistent) tag = "[INCONSISTENT]";
  os << pad << tag << ' ' << r.check;
  if (!r.sigma.empty()) os << " (sigma=" << r.sigma << ')';
  if (!r.note.empty()) os << ": " << r.note;
  os << '\n';
  for (const std::string& w : r.witnesses)
    os << pad << "  witness: " << w << '\n';
  for (const PropertyReport& sub : r.sub_reports)
    os << render_text(sub, indent + 1);
  return os.str();
}

std::string describe(const Subgroup& s) {
  std::ostringstream os;
  if (s.order() <= kDescribeLimit) {
    os << '{';
    bool first = true;
    for (std::int32_t e : s.indices()) {
      if (!first) os << ", ";
      os << s.ambient()->elem(e).cycle_string();
      first = false;
    }
    os << '}';
    return os.str();
  }
  os << "order " << s.order() << " subgroup <";
  bool first = true;
  for (std::int32_t e : s.small_generators()) {
    if (!first) os << ", ";
    os << s.ambient()->elem(e).cycle_string();
    first = false;
  }
  os << '>';
  return os.str();
}

std::string describe_element(const GroupPtr& g, std::int32_t e) {
  return g->elem(e).cycle_string();
}

}  // namespace sigmaforge
