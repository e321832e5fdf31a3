#ifndef SIGMAFORGE_REPORT_HPP
#define SIGMAFORGE_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "sigmaforge/group.hpp"

namespace sigmaforge {

enum class ReportStatus {
  Ok,             // the verdict is meaningful
  NotApplicable,  // preconditions unmet (e.g. soluble-only check on A5)
  ScaleLimited,   // a required computation exceeded the order cap
  Inconsistent,   // structural verdict disagrees with its brute-force oracle
};

std::string to_string(ReportStatus s);

// Verdict tree for one property or theorem check.  Witnesses name concrete
// subgroups/elements (cycle notation, never lattice indices) so output is
// stable across runs and build orders.  Invariant: a false verdict carries
// at least one witness or a failing sub-report.
struct PropertyReport {
  std::string check;
  std::string sigma;  // canonical partition name, empty for sigma-free checks
  bool verdict = true;
  ReportStatus status = ReportStatus::Ok;
  std::string note;
  std::vector<std::string> witnesses;
  std::vector<PropertyReport> sub_reports;

  // Most severe status in the tree: Inconsistent > ScaleLimited >
  // NotApplicable > Ok.
  ReportStatus worst_status() const;
  // Some node with Ok status has a false verdict.
  bool any_failure() const;
  // The false-verdict invariant holds recursively.
  bool well_formed() const;
};

void to_json(nlohmann::json& j, const PropertyReport& r);
std::string render_text(const PropertyReport& r, int indent = 0);

// Stable subgroup descriptor: the sorted element list in cycle notation for
// small subgroups, order plus generators above kDescribeLimit elements.
constexpr long kDescribeLimit = 24;
std::string describe(const Subgroup& s);
std::string describe_element(const GroupPtr& g, std::int32_t e);

}  // namespace sigmaforge

#endif
