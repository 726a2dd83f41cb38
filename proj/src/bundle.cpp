#include "fqtree/bundle.hpp"

#include <array>
#include <utility>

namespace fqtree {
namespace {

constexpr std::array<std::pair<Branch, const char*>, 16> kLabels{{
    {Branch::BaseN2, "BaseN2"},
    {Branch::BaseN3, "BaseN3"},
    {Branch::Case1, "Case1"},
    {Branch::Case2_1, "Case2.1"},
    {Branch::Case2_2_1, "Case2.2.1"},
    {Branch::Case2_2_2, "Case2.2.2"},
    {Branch::Case2_3_1_1, "Case2.3.1.1"},
    {Branch::Case2_3_1_2, "Case2.3.1.2"},
    {Branch::Case2_3_2_1, "Case2.3.2.1"},
    {Branch::Case2_3_2_2, "Case2.3.2.2"},
    {Branch::Case2_3_2_3, "Case2.3.2.3"},
    {Branch::Case2_3_2_4, "Case2.3.2.4"},
    {Branch::Case2_3_3_1, "Case2.3.3.1"},
    {Branch::Case2_3_3_2, "Case2.3.3.2"},
    {Branch::Resplit, "Resplit"},
    {Branch::Fallback, "Fallback"},
}};

}  // namespace

std::string to_string(Branch branch) {
  for (const auto& [b, label] : kLabels) {
    if (b == branch) return label;
  }
  return "Unknown";
}

std::string to_string(const TraceStep& step) {
  if (step.branch == Branch::Resplit) {
    return "Resplit(" + std::to_string(step.dim) + ")";
  }
  return to_string(step.branch);
}

TraceStep parse_trace_step(const std::string& label) {
  if (label.starts_with("Resplit(") && label.ends_with(")") &&
      label.size() > 9) {
    const std::string digits = label.substr(8, label.size() - 9);
    try {
      std::size_t used = 0;
      const int d = std::stoi(digits, &used);
      if (used == digits.size() && d >= 1) return {Branch::Resplit, d};
    } catch (const std::exception&) {
    }
  }
  for (const auto& [b, text] : kLabels) {
    if (b != Branch::Resplit && label == text) return {b, 0};
  }
  throw Error(ErrorKind::InvalidDocument, "unknown trace label '" + label + "'");
}

std::vector<std::string> CaseTrace::labels() const {
  std::vector<std::string> out;
  out.reserve(steps.size());
  for (const auto& step : steps) out.push_back(to_string(step));
  return out;
}

}  // namespace fqtree
