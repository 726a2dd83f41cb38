#pragma once

#include <string>
#include <vector>

#include "fqtree/automorphism.hpp"
#include "fqtree/topology.hpp"
#include "fqtree/tree.hpp"

namespace fqtree {

/// Branches of the constructive case analysis.
enum class Branch {
  BaseN2,
  BaseN3,
  Case1,
  Case2_1,
  Case2_2_1,
  Case2_2_2,
  Case2_3_1_1,
  Case2_3_1_2,
  Case2_3_2_1,
  Case2_3_2_2,
  Case2_3_2_3,
  Case2_3_2_4,
  Case2_3_3_1,
  Case2_3_3_2,
  Resplit,
  Fallback,
};

struct TraceStep {
  Branch branch;
  int dim = 0;  // only meaningful for Resplit

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// "Case2.3.1.1", "Resplit(4)", ...
std::string to_string(const TraceStep& step);
std::string to_string(Branch branch);
/// Inverse of to_string(Branch); throws InvalidDocument on unknown labels.
TraceStep parse_trace_step(const std::string& label);

struct CaseTrace {
  std::vector<TraceStep> steps;
  /// Map taking the input terminals to the position the first branch works in.
  Automorphism normalization;

  std::vector<std::string> labels() const;
};

struct TreeBundle {
  int n;
  TerminalTriple s;
  std::vector<Tree> trees;
  CaseTrace trace;
};

}  // namespace fqtree
