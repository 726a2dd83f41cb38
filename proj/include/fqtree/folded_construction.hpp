#pragma once

// n internally disjoint S-trees in FQ_n for every 3-set S.
//
// For n >= 4 the construction splits FQ_n along dimension 1 into the
// hypercube halves Q_n^1[0] and Q_n^1[1]. With all terminals on one side
// (Case 1) the half carries n-2 trees and the two halves of the opposite side
// carry one tree each. Otherwise the lone terminal Z is moved to 1...1 and the
// remaining subcases are decided by how the out-neighbours of the other two
// terminals meet W = {W_2, ..., W_n}, the neighbours of Z in Q_n^1[1].
// Orders 2 and 3 are handled by K_4 structure and exhaustive search.

#include <optional>
#include <vector>

#include "fqtree/automorphism.hpp"
#include "fqtree/bundle.hpp"
#include "fqtree/topology.hpp"
#include "fqtree/tree.hpp"

namespace fqtree {

/// Raised when a construction would return something uncertified.
class ConstructionDefect : public Error {
 public:
  ConstructionDefect(const std::string& what, CaseTrace trace)
      : Error(ErrorKind::ConstructionDefect, what), trace_(std::move(trace)) {}

  const CaseTrace& trace() const { return trace_; }

 private:
  CaseTrace trace_;
};

/// A structural assumption of one branch did not hold for its input.
class PreconditionFailure : public Error {
 public:
  explicit PreconditionFailure(const std::string& what)
      : Error(ErrorKind::ConstructionDefect, what) {}
};

inline constexpr int kMaxResplitDepth = 3;

TreeBundle s_trees(const TerminalTriple& s);

struct SplitChoice {
  int dim;
  bool three_zero;
  std::optional<VertexId> lone;  // set for 2-1 splits
};

/// Smallest dimension on which all terminals agree, otherwise dimension 1
/// with the terminal that is alone on it.
SplitChoice choose_split(const TerminalTriple& s);

TreeBundle base_fq2(const TerminalTriple& s);
TreeBundle base_fq3(const TerminalTriple& s);
/// Number of classes the 56 triples of FQ_3 fall into under the
/// translations and digit permutations used to memoize base_fq3.
std::size_t fq3_orbit_count();

namespace cases {

struct Context {
  int n;
  CaseTrace* trace;
  int depth = 0;
};

// Each branch returns n trees spanning its terminals, expressed in the
// coordinates it was given. Z is implicitly 1...1 for the Case 2 family, and
// x, y have digit 1 equal to 0.
std::vector<Tree> case1(VertexId x, VertexId y, VertexId z, Context& ctx);
std::vector<Tree> case2_dispatch(VertexId x, VertexId y, Context& ctx);
std::vector<Tree> case2_1(VertexId x, VertexId y, Context& ctx);
std::vector<Tree> case2_2_1(VertexId x, VertexId y, Context& ctx);
std::vector<Tree> case2_2_2(VertexId x, VertexId y, Context& ctx);
std::vector<Tree> case2_3(VertexId x, VertexId y, Context& ctx);

}  // namespace cases
}  // namespace fqtree
