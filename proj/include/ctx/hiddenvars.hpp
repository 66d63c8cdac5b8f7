#pragma once

// Exact noncontextual bounds for both inequality forms, by brute-force
// enumeration of deterministic hidden-variable assignments.
//
// The correlation objective is  sum_{(i,j) in E} a_i a_j
//                             + sum_i (maxdeg - deg_i) a_i
// which reduces to the single extra <A_9> term on the bundled nine-ray graph
// (vertex 9 is the only one of degree two) and is defined for any graph.

#include <vector>

#include "ctx/scenario.hpp"

namespace ctx {

// 0/1 valuation of the vertices; exclusive means no two adjacent vertices
// both carry 1 (the support is an independent set).
struct Assignment01 {
  std::vector<int> values;
  bool exclusive = false;
};

// -1/+1 valuation of the vertices.
struct AssignmentPM {
  std::vector<int> values;
};

// a = 1 - 2x
AssignmentPM induced_pm(const Assignment01& x);

// All 0/1 assignments whose support is an independent set, the empty one
// included. Throws LimitExceeded beyond the exact-search vertex cap.
std::vector<Assignment01> enumerate_exclusive_assignments(const OrthogonalityGraph& g);

// Maximum of sum_i x_i over exclusive assignments; equals the independence
// number, computed here through the assignment enumeration as a second route.
int nc_bound_projector(const OrthogonalityGraph& g);

// Correlation objective of a full +-1 assignment.
double evaluate_assignment(const OrthogonalityGraph& g, const AssignmentPM& a);

struct CorrelationBounds {
  double exclusive_min = 0.0;      // over assignments induced from exclusive 0/1 ones
  double unconstrained_min = 0.0;  // over all 2^n sign patterns
  std::vector<AssignmentPM> exclusive_minimizers;
  std::vector<AssignmentPM> unconstrained_minimizers;
};

CorrelationBounds nc_bound_correlation(const OrthogonalityGraph& g);

struct NCBoundReport {
  int projector_bound = 0;
  double correlation_bound_exclusive = 0.0;
  double correlation_bound_unconstrained = 0.0;
  std::vector<Assignment01> projector_maximizers;
  std::vector<AssignmentPM> correlation_minimizers_exclusive;
  std::vector<AssignmentPM> correlation_minimizers_unconstrained;
};

NCBoundReport nc_bounds(const OrthogonalityGraph& g);

}  // namespace ctx
