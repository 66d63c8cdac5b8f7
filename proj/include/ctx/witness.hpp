#pragma once

// Quantum side of the test: the witness operator C = sum_i |i><i|, both
// inequality forms evaluated on a state, the state-alignment rotation, and
// the prior-information measure eta.

#include <optional>

#include "ctx/hiddenvars.hpp"
#include "ctx/linalg.hpp"
#include "ctx/scenario.hpp"

namespace ctx {

// Values within this slack of the noncontextual bound count as saturating,
// not violating.
inline constexpr double kViolationSlack = 1e-9;

struct WitnessOperator {
  Matrix matrix;                 // sum of the rank-1 projectors
  SpectralDecomposition spectrum;
  RaySet source_rays;
};

WitnessOperator assemble_witness(const RaySet& rays, const Tolerances& tol = {});

// Tr(rho C) = sum_i <Pi_i>.
double projector_value(const DensityMatrix& rho, const RaySet& rays);

// sum_{(i,j) in E} Tr(rho A_i A_j) + sum_i (maxdeg - deg_i) Tr(rho A_i)
// with A_i = 1 - 2 Pi_i, evaluated as literal operator products. The graph
// must belong to the ray set and its edges must join orthogonal rays.
double correlation_value(const DensityMatrix& rho, const RaySet& rays,
                         const OrthogonalityGraph& graph);

struct AlignmentResult {
  UnitaryMatrix rotation;    // maps the witness eigenbasis onto the state's
  RaySet rotated_rays;
  double predicted_value;    // sum_k lambda_k p_k, both spectra descending
  double margin;             // predicted_value - tr(C)/d; (p - r)/3 for the nine-ray witness
};

// Rotate the ray set so the witness eigenvector of the k-th largest
// eigenvalue lands on the state eigenvector of the k-th largest weight.
AlignmentResult align(const DensityMatrix& rho, const RaySet& rays, const Tolerances& tol = {});

// eta = log2(d) - S(rho), in bits. Zero exactly for the maximally mixed state.
double prior_information(const DensityMatrix& rho, const Tolerances& tol = {});

struct TestReport {
  double s_pi = 0.0;                 // projector-form value
  double s_a = 0.0;                  // correlation-form value
  int nc_projector_bound = 0;
  double nc_correlation_bound = 0.0;  // exclusive-model bound
  bool violated = false;
  bool saturating = false;
  double margin = 0.0;               // s_pi - nc_projector_bound
  double eta_bits = 0.0;
};

struct TestOutcome {
  TestReport report;
  std::optional<AlignmentResult> alignment;  // present when the run was aligned
};

TestOutcome run_test(const DensityMatrix& rho, const RaySet& rays, bool aligned,
                     double graph_tol = kDefaultOrthogonalityTol, const Tolerances& tol = {});

}  // namespace ctx
