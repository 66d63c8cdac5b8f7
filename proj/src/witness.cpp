#include "ctx/witness.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace ctx {

namespace {

void require_state_matches(const DensityMatrix& rho, const RaySet& rays) {
  if (rho.dim() != rays.dimension()) {
    throw DimensionMismatch("state dimension " + std::to_string(rho.dim()) +
                            " does not match ray dimension " + std::to_string(rays.dimension()));
  }
}

complexd trace_product(const Matrix& a, const Matrix& b) {
  complexd s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) s += a(i, k) * b(k, i);
  return s;
}

}  // namespace

WitnessOperator assemble_witness(const RaySet& rays, const Tolerances& tol) {
  Matrix c(rays.dimension());
  for (const Ray& r : rays.rays()) c = c + projector_of(r.vec, tol);
  SpectralDecomposition spec = hermitian_eig(c, tol);
  return WitnessOperator{std::move(c), std::move(spec), rays};
}

double projector_value(const DensityMatrix& rho, const RaySet& rays) {
  require_state_matches(rho, rays);
  double total = 0.0;
  for (const Ray& r : rays.rays())
    total += inner_product(r.vec, rho.matrix().apply(r.vec)).real();  // <i|rho|i>
  return total;
}

double correlation_value(const DensityMatrix& rho, const RaySet& rays,
                         const OrthogonalityGraph& graph) {
  require_state_matches(rho, rays);
  if (graph.size() != rays.size()) {
    throw InvalidObject("graph has " + std::to_string(graph.size()) + " vertices for " +
                        std::to_string(rays.size()) + " rays");
  }
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (graph.labels()[i] != rays[i].label) {
      throw InvalidObject("graph vertex '" + graph.labels()[i] + "' does not match ray '" +
                          rays[i].label + "'");
    }
  }
  for (auto [i, j] : graph.edges()) {
    if (std::abs(inner_product(rays[i].vec, rays[j].vec)) > graph.tolerance()) {
      throw InvalidObject("edge " + rays[i].label + "-" + rays[j].label +
                          " joins non-orthogonal rays");
    }
  }

  const std::size_t d = rays.dimension();
  const Matrix id = Matrix::identity(d);
  std::vector<Matrix> sign_ops;  // A_i = 1 - 2|i><i|
  sign_ops.reserve(rays.size());
  for (const Ray& r : rays.rays()) sign_ops.push_back(id - (complexd(2.0) * outer(r.vec, r.vec)));

  const int delta = graph.max_degree();
  const std::vector<int> deg = graph.degrees();
  double total = 0.0;
  for (auto [i, j] : graph.edges())
    total += trace_product(rho.matrix(), sign_ops[i] * sign_ops[j]).real();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (delta == deg[i]) continue;
    total += (delta - deg[i]) * trace_product(rho.matrix(), sign_ops[i]).real();
  }
  return total;
}

AlignmentResult align(const DensityMatrix& rho, const RaySet& rays, const Tolerances& tol) {
  require_state_matches(rho, rays);
  WitnessOperator witness = assemble_witness(rays, tol);

  // Both spectra are descending, so pairing k-th with k-th realizes
  // sum_k lambda_k p_k, the largest value this witness family reaches on rho.
  UnitaryMatrix rotation =
      unitary_from_bases(witness.spectrum.eigenvectors, rho.spectrum().eigenvectors, tol);

  std::vector<Ray> rotated;
  rotated.reserve(rays.size());
  for (const Ray& r : rays.rays()) rotated.push_back({r.label, rotation.apply(r.vec)});

  double predicted = 0.0;
  for (std::size_t k = 0; k < rho.dim(); ++k)
    predicted += witness.spectrum.eigenvalues[k] * rho.spectrum().eigenvalues[k];
  const double mixed_value = witness.matrix.trace().real() / static_cast<double>(rho.dim());

  return AlignmentResult{std::move(rotation),
                         RaySet(rays.dimension(), std::move(rotated), tol),
                         predicted, predicted - mixed_value};
}

double prior_information(const DensityMatrix& rho, const Tolerances& tol) {
  const double eta = std::log2(static_cast<double>(rho.dim())) - von_neumann_entropy(rho, tol);
  return std::max(0.0, eta);
}

TestOutcome run_test(const DensityMatrix& rho, const RaySet& rays, bool aligned,
                     double graph_tol, const Tolerances& tol) {
  TestOutcome out;
  const RaySet* used = &rays;
  if (aligned) {
    out.alignment = align(rho, rays, tol);
    used = &out.alignment->rotated_rays;
  }
  const OrthogonalityGraph graph = build_graph(*used, graph_tol);

  TestReport& rep = out.report;
  rep.s_pi = projector_value(rho, *used);
  rep.s_a = correlation_value(rho, *used, graph);
  rep.nc_projector_bound = nc_bound_projector(graph);
  rep.nc_correlation_bound = nc_bound_correlation(graph).exclusive_min;
  rep.margin = rep.s_pi - rep.nc_projector_bound;
  rep.violated = rep.margin > kViolationSlack;
  rep.saturating = std::abs(rep.margin) <= kViolationSlack;
  rep.eta_bits = prior_information(rho, tol);
  return out;
}

}  // namespace ctx
