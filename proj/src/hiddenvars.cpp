#include "ctx/hiddenvars.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace ctx {

namespace {

void require_exact_searchable(const OrthogonalityGraph& g, const char* what) {
  if (g.size() > kMaxExactVertices) {
    throw LimitExceeded(std::string(what) + ": " + std::to_string(g.size()) +
                        " vertices exceeds the exact-search limit of " +
                        std::to_string(kMaxExactVertices));
  }
}

Assignment01 from_mask01(std::uint64_t mask, std::size_t n) {
  Assignment01 x;
  x.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) x.values[i] = static_cast<int>(mask >> i & 1u);
  x.exclusive = true;
  return x;
}

AssignmentPM pm_from_negmask(std::uint64_t neg, std::size_t n) {
  AssignmentPM a;
  a.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) a.values[i] = (neg >> i & 1u) ? -1 : 1;
  return a;
}

// Recursively extend independent supports vertex by vertex; subtrees that
// already clash with the chosen set never get visited.
void collect_independent(const OrthogonalityGraph& g, std::size_t v, std::uint64_t chosen,
                         std::vector<std::uint64_t>& out) {
  if (v == g.size()) {
    out.push_back(chosen);
    return;
  }
  collect_independent(g, v + 1, chosen, out);
  if ((g.neighbor_mask(v) & chosen) == 0)
    collect_independent(g, v + 1, chosen | (std::uint64_t{1} << v), out);
}

std::vector<std::uint64_t> independent_supports(const OrthogonalityGraph& g) {
  std::vector<std::uint64_t> masks;
  collect_independent(g, 0, 0, masks);
  return masks;
}

// Deterministic report order: by the support of the -1 (resp. 1) entries,
// lexicographic in vertex index.
template <typename A>
void sort_assignments(std::vector<A>& v, int marked) {
  std::sort(v.begin(), v.end(), [marked](const A& a, const A& b) {
    std::vector<std::size_t> sa, sb;
    for (std::size_t i = 0; i < a.values.size(); ++i)
      if (a.values[i] == marked) sa.push_back(i);
    for (std::size_t i = 0; i < b.values.size(); ++i)
      if (b.values[i] == marked) sb.push_back(i);
    return sa < sb;
  });
}

}  // namespace

AssignmentPM induced_pm(const Assignment01& x) {
  AssignmentPM a;
  a.values.reserve(x.values.size());
  for (int xi : x.values) {
    if (xi != 0 && xi != 1) throw InvalidObject("0/1 assignment carries a value other than 0 or 1");
    a.values.push_back(1 - 2 * xi);
  }
  return a;
}

std::vector<Assignment01> enumerate_exclusive_assignments(const OrthogonalityGraph& g) {
  require_exact_searchable(g, "enumerate_exclusive_assignments");
  std::vector<std::uint64_t> masks = independent_supports(g);
  std::sort(masks.begin(), masks.end());
  std::vector<Assignment01> out;
  out.reserve(masks.size());
  for (std::uint64_t m : masks) out.push_back(from_mask01(m, g.size()));
  return out;
}

int nc_bound_projector(const OrthogonalityGraph& g) {
  require_exact_searchable(g, "nc_bound_projector");
  int best = 0;
  for (std::uint64_t m : independent_supports(g)) best = std::max(best, std::popcount(m));
  return best;
}

double evaluate_assignment(const OrthogonalityGraph& g, const AssignmentPM& a) {
  if (a.values.size() != g.size()) {
    throw DimensionMismatch("assignment covers " + std::to_string(a.values.size()) +
                            " vertices, graph has " + std::to_string(g.size()));
  }
  for (int v : a.values)
    if (v != 1 && v != -1) throw InvalidObject("+-1 assignment carries a value other than +-1");
  const int delta = g.max_degree();
  const std::vector<int> deg = g.degrees();
  double total = 0.0;
  for (auto [i, j] : g.edges()) total += a.values[i] * a.values[j];
  for (std::size_t i = 0; i < g.size(); ++i) total += (delta - deg[i]) * a.values[i];
  return total;
}

CorrelationBounds nc_bound_correlation(const OrthogonalityGraph& g) {
  require_exact_searchable(g, "nc_bound_correlation");
  const std::size_t n = g.size();
  CorrelationBounds out;

  bool first = true;
  for (std::uint64_t support : independent_supports(g)) {
    AssignmentPM a = pm_from_negmask(support, n);
    const double val = evaluate_assignment(g, a);
    if (first || val < out.exclusive_min) {
      out.exclusive_min = val;
      out.exclusive_minimizers.clear();
      first = false;
    }
    if (val == out.exclusive_min) out.exclusive_minimizers.push_back(std::move(a));
  }

  first = true;
  for (std::uint64_t neg = 0; neg < (std::uint64_t{1} << n); ++neg) {
    AssignmentPM a = pm_from_negmask(neg, n);
    const double val = evaluate_assignment(g, a);
    if (first || val < out.unconstrained_min) {
      out.unconstrained_min = val;
      out.unconstrained_minimizers.clear();
      first = false;
    }
    if (val == out.unconstrained_min) out.unconstrained_minimizers.push_back(std::move(a));
  }

  sort_assignments(out.exclusive_minimizers, -1);
  sort_assignments(out.unconstrained_minimizers, -1);
  return out;
}

NCBoundReport nc_bounds(const OrthogonalityGraph& g) {
  NCBoundReport report;
  report.projector_bound = nc_bound_projector(g);
  for (const Assignment01& x : enumerate_exclusive_assignments(g)) {
    int total = 0;
    for (int v : x.values) total += v;
    if (total == report.projector_bound) report.projector_maximizers.push_back(x);
  }
  sort_assignments(report.projector_maximizers, 1);
  CorrelationBounds corr = nc_bound_correlation(g);
  report.correlation_bound_exclusive = corr.exclusive_min;
  report.correlation_bound_unconstrained = corr.unconstrained_min;
  report.correlation_minimizers_exclusive = std::move(corr.exclusive_minimizers);
  report.correlation_minimizers_unconstrained = std::move(corr.unconstrained_minimizers);
  return report;
}

}  // namespace ctx
