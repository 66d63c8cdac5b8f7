#include "ctx/scenario.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_set>

namespace ctx {

RaySet::RaySet(std::size_t dimension, std::vector<Ray> rays, const Tolerances& tol,
               bool auto_normalize)
    : dim_(dimension), rays_(std::move(rays)) {
  if (dim_ < 2) throw InvalidObject("ray set: dimension must be at least 2");
  std::unordered_set<std::string> seen;
  for (Ray& r : rays_) {
    if (!seen.insert(r.label).second) throw ParseError("ray set: duplicate label '" + r.label + "'");
    if (r.vec.dim() != dim_) {
      throw DimensionMismatch("ray '" + r.label + "' has " + std::to_string(r.vec.dim()) +
                              " components, expected " + std::to_string(dim_));
    }
    const double dev = std::abs(r.vec.norm() - 1.0);
    if (dev <= tol.norm) continue;
    if (auto_normalize && dev <= 1e-3) {
      r.vec = r.vec.normalized();
      rescaled_ = true;
      continue;
    }
    throw InvalidObject("ray '" + r.label + "' is not normalized (norm " +
                        std::to_string(r.vec.norm()) + ")");
  }
}

RaySet bundled_rayset() {
  const double r2 = std::sqrt(2.0);
  const double r3 = std::sqrt(3.0);
  std::vector<Ray> rays = {
      {"1", Vector{1.0, 0.0, 0.0}},
      {"2", Vector{0.0, 1.0, 0.0}},
      {"3", Vector{0.0, 0.0, 1.0}},
      {"4", Vector{0.0, 1.0 / r2, -1.0 / r2}},
      {"5", Vector{1.0 / r3, 0.0, -r2 / r3}},
      {"6", Vector{1.0 / r3, r2 / r3, 0.0}},
      {"7", Vector{r2 / 2.0, 0.5, 0.5}},
      {"8", Vector{r2 / 2.0, -0.5, -0.5}},
      {"9", Vector{r2 / 2.0, -0.5, 0.5}},
  };
  return RaySet(3, std::move(rays));
}

OrthogonalityGraph::OrthogonalityGraph(std::vector<std::string> labels,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                       double tol)
    : labels_(std::move(labels)), adj_(labels_.size(), 0), tol_(tol) {
  if (labels_.size() > 64) throw LimitExceeded("orthogonality graph: more than 64 vertices");
  for (auto [i, j] : edges) {
    if (i >= labels_.size() || j >= labels_.size() || i == j) {
      throw InvalidObject("orthogonality graph: bad edge (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
    }
    adj_[i] |= std::uint64_t{1} << j;
    adj_[j] |= std::uint64_t{1} << i;
  }
}

std::size_t OrthogonalityGraph::edge_count() const {
  std::size_t deg2 = 0;
  for (std::uint64_t row : adj_) deg2 += static_cast<std::size_t>(std::popcount(row));
  return deg2 / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> OrthogonalityGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<int> OrthogonalityGraph::degrees() const {
  std::vector<int> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = std::popcount(adj_[i]);
  return out;
}

int OrthogonalityGraph::max_degree() const {
  int m = 0;
  for (std::uint64_t row : adj_) m = std::max(m, std::popcount(row));
  return m;
}

std::size_t OrthogonalityGraph::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw InvalidObject("unknown vertex label '" + label + "'");
}

OrthogonalityGraph build_graph(const RaySet& rays, double tol) {
  std::vector<std::string> labels;
  labels.reserve(rays.size());
  for (const Ray& r : rays.rays()) labels.push_back(r.label);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = i + 1; j < rays.size(); ++j)
      if (std::abs(inner_product(rays[i].vec, rays[j].vec)) <= tol) edges.emplace_back(i, j);
  return OrthogonalityGraph(std::move(labels), edges, tol);
}

namespace {

void require_exact_searchable(const OrthogonalityGraph& g, const char* what) {
  if (g.size() > kMaxExactVertices) {
    throw LimitExceeded(std::string(what) + ": " + std::to_string(g.size()) +
                        " vertices exceeds the exact-search limit of " +
                        std::to_string(kMaxExactVertices));
  }
}

struct MisSearch {
  const OrthogonalityGraph& g;
  int best = -1;
  std::vector<std::uint64_t> best_sets;

  void run(std::size_t v, std::uint64_t chosen, int count) {
    const std::size_t n = g.size();
    if (count + static_cast<int>(n - v) < best) return;  // cannot reach the record
    if (v == n) {
      if (count > best) {
        best = count;
        best_sets.clear();
      }
      if (count == best) best_sets.push_back(chosen);
      return;
    }
    if ((g.neighbor_mask(v) & chosen) == 0) run(v + 1, chosen | (std::uint64_t{1} << v), count + 1);
    run(v + 1, chosen, count);
  }
};

std::vector<std::size_t> mask_to_indices(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

}  // namespace

IndependenceResult independence_number(const OrthogonalityGraph& g) {
  require_exact_searchable(g, "independence_number");
  MisSearch search{g, -1, {}};
  search.run(0, 0, 0);
  IndependenceResult out;
  out.number = std::max(search.best, 0);
  out.maximum_sets.reserve(search.best_sets.size());
  for (std::uint64_t mask : search.best_sets) out.maximum_sets.push_back(mask_to_indices(mask));
  std::sort(out.maximum_sets.begin(), out.maximum_sets.end());
  return out;
}

std::vector<std::array<std::size_t, 5>> induced_five_cycles(const OrthogonalityGraph& g) {
  std::vector<std::array<std::size_t, 5>> out;
  const std::size_t n = g.size();
  if (n < 5) return out;
  std::array<std::size_t, 5> sel{};
  // Five-subsets in lexicographic order; a subset induces a C5 exactly when
  // it carries five edges and every vertex has induced degree two.
  for (sel[0] = 0; sel[0] + 4 < n; ++sel[0])
    for (sel[1] = sel[0] + 1; sel[1] + 3 < n; ++sel[1])
      for (sel[2] = sel[1] + 1; sel[2] + 2 < n; ++sel[2])
        for (sel[3] = sel[2] + 1; sel[3] + 1 < n; ++sel[3])
          for (sel[4] = sel[3] + 1; sel[4] < n; ++sel[4]) {
            std::uint64_t mask = 0;
            for (std::size_t v : sel) mask |= std::uint64_t{1} << v;
            bool all_deg_two = true;
            for (std::size_t v : sel)
              all_deg_two = all_deg_two && std::popcount(g.neighbor_mask(v) & mask) == 2;
            if (!all_deg_two) continue;  // degrees all two on 5 vertices <=> induced C5
            // Walk the cycle from the smallest vertex toward its smaller
            // neighbor so every cycle gets one canonical tuple.
            std::array<std::size_t, 5> cyc{};
            cyc[0] = sel[0];
            cyc[1] = mask_to_indices(g.neighbor_mask(sel[0]) & mask)[0];
            for (std::size_t k = 2; k < 5; ++k) {
              const std::uint64_t next = (g.neighbor_mask(cyc[k - 1]) & mask) &
                                         ~(std::uint64_t{1} << cyc[k - 2]);
              cyc[k] = static_cast<std::size_t>(std::countr_zero(next));
            }
            out.push_back(cyc);
          }
  return out;
}

bool graph_equal(const OrthogonalityGraph& g,
                 const std::vector<std::pair<std::string, std::string>>& reference_edges) {
  std::vector<std::pair<std::size_t, std::size_t>> ref;
  ref.reserve(reference_edges.size());
  for (const auto& [a, b] : reference_edges) {
    std::size_t i = g.index_of(a);
    std::size_t j = g.index_of(b);
    if (i == j) throw InvalidObject("reference edge joins '" + a + "' to itself");
    if (i > j) std::swap(i, j);
    ref.emplace_back(i, j);
  }
  std::sort(ref.begin(), ref.end());
  ref.erase(std::unique(ref.begin(), ref.end()), ref.end());
  return ref == g.edges();
}

GraphStats analyze(const OrthogonalityGraph& g) {
  GraphStats stats;
  stats.edge_count = g.edge_count();
  stats.degree_sequence = g.degrees();
  IndependenceResult ind = independence_number(g);
  stats.independence_number = ind.number;
  stats.maximum_independent_sets = std::move(ind.maximum_sets);
  return stats;
}

}  // namespace ctx
