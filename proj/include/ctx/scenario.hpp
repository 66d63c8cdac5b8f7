#pragma once

// Ray sets, orthogonality-graph construction, and the exact graph
// combinatorics the noncontextual bounds are built on: degrees, independence
// number with all maximum independent sets, induced five-cycles.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ctx/linalg.hpp"

namespace ctx {

inline constexpr double kDefaultOrthogonalityTol = 1e-9;

// Exact subset search is capped here; beyond it the combinatorial operations
// throw LimitExceeded.
inline constexpr std::size_t kMaxExactVertices = 32;

struct Ray {
  std::string label;
  Vector vec;
};

// Labeled unit vectors of one common dimension. Rays whose norm deviates by
// more than tol.norm are rejected; with auto_normalize, deviations up to 1e-3
// are rescaled instead (larger ones still fail, they look like data errors).
class RaySet {
 public:
  RaySet(std::size_t dimension, std::vector<Ray> rays, const Tolerances& tol = {},
         bool auto_normalize = false);

  std::size_t dimension() const { return dim_; }
  std::size_t size() const { return rays_.size(); }
  const Ray& operator[](std::size_t i) const { return rays_[i]; }
  const std::vector<Ray>& rays() const { return rays_; }
  bool was_rescaled() const { return rescaled_; }

 private:
  std::size_t dim_;
  std::vector<Ray> rays_;
  bool rescaled_ = false;
};

// The nine qutrit rays the bundled scenario is made of, labels "1".."9".
RaySet bundled_rayset();

// Vertices are ray indices; an edge joins every pair whose inner product
// magnitude is at most the recorded tolerance.
class OrthogonalityGraph {
 public:
  OrthogonalityGraph(std::vector<std::string> labels,
                     const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                     double tol = kDefaultOrthogonalityTol);

  std::size_t size() const { return labels_.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i] >> j & 1u; }
  std::uint64_t neighbor_mask(std::size_t i) const { return adj_[i]; }

  std::size_t edge_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;  // i < j, ordered
  std::vector<int> degrees() const;
  int max_degree() const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t index_of(const std::string& label) const;  // throws InvalidObject
  double tolerance() const { return tol_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> adj_;
  double tol_;
};

OrthogonalityGraph build_graph(const RaySet& rays, double tol = kDefaultOrthogonalityTol);

struct IndependenceResult {
  int number = 0;
  // Every set achieving the maximum, as sorted index lists in lexicographic
  // order.
  std::vector<std::vector<std::size_t>> maximum_sets;
};

// Exact maximum independent set by subset search with pruning.
IndependenceResult independence_number(const OrthogonalityGraph& g);

// All chordless cycles of length five, one canonical tuple per cycle
// (smallest vertex first, then its smaller neighbor; rotations/reflections
// identified).
std::vector<std::array<std::size_t, 5>> induced_five_cycles(const OrthogonalityGraph& g);

// Edge-set equality against a reference list of label pairs.
bool graph_equal(const OrthogonalityGraph& g,
                 const std::vector<std::pair<std::string, std::string>>& reference_edges);

struct GraphStats {
  std::size_t edge_count = 0;
  std::vector<int> degree_sequence;
  int independence_number = 0;
  std::vector<std::vector<std::size_t>> maximum_independent_sets;
};

GraphStats analyze(const OrthogonalityGraph& g);

}  // namespace ctx
