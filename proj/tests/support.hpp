#pragma once

// Shared helpers for the test binaries: deterministic pseudo-random states,
// vectors and graphs, plus tiny independent brute-force oracles the library
// results are checked against. Everything is seeded explicitly so failures
// reproduce.

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "ctx/linalg.hpp"
#include "ctx/scenario.hpp"

namespace testutil {

inline ctx::Vector random_unit(std::mt19937_64& gen, std::size_t d) {
  std::normal_distribution<double> g;
  ctx::Vector v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = ctx::complexd(g(gen), g(gen));
  return v.normalized();
}

inline ctx::Matrix random_hermitian(std::mt19937_64& gen, std::size_t d) {
  std::normal_distribution<double> g;
  ctx::Matrix m(d);
  for (std::size_t i = 0; i < d; ++i) {
    m(i, i) = g(gen);
    for (std::size_t j = i + 1; j < d; ++j) {
      const ctx::complexd z(g(gen), g(gen));
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return m;
}

// Uniform point on the probability simplex (normalized exponentials).
inline std::vector<double> random_simplex(std::mt19937_64& gen, std::size_t d) {
  std::exponential_distribution<double> e;
  std::vector<double> p(d);
  double sum = 0.0;
  for (double& x : p) sum += (x = e(gen));
  for (double& x : p) x /= sum;
  return p;
}

// Random orthonormal basis by Gram-Schmidt on Gaussian vectors.
inline std::vector<ctx::Vector> random_basis(std::mt19937_64& gen, std::size_t d) {
  std::vector<ctx::Vector> basis;
  while (basis.size() < d) {
    ctx::Vector v = random_unit(gen, d);
    for (const ctx::Vector& b : basis) {
      const ctx::complexd overlap = ctx::inner_product(b, v);
      v = v - b.scaled(overlap);
    }
    if (v.norm() < 1e-6) continue;  // nearly dependent draw, retry
    basis.push_back(v.normalized());
  }
  return basis;
}

inline ctx::DensityMatrix random_state(std::mt19937_64& gen, std::size_t d) {
  return ctx::DensityMatrix::from_spectrum(random_simplex(gen, d), random_basis(gen, d));
}

// Erdos-Renyi style random graph on n labeled vertices.
inline ctx::OrthogonalityGraph random_graph(std::mt19937_64& gen, std::size_t n,
                                            double edge_prob) {
  std::bernoulli_distribution coin(edge_prob);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(gen)) edges.emplace_back(i, j);
    }
  }
  return ctx::OrthogonalityGraph(std::move(labels), edges);
}

// Independence number by the dumbest possible method: test all 2^n subsets.
inline int oracle_independence_number(const ctx::OrthogonalityGraph& g) {
  const std::size_t n = g.size();
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if ((mask >> i & 1u) && (g.neighbor_mask(i) & mask)) ok = false;
    }
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

// Minimum of the correlation objective over all sign patterns, directly.
inline double oracle_unconstrained_min(const ctx::OrthogonalityGraph& g) {
  const std::size_t n = g.size();
  const std::vector<int> deg = g.degrees();
  const int maxdeg = g.max_degree();
  double best = 1e300;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    double value = 0.0;
    for (auto [i, j] : g.edges()) {
      const int ai = (mask >> i & 1u) ? -1 : 1;
      const int aj = (mask >> j & 1u) ? -1 : 1;
      value += ai * aj;
    }
    for (std::size_t i = 0; i < n; ++i) {
      value += (maxdeg - deg[i]) * ((mask >> i & 1u) ? -1 : 1);
    }
    best = std::min(best, value);
  }
  return best;
}

}  // namespace testutil
