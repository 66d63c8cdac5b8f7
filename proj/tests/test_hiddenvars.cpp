#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

#include "ctx/hiddenvars.hpp"
#include "support.hpp"

using ctx::Assignment01;
using ctx::AssignmentPM;
using ctx::OrthogonalityGraph;

namespace {

std::vector<std::size_t> support(const AssignmentPM& a, int marked) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (a.values[i] == marked) out.push_back(i);
  return out;
}

OrthogonalityGraph pentagon() {
  return OrthogonalityGraph({"a", "b", "c", "d", "e"},
                            {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

}  // namespace

TEST_CASE("induced_pm flips 0/1 to +1/-1") {
  const AssignmentPM a = ctx::induced_pm(Assignment01{{0, 1, 0, 1}, true});
  CHECK(a.values == std::vector<int>{1, -1, 1, -1});
  CHECK_THROWS_AS(ctx::induced_pm(Assignment01{{0, 2}, false}), ctx::InvalidObject);
}

TEST_CASE("the bundled graph admits 49 exclusive assignments") {
  const auto g = ctx::build_graph(ctx::bundled_rayset());
  const auto assignments = ctx::enumerate_exclusive_assignments(g);
  CHECK(assignments.size() == 49);
  // 1 empty + 9 singletons + 23 non-adjacent pairs + 16 maximum triples.
  std::size_t by_size[4] = {0, 0, 0, 0};
  for (const Assignment01& x : assignments) {
    const int total = std::accumulate(x.values.begin(), x.values.end(), 0);
    REQUIRE(total <= 3);
    ++by_size[total];
    CHECK(x.exclusive);
    for (auto [i, j] : g.edges()) CHECK(x.values[i] + x.values[j] <= 1);
  }
  CHECK(by_size[0] == 1);
  CHECK(by_size[1] == 9);
  CHECK(by_size[2] == 23);
  CHECK(by_size[3] == 16);
}

TEST_CASE("projector bound via assignments equals the independence number") {
  const auto g = ctx::build_graph(ctx::bundled_rayset());
  CHECK(ctx::nc_bound_projector(g) == 3);
  CHECK(ctx::nc_bound_projector(g) == ctx::independence_number(g).number);

  std::mt19937_64 gen(31);
  for (int round = 0; round < 20; ++round) {
    const auto rg = testutil::random_graph(gen, 2 + round % 10, 0.3);
    CHECK(ctx::nc_bound_projector(rg) == ctx::independence_number(rg).number);
  }
}

TEST_CASE("correlation objective on hand-picked assignments") {
  const auto g = ctx::build_graph(ctx::bundled_rayset());

  AssignmentPM all_plus;
  all_plus.values.assign(9, 1);
  // 13 edge terms plus the lone degree-two field term.
  CHECK(ctx::evaluate_assignment(g, all_plus) == doctest::Approx(14.0));

  AssignmentPM triple = all_plus;
  triple.values[3] = triple.values[4] = triple.values[5] = -1;
  CHECK(ctx::evaluate_assignment(g, triple) == doctest::Approx(-4.0));

  AssignmentPM short_one;
  short_one.values.assign(8, 1);
  CHECK_THROWS_AS(ctx::evaluate_assignment(g, short_one), ctx::DimensionMismatch);
  AssignmentPM zero = all_plus;
  zero.values[0] = 0;
  CHECK_THROWS_AS(ctx::evaluate_assignment(g, zero), ctx::InvalidObject);
}

TEST_CASE("exclusive assignments satisfy the linear objective identity") {
  // For an exclusive assignment, the correlation objective collapses to
  // |E| + sum_i (maxdeg - deg_i) - 2 maxdeg sum_i x_i.
  std::mt19937_64 gen(32);
  for (int round = 0; round < 12; ++round) {
    const auto g = (round == 0) ? ctx::build_graph(ctx::bundled_rayset())
                                : testutil::random_graph(gen, 3 + round % 8, 0.4);
    const auto deg = g.degrees();
    const int delta = g.max_degree();
    const double field =
        std::accumulate(deg.begin(), deg.end(), 0.0,
                        [delta](double acc, int d) { return acc + (delta - d); });
    for (const Assignment01& x : ctx::enumerate_exclusive_assignments(g)) {
      const int marked = std::accumulate(x.values.begin(), x.values.end(), 0);
      const double expect =
          static_cast<double>(g.edge_count()) + field - 2.0 * delta * marked;
      CHECK(ctx::evaluate_assignment(g, ctx::induced_pm(x)) == doctest::Approx(expect));
    }
  }
}

TEST_CASE("correlation bounds of the bundled graph") {
  const auto g = ctx::build_graph(ctx::bundled_rayset());
  const auto bounds = ctx::nc_bound_correlation(g);
  CHECK(bounds.exclusive_min == doctest::Approx(-4.0));
  CHECK(bounds.unconstrained_min == doctest::Approx(-8.0));
  CHECK(bounds.exclusive_minimizers.size() == 16);
  CHECK(bounds.unconstrained_minimizers.size() == 9);

  // The exclusive minimizers are exactly the maximum independent sets,
  // in the same lexicographic order.
  const auto mis = ctx::independence_number(g).maximum_sets;
  REQUIRE(mis.size() == bounds.exclusive_minimizers.size());
  for (std::size_t k = 0; k < mis.size(); ++k) {
    CHECK(support(bounds.exclusive_minimizers[k], -1) == mis[k]);
  }
}

TEST_CASE("unconstrained minimum matches the direct sign-pattern oracle") {
  std::mt19937_64 gen(33);
  for (int round = 0; round < 20; ++round) {
    const auto g = testutil::random_graph(gen, 2 + round % 11, 0.15 + 0.05 * (round % 8));
    const auto bounds = ctx::nc_bound_correlation(g);
    CHECK(bounds.unconstrained_min == doctest::Approx(testutil::oracle_unconstrained_min(g)));
    CHECK(bounds.unconstrained_min <= bounds.exclusive_min);
    for (const AssignmentPM& a : bounds.unconstrained_minimizers) {
      CHECK(ctx::evaluate_assignment(g, a) == doctest::Approx(bounds.unconstrained_min));
    }
  }
}

TEST_CASE("pentagon bounds") {
  const auto g = pentagon();
  CHECK(ctx::nc_bound_projector(g) == 2);
  const auto bounds = ctx::nc_bound_correlation(g);
  // Odd cycle frustration: at most four of the five edges can disagree.
  CHECK(bounds.exclusive_min == doctest::Approx(-3.0));
  CHECK(bounds.unconstrained_min == doctest::Approx(-3.0));
  CHECK(bounds.exclusive_minimizers.size() == 5);
  CHECK(bounds.unconstrained_minimizers.size() == 10);
}

TEST_CASE("report bundles both routes") {
  const auto g = ctx::build_graph(ctx::bundled_rayset());
  const auto report = ctx::nc_bounds(g);
  CHECK(report.projector_bound == 3);
  CHECK(report.correlation_bound_exclusive == doctest::Approx(-4.0));
  CHECK(report.correlation_bound_unconstrained == doctest::Approx(-8.0));
  CHECK(report.projector_maximizers.size() == 16);
  CHECK(report.correlation_minimizers_exclusive.size() == 16);
  CHECK(report.correlation_minimizers_unconstrained.size() == 9);
}

TEST_CASE("enumeration respects the exact-search cap") {
  std::vector<std::string> labels;
  for (int i = 0; i < 33; ++i) labels.push_back(std::to_string(i));
  const OrthogonalityGraph big(std::move(labels), {});
  CHECK_THROWS_AS(ctx::enumerate_exclusive_assignments(big), ctx::LimitExceeded);
  CHECK_THROWS_AS(ctx::nc_bound_correlation(big), ctx::LimitExceeded);
}
