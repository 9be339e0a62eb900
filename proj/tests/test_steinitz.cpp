#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "msteinitz/bounded_simplex.hpp"
#include "msteinitz/instances.hpp"
#include "msteinitz/steinitz.hpp"
#include "test_support.hpp"

using namespace msteinitz;

namespace {

bool is_bijection(std::vector<std::size_t> order, std::size_t n) {
  if (order.size() != n) return false;
  std::sort(order.begin(), order.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] != i) return false;
  }
  return true;
}

/// Shuffled pairs (v, -v), scaled so both members have seminorm at most 1.
std::vector<Vector> random_seminorm_sequence(std::mt19937_64& rng, std::size_t n, std::size_t d,
                                             const NormSpec& spec) {
  std::vector<Vector> seq;
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (seq.size() + 1 < n) {
    Vector v(d);
    for (double& c : v) c = u(rng);
    Vector w = v;
    for (double& c : w) c = -c;
    const double scale = std::max(spec.eval(v), spec.eval(w));
    if (scale < 1e-9) continue;
    for (double& c : v) c /= scale;
    for (double& c : w) c /= scale;
    seq.push_back(v);
    seq.push_back(w);
  }
  if (seq.size() < n) seq.push_back(Vector(d, 0.0));
  std::shuffle(seq.begin(), seq.end(), rng);
  return seq;
}

}  // namespace

TEST_SUITE("steinitz") {
  TEST_CASE("d = 1 example") {
    const std::vector<Vector> seq{{1.0}, {1.0}, {-1.0}, {-1.0}};
    const auto order = gs_reorder(seq, 1, NormSpec::l1());
    CHECK(is_bijection(order, 4));
    CHECK(testing::ordered_prefix_max(seq, order, NormSpec::l1()) <= 1.0 + 1e-12);
  }

  TEST_CASE("d = 2 linf example") {
    const std::vector<Vector> seq{{1.0, 1.0}, {1.0, -1.0}, {-1.0, 1.0}, {-1.0, -1.0},
                                  {1.0, 0.0}, {-1.0, 0.0}};
    const auto order = gs_reorder(seq, 2, NormSpec::linf());
    CHECK(is_bijection(order, seq.size()));
    CHECK(testing::ordered_prefix_max(seq, order, NormSpec::linf()) <= 2.0 + 1e-9);
  }

  TEST_CASE("short sequences keep the identity order") {
    const std::vector<Vector> seq{{0.5, 0.0}, {-0.5, 0.0}};
    CHECK(gs_reorder(seq, 2, NormSpec::l2()) == std::vector<std::size_t>{0, 1});
    CHECK(gs_reorder({}, 2, NormSpec::l2()).empty());
  }

  TEST_CASE("nonzero total is rejected") {
    CHECK_THROWS_AS(gs_reorder({{1.0}, {-0.5}}, 1, NormSpec::l1()), ValidationError);
  }

  TEST_CASE("randomized bound d max ||a||, symmetric norms") {
    std::mt19937_64 rng(37);
    for (std::size_t d = 1; d <= 4; ++d) {
      for (const auto& spec : testing::symmetric_norms(d)) {
        for (int trial = 0; trial < 10; ++trial) {
          const std::size_t n = 1 + rng() % 60;
          const auto seq = testing::random_zero_sum_sequence(rng, n, d, spec);
          const auto order = gs_reorder(seq, d, spec);
          REQUIRE(is_bijection(order, seq.size()));
          const double bound = static_cast<double>(d) * testing::max_norm(seq, spec);
          CHECK(testing::ordered_prefix_max(seq, order, spec) <= bound + 1e-6);
        }
      }
    }
  }

  TEST_CASE("randomized bound under a non-symmetric seminorm") {
    std::mt19937_64 rng(41);
    for (std::size_t d = 2; d <= 4; ++d) {
      const auto spec = NormSpec::orthant_simplex(d, std::ldexp(1.0, static_cast<int>(d)));
      for (int trial = 0; trial < 15; ++trial) {
        const std::size_t n = 2 + rng() % 59;
        const auto seq = random_seminorm_sequence(rng, n, d, spec);
        const auto order = gs_reorder(seq, d, spec);
        REQUIRE(is_bijection(order, seq.size()));
        const double bound = static_cast<double>(d) * testing::max_norm(seq, spec);
        CHECK(testing::ordered_prefix_max(seq, order, spec) <= bound + 1e-6);
      }
    }
  }

  TEST_CASE("column_steinitz on the l1 lower-bound instance") {
    const auto inst = gen_l1_lower(2, 2, 2);
    const auto perms = column_steinitz(inst.matrix, inst.norm);
    const auto c = apply_permutations(inst.matrix, perms);
    CHECK(max_prefix_norm(inst.norm, c) <= 4.0 + 1e-6);
    for (std::size_t j = 1; j < perms.rows(); ++j) CHECK(perms.row(j) == perms.row(0));
  }

  TEST_CASE("column_sums example") {
    const auto a = VectorMatrix::from_rows(1, {{{1.0}, {2.0}}, {{3.0}, {-5.0}}});
    CHECK(column_sums(a) == std::vector<Vector>{{4.0}, {-3.0}});
    CHECK_THROWS_AS(column_steinitz(a, NormSpec::l1()), ValidationError);
  }

  TEST_CASE("bounded simplex: feasible system") {
    // x + y + z = 1.5, x - y = 0, 0 <= x, y, z <= 1.
    BoxedSystem sys{2, 3, {1, 1, 1, 1, -1, 0}, {1.5, 0.0}, {1, 1, 1}};
    const auto x = find_feasible_point(sys);
    REQUIRE(x.has_value());
    CHECK((*x)[0] + (*x)[1] + (*x)[2] == doctest::Approx(1.5));
    CHECK((*x)[0] == doctest::Approx((*x)[1]));
    for (double v : *x) {
      CHECK(v >= -1e-12);
      CHECK(v <= 1.0 + 1e-12);
    }
  }

  TEST_CASE("bounded simplex: infeasible system") {
    // x + y = 3 with x, y <= 1.
    BoxedSystem sys{1, 2, {1, 1}, {3.0}, {1, 1}};
    CHECK_FALSE(find_feasible_point(sys).has_value());
    // x - y = -2 with x, y in [0, 1].
    BoxedSystem neg{1, 2, {1, -1}, {-2.0}, {1, 1}};
    CHECK_FALSE(find_feasible_point(neg).has_value());
  }

  TEST_CASE("bounded simplex: degenerate and redundant rows") {
    // Duplicated row and a zero right-hand side.
    BoxedSystem sys{3, 3, {1, 1, 1, 1, 1, 1, 1, -1, 0}, {1.0, 1.0, 0.0}, {1, 1, 1}};
    const auto x = find_feasible_point(sys);
    REQUIRE(x.has_value());
    CHECK((*x)[0] + (*x)[1] + (*x)[2] == doctest::Approx(1.0));
    CHECK((*x)[0] == doctest::Approx((*x)[1]));
  }

  TEST_CASE("bounded simplex agrees with a random feasible point") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> box(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t rows = 1 + rng() % 5;
      const std::size_t cols = rows + rng() % 8;
      BoxedSystem sys{rows, cols, std::vector<double>(rows * cols), std::vector<double>(rows, 0.0),
                      std::vector<double>(cols, 1.0)};
      std::vector<double> x0(cols);
      for (double& v : x0) v = box(rng);
      for (double& v : sys.a) v = u(rng);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) sys.b[r] += sys.a[r * cols + c] * x0[c];
      const auto x = find_feasible_point(sys);
      REQUIRE(x.has_value());
      for (std::size_t r = 0; r < rows; ++r) {
        double lhs = 0.0;
        for (std::size_t c = 0; c < cols; ++c) lhs += sys.a[r * cols + c] * (*x)[c];
        CHECK(lhs == doctest::Approx(sys.b[r]).epsilon(1e-7));
      }
    }
  }
}
