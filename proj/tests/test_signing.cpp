#include <doctest.h>

#include <random>

#include "msteinitz/instances.hpp"
#include "msteinitz/signing.hpp"
#include "test_support.hpp"

using namespace msteinitz;

namespace {

double prefix_bound(std::size_t d) { return 2.0 * static_cast<double>(d) - 1.0; }

}  // namespace

TEST_SUITE("signing") {
  TEST_CASE("d = 1 all ones alternate") {
    const std::vector<Vector> seq(6, Vector{1.0});
    const auto s = bg_signs(seq, 1, NormSpec::l2());
    REQUIRE(s.size() == 6);
    CHECK(testing::signed_prefix_max(seq, s, NormSpec::l2()) <= 1.0);
  }

  TEST_CASE("zero vectors get +1") {
    const std::vector<Vector> seq(4, Vector{0.0, 0.0});
    CHECK(bg_signs(seq, 2, NormSpec::linf()) == std::vector<int>(4, 1));
    CHECK(bg_signs({}, 2, NormSpec::linf()).empty());
  }

  TEST_CASE("e1, e1, e2 under linf") {
    const std::vector<Vector> seq{{1.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
    const auto s = bg_signs(seq, 2, NormSpec::linf());
    CHECK(testing::signed_prefix_max(seq, s, NormSpec::linf()) <= 3.0);
    CHECK(testing::brute_best_signing(seq, NormSpec::linf()) == 1.0);
  }

  TEST_CASE("adversarial d = 1 run of small opposite vectors") {
    // A fractional coefficient pushed back and forth across zero.
    std::vector<Vector> seq{{1.0}};
    for (int i = 0; i < 40; ++i) seq.push_back({-0.05});
    for (int i = 0; i < 40; ++i) seq.push_back({0.05});
    seq.push_back({0.7});
    for (int i = 0; i < 30; ++i) seq.push_back({-0.1});
    const auto s = bg_signs(seq, 1, NormSpec::l1());
    CHECK(testing::signed_prefix_max(seq, s, NormSpec::l1()) <= 1.0 + 1e-9);
  }

  TEST_CASE("randomized prefix bound 2d - 1") {
    std::mt19937_64 rng(29);
    for (std::size_t d = 1; d <= 5; ++d) {
      for (const auto& spec : testing::symmetric_norms(d)) {
        for (int trial = 0; trial < 20; ++trial) {
          const std::size_t n = 1 + rng() % 150;
          std::vector<Vector> seq;
          for (std::size_t i = 0; i < n; ++i) {
            auto v = testing::random_unit(rng, d, spec);
            // Mix in tiny vectors, repeats and negated repeats.
            if (i % 7 == 3) for (double& c : v) c *= 1e-3;
            if (i % 11 == 5 && !seq.empty()) v = seq.back();
            if (i % 13 == 6 && !seq.empty()) {
              v = seq.back();
              for (double& c : v) c = -c;
            }
            seq.push_back(v);
          }
          const auto s = bg_signs(seq, d, spec);
          CHECK(testing::signed_prefix_max(seq, s, spec) <= prefix_bound(d) + 1e-9);
        }
      }
    }
  }

  TEST_CASE("bg_signs rejects bad input") {
    CHECK_THROWS_AS(bg_signs({{2.0}}, 1, NormSpec::l2()), ValidationError);
    CHECK_THROWS_AS(bg_signs({{0.5}}, 0, NormSpec::l2()), ValidationError);
    CHECK_THROWS_AS(bg_signs({{0.5}}, 1, NormSpec::seminorm({{1.0}, {-1.0}})), ValidationError);
    CHECK_THROWS_AS(bg_signs({{0.5, 0.5}}, 1, NormSpec::l2()), ValidationError);
  }

  TEST_CASE("SignMatrix validation") {
    CHECK_THROWS_AS(SignMatrix::from_rows({{1, 0}}), ValidationError);
    CHECK_THROWS_AS(SignMatrix::from_rows({{1, 1}, {1}}), ValidationError);
    auto eps = SignMatrix::from_rows({{1, -1}, {-1, 1}});
    CHECK(eps.to_rows() == std::vector<std::vector<int>>{{1, -1}, {-1, 1}});
    CHECK_THROWS_AS(eps.set(0, 0, 2), ValidationError);
  }

  TEST_CASE("serialize_column_major example") {
    const auto b = VectorMatrix::from_rows(1, {{{1.0}, {2.0}}, {{3.0}, {4.0}}});
    CHECK(serialize_column_major(b) == std::vector<Vector>{{1.0}, {3.0}, {2.0}, {4.0}});
  }

  TEST_CASE("apply_signs example") {
    const auto b = VectorMatrix::from_rows(1, {{{1.0}, {2.0}}});
    const auto out = apply_signs(b, SignMatrix::from_rows({{-1, 1}}));
    CHECK(out == VectorMatrix::from_rows(1, {{{-1.0}, {2.0}}}));
  }

  TEST_CASE("sign_assign_matrix prefixes are serialized prefixes") {
    std::mt19937_64 rng(31);
    for (std::size_t d = 1; d <= 4; ++d) {
      for (const auto& spec : testing::symmetric_norms(d)) {
        const std::size_t k = 1 + rng() % 4;
        const std::size_t n = 1 + rng() % 25;
        std::vector<std::vector<Vector>> rows(k);
        for (auto& row : rows)
          for (std::size_t i = 0; i < n; ++i) row.push_back(testing::random_unit(rng, d, spec));
        const auto b = VectorMatrix::from_rows(d, rows);
        const auto eps = sign_assign_matrix(b, spec);
        const auto signed_b = apply_signs(b, eps);
        CHECK(max_prefix_norm(spec, signed_b) <= prefix_bound(d) + 1e-9);

        // sigma_m(B^eps) equals the serialized prefix of length m k.
        const auto serial = serialize_column_major(b);
        const auto serial_signs = bg_signs(serial, d, spec);
        Vector run(d, 0.0);
        for (std::size_t m = 1; m <= n; ++m) {
          for (std::size_t j = 0; j < k; ++j) {
            const auto& v = serial[(m - 1) * k + j];
            for (std::size_t c = 0; c < d; ++c) run[c] += serial_signs[(m - 1) * k + j] * v[c];
          }
          const auto sigma = prefix_column_sum(signed_b, m);
          for (std::size_t c = 0; c < d; ++c) CHECK(sigma[c] == doctest::Approx(run[c]).epsilon(1e-12));
        }
      }
    }
  }

  TEST_CASE("greedy_signs examples") {
    CHECK(greedy_signs({{1.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}}, NormSpec::l2()) ==
          std::vector<int>{1, 1, -1});
    CHECK(greedy_signs({{1.0}, {1.0}, {1.0}}, NormSpec::l1()) == std::vector<int>{1, -1, 1});
    CHECK(greedy_signs({{0.0}}, NormSpec::l1()) == std::vector<int>{1});
  }
}
