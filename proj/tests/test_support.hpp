// Test-only helpers: random generators and brute-force reference
// computations that do not go through the library's search code.

#ifndef MSTEINITZ_TEST_SUPPORT_HPP
#define MSTEINITZ_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "msteinitz/core.hpp"
#include "msteinitz/norms.hpp"

namespace msteinitz::testing {

inline std::vector<NormSpec> symmetric_norms(std::size_t d) {
  // A hexagon-like symmetric polytope in every dimension: +-e_i and +-(e_1 + e_2)/2 style facets.
  std::vector<Vector> facets;
  for (std::size_t i = 0; i < d; ++i) {
    Vector u(d, 0.0);
    u[i] = 1.0;
    facets.push_back(u);
  }
  Vector mix(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) mix[i] = (i % 2 == 0 ? 0.7 : -0.4);
  facets.push_back(mix);
  return {NormSpec::l1(), NormSpec::l2(), NormSpec::linf(), NormSpec::sym_polytope(facets)};
}

/// Uniform in the box, pushed radially to norm in [0, 1] with extra mass near 1.
inline Vector random_unit(std::mt19937_64& rng, std::size_t d, const NormSpec& spec) {
  std::uniform_real_distribution<double> box(-1.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    Vector v(d);
    for (double& c : v) c = box(rng);
    const double r = spec.eval(v);
    if (r < 1e-12) continue;
    const double target = unit(rng) < 0.5 ? 1.0 : std::pow(unit(rng), 1.0 / static_cast<double>(d));
    for (double& c : v) c *= target / r;
    if (spec.eval(v) <= 1.0) return v;
  }
}

inline Vector plain_sum(const std::vector<Vector>& vs, std::size_t d) {
  Vector s(d, 0.0);
  for (const auto& v : vs) {
    for (std::size_t c = 0; c < d; ++c) s[c] += v[c];
  }
  return s;
}

/// Max over m of ||sum_{i<m} signs_i v_i||.
inline double signed_prefix_max(const std::vector<Vector>& seq, const std::vector<int>& signs,
                                const NormSpec& spec) {
  if (seq.empty()) return 0.0;
  Vector p(seq.front().size(), 0.0);
  double best = 0.0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t c = 0; c < p.size(); ++c) p[c] += signs[i] * seq[i][c];
    best = std::max(best, spec.eval(p));
  }
  return best;
}

inline double ordered_prefix_max(const std::vector<Vector>& seq,
                                 const std::vector<std::size_t>& order, const NormSpec& spec) {
  if (seq.empty()) return 0.0;
  Vector p(seq.front().size(), 0.0);
  double best = 0.0;
  for (std::size_t idx : order) {
    for (std::size_t c = 0; c < p.size(); ++c) p[c] += seq[idx][c];
    best = std::max(best, spec.eval(p));
  }
  return best;
}

/// Brute-force min over all 2^N signings of the max prefix norm.
inline double brute_best_signing(const std::vector<Vector>& seq, const NormSpec& spec) {
  const std::size_t n = seq.size();
  double best = INFINITY;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    std::vector<int> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (code >> i) & 1U ? 1 : -1;
    best = std::min(best, signed_prefix_max(seq, s, spec));
  }
  return best;
}

/// Zero-sum sequence of N vectors of norm <= 1: N/2 pairs (v, -v) shuffled,
/// plus one extra (w, -w/2, -w/2) triple when N is odd and N >= 3. N = 1 gives
/// the zero vector.
inline std::vector<Vector> random_zero_sum_sequence(std::mt19937_64& rng, std::size_t n,
                                                    std::size_t d, const NormSpec& spec) {
  std::vector<Vector> seq;
  if (n == 1) return {Vector(d, 0.0)};
  std::size_t pairs = n / 2;
  if (n % 2 == 1) {
    Vector w = random_unit(rng, d, spec);
    Vector half = w;
    for (double& c : half) c = -c / 2.0;
    seq.push_back(w);
    seq.push_back(half);
    seq.push_back(half);
    pairs = (n - 3) / 2;
  }
  for (std::size_t p = 0; p < pairs; ++p) {
    Vector v = random_unit(rng, d, spec);
    seq.push_back(v);
    for (double& c : v) c = -c;
    seq.push_back(v);
  }
  std::shuffle(seq.begin(), seq.end(), rng);
  return seq;
}

inline double max_norm(const std::vector<Vector>& seq, const NormSpec& spec) {
  double m = 0.0;
  for (const auto& v : seq) m = std::max(m, spec.eval(v));
  return m;
}

}  // namespace msteinitz::testing

#endif  // MSTEINITZ_TEST_SUPPORT_HPP
