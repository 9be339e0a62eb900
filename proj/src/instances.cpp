#include "msteinitz/instances.hpp"

#include <cmath>
#include <numeric>

namespace msteinitz {

double uniform01(Prng& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

std::size_t uniform_index(Prng& rng, std::size_t bound) {
  const std::uint64_t b = bound;
  const std::uint64_t limit = Prng::max() - Prng::max() % b;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return static_cast<std::size_t>(r % b);
}

namespace {

constexpr double kGrid = 0x1p30;

void truncate_to_grid(Vector& v) {
  for (double& c : v) c = std::trunc(c * kGrid) / kGrid;
}

Vector sample_unit(std::size_t d, const NormSpec& spec, Prng& rng) {
  Vector v(d);
  for (;;) {
    for (double& c : v) c = 2.0 * uniform01(rng) - 1.0;
    const double r = spec.eval(v);
    if (r == 0.0) continue;
    if (r > 1.0) {
      for (double& c : v) c /= r;
    }
    truncate_to_grid(v);
    // Truncation can leave a polytope norm marginally above 1.
    while (spec.eval(v) > 1.0) {
      for (double& c : v) c *= 1.0 - 0x1p-20;
      truncate_to_grid(v);
    }
    if (spec.eval(v) > 0.0) return v;
  }
}

}  // namespace

VectorMatrix gen_random_zero_sum(std::size_t d, std::size_t k, std::size_t n,
                                 const NormSpec& spec, std::uint64_t seed) {
  if (d == 0 || k == 0 || n == 0) throw ValidationError("d, k, n must be positive");
  if ((k * n) % 2 != 0) throw ValidationError("k * n must be even");
  if (!spec.symmetric()) throw ValidationError("random instances need a symmetric norm");
  if (auto sd = spec.dim(); sd && *sd != d) throw ValidationError("norm dimension mismatch");

  Prng rng(seed);
  std::vector<std::size_t> cells(k * n);
  std::iota(cells.begin(), cells.end(), std::size_t{0});
  for (std::size_t i = cells.size(); i > 1; --i) {
    std::swap(cells[i - 1], cells[uniform_index(rng, i)]);
  }

  VectorMatrix a(d, k, n);
  for (std::size_t t = 0; t + 1 < cells.size(); t += 2) {
    Vector v = sample_unit(d, spec, rng);
    a.set(cells[t] / n, cells[t] % n, v);
    for (double& c : v) c = -c;
    a.set(cells[t + 1] / n, cells[t + 1] % n, v);
  }
  return a;
}

Instance gen_l1_lower(std::size_t d, std::size_t s, std::size_t k) {
  if (d == 0 || s == 0) throw ValidationError("d and s must be positive");
  if (k < d) throw ValidationError("k must be at least d");
  const std::size_t n = 2 * d * s;
  VectorMatrix a(d, k, n);
  const Vector minus_mean(d, -1.0 / static_cast<double>(d));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t copy = 0; copy < s; ++copy) {
      const std::size_t base = copy * 2 * d;
      for (std::size_t i = 0; i < d; ++i) {
        a.at(j, base + i)[i] = 1.0;
        a.set(j, base + d + i, minus_mean);
      }
    }
  }
  return {std::move(a), NormSpec::l1()};
}

double l1_column_value(std::size_t d, std::size_t q) {
  if (d == 0 || q > d) throw ValidationError("l1_column_value needs 0 <= q <= d, d >= 1");
  const double dd = static_cast<double>(d);
  const double qq = static_cast<double>(q);
  return ((dd - qq) * (dd - qq) + qq * qq) / dd;
}

SeminormLowerParams seminorm_lower_params(std::size_t d) {
  if (d < 1 || d > 62) throw ValidationError("d out of range");
  const std::uint64_t target = (std::uint64_t{1} << d) - 1;
  const std::uint64_t k = (target + d - 1) / d;
  return {static_cast<std::size_t>(k), static_cast<std::size_t>(k * d - target)};
}

Instance gen_seminorm_lower(std::size_t d) {
  if (d < 5) {
    throw ValidationError("the seminorm construction needs d >= 5 (rows d+1, d+2 must exist)");
  }
  if (d > 16) throw ValidationError("d above 16 gives an impractically large instance");
  const auto [k, s] = seminorm_lower_params(d);
  const std::size_t half = d / 2;

  // Integer entries first, so the zero total is exact.
  std::vector<std::vector<std::vector<std::int64_t>>> rows(
      k, std::vector<std::vector<std::int64_t>>(d, std::vector<std::int64_t>(d, -1)));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) rows[j][i][i] += std::int64_t{1} << j;
  }
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t c = 0; c < d; ++c) {
      rows[d][i][c] = c < half ? -1 : 0;
      rows[d + 1][i][c] = c < half ? 0 : -1;
    }
  }

  VectorMatrix a(d, k, d);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      auto out = a.at(j, i);
      for (std::size_t c = 0; c < d; ++c) out[c] = static_cast<double>(rows[j][i][c]);
    }
  }
  return {std::move(a), NormSpec::orthant_simplex(d, std::ldexp(1.0, static_cast<int>(d)))};
}

}  // namespace msteinitz
