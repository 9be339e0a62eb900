#include "msteinitz/oracles.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace msteinitz {

namespace {

// base^exp, saturating at max + 1 so the result can be compared to a budget.
std::uint64_t capped_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

std::uint64_t capped_factorial(std::size_t n, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (r > cap / i) return cap + 1;
    r *= i;
  }
  return r;
}

void check_budget(std::uint64_t count, std::uint64_t budget, const char* what) {
  if (count > budget) {
    throw BudgetExceeded(std::string(what) + ": search space exceeds budget of " +
                         std::to_string(budget));
  }
}

}  // namespace

ExactU exact_u(const VectorMatrix& a, const NormSpec& spec, std::uint64_t budget) {
  const std::size_t d = a.dim();
  const std::size_t k = a.rows();
  const std::size_t n = a.cols();
  const std::uint64_t per_row = capped_factorial(n, budget);
  check_budget(capped_power(per_row, k, budget), budget, "exact_u");

  ExactU best;
  if (k == 0 || n == 0) {
    best.witness = RowPermutations::identity(k, n);
    return best;
  }
  best.value = std::numeric_limits<double>::infinity();

  std::vector<std::vector<std::size_t>> perms(k, std::vector<std::size_t>(n));
  for (auto& p : perms) std::iota(p.begin(), p.end(), std::size_t{0});

  // partial[j][m * d + c]: rows 0..j, each summed over its first m + 1
  // entries left to right, then added top to bottom (the prefix_column_sums
  // order).
  std::vector<std::vector<double>> partial(k, std::vector<double>(n * d));
  Vector acc(d);
  auto rebuild = [&](std::size_t from) {
    for (std::size_t j = from; j < k; ++j) {
      std::fill(acc.begin(), acc.end(), 0.0);
      for (std::size_t m = 0; m < n; ++m) {
        auto e = a.at(j, perms[j][m]);
        for (std::size_t c = 0; c < d; ++c) {
          acc[c] += e[c];
          partial[j][m * d + c] = (j == 0 ? 0.0 : partial[j - 1][m * d + c]) + acc[c];
        }
      }
    }
  };
  rebuild(0);

  const auto& totals = partial[k - 1];
  for (;;) {
    double worst = 0.0;
    for (std::size_t m = 0; m < n && worst < best.value; ++m) {
      worst = std::max(worst, spec.eval(std::span<const double>(totals.data() + m * d, d)));
    }
    if (worst < best.value) {
      best.value = worst;
      best.witness = RowPermutations(perms);
    }

    // Odometer over rows, last row fastest; next_permutation wraps a row
    // back to the identity when it returns false.
    std::size_t pos = k;
    while (pos > 0 && !std::next_permutation(perms[pos - 1].begin(), perms[pos - 1].end())) {
      --pos;
    }
    if (pos == 0) break;
    rebuild(pos - 1);
  }
  return best;
}

ExactV exact_v(const VectorMatrix& b, const NormSpec& spec, std::uint64_t budget) {
  const std::size_t cells = b.rows() * b.cols();
  check_budget(capped_power(2, cells, budget), budget, "exact_v");

  ExactV best;
  best.value = std::numeric_limits<double>::infinity();
  const std::uint64_t total = std::uint64_t{1} << cells;
  SignMatrix eps(b.rows(), b.cols());
  for (std::uint64_t code = 0; code < total; ++code) {
    for (std::size_t p = 0; p < cells; ++p) {
      const bool plus = (code >> (cells - 1 - p)) & 1U;
      eps.set(p / b.cols(), p % b.cols(), plus ? 1 : -1);
    }
    const double value = max_prefix_norm(spec, apply_signs(b, eps));
    if (value < best.value) {
      best.value = value;
      best.witness = eps;
    }
  }
  return best;
}

ColumnOneMin column_one_min(const VectorMatrix& a, const NormSpec& spec,
                            std::uint64_t budget) {
  const std::size_t d = a.dim();
  const std::size_t k = a.rows();
  const std::size_t n = a.cols();
  check_budget(capped_power(n, k, budget), budget, "column_one_min");

  ColumnOneMin best;
  best.value = std::numeric_limits<double>::infinity();
  if (n == 0) return best;
  if (k == 0) {
    best.value = 0.0;
    return best;
  }

  std::vector<std::size_t> choice(k, 0);
  std::vector<Vector> partial(k, Vector(d));
  auto rebuild = [&](std::size_t from) {
    for (std::size_t j = from; j < k; ++j) {
      auto e = a.at(j, choice[j]);
      for (std::size_t c = 0; c < d; ++c) {
        partial[j][c] = (j == 0 ? 0.0 : partial[j - 1][c]) + e[c];
      }
    }
  };
  rebuild(0);
  for (;;) {
    const double value = spec.eval(partial[k - 1]);
    if (value < best.value) {
      best.value = value;
      best.choice = choice;
    }
    std::size_t pos = k;
    while (pos > 0 && choice[pos - 1] + 1 == n) {
      choice[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
    ++choice[pos - 1];
    rebuild(pos - 1);
  }
  return best;
}

}  // namespace msteinitz
