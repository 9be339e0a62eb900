// Exhaustive ground truth for small instances. Enumeration is lexicographic
// (first row / first cell most significant) and ties keep the first
// minimizer, so witnesses are the lexicographically smallest ones.

#ifndef MSTEINITZ_ORACLES_HPP
#define MSTEINITZ_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "msteinitz/core.hpp"
#include "msteinitz/norms.hpp"
#include "msteinitz/signing.hpp"

namespace msteinitz {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

struct ExactU {
  double value = 0.0;
  RowPermutations witness;
};

struct ExactV {
  double value = 0.0;
  SignMatrix witness;
};

struct ColumnOneMin {
  double value = 0.0;
  std::vector<std::size_t> choice;  // column taken from each row
};

/// min over row-permuted copies C of max_m ||sigma_m(C)||, over all (n!)^k
/// copies. Throws BudgetExceeded if (n!)^k > budget.
ExactU exact_u(const VectorMatrix& a, const NormSpec& spec,
               std::uint64_t budget = kDefaultOracleBudget);

/// min over sign matrices eps of max_m ||sigma_m(B^eps)||, over all 2^(kn)
/// sign matrices (-1 before +1, row-major cells). Throws BudgetExceeded if
/// 2^(kn) > budget.
ExactV exact_v(const VectorMatrix& b, const NormSpec& spec,
               std::uint64_t budget = kDefaultOracleBudget);

/// min ||sum_j a_{c_j}^j|| over one column choice per row: the least
/// possible ||sigma_1(C)||. Throws BudgetExceeded if n^k > budget.
ColumnOneMin column_one_min(const VectorMatrix& a, const NormSpec& spec,
                            std::uint64_t budget = kDefaultOracleBudget);

}  // namespace msteinitz

#endif  // MSTEINITZ_ORACLES_HPP
