// Instance generators: random zero-sum matrices of unit vectors and the two
// lower-bound families (l1 norm, non-symmetric seminorm).

#ifndef MSTEINITZ_INSTANCES_HPP
#define MSTEINITZ_INSTANCES_HPP

#include <cstdint>
#include <random>

#include "msteinitz/core.hpp"
#include "msteinitz/norms.hpp"

namespace msteinitz {

/// The single PRNG used for every randomized generator.
using Prng = std::mt19937_64;

/// Uniform in [0, 1) from the top 53 bits; portable across standard libraries.
double uniform01(Prng& rng);

/// Uniform in {0, ..., bound - 1}; rejection keeps it unbiased.
std::size_t uniform_index(Prng& rng, std::size_t bound);

struct Instance {
  VectorMatrix matrix;
  NormSpec norm;
};

/// k x n matrix built from kn/2 pairs (v, -v) dropped on random distinct
/// cells. Each v is drawn uniformly from [-1, 1]^d, divided by its norm if
/// that exceeds 1, and truncated to a multiple of 2^-30, so every partial
/// sum is exact in double precision and sigma_n is exactly zero.
VectorMatrix gen_random_zero_sum(std::size_t d, std::size_t k, std::size_t n,
                                 const NormSpec& spec, std::uint64_t seed);

/// s copies side by side of the d x 2d block whose rows are all
/// (e_1, ..., e_d, -e/d, ..., -e/d), padded with k - d zero rows. l1 norm.
Instance gen_l1_lower(std::size_t d, std::size_t s, std::size_t k);

/// ((d - q)^2 + q^2) / d: the least l1 norm of a column holding q copies of
/// -e/d and d - q distinct basis vectors.
double l1_column_value(std::size_t d, std::size_t q);

struct SeminormLowerParams {
  std::size_t k = 0;  // ceil((2^d - 1) / d)
  std::size_t s = 0;  // k d - (2^d - 1)
};

SeminormLowerParams seminorm_lower_params(std::size_t d);

/// The k x d counterexample for the seminorm of
/// {x : x_i >= -1, sum x_i <= 2^d}: rows 1..d hold 2^(j-1) e_i - e, rows
/// d+1 and d+2 hold -f and -g in their first s cells (f, g the indicator
/// vectors of the first floor(d/2) and the remaining coordinates), every
/// other cell is -e. Built in integer arithmetic; requires 5 <= d <= 16.
Instance gen_seminorm_lower(std::size_t d);

}  // namespace msteinitz

#endif  // MSTEINITZ_INSTANCES_HPP
