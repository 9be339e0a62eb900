// Steinitz reordering of a zero-sum sequence with prefix bound
// d * max ||a_i||, and its column-sum lift to matrices with bound d * k.
// Both hold for non-symmetric seminorms as well as for norms.

#ifndef MSTEINITZ_STEINITZ_HPP
#define MSTEINITZ_STEINITZ_HPP

#include <vector>

#include "msteinitz/core.hpp"
#include "msteinitz/norms.hpp"

namespace msteinitz {

/// Order in which to visit `seq` (order[p] is the index placed at position p)
/// such that every prefix sum has norm at most d * max_i ||a_i||.
///
/// Peels nested index sets I_N, ..., I_d. I_t carries a certificate
/// lambda: I_t -> [0, 1] with sum lambda = t - d and sum lambda_i a_i = 0, so
/// the sum over I_t equals sum (1 - lambda_i) a_i, a combination with
/// nonnegative weights totalling d. Each step removes one element whose
/// removal keeps such a certificate; the removed element goes to position t.
/// Candidates are tried in increasing certificate weight, feasibility being
/// decided by a phase-1 simplex.
///
/// Throws ValidationError when ||sum a_i|| > zero_tolerance.
std::vector<std::size_t> gs_reorder(const std::vector<Vector>& seq, std::size_t d,
                                    const NormSpec& spec, double zero_tolerance = 1e-9);

/// Column sums s_i = sum_j a_i^j reordered with gs_reorder; the same column
/// order is used for every row. Prefix bound d * k for unit entries.
RowPermutations column_steinitz(const VectorMatrix& a, const NormSpec& spec,
                                double zero_tolerance = 1e-9);

/// s_i = sum over rows of column i, rows added top to bottom.
std::vector<Vector> column_sums(const VectorMatrix& a);

}  // namespace msteinitz

#endif  // MSTEINITZ_STEINITZ_HPP
