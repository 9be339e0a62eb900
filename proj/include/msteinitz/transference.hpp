// Row-wise rearrangement of a zero-sum matrix of unit vectors with every
// prefix column sum bounded by min{dk, 4d - 2} (symmetric norms) or dk
// (non-symmetric seminorms).
//
// The pairing pass: pair columns (2i-1, 2i) of the current ordering, sign
// the half-differences b_i^j = (a_{2i-1}^j - a_{2i}^j) / 2, and send each
// pair to the mirrored positions i and n+1-i, the signed-first member in
// front. For every m the new prefix sum is (+-) half an even prefix sum of
// the old ordering plus a prefix sum of the signed difference matrix, so one
// pass maps a maximal prefix norm x to at most x/2 + V where V <= 2d - 1 is
// the signing's maximal prefix norm. Iterating contracts x towards 4d - 2.

#ifndef MSTEINITZ_TRANSFERENCE_HPP
#define MSTEINITZ_TRANSFERENCE_HPP

#include <string_view>
#include <vector>

#include "msteinitz/core.hpp"
#include "msteinitz/norms.hpp"
#include "msteinitz/signing.hpp"

namespace msteinitz {

enum class Method { PairingIteration, ColumnSteinitz, BestOf };

std::string_view to_string(Method method);
Method parse_method(std::string_view name);

struct RearrangeOptions {
  /// BestOf falls back to ColumnSteinitz for non-symmetric seminorms.
  Method method = Method::BestOf;
  std::size_t max_iters = 64;
  double target_slack = 1e-6;
  double zero_tolerance = 1e-9;
};

struct PassRecord {
  double input_max_prefix = 0.0;   // x_t
  double achieved_v = 0.0;         // max_m ||sigma_m(B_t^eps)||
  double output_max_prefix = 0.0;  // x_{t+1}
  bool operator==(const PassRecord&) const = default;
};

struct RearrangementReport {
  Method method = Method::BestOf;
  /// The method whose permutations were returned.
  Method selected = Method::PairingIteration;
  std::size_t iterations = 0;
  std::vector<PassRecord> per_pass;
  double initial_max_prefix = 0.0;
  double final_max_prefix = 0.0;
  double bound_used = 0.0;
  double target_slack = 0.0;
  RowPermutations permutations;
  bool operator==(const RearrangementReport&) const = default;
};

/// Even n = 2p: k x p with b_i^j = (a_{2i-1}^j - a_{2i}^j) / 2. Odd n = 2p+1:
/// one more column holding the last column of a.
VectorMatrix difference_matrix(const VectorMatrix& a);

/// Row permutation sending a_{2i-1}^j, a_{2i}^j to positions i, n+1-i when
/// eps(j, i) = +1 and swapped when eps(j, i) = -1. For odd n the last
/// column goes to the middle position regardless of its sign.
RowPermutations pairing_transform(const VectorMatrix& a, const SignMatrix& eps);

/// The theoretical bound for the method on this shape and norm.
double rearrangement_bound(Method method, const NormSpec& spec, std::size_t d,
                           std::size_t k);

RearrangementReport rearrange(const VectorMatrix& a, const NormSpec& spec,
                              const RearrangeOptions& options = {});

}  // namespace msteinitz

#endif  // MSTEINITZ_TRANSFERENCE_HPP
