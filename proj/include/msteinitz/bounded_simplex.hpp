// Dense phase-1 simplex for box-constrained equality systems
//   A x = b,  0 <= x_j <= upper_j.
// Nonbasic variables sit at either bound; Bland's rule picks both the
// entering and the leaving variable, so the method terminates on degenerate
// systems.

#ifndef MSTEINITZ_BOUNDED_SIMPLEX_HPP
#define MSTEINITZ_BOUNDED_SIMPLEX_HPP

#include <optional>
#include <vector>

namespace msteinitz {

struct BoxedSystem {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;      // rows x cols, row-major
  std::vector<double> b;      // rows
  std::vector<double> upper;  // cols, each > 0
};

/// A point of the system if the phase-1 optimum (sum of artificials) is at
/// most `tolerance`, otherwise nullopt.
std::optional<std::vector<double>> find_feasible_point(const BoxedSystem& system,
                                                       double tolerance = 1e-9);

}  // namespace msteinitz

#endif  // MSTEINITZ_BOUNDED_SIMPLEX_HPP
