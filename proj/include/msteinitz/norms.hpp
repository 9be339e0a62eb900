// Norms and non-symmetric seminorms given as Minkowski functionals
// ||x||_K = min{t >= 0 : x in tK} of the supported bodies K.

#ifndef MSTEINITZ_NORMS_HPP
#define MSTEINITZ_NORMS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "msteinitz/core.hpp"

namespace msteinitz {

enum class NormKind { L1, L2, Linf, SymPolytope, Seminorm };

std::string_view to_string(NormKind kind);
NormKind parse_norm_kind(std::string_view name);

class NormSpec {
 public:
  static NormSpec l1() { return NormSpec(NormKind::L1, {}); }
  static NormSpec l2() { return NormSpec(NormKind::L2, {}); }
  static NormSpec linf() { return NormSpec(NormKind::Linf, {}); }

  /// K = {x : |<u, x>| <= 1 for every facet normal u}.
  static NormSpec sym_polytope(std::vector<Vector> facets);

  /// K = {x : <u, x> <= 1 for every facet normal u}.
  static NormSpec seminorm(std::vector<Vector> facets);

  /// The body {x : x_i >= -1 for all i, sum_i x_i <= bound}, i.e. the
  /// seminorm with facet normals -e_1, ..., -e_d and e / bound.
  static NormSpec orthant_simplex(std::size_t d, double bound);

  NormKind kind() const { return kind_; }
  bool symmetric() const { return kind_ != NormKind::Seminorm; }
  const std::vector<Vector>& facets() const { return facets_; }

  /// Ambient dimension for facet-defined bodies; empty for the l_p norms.
  std::optional<std::size_t> dim() const;

  double eval(std::span<const double> x) const;

  bool operator==(const NormSpec&) const = default;

 private:
  NormSpec(NormKind kind, std::vector<Vector> facets);

  NormKind kind_;
  std::vector<Vector> facets_;
};

inline double norm_eval(const NormSpec& spec, std::span<const double> x) {
  return spec.eval(x);
}

/// True iff every entry of `a` has norm at most 1 + tol.
bool unit_check(const NormSpec& spec, const VectorMatrix& a, double tol);

/// max over m in [1, n] of ||sigma_m(a)||; 0 when n = 0.
double max_prefix_norm(const NormSpec& spec, const VectorMatrix& a);

}  // namespace msteinitz

#endif  // MSTEINITZ_NORMS_HPP
