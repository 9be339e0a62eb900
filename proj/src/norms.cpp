#include "msteinitz/norms.hpp"

#include <algorithm>
#include <cmath>

namespace msteinitz {

std::string_view to_string(NormKind kind) {
  switch (kind) {
    case NormKind::L1: return "l1";
    case NormKind::L2: return "l2";
    case NormKind::Linf: return "linf";
    case NormKind::SymPolytope: return "sym_polytope";
    case NormKind::Seminorm: return "seminorm";
  }
  return "unknown";
}

NormKind parse_norm_kind(std::string_view name) {
  if (name == "l1") return NormKind::L1;
  if (name == "l2") return NormKind::L2;
  if (name == "linf") return NormKind::Linf;
  if (name == "sym_polytope") return NormKind::SymPolytope;
  if (name == "seminorm") return NormKind::Seminorm;
  throw ValidationError("unknown norm kind '" + std::string(name) + "'");
}

namespace {

double dot(const Vector& u, std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += u[i] * x[i];
  return s;
}

}  // namespace

NormSpec::NormSpec(NormKind kind, std::vector<Vector> facets)
    : kind_(kind), facets_(std::move(facets)) {
  if (kind_ != NormKind::SymPolytope && kind_ != NormKind::Seminorm) {
    if (!facets_.empty()) throw ValidationError("l_p norms take no facets");
    return;
  }
  if (facets_.empty()) throw ValidationError("polytope body needs at least one facet");
  const std::size_t d = facets_.front().size();
  if (d == 0) throw ValidationError("facet normals must be non-empty");
  for (const auto& u : facets_) {
    if (u.size() != d) throw ValidationError("facet normals differ in length");
    for (double c : u) {
      if (!std::isfinite(c)) throw ValidationError("facet normal is not finite");
    }
  }
  // A bounded body gives every nonzero direction positive norm; probe +-e_i.
  Vector probe(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (double s : {1.0, -1.0}) {
      probe[i] = s;
      if (!(eval(probe) > 0.0)) {
        throw ValidationError("body is unbounded along " + std::string(s > 0 ? "+" : "-") +
                              "e_" + std::to_string(i + 1));
      }
    }
    probe[i] = 0.0;
  }
}

NormSpec NormSpec::sym_polytope(std::vector<Vector> facets) {
  return NormSpec(NormKind::SymPolytope, std::move(facets));
}

NormSpec NormSpec::seminorm(std::vector<Vector> facets) {
  return NormSpec(NormKind::Seminorm, std::move(facets));
}

NormSpec NormSpec::orthant_simplex(std::size_t d, double bound) {
  if (d == 0 || !(bound > 0.0)) throw ValidationError("orthant_simplex needs d >= 1, bound > 0");
  std::vector<Vector> facets;
  for (std::size_t i = 0; i < d; ++i) {
    Vector u(d, 0.0);
    u[i] = -1.0;
    facets.push_back(std::move(u));
  }
  facets.emplace_back(d, 1.0 / bound);
  return seminorm(std::move(facets));
}

std::optional<std::size_t> NormSpec::dim() const {
  if (facets_.empty()) return std::nullopt;
  return facets_.front().size();
}

double NormSpec::eval(std::span<const double> x) const {
  if (auto d = dim(); d && *d != x.size()) {
    throw ValidationError("norm of dimension " + std::to_string(*d) +
                          " applied to a vector of length " + std::to_string(x.size()));
  }
  switch (kind_) {
    case NormKind::L1: {
      double s = 0.0;
      for (double c : x) s += std::abs(c);
      return s;
    }
    case NormKind::L2: {
      double s = 0.0;
      for (double c : x) s += c * c;
      return std::sqrt(s);
    }
    case NormKind::Linf: {
      double s = 0.0;
      for (double c : x) s = std::max(s, std::abs(c));
      return s;
    }
    case NormKind::SymPolytope: {
      double s = 0.0;
      for (const auto& u : facets_) s = std::max(s, std::abs(dot(u, x)));
      return s;
    }
    case NormKind::Seminorm: {
      double s = 0.0;
      for (const auto& u : facets_) s = std::max(s, dot(u, x));
      return s;
    }
  }
  return 0.0;
}

bool unit_check(const NormSpec& spec, const VectorMatrix& a, double tol) {
  for (std::size_t j = 0; j < a.rows(); ++j) {
    for (std::size_t i = 0; i < a.cols(); ++i) {
      if (!(spec.eval(a.at(j, i)) <= 1.0 + tol)) return false;
    }
  }
  return true;
}

double max_prefix_norm(const NormSpec& spec, const VectorMatrix& a) {
  const auto sums = prefix_column_sums(a);
  double best = 0.0;
  for (std::size_t m = 1; m < sums.size(); ++m) best = std::max(best, spec.eval(sums[m]));
  return best;
}

}  // namespace msteinitz
