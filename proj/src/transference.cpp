#include "msteinitz/transference.hpp"

#include <algorithm>

#include "msteinitz/steinitz.hpp"

namespace msteinitz {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::PairingIteration: return "pairing_iteration";
    case Method::ColumnSteinitz: return "column_steinitz";
    case Method::BestOf: return "best_of";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "pairing_iteration" || name == "pairing") return Method::PairingIteration;
  if (name == "column_steinitz" || name == "column-gs") return Method::ColumnSteinitz;
  if (name == "best_of" || name == "auto") return Method::BestOf;
  throw ValidationError("unknown method '" + std::string(name) + "'");
}

VectorMatrix difference_matrix(const VectorMatrix& a) {
  const std::size_t n = a.cols();
  const std::size_t p = n / 2;
  const std::size_t cols = (n + 1) / 2;
  VectorMatrix b(a.dim(), a.rows(), cols);
  for (std::size_t j = 0; j < a.rows(); ++j) {
    for (std::size_t i = 0; i < p; ++i) {
      auto first = a.at(j, 2 * i);
      auto second = a.at(j, 2 * i + 1);
      auto out = b.at(j, i);
      for (std::size_t c = 0; c < a.dim(); ++c) out[c] = 0.5 * (first[c] - second[c]);
    }
    if (n % 2 == 1) b.set(j, p, a.at(j, n - 1));
  }
  return b;
}

RowPermutations pairing_transform(const VectorMatrix& a, const SignMatrix& eps) {
  const std::size_t n = a.cols();
  const std::size_t p = n / 2;
  if (eps.rows() != a.rows() || eps.cols() != (n + 1) / 2) {
    throw ValidationError("sign matrix must be k x ceil(n/2)");
  }
  std::vector<std::vector<std::size_t>> perms(a.rows(), std::vector<std::size_t>(n));
  for (std::size_t j = 0; j < a.rows(); ++j) {
    auto& row = perms[j];
    for (std::size_t i = 0; i < p; ++i) {
      const bool keep = eps.at(j, i) > 0;
      row[i] = keep ? 2 * i : 2 * i + 1;
      row[n - 1 - i] = keep ? 2 * i + 1 : 2 * i;
    }
    if (n % 2 == 1) row[p] = n - 1;
  }
  return RowPermutations(std::move(perms));
}

double rearrangement_bound(Method method, const NormSpec& spec, std::size_t d,
                           std::size_t k) {
  const double dk = static_cast<double>(d * k);
  const double pairing = 4.0 * static_cast<double>(d) - 2.0;
  if (!spec.symmetric()) return dk;
  switch (method) {
    case Method::PairingIteration: return pairing;
    case Method::ColumnSteinitz: return dk;
    case Method::BestOf: return std::min(dk, pairing);
  }
  return dk;
}

namespace {

struct PairingOutcome {
  std::vector<PassRecord> passes;
  RowPermutations permutations;
  double max_prefix = 0.0;
};

PairingOutcome run_pairing(const VectorMatrix& a, const NormSpec& spec,
                           const RearrangeOptions& options) {
  const double target = 4.0 * static_cast<double>(a.dim()) - 2.0 + options.target_slack;
  PairingOutcome out;
  out.permutations = RowPermutations::identity(a.rows(), a.cols());
  VectorMatrix current = a;
  double x = max_prefix_norm(spec, current);

  while (out.passes.size() < options.max_iters && x > target) {
    const VectorMatrix b = difference_matrix(current);
    const SignMatrix eps = sign_assign_matrix(b, spec);
    const double v = max_prefix_norm(spec, apply_signs(b, eps));
    const RowPermutations step = pairing_transform(current, eps);
    VectorMatrix next = apply_permutations(current, step);
    const double x_next = max_prefix_norm(spec, next);
    out.passes.push_back({x, v, x_next});

    const bool improved = x_next < x;
    if (improved) {
      out.permutations = compose(out.permutations, step);
      current = std::move(next);
    }
    if (!improved || x - x_next < 1e-12) {
      x = std::min(x, x_next);
      break;
    }
    x = x_next;
  }
  out.max_prefix = x;
  return out;
}

}  // namespace

RearrangementReport rearrange(const VectorMatrix& a, const NormSpec& spec,
                              const RearrangeOptions& options) {
  if (auto d = spec.dim(); d && *d != a.dim()) {
    throw ValidationError("norm dimension does not match the matrix");
  }
  if (!unit_check(spec, a, 1e-9)) {
    throw ValidationError("some entry has norm above 1");
  }
  const double residual = spec.eval(prefix_column_sum(a, a.cols()));
  if (!(residual <= options.zero_tolerance)) {
    throw ValidationError("matrix entries do not sum to zero (norm " +
                          std::to_string(residual) + ")");
  }

  Method method = options.method;
  if (!spec.symmetric()) {
    if (method == Method::PairingIteration) {
      throw ValidationError("the pairing iteration needs a symmetric norm");
    }
    method = Method::ColumnSteinitz;
  }

  RearrangementReport report;
  report.method = method;
  report.bound_used = rearrangement_bound(method, spec, a.dim(), a.rows());
  report.target_slack = options.target_slack;
  report.initial_max_prefix = max_prefix_norm(spec, a);

  if (method != Method::ColumnSteinitz) {
    PairingOutcome pairing = run_pairing(a, spec, options);
    report.iterations = pairing.passes.size();
    report.per_pass = std::move(pairing.passes);
    report.selected = Method::PairingIteration;
    report.permutations = std::move(pairing.permutations);
  }
  if (method != Method::PairingIteration) {
    RowPermutations column = column_steinitz(a, spec, options.zero_tolerance);
    const bool take_column =
        method == Method::ColumnSteinitz ||
        max_prefix_norm(spec, apply_permutations(a, column)) <
            max_prefix_norm(spec, apply_permutations(a, report.permutations));
    if (take_column) {
      report.selected = Method::ColumnSteinitz;
      report.permutations = std::move(column);
    }
  }
  report.final_max_prefix = max_prefix_norm(spec, apply_permutations(a, report.permutations));
  return report;
}

}  // namespace msteinitz
