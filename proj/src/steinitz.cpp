#include "msteinitz/steinitz.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "msteinitz/bounded_simplex.hpp"

namespace msteinitz {

namespace {

// {lambda in [0,1]^I : sum lambda = |I| - d, sum lambda_i a_i = 0}.
BoxedSystem certificate_system(const std::vector<Vector>& seq,
                               const std::vector<std::size_t>& members, std::size_t d) {
  BoxedSystem sys;
  sys.rows = d + 1;
  sys.cols = members.size();
  sys.a.assign(sys.rows * sys.cols, 0.0);
  sys.b.assign(sys.rows, 0.0);
  sys.upper.assign(sys.cols, 1.0);
  sys.b[0] = static_cast<double>(members.size()) - static_cast<double>(d);
  for (std::size_t c = 0; c < members.size(); ++c) {
    sys.a[c] = 1.0;
    const auto& v = seq[members[c]];
    for (std::size_t r = 0; r < d; ++r) sys.a[(r + 1) * sys.cols + c] = v[r];
  }
  return sys;
}

}  // namespace

std::vector<std::size_t> gs_reorder(const std::vector<Vector>& seq, std::size_t d,
                                    const NormSpec& spec, double zero_tolerance) {
  const std::size_t n = seq.size();
  Vector total(d, 0.0);
  for (const auto& v : seq) {
    if (v.size() != d) throw ValidationError("gs_reorder: dimension mismatch");
    for (std::size_t c = 0; c < d; ++c) total[c] += v[c];
  }
  if (!(spec.eval(total) <= zero_tolerance)) {
    throw ValidationError("gs_reorder: sequence does not sum to zero (norm " +
                          std::to_string(spec.eval(total)) + ")");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (n <= d) return order;

  std::vector<std::size_t> members = order;
  auto lambda = find_feasible_point(certificate_system(seq, members, d));
  if (!lambda) throw std::runtime_error("gs_reorder: no certificate for the full sequence");

  for (std::size_t t = n; t > d; --t) {
    std::vector<std::size_t> candidates(t);
    std::iota(candidates.begin(), candidates.end(), std::size_t{0});
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](std::size_t x, std::size_t y) { return (*lambda)[x] < (*lambda)[y]; });

    bool removed = false;
    for (std::size_t pos : candidates) {
      std::vector<std::size_t> rest;
      rest.reserve(t - 1);
      for (std::size_t c = 0; c < t; ++c) {
        if (c != pos) rest.push_back(members[c]);
      }
      auto next = find_feasible_point(certificate_system(seq, rest, d));
      if (!next) continue;
      order[t - 1] = members[pos];
      members = std::move(rest);
      lambda = std::move(next);
      removed = true;
      break;
    }
    if (!removed) {
      throw std::runtime_error("gs_reorder: no removable element at size " +
                               std::to_string(t));
    }
  }
  std::sort(members.begin(), members.end());
  std::copy(members.begin(), members.end(), order.begin());
  return order;
}

std::vector<Vector> column_sums(const VectorMatrix& a) {
  std::vector<Vector> sums(a.cols(), Vector(a.dim(), 0.0));
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = 0; j < a.rows(); ++j) {
      auto e = a.at(j, i);
      for (std::size_t c = 0; c < a.dim(); ++c) sums[i][c] += e[c];
    }
  }
  return sums;
}

RowPermutations column_steinitz(const VectorMatrix& a, const NormSpec& spec,
                                double zero_tolerance) {
  auto order = gs_reorder(column_sums(a), a.dim(), spec, zero_tolerance);
  return RowPermutations::uniform(a.rows(), std::move(order));
}

}  // namespace msteinitz
