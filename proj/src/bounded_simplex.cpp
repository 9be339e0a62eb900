#include "msteinitz/bounded_simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace msteinitz {

namespace {

constexpr double kReducedCostEps = 1e-11;
constexpr double kPivotEps = 1e-11;
constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Status : unsigned char { AtLower, AtUpper, Basic };

}  // namespace

std::optional<std::vector<double>> find_feasible_point(const BoxedSystem& sys,
                                                       double tolerance) {
  const std::size_t m = sys.rows;
  const std::size_t n = sys.cols;
  if (sys.a.size() != m * n || sys.b.size() != m || sys.upper.size() != n) {
    throw std::invalid_argument("find_feasible_point: inconsistent system shape");
  }
  const std::size_t total = n + m;  // structural columns, then one artificial per row

  std::vector<double> tab(m * total, 0.0);
  std::vector<double> beta(m);
  std::vector<std::size_t> basis(m);
  std::vector<double> upper(total, kInf);
  std::vector<Status> status(total, Status::AtLower);
  std::vector<char> retired(total, 0);
  std::copy(sys.upper.begin(), sys.upper.end(), upper.begin());

  auto cell = [&](std::size_t i, std::size_t j) -> double& { return tab[i * total + j]; };

  for (std::size_t i = 0; i < m; ++i) {
    const double s = sys.b[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) cell(i, j) = s * sys.a[i * n + j];
    cell(i, n + i) = 1.0;
    beta[i] = s * sys.b[i];
    basis[i] = n + i;
    status[n + i] = Status::Basic;
  }

  // Phase-1 reduced costs: minimize the sum of artificials.
  std::vector<double> cost(total, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) cost[j] -= cell(i, j);
  }

  const std::size_t max_iterations = 200 * (total + 10);
  for (std::size_t iter = 0;; ++iter) {
    if (iter > max_iterations) {
      throw std::runtime_error("find_feasible_point: iteration limit reached");
    }

    std::size_t enter = total;
    for (std::size_t j = 0; j < total; ++j) {
      if (status[j] == Status::Basic || retired[j]) continue;
      if ((status[j] == Status::AtLower && cost[j] < -kReducedCostEps) ||
          (status[j] == Status::AtUpper && cost[j] > kReducedCostEps)) {
        enter = j;
        break;
      }
    }
    if (enter == total) break;

    const double delta = status[enter] == Status::AtLower ? 1.0 : -1.0;
    double theta = upper[enter];
    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      const double coef = delta * cell(i, enter);
      double limit;
      if (coef > kPivotEps) {
        limit = beta[i] / coef;
      } else if (coef < -kPivotEps && upper[basis[i]] < kInf) {
        limit = (upper[basis[i]] - beta[i]) / -coef;
      } else {
        continue;
      }
      limit = std::max(limit, 0.0);
      if (limit < theta || (limit == theta && (leave == m || basis[i] < basis[leave]))) {
        theta = limit;
        leave = i;
      }
    }

    for (std::size_t i = 0; i < m; ++i) beta[i] -= theta * delta * cell(i, enter);

    if (leave == m) {
      status[enter] = status[enter] == Status::AtLower ? Status::AtUpper : Status::AtLower;
      continue;
    }

    const std::size_t out = basis[leave];
    const Status out_status =
        delta * cell(leave, enter) > 0.0 ? Status::AtLower : Status::AtUpper;
    const double enter_value = delta > 0.0 ? theta : upper[enter] - theta;

    const double piv = cell(leave, enter);
    for (std::size_t j = 0; j < total; ++j) cell(leave, j) /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      const double f = cell(i, enter);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < total; ++j) cell(i, j) -= f * cell(leave, j);
    }
    const double fc = cost[enter];
    if (fc != 0.0) {
      for (std::size_t j = 0; j < total; ++j) cost[j] -= fc * cell(leave, j);
    }

    beta[leave] = enter_value;
    basis[leave] = enter;
    status[enter] = Status::Basic;
    status[out] = out_status;
    if (out >= n) retired[out] = 1;
    for (std::size_t i = 0; i < m; ++i) {
      beta[i] = std::clamp(beta[i], 0.0, upper[basis[i]]);
    }
  }

  double infeasibility = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= n) infeasibility += beta[i];
  }
  if (infeasibility > tolerance) return std::nullopt;

  std::vector<double> x(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    if (status[j] == Status::AtUpper) x[j] = upper[j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] = beta[i];
  }

  // Guard against drift in the tableau.
  for (std::size_t i = 0; i < m; ++i) {
    double r = -sys.b[i];
    double scale = std::abs(sys.b[i]);
    for (std::size_t j = 0; j < n; ++j) {
      r += sys.a[i * n + j] * x[j];
      scale = std::max(scale, std::abs(sys.a[i * n + j]));
    }
    if (std::abs(r) > 1e-7 * (1.0 + scale)) return std::nullopt;
  }
  return x;
}

}  // namespace msteinitz
