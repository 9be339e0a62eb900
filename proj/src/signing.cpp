#include "msteinitz/signing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace msteinitz {

SignMatrix SignMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t k = rows.size();
  const std::size_t n = k == 0 ? 0 : rows.front().size();
  SignMatrix out(k, n);
  for (std::size_t j = 0; j < k; ++j) {
    if (rows[j].size() != n) throw ValidationError("sign matrix rows differ in length");
    for (std::size_t i = 0; i < n; ++i) out.set(j, i, rows[j][i]);
  }
  return out;
}

void SignMatrix::set(std::size_t row, std::size_t col, int sign) {
  if (sign != 1 && sign != -1) throw ValidationError("signs must be -1 or +1");
  signs_[row * n_ + col] = static_cast<std::int8_t>(sign);
}

std::vector<std::vector<int>> SignMatrix::to_rows() const {
  std::vector<std::vector<int>> out(k_, std::vector<int>(n_));
  for (std::size_t j = 0; j < k_; ++j) {
    for (std::size_t i = 0; i < n_; ++i) out[j][i] = at(j, i);
  }
  return out;
}

VectorMatrix apply_signs(const VectorMatrix& b, const SignMatrix& eps) {
  if (eps.rows() != b.rows() || eps.cols() != b.cols()) {
    throw ValidationError("sign matrix shape does not match");
  }
  VectorMatrix out = b;
  for (std::size_t j = 0; j < b.rows(); ++j) {
    for (std::size_t i = 0; i < b.cols(); ++i) {
      if (eps.at(j, i) < 0) {
        for (double& c : out.at(j, i)) c = -c;
      }
    }
  }
  return out;
}

namespace {

constexpr double kUnitTolerance = 1e-9;
// Coefficients this close to +-1 after a step are fixed there.
constexpr double kSnap = 1e-12;
// Below this the anchor is treated as not moving.
constexpr double kNegligibleMove = 1e-14;

class WindowSigner {
 public:
  WindowSigner(const std::vector<Vector>& seq, std::size_t d)
      : seq_(seq), d_(d), signs_(seq.size(), 1), lambda_(seq.size(), 0.0) {}

  std::vector<int> run() {
    for (std::size_t idx = 0; idx < seq_.size(); ++idx) {
      const auto& v = seq_[idx];
      if (std::all_of(v.begin(), v.end(), [](double c) { return c == 0.0; })) continue;
      window_.push_back(idx);
      if (!anchor_) anchor_ = idx;
      while (window_.size() > d_) step();
    }
    for (std::size_t idx : window_) signs_[idx] = lambda_[idx] < 0.0 ? -1 : 1;
    return signs_;
  }

 private:
  // Moves the window coefficients along their dependence until at least one
  // reaches +-1, then fixes those.
  void step() {
    std::vector<Vector> vecs;
    vecs.reserve(window_.size());
    for (std::size_t idx : window_) vecs.push_back(seq_[idx]);
    const Vector alpha = dependence_vector(vecs, d_);

    const double up = max_step(alpha, 1.0);
    const double down = max_step(alpha, -1.0);

    double dir = up <= down ? 1.0 : -1.0;
    const auto apos = std::find(window_.begin(), window_.end(), *anchor_) - window_.begin();
    const double anchor_lambda = lambda_[*anchor_];
    const double anchor_alpha = alpha[static_cast<std::size_t>(apos)];
    if (anchor_lambda != 0.0 && std::abs(anchor_alpha) > kNegligibleMove) {
      dir = (anchor_lambda > 0.0) == (anchor_alpha > 0.0) ? 1.0 : -1.0;
    }
    const double t = dir > 0.0 ? up : down;

    std::vector<std::size_t> kept;
    kept.reserve(window_.size());
    for (std::size_t w = 0; w < window_.size(); ++w) {
      const std::size_t idx = window_[w];
      const double move = dir * alpha[w];
      double& lam = lambda_[idx];
      bool hit = false;
      if (move != 0.0) {
        const double bound = move > 0.0 ? 1.0 : -1.0;
        if ((bound - lam) / move <= t) {
          lam = bound;
          hit = true;
        } else {
          lam += t * move;
        }
      }
      if (!hit && std::abs(lam) >= 1.0 - kSnap) {
        lam = lam > 0.0 ? 1.0 : -1.0;
        hit = true;
      }
      if (hit) {
        signs_[idx] = lam > 0.0 ? 1 : -1;
      } else {
        kept.push_back(idx);
      }
    }
    window_ = std::move(kept);

    if (std::find(window_.begin(), window_.end(), *anchor_) == window_.end()) {
      anchor_.reset();
      double best = -1.0;
      for (std::size_t idx : window_) {
        if (std::abs(lambda_[idx]) > best) {
          best = std::abs(lambda_[idx]);
          anchor_ = idx;
        }
      }
    }
  }

  // Largest t >= 0 keeping lambda + t * dir * alpha inside [-1, 1].
  double max_step(const Vector& alpha, double dir) const {
    double t = std::numeric_limits<double>::infinity();
    for (std::size_t w = 0; w < window_.size(); ++w) {
      const double move = dir * alpha[w];
      if (move == 0.0) continue;
      const double lam = lambda_[window_[w]];
      t = std::min(t, move > 0.0 ? (1.0 - lam) / move : (-1.0 - lam) / move);
    }
    return t;
  }

  const std::vector<Vector>& seq_;
  std::size_t d_;
  std::vector<int> signs_;
  std::vector<double> lambda_;
  std::vector<std::size_t> window_;
  std::optional<std::size_t> anchor_;
};

}  // namespace

std::vector<int> bg_signs(const std::vector<Vector>& seq, std::size_t d,
                          const NormSpec& spec) {
  if (!spec.symmetric()) {
    throw ValidationError("sign assignment requires a symmetric norm");
  }
  if (d == 0) throw ValidationError("dimension must be positive");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i].size() != d) {
      throw ValidationError("sequence element " + std::to_string(i) + " has wrong dimension");
    }
    if (!(spec.eval(seq[i]) <= 1.0 + kUnitTolerance)) {
      throw ValidationError("sequence element " + std::to_string(i) + " has norm above 1");
    }
  }
  return WindowSigner(seq, d).run();
}

std::vector<Vector> serialize_column_major(const VectorMatrix& b) {
  std::vector<Vector> seq;
  seq.reserve(b.rows() * b.cols());
  for (std::size_t i = 0; i < b.cols(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) seq.push_back(b.entry(j, i));
  }
  return seq;
}

SignMatrix sign_assign_matrix(const VectorMatrix& b, const NormSpec& spec) {
  const auto signs = bg_signs(serialize_column_major(b), b.dim(), spec);
  SignMatrix eps(b.rows(), b.cols());
  std::size_t pos = 0;
  for (std::size_t i = 0; i < b.cols(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) eps.set(j, i, signs[pos++]);
  }
  return eps;
}

std::vector<int> greedy_signs(const std::vector<Vector>& seq, const NormSpec& spec) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  Vector prefix;
  Vector plus;
  Vector minus;
  for (const auto& v : seq) {
    if (prefix.empty()) prefix.assign(v.size(), 0.0);
    if (v.size() != prefix.size()) throw ValidationError("greedy_signs: dimension mismatch");
    plus = prefix;
    minus = prefix;
    for (std::size_t c = 0; c < v.size(); ++c) {
      plus[c] += v[c];
      minus[c] -= v[c];
    }
    if (spec.eval(minus) < spec.eval(plus)) {
      signs.push_back(-1);
      prefix.swap(minus);
    } else {
      signs.push_back(1);
      prefix.swap(plus);
    }
  }
  return signs;
}

}  // namespace msteinitz
