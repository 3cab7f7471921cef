#include "lowlying/dimension.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "lowlying/errors.hpp"

namespace lowlying::dimension {

namespace {

constexpr int kGrid = 9;
constexpr int kMaxDepth = 60;

void require_depth(std::int64_t alphabet, int depth) {
  if (alphabet < 1) throw DomainError("alphabet bound must be >= 1");
  if (depth < 1) throw DomainError("depth must be >= 1");
  if (depth > kMaxDepth || std::pow(static_cast<double>(alphabet), depth) > kMaxCylinders) {
    throw CapExceeded("depth " + std::to_string(depth) + " exceeds the cylinder budget A^k <= 1e7 (max depth " +
                      std::to_string(max_depth(alphabet)) + ")");
  }
}

/// Sums needed for one bisection step, evaluated at four exponents at once.
struct Probe {
  std::array<double, 2> ratio_s{};  // exponents for the min / max ratio roots
  std::array<double, 2> dist_s{};   // exponents for the distortion roots

  std::array<std::array<double, kGrid>, 2> fk{};
  std::array<std::array<double, kGrid>, 2> fk1{};
  std::array<double, 2> z{};
};

struct ProbeWalker {
  std::int64_t alphabet;
  int depth;
  Probe& probe;
  std::array<double, kGrid> xs;

  void accumulate(std::array<std::array<double, kGrid>, 2>& f, double q, double qprev, std::array<double, kGrid>& logs) {
    for (int g = 0; g < kGrid; ++g) logs[g] = std::log(q + xs[g] * qprev);
    for (int i = 0; i < 2; ++i) {
      double e = -2.0 * probe.ratio_s[i];
      for (int g = 0; g < kGrid; ++g) f[i][g] += std::exp(e * logs[g]);
    }
  }

  void descend(double q, double qprev, int level) {
    std::array<double, kGrid> logs;
    if (level == depth - 1) accumulate(probe.fk1, q, qprev, logs);
    if (level == depth) {
      accumulate(probe.fk, q, qprev, logs);
      // log |I_w| = -(log q + log(q + q')), the x = 0 and x = 1 grid points.
      double log_inv = logs[0] + logs[kGrid - 1];
      for (int j = 0; j < 2; ++j) probe.z[j] += std::exp(-probe.dist_s[j] * log_inv);
      return;
    }
    for (std::int64_t a = 1; a <= alphabet; ++a) descend(static_cast<double>(a) * q + qprev, q, level + 1);
  }
};

/// Values whose zeros are the four bracket endpoints; each is decreasing in s.
std::array<double, 4> evaluate(std::int64_t alphabet, int depth, const std::array<double, 4>& s) {
  Probe probe;
  probe.ratio_s = {s[0], s[1]};
  probe.dist_s = {s[2], s[3]};
  ProbeWalker walker{alphabet, depth, probe, {}};
  for (int g = 0; g < kGrid; ++g) walker.xs[g] = static_cast<double>(g) / (kGrid - 1);
  walker.descend(1.0, 0.0, 0);
  double lo_ratio = HUGE_VAL;
  double hi_ratio = 0;
  for (int g = 0; g < kGrid; ++g) {
    lo_ratio = std::min(lo_ratio, probe.fk[0][g] / probe.fk1[0][g]);
    hi_ratio = std::max(hi_ratio, probe.fk[1][g] / probe.fk1[1][g]);
  }
  return {lo_ratio - 1.0, hi_ratio - 1.0, std::pow(kDistortion, -s[2]) * probe.z[0] - 1.0,
          std::pow(kDistortion, s[3]) * probe.z[1] - 1.0};
}

}  // namespace

Rational cylinder_length(const cf::Word& w) {
  if (w.empty()) throw DomainError("cylinder of the empty word");
  auto m = cf::word_to_matrix(w);
  // For [0; a_1, ..., a_k] the top row holds (q_k, q_{k-1}).
  Rational q(static_cast<long long>(narrow64(m.a)));
  Rational qprev(static_cast<long long>(narrow64(m.b)));
  return Rational(1) / (q * (q + qprev));
}

double pressure_sum(std::int64_t alphabet, int depth, double s) {
  require_depth(alphabet, depth);
  double total = 0;
  auto walk = [&](auto&& self, double q, double qprev, int level) -> void {
    if (level == depth) {
      total += std::pow(q * (q + qprev), -s);
      return;
    }
    for (std::int64_t a = 1; a <= alphabet; ++a) self(self, static_cast<double>(a) * q + qprev, q, level + 1);
  };
  walk(walk, 1.0, 0.0, 0);
  return total;
}

int max_depth(std::int64_t alphabet) {
  if (alphabet < 1) throw DomainError("alphabet bound must be >= 1");
  if (alphabet == 1) return 40;
  int k = 0;
  double cylinders = 1;
  while (cylinders * static_cast<double>(alphabet) <= kMaxCylinders) {
    cylinders *= static_cast<double>(alphabet);
    ++k;
  }
  return k;
}

DimensionEstimate estimate(std::int64_t alphabet, int depth, double tol) {
  require_depth(alphabet, depth);
  if (!(tol >= 1e-6)) throw DomainError("tolerance must be >= 1e-6");

  // Bracketing intervals [lo, hi] for the four roots. Every function is >= 0
  // at s = 0 (A^k cylinders, ratio A); roots at the endpoints are detected
  // explicitly.
  std::array<double, 4> lo{0, 0, 0, 0}, hi{1, 1, 1, 1};
  auto at_one = evaluate(alphabet, depth, {1, 1, 1, 1});
  auto at_zero = evaluate(alphabet, depth, {0, 0, 0, 0});
  for (int i = 0; i < 4; ++i) {
    if (at_zero[i] <= 0) hi[i] = 0;
    else if (at_one[i] >= 0) lo[i] = 1;
  }
  auto done = [&] {
    for (int i = 0; i < 4; ++i) {
      if (hi[i] - lo[i] > tol) return false;
    }
    return true;
  };
  while (!done()) {
    std::array<double, 4> mid;
    for (int i = 0; i < 4; ++i) mid[i] = 0.5 * (lo[i] + hi[i]);
    auto value = evaluate(alphabet, depth, mid);
    for (int i = 0; i < 4; ++i) {
      if (hi[i] - lo[i] <= tol) continue;
      if (value[i] > 0) lo[i] = mid[i];
      else hi[i] = mid[i];
    }
  }

  DimensionEstimate out;
  out.alphabet = alphabet;
  out.depth = depth;
  out.ratio_lower = lo[0];
  out.ratio_upper = hi[1];
  out.distortion_lower = lo[2];
  out.distortion_upper = hi[3];
  out.lower = std::max(out.ratio_lower, out.distortion_lower);
  out.upper = std::min(out.ratio_upper, out.distortion_upper);
  if (out.lower > out.upper) {
    throw InvariantViolation("dimension brackets do not intersect at depth " + std::to_string(depth));
  }
  return out;
}

double asymptotic(std::int64_t alphabet) {
  if (alphabet < 1) throw DomainError("alphabet bound must be >= 1");
  return 1.0 - 6.0 / (std::numbers::pi * std::numbers::pi * static_cast<double>(alphabet));
}

}  // namespace lowlying::dimension
