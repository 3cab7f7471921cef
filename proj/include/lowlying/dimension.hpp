#pragma once

// Hausdorff dimension of the set of reals in (0,1) whose partial quotients
// are all <= A, bracketed from cylinder sums at a fixed depth.

#include <cstdint>

#include "lowlying/cf_core.hpp"
#include "lowlying/rational.hpp"

namespace lowlying::dimension {

/// A^k above this is refused.
inline constexpr double kMaxCylinders = 1e7;

/// Constant C with C^-1 |I_u||I_v| <= |I_uv| <= C |I_u||I_v|.
inline constexpr double kDistortion = 4.0;

/// |{[0; w, tail]}| = 1 / (q_k (q_k + q_{k-1})).
Rational cylinder_length(const cf::Word& w);

/// sum over words w of length k with digits <= A of |I_w|^s.
double pressure_sum(std::int64_t alphabet, int depth, double s);

struct DimensionEstimate {
  std::int64_t alphabet = 0;
  int depth = 0;
  double lower = 0;
  double upper = 0;

  // Components of the bracket.
  double ratio_lower = 0;       // root of min_x f_k/f_{k-1} = 1
  double ratio_upper = 0;       // root of max_x f_k/f_{k-1} = 1
  double distortion_lower = 0;  // root of C^-s Z_k(s) = 1
  double distortion_upper = 0;  // root of C^s Z_k(s) = 1

  double midpoint() const { return 0.5 * (lower + upper); }
  double width() const { return upper - lower; }
};

/// Largest k with A^k <= kMaxCylinders (40 for A = 1).
int max_depth(std::int64_t alphabet);

/// Bracket for delta_A from depth k. Two independent brackets are
/// intersected: the ratio test min_x f_k/f_{k-1} <= lambda(s) <= max_x on
/// f_n(x) = sum_{|w|=n} (q_n + x q_{n-1})^{-2s}, sampled on a 9-point grid
/// in [0,1], and the distortion bound C^{-s} Z_k(s) <= 1 <= C^s Z_k(s) at
/// s = delta with Z_k the depth-k pressure sum. Roots by bisection to tol.
DimensionEstimate estimate(std::int64_t alphabet, int depth, double tol = 1e-6);

/// 1 - 6 / (pi^2 A).
double asymptotic(std::int64_t alphabet);

}  // namespace lowlying::dimension
