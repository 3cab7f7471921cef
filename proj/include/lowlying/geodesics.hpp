#pragma once

// Closed geodesics from periodic CF words: for every rotation of the period,
// the semicircle joining the attracting fixed point and its conjugate, its
// apex height, and the low-lying predicate built on the maximum.

#include <cstdint>
#include <vector>

#include "lowlying/cf_core.hpp"
#include "lowlying/int128.hpp"

namespace lowlying::geodesics {

struct Arc {
  double center;  // (alpha + conj alpha) / 2 = (a - d) / 2c
  double radius;  // (alpha - conj alpha) / 2 = sqrt(D) / 2c
};

struct GeodesicProfile {
  cf::Word period;
  std::vector<double> rotation_heights;
  double max_height = 0;
  Int discriminant = 0;
};

/// One height per rotation k of the even word w, sqrt(D) / (2 c_k) with c_k the
/// lower-left entry of the rotated word's matrix.
std::vector<double> rotation_heights(const cf::Word& w);

double max_height(const cf::Word& w);

bool is_low_lying(const cf::Word& w, double cutoff);

/// Semicircles in rotation order, unfolded.
std::vector<Arc> emit_arcs(const cf::Word& w);

GeodesicProfile profile(const cf::Word& w);

}  // namespace lowlying::geodesics
