#include "lowlying/geodesics.hpp"

#include <algorithm>
#include <cmath>

#include "lowlying/errors.hpp"

namespace lowlying::geodesics {

namespace {

cf::UnimodularMatrix rotation_matrix(const cf::Word& w, std::size_t k) {
  auto m = cf::word_to_matrix(w.rotated(k));
  if (m.det() != 1) throw DomainError("geodesic words must have even length");
  if (m.trace() <= 2) throw DomainError("not hyperbolic: trace <= 2");
  return m;
}

double half_sqrt_over(Int D, Int c) {
  return static_cast<double>(std::sqrt(static_cast<long double>(D)) / (2.0L * static_cast<long double>(c)));
}

}  // namespace

std::vector<double> rotation_heights(const cf::Word& w) {
  if (w.empty()) throw DomainError("empty word has no geodesic");
  std::vector<double> out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    auto m = rotation_matrix(w, k);
    Int D = checked_sub(checked_mul(m.trace(), m.trace()), 4);
    out.push_back(half_sqrt_over(D, m.c));
  }
  return out;
}

double max_height(const cf::Word& w) {
  auto h = rotation_heights(w);
  return *std::max_element(h.begin(), h.end());
}

bool is_low_lying(const cf::Word& w, double cutoff) { return max_height(w) <= cutoff; }

std::vector<Arc> emit_arcs(const cf::Word& w) {
  if (w.empty()) throw DomainError("empty word has no geodesic");
  std::vector<Arc> out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    auto m = rotation_matrix(w, k);
    Int D = checked_sub(checked_mul(m.trace(), m.trace()), 4);
    double center = static_cast<double>(static_cast<long double>(m.a - m.d) / (2.0L * static_cast<long double>(m.c)));
    out.push_back({center, half_sqrt_over(D, m.c)});
  }
  return out;
}

GeodesicProfile profile(const cf::Word& w) {
  GeodesicProfile out;
  out.period = w;
  out.rotation_heights = rotation_heights(w);
  out.max_height = *std::max_element(out.rotation_heights.begin(), out.rotation_heights.end());
  auto m = cf::word_to_matrix(w);
  out.discriminant = checked_sub(checked_mul(m.trace(), m.trace()), 4);
  return out;
}

}  // namespace lowlying::geodesics
