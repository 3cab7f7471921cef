#pragma once

// Exact finite computations over SL2(Z/q) for square-free q: enumeration,
// trace-fiber densities, square roots of 4, Kloosterman sums and the complete
// character sums over SL2(Z/q).

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "lowlying/rational.hpp"

namespace lowlying::modular {

/// Largest modulus (or prime) enumerated element-by-element.
inline constexpr std::int64_t kDefaultCap = 120;

/// Element of SL2(Z/q): residues in [0, q), ad - bc = 1 (mod q).
struct ResidueMatrix {
  std::int64_t a, b, c, d;
  std::int64_t q;

  std::int64_t trace() const { return (a + d) % q; }
  bool operator==(const ResidueMatrix&) const = default;
};

/// (x, y, z, w) identified with the matrix [[x, y], [z, w]].
struct IntegerVector4 {
  std::int64_t x = 0, y = 0, z = 0, w = 0;

  /// gcd(x, y, z, w, q) = 1.
  bool primitive_mod(std::int64_t q) const;
  IntegerVector4 scaled(std::int64_t k) const { return {x * k, y * k, z * k, w * k}; }
};

/// gamma . s = ax + by + cz + dw (the trace pairing tr(transpose(gamma) s)).
std::int64_t pairing(const ResidueMatrix& g, const IntegerVector4& s);

/// |SL2(Z/q)| = q^3 prod_{p | q} (1 - 1/p^2).
std::int64_t sl2_order(std::int64_t q);

/// Visits each element of SL2(Z/q) exactly once, CRT-assembled from the
/// prime factors; order is deterministic.
void for_each_sl2(std::int64_t q, const std::function<void(const ResidueMatrix&)>& visit,
                  std::int64_t cap = kDefaultCap);

std::vector<ResidueMatrix> sl2_enumerate(std::int64_t q, std::int64_t cap = kDefaultCap);

/// Multiplicative density with beta(p) = ((1 + [p != 2]) / p) (1 + 1/(p^2 - 1)).
Rational beta(std::int64_t q);

/// #{gamma in SL2(p) : tr(gamma)^2 = 4} / |SL2(p)|, by enumeration.
Rational beta_bruteforce(std::int64_t p, std::int64_t cap = kDefaultCap);

/// #{t mod q : t^2 = 4 mod q}, by direct check.
std::int64_t sqrt4_count(std::int64_t q);
/// 2^(nu(q) - [2 | q]).
std::int64_t sqrt4_formula(std::int64_t q);

/// #{gamma in SL2(p) : tr gamma = t mod p}, by enumeration.
std::int64_t trace_fiber_count(std::int64_t p, std::int64_t t, std::int64_t cap = kDefaultCap);

/// (1/|SL2(p)|) sum_gamma sum'_{r mod p} e_p(r (tr gamma - t)), evaluated
/// exactly as (p #{tr = t} - |SL2(p)|) / |SL2(p)|.
Rational rho_t_bruteforce(std::int64_t p, std::int64_t t, std::int64_t cap = kDefaultCap);

/// The same quantity summed term by term in floating point.
double rho_t_expsum(std::int64_t p, std::int64_t t, std::int64_t cap = kDefaultCap);

/// K(a, b; p) = sum_{x != 0} e_p(a x + b / x); real.
double kloosterman(std::int64_t a, std::int64_t b, std::int64_t p);

/// sum_{gamma in SL2(q)} e_q(gamma . s), computed prime by prime.
std::complex<double> sl2_charsum(std::int64_t q, const IntegerVector4& s, std::int64_t cap = kDefaultCap);

/// Same sum by direct enumeration of SL2(Z/q).
std::complex<double> sl2_charsum_direct(std::int64_t q, const IntegerVector4& s,
                                        std::int64_t cap = kDefaultCap);

}  // namespace lowlying::modular
