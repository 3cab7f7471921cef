#pragma once

// Exact continued-fraction arithmetic for quadratic irrationals and the
// dictionary between words of partial quotients and products of the
// generators [[a,1],[1,0]].

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lowlying/int128.hpp"

namespace lowlying::cf {

/// Finite sequence of partial quotients, every digit >= 1.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::int64_t> digits);
  Word(std::initializer_list<std::int64_t> digits);

  /// Same as the constructor, additionally requiring every digit <= bound.
  static Word over_alphabet(std::vector<std::int64_t> digits, std::int64_t bound);

  /// Parses "1,1,2" (whitespace tolerated).
  static Word parse(std::string_view text);

  const std::vector<std::int64_t>& digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  bool is_even() const { return digits_.size() % 2 == 0; }
  std::int64_t operator[](std::size_t i) const { return digits_[i]; }

  std::int64_t max_digit() const;
  bool fits_alphabet(std::int64_t bound) const;

  /// Cyclic left shift by k: rotated(1) of (a,b,c) is (b,c,a).
  Word rotated(std::size_t k) const;
  Word reversed() const;
  /// Lexicographically least rotation.
  Word canonical_rotation() const;
  bool is_rotation_of(const Word& other) const;

  Word operator+(const Word& tail) const;

  /// "1,35"
  std::string to_string() const;

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<std::int64_t> digits_;
};

/// 2x2 integer matrix with determinant +1 or -1.
struct UnimodularMatrix {
  Int a = 1, b = 0, c = 0, d = 1;

  UnimodularMatrix() = default;
  UnimodularMatrix(Int a, Int b, Int c, Int d);

  static UnimodularMatrix identity() { return {}; }
  /// [[digit, 1], [1, 0]]
  static UnimodularMatrix generator(std::int64_t digit);

  Int det() const { return a * d - b * c; }
  Int trace() const { return a + d; }
  /// Squared Frobenius norm, tr(g * transpose(g)).
  Int norm_sq() const;

  /// Overflow-checked product.
  UnimodularMatrix operator*(const UnimodularMatrix& rhs) const;

  std::string to_string() const;

  bool operator==(const UnimodularMatrix&) const = default;
};

/// Exact surd (P + sqrt(D)) / Q with D > 0 not a perfect square, Q != 0.
/// Normalized when Q divides D - P^2; cf_expand requires that.
class QuadraticIrrational {
 public:
  QuadraticIrrational(Int P, Int Q, Int D);

  /// Parses "(P+sqrt(D))/Q"; also accepts "(P-sqrt(D))/Q" as the conjugate form.
  static QuadraticIrrational parse(std::string_view text);

  Int P() const { return P_; }
  Int Q() const { return Q_; }
  Int D() const { return D_; }

  bool is_normalized() const;
  /// Equal value with Q | D - P^2, obtained by scaling through |Q|.
  QuadraticIrrational normalized() const;

  long double value() const;

  /// "(P+sqrt(D))/Q"
  std::string to_string() const;

  /// Representation equality (not value equality).
  bool operator==(const QuadraticIrrational&) const = default;

 private:
  Int P_, Q_, D_;
};

/// Sign of u + v*sqrt(D) for non-square D > 0, decided by integer comparisons.
int surd_sign(Int u, Int v, Int D);

UnimodularMatrix word_to_matrix(const Word& w);

/// Attracting fixed point (a - d + sqrt(tr^2 - 4)) / (2c) of a det-1 hyperbolic matrix.
QuadraticIrrational fixed_point(const UnimodularMatrix& m);

/// A*x^2 + B*x + C == 0 exactly.
bool is_root(Int A, Int B, Int C, const QuadraticIrrational& x);

/// (a x + b) / (c x + d) == x exactly.
bool mobius_fixes(const UnimodularMatrix& m, const QuadraticIrrational& x);

struct CfExpansion {
  std::vector<Int> preperiod;  // a_0 may be zero or negative here
  Word period;
};

CfExpansion cf_expand(const QuadraticIrrational& x);

/// x > 1 and its conjugate lies in (-1, 0).
bool is_reduced(const QuadraticIrrational& x);

/// (P - sqrt(D)) / Q, represented as (-P + sqrt(D)) / (-Q).
QuadraticIrrational galois_conjugate(const QuadraticIrrational& x);

struct Convergent {
  Int p;
  Int q;
};

/// Convergents p_k/q_k of [a_0; a_1, ..., a_k] via the three-term recurrence.
std::vector<Convergent> convergents(const Word& w);

/// Finite expansion of num/den (den > 0) by the Euclidean algorithm.
std::vector<Int> rational_expansion(Int num, Int den);

}  // namespace lowlying::cf
