#include "lowlying/cf_core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <utility>

#include "lowlying/errors.hpp"

namespace lowlying::cf {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Word

Word::Word(std::vector<std::int64_t> digits) : digits_(std::move(digits)) {
  for (auto a : digits_) {
    if (a < 1) throw DomainError("partial quotients must be >= 1, got " + std::to_string(a));
  }
}

Word::Word(std::initializer_list<std::int64_t> digits) : Word(std::vector<std::int64_t>(digits)) {}

Word Word::over_alphabet(std::vector<std::int64_t> digits, std::int64_t bound) {
  Word w(std::move(digits));
  if (!w.fits_alphabet(bound)) {
    throw DomainError("word " + w.to_string() + " has a digit above the alphabet bound " +
                      std::to_string(bound));
  }
  return w;
}

Word Word::parse(std::string_view text) {
  std::vector<std::int64_t> digits;
  text = trim(text);
  if (text.empty()) return Word();
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw DomainError("cannot parse digit '" + std::string(token) + "'");
    }
    digits.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Word(std::move(digits));
}

std::int64_t Word::max_digit() const {
  if (digits_.empty()) return 0;
  return *std::max_element(digits_.begin(), digits_.end());
}

bool Word::fits_alphabet(std::int64_t bound) const { return max_digit() <= bound; }

Word Word::rotated(std::size_t k) const {
  if (digits_.empty()) return *this;
  k %= digits_.size();
  std::vector<std::int64_t> out(digits_.begin() + static_cast<std::ptrdiff_t>(k), digits_.end());
  out.insert(out.end(), digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(k));
  Word w;
  w.digits_ = std::move(out);
  return w;
}

Word Word::reversed() const {
  Word w = *this;
  std::reverse(w.digits_.begin(), w.digits_.end());
  return w;
}

Word Word::canonical_rotation() const {
  Word best = *this;
  for (std::size_t k = 1; k < digits_.size(); ++k) {
    Word r = rotated(k);
    if (r < best) best = std::move(r);
  }
  return best;
}

bool Word::is_rotation_of(const Word& other) const {
  return size() == other.size() && canonical_rotation() == other.canonical_rotation();
}

Word Word::operator+(const Word& tail) const {
  Word w = *this;
  w.digits_.insert(w.digits_.end(), tail.digits_.begin(), tail.digits_.end());
  return w;
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(digits_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// UnimodularMatrix

UnimodularMatrix::UnimodularMatrix(Int a_, Int b_, Int c_, Int d_) : a(a_), b(b_), c(c_), d(d_) {
  Int det = checked_sub(checked_mul(a, d), checked_mul(b, c));
  if (det != 1 && det != -1) {
    throw DomainError("matrix " + to_string() + " has determinant " + lowlying::to_string(det) +
                      ", expected +1 or -1");
  }
}

UnimodularMatrix UnimodularMatrix::generator(std::int64_t digit) {
  if (digit < 1) throw DomainError("generator digit must be >= 1");
  UnimodularMatrix g;
  g.a = digit;
  g.b = 1;
  g.c = 1;
  g.d = 0;
  return g;
}

Int UnimodularMatrix::norm_sq() const {
  Int s = checked_mul(a, a);
  s = checked_add(s, checked_mul(b, b));
  s = checked_add(s, checked_mul(c, c));
  return checked_add(s, checked_mul(d, d));
}

UnimodularMatrix UnimodularMatrix::operator*(const UnimodularMatrix& r) const {
  UnimodularMatrix m;
  m.a = checked_add(checked_mul(a, r.a), checked_mul(b, r.c));
  m.b = checked_add(checked_mul(a, r.b), checked_mul(b, r.d));
  m.c = checked_add(checked_mul(c, r.a), checked_mul(d, r.c));
  m.d = checked_add(checked_mul(c, r.b), checked_mul(d, r.d));
  return m;
}

std::string UnimodularMatrix::to_string() const {
  using lowlying::to_string;
  return "[[" + to_string(a) + "," + to_string(b) + "],[" + to_string(c) + "," + to_string(d) + "]]";
}

// ---------------------------------------------------------------------------
// QuadraticIrrational

QuadraticIrrational::QuadraticIrrational(Int P, Int Q, Int D) : P_(P), Q_(Q), D_(D) {
  if (D <= 0 || is_square(D)) {
    throw DomainError("D must be a positive non-square, got " + lowlying::to_string(D));
  }
  if (Q == 0) throw DomainError("unnormalized surd: Q = 0");
}

QuadraticIrrational QuadraticIrrational::parse(std::string_view text) {
  // (P+sqrt(D))/Q
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s.push_back(ch);
  }
  auto fail = [&]() -> QuadraticIrrational {
    throw DomainError("expected \"(P+sqrt(D))/Q\", got '" + std::string(text) + "'");
  };
  auto sq = s.find("sqrt(");
  if (s.size() < 2 || s.front() != '(' || sq == std::string::npos || sq < 2) return fail();
  char sign = s[sq - 1];
  if (sign != '+' && sign != '-') return fail();
  Int P = parse_int128(std::string_view(s).substr(1, sq - 2));
  auto close = s.find(')', sq);
  if (close == std::string::npos) return fail();
  Int D = parse_int128(std::string_view(s).substr(sq + 5, close - sq - 5));
  if (s.compare(close, 3, "))/") != 0) return fail();
  Int Q = parse_int128(std::string_view(s).substr(close + 3));
  if (sign == '-') return QuadraticIrrational(-P, -Q, D);
  return QuadraticIrrational(P, Q, D);
}

bool QuadraticIrrational::is_normalized() const {
  return checked_sub(D_, checked_mul(P_, P_)) % Q_ == 0;
}

QuadraticIrrational QuadraticIrrational::normalized() const {
  if (is_normalized()) return *this;
  Int m = abs128(Q_);
  return QuadraticIrrational(checked_mul(P_, m), checked_mul(Q_, m), checked_mul(D_, checked_mul(m, m)));
}

long double QuadraticIrrational::value() const {
  return (static_cast<long double>(P_) + std::sqrt(static_cast<long double>(D_))) /
         static_cast<long double>(Q_);
}

std::string QuadraticIrrational::to_string() const {
  using lowlying::to_string;
  return "(" + to_string(P_) + "+sqrt(" + to_string(D_) + "))/" + to_string(Q_);
}

// ---------------------------------------------------------------------------
// Operations

int surd_sign(Int u, Int v, Int D) {
  auto sgn = [](Int x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); };
  if (v == 0) return sgn(u);
  if (u == 0) return sgn(v);
  if (sgn(u) == sgn(v)) return sgn(u);
  // Opposite signs: compare u^2 against v^2 D. D non-square so never equal.
  Int u2 = checked_mul(u, u);
  Int v2D = checked_mul(checked_mul(v, v), D);
  if (u2 == v2D) throw InvariantViolation("surd_sign: D is a perfect square");
  return u2 > v2D ? sgn(u) : sgn(v);
}

UnimodularMatrix word_to_matrix(const Word& w) {
  if (w.empty()) throw DomainError("empty word has no canonical matrix");
  UnimodularMatrix m = UnimodularMatrix::generator(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) {
    // m * [[a,1],[1,0]] = [[a m.a + m.b, m.a], [a m.c + m.d, m.c]]
    Int a = w[i];
    UnimodularMatrix next;
    next.a = checked_add(checked_mul(a, m.a), m.b);
    next.b = m.a;
    next.c = checked_add(checked_mul(a, m.c), m.d);
    next.d = m.c;
    m = next;
  }
  return m;
}

QuadraticIrrational fixed_point(const UnimodularMatrix& m) {
  if (m.det() != 1) throw DomainError("fixed_point requires determinant +1");
  Int t = m.trace();
  if (abs128(t) <= 2) throw DomainError("not hyperbolic: |trace| <= 2");
  if (m.c == 0) throw DomainError("fixed point at infinity: c = 0");
  Int D = checked_sub(checked_mul(t, t), 4);
  return QuadraticIrrational(checked_sub(m.a, m.d), checked_mul(2, m.c), D);
}

bool is_root(Int A, Int B, Int C, const QuadraticIrrational& x) {
  // Q^2 (A x^2 + B x + C) = A (P^2 + D) + B Q P + C Q^2 + (2 A P + B Q) sqrt(D)
  Int P = x.P(), Q = x.Q(), D = x.D();
  Int rational = checked_mul(A, checked_add(checked_mul(P, P), D));
  rational = checked_add(rational, checked_mul(checked_mul(B, Q), P));
  rational = checked_add(rational, checked_mul(C, checked_mul(Q, Q)));
  Int irrational = checked_add(checked_mul(checked_mul(2, A), P), checked_mul(B, Q));
  return rational == 0 && irrational == 0;
}

bool mobius_fixes(const UnimodularMatrix& m, const QuadraticIrrational& x) {
  // (a x + b) / (c x + d) = x  <=>  c x^2 + (d - a) x - b = 0
  return is_root(m.c, checked_sub(m.d, m.a), -m.b, x);
}

CfExpansion cf_expand(const QuadraticIrrational& x) {
  if (!x.is_normalized()) throw DomainError("unnormalized surd: Q does not divide D - P^2");
  const Int D = x.D();
  const Int s = isqrt(D);
  Int P = x.P(), Q = x.Q();
  std::map<std::pair<Int, Int>, std::size_t> seen;
  std::vector<Int> digits;
  while (true) {
    auto [it, inserted] = seen.emplace(std::make_pair(P, Q), digits.size());
    if (!inserted) {
      std::size_t start = it->second;
      CfExpansion out;
      out.preperiod.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start));
      std::vector<std::int64_t> period;
      for (std::size_t i = start; i < digits.size(); ++i) period.push_back(narrow64(digits[i]));
      out.period = Word(std::move(period));
      return out;
    }
    // floor((P + sqrt D) / Q) without floating point; sqrt D lies strictly in (s, s+1).
    Int a = Q > 0 ? floor_div(checked_add(P, s), Q) : floor_div(checked_sub(-P, checked_add(s, 1)), -Q);
    digits.push_back(a);
    Int nextP = checked_sub(checked_mul(a, Q), P);
    Int num = checked_sub(D, checked_mul(nextP, nextP));
    if (num % Q != 0) throw InvariantViolation("cf_expand lost normalization");
    Q = num / Q;
    P = nextP;
  }
}

bool is_reduced(const QuadraticIrrational& x) {
  const Int P = x.P(), Q = x.Q(), D = x.D();
  const int q_sign = Q > 0 ? 1 : -1;
  // x > 1 <=> (P - Q + sqrt D) / Q > 0
  bool above_one = surd_sign(checked_sub(P, Q), 1, D) * q_sign > 0;
  // conjugate < 0 <=> (P - sqrt D) / Q < 0
  bool conj_negative = surd_sign(P, -1, D) * q_sign < 0;
  // conjugate > -1 <=> (P + Q - sqrt D) / Q > 0
  bool conj_above_minus_one = surd_sign(checked_add(P, Q), -1, D) * q_sign > 0;
  return above_one && conj_negative && conj_above_minus_one;
}

QuadraticIrrational galois_conjugate(const QuadraticIrrational& x) {
  return QuadraticIrrational(-x.P(), -x.Q(), x.D());
}

std::vector<Convergent> convergents(const Word& w) {
  std::vector<Convergent> out;
  Int p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
  for (auto a : w.digits()) {
    Int p = checked_add(checked_mul(a, p_prev), p_prev2);
    Int q = checked_add(checked_mul(a, q_prev), q_prev2);
    out.push_back({p, q});
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
  }
  return out;
}

std::vector<Int> rational_expansion(Int num, Int den) {
  if (den <= 0) throw DomainError("rational_expansion expects a positive denominator");
  std::vector<Int> out;
  while (den != 0) {
    Int a = floor_div(num, den);
    out.push_back(a);
    Int r = num - a * den;
    num = den;
    den = r;
  }
  return out;
}

}  // namespace lowlying::cf
