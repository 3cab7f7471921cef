#include "lowlying/modular.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lowlying/arith.hpp"
#include "lowlying/errors.hpp"

namespace lowlying::modular {

namespace {

void require_cap(std::int64_t q, std::int64_t cap) {
  if (q > cap) {
    throw CapExceeded("modulus " + std::to_string(q) + " exceeds the enumeration cap " + std::to_string(cap));
  }
}

void require_prime(std::int64_t p) {
  if (!arith::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

/// Elements of SL2(F_p), first row outermost.
std::vector<ResidueMatrix> sl2_prime(std::int64_t p) {
  std::vector<ResidueMatrix> out;
  out.reserve(static_cast<std::size_t>(p * (p * p - 1)));
  for (std::int64_t a = 0; a < p; ++a) {
    for (std::int64_t b = 0; b < p; ++b) {
      if (a == 0 && b == 0) continue;
      if (a != 0) {
        std::int64_t ainv = arith::mod_inverse(a, p);
        for (std::int64_t c = 0; c < p; ++c) {
          std::int64_t d = arith::mod((1 + b * c) % p * ainv, p);
          out.push_back({a, b, c, d, p});
        }
      } else {
        // ad - bc = -bc = 1
        std::int64_t c = arith::mod(-arith::mod_inverse(b, p), p);
        for (std::int64_t d = 0; d < p; ++d) out.push_back({a, b, c, d, p});
      }
    }
  }
  return out;
}

/// Character table e_p(k) for k in [0, p).
std::vector<std::complex<double>> roots_of_unity(std::int64_t p) {
  std::vector<std::complex<double>> table(static_cast<std::size_t>(p));
  for (std::int64_t k = 0; k < p; ++k) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p);
    table[static_cast<std::size_t>(k)] = {std::cos(angle), std::sin(angle)};
  }
  return table;
}

std::complex<double> charsum_prime(std::int64_t p, const IntegerVector4& s) {
  auto table = roots_of_unity(p);
  std::complex<double> total = 0.0;
  for (const auto& g : sl2_prime(p)) total += table[static_cast<std::size_t>(arith::mod(pairing(g, s), p))];
  return total;
}

}  // namespace

bool IntegerVector4::primitive_mod(std::int64_t q) const {
  return arith::gcd(arith::gcd(arith::gcd(arith::gcd(x, y), z), w), q) == 1;
}

std::int64_t pairing(const ResidueMatrix& g, const IntegerVector4& s) {
  // Reduce each product first; residues < q and |s| arbitrary.
  std::int64_t q = g.q;
  auto r = [q](std::int64_t v) { return arith::mod(v, q); };
  return r(g.a * r(s.x) + g.b * r(s.y) + g.c * r(s.z) + g.d * r(s.w));
}

std::int64_t sl2_order(std::int64_t q) {
  arith::require_squarefree(q, "modulus");
  std::int64_t order = 1;
  for (auto p : arith::prime_divisors(q)) order *= p * (p * p - 1);
  return order;
}

void for_each_sl2(std::int64_t q, const std::function<void(const ResidueMatrix&)>& visit, std::int64_t cap) {
  arith::require_squarefree(q, "modulus");
  require_cap(q, cap);
  if (q == 1) {
    visit({0, 0, 0, 0, 1});
    return;
  }
  auto primes = arith::prime_divisors(q);
  std::vector<std::vector<ResidueMatrix>> factors;
  std::vector<std::int64_t> crt_weight;  // e_p: 1 mod p, 0 mod q/p
  for (auto p : primes) {
    factors.push_back(sl2_prime(p));
    std::int64_t cofactor = q / p;
    crt_weight.push_back(cofactor * arith::mod_inverse(cofactor % p, p) % q);
  }
  std::vector<std::size_t> index(primes.size(), 0);
  while (true) {
    ResidueMatrix g{0, 0, 0, 0, q};
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const auto& h = factors[i][index[i]];
      std::int64_t w = crt_weight[i];
      g.a = (g.a + h.a * w) % q;
      g.b = (g.b + h.b * w) % q;
      g.c = (g.c + h.c * w) % q;
      g.d = (g.d + h.d * w) % q;
    }
    visit(g);
    std::size_t i = primes.size();
    while (i > 0) {
      --i;
      if (++index[i] < factors[i].size()) break;
      index[i] = 0;
      if (i == 0) return;
    }
  }
}

std::vector<ResidueMatrix> sl2_enumerate(std::int64_t q, std::int64_t cap) {
  std::vector<ResidueMatrix> out;
  for_each_sl2(q, [&](const ResidueMatrix& g) { out.push_back(g); }, cap);
  return out;
}

Rational beta(std::int64_t q) {
  arith::require_squarefree(q, "modulus");
  Rational out = 1;
  for (auto p : arith::prime_divisors(q)) {
    Rational local(1 + (p != 2 ? 1 : 0), p);
    out *= local * (Rational(1) + Rational(1, p * p - 1));
  }
  return out;
}

Rational beta_bruteforce(std::int64_t p, std::int64_t cap) {
  require_prime(p);
  require_cap(p, cap);
  std::int64_t hits = 0, total = 0;
  for (const auto& g : sl2_prime(p)) {
    std::int64_t t = g.trace() % p;
    hits += (t * t - 4) % p == 0;
    ++total;
  }
  return Rational(hits, total);
}

std::int64_t sqrt4_count(std::int64_t q) {
  arith::require_squarefree(q, "modulus");
  std::int64_t n = 0;
  for (std::int64_t t = 0; t < q; ++t) n += (t * t - 4) % q == 0;
  return n;
}

std::int64_t sqrt4_formula(std::int64_t q) {
  arith::require_squarefree(q, "modulus");
  int exponent = arith::nu(q) - (q % 2 == 0 ? 1 : 0);
  return std::int64_t{1} << exponent;
}

std::int64_t trace_fiber_count(std::int64_t p, std::int64_t t, std::int64_t cap) {
  require_prime(p);
  require_cap(p, cap);
  std::int64_t target = arith::mod(t, p);
  std::int64_t n = 0;
  for (const auto& g : sl2_prime(p)) n += g.trace() == target;
  return n;
}

Rational rho_t_bruteforce(std::int64_t p, std::int64_t t, std::int64_t cap) {
  std::int64_t order = p * (p * p - 1);
  std::int64_t fiber = trace_fiber_count(p, t, cap);
  return Rational(p * fiber - order, order);
}

double rho_t_expsum(std::int64_t p, std::int64_t t, std::int64_t cap) {
  require_prime(p);
  require_cap(p, cap);
  auto table = roots_of_unity(p);
  std::complex<double> total = 0.0;
  std::int64_t order = 0;
  for (const auto& g : sl2_prime(p)) {
    ++order;
    std::int64_t diff = arith::mod(g.trace() - t, p);
    for (std::int64_t r = 1; r < p; ++r) total += table[static_cast<std::size_t>(r * diff % p)];
  }
  return total.real() / static_cast<double>(order);
}

double kloosterman(std::int64_t a, std::int64_t b, std::int64_t p) {
  require_prime(p);
  if (arith::mod(a, p) == 0 || arith::mod(b, p) == 0) throw DomainError("degenerate Kloosterman sum");
  double total = 0.0;
  for (std::int64_t x = 1; x < p; ++x) {
    std::int64_t phase = arith::mod(a * x + b * arith::mod_inverse(x, p), p);
    total += std::cos(2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(p));
  }
  return total;
}

std::complex<double> sl2_charsum(std::int64_t q, const IntegerVector4& s, std::int64_t cap) {
  arith::require_squarefree(q, "modulus");
  require_cap(q, cap);
  // 1/q = sum_p u_p / p with u_p = (q/p)^{-1} mod p, so e_q(n) = prod_p e_p(u_p n).
  std::complex<double> total = 1.0;
  for (auto p : arith::prime_divisors(q)) {
    std::int64_t u = arith::mod_inverse((q / p) % p, p);
    IntegerVector4 local{arith::mod(s.x, p) * u % p, arith::mod(s.y, p) * u % p, arith::mod(s.z, p) * u % p,
                         arith::mod(s.w, p) * u % p};
    total *= charsum_prime(p, local);
  }
  return total;
}

std::complex<double> sl2_charsum_direct(std::int64_t q, const IntegerVector4& s, std::int64_t cap) {
  auto table = roots_of_unity(q);
  std::complex<double> total = 0.0;
  for_each_sl2(q, [&](const ResidueMatrix& g) { total += table[static_cast<std::size_t>(pairing(g, s))]; }, cap);
  return total;
}

}  // namespace lowlying::modular
