#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace lowlying::arith {

struct PrimePower {
  std::int64_t prime;
  int exponent;
};

/// Trial-division factorization, primes in increasing order. n >= 1.
std::vector<PrimePower> factorize(std::int64_t n);

std::vector<std::int64_t> prime_divisors(std::int64_t n);

bool is_prime(std::int64_t n);
bool is_squarefree(std::int64_t n);

/// Number of distinct prime factors.
int nu(std::int64_t n);

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Representative in [0, m).
std::int64_t mod(std::int64_t a, std::int64_t m);

/// Inverse of a modulo m; throws DomainError if gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

std::vector<std::int64_t> primes_up_to(std::int64_t limit);

/// Square-free q in [lo, hi).
std::vector<std::int64_t> squarefree_range(std::int64_t lo, std::int64_t hi);

/// Throws DomainError naming `what` unless q >= 1 is square-free.
void require_squarefree(std::int64_t q, const char* what);

}  // namespace lowlying::arith
