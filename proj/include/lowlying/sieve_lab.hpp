#pragma once

// Sieve experiments on n = tr(g)^2 - 4: congruence counts |A_q| against
// beta(q)|Pi|, remainder ledgers, almost-prime and square-free censuses,
// the discriminant set of traces with square-free t^2 - 4, and the form
// classes realized in a trace fiber.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "lowlying/cf_core.hpp"
#include "lowlying/quad_forms.hpp"
#include "lowlying/rational.hpp"
#include "lowlying/thin_semigroup.hpp"

namespace lowlying::sieve {

/// Multiset {tr(g)^2 - 4} stored as value -> multiplicity.
struct SiftingSequence {
  std::map<std::int64_t, std::uint64_t> values;
  std::uint64_t source_size = 0;
  double N = 0;  // norm parameter of the source, 0 when not applicable
  double T() const { return N * N; }

  void add(std::int64_t n, std::uint64_t multiplicity = 1);
  std::size_t distinct() const { return values.size(); }
};

struct SiftBudget {
  /// Distinct values held in memory.
  std::size_t max_distinct = 50'000'000;
};

SiftingSequence sift_words(const std::vector<cf::Word>& words);
SiftingSequence sift_values(const semigroup::BilinearSet& pi, const SiftBudget& budget = {});
/// The plain ball Gamma_A with ||g|| <= N stands in for Pi.
SiftingSequence sift_ball(std::int64_t alphabet, double N, const SiftBudget& budget = {},
                          const semigroup::EnumerationLimits& limits = {});

/// sum of multiplicities of n with q | n.
std::uint64_t A_q(const SiftingSequence& seq, std::int64_t q);

struct RemainderRow {
  std::int64_t q;
  std::uint64_t count;  // |A_q|
  Rational expected;    // beta(q) |Pi|
  Rational remainder;   // |A_q| - beta(q) |Pi|
};

struct RemainderProfile {
  std::vector<RemainderRow> rows;  // every square-free q < Q, starting at 1
  std::uint64_t source_size = 0;
  Rational summary;                // sum |r(q)| / |Pi|
};

RemainderProfile remainder_profile(const SiftingSequence& seq, std::int64_t Q);

/// #{n : every prime factor of n exceeds z}, with multiplicity.
std::uint64_t almost_prime_census(const SiftingSequence& seq, std::int64_t z);

/// t^2 - 4 = (t - 2)(t + 2) is square-free: t odd (else 4 divides it) and
/// both factors square-free (coprime when t is odd).
bool trace_discriminant_squarefree(std::int64_t t);

struct SquarefreeCensus {
  std::uint64_t count = 0;
  std::uint64_t ball_size = 0;
  std::map<std::int64_t, std::uint64_t> counted_traces;  // trace -> elements counted
  double fraction() const { return ball_size ? static_cast<double>(count) / static_cast<double>(ball_size) : 0.0; }
};

SquarefreeCensus squarefree_trace_census(std::int64_t alphabet, double N,
                                         const semigroup::EnumerationLimits& limits = {});

struct DiscriminantRow {
  std::int64_t t;
  std::int64_t D;
  std::uint64_t multiplicity;
};

inline constexpr double kMaxCensusT = 1e8;

/// Traces t <= sqrt(T) with t^2 - 4 square-free and M_A(t) >= threshold(t).
std::vector<DiscriminantRow> discriminant_census(
    std::int64_t alphabet, double T, const std::function<std::uint64_t(std::int64_t)>& threshold = {},
    const semigroup::EnumerationLimits& limits = {});

struct CensusClass {
  cf::Word word;  // canonical rotation
  forms::IndefiniteForm form;  // matrix_to_form of the word matrix
  forms::FormCycle cycle;
};

/// Form classes realized by trace-t words of Gamma_A, D = t^2 - 4.
std::vector<CensusClass> class_census(std::int64_t D, std::int64_t alphabet,
                                      const semigroup::EnumerationLimits& limits = {});

}  // namespace lowlying::sieve
