#include "lowlying/sieve_lab.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "lowlying/arith.hpp"
#include "lowlying/errors.hpp"
#include "lowlying/modular.hpp"

namespace lowlying::sieve {

namespace {

std::int64_t trace_value(Int t) {
  Int n = checked_sub(checked_mul(t, t), 4);
  return narrow64(n);
}

void check_budget(const SiftingSequence& seq, const SiftBudget& budget) {
  if (seq.distinct() > budget.max_distinct) {
    throw CapExceeded("sifting budget of " + std::to_string(budget.max_distinct) +
                      " distinct values exceeded; shard the source and merge the counts");
  }
}

}  // namespace

void SiftingSequence::add(std::int64_t n, std::uint64_t multiplicity) {
  values[n] += multiplicity;
  source_size += multiplicity;
}

SiftingSequence sift_words(const std::vector<cf::Word>& words) {
  if (words.empty()) throw DomainError("empty source");
  SiftingSequence seq;
  for (const auto& w : words) seq.add(trace_value(cf::word_to_matrix(w).trace()));
  return seq;
}

SiftingSequence sift_values(const semigroup::BilinearSet& pi, const SiftBudget& budget) {
  SiftingSequence seq;
  pi.for_each_trace([&](Int t) {
    seq.add(trace_value(t));
    check_budget(seq, budget);
  });
  seq.N = static_cast<double>(pi.norm_bound());
  return seq;
}

SiftingSequence sift_ball(std::int64_t alphabet, double N, const SiftBudget& budget,
                          const semigroup::EnumerationLimits& limits) {
  SiftingSequence seq;
  seq.N = N;
  semigroup::visit_ball(alphabet, semigroup::NormBound::closed(N), semigroup::Parity::Even,
                        [&](const std::vector<std::int64_t>&, const semigroup::Mat64& m) {
                          seq.add(trace_value(m.trace()));
                          check_budget(seq, budget);
                        },
                        limits);
  if (seq.source_size == 0) throw DomainError("empty source: the ball contains no elements");
  return seq;
}

std::uint64_t A_q(const SiftingSequence& seq, std::int64_t q) {
  arith::require_squarefree(q, "modulus");
  std::uint64_t n = 0;
  for (const auto& [value, mult] : seq.values) {
    if (value % q == 0) n += mult;
  }
  return n;
}

RemainderProfile remainder_profile(const SiftingSequence& seq, std::int64_t Q) {
  if (Q < 2) throw DomainError("cutoff Q must be >= 2");
  RemainderProfile out;
  out.source_size = seq.source_size;
  Rational size(static_cast<long long>(seq.source_size));
  Rational total = 0;
  for (std::int64_t q : arith::squarefree_range(1, Q)) {
    RemainderRow row{q, A_q(seq, q), modular::beta(q) * size, 0};
    row.remainder = Rational(static_cast<long long>(row.count)) - row.expected;
    total += abs(row.remainder);
    out.rows.push_back(std::move(row));
  }
  out.summary = seq.source_size ? total / size : Rational(0);
  return out;
}

std::uint64_t almost_prime_census(const SiftingSequence& seq, std::int64_t z) {
  if (z < 2) throw DomainError("threshold z must be >= 2");
  auto primes = arith::primes_up_to(z);
  std::uint64_t n = 0;
  for (const auto& [value, mult] : seq.values) {
    bool rough = std::none_of(primes.begin(), primes.end(), [v = value](std::int64_t p) { return v % p == 0; });
    if (rough) n += mult;
  }
  return n;
}

bool trace_discriminant_squarefree(std::int64_t t) {
  if (t < 3) throw DomainError("trace must be >= 3");
  return t % 2 == 1 && arith::is_squarefree(t - 2) && arith::is_squarefree(t + 2);
}

SquarefreeCensus squarefree_trace_census(std::int64_t alphabet, double N, const semigroup::EnumerationLimits& limits) {
  SquarefreeCensus out;
  std::unordered_map<std::int64_t, bool> memo;
  semigroup::visit_ball(alphabet, semigroup::NormBound::closed(N), semigroup::Parity::Even,
                        [&](const std::vector<std::int64_t>&, const semigroup::Mat64& m) {
                          ++out.ball_size;
                          std::int64_t t = m.trace();
                          auto it = memo.find(t);
                          if (it == memo.end()) it = memo.emplace(t, trace_discriminant_squarefree(t)).first;
                          if (it->second) {
                            ++out.count;
                            ++out.counted_traces[t];
                          }
                        },
                        limits);
  return out;
}

std::vector<DiscriminantRow> discriminant_census(std::int64_t alphabet, double T,
                                                 const std::function<std::uint64_t(std::int64_t)>& threshold,
                                                 const semigroup::EnumerationLimits& limits) {
  if (!(T >= 0)) throw DomainError("T must be non-negative");
  if (T > kMaxCensusT) throw CapExceeded("T exceeds the census cap 1e8");
  auto tmax = static_cast<std::int64_t>(isqrt(static_cast<Int>(std::floor(T))));
  std::vector<DiscriminantRow> out;
  if (tmax < 3) return out;
  auto hist = semigroup::trace_histogram(alphabet, tmax, limits);
  for (std::int64_t t = 3; t <= tmax; ++t) {
    if (!trace_discriminant_squarefree(t)) continue;
    std::uint64_t m = hist[static_cast<std::size_t>(t)];
    std::uint64_t need = threshold ? threshold(t) : 1;
    if (m >= need) out.push_back({t, t * t - 4, m});
  }
  return out;
}

std::vector<CensusClass> class_census(std::int64_t D, std::int64_t alphabet, const semigroup::EnumerationLimits& limits) {
  if (D < 5) throw DomainError("discriminant must be t^2 - 4 with t >= 3");
  std::int64_t t = static_cast<std::int64_t>(isqrt(Int(D) + 4));
  if (t * t - 4 != D) throw DomainError("discriminant " + std::to_string(D) + " is not of the form t^2 - 4");
  if (!arith::is_squarefree(D)) throw DomainError("discriminant " + std::to_string(D) + " is not square-free");
  std::vector<CensusClass> out;
  for (const auto& w : semigroup::cyclic_classes(alphabet, t, limits)) {
    auto form = forms::matrix_to_form(cf::word_to_matrix(w));
    auto cy = forms::cycle(forms::reduce(form));
    for (const auto& seen : out) {
      if (seen.cycle.contains(cy.forms.front())) {
        throw InvariantViolation("words " + seen.word.to_string() + " and " + w.to_string() + " share a form class");
      }
    }
    out.push_back({w, form, std::move(cy)});
  }
  return out;
}

}  // namespace lowlying::sieve
