#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "lowlying/errors.hpp"
#include "lowlying/thin_semigroup.hpp"
#include "oracles/oracles.hpp"

using namespace lowlying;
using namespace lowlying::semigroup;
using cf::Word;

namespace {

std::vector<oracle::Digits> digits_of(const std::vector<SemigroupElement>& elements) {
  std::vector<oracle::Digits> out;
  for (const auto& e : elements) out.push_back(e.word.digits());
  return out;
}

}  // namespace

TEST_CASE("norm bounds") {
  CHECK(NormBound::closed(3).max_norm_sq == 9);
  CHECK(NormBound::open(3).max_norm_sq == 8);
  CHECK(NormBound::closed(std::sqrt(7.0)).max_norm_sq == 7);
  CHECK(NormBound::open(std::sqrt(7.0)).max_norm_sq == 6);
  CHECK(NormBound::closed(2.5).max_norm_sq == 6);
}

TEST_CASE("smallest balls") {
  auto ball = enumerate_ball(2, NormBound::closed(3), Parity::Even);
  REQUIRE(ball.size() == 1);
  CHECK(ball[0].word == Word{1, 1});
  CHECK(ball[0].norm_sq == 7);
  CHECK(ball[0].trace == 3);
  CHECK(enumerate_ball(2, NormBound::closed(2), Parity::Even).empty());
}

TEST_CASE("alphabet 1 gives Fibonacci matrices, one per even length") {
  auto ball = enumerate_ball(1, NormBound::closed(1e6), Parity::Even);
  REQUIRE(ball.size() >= 10);
  std::vector<std::int64_t> fib{1, 1};
  while (fib.size() < 2 * ball.size() + 3) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  for (std::size_t i = 0; i < ball.size(); ++i) {
    std::size_t n = 2 * (i + 1);
    CHECK(ball[i].word.size() == n);
    CHECK(ball[i].matrix == cf::UnimodularMatrix(fib[n], fib[n - 1], fib[n - 1], fib[n - 2]));
  }
}

TEST_CASE("pruned DFS equals the breadth-first oracle for A <= 3, N <= 50") {
  for (std::int64_t A = 1; A <= 3; ++A) {
    for (double N : {3.0, 7.5, 10.0, 25.0, 50.0}) {
      for (Parity parity : {Parity::Even, Parity::Any}) {
        auto ours = digits_of(enumerate_ball(A, NormBound::closed(N), parity));
        auto ref = oracle::ball_breadth_first(A, static_cast<std::int64_t>(N * N), parity == Parity::Even);
        std::sort(ours.begin(), ours.end());
        std::sort(ref.begin(), ref.end());
        CHECK(ours == ref);
        CHECK(count_ball(A, NormBound::closed(N), parity) == ref.size());
      }
    }
  }
}

TEST_CASE("ball elements satisfy the element invariants") {
  for (const auto& e : enumerate_ball(3, NormBound::closed(200), Parity::Any)) {
    CHECK(e.matrix == cf::word_to_matrix(e.word));
    CHECK(e.norm_sq == e.matrix.norm_sq());
    CHECK(e.matrix.det() == (e.word.size() % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("norm grows along every extension") {
  for (const auto& e : enumerate_ball(3, NormBound::closed(300), Parity::Any)) {
    for (std::int64_t a = 1; a <= 3; ++a) {
      auto longer = SemigroupElement::from_word(e.word + Word{a});
      CHECK(longer.norm_sq > e.norm_sq);
      CHECK(longer.trace >= e.trace);
    }
  }
}

TEST_CASE("enumeration limits") {
  EnumerationLimits tiny{100};
  CHECK_THROWS_AS(count_ball(3, NormBound::closed(1e4), Parity::Even, tiny), CapExceeded);
}

TEST_CASE("Hensley fits") {
  auto grid = geometric_grid(1e3, 1e5, 5);
  REQUIRE(grid.size() == 5);
  CHECK(grid[1] == doctest::Approx(std::pow(10.0, 3.5)));
  auto fit = hensley_exponent(2, grid);
  CHECK(fit.counts.size() == 5);
  CHECK(std::is_sorted(fit.counts.begin(), fit.counts.end()));
  CHECK(std::fabs(fit.slope - 2 * 0.5313) < 0.05);

  auto flat = hensley_exponent(1, geometric_grid(1e3, 1e8, 6));
  CHECK(flat.slope < 0.2);

  CHECK_THROWS_AS(hensley_exponent(2, {1e3, 1e4, 1e5}), DomainError);
  CHECK_THROWS_AS(hensley_exponent(2, {1e3, 1e3, 1e4, 1e5}), DomainError);
}

TEST_CASE("trace multiplicities agree with the breadth-first fiber oracle") {
  CHECK(trace_multiplicity(1, 3) == 1);
  CHECK(trace_multiplicity(2, 37) == 6);
  CHECK(trace_multiplicity(35, 37) == 14);
  CHECK(trace_multiplicity(11, 37) == oracle::trace_fiber_breadth_first(11, 37).size());
  for (std::int64_t A = 1; A <= 4; ++A) {
    for (std::int64_t t = 3; t <= 60; ++t) {
      auto ref = oracle::trace_fiber_breadth_first(A, t);
      CHECK(trace_multiplicity(A, t) == ref.size());
    }
  }
  CHECK_THROWS_AS(trace_multiplicity(2, 2), DomainError);
}

TEST_CASE("trace multiplicity is monotone in the alphabet") {
  for (std::int64_t t = 3; t <= 80; ++t) {
    std::uint64_t prev = 0;
    for (std::int64_t A = 1; A <= 8; ++A) {
      auto m = trace_multiplicity(A, t);
      CHECK(m >= prev);
      prev = m;
    }
  }
}

TEST_CASE("trace histogram matches single-trace counts and the t^1.3 envelope") {
  auto hist = trace_histogram(3, 400);
  REQUIRE(hist.size() == 401);
  for (std::int64_t t = 3; t <= 400; t += 7) CHECK(hist[t] == trace_multiplicity(3, t));
  for (std::int64_t t = 3; t <= 400; ++t) CHECK(static_cast<double>(hist[t]) <= std::pow(static_cast<double>(t), 1.3));
}

TEST_CASE("cyclic classes") {
  auto c2 = cyclic_classes(2, 37);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0] == Word{1, 1, 1, 2, 1, 2});

  auto c35 = cyclic_classes(35, 37);
  CHECK(c35.size() == 4);
  std::set<Word> expected{Word{1, 35}, Word{5, 7}, Word{1, 1, 1, 11}, Word{1, 1, 1, 2, 1, 2}};
  CHECK(std::set<Word>(c35.begin(), c35.end()) == expected);

  // (5,7) also has digits <= 11, so the A = 11 fiber holds three classes.
  auto c11 = cyclic_classes(11, 37);
  CHECK(c11.size() == 3);
  CHECK(trace_multiplicity(11, 37) == 12);

  std::size_t rotations = 0;
  for (const auto& w : c35) {
    std::set<Word> orbit;
    for (std::size_t k = 0; k < w.size(); ++k) orbit.insert(w.rotated(k));
    rotations += orbit.size();
  }
  CHECK(rotations == 14);
}

TEST_CASE("fixed-length balls") {
  auto small = build_fixed_length_ball(2, 3, "tiny");
  CHECK(small.length == 2);
  REQUIRE(small.members.size() == 1);
  CHECK(small.members[0].word == Word{1, 1});

  auto big = build_fixed_length_ball(2, 1e3, "big");
  CHECK(big.members.size() * big.lengths_realized >= big.ball_size);
  for (const auto& m : big.members) {
    CHECK(m.word.size() == big.length);
    CHECK(m.norm_sq < 1000000);
  }
  auto a = build_fixed_length_ball(5, 1e2, "det");
  auto b = build_fixed_length_ball(5, 1e2, "det");
  CHECK(digits_of(a.members) == digits_of(b.members));
  CHECK_THROWS_AS(build_fixed_length_ball(2, 2, "empty"), DomainError);
}

TEST_CASE("aleph construction") {
  auto trivial = aleph_construct(1e3, 1);
  auto ball = build_fixed_length_ball(2, trivial.U, "S");
  CHECK(digits_of(trivial.members) == digits_of(ball.members));
  CHECK(aleph_error(trivial.members, 1) == 0.0);

  auto aleph = aleph_construct(1e6, 2);
  CHECK(aleph.group_order == 6);
  CHECK(aleph.representatives.size() == 6);
  CHECK(aleph.members.size() == 6 * aleph.popular.size());
  CHECK(aleph_error(aleph.members, 2) == 0.0);
  for (const auto& m : aleph.members) {
    CHECK(m.norm_sq < 1000000000000LL);
    CHECK(m.word.is_even());
    CHECK(m.word.fits_alphabet(2));
  }
  std::set<Word> distinct;
  for (const auto& m : aleph.members) distinct.insert(m.word);
  CHECK(distinct.size() == aleph.members.size());

  CHECK_THROWS_WITH_AS(aleph_construct(10, 2), doctest::Contains("increase Y"), DomainError);
}

TEST_CASE("bilinear set") {
  auto one = [](Word w) { return std::vector<SemigroupElement>{SemigroupElement::from_word(w)}; };
  auto pi = build_Pi(one(Word{1, 1}), one(Word{2, 2}), one(Word{1, 2}));
  CHECK(pi.size() == 1);
  auto e = pi.element(0, 0, 0);
  CHECK(e.word == Word{1, 1, 2, 2, 1, 2});
  CHECK(e.matrix == cf::word_to_matrix(Word{1, 1}) * cf::word_to_matrix(Word{2, 2}) * cf::word_to_matrix(Word{1, 2}));

  std::vector<SemigroupElement> xi, omega;
  for (const auto& s : enumerate_ball(3, NormBound::closed(30), Parity::Even))
    if (s.word.size() == 2) xi.push_back(s);
  for (const auto& s : enumerate_ball(2, NormBound::closed(40), Parity::Even))
    if (s.word.size() == 4) omega.push_back(s);
  auto aleph = aleph_construct(1e6, 2);
  BilinearSet big(xi, aleph.members, omega);
  CHECK(big.size() == xi.size() * aleph.members.size() * omega.size());

  std::multiset<Int> traces;
  big.for_each_trace([&](Int t) { traces.insert(t); });
  std::multiset<Int> expected;
  std::set<Word> words;
  for (std::size_t i = 0; i < xi.size(); ++i)
    for (std::size_t j = 0; j < aleph.members.size(); ++j)
      for (std::size_t k = 0; k < omega.size(); ++k) {
        auto g = big.element(i, j, k);
        expected.insert(g.trace);
        words.insert(g.word);
        CHECK(static_cast<long double>(std::sqrt(static_cast<double>(g.norm_sq))) <= big.norm_bound() * (1 + 1e-12));
      }
  CHECK(traces == expected);
  CHECK(words.size() == big.size());

  CHECK_THROWS_AS(BilinearSet({}, aleph.members, omega), DomainError);
  CHECK_THROWS_AS(BilinearSet(xi, one(Word{3, 3}), omega), DomainError);
  auto mixed = xi;
  mixed.push_back(SemigroupElement::from_word(Word{1, 1, 1, 1}));
  CHECK_THROWS_AS(BilinearSet(mixed, aleph.members, omega), DomainError);
}
