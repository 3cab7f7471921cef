#include <doctest.h>

#include <cmath>
#include <random>

#include "lowlying/cf_core.hpp"
#include "lowlying/errors.hpp"
#include "oracles/oracles.hpp"

using namespace lowlying;
using cf::QuadraticIrrational;
using cf::UnimodularMatrix;
using cf::Word;

namespace {

std::vector<Word> all_words(std::int64_t alphabet, std::size_t max_length) {
  std::vector<Word> out;
  std::vector<std::vector<std::int64_t>> level{{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& w : level) {
      for (std::int64_t a = 1; a <= alphabet; ++a) {
        auto v = w;
        v.push_back(a);
        out.emplace_back(v);
        next.push_back(std::move(v));
      }
    }
    level = std::move(next);
  }
  return out;
}

Word random_word(std::mt19937_64& rng, std::int64_t alphabet, std::size_t length) {
  std::uniform_int_distribution<std::int64_t> digit(1, alphabet);
  std::vector<std::int64_t> d(length);
  for (auto& a : d) a = digit(rng);
  return Word(d);
}

}  // namespace

TEST_CASE("word parsing and rotations") {
  auto w = Word::parse("1, 1,1,2,1,2");
  CHECK(w.to_string() == "1,1,1,2,1,2");
  CHECK(w.rotated(2).to_string() == "1,2,1,2,1,1");
  CHECK(Word{2, 1, 1}.canonical_rotation() == Word{1, 1, 2});
  CHECK(Word{1, 35}.is_rotation_of(Word{35, 1}));
  CHECK_FALSE(Word{1, 2}.is_rotation_of(Word{1, 1}));
  CHECK_THROWS_AS(Word::parse("1,0"), DomainError);
  CHECK_THROWS_AS(Word::over_alphabet({1, 5}, 4), DomainError);
}

TEST_CASE("word_to_matrix on the worked examples") {
  auto m = cf::word_to_matrix(Word{1, 1});
  CHECK(m == UnimodularMatrix(2, 1, 1, 1));
  CHECK(m.trace() == 3);

  auto m35 = cf::word_to_matrix(Word{1, 35});
  CHECK(m35 == UnimodularMatrix(36, 1, 35, 1));
  CHECK(m35.trace() * m35.trace() - 4 == 1365);

  auto m6 = cf::word_to_matrix(Word{1, 1, 1, 2, 1, 2});
  CHECK(m6 == UnimodularMatrix(30, 11, 19, 7));
  CHECK(m6.trace() == 37);

  CHECK_THROWS_WITH_AS(cf::word_to_matrix(Word{}), "empty word has no canonical matrix", DomainError);
}

TEST_CASE("word matrices are non-negative with determinant (-1)^len") {
  for (const auto& w : all_words(3, 6)) {
    auto m = cf::word_to_matrix(w);
    CHECK(m.a >= 0);
    CHECK(m.b >= 0);
    CHECK(m.c >= 0);
    CHECK(m.d >= 0);
    CHECK(m.det() == (w.size() % 2 == 0 ? 1 : -1));
    CHECK(m.norm_sq() == m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d);
  }
}

TEST_CASE("continuant identity against exact convergents") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto w = random_word(rng, 9, 2 + trial % 12);
    auto m = cf::word_to_matrix(w);
    auto full = oracle::cf_value(w.digits());
    CHECK(m.a == Int(static_cast<long long>(numerator(full))));
    CHECK(m.c == Int(static_cast<long long>(denominator(full))));
    std::vector<std::int64_t> head(w.digits().begin(), w.digits().end() - 1);
    auto prev = oracle::cf_value(head);
    CHECK(m.b == Int(static_cast<long long>(numerator(prev))));
    CHECK(m.d == Int(static_cast<long long>(denominator(prev))));

    auto conv = cf::convergents(w);
    CHECK(conv.back().p == m.a);
    CHECK(conv.back().q == m.c);
  }
}

TEST_CASE("fixed points") {
  CHECK(cf::fixed_point(UnimodularMatrix(2, 1, 1, 1)) == QuadraticIrrational(1, 2, 5));
  CHECK(cf::fixed_point(UnimodularMatrix(36, 1, 35, 1)) == QuadraticIrrational(35, 70, 1365));
  CHECK(cf::fixed_point(UnimodularMatrix(30, 11, 19, 7)) == QuadraticIrrational(23, 38, 1365));
  CHECK_THROWS_WITH_AS(cf::fixed_point(UnimodularMatrix(1, 1, 0, 1)), doctest::Contains("not hyperbolic"), DomainError);
  CHECK_THROWS_WITH_AS(cf::fixed_point(UnimodularMatrix(-1, 1, 0, -1)), doctest::Contains("not hyperbolic"),
                       DomainError);
  CHECK_THROWS_WITH_AS(cf::fixed_point(UnimodularMatrix(0, -1, 1, 0)), doctest::Contains("not hyperbolic"),
                       DomainError);
  // det +1, trace 4, c = 0
  CHECK_THROWS_AS(UnimodularMatrix(2, 5, 0, 2), DomainError);
  CHECK_THROWS_WITH_AS(cf::fixed_point(UnimodularMatrix(1, 5, 0, 1)), doctest::Contains("not hyperbolic"),
                       DomainError);
}

TEST_CASE("fixed point is fixed by the Mobius action") {
  for (const auto& w : all_words(4, 4)) {
    if (!w.is_even()) continue;
    auto m = cf::word_to_matrix(w);
    auto x = cf::fixed_point(m);
    CHECK(cf::mobius_fixes(m, x));
    double value = static_cast<double>(x.value());
    double image = static_cast<double>((m.a * value + m.b) / (m.c * value + m.d));
    CHECK(image == doctest::Approx(value).epsilon(1e-12));
  }
}

TEST_CASE("cf_expand on the worked examples") {
  auto golden = cf::cf_expand(QuadraticIrrational(1, 2, 5));
  CHECK(golden.preperiod.empty());
  CHECK(golden.period == Word{1});

  auto x1365 = cf::cf_expand(QuadraticIrrational(35, 70, 1365));
  CHECK(x1365.preperiod.empty());
  CHECK(x1365.period == Word{1, 35});

  auto x1337 = cf::cf_expand(QuadraticIrrational(-27, 38, 1337));
  CHECK(x1337.period.is_rotation_of(Word{1, 1, 2, 17, 1, 8, 5, 8, 1, 17, 2, 1, 1, 3, 1, 35, 1, 3}));
  CHECK_FALSE(x1337.preperiod.empty());

  CHECK_THROWS_WITH_AS(cf::cf_expand(QuadraticIrrational(1, 3, 5)), doctest::Contains("unnormalized surd"),
                       DomainError);
  CHECK_THROWS_WITH_AS(QuadraticIrrational(1, 0, 5), doctest::Contains("unnormalized surd"), DomainError);
  CHECK_THROWS_AS(QuadraticIrrational(1, 2, 9), DomainError);
}

TEST_CASE("round trip: even words to fixed points and back") {
  for (const auto& w : all_words(4, 6)) {
    if (!w.is_even()) continue;
    auto x = cf::fixed_point(cf::word_to_matrix(w));
    auto e = cf::cf_expand(x);
    CHECK(e.preperiod.empty());
    // The period may be a proper root of w, e.g. (1,1) has period (1).
    Word unrolled = e.period;
    while (unrolled.size() < w.size()) unrolled = unrolled + e.period;
    CHECK(unrolled.is_rotation_of(w));
  }
}

TEST_CASE("is_reduced examples") {
  CHECK(cf::is_reduced(QuadraticIrrational(1, 2, 5)));
  CHECK(cf::is_reduced(QuadraticIrrational(35, 70, 1365)));
  CHECK_FALSE(cf::is_reduced(QuadraticIrrational(-27, 38, 1337)));
}

TEST_CASE("purely periodic iff reduced, exhaustively over small surds") {
  for (Int D = 2; D < 60; ++D) {
    if (is_square(D)) continue;
    for (Int P = -12; P <= 12; ++P) {
      for (Int Q = -30; Q <= 30; ++Q) {
        if (Q == 0 || (D - P * P) % Q != 0) continue;
        QuadraticIrrational x(P, Q, D);
        auto e = cf::cf_expand(x);
        CHECK(cf::is_reduced(x) == e.preperiod.empty());
        // floating-point cross-check away from the boundaries
        long double v = x.value();
        long double conj = (static_cast<long double>(P) - std::sqrt(static_cast<long double>(D))) / static_cast<long double>(Q);
        bool clear = std::fabs(v - 1) > 1e-9 && std::fabs(conj) > 1e-9 && std::fabs(conj + 1) > 1e-9;
        if (clear) CHECK(cf::is_reduced(x) == (v > 1 && conj > -1 && conj < 0));
      }
    }
  }
}

TEST_CASE("galois conjugate is an involution") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(-50, 50);
  for (int i = 0; i < 200; ++i) {
    Int P = pick(rng), Q = pick(rng);
    if (Q == 0) Q = 3;
    QuadraticIrrational x(P, Q, 1365);
    auto c = cf::galois_conjugate(x);
    CHECK(cf::galois_conjugate(c) == x);
    CHECK(static_cast<double>(c.value()) ==
          doctest::Approx(static_cast<double>((P - std::sqrt(1365.0L)) / Q)).epsilon(1e-12));
  }
  CHECK(cf::galois_conjugate(QuadraticIrrational(1, 2, 5)).to_string() == "(-1+sqrt(5))/-2");
}

TEST_CASE("surd text format") {
  auto x = QuadraticIrrational::parse("(35+sqrt(1365))/70");
  CHECK(x == QuadraticIrrational(35, 70, 1365));
  CHECK(x.to_string() == "(35+sqrt(1365))/70");
  CHECK(QuadraticIrrational::parse(x.to_string()) == x);
  CHECK_THROWS_AS(QuadraticIrrational::parse("35+sqrt(1365)"), DomainError);
}

TEST_CASE("surd_sign decides exactly") {
  CHECK(cf::surd_sign(-2, 1, 5) == 1);  // sqrt 5 > 2
  CHECK(cf::surd_sign(-3, 1, 5) == -1);
  CHECK(cf::surd_sign(0, 0, 5) == 0);
  // 37 - sqrt(1365) > 0 and 36 - sqrt(1365) < 0
  CHECK(cf::surd_sign(37, -1, 1365) == 1);
  CHECK(cf::surd_sign(36, -1, 1365) == -1);
}

TEST_CASE("rational expansions") {
  auto e = cf::rational_expansion(30, 19);
  CHECK(e == std::vector<Int>{1, 1, 1, 2, 1, 2});
}
