// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lowlying/arith.hpp"
#include "lowlying/dimension.hpp"
#include "lowlying/geodesics.hpp"
#include "lowlying/modular.hpp"
#include "lowlying/quad_forms.hpp"
#include "lowlying/sieve_lab.hpp"
#include "lowlying/thin_semigroup.hpp"
#include "oracles/oracles.hpp"

using namespace lowlying;
using cf::Word;
using forms::IndefiniteForm;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      else detail.str("");
      pass = false;
      detail << what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs <= budget_seconds, "over time budget");
  if (!o.pass) ++failures;
  std::printf("%s  %2d  %-28s %8.2fs  %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), secs, o.detail.str().c_str());
  std::fflush(stdout);
}

std::vector<Word> words_up_to(std::int64_t alphabet, std::size_t max_length, bool even_only) {
  std::vector<Word> out;
  std::vector<std::vector<std::int64_t>> level{{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& w : level)
      for (std::int64_t a = 1; a <= alphabet; ++a) {
        auto v = w;
        v.push_back(a);
        if (!even_only || len % 2 == 0) out.emplace_back(v);
        next.push_back(std::move(v));
      }
    level = std::move(next);
  }
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// Same proper class as f, or as its B-sign mirror [A,-B,C].
bool same_class_up_to_sign(const std::vector<forms::FormCycle>& cycles, const IndefiniteForm& f,
                           const IndefiniteForm& target) {
  auto i = forms::find_cycle(cycles, f);
  return i == forms::find_cycle(cycles, target) ||
         i == forms::find_cycle(cycles, IndefiniteForm(target.A, -target.B, target.C));
}

}  // namespace

int main() {
  criterion(1, "D=1365 dictionary", 1, [](Outcome& o) {
    const std::vector<Word> words{Word{1, 35}, Word{5, 7}, Word{1, 1, 1, 11}, Word{1, 1, 1, 2, 1, 2}};
    const std::vector<IndefiniteForm> listed{IndefiniteForm(35, 35, -1), IndefiniteForm(7, 35, -5),
                                             IndefiniteForm(23, 33, -3), IndefiniteForm(19, 23, -11)};
    auto cycles = forms::class_cycles(1365);
    std::set<std::size_t> hit;
    for (std::size_t i = 0; i < words.size(); ++i) {
      auto m = cf::word_to_matrix(words[i]);
      o.require(m.trace() == 37, words[i].to_string() + " trace " + to_string(m.trace()));
      auto f = forms::matrix_to_form(m);
      o.require(f.discriminant() == 1365, words[i].to_string() + " discriminant");
      o.require(same_class_up_to_sign(cycles, f, listed[i]),
                words[i].to_string() + " -> " + f.to_string() + " not in the class of " + listed[i].to_string());
      hit.insert(forms::find_cycle(cycles, forms::reduce(f)));
    }
    o.require(hit.size() == 4, "cycles not pairwise distinct");
    if (o.pass) o.detail << "4 words, trace 37, 4 distinct cycles";
  });

  criterion(2, "D=1337 period", 1, [](Outcome& o) {
    const Word expected{1, 1, 2, 17, 1, 8, 5, 8, 1, 17, 2, 1, 1, 3, 1, 35, 1, 3};
    auto cy = forms::cycle(forms::reduce(IndefiniteForm(19, 27, -8)));
    o.require(cy.size() == 18, "cycle length " + std::to_string(cy.size()));
    auto w = forms::cycle_to_word(cy);
    o.require(w.is_rotation_of(expected), "period " + w.to_string());
    if (o.pass) o.detail << "cycle length 18, period matches up to rotation";
  });

  criterion(3, "local densities", 30, [](Outcome& o) {
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
      o.require(modular::beta(p) == modular::beta_bruteforce(p), "beta(" + std::to_string(p) + ")");
      for (std::int64_t t : {2, -2})
        o.require(modular::rho_t_bruteforce(p, t) == Rational(1, p * p - 1),
                  "rho_" + std::to_string(t) + "(" + std::to_string(p) + ")");
    }
    int checked = 0;
    for (std::int64_t q = 1; q <= 1000; ++q) {
      if (!arith::is_squarefree(q)) continue;
      int nu = arith::nu(q);
      std::int64_t expected = std::int64_t{1} << (nu - (q % 2 == 0 ? 1 : 0));
      o.require(modular::sqrt4_count(q) == expected, "sqrt4_count(" + std::to_string(q) + ")");
      ++checked;
    }
    if (o.pass) o.detail << "6 primes exact, " << checked << " square-free q";
  });

  criterion(4, "exponential sums", 60, [](Outcome& o) {
    const double tol = 1e-6;
    double worst_k = 0;
    for (std::int64_t p = 2; p <= 101; ++p) {
      if (!is_prime(p)) continue;
      for (std::int64_t a = 1; a < p; ++a)
        for (std::int64_t b = 1; b < p; ++b) {
          double k = std::fabs(modular::kloosterman(a, b, p));
          double ratio = k / (2 * std::sqrt(static_cast<double>(p)));
          worst_k = std::max(worst_k, ratio);
          if (k > 2 * std::sqrt(static_cast<double>(p)) + tol)
            o.require(false, "K(" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(p) + ")");
        }
    }
    std::mt19937_64 rng(20240601);
    double worst_s = 0;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
      double bound = 2 * std::pow(static_cast<double>(p), 1.5);
      auto check = [&](const modular::IntegerVector4& s) {
        if (!s.primitive_mod(p)) return;
        double v = std::abs(modular::sl2_charsum(p, s));
        worst_s = std::max(worst_s, v / bound);
        if (v > bound + tol) o.require(false, "charsum mod " + std::to_string(p));
      };
      if (p <= 5) {
        for (std::int64_t x = 0; x < p; ++x)
          for (std::int64_t y = 0; y < p; ++y)
            for (std::int64_t z = 0; z < p; ++z)
              for (std::int64_t w = 0; w < p; ++w) check({x, y, z, w});
      } else {
        std::uniform_int_distribution<std::int64_t> pick(0, p - 1);
        for (int i = 0; i < 1000; ++i) check({pick(rng), pick(rng), pick(rng), pick(rng)});
      }
    }
    if (o.pass) o.detail << "max |K|/2sqrt(p) = " << fmt(worst_k) << ", max |S|/2p^1.5 = " << fmt(worst_s);
  });

  criterion(5, "Hensley exponent", 300, [](Outcome& o) {
    auto d2 = dimension::estimate(2, 14, 1e-6);
    double target = 2 * d2.midpoint();
    std::vector<double> grid{1e3, std::pow(10.0, 3.5), 1e4, std::pow(10.0, 4.5), 1e5};
    auto fit = semigroup::hensley_exponent(2, grid);
    o.require(std::fabs(fit.slope - target) <= 0.05, "slope " + fmt(fit.slope) + " vs " + fmt(target));
    o.detail.str("");
    o.detail << "slope " << fmt(fit.slope) << ", 2*delta_2 = " << fmt(target);
  });

  criterion(6, "dimension asymptotic", 120, [](Outcome& o) {
    for (std::int64_t A : {20, 50}) {
      auto e = dimension::estimate(A, dimension::max_depth(A), 1e-5);
      double a = dimension::asymptotic(A);
      bool ok = e.lower - 0.02 <= a && a <= e.upper + 0.02;
      o.require(ok, "A=" + std::to_string(A) + " bracket [" + fmt(e.lower) + ", " + fmt(e.upper) + "] vs " + fmt(a));
      if (o.pass) o.detail << "A=" << A << " [" << fmt(e.lower) << ", " << fmt(e.upper) << "] ~ " << fmt(a) << "  ";
    }
  });

  criterion(7, "trace fiber t=37", 60, [](Outcome& o) {
    struct Expect {
      std::int64_t A;
      std::uint64_t multiplicity;
      std::size_t classes;
    };
    for (auto [A, m, c] : {Expect{2, 6, 1}, Expect{11, 10, 2}, Expect{35, 14, 4}}) {
      auto got_m = semigroup::trace_multiplicity(A, 37);
      auto got_c = semigroup::cyclic_classes(A, 37).size();
      o.require(got_m == m, "M_" + std::to_string(A) + "(37) = " + std::to_string(got_m) + ", expected " +
                                std::to_string(m));
      o.require(got_c == c, std::to_string(got_c) + " classes at A=" + std::to_string(A) + ", expected " +
                                std::to_string(c));
    }
    auto census = sieve::class_census(1365, 35);
    std::set<Word> words;
    for (const auto& cl : census) words.insert(cl.word);
    o.require(words == std::set<Word>{Word{1, 35}, Word{5, 7}, Word{1, 1, 1, 11}, Word{1, 1, 1, 2, 1, 2}},
              "A=35 census differs from the four listed classes");
  });

  criterion(8, "heights", 30, [](Outcome& o) {
    double h11 = geodesics::max_height(Word{1, 1});
    double h135 = geodesics::max_height(Word{1, 35});
    double h6 = geodesics::max_height(Word{1, 1, 1, 2, 1, 2});
    o.require(std::fabs(h11 - std::sqrt(5.0) / 2) <= 1e-9, "max_height(1,1) = " + fmt(h11));
    o.require(std::fabs(h135 - std::sqrt(1365.0) / 2) <= 1e-9, "max_height(1,35) = " + fmt(h135));
    o.require(h6 < 2, "max_height(1,1,1,2,1,2) = " + fmt(h6));
    std::size_t n = 0;
    for (const auto& w : words_up_to(3, 6, true)) {
      auto d = w.digits();
      double amax = static_cast<double>(*std::max_element(d.begin(), d.end()));
      double h = geodesics::max_height(w);
      if (!(amax / 2 < h && h < (amax + 2) / 2 && h <= 2.5)) o.require(false, "sandwich fails at " + w.to_string());
      ++n;
    }
    if (o.pass) o.detail << "heights " << fmt(h11) << ", " << fmt(h135) << ", " << fmt(h6) << "; sandwich on " << n
                         << " words";
  });

  criterion(9, "remainder ledger", 300, [](Outcome& o) {
    auto coarse = sieve::sift_ball(2, 1e3);
    auto fine = sieve::sift_ball(2, 1e4);
    auto pc = sieve::remainder_profile(coarse, 100);
    auto pf = sieve::remainder_profile(fine, 100);
    Rational size(static_cast<long long>(fine.source_size));
    for (const auto& row : pf.rows) {
      std::uint64_t direct = 0;
      for (const auto& [n, m] : fine.values)
        if (n % row.q == 0) direct += m;
      Rational r = Rational(static_cast<long long>(direct)) - modular::beta(row.q) * size;
      o.require(row.count == direct && row.remainder == r, "row q=" + std::to_string(row.q));
    }
    o.require(pf.summary < pc.summary, "summary did not decrease: " + to_string(pc.summary) + " -> " +
                                           to_string(pf.summary));
    if (o.pass) o.detail << pf.rows.size() << " rows exact; summary " << fmt(to_double(pc.summary)) << " -> "
                         << fmt(to_double(pf.summary));
  });

  criterion(10, "square-free census", 300, [](Outcome& o) {
    auto census = sieve::squarefree_trace_census(2, 1e4);
    o.require(census.count > 0, "empty census");
    std::uint64_t total = 0;
    for (const auto& [t, n] : census.counted_traces) {
      Int D = Int(t) * t - 4;
      o.require(forms::is_fundamental(D), "trace " + std::to_string(t) + " counted with non-fundamental D");
      o.require(oracle::squarefree_by_squares(t * t - 4), "trace " + std::to_string(t) + " not square-free");
      total += n;
    }
    o.require(total == census.count, "per-trace counts do not add up");
    // The even words with trace 4, e.g. (1,2), must be excluded.
    auto fours = semigroup::trace_fiber_words(2, 4);
    o.require(!fours.empty() && !census.counted_traces.contains(4), "trace 4 not excluded");
    std::uint64_t excluded = 0;
    semigroup::visit_ball(2, semigroup::NormBound::closed(1e4), semigroup::Parity::Even,
                          [&](const std::vector<std::int64_t>&, const semigroup::Mat64& m) {
                            if (!oracle::squarefree_by_squares(m.trace() * m.trace() - 4)) ++excluded;
                          });
    o.require(excluded + census.count == census.ball_size, "excluded + counted != ball size");
    if (o.pass) o.detail << census.count << "/" << census.ball_size << " counted, " << excluded << " excluded";
  });

  criterion(11, "oracle equivalence", 120, [](Outcome& o) {
    std::size_t balls = 0;
    for (std::int64_t A = 1; A <= 3; ++A) {
      for (std::int64_t N = 1; N <= 50; ++N) {
        auto ours = semigroup::enumerate_ball(A, semigroup::NormBound::closed(static_cast<double>(N)),
                                              semigroup::Parity::Even);
        auto ref = oracle::ball_breadth_first(A, N * N, true);
        std::vector<std::pair<oracle::Digits, oracle::Mat>> a, b;
        for (const auto& e : ours)
          a.push_back({e.word.digits(),
                       {narrow64(e.matrix.a), narrow64(e.matrix.b), narrow64(e.matrix.c), narrow64(e.matrix.d)}});
        for (const auto& w : ref) b.push_back({w, oracle::word_matrix(w)});
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) o.require(false, "ball A=" + std::to_string(A) + " N=" + std::to_string(N));
        ++balls;
      }
    }
    std::size_t words = 0;
    for (const auto& w : words_up_to(4, 6, true)) {
      auto e = cf::cf_expand(cf::fixed_point(cf::word_to_matrix(w)));
      Word unrolled = e.period;
      while (unrolled.size() < w.size()) unrolled = unrolled + e.period;
      if (!e.preperiod.empty() || !unrolled.is_rotation_of(w)) o.require(false, "round trip " + w.to_string());
      ++words;
    }
    if (o.pass) o.detail << balls << " balls, " << words << " words";
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
