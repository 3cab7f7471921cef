#include "lowlying/thin_semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "lowlying/arith.hpp"
#include "lowlying/errors.hpp"
#include "lowlying/modular.hpp"

namespace lowlying::semigroup {

namespace {

void require_alphabet(std::int64_t alphabet) {
  if (alphabet < 1) throw DomainError("alphabet bound must be >= 1");
  if (alphabet > 1'000'000) throw DomainError("alphabet bound above 10^6 is not supported");
}

/// Largest integer k with k <= x (or k < x when strict), treating values
/// within 1e-9 relative of an integer as that integer.
Int integer_ceiling(long double x, bool strict) {
  if (!(x >= 0)) throw DomainError("norm bound must be non-negative");
  if (x > 1e36L) throw DomainError("norm bound too large");
  long double r = std::round(x);
  if (std::fabs(x - r) <= 1e-9L * std::max<long double>(1.0L, x)) {
    Int k = static_cast<Int>(r);
    return strict ? k - 1 : k;
  }
  return static_cast<Int>(std::floor(x));
}

Mat64 child(const Mat64& m, std::int64_t a) { return {a * m.a + m.b, m.a, a * m.c + m.d, m.c}; }

struct NodeCounter {
  std::uint64_t seen = 0;
  std::uint64_t cap;
  void tick() {
    if (++seen > cap) {
      throw CapExceeded("enumeration cap of " + std::to_string(cap) +
                        " nodes exceeded; lower the bound or raise the cap");
    }
  }
};

struct BallWalker {
  std::int64_t alphabet;
  Int max_norm_sq;
  Parity parity;
  const NodeVisitor& visit;
  NodeCounter counter;
  std::vector<std::int64_t> digits;

  void descend(const Mat64& m) {
    for (std::int64_t a = 1; a <= alphabet; ++a) {
      Mat64 next = child(m, a);
      // Entries grow with a, so once a digit overshoots so do all larger ones.
      if (next.norm_sq() > max_norm_sq) break;
      counter.tick();
      digits.push_back(a);
      if (parity == Parity::Any || digits.size() % 2 == 0) visit(digits, next);
      descend(next);
      digits.pop_back();
    }
  }
};

struct TraceWalker {
  std::int64_t alphabet;
  std::int64_t max_trace;
  const NodeVisitor& visit;
  NodeCounter counter;
  std::vector<std::int64_t> digits;

  void descend(const Mat64& m) {
    for (std::int64_t a = 1; a <= alphabet; ++a) {
      Mat64 next = child(m, a);
      if (next.trace() > max_trace) break;
      counter.tick();
      digits.push_back(a);
      if (digits.size() % 2 == 0) visit(digits, next);
      descend(next);
      digits.pop_back();
    }
  }
};

using ResidueKey = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>;

ResidueKey residue_key(const cf::UnimodularMatrix& m, std::int64_t q) {
  auto r = [q](Int v) { return static_cast<std::int64_t>(mod_floor(v, q)); };
  return {r(m.a), r(m.b), r(m.c), r(m.d)};
}

long double frobenius(const SemigroupElement& e) { return std::sqrt(static_cast<long double>(e.norm_sq)); }

SemigroupElement concat(const SemigroupElement& x, const SemigroupElement& y) {
  SemigroupElement out;
  out.word = x.word + y.word;
  out.matrix = x.matrix * y.matrix;
  out.norm_sq = out.matrix.norm_sq();
  out.trace = out.matrix.trace();
  return out;
}

/// Gamma_2 elements, one per class of SL2(Z/q), the identity class taken by
/// the identity; each is a shortest-norm element of its class.
std::vector<SemigroupElement> class_representatives(std::int64_t q, const EnumerationLimits& limits) {
  std::int64_t classes = modular::sl2_order(q);
  std::map<ResidueKey, SemigroupElement> found;
  SemigroupElement identity = SemigroupElement::from_word(cf::Word{});
  found.emplace(residue_key(identity.matrix, q), identity);
  for (double radius = 4; static_cast<std::int64_t>(found.size()) < classes; radius *= 2) {
    if (radius > 1e6) {
      throw CapExceeded("no Gamma_2 representative of norm <= 1e6 for every class mod " + std::to_string(q));
    }
    auto ball = enumerate_ball(2, NormBound::closed(radius), Parity::Even, limits);
    std::stable_sort(ball.begin(), ball.end(), [](const SemigroupElement& x, const SemigroupElement& y) {
      return std::tie(x.norm_sq, x.word) < std::tie(y.norm_sq, y.word);
    });
    for (const auto& e : ball) found.emplace(residue_key(e.matrix, q), e);
  }
  std::vector<SemigroupElement> out;
  for (auto& [key, e] : found) out.push_back(e);
  return out;
}

}  // namespace

NormBound NormBound::closed(double N) { return {integer_ceiling(static_cast<long double>(N) * N, false)}; }

NormBound NormBound::open(double N) { return {integer_ceiling(static_cast<long double>(N) * N, true)}; }

Int Mat64::norm_sq() const {
  return Int(a) * a + Int(b) * b + Int(c) * c + Int(d) * d;
}

SemigroupElement SemigroupElement::from_word(const cf::Word& w) {
  SemigroupElement out;
  out.word = w;
  out.matrix = w.empty() ? cf::UnimodularMatrix::identity() : cf::word_to_matrix(w);
  out.norm_sq = out.matrix.norm_sq();
  out.trace = out.matrix.trace();
  return out;
}

SemigroupElement SemigroupElement::from_node(const std::vector<std::int64_t>& digits, const Mat64& m) {
  SemigroupElement out;
  out.word = cf::Word(digits);
  out.matrix = m.widen();
  out.norm_sq = m.norm_sq();
  out.trace = m.trace();
  return out;
}

void visit_ball(std::int64_t alphabet, const NormBound& bound, Parity parity, const NodeVisitor& visit,
                const EnumerationLimits& limits) {
  require_alphabet(alphabet);
  if (bound.max_norm_sq > Int(4'000'000'000'000'000'000LL) / 4) {
    throw DomainError("norm bound too large for 64-bit enumeration");
  }
  BallWalker walker{alphabet, bound.max_norm_sq, parity, visit, {0, limits.max_nodes}, {}};
  walker.descend({1, 0, 0, 1});
}

std::vector<SemigroupElement> enumerate_ball(std::int64_t alphabet, const NormBound& bound, Parity parity,
                                             const EnumerationLimits& limits) {
  std::vector<SemigroupElement> out;
  visit_ball(alphabet, bound, parity,
             [&](const std::vector<std::int64_t>& digits, const Mat64& m) {
               out.push_back(SemigroupElement::from_node(digits, m));
             },
             limits);
  return out;
}

std::uint64_t count_ball(std::int64_t alphabet, const NormBound& bound, Parity parity,
                         const EnumerationLimits& limits) {
  std::uint64_t n = 0;
  visit_ball(alphabet, bound, parity, [&](const std::vector<std::int64_t>&, const Mat64&) { ++n; }, limits);
  return n;
}

std::vector<double> geometric_grid(double lo, double hi, int points) {
  if (points < 2 || !(lo > 0) || !(hi > lo)) throw DomainError("degenerate grid");
  std::vector<double> out;
  double step = (std::log10(hi) - std::log10(lo)) / (points - 1);
  for (int i = 0; i < points; ++i) out.push_back(std::pow(10.0, std::log10(lo) + step * i));
  out.back() = hi;
  return out;
}

HensleyFit hensley_exponent(std::int64_t alphabet, const std::vector<double>& norms,
                            const EnumerationLimits& limits) {
  if (norms.size() < 4) throw DomainError("degenerate grid: need at least 4 norm values");
  std::set<double> distinct(norms.begin(), norms.end());
  if (distinct.size() != norms.size()) throw DomainError("degenerate grid: repeated norm values");
  HensleyFit fit;
  fit.alphabet = alphabet;
  fit.norms = norms;
  std::vector<double> xs, ys;
  for (double N : norms) {
    if (!(N >= 1)) throw DomainError("degenerate grid: norms must be >= 1");
    std::uint64_t n = count_ball(alphabet, NormBound::closed(N), Parity::Even, limits);
    if (n == 0) throw DomainError("degenerate grid: empty ball at N = " + std::to_string(N));
    fit.counts.push_back(n);
    xs.push_back(std::log(N));
    ys.push_back(std::log(static_cast<double>(n)));
  }
  double m = static_cast<double>(xs.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / m);
  return fit;
}

void visit_trace_ball(std::int64_t alphabet, std::int64_t max_trace, const NodeVisitor& visit,
                      const EnumerationLimits& limits) {
  require_alphabet(alphabet);
  if (max_trace > 3'000'000'000LL) throw DomainError("trace bound too large for 64-bit enumeration");
  TraceWalker walker{alphabet, max_trace, visit, {0, limits.max_nodes}, {}};
  walker.descend({1, 0, 0, 1});
}

std::uint64_t trace_multiplicity(std::int64_t alphabet, std::int64_t t, const EnumerationLimits& limits) {
  if (t < 3) throw DomainError("trace must be >= 3");
  std::uint64_t n = 0;
  visit_trace_ball(alphabet, t, [&](const std::vector<std::int64_t>&, const Mat64& m) { n += m.trace() == t; },
                   limits);
  return n;
}

std::vector<std::uint64_t> trace_histogram(std::int64_t alphabet, std::int64_t max_trace,
                                           const EnumerationLimits& limits) {
  if (max_trace < 0) throw DomainError("trace bound must be non-negative");
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(max_trace) + 1, 0);
  visit_trace_ball(alphabet, max_trace,
                   [&](const std::vector<std::int64_t>&, const Mat64& m) { ++hist[static_cast<std::size_t>(m.trace())]; },
                   limits);
  return hist;
}

std::vector<cf::Word> trace_fiber_words(std::int64_t alphabet, std::int64_t t, const EnumerationLimits& limits) {
  if (t < 3) throw DomainError("trace must be >= 3");
  std::vector<cf::Word> out;
  visit_trace_ball(alphabet, t,
                   [&](const std::vector<std::int64_t>& digits, const Mat64& m) {
                     if (m.trace() == t) out.emplace_back(digits);
                   },
                   limits);
  return out;
}

std::vector<cf::Word> cyclic_classes(std::int64_t alphabet, std::int64_t t, const EnumerationLimits& limits) {
  std::set<cf::Word> reps;
  for (const auto& w : trace_fiber_words(alphabet, t, limits)) reps.insert(w.canonical_rotation());
  return {reps.begin(), reps.end()};
}

FixedLengthBall build_fixed_length_ball(std::int64_t alphabet, double bound, const std::string& label,
                                        const EnumerationLimits& limits) {
  if (!(bound >= 3)) throw DomainError("fixed-length ball needs bound >= 3");
  std::map<std::size_t, std::vector<SemigroupElement>> by_length;
  std::size_t total = 0;
  visit_ball(alphabet, NormBound::open(bound), Parity::Even,
             [&](const std::vector<std::int64_t>& digits, const Mat64& m) {
               by_length[digits.size()].push_back(SemigroupElement::from_node(digits, m));
               ++total;
             },
             limits);
  if (total == 0) throw DomainError("empty ball for " + label + ": bound " + std::to_string(bound) + " is too small");
  FixedLengthBall out;
  out.label = label;
  out.ball_size = total;
  out.lengths_realized = by_length.size();
  for (auto& [length, members] : by_length) {
    if (members.size() > out.members.size()) {
      out.length = length;
      out.members = members;
    }
  }
  return out;
}

AlephSet aleph_construct(double Y, std::int64_t modulus, const EnumerationLimits& limits) {
  arith::require_squarefree(modulus, "aleph modulus");
  if (modulus > modular::kDefaultCap) throw CapExceeded("aleph modulus exceeds the enumeration cap");
  AlephSet out;
  out.modulus = modulus;
  out.group_order = modular::sl2_order(modulus);
  out.Y = Y;
  // Representatives have norm >= sqrt(2), so this bounds U before the search.
  long double best_U = std::pow(static_cast<long double>(Y) / std::sqrt(2.0L), 1.0L / out.group_order);
  if (!(best_U * best_U > 7.0L)) {
    throw DomainError("Gamma_2 ball of norm " + std::to_string(static_cast<double>(best_U)) + " is empty; increase Y");
  }
  out.representatives = class_representatives(modulus, limits);
  long double widest = 0;
  for (const auto& x : out.representatives) widest = std::max(widest, frobenius(x));
  out.U = static_cast<double>(std::pow(static_cast<long double>(Y) / widest, 1.0L / out.group_order));
  if (!(out.U * out.U > 7.0)) {
    throw DomainError("Gamma_2 ball of norm " + std::to_string(out.U) + " is empty; increase Y");
  }
  auto base = build_fixed_length_ball(2, out.U, "S(U)", limits);
  out.base_length = base.length;
  out.base_size = base.members.size();

  // Most popular residue class of S(U); ties go to the class seen first.
  std::map<ResidueKey, std::size_t> population;
  for (const auto& s : base.members) ++population[residue_key(s.matrix, modulus)];
  std::size_t best = 0;
  ResidueKey best_key{};
  for (const auto& s : base.members) {
    auto key = residue_key(s.matrix, modulus);
    if (population[key] > best) {
      best = population[key];
      best_key = key;
    }
  }
  for (const auto& s : base.members) {
    if (residue_key(s.matrix, modulus) == best_key) out.popular.push_back(s);
  }
  out.pivot = out.popular.front();

  // s s_U^(R-1) = s_U^R = 1 mod B for every s in S'(U).
  SemigroupElement tail = SemigroupElement::from_word(cf::Word{});
  for (std::int64_t i = 0; i + 1 < out.group_order; ++i) tail = concat(tail, out.pivot);

  NormBound below_Y = NormBound::open(Y);
  for (const auto& x : out.representatives) {
    SemigroupElement shift = concat(tail, x);
    for (const auto& s : out.popular) {
      SemigroupElement member = concat(s, shift);
      if (!below_Y.admits(member.norm_sq)) throw InvariantViolation("aleph member escaped the norm bound");
      out.members.push_back(std::move(member));
    }
  }
  return out;
}

double aleph_error(const std::vector<SemigroupElement>& aleph, std::int64_t q) {
  arith::require_squarefree(q, "modulus");
  if (q > modular::kDefaultCap) throw CapExceeded("modulus exceeds the enumeration cap " + std::to_string(modular::kDefaultCap));
  if (aleph.empty()) throw DomainError("empty aleph set");
  std::map<ResidueKey, std::size_t> counts;
  for (const auto& e : aleph) ++counts[residue_key(e.matrix, q)];
  double classes = static_cast<double>(modular::sl2_order(q));
  double size = static_cast<double>(aleph.size());
  double worst = static_cast<std::int64_t>(counts.size()) < static_cast<std::int64_t>(classes) ? 1.0 / classes : 0.0;
  for (const auto& [key, n] : counts) worst = std::max(worst, std::fabs(static_cast<double>(n) / size - 1.0 / classes));
  return worst;
}

BilinearSet::BilinearSet(std::vector<SemigroupElement> xi, std::vector<SemigroupElement> aleph,
                         std::vector<SemigroupElement> omega)
    : xi_(std::move(xi)), aleph_(std::move(aleph)), omega_(std::move(omega)) {
  if (xi_.empty()) throw DomainError("empty factor: Xi");
  if (aleph_.empty()) throw DomainError("empty factor: Aleph");
  if (omega_.empty()) throw DomainError("empty factor: Omega");
  for (const auto& x : xi_) {
    if (x.word.size() != xi_.front().word.size()) throw DomainError("Xi members must share one wordlength");
  }
  for (const auto& w : omega_) {
    if (w.word.size() != omega_.front().word.size()) throw DomainError("Omega members must share one wordlength");
  }
  for (const auto& a : aleph_) {
    if (!a.word.is_even() || !a.word.fits_alphabet(2)) throw DomainError("Aleph members must lie in Gamma_2");
  }
}

std::uint64_t BilinearSet::size() const {
  return static_cast<std::uint64_t>(xi_.size()) * aleph_.size() * omega_.size();
}

SemigroupElement BilinearSet::element(std::size_t i, std::size_t j, std::size_t k) const {
  return concat(concat(xi_.at(i), aleph_.at(j)), omega_.at(k));
}

void BilinearSet::for_each_trace(const std::function<void(Int)>& visit) const {
  for (const auto& x : xi_) {
    for (const auto& a : aleph_) {
      cf::UnimodularMatrix xa = x.matrix * a.matrix;
      for (const auto& w : omega_) {
        const auto& m = w.matrix;
        visit(checked_add(checked_add(checked_mul(xa.a, m.a), checked_mul(xa.b, m.c)),
                          checked_add(checked_mul(xa.c, m.b), checked_mul(xa.d, m.d))));
      }
    }
  }
}

long double BilinearSet::norm_bound() const {
  auto widest = [](const std::vector<SemigroupElement>& v) {
    long double w = 0;
    for (const auto& e : v) w = std::max(w, frobenius(e));
    return w;
  };
  return widest(xi_) * widest(aleph_) * widest(omega_);
}

BilinearSet build_Pi(std::vector<SemigroupElement> xi, std::vector<SemigroupElement> aleph,
                     std::vector<SemigroupElement> omega) {
  return BilinearSet(std::move(xi), std::move(aleph), std::move(omega));
}

}  // namespace lowlying::semigroup
