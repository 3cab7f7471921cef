#pragma once

// The thin semigroup Gamma_A of even-length products of [[a,1],[1,0]] with
// a <= A: ball enumeration, trace fibers, Hensley fits, cyclic classes and
// the ingredients Xi, Aleph, Omega of the bilinear set Pi.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lowlying/cf_core.hpp"
#include "lowlying/int128.hpp"

namespace lowlying::semigroup {

enum class Parity { Even, Any };

/// Admissible squared Frobenius norms, kept as an exact integer ceiling.
struct NormBound {
  Int max_norm_sq = 0;

  /// ||g|| <= N. N^2 within 1e-9 (relative) of an integer counts as that integer.
  static NormBound closed(double N);
  /// ||g|| < N.
  static NormBound open(double N);

  bool admits(Int norm_sq) const { return norm_sq <= max_norm_sq; }
};

struct EnumerationLimits {
  /// DFS nodes visited before giving up.
  std::uint64_t max_nodes = 400'000'000;
};

/// Word matrix with 64-bit entries, used inside the hot enumeration loops.
struct Mat64 {
  std::int64_t a, b, c, d;

  std::int64_t trace() const { return a + d; }
  Int norm_sq() const;
  cf::UnimodularMatrix widen() const { return {a, b, c, d}; }
};

using NodeVisitor = std::function<void(const std::vector<std::int64_t>& digits, const Mat64& m)>;

struct SemigroupElement {
  cf::Word word;
  cf::UnimodularMatrix matrix;
  Int norm_sq = 2;
  Int trace = 2;

  /// The empty word yields the identity, which only appears as a coset
  /// representative, never as a member of Gamma_A.
  static SemigroupElement from_word(const cf::Word& w);
  static SemigroupElement from_node(const std::vector<std::int64_t>& digits, const Mat64& m);

  bool operator==(const SemigroupElement& other) const { return word == other.word; }
};

/// Depth-first over words with digits in [1, A], in lexicographic pre-order,
/// pruning once the norm leaves the bound. Visits words of the requested
/// parity only.
void visit_ball(std::int64_t alphabet, const NormBound& bound, Parity parity, const NodeVisitor& visit,
                const EnumerationLimits& limits = {});

std::vector<SemigroupElement> enumerate_ball(std::int64_t alphabet, const NormBound& bound, Parity parity,
                                             const EnumerationLimits& limits = {});

std::uint64_t count_ball(std::int64_t alphabet, const NormBound& bound, Parity parity,
                         const EnumerationLimits& limits = {});

/// N_0 = lo, ..., N_{points-1} = hi, equally spaced in log N.
std::vector<double> geometric_grid(double lo, double hi, int points);

struct HensleyFit {
  std::int64_t alphabet = 0;
  std::vector<double> norms;
  std::vector<std::uint64_t> counts;
  double slope = 0;
  double intercept = 0;
  /// Root-mean-square residual of the log-log fit.
  double residual = 0;
};

/// Least-squares slope of log #(Gamma_A in B_N) against log N.
HensleyFit hensley_exponent(std::int64_t alphabet, const std::vector<double>& norms,
                            const EnumerationLimits& limits = {});

/// Even-length words with trace <= max_trace; trace grows strictly along
/// every extension, which is what the pruning relies on.
void visit_trace_ball(std::int64_t alphabet, std::int64_t max_trace, const NodeVisitor& visit,
                      const EnumerationLimits& limits = {});

/// #{g in Gamma_A : tr g = t}.
std::uint64_t trace_multiplicity(std::int64_t alphabet, std::int64_t t, const EnumerationLimits& limits = {});

/// hist[t] = trace_multiplicity(A, t) for every t <= max_trace, in one pass.
std::vector<std::uint64_t> trace_histogram(std::int64_t alphabet, std::int64_t max_trace,
                                           const EnumerationLimits& limits = {});

std::vector<cf::Word> trace_fiber_words(std::int64_t alphabet, std::int64_t t,
                                        const EnumerationLimits& limits = {});

/// Lexicographically least rotation of each rotation orbit in the trace-t
/// fiber, sorted.
std::vector<cf::Word> cyclic_classes(std::int64_t alphabet, std::int64_t t, const EnumerationLimits& limits = {});

struct FixedLengthBall {
  std::string label;
  std::size_t length = 0;
  std::size_t ball_size = 0;  // even words of all lengths in the ball
  std::size_t lengths_realized = 0;
  std::vector<SemigroupElement> members;
};

/// Most populous even wordlength in {g in Gamma_A : ||g|| < bound}; ties go to
/// the shorter length.
FixedLengthBall build_fixed_length_ball(std::int64_t alphabet, double bound, const std::string& label,
                                        const EnumerationLimits& limits = {});

struct AlephSet {
  std::int64_t modulus = 1;      // stand-in for the unknown absolute modulus
  std::int64_t group_order = 1;  // R = |SL2(Z/modulus)|
  double Y = 0;
  double U = 0;
  std::size_t base_length = 0;  // wordlength of S(U)
  std::size_t base_size = 0;    // |S(U)|
  SemigroupElement pivot;       // s_U
  std::vector<SemigroupElement> popular;          // S'(U)
  std::vector<SemigroupElement> representatives;  // x_j, one per class mod B
  std::vector<SemigroupElement> members;
};

/// S'(U) s_U^(R-1) x_j over all classes x_j of SL2(Z/B), with U chosen so
/// that every member has norm < Y. Works in Gamma_2.
AlephSet aleph_construct(double Y, std::int64_t modulus = 2, const EnumerationLimits& limits = {});

/// max over g0 in SL2(Z/q) of |#{a in aleph : a = g0 mod q} / |aleph| - 1/|SL2(Z/q)||.
double aleph_error(const std::vector<SemigroupElement>& aleph, std::int64_t q);

/// Pi = Xi . Aleph . Omega, realized lazily.
class BilinearSet {
 public:
  BilinearSet(std::vector<SemigroupElement> xi, std::vector<SemigroupElement> aleph,
              std::vector<SemigroupElement> omega);

  const std::vector<SemigroupElement>& xi() const { return xi_; }
  const std::vector<SemigroupElement>& aleph() const { return aleph_; }
  const std::vector<SemigroupElement>& omega() const { return omega_; }

  std::uint64_t size() const;
  SemigroupElement element(std::size_t i, std::size_t j, std::size_t k) const;

  /// Calls visit(trace) for every product, computing tr(x a w) from the
  /// factor matrices without forming the word.
  void for_each_trace(const std::function<void(Int)>& visit) const;

  /// Largest product of factor norms, an upper bound for every member's norm.
  long double norm_bound() const;

 private:
  std::vector<SemigroupElement> xi_, aleph_, omega_;
};

BilinearSet build_Pi(std::vector<SemigroupElement> xi, std::vector<SemigroupElement> aleph,
                     std::vector<SemigroupElement> omega);

}  // namespace lowlying::semigroup
