#include "lowlying/quad_forms.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lowlying/errors.hpp"

namespace lowlying::forms {

namespace {

// Reduction from arbitrary coefficients converges in O(log size) steps; this
// is a runaway guard, not a tuning parameter.
constexpr std::size_t kMaxReductionSteps = 100000;

Int disc_of(Int A, Int B, Int C) {
  return checked_sub(checked_mul(B, B), checked_mul(checked_mul(4, A), C));
}

/// Unique r = b (mod 2|c|) in the reduction window for the given c.
Int window_residue(Int b, Int c, Int D, Int s) {
  Int m = checked_mul(2, abs128(c));
  if (checked_mul(c, c) > D) {
    // -|c| < r <= |c|
    Int r = mod_floor(b, m);
    if (r > abs128(c)) r -= m;
    return r;
  }
  // sqrt(D) - 2|c| < r < sqrt(D), i.e. the largest r <= s in the class.
  return s - mod_floor(checked_sub(s, b), m);
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::size_t roots() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent.size(); ++i) n += find(i) == i;
    return n;
  }
};

}  // namespace

IndefiniteForm::IndefiniteForm(Int A_, Int B_, Int C_) : A(A_), B(B_), C(C_) {
  Int D = disc_of(A, B, C);
  if (D <= 0 || is_square(D)) {
    throw DomainError("form " + to_string() + " has discriminant " + lowlying::to_string(D) +
                      "; expected a positive non-square");
  }
}

Int IndefiniteForm::discriminant() const { return disc_of(A, B, C); }

bool IndefiniteForm::is_primitive() const { return gcd128(gcd128(A, B), C) == 1; }

std::string IndefiniteForm::to_string() const {
  using lowlying::to_string;
  return "[" + to_string(A) + "," + to_string(B) + "," + to_string(C) + "]";
}

Int discriminant(const IndefiniteForm& f) { return f.discriminant(); }

bool is_fundamental(Int D) {
  if (D == 0) throw DomainError("discriminant 0 is not allowed");
  if (D < 0) throw DomainError("only positive discriminants are supported");
  auto squarefree = [](Int n) {
    for (Int p = 2; p * p <= n; ++p) {
      if (n % (p * p) == 0) return false;
    }
    return true;
  };
  Int r = D % 4;
  if (r == 1) return squarefree(D);
  if (r == 0) {
    Int m = D / 4;
    Int mr = m % 4;
    return (mr == 2 || mr == 3) && squarefree(m);
  }
  return false;
}

IndefiniteForm matrix_to_form(const cf::UnimodularMatrix& m) {
  if (m.det() != 1) throw DomainError("matrix_to_form requires determinant +1");
  if (abs128(m.trace()) <= 2) throw DomainError("not hyperbolic: |trace| <= 2");
  if (m.c == 0) throw DomainError("matrix_to_form requires c != 0");
  return IndefiniteForm(m.c, checked_sub(m.d, m.a), -m.b);
}

bool is_reduced(const IndefiniteForm& f) {
  const Int D = f.discriminant();
  const Int s = isqrt(D);
  const Int twoA = checked_mul(2, abs128(f.A));
  // With s = floor(sqrt D) and D non-square: k < sqrt D <=> k <= s.
  return f.B > 0 && f.B <= s && checked_add(twoA, f.B) > s && checked_sub(twoA, f.B) <= s;
}

IndefiniteForm rho(const IndefiniteForm& f) {
  const Int D = f.discriminant();
  const Int s = isqrt(D);
  Int Bn = window_residue(-f.B, f.C, D, s);
  Int num = checked_sub(checked_mul(Bn, Bn), D);
  Int den = checked_mul(4, f.C);
  if (num % den != 0) throw InvariantViolation("rho produced a non-integral coefficient");
  return IndefiniteForm(f.C, Bn, num / den);
}

Reduction reduce_with_transform(const IndefiniteForm& f) {
  Reduction out{f, cf::UnimodularMatrix::identity(), 0};
  while (!is_reduced(out.form)) {
    if (++out.steps > kMaxReductionSteps) throw InvariantViolation("reduction did not terminate");
    IndefiniteForm next = rho(out.form);
    // rho is the substitution [[0,-1],[1,t]] with t = (B' + B) / (2C).
    Int t = (next.B + out.form.B) / checked_mul(2, out.form.C);
    cf::UnimodularMatrix step(0, -1, 1, t);
    out.transform = out.transform * step;
    out.form = next;
  }
  return out;
}

IndefiniteForm reduce(const IndefiniteForm& f) { return reduce_with_transform(f).form; }

bool FormCycle::contains(const IndefiniteForm& f) const {
  return std::find(forms.begin(), forms.end(), f) != forms.end();
}

FormCycle cycle(const IndefiniteForm& reduced) {
  if (!is_reduced(reduced)) throw DomainError("cycle requires a reduced form, got " + reduced.to_string());
  FormCycle out;
  out.discriminant = reduced.discriminant();
  out.forms.push_back(reduced);
  IndefiniteForm g = rho(reduced);
  while (!(g == reduced)) {
    if (!is_reduced(g)) throw InvariantViolation("rho left the set of reduced forms");
    if (out.forms.size() > kMaxReductionSteps) throw InvariantViolation("rho-orbit did not close");
    out.forms.push_back(g);
    g = rho(g);
  }
  return out;
}

std::vector<IndefiniteForm> reduced_forms(Int D) {
  if (D <= 0 || is_square(D)) throw DomainError("discriminant must be a positive non-square");
  Int r = D % 4;
  if (r != 0 && r != 1) throw DomainError("discriminant must be 0 or 1 mod 4");
  const Int s = isqrt(D);
  std::vector<IndefiniteForm> out;
  for (Int B = (D % 2 == 0) ? 2 : 1; B <= s; B += 2) {
    // AC = (B^2 - D) / 4 = -m
    Int m = (D - B * B) / 4;
    std::vector<Int> divisors;
    for (Int a = 1; a * a <= m; ++a) {
      if (m % a != 0) continue;
      divisors.push_back(a);
      if (a * a != m) divisors.push_back(m / a);
    }
    std::sort(divisors.begin(), divisors.end());
    for (Int a : divisors) {
      // 2|A| in the window (s - B, s + B]; both signs of A.
      if (2 * a + B <= s || 2 * a - B > s) continue;
      for (Int A : {a, -a}) {
        Int C = -m / A;
        if (gcd128(gcd128(A, B), C) != 1) continue;
        out.emplace_back(A, B, C);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const IndefiniteForm& x, const IndefiniteForm& y) {
    if (x.B != y.B) return x.B < y.B;
    return x.A < y.A;
  });
  return out;
}

std::vector<FormCycle> class_cycles(Int D) {
  std::vector<FormCycle> cycles;
  std::map<IndefiniteForm, std::size_t> owner;
  for (const auto& f : reduced_forms(D)) {
    if (owner.count(f)) continue;
    FormCycle cy = cycle(f);
    for (const auto& g : cy.forms) {
      if (!owner.emplace(g, cycles.size()).second) {
        throw InvariantViolation("reduced form " + g.to_string() + " lies in two cycles");
      }
    }
    cycles.push_back(std::move(cy));
  }
  return cycles;
}

cf::Word member_word(const IndefiniteForm& f) {
  if (!is_reduced(f)) throw DomainError("member_word requires a reduced form");
  if (f.A < 0) return member_word(rho(f));
  // Root x = (-B + sqrt D) / 2A lies in (0,1); 1/x = (B + sqrt D) / (-2C).
  cf::QuadraticIrrational inv(f.B, checked_mul(-2, f.C), f.discriminant());
  auto expansion = cf::cf_expand(inv);
  if (!expansion.preperiod.empty()) throw InvariantViolation("reduced form root is not purely periodic");
  cf::Word w = expansion.period;
  if (!w.is_even()) w = w + w;
  return w;
}

cf::Word cycle_to_word(const FormCycle& cy) {
  if (cy.forms.empty()) throw DomainError("empty cycle");
  return member_word(cy.forms.front());
}

std::size_t find_cycle(const std::vector<FormCycle>& cycles, const IndefiniteForm& f) {
  IndefiniteForm r = reduce(f);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (cycles[i].contains(r)) return i;
  }
  return static_cast<std::size_t>(-1);
}

ClassCounts class_counts(Int D) {
  auto cycles = class_cycles(D);
  UnionFind wide(cycles.size()), improper(cycles.size());
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto& f = cycles[i].forms.front();
    std::size_t neg = find_cycle(cycles, IndefiniteForm(-f.C, f.B, -f.A));
    std::size_t mirror = find_cycle(cycles, IndefiniteForm(f.A, -f.B, f.C));
    if (neg == static_cast<std::size_t>(-1) || mirror == static_cast<std::size_t>(-1)) {
      throw InvariantViolation("class partner missing from class_cycles");
    }
    wide.unite(i, neg);
    improper.unite(i, mirror);
  }
  return {cycles.size(), wide.roots(), improper.roots()};
}

}  // namespace lowlying::forms
