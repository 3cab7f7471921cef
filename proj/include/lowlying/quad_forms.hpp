#pragma once

// Indefinite binary quadratic forms [A,B,C] = A x^2 + B xy + C y^2 of positive
// non-square discriminant: Gauss reduction, reduction cycles, class
// enumeration and the matrix -> form map.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "lowlying/cf_core.hpp"
#include "lowlying/int128.hpp"

namespace lowlying::forms {

struct IndefiniteForm {
  Int A, B, C;

  /// Requires B^2 - 4AC > 0 and non-square (which forces A, C != 0).
  IndefiniteForm(Int A, Int B, Int C);

  Int discriminant() const;
  bool is_primitive() const;

  /// "[A,B,C]"
  std::string to_string() const;

  auto operator<=>(const IndefiniteForm&) const = default;
};

/// B^2 - 4AC.
Int discriminant(const IndefiniteForm& f);

/// Discriminant of a real quadratic field.
bool is_fundamental(Int D);

/// [c, d - a, -b]; its root (-B + sqrt D) / (2A) is fixed_point(m).
IndefiniteForm matrix_to_form(const cf::UnimodularMatrix& m);

/// 0 < B < sqrt(D) and sqrt(D) - B < 2|A| < sqrt(D) + B.
bool is_reduced(const IndefiniteForm& f);

/// One reduction step [A,B,C] -> [C, B', (B'^2 - D) / 4C], B' = -B mod 2|C|
/// taken in the reduced window. Proper equivalence.
IndefiniteForm rho(const IndefiniteForm& f);

/// Result of reduce() together with the SL2(Z) substitution T realizing it:
/// reduced(x, y) = f(T.a x + T.b y, T.c x + T.d y).
struct Reduction {
  IndefiniteForm form;
  cf::UnimodularMatrix transform;
  std::size_t steps;
};

Reduction reduce_with_transform(const IndefiniteForm& f);
IndefiniteForm reduce(const IndefiniteForm& f);

/// Full rho-orbit of a reduced form; forms[i+1] = rho(forms[i]) and
/// rho(forms.back()) = forms.front().
struct FormCycle {
  std::vector<IndefiniteForm> forms;
  Int discriminant = 0;

  std::size_t size() const { return forms.size(); }
  bool contains(const IndefiniteForm& f) const;
};

FormCycle cycle(const IndefiniteForm& reduced);

/// All reduced primitive forms of discriminant D, ordered by (B, A).
std::vector<IndefiniteForm> reduced_forms(Int D);

/// Every rho-cycle (proper class) of primitive forms of discriminant D, in
/// order of first appearance in reduced_forms(D).
std::vector<FormCycle> class_cycles(Int D);

/// Purely periodic CF word attached to one reduced form. Members with A > 0
/// use 1/x for their root x in (0,1); members with A < 0 defer to rho(f).
/// Odd periods are doubled.
cf::Word member_word(const IndefiniteForm& reduced);

/// Word of any member; all members give rotations of one word.
cf::Word cycle_to_word(const FormCycle& cy);

struct ClassCounts {
  std::size_t narrow = 0;          // rho-cycles
  std::size_t wide = 0;            // f merged with -f
  std::size_t improper_merged = 0; // [A,B,C] merged with [A,-B,C]
};

ClassCounts class_counts(Int D);

/// Index into `cycles` of the cycle containing reduce(f), or npos.
std::size_t find_cycle(const std::vector<FormCycle>& cycles, const IndefiniteForm& f);

}  // namespace lowlying::forms
