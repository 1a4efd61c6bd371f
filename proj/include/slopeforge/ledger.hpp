#pragma once

// Closed-form invariant arithmetic for genus-g Lefschetz fibrations over S^2.

#include <optional>
#include <string>
#include <vector>

#include "slopeforge/surface.hpp"

namespace slopeforge {

/// Exact invariants (g, e, sigma) and the quantities derived from them:
///   c1^2 = 3 sigma + 2 e        chi_h = (sigma + e) / 4
///   K^2  = c1^2 + 8 (g - 1)     chi_f = chi_h + (g - 1)
///   lambda = K^2 / chi_f
struct FibrationInvariants {
  int genus = 0;
  std::optional<Integer> letters;  // singular fibers, when known
  Integer euler;
  Integer sigma;

  static FibrationInvariants from_euler_sigma(int genus, Integer euler, Integer sigma);
  static FibrationInvariants from_ksq_chi(int genus, const Integer& ksq, const Integer& chi_f);

  Integer c1sq() const;
  /// Throws DivisibilityError unless sigma + e = 0 mod 4.
  Integer chi_h() const;
  Integer ksq() const;
  Integer chi_f() const;
  /// Throws RangeError when chi_f = 0.
  Rational slope() const;

  friend bool operator==(const FibrationInvariants& x, const FibrationInvariants& y) {
    return x.genus == y.genus && x.euler == y.euler && x.sigma == y.sigma;
  }
};

/// g even: c_g = g, g odd: c_g = g + 1.
int c_g(int genus);

FibrationInvariants matsumoto_invariants(int genus);
FibrationInvariants hyperelliptic_invariants(int genus);

/// Fiber sum: K^2 and chi_f add (equivalently sigma adds, e adds plus 4g-4).
FibrationInvariants ledger_fiber_sum(const FibrationInvariants& x, const FibrationInvariants& y);
/// Fiber sum of `copies` copies of x.
FibrationInvariants ledger_fiber_power(const FibrationInvariants& x, const Integer& copies);

/// e -= 4h^2 + 5h, sigma += 2h^2 + 3h.
FibrationInvariants apply_star_substitution(const FibrationInvariants& x, int h);

/// (2h+1)(2h+2) Matsumoto blocks fiber-summed, then one star substitution.
FibrationInvariants theorem_stage(int genus, int h);

/// Closed-form slope of theorem_stage, evaluated from its printed formula.
Rational theorem_slope(int genus, int h);

/// Stages 1..m: stage 1 is theorem_stage, stage k+1 is (2h+1)(2h+2) copies
/// of stage k followed by a star substitution.
std::vector<FibrationInvariants> corollary_iterate(int genus, int h, int m);

/// Limit of the corollary_iterate slopes.
Rational slope_limit(int genus, int h);

/// Real root of the derivative of slope_limit in h.
double h_max_real(int genus);

/// The admissible h in {floor, ceil} of h_max_real maximizing slope_limit;
/// ties go to the smaller h.
int h_max(int genus);

/// 2 + (4g - 8) / 2^n.
Rational low_slope_bound(int genus, int n);

/// Decimal rendering with the given number of significant digits, rounded
/// half away from zero.
std::string to_decimal(const Rational& q, int significant_digits = 12);

struct LedgerRow {
  int genus = 0;
  std::optional<int> h;
  int m = 1;
  Integer ksq;
  Integer chi;
};

LedgerRow make_row(const FibrationInvariants& inv, std::optional<int> h, int m);
std::string csv_header();
std::string csv_row(const LedgerRow& row);

}  // namespace slopeforge
