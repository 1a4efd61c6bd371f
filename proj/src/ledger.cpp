#include "slopeforge/ledger.hpp"

#include <algorithm>
#include <cmath>

#include "slopeforge/error.hpp"

namespace slopeforge {

namespace {

void require_genus(int genus, int min, const char* what) {
  if (genus < min)
    throw RangeError(std::string(what) + " needs g >= " + std::to_string(min) + ", got g=" +
                     std::to_string(genus));
}

void require_h(int genus, int h) {
  require_genus(genus, 3, "star substitution");
  if (h < 1 || h > genus - 2)
    throw RangeError("h must satisfy 1 <= h <= g-2, got h=" + std::to_string(h) + " at g=" +
                     std::to_string(genus));
}

Integer star_block_count(int h) { return Integer((2 * h + 1) * (2 * h + 2)); }

}  // namespace

FibrationInvariants FibrationInvariants::from_euler_sigma(int genus, Integer euler, Integer sigma) {
  require_genus(genus, 1, "fibration");
  FibrationInvariants x;
  x.genus = genus;
  x.euler = std::move(euler);
  x.sigma = std::move(sigma);
  return x;
}

FibrationInvariants FibrationInvariants::from_ksq_chi(int genus, const Integer& ksq, const Integer& chi_f) {
  require_genus(genus, 1, "fibration");
  const Integer chi_h = chi_f - (genus - 1);
  const Integer c1sq = ksq - 8 * (genus - 1);
  return from_euler_sigma(genus, 12 * chi_h - c1sq, c1sq - 8 * chi_h);
}

Integer FibrationInvariants::c1sq() const { return 3 * sigma + 2 * euler; }

Integer FibrationInvariants::chi_h() const {
  Integer s = sigma + euler;
  if (!mpz_divisible_ui_p(s.get_mpz_t(), 4))
    throw DivisibilityError("sigma + e = " + s.get_str() + " is not divisible by 4");
  return s / 4;
}

Integer FibrationInvariants::ksq() const { return c1sq() + 8 * (genus - 1); }

Integer FibrationInvariants::chi_f() const { return chi_h() + (genus - 1); }

Rational FibrationInvariants::slope() const {
  const Integer chi = chi_f();
  if (chi == 0) throw RangeError("slope undefined: chi_f = 0");
  Rational q(ksq(), chi);
  q.canonicalize();
  return q;
}

int c_g(int genus) { return genus % 2 == 0 ? genus : genus + 1; }

FibrationInvariants matsumoto_invariants(int genus) {
  require_genus(genus, 2, "Matsumoto fibration");
  const bool even = genus % 2 == 0;
  auto x = FibrationInvariants::from_euler_sigma(genus, even ? 8 - 2 * genus : 14 - 2 * genus,
                                                 even ? -4 : -8);
  x.letters = Integer(even ? 2 * genus + 4 : 2 * genus + 10);
  return x;
}

FibrationInvariants hyperelliptic_invariants(int genus) {
  auto x = FibrationInvariants::from_euler_sigma(genus, 4 * (genus + 2), -4 * (genus + 1));
  x.letters = Integer(8 * genus + 4);
  return x;
}

FibrationInvariants ledger_fiber_sum(const FibrationInvariants& x, const FibrationInvariants& y) {
  if (x.genus != y.genus)
    throw GenusMismatch("fiber sum of genus " + std::to_string(x.genus) + " and " +
                        std::to_string(y.genus));
  auto out = FibrationInvariants::from_euler_sigma(x.genus, x.euler + y.euler + 4 * (x.genus - 1),
                                                   x.sigma + y.sigma);
  if (x.letters && y.letters) out.letters = *x.letters + *y.letters;
  return out;
}

FibrationInvariants ledger_fiber_power(const FibrationInvariants& x, const Integer& copies) {
  if (copies < 1) throw RangeError("fiber power needs at least one copy");
  auto out = FibrationInvariants::from_euler_sigma(
      x.genus, copies * x.euler + (copies - 1) * 4 * (x.genus - 1), copies * x.sigma);
  if (x.letters) out.letters = copies * *x.letters;
  return out;
}

FibrationInvariants apply_star_substitution(const FibrationInvariants& x, int h) {
  require_h(x.genus, h);
  auto out = FibrationInvariants::from_euler_sigma(x.genus, x.euler - (4 * h * h + 5 * h),
                                                   x.sigma + (2 * h * h + 3 * h));
  if (x.letters) out.letters = *x.letters - (4 * h * h + 5 * h);
  return out;
}

FibrationInvariants theorem_stage(int genus, int h) {
  require_h(genus, h);
  return apply_star_substitution(ledger_fiber_power(matsumoto_invariants(genus), star_block_count(h)), h);
}

Rational theorem_slope(int genus, int h) {
  require_h(genus, h);
  const long g = genus, hh = h;
  Rational defect = genus % 2 == 0
                        ? Rational(2 * (14 * hh * hh + 21 * hh + 8), (hh + 1) * (4 * g * hh + 2 * g - hh))
                        : Rational(2 * (30 * hh * hh + 45 * hh + 16),
                                   (hh + 1) * (4 * g * hh + 2 * g + 3 * hh + 2));
  defect.canonicalize();
  return Rational(8) - defect;
}

std::vector<FibrationInvariants> corollary_iterate(int genus, int h, int m) {
  if (m < 1) throw RangeError("iteration count must be at least 1");
  std::vector<FibrationInvariants> out{theorem_stage(genus, h)};
  for (int k = 1; k < m; ++k)
    out.push_back(apply_star_substitution(ledger_fiber_power(out.back(), star_block_count(h)), h));
  return out;
}

Rational slope_limit(int genus, int h) {
  require_h(genus, h);
  const long g = genus, hh = h, c = c_g(genus);
  Rational q(2 * ((16 * g - 18) * hh * hh + (24 * g - 25) * hh + 4 * (g - 1)),
             (4 * c - 1) * hh * hh + (6 * c - 1) * hh + c);
  q.canonicalize();
  return q;
}

double h_max_real(int genus) {
  require_genus(genus, 3, "h_max");
  const double g = genus;
  if (genus % 2 == 0) return (2 * (g - 2) + std::sqrt(4 * g * g + 5 * g - 12)) / 7;
  return (2 * (g - 3) + std::sqrt(4 * g * g + 21 * g - 39)) / 15;
}

int h_max(int genus) {
  const double r = h_max_real(genus);
  auto clamp = [genus](double v) { return std::clamp(static_cast<int>(v), 1, genus - 2); };
  const int lo = clamp(std::floor(r));
  const int hi = clamp(std::ceil(r));
  return slope_limit(genus, hi) > slope_limit(genus, lo) ? hi : lo;
}

Rational low_slope_bound(int genus, int n) {
  require_genus(genus, 3, "low-slope bound");
  if (n < 0) throw RangeError("iteration index must be nonnegative");
  Integer pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(n));
  Rational q(Integer(4 * genus - 8), pow2);
  q.canonicalize();
  return Rational(2) + q;
}

std::string to_decimal(const Rational& q, int significant_digits) {
  if (significant_digits < 1) throw RangeError("need at least one significant digit");
  if (q == 0) {
    std::string out = "0";
    if (significant_digits > 1) out += "." + std::string(significant_digits - 1, '0');
    return out;
  }
  const bool negative = q < 0;
  const Rational a = abs(q);
  // Decimal exponent e with 10^e <= a < 10^(e+1).
  long e = static_cast<long>(std::floor(std::log10(a.get_d())));
  auto pow10 = [](long k) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return p;
  };
  auto ten_to = [&](long k) { return k >= 0 ? Rational(pow10(k)) : Rational(Integer(1), pow10(-k)); };
  while (a >= ten_to(e + 1)) ++e;
  while (a < ten_to(e)) --e;

  Integer digits;
  long scale = 0;
  for (;;) {
    scale = significant_digits - 1 - e;
    Rational scaled = a * ten_to(scale);
    // Round half away from zero.
    Rational shifted = scaled + Rational(1, 2);
    mpz_fdiv_q(digits.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    if (digits < pow10(significant_digits)) break;
    ++e;
  }
  std::string s = digits.get_str();
  std::string out;
  if (scale <= 0) {
    out = s + std::string(static_cast<std::size_t>(-scale), '0');
  } else {
    if (static_cast<long>(s.size()) <= scale) s = std::string(scale - s.size() + 1, '0') + s;
    out = s.substr(0, s.size() - scale) + "." + s.substr(s.size() - scale);
  }
  return negative ? "-" + out : out;
}

LedgerRow make_row(const FibrationInvariants& inv, std::optional<int> h, int m) {
  return {inv.genus, h, m, inv.ksq(), inv.chi_f()};
}

std::string csv_header() { return "g,h,m,Ksq,chi,lambda_num,lambda_den,lambda_decimal"; }

std::string csv_row(const LedgerRow& row) {
  if (row.chi == 0) throw RangeError("slope undefined: chi_f = 0");
  Rational q(row.ksq, row.chi);
  q.canonicalize();
  return std::to_string(row.genus) + "," + (row.h ? std::to_string(*row.h) : "") + "," +
         std::to_string(row.m) + "," + row.ksq.get_str() + "," + row.chi.get_str() + "," +
         q.get_num().get_str() + "," + q.get_den().get_str() + "," + to_decimal(q);
}

}  // namespace slopeforge
