// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "slopeforge/constructions.hpp"
#include "slopeforge/ledger.hpp"
#include "slopeforge/meyer.hpp"
#include "support.hpp"

using namespace slopeforge;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

struct Check {
  bool ok = true;
  std::ostringstream notes;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << "  mismatch: " << what << '\n';
    }
  }
};

long long sigma_of(const TwistWord& w) { return signature_of_word(w).sigma; }

void criterion1(Check& c) {
  auto cat = CurveCatalog::builtin(1, 6);
  for (int g = 1; g <= 5; ++g) {
    auto w = build_relator(RelatorKind::hyperelliptic, g, cat).word;
    auto r = signature_of_word(w);
    c.expect(r.euler == 4 * (g + 2), "e(h_" + std::to_string(g) + ")");
    c.expect(r.euler == 4 - 4 * g + static_cast<long long>(w.size()), "4-4g+n for h_" + std::to_string(g));
  }
  for (int g = 2; g <= 6; ++g) {
    auto w = build_relator(RelatorKind::matsumoto, g, cat).word;
    auto r = signature_of_word(w);
    c.expect(r.euler == (g % 2 == 0 ? 8 - 2 * g : 14 - 2 * g), "e(W_" + std::to_string(g) + ")");
    c.expect(r.euler == 4 - 4 * g + static_cast<long long>(w.size()), "4-4g+n for W_" + std::to_string(g));
  }
}

void criterion2(Check& c) {
  auto cat = CurveCatalog::builtin(1, 5);
  for (int g = 1; g <= 4; ++g)
    c.expect(sigma_of(build_relator(RelatorKind::hyperelliptic, g, cat).word) == -4 * (g + 1),
             "sigma(h_" + std::to_string(g) + ")");
  for (int g = 2; g <= 5; ++g)
    c.expect(sigma_of(build_relator(RelatorKind::matsumoto, g, cat).word) == (g % 2 == 0 ? -4 : -8),
             "sigma(W_" + std::to_string(g) + ")");
}

void criterion3(Check& c) {
  auto cat = CurveCatalog::builtin(2, 6);
  for (int g = 2; g <= 6; ++g) {
    auto w = build_relator(RelatorKind::matsumoto, g, cat).word;
    auto r = signature_of_word(w);
    auto inv = FibrationInvariants::from_euler_sigma(g, Integer(static_cast<long>(r.euler)),
                                                     Integer(static_cast<long>(r.sigma)));
    c.expect(inv.slope() == q(8 * (g - 1), g % 2 == 0 ? g : g + 1), "lambda(W_" + std::to_string(g) + ")");
    auto h = build_relator(RelatorKind::hyperelliptic, g, cat).word;
    auto rh = signature_of_word(h);
    auto ih = FibrationInvariants::from_euler_sigma(g, Integer(static_cast<long>(rh.euler)),
                                                    Integer(static_cast<long>(rh.sigma)));
    c.expect(ih.slope() == Rational(4) - q(4, g), "lambda(h_" + std::to_string(g) + ")");
  }
}

void criterion4(Check& c) {
  auto cat = CurveCatalog::builtin(3, 6);
  for (int g = 3; g <= 6; ++g)
    for (int h = 1; h <= std::min(3, g - 2); ++h) {
      auto d = relator_signature_delta(build_relator(RelatorKind::star, g, cat, h));
      c.expect(d.d_euler == -(4 * h * h + 5 * h) && d.d_sigma == 2 * h * h + 3 * h,
               "delta(S_" + std::to_string(h) + ") at g=" + std::to_string(g) + " = (" + std::to_string(d.d_euler) +
                   ", " + std::to_string(d.d_sigma) + ")");
    }
}

void criterion5(Check& c) {
  for (int g = 3; g <= 8; ++g)
    for (int h = 1; h <= g - 2; ++h)
      c.expect(theorem_stage(g, h).slope() == theorem_slope(g, h),
               "pipeline vs closed form at g=" + std::to_string(g) + " h=" + std::to_string(h));
  auto cat = CurveCatalog::builtin(3, 4);
  for (auto [g, h] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {4, 2}}) {
    const long n = (2 * h + 1) * (2 * h + 2);
    const long expect = g % 2 == 0 ? n * (2 * g + 3) + h + 2 : n * (2 * g + 9) + h + 2;
    auto rec = build_high_slope_word(cat, g, h);
    auto r = signature_of_word(*rec.word);
    c.notes << "  (g,h)=(" << g << ',' << h << "): " << rec.word->size() << " letters, engine e=" << r.euler
            << " sigma=" << r.sigma << ", ledger lambda=" << rec.ledger.slope().get_str() << '\n';
    c.expect(static_cast<long>(rec.word->size()) == expect, "letter count");
    c.expect(Integer(static_cast<long>(r.sigma)) == rec.ledger.sigma, "engine sigma vs ledger");
    c.expect(Integer(static_cast<long>(r.euler)) == rec.ledger.euler, "engine e vs ledger");
  }
}

void criterion6(Check& c) {
  for (auto [g, h] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {4, 2}, {6, 2}}) {
    auto xs = corollary_iterate(g, h, 6);
    for (std::size_t k = 1; k < xs.size(); ++k)
      c.expect(xs[k].slope() > xs[k - 1].slope(), "increasing at stage " + std::to_string(k + 1));
    // Fixed point of (K, chi) -> N (K, chi) + (dK, dchi).
    const long n = (2 * h + 1) * (2 * h + 2);
    const Rational dk = q(-(2 * h * h + h)), dchi = q(-h * (h + 1), 2);
    const Rational k1(xs[0].ksq()), c1(xs[0].chi_f());
    const Rational limit = (k1 + dk / (n - 1)) / (c1 + dchi / (n - 1));
    c.expect(limit == slope_limit(g, h), "fixed-point limit at g=" + std::to_string(g));
    const double gap = std::fabs(Rational(xs[5].slope() - limit).get_d());
    c.expect(gap < 1e-3, "|lambda_6 - limit|");
    c.notes << "  (g,h)=(" << g << ',' << h << "): lambda_6=" << to_decimal(xs[5].slope())
            << " limit=" << limit.get_str() << " gap=" << gap << '\n';
  }
  c.expect(slope_limit(4, 1) == q(43, 7), "limit 43/7");
  c.expect(slope_limit(3, 1) == q(85, 21), "limit 85/21");
}

void criterion7(Check& c) {
  Rational prev = -1, prev_even = -1, prev_odd = -1;
  bool monotone = true, parity_monotone = true;
  for (int g = 3; g <= 40; ++g) {
    int best = 1;
    for (int h = 2; h <= g - 2; ++h)
      if (slope_limit(g, h) > slope_limit(g, best)) best = h;
    c.expect(h_max(g) == best, "argmax at g=" + std::to_string(g));
    const Rational top = slope_limit(g, best);
    c.expect(top < 8, "max slope < 8 at g=" + std::to_string(g));
    if (top <= prev) {
      monotone = false;
      c.notes << "  max slope drops from g=" << g - 1 << " (" << to_decimal(prev, 6) << ") to g=" << g << " ("
              << to_decimal(top, 6) << ")\n";
    }
    Rational& same = g % 2 == 0 ? prev_even : prev_odd;
    if (top <= same) parity_monotone = false;
    prev = top;
    same = top;
  }
  c.expect(monotone, "max slope increasing in g");
  c.notes << "  within each parity class the max slope is " << (parity_monotone ? "" : "NOT ")
          << "increasing\n";
}

void criterion8(Check& c) {
  const int g = 4;
  const auto low = hyperelliptic_invariants(g);
  const auto high = theorem_stage(g, h_max(g));
  c.expect(low.ksq() == 12 && low.chi_f() == 4, "low block (12,4)");
  const Rational eps = q(1, 10000);
  for (auto r : {q(5, 2), q(3), q(4), q(5), q(6), q(7), q(15, 2)}) {
    if (!(low.slope() < r && r < high.slope())) {
      c.notes << "  r=" << r.get_str() << ": outside (" << low.slope().get_str() << ", "
              << high.slope().get_str() << "), skipped\n";
      continue;
    }
    auto a = approximate_slope(r, eps, low, high, Integer(100000));
    c.expect(abs(a.lambda - r) <= eps && a.k + a.l <= 100000, "approximation of " + r.get_str());
    c.notes << "  r=" << r.get_str() << ": (k,l)=(" << a.k.get_str() << ',' << a.l.get_str()
            << ") lambda=" << a.lambda.get_str() << '\n';
  }
  auto exact = approximate_slope(q(6), q(0), low, theorem_stage(g, 1), Integer(100000));
  c.expect(exact.k == 1 && exact.l == 4 && exact.lambda == 6, "exact hit (1,4) with the h=1 block");
}

void criterion9(Check& c) {
  auto cat = CurveCatalog::builtin(3);
  auto rec = build_counterexample(cat, 3);
  const TwistWord& w = *rec.word;
  c.expect(w.size() == 56, "56 letters");
  bool clean = true;
  for (const auto& l : w.letters()) clean = clean && l.exponent == 1 && !l.curve.separating;
  c.expect(clean, "all letters positive and nonseparating");
  auto r = signature_of_word(w);
  c.expect(r.sigma == -32, "sigma = -32");
  auto inv = FibrationInvariants::from_euler_sigma(3, Integer(static_cast<long>(r.euler)),
                                                   Integer(static_cast<long>(r.sigma)));
  c.expect(inv.slope() == q(8, 3), "lambda = 8/3");
}

void criterion10(Check& c) {
  std::mt19937 rng(2024);
  std::size_t matrices = 0;
  auto symplectic = [&](const SymplecticMatrix& m) {
    ++matrices;
    if (!m.is_symplectic()) c.expect(false, "M^T J M = J");
  };
  for (int t = 0; t < 100; ++t) {
    int g = 1 + t % 3;
    auto a = evaluate(sftest::random_word(rng, g, 1 + t % 5));
    auto b = evaluate(sftest::random_word(rng, g, 1 + (t + 2) % 5));
    auto d = evaluate(sftest::random_word(rng, g, 1 + (t + 4) % 5));
    for (const auto* m : {&a, &b, &d}) symplectic(*m);
    c.expect(meyer_cocycle(a, b) + meyer_cocycle(a * b, d) == meyer_cocycle(a, b * d) + meyer_cocycle(b, d),
             "cocycle identity");
  }
  auto cat = CurveCatalog::builtin(2);
  for (auto kind : {RelatorKind::matsumoto, RelatorKind::hyperelliptic}) {
    auto w = build_relator(kind, 2, cat).word;
    const long long sigma = sigma_of(w);
    std::uniform_int_distribution<std::size_t> at(0, w.size() - 2);
    for (int k = 0; k < 50; ++k) {
      w = k % 2 ? hurwitz_move(w, at(rng)) : hurwitz_move_inverse(w, at(rng));
      symplectic(evaluate(w));
      c.expect(sigma_of(w) == sigma, "sigma invariant under Hurwitz moves");
    }
  }
  std::size_t ledgers = 0;
  auto ledger = [&](const FibrationInvariants& x) {
    ++ledgers;
    c.expect((x.slope() < 8) == (x.sigma < 0), "lambda < 8 iff sigma < 0");
  };
  for (int g = 1; g <= 8; ++g) {
    ledger(hyperelliptic_invariants(g));
    if (g >= 2) ledger(matsumoto_invariants(g));
    for (int h = 1; h <= g - 2; ++h)
      for (const auto& x : corollary_iterate(g, h, 6)) ledger(x);
  }
  auto cat34 = CurveCatalog::builtin(3, 4);
  ledger(build_counterexample(cat34, 3).ledger);
  for (auto [g, h] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}})
    symplectic(evaluate(*build_high_slope_word(cat34, g, h).word));
  c.notes << "  " << matrices << " matrices, " << ledgers << " ledgers checked\n";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"Euler characteristic of h_g and W_g", criterion1},
      {"signature anchors", criterion2},
      {"slope dictionary", criterion3},
      {"star relator deltas", criterion4},
      {"high-slope stage one", criterion5},
      {"iterated high-slope family", criterion6},
      {"h_max and the maximal limit slope", criterion7},
      {"slope approximation at g=4", criterion8},
      {"slope 4-4/g counterexample", criterion9},
      {"property suites", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes << "  exception: " << e.what() << '\n';
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << std::fixed << std::setprecision(2) << secs << " s)\n"
              << c.notes.str();
    std::cout.unsetf(std::ios::fixed);
    if (!c.ok) ++failed;
  }
  std::cout << (criteria.size() - failed) << '/' << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
