#pragma once

// Explicit factorizations and ledger pipelines for the high-slope family,
// its iteration, the nonhyperelliptic slope 4 - 4/g example, and slope
// approximation by fiber sums of two blocks.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "slopeforge/ledger.hpp"
#include "slopeforge/surface.hpp"
#include "slopeforge/twist_word.hpp"

namespace slopeforge {

inline constexpr std::size_t kDefaultWordBudget = 100000;

struct ConstructionRecord {
  std::string label;
  int genus = 0;
  std::optional<int> h;
  int stage = 1;
  std::optional<TwistWord> word;
  FibrationInvariants ledger;
  std::vector<std::string> provenance;
};

/// Letters of stage `stage` of the high-slope family.
Integer high_slope_word_length(int genus, int h, int stage);

/// Conjugates `block` so that its first letter lands on c'_{2h+1}, c_{2h+1},
/// ..., c_1 in turn, multiplies the 2h+2 copies, Hurwitz-rearranges the
/// product to (C'_{2h+1} C_{2h+1} ... C_1) V, raises it to the (2h+1)-th
/// power, gathers the prefixes in front, and applies the star substitution
/// at position 0. The first letter of `block` must be nonseparating.
TwistWord high_slope_step(const TwistWord& block, int h, const CurveCatalog& catalog,
                          std::vector<std::string>* provenance = nullptr);

/// Stage 1: the step applied to the Matsumoto word W_g.
ConstructionRecord build_high_slope_word(const CurveCatalog& catalog, int genus, int h);

/// Stages 1..m. Stage k >= 2 is materialized while its length stays within
/// `budget`; past that only the ledger is filled in.
std::vector<ConstructionRecord> high_slope_sequence(const CurveCatalog& catalog, int genus, int h,
                                                    int m, std::size_t budget = kDefaultWordBudget);

/// h_g * h_g^{T_{d_2}}.
ConstructionRecord build_counterexample(const CurveCatalog& catalog, int genus);

struct Approximation {
  Integer k;  // copies of the low block
  Integer l;  // copies of the high block
  Rational lambda;
};

/// lambda_{k,l} = (k K_L + l K_U) / (k chi_L + l chi_U).
Rational combined_slope(const FibrationInvariants& low, const FibrationInvariants& high,
                        const Integer& k, const Integer& l);

/// Smallest k + l (then smallest error, then smallest k) with
/// |lambda_{k,l} - r| <= eps. Requires slope(low) < r < slope(high), eps >= 0.
Approximation approximate_slope(const Rational& r, const Rational& eps,
                                const FibrationInvariants& low,
                                const FibrationInvariants& high, const Integer& max_copies);

}  // namespace slopeforge
