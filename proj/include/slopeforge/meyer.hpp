#pragma once

// Signatures of Lefschetz fibrations from their monodromy factorizations.
//
// For a factorization A_1 ... A_n = 1 the signature is
//
//   sigma = s * sum_{k=1}^{n-1} tau(Pi_k, M_{k+1}) + sum_letters corr(letter)
//
// where tau is Meyer's signature cocycle, M_j the homology matrix of letter j,
// Pi_k = M_1 ... M_k, and corr is -exponent for a separating letter and 0
// otherwise. The sign s and the choice of left partial products were fixed by
// requiring sigma(h_1) = -8 and sigma(W_2) = -4; see kFrozenConvention.

#include <cstddef>
#include <vector>

#include "slopeforge/surface.hpp"
#include "slopeforge/symplectic.hpp"
#include "slopeforge/twist_word.hpp"

namespace slopeforge {

/// Symmetric matrix over Q.
class RationalForm {
 public:
  explicit RationalForm(std::size_t dimension);
  RationalForm(std::size_t dimension, std::vector<Rational> entries);

  std::size_t dimension() const { return dimension_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * dimension_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * dimension_ + j]; }
  bool is_symmetric() const;

 private:
  std::size_t dimension_;
  std::vector<Rational> entries_;
};

/// (#positive - #negative) eigenvalues, by exact congruence diagonalization.
int form_signature(const RationalForm& form);

/// Meyer's cocycle: the signature of
///   <(x1,y1),(x2,y2)> = <x1 + y1, (I - B) y2>
/// on V = {(x, y) : (A^{-1} - I) x + (B - I) y = 0}.
int meyer_cocycle(const SymplecticMatrix& a, const SymplecticMatrix& b);

enum class PartialProducts { left, right };

struct MeyerConvention {
  int sign = 1;
  PartialProducts order = PartialProducts::left;
};

inline constexpr MeyerConvention kFrozenConvention{1, PartialProducts::left};

struct SignatureReport {
  std::size_t length = 0;
  long long cocycle_sum = 0;
  long long separating_correction = 0;
  long long sigma = 0;
  long long euler = 0;
};

/// Signature and Euler characteristic of the Lefschetz fibration with
/// monodromy `word`. The word must be all-positive and homologically trivial.
SignatureReport signature_of_word(const TwistWord& word,
                                  MeyerConvention convention = kFrozenConvention);

/// Same computation without the positivity requirement (achiral fibrations).
/// Used for relator bookkeeping only.
SignatureReport signature_of_achiral_word(const TwistWord& word,
                                          MeyerConvention convention = kFrozenConvention);

struct RelatorDelta {
  long long d_euler = 0;
  long long d_sigma = 0;
  friend bool operator==(const RelatorDelta&, const RelatorDelta&) = default;
};

/// Change of (e, sigma) caused by substituting the relator's left side by its
/// right side. Computed on the ambient word X X^{-1} (X the left side).
RelatorDelta relator_signature_delta(const Relator& relator);

}  // namespace slopeforge
