#pragma once

// Homology representation Mod(S_g) -> Sp(2g, Z).

#include <string>
#include <vector>

#include "slopeforge/surface.hpp"
#include "slopeforge/twist_word.hpp"

namespace slopeforge {

class SymplecticMatrix {
 public:
  static SymplecticMatrix identity(int genus);
  /// Row-major entries; size must be (2g)^2.
  SymplecticMatrix(int genus, std::vector<Integer> entries);

  int genus() const { return genus_; }
  int dimension() const { return 2 * genus_; }

  const Integer& operator()(int row, int col) const { return entries_[row * dimension() + col]; }
  Integer& operator()(int row, int col) { return entries_[row * dimension() + col]; }

  /// M^{-1} = -J M^T J, exact for symplectic M.
  SymplecticMatrix inverse() const;

  /// M^T J M == J.
  bool is_symplectic() const;
  bool is_identity() const;

  std::string to_string() const;

  friend bool operator==(const SymplecticMatrix&, const SymplecticMatrix&) = default;

 private:
  int genus_;
  std::vector<Integer> entries_;
};

SymplecticMatrix operator*(const SymplecticMatrix& x, const SymplecticMatrix& y);
HomologyVector operator*(const SymplecticMatrix& m, const HomologyVector& v);

/// x -> x + <x, v> v, the action of the right-handed twist about a curve of
/// class v. Identity for separating curves.
SymplecticMatrix transvection(const Curve& curve);
SymplecticMatrix transvection(int genus, const HomologyVector& v, int exponent = 1);

SymplecticMatrix letter_matrix(const TwistLetter& letter);

/// M(A_1) M(A_2) ... M(A_n).
SymplecticMatrix evaluate(const TwistWord& word);

bool is_homologically_trivial(const TwistWord& word);

/// A word phi of nonseparating twists with evaluate(phi) v = +-w. Empty when
/// v = +-w, two letters when <v,w> = +-1, otherwise four letters routed
/// through an auxiliary class u with <v,u> = +-1 = <u,w>. Classes for which
/// no such u exists are routed through an intermediate basis class (at most
/// eight letters). Synthetic curves are named `<prefix>1`, `<prefix>2`, ...
TwistWord symplectic_transporter(int genus, const HomologyVector& v, const HomologyVector& w,
                                 const std::string& prefix = "t");

}  // namespace slopeforge
