#pragma once

// Words in Dehn twists. A printed word A_1 A_2 ... A_n is stored left to
// right and read in functional order: the rightmost letter acts first.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "slopeforge/surface.hpp"

namespace slopeforge {

struct TwistLetter {
  Curve curve;
  int exponent = 1;  // +1 right-handed, -1 left-handed
};

/// Same curve class up to sign and same exponent.
bool same_letter(const TwistLetter& x, const TwistLetter& y);

class TwistWord {
 public:
  explicit TwistWord(int genus) : genus_(genus) {}
  TwistWord(int genus, std::vector<TwistLetter> letters);

  int genus() const { return genus_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<TwistLetter>& letters() const { return letters_; }
  const TwistLetter& operator[](std::size_t i) const { return letters_[i]; }

  std::size_t positive_count() const;
  std::size_t negative_count() const;
  bool all_positive() const { return negative_count() == 0; }

  void push_back(TwistLetter letter);
  void append(const TwistWord& other);

  /// Letters reversed with exponents negated; represents the inverse element.
  TwistWord inverse() const;
  TwistWord power(std::size_t k) const;
  TwistWord subword(std::size_t begin, std::size_t end) const;

 private:
  int genus_;
  std::vector<TwistLetter> letters_;
};

TwistWord operator*(const TwistWord& x, const TwistWord& y);

/// Twist letters about each curve, in order, all with the given exponent.
TwistWord word_of(int genus, const std::vector<Curve>& curves, int exponent = 1);

/// Whitespace-separated tokens `name`, `name^k`, `name^-k`; `#` starts a
/// comment. Each token expands to |k| letters.
TwistWord parse_word(std::string_view text, const CurveCatalog& catalog, int genus);

/// Inverse of parse_word; runs of equal adjacent letters collapse to `name^k`.
std::string serialize_word(const TwistWord& word);

/// Word file: optional `curve ...` declaration lines (catalog syntax) for
/// curves the catalog lacks, followed by the word itself.
TwistWord parse_word_file(std::string_view text, const CurveCatalog& catalog, int genus);
TwistWord load_word_file(const std::filesystem::path& path, const CurveCatalog& catalog, int genus);

/// Self-contained word file. Curves missing from the catalog (or disagreeing
/// with it) are declared; conjugated curves get distinct `root@k` names.
std::string write_word_file(const TwistWord& word, const CurveCatalog& catalog);

/// A1..Ai Ai+1..An  ->  A1..(Ai+1)^{Ai} Ai..An. Zero-based: swaps letters
/// i and i+1, 0 <= i < size()-1.
TwistWord hurwitz_move(const TwistWord& word, std::size_t i);

/// Inverse of hurwitz_move at the same index: letter i+1 moves left
/// unchanged and letter i is conjugated by its inverse.
TwistWord hurwitz_move_inverse(const TwistWord& word, std::size_t i);

/// Every letter's curve pushed forward by phi (as a mapping class).
TwistWord global_conjugate(const TwistWord& word, const TwistWord& phi);

/// w1 * w2^phi for all-positive homologically trivial w1, w2.
TwistWord fiber_sum(const TwistWord& w1, const TwistWord& w2, const TwistWord& phi);

enum class RelatorKind { chain_odd, chain_even, hyperelliptic, matsumoto, star, custom };

std::string to_string(RelatorKind kind);

/// A relation X_1...X_m = Y_1...Y_n stored as the relator word
/// X_1...X_m Y_n^{-1}...Y_1^{-1}; `left_len` is m.
struct Relator {
  TwistWord word;
  std::size_t left_len = 0;
  RelatorKind kind = RelatorKind::custom;

  static Relator from_sides(const TwistWord& left, const TwistWord& right, RelatorKind kind);

  TwistWord left_side() const;
  TwistWord right_side() const;
  /// The relation read right-to-left: Y = X.
  Relator inverse() const;
};

/// Replaces the left side of `relator` found at position `at` of `word` by
/// its right side. Curves are compared up to class sign.
TwistWord substitute(const TwistWord& word, std::size_t at, const Relator& relator);

/// Catalog relators. `h` is used by `star` only (1 <= h <= g-2).
Relator build_relator(RelatorKind kind, int genus, const CurveCatalog& catalog, int h = 0);

}  // namespace slopeforge
