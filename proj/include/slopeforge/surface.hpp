#pragma once

// Closed oriented surface of genus g, its first homology with the standard
// symplectic basis a_1, b_1, ..., a_g, b_g, and the named curve families used
// by the relations this library works with.

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace slopeforge {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coordinates in the basis (a_1, b_1, a_2, b_2, ..., a_g, b_g).
using HomologyVector = std::vector<Integer>;

class SurfaceContext {
 public:
  explicit SurfaceContext(int genus);

  int genus() const { return genus_; }
  int dimension() const { return 2 * genus_; }

  /// Basis symbols in coordinate order: "a1", "b1", ..., "ag", "bg".
  std::vector<std::string> basis() const;

  /// Entry (row, col) of the block form J with blocks [[0,1],[-1,0]].
  int form(int row, int col) const;

  HomologyVector zero() const { return HomologyVector(dimension(), 0); }
  HomologyVector a(int i) const;
  HomologyVector b(int i) const;

 private:
  int genus_;
};

/// <x, y> = x^T J y. Both vectors must have the same even length.
Integer symplectic_pairing(const HomologyVector& x, const HomologyVector& y);

/// Image of x under the homology action of T_v^exponent: x + exponent <x,v> v.
HomologyVector apply_twist(const HomologyVector& v, int exponent, const HomologyVector& x);

bool is_zero(const HomologyVector& v);
bool is_primitive(const HomologyVector& v);

/// v == w or v == -w.
bool equal_up_to_sign(const HomologyVector& v, const HomologyVector& w);

HomologyVector operator+(const HomologyVector& x, const HomologyVector& y);
HomologyVector operator-(const HomologyVector& x, const HomologyVector& y);
HomologyVector operator-(const HomologyVector& x);

std::string format_vector(const HomologyVector& v);

/// A named simple closed curve, known through its homology class.
///
/// Curves are unoriented, so `hclass` is meaningful only up to sign. A curve is
/// separating exactly when its class vanishes; `from_class` enforces that, the
/// aggregate constructor does not (so invalid data can be represented and
/// reported by `validate_catalog`).
struct Curve {
  std::string name;
  int genus = 0;
  HomologyVector hclass;
  bool separating = false;

  static Curve from_class(std::string name, HomologyVector hclass);

  /// Name with any conjugation suffix ("c1@3" -> "c1") removed.
  std::string root_name() const;
};

/// Algebraic intersection <[u], [v]>.
Integer intersection_number(const Curve& u, const Curve& v);

/// c_1, ..., c_{2g+1} with [c_{2i}] = a_i and [c_{2i-1}] = b_{i-1} + b_i.
std::vector<Curve> standard_chain_classes(int genus);

enum class FamilyKind { chain, hyperelliptic, matsumoto, star };

struct FamilyKey {
  FamilyKind kind;
  int genus;
  int h = 0;  // star only

  auto operator<=>(const FamilyKey&) const = default;
  std::string label() const;
};

/// Curve names making up a family, in catalog order.
std::vector<std::string> family_curve_names(const FamilyKey& key);

class CurveCatalog {
 public:
  /// Every family at every genus in [min_genus, max_genus].
  static CurveCatalog builtin(int min_genus, int max_genus);
  static CurveCatalog builtin(int genus) { return builtin(genus, genus); }

  /// Line-based text format: `curve <name> g=<int> class=<i1,...,i2g>`.
  static CurveCatalog parse(std::string_view text);
  static CurveCatalog load(const std::filesystem::path& path);

  /// Inserts or replaces the curve (genus, name). Families whose curves are
  /// now all present are registered.
  void add(Curve curve);

  const Curve* find(int genus, std::string_view name) const;
  const Curve& at(int genus, std::string_view name) const;

  std::vector<Curve> family(const FamilyKey& key) const;
  const std::vector<FamilyKey>& families() const { return families_; }
  std::vector<int> genera() const;
  std::vector<Curve> curves(int genus) const;

  std::string serialize() const;

 private:
  void register_families(int genus);

  std::map<int, std::map<std::string, Curve, std::less<>>> curves_;
  std::vector<FamilyKey> families_;
};

struct FamilyCheck {
  FamilyKey key;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

struct CatalogReport {
  std::vector<std::string> curve_violations;
  std::vector<FamilyCheck> families;
  bool passed() const;
  std::string to_string() const;
};

/// Checks the per-curve invariants, chain adjacency, and that every family's
/// relator acts trivially on homology.
CatalogReport validate_catalog(const CurveCatalog& catalog);

}  // namespace slopeforge
