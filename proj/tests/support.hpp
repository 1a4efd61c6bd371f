#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "slopeforge/surface.hpp"
#include "slopeforge/symplectic.hpp"
#include "slopeforge/twist_word.hpp"

namespace sftest {

using namespace slopeforge;

inline HomologyVector vec(std::initializer_list<long> xs) {
  HomologyVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Dense 64-bit reference for the twist action, independent of the library's
// rank-one update: column j of T_v^e is e_j + e <e_j, v> v.
inline std::vector<std::vector<std::int64_t>> naive_transvection(const std::vector<std::int64_t>& v, int e) {
  const std::size_t d = v.size();
  std::vector<std::vector<std::int64_t>> m(d, std::vector<std::int64_t>(d, 0));
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<std::int64_t> ej(d, 0);
    ej[j] = 1;
    std::int64_t pair = 0;  // <e_j, v>
    for (std::size_t i = 0; i < d; i += 2) pair += ej[i] * v[i + 1] - ej[i + 1] * v[i];
    for (std::size_t i = 0; i < d; ++i) m[i][j] = ej[i] + e * pair * v[i];
  }
  return m;
}

inline std::vector<std::vector<std::int64_t>> naive_product(const std::vector<std::vector<std::int64_t>>& a,
                                                            const std::vector<std::vector<std::int64_t>>& b) {
  const std::size_t d = a.size();
  std::vector<std::vector<std::int64_t>> c(d, std::vector<std::int64_t>(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline bool same_matrix(const SymplecticMatrix& m, const std::vector<std::vector<std::int64_t>>& ref) {
  for (int r = 0; r < m.dimension(); ++r)
    for (int c = 0; c < m.dimension(); ++c)
      if (m(r, c) != Integer(static_cast<long>(ref[r][c]))) return false;
  return true;
}

// Random primitive vector with small entries.
inline HomologyVector random_primitive(std::mt19937& rng, int genus, int bound = 3) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  for (;;) {
    HomologyVector v;
    for (int i = 0; i < 2 * genus; ++i) v.emplace_back(dist(rng));
    if (is_primitive(v)) return v;
  }
}

inline TwistWord random_word(std::mt19937& rng, int genus, std::size_t length, bool signed_letters = true) {
  TwistWord w(genus);
  std::bernoulli_distribution flip(0.5);
  for (std::size_t i = 0; i < length; ++i) {
    Curve c = Curve::from_class("r" + std::to_string(i), random_primitive(rng, genus, 1));
    w.push_back({c, signed_letters && flip(rng) ? -1 : 1});
  }
  return w;
}

inline SymplecticMatrix random_symplectic(std::mt19937& rng, int genus, std::size_t letters = 4) {
  return evaluate(random_word(rng, genus, letters));
}

}  // namespace sftest
