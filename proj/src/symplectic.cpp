#include "slopeforge/symplectic.hpp"

#include <array>
#include <optional>

#include "slopeforge/error.hpp"

namespace slopeforge {

SymplecticMatrix SymplecticMatrix::identity(int genus) {
  const int d = 2 * genus;
  std::vector<Integer> e(static_cast<std::size_t>(d * d), 0);
  for (int i = 0; i < d; ++i) e[i * d + i] = 1;
  return SymplecticMatrix(genus, std::move(e));
}

SymplecticMatrix::SymplecticMatrix(int genus, std::vector<Integer> entries)
    : genus_(genus), entries_(std::move(entries)) {
  if (genus < 1) throw RangeError("genus must be at least 1");
  if (entries_.size() != static_cast<std::size_t>(4 * genus * genus))
    throw RangeError("matrix of genus " + std::to_string(genus) + " needs " +
                     std::to_string(4 * genus * genus) + " entries, got " +
                     std::to_string(entries_.size()));
}

namespace {

// (J v)_i: J maps a_i -> -b_i, b_i -> a_i in coordinates.
HomologyVector apply_j(const HomologyVector& v) {
  HomologyVector out(v.size());
  for (std::size_t i = 0; i < v.size(); i += 2) {
    out[i] = v[i + 1];
    out[i + 1] = -v[i];
  }
  return out;
}

}  // namespace

SymplecticMatrix SymplecticMatrix::inverse() const {
  // (-J M^T J)_{rc} = -sum J_{rk} M_{lk} J_{lc}; J has one nonzero per row.
  const int d = dimension();
  SymplecticMatrix out = identity(genus_);
  auto jpartner = [](int i) { return i % 2 == 0 ? i + 1 : i - 1; };
  auto jsign = [](int i) { return i % 2 == 0 ? 1 : -1; };  // J_{i, partner(i)}
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      int k = jpartner(r);
      int l = jpartner(c);  // J_{l c} nonzero iff l = partner(c)
      int sign = -jsign(r) * jsign(l);
      out(r, c) = sign * (*this)(l, k);
    }
  return out;
}

bool SymplecticMatrix::is_symplectic() const {
  const int d = dimension();
  SurfaceContext s(genus_);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      HomologyVector col_r(d), col_c(d);
      for (int i = 0; i < d; ++i) {
        col_r[i] = (*this)(i, r);
        col_c[i] = (*this)(i, c);
      }
      if (symplectic_pairing(col_r, col_c) != s.form(r, c)) return false;
    }
  return true;
}

bool SymplecticMatrix::is_identity() const {
  const int d = dimension();
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

std::string SymplecticMatrix::to_string() const {
  std::string out;
  const int d = dimension();
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      if (c) out += ' ';
      out += (*this)(r, c).get_str();
    }
    out += '\n';
  }
  return out;
}

SymplecticMatrix operator*(const SymplecticMatrix& x, const SymplecticMatrix& y) {
  if (x.genus() != y.genus())
    throw GenusMismatch("matrix product of genus " + std::to_string(x.genus()) + " and " +
                        std::to_string(y.genus()));
  const int d = x.dimension();
  SymplecticMatrix out = SymplecticMatrix::identity(x.genus());
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      Integer s = 0;
      for (int k = 0; k < d; ++k) s += x(r, k) * y(k, c);
      out(r, c) = s;
    }
  return out;
}

HomologyVector operator*(const SymplecticMatrix& m, const HomologyVector& v) {
  const int d = m.dimension();
  if (static_cast<int>(v.size()) != d)
    throw GenusMismatch("vector of length " + std::to_string(v.size()) + " against matrix of size " +
                        std::to_string(d));
  HomologyVector out(d, 0);
  for (int r = 0; r < d; ++r)
    for (int k = 0; k < d; ++k) out[r] += m(r, k) * v[k];
  return out;
}

namespace {

// m <- m * T_v^exponent, using T = I + exponent * v (Jv)^T.
void right_multiply_twist(SymplecticMatrix& m, const HomologyVector& v, int exponent) {
  if (is_zero(v)) return;
  const int d = m.dimension();
  HomologyVector mv = m * v;
  HomologyVector jv = apply_j(v);
  for (int r = 0; r < d; ++r) {
    if (mv[r] == 0) continue;
    Integer scaled = exponent * mv[r];
    for (int c = 0; c < d; ++c)
      if (jv[c] != 0) m(r, c) += scaled * jv[c];
  }
}

}  // namespace

SymplecticMatrix transvection(int genus, const HomologyVector& v, int exponent) {
  if (static_cast<int>(v.size()) != 2 * genus)
    throw GenusMismatch("class of length " + std::to_string(v.size()) + " at genus " +
                        std::to_string(genus));
  SymplecticMatrix m = SymplecticMatrix::identity(genus);
  right_multiply_twist(m, v, exponent);
  return m;
}

SymplecticMatrix transvection(const Curve& curve) { return transvection(curve.genus, curve.hclass, 1); }

SymplecticMatrix letter_matrix(const TwistLetter& letter) {
  return transvection(letter.curve.genus, letter.curve.hclass, letter.exponent);
}

SymplecticMatrix evaluate(const TwistWord& word) {
  SymplecticMatrix m = SymplecticMatrix::identity(word.genus());
  for (const auto& l : word.letters()) right_multiply_twist(m, l.curve.hclass, l.exponent);
  return m;
}

bool is_homologically_trivial(const TwistWord& word) { return evaluate(word).is_identity(); }

namespace {

struct TransporterBuilder {
  int genus;
  std::string prefix;
  std::vector<HomologyVector> classes;

  TransporterBuilder(int g, std::string p) : genus(g), prefix(std::move(p)) {}

  TwistWord twist(const HomologyVector& v) {
    std::size_t idx = 0;
    while (idx < classes.size() && !equal_up_to_sign(classes[idx], v)) ++idx;
    if (idx == classes.size()) classes.push_back(v);
    TwistWord w(genus);
    w.push_back({Curve::from_class(prefix + std::to_string(idx + 1), classes[idx]), 1});
    return w;
  }
};

// u with <v,u> = +-1 and <u,w> = +-1, via a column Hermite reduction of the
// 2 x 2g system.
std::optional<HomologyVector> bridge_class(const HomologyVector& v, const HomologyVector& w) {
  const std::size_t d = v.size();
  // <v,u> = (-Jv) . u, <u,w> = (Jw) . u
  std::array<HomologyVector, 2> rows{-apply_j(v), apply_j(w)};
  std::vector<HomologyVector> unimod(d, HomologyVector(d, 0));  // columns of U
  for (std::size_t i = 0; i < d; ++i) unimod[i][i] = 1;

  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& q) {
    // column dst -= q * column src
    for (auto& r : rows) r[dst] -= q * r[src];
    for (std::size_t i = 0; i < d; ++i) unimod[dst][i] -= q * unimod[src][i];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (auto& r : rows) std::swap(r[x], r[y]);
    std::swap(unimod[x], unimod[y]);
  };
  auto reduce_row = [&](int row, std::size_t pivot) {
    for (;;) {
      std::size_t best = d;
      for (std::size_t c = pivot; c < d; ++c)
        if (rows[row][c] != 0 && (best == d || abs(rows[row][c]) < abs(rows[row][best]))) best = c;
      if (best == d) return;
      col_swap(pivot, best);
      bool done = true;
      for (std::size_t c = pivot + 1; c < d; ++c) {
        if (rows[row][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[row][c].get_mpz_t(), rows[row][pivot].get_mpz_t());
        col_op(c, pivot, q);
        if (rows[row][c] != 0) done = false;
      }
      if (done) return;
    }
  };
  reduce_row(0, 0);
  reduce_row(1, 1);
  const Integer d1 = rows[0][0];
  const Integer x = rows[1][0];
  const Integer d2 = rows[1][1];
  if (abs(d1) != 1) return std::nullopt;
  for (int s0 : {1, -1})
    for (int s1 : {1, -1}) {
      Integer z0 = s0 * d1;  // d1 = +-1, so z0 = s0 / d1
      Integer rest = s1 - x * z0;
      Integer z1 = 0;
      if (d2 == 0) {
        if (rest != 0) continue;
      } else {
        if (!mpz_divisible_p(rest.get_mpz_t(), d2.get_mpz_t())) continue;
        z1 = rest / d2;
      }
      HomologyVector u(d, 0);
      for (std::size_t i = 0; i < d; ++i) u[i] = z0 * unimod[0][i] + z1 * unimod[1][i];
      return u;
    }
  return std::nullopt;
}

// Word of at most four letters mapping v to +-w, or nullopt.
std::optional<TwistWord> direct_transporter(TransporterBuilder& b, const HomologyVector& v,
                                            const HomologyVector& w) {
  if (equal_up_to_sign(v, w)) return TwistWord(b.genus);
  const Integer p = symplectic_pairing(v, w);
  if (p == 1 || p == -1) {
    // T_v T_w: v -> <v,w> w
    TwistWord out = b.twist(v);
    out.append(b.twist(w));
    return out;
  }
  auto u = bridge_class(v, w);
  if (!u) return std::nullopt;
  TwistWord out = b.twist(*u);
  out.append(b.twist(w));
  out.append(b.twist(v));
  out.append(b.twist(*u));
  return out;
}

}  // namespace

TwistWord symplectic_transporter(int genus, const HomologyVector& v, const HomologyVector& w,
                                 const std::string& prefix) {
  if (static_cast<int>(v.size()) != 2 * genus || static_cast<int>(w.size()) != 2 * genus)
    throw GenusMismatch("transporter classes do not match genus " + std::to_string(genus));
  if (!is_primitive(v) || !is_primitive(w))
    throw RangeError("transporter needs primitive classes, got [" + format_vector(v) + "] and [" +
                     format_vector(w) + "]");
  TransporterBuilder b(genus, prefix);
  if (auto phi = direct_transporter(b, v, w)) return *phi;

  SurfaceContext s(genus);
  for (int i = 1; i <= genus; ++i)
    for (const HomologyVector& e : {s.a(i), s.b(i)}) {
      TransporterBuilder trial(genus, prefix);
      auto first = direct_transporter(trial, v, e);
      if (!first) continue;
      auto second = direct_transporter(trial, e, w);
      if (!second) continue;
      return *second * *first;
    }
  throw SearchExhausted("no transporter found from [" + format_vector(v) + "] to [" +
                        format_vector(w) + "]");
}

}  // namespace slopeforge
