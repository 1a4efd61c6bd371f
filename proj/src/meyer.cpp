#include "slopeforge/meyer.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "slopeforge/error.hpp"

namespace slopeforge {

RationalForm::RationalForm(std::size_t dimension)
    : dimension_(dimension), entries_(dimension * dimension, Rational(0)) {}

RationalForm::RationalForm(std::size_t dimension, std::vector<Rational> entries)
    : dimension_(dimension), entries_(std::move(entries)) {
  if (entries_.size() != dimension_ * dimension_)
    throw RangeError("form of dimension " + std::to_string(dimension_) + " needs " +
                     std::to_string(dimension_ * dimension_) + " entries");
}

bool RationalForm::is_symmetric() const {
  for (std::size_t i = 0; i < dimension_; ++i)
    for (std::size_t j = i + 1; j < dimension_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

int form_signature(const RationalForm& form) {
  if (!form.is_symmetric()) throw RangeError("form_signature needs a symmetric form");
  const std::size_t n = form.dimension();
  std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s[i][j] = form(i, j);

  std::vector<std::size_t> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = i;
  int signature = 0;
  while (!live.empty()) {
    auto diag = std::find_if(live.begin(), live.end(), [&](std::size_t i) { return s[i][i] != 0; });
    if (diag == live.end()) {
      // All diagonal entries vanish: replace e_i by e_i + e_j for a nonzero
      // s_ij, which makes s_ii = 2 s_ij.
      std::size_t pi = n, pj = n;
      for (std::size_t i : live) {
        for (std::size_t j : live)
          if (s[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
        if (pi != n) break;
      }
      if (pi == n) break;
      for (std::size_t t : live) s[pi][t] += s[pj][t];
      for (std::size_t t : live) s[t][pi] += s[t][pj];
      continue;
    }
    const std::size_t p = *diag;
    const Rational d = s[p][p];
    signature += sgn(d);
    live.erase(diag);
    for (std::size_t a : live) {
      if (s[a][p] == 0) continue;
      const Rational f = s[a][p] / d;
      for (std::size_t b : live) s[a][b] -= f * s[p][b];
    }
  }
  return signature;
}

namespace {

// Basis of the rational kernel of a rows x cols integer matrix.
std::vector<std::vector<Rational>> kernel(std::vector<std::vector<Rational>> m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    const Rational pv = m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] /= pv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rational>> basis;
  std::size_t next_pivot = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == f) {
      ++next_pivot;
      continue;
    }
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

int meyer_cocycle(const SymplecticMatrix& a, const SymplecticMatrix& b) {
  if (a.genus() != b.genus())
    throw GenusMismatch("Meyer cocycle of genus " + std::to_string(a.genus()) + " and " +
                        std::to_string(b.genus()));
  const int d = a.dimension();
  const SymplecticMatrix ainv = a.inverse();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(2 * d));
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      m[r][c] = ainv(r, c) - (r == c ? 1 : 0);
      m[r][d + c] = b(r, c) - (r == c ? 1 : 0);
    }
  const auto basis = kernel(std::move(m), 2 * d);
  if (basis.empty()) return 0;

  // For each basis vector: s = x + y and t = (I - B) y.
  const std::size_t k = basis.size();
  std::vector<std::vector<Rational>> sum(k, std::vector<Rational>(d)), img(k, std::vector<Rational>(d));
  for (std::size_t i = 0; i < k; ++i)
    for (int r = 0; r < d; ++r) {
      sum[i][r] = basis[i][r] + basis[i][d + r];
      Rational t = basis[i][d + r];
      for (int c = 0; c < d; ++c)
        if (b(r, c) != 0) t -= b(r, c) * basis[i][d + c];
      img[i][r] = t;
    }
  auto pairing = [d](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    Rational s = 0;
    for (int i = 0; i < d; i += 2) s += x[i] * y[i + 1] - x[i + 1] * y[i];
    return s;
  };
  RationalForm form(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Rational v = (pairing(sum[i], img[j]) + pairing(sum[j], img[i])) / 2;
      form(i, j) = v;
      form(j, i) = v;
    }
  return form_signature(form);
}

namespace {

// Sum of tau over consecutive (product, letter) pairs. Independent terms are
// evaluated on worker threads; integer addition keeps the result identical to
// the sequential order.
long long cocycle_sum(const TwistWord& word, MeyerConvention convention) {
  const std::size_t n = word.size();
  if (n < 2) return 0;
  std::vector<SymplecticMatrix> letters;
  letters.reserve(n);
  for (const auto& l : word.letters()) letters.push_back(letter_matrix(l));

  // pairs[t] = (first argument, second argument) of the t-th cocycle term.
  std::vector<SymplecticMatrix> firsts;
  std::vector<const SymplecticMatrix*> seconds;
  firsts.reserve(n - 1);
  if (convention.order == PartialProducts::left) {
    SymplecticMatrix p = letters[0];
    for (std::size_t k = 1; k < n; ++k) {
      firsts.push_back(p);
      seconds.push_back(&letters[k]);
      p = p * letters[k];
    }
  } else {
    SymplecticMatrix p = letters[n - 1];
    for (std::size_t k = n - 1; k-- > 0;) {
      firsts.push_back(p);
      seconds.push_back(&letters[k]);
      p = letters[k] * p;
    }
  }

  const std::size_t terms = firsts.size();
  std::vector<int> values(terms, 0);
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), (terms + 63) / 64);
  if (workers <= 1) {
    for (std::size_t t = 0; t < terms; ++t) values[t] = meyer_cocycle(firsts[t], *seconds[t]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < terms; t = next++) values[t] = meyer_cocycle(firsts[t], *seconds[t]);
      });
    for (auto& th : pool) th.join();
  }
  long long total = 0;
  for (int v : values) total += v;
  return total;
}

SignatureReport compute(const TwistWord& word, MeyerConvention convention) {
  if (!is_homologically_trivial(word))
    throw NotTrivialError("word of length " + std::to_string(word.size()) +
                          " is not homologically trivial");
  SignatureReport rep;
  rep.length = word.size();
  rep.cocycle_sum = cocycle_sum(word, convention);
  for (const auto& l : word.letters())
    if (l.curve.separating) rep.separating_correction -= l.exponent;
  rep.sigma = convention.sign * rep.cocycle_sum + rep.separating_correction;
  rep.euler = 4 - 4LL * word.genus() + static_cast<long long>(word.size());
  return rep;
}

}  // namespace

SignatureReport signature_of_word(const TwistWord& word, MeyerConvention convention) {
  if (!word.all_positive())
    throw RangeError("a Lefschetz fibration monodromy must be all-positive; word has " +
                     std::to_string(word.negative_count()) + " negative letters");
  return compute(word, convention);
}

SignatureReport signature_of_achiral_word(const TwistWord& word, MeyerConvention convention) {
  return compute(word, convention);
}

RelatorDelta relator_signature_delta(const Relator& relator) {
  const TwistWord x = relator.left_side();
  const TwistWord y = relator.right_side();
  const TwistWord xinv = x.inverse();
  const auto before = signature_of_achiral_word(x * xinv);
  const auto after = signature_of_achiral_word(y * xinv);
  return {static_cast<long long>(y.size()) - static_cast<long long>(x.size()), after.sigma - before.sigma};
}

}  // namespace slopeforge
