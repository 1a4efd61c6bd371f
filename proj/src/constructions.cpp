#include "slopeforge/constructions.hpp"

#include <algorithm>

#include "slopeforge/error.hpp"
#include "slopeforge/symplectic.hpp"

namespace slopeforge {

Integer high_slope_word_length(int genus, int h, int stage) {
  if (stage < 1) throw RangeError("stage must be at least 1");
  const Integer blocks = (2 * h + 1) * (2 * h + 2);
  Integer n = *matsumoto_invariants(genus).letters;
  for (int k = 0; k < stage; ++k) n = blocks * n - (4 * h * h + 5 * h);
  return n;
}

namespace {

// Moves the letter at `from` to `to` < `from` by inverse Hurwitz moves: it
// keeps its curve, and each letter it passes is conjugated by its inverse.
void move_left(std::vector<TwistLetter>& ls, std::size_t from, std::size_t to) {
  const HomologyVector v = ls[from].curve.hclass;
  const int e = ls[from].exponent;
  if (!is_zero(v))
    for (std::size_t k = to; k < from; ++k) {
      Curve& c = ls[k].curve;
      HomologyVector image = apply_twist(v, -e, c.hclass);
      if (image != c.hclass) {
        c.hclass = std::move(image);
        c.name = c.root_name() + "@";
      }
    }
  std::rotate(ls.begin() + static_cast<std::ptrdiff_t>(to), ls.begin() + static_cast<std::ptrdiff_t>(from),
              ls.begin() + static_cast<std::ptrdiff_t>(from) + 1);
}

void note(std::vector<std::string>* provenance, std::string step) {
  if (provenance) provenance->push_back(std::move(step));
}

}  // namespace

TwistWord high_slope_step(const TwistWord& block, int h, const CurveCatalog& catalog,
                          std::vector<std::string>* provenance) {
  const int g = block.genus();
  if (g < 3 || h < 1 || h > g - 2)
    throw RangeError("high-slope step needs g >= 3 and 1 <= h <= g-2, got g=" + std::to_string(g) +
                     ", h=" + std::to_string(h));
  if (block.empty() || block[0].curve.separating)
    throw RangeError("high-slope step needs a block whose first letter is nonseparating");
  if (!block.all_positive()) throw RangeError("high-slope step needs an all-positive block");

  const Relator star = build_relator(RelatorKind::star, g, catalog, h);
  const std::size_t prefix_len = static_cast<std::size_t>(2 * h + 2);
  const std::size_t power = static_cast<std::size_t>(2 * h + 1);
  const TwistWord prefix = star.left_side().subword(0, prefix_len);

  // W = block^{phi_1} ... block^{phi_{2h+2}} with phi_i(pivot) = +-t_i.
  const HomologyVector& pivot = block[0].curve.hclass;
  TwistWord w(g);
  for (std::size_t i = 0; i < prefix_len; ++i) {
    const Curve& target = prefix[i].curve;
    TwistWord phi = symplectic_transporter(g, pivot, target.hclass, "t" + std::to_string(i + 1) + "_");
    TwistWord conj = global_conjugate(block, phi);
    if (!equal_up_to_sign(conj[0].curve.hclass, target.hclass))
      throw SubstitutionMismatch("transporter did not reach " + target.name);
    w.append(conj);
    note(provenance, "conjugate block by " + std::to_string(phi.size()) + "-letter map to " + target.name);
  }
  note(provenance, "fiber_sum " + std::to_string(prefix_len) + " conjugated blocks");

  // W = (T_1 ... T_{2h+2}) V.
  std::vector<TwistLetter> ls = w.letters();
  for (std::size_t i = 1; i < prefix_len; ++i) move_left(ls, i * block.size(), i);
  note(provenance, "hurwitz: prefix " + serialize_word(prefix) + " moved to the front");

  // W^{2h+1} with all prefixes gathered in front.
  const std::size_t n = ls.size();
  std::vector<TwistLetter> big;
  big.reserve(n * power);
  for (std::size_t t = 0; t < power; ++t) big.insert(big.end(), ls.begin(), ls.end());
  for (std::size_t t = 1; t < power; ++t)
    for (std::size_t q = 0; q < prefix_len; ++q) move_left(big, t * n + q, t * prefix_len + q);
  note(provenance, "fiber_sum " + std::to_string(power) + " copies; hurwitz: prefixes gathered");

  TwistWord gathered(g, std::move(big));
  TwistWord out = substitute(gathered, 0, star);
  note(provenance, "substitute star(h=" + std::to_string(h) + ") at 0: -" +
                       std::to_string(star.left_len) + " +" + std::to_string(star.word.size() - star.left_len) +
                       " letters");
  return out;
}

ConstructionRecord build_high_slope_word(const CurveCatalog& catalog, int genus, int h) {
  ConstructionRecord rec;
  rec.label = "high-slope";
  rec.genus = genus;
  rec.h = h;
  rec.stage = 1;
  rec.ledger = theorem_stage(genus, h);
  const TwistWord block = build_relator(RelatorKind::matsumoto, genus, catalog).left_side();
  rec.provenance.push_back("block W_" + std::to_string(genus) + " (" + std::to_string(block.size()) +
                           " letters)");
  rec.word = high_slope_step(block, h, catalog, &rec.provenance);
  return rec;
}

std::vector<ConstructionRecord> high_slope_sequence(const CurveCatalog& catalog, int genus, int h, int m,
                                                    std::size_t budget) {
  const auto ledgers = corollary_iterate(genus, h, m);
  std::vector<ConstructionRecord> out;
  for (int k = 1; k <= m; ++k) {
    ConstructionRecord rec;
    rec.label = "high-slope";
    rec.genus = genus;
    rec.h = h;
    rec.stage = k;
    rec.ledger = ledgers[static_cast<std::size_t>(k - 1)];
    const bool fits = high_slope_word_length(genus, h, k) <= Integer(static_cast<unsigned long>(budget));
    if (k == 1 && fits) {
      rec = build_high_slope_word(catalog, genus, h);
    } else if (fits && out.back().word) {
      rec.provenance.push_back("block = stage " + std::to_string(k - 1) + " word");
      rec.word = high_slope_step(*out.back().word, h, catalog, &rec.provenance);
    } else {
      rec.provenance.push_back("ledger only: word length " + high_slope_word_length(genus, h, k).get_str() +
                               " exceeds budget " + std::to_string(budget));
    }
    out.push_back(std::move(rec));
  }
  return out;
}

ConstructionRecord build_counterexample(const CurveCatalog& catalog, int genus) {
  if (genus < 3) throw RangeError("counterexample needs g >= 3, got g=" + std::to_string(genus));
  ConstructionRecord rec;
  rec.label = "counterexample";
  rec.genus = genus;
  const TwistWord hg = build_relator(RelatorKind::hyperelliptic, genus, catalog).left_side();
  TwistWord phi(genus);
  phi.push_back({catalog.at(genus, "d2"), 1});
  rec.word = fiber_sum(hg, hg, phi);
  rec.ledger = ledger_fiber_sum(hyperelliptic_invariants(genus), hyperelliptic_invariants(genus));
  rec.provenance = {"block h_" + std::to_string(genus) + " (" + std::to_string(hg.size()) + " letters)",
                    "conjugate second copy by D2", "fiber_sum"};
  return rec;
}

Rational combined_slope(const FibrationInvariants& low, const FibrationInvariants& high, const Integer& k,
                        const Integer& l) {
  const Integer chi = k * low.chi_f() + l * high.chi_f();
  if (chi == 0) throw RangeError("combined slope undefined: chi_f = 0");
  Rational q(k * low.ksq() + l * high.ksq(), chi);
  q.canonicalize();
  return q;
}

Approximation approximate_slope(const Rational& r, const Rational& eps, const FibrationInvariants& low,
                                const FibrationInvariants& high, const Integer& max_copies) {
  if (eps < 0) throw RangeError("tolerance must be nonnegative");
  if (max_copies < 1) throw RangeError("max_copies must be at least 1");
  const Rational lo = low.slope(), hi = high.slope();
  if (!(lo < r && r < hi))
    throw RangeError("r = " + r.get_str() + " is not inside the open interval (" + lo.get_str() + ", " +
                     hi.get_str() + ")");

  // lambda_{k,l} - r = (l alpha - k beta) / (k chi_L + l chi_U); for fixed
  // s = k + l the error is minimized next to k* = s alpha / (alpha + beta).
  const Rational alpha = high.ksq() - r * high.chi_f();
  const Rational beta = r * low.chi_f() - low.ksq();
  const Rational ratio = alpha / (alpha + beta);
  for (Integer s = 1; s <= max_copies; ++s) {
    const Rational kstar = s * ratio;
    Integer kf;
    mpz_fdiv_q(kf.get_mpz_t(), kstar.get_num_mpz_t(), kstar.get_den_mpz_t());
    std::optional<Approximation> best;
    Rational best_err;
    for (Integer k : {kf, Integer(kf + 1)}) {
      if (k < 0 || k > s) continue;
      const Integer l = s - k;
      const Rational lambda = combined_slope(low, high, k, l);
      const Rational err = abs(lambda - r);
      if (err > eps) continue;
      if (!best || err < best_err) {
        best = Approximation{k, l, lambda};
        best_err = err;
      }
    }
    if (best) return *best;
  }
  throw SearchExhausted("no (k, l) with k + l <= " + max_copies.get_str() + " reaches |lambda - r| <= " +
                        eps.get_str());
}

}  // namespace slopeforge
