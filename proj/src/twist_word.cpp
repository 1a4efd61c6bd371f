#include "slopeforge/twist_word.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "slopeforge/error.hpp"
#include "slopeforge/symplectic.hpp"

namespace slopeforge {

bool same_letter(const TwistLetter& x, const TwistLetter& y) {
  if (x.exponent != y.exponent) return false;
  if (!equal_up_to_sign(x.curve.hclass, y.curve.hclass)) return false;
  if (x.curve.separating || y.curve.separating) return x.curve.root_name() == y.curve.root_name();
  return true;
}

namespace {

void check_letter(int genus, const TwistLetter& letter) {
  if (letter.curve.genus != genus)
    throw GenusMismatch("letter " + letter.curve.name + " lives at genus " +
                        std::to_string(letter.curve.genus) + ", word at genus " +
                        std::to_string(genus));
  if (letter.exponent != 1 && letter.exponent != -1)
    throw RangeError("letter exponent must be +1 or -1, got " + std::to_string(letter.exponent));
}

Curve transported(const Curve& c, const HomologyVector& image) {
  Curve out = c;
  out.name = c.root_name() + "@";
  out.hclass = image;
  return out;
}

std::string strip_comment(std::string_view line) {
  return std::string(line.substr(0, line.find('#')));
}

}  // namespace

TwistWord::TwistWord(int genus, std::vector<TwistLetter> letters)
    : genus_(genus), letters_(std::move(letters)) {
  for (const auto& l : letters_) check_letter(genus_, l);
}

std::size_t TwistWord::positive_count() const {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(), [](const TwistLetter& l) { return l.exponent > 0; }));
}

std::size_t TwistWord::negative_count() const { return size() - positive_count(); }

void TwistWord::push_back(TwistLetter letter) {
  check_letter(genus_, letter);
  letters_.push_back(std::move(letter));
}

void TwistWord::append(const TwistWord& other) {
  if (other.genus_ != genus_)
    throw GenusMismatch("cannot append a genus-" + std::to_string(other.genus_) +
                        " word to a genus-" + std::to_string(genus_) + " word");
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

TwistWord TwistWord::inverse() const {
  TwistWord out(genus_);
  out.letters_.reserve(size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back({it->curve, -it->exponent});
  return out;
}

TwistWord TwistWord::power(std::size_t k) const {
  TwistWord out(genus_);
  out.letters_.reserve(size() * k);
  for (std::size_t i = 0; i < k; ++i) out.append(*this);
  return out;
}

TwistWord TwistWord::subword(std::size_t begin, std::size_t end) const {
  if (begin > end || end > size())
    throw RangeError("subword [" + std::to_string(begin) + ", " + std::to_string(end) +
                     ") outside word of length " + std::to_string(size()));
  TwistWord out(genus_);
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(begin),
                      letters_.begin() + static_cast<std::ptrdiff_t>(end));
  return out;
}

TwistWord operator*(const TwistWord& x, const TwistWord& y) {
  TwistWord out = x;
  out.append(y);
  return out;
}

TwistWord word_of(int genus, const std::vector<Curve>& curves, int exponent) {
  TwistWord w(genus);
  for (const auto& c : curves) w.push_back({c, exponent});
  return w;
}

TwistWord parse_word(std::string_view text, const CurveCatalog& catalog, int genus) {
  TwistWord w(genus);
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream tokens(strip_comment(line));
    std::string tok;
    while (tokens >> tok) {
      auto caret = tok.find('^');
      std::string name = tok.substr(0, caret);
      int k = 1;
      if (caret != std::string::npos) {
        std::string_view e = std::string_view(tok).substr(caret + 1);
        auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), k);
        if (e.empty() || ec != std::errc() || ptr != e.data() + e.size())
          throw ParseError("malformed exponent in token '" + tok + "'");
        if (k == 0) throw ParseError("zero exponent in token '" + tok + "'");
      }
      if (name.empty()) throw ParseError("missing curve name in token '" + tok + "'");
      const Curve& c = catalog.at(genus, name);
      const int sign = k > 0 ? 1 : -1;
      for (int i = 0; i < std::abs(k); ++i) w.push_back({c, sign});
    }
  }
  return w;
}

std::string serialize_word(const TwistWord& word) {
  std::string out;
  const auto& ls = word.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i + 1;
    while (j < ls.size() && ls[j].curve.name == ls[i].curve.name &&
           ls[j].curve.hclass == ls[i].curve.hclass && ls[j].exponent == ls[i].exponent)
      ++j;
    long run = static_cast<long>(j - i) * ls[i].exponent;
    if (!out.empty()) out += ' ';
    out += ls[i].curve.name;
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

TwistWord parse_word_file(std::string_view text, const CurveCatalog& catalog, int genus) {
  std::istringstream in{std::string(text)};
  std::string line, decls, body;
  while (std::getline(in, line)) {
    std::istringstream first(strip_comment(line));
    std::string tok;
    first >> tok;
    if (tok == "curve")
      decls += line + "\n";
    else
      body += line + "\n";
  }
  if (decls.empty()) return parse_word(body, catalog, genus);
  CurveCatalog merged = catalog;
  const CurveCatalog extra = CurveCatalog::parse(decls);
  for (int g : extra.genera())
    for (auto& c : extra.curves(g)) {
      if (g != genus)
        throw GenusMismatch("declared curve " + c.name + " has genus " + std::to_string(g) +
                            ", expected " + std::to_string(genus));
      merged.add(std::move(c));
    }
  return parse_word(body, merged, genus);
}

TwistWord load_word_file(const std::filesystem::path& path, const CurveCatalog& catalog, int genus) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open word file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_word_file(buf.str(), catalog, genus);
}

std::string write_word_file(const TwistWord& word, const CurveCatalog& catalog) {
  const int g = word.genus();
  std::map<std::string, std::vector<HomologyVector>> seen;  // root -> distinct classes
  std::vector<std::string> names;
  std::string decls;
  for (const auto& l : word.letters()) {
    const Curve& c = l.curve;
    const Curve* known = catalog.find(g, c.name);
    if (known && known->hclass == c.hclass) {
      names.push_back(c.name);
      continue;
    }
    const std::string root = c.root_name();
    const Curve* base = catalog.find(g, root);
    if (base && equal_up_to_sign(base->hclass, c.hclass) && base->separating == c.separating) {
      names.push_back(root);
      continue;
    }
    auto& classes = seen[root];
    std::size_t idx = 0;
    while (idx < classes.size() && classes[idx] != c.hclass) ++idx;
    if (idx == classes.size()) {
      classes.push_back(c.hclass);
      std::string name = root + "@" + std::to_string(idx + 1);
      decls += "curve " + name + " g=" + std::to_string(g) + " class=" + format_vector(c.hclass) + "\n";
    }
    names.push_back(root + "@" + std::to_string(idx + 1));
  }
  TwistWord renamed(g);
  for (std::size_t i = 0; i < word.size(); ++i) {
    TwistLetter l = word[i];
    l.curve.name = names[i];
    renamed.push_back(std::move(l));
  }
  std::string body = serialize_word(renamed);
  return decls + body + (body.empty() ? "" : "\n");
}

TwistWord hurwitz_move(const TwistWord& word, std::size_t i) {
  if (i + 1 >= word.size())
    throw RangeError("Hurwitz move at index " + std::to_string(i) + " in a word of length " +
                     std::to_string(word.size()));
  std::vector<TwistLetter> ls = word.letters();
  const TwistLetter& left = ls[i];
  TwistLetter moved{transported(ls[i + 1].curve,
                                apply_twist(left.curve.hclass, left.exponent, ls[i + 1].curve.hclass)),
                    ls[i + 1].exponent};
  ls[i + 1] = left;
  ls[i] = std::move(moved);
  return TwistWord(word.genus(), std::move(ls));
}

TwistWord hurwitz_move_inverse(const TwistWord& word, std::size_t i) {
  if (i + 1 >= word.size())
    throw RangeError("Hurwitz move at index " + std::to_string(i) + " in a word of length " +
                     std::to_string(word.size()));
  std::vector<TwistLetter> ls = word.letters();
  const TwistLetter& right = ls[i + 1];
  TwistLetter moved{transported(ls[i].curve,
                                apply_twist(right.curve.hclass, -right.exponent, ls[i].curve.hclass)),
                    ls[i].exponent};
  ls[i] = right;
  ls[i + 1] = std::move(moved);
  return TwistWord(word.genus(), std::move(ls));
}

TwistWord global_conjugate(const TwistWord& word, const TwistWord& phi) {
  if (word.genus() != phi.genus())
    throw GenusMismatch("conjugating a genus-" + std::to_string(word.genus()) +
                        " word by a genus-" + std::to_string(phi.genus()) + " map");
  if (phi.empty()) return word;
  const SymplecticMatrix m = evaluate(phi);
  TwistWord out(word.genus());
  for (const auto& l : word.letters())
    out.push_back({transported(l.curve, m * l.curve.hclass), l.exponent});
  return out;
}

TwistWord fiber_sum(const TwistWord& w1, const TwistWord& w2, const TwistWord& phi) {
  if (w1.genus() != w2.genus())
    throw GenusMismatch("fiber sum of genus " + std::to_string(w1.genus()) + " and " +
                        std::to_string(w2.genus()));
  for (const TwistWord* w : {&w1, &w2}) {
    if (!w->all_positive()) throw RangeError("fiber sum summand has negative letters");
    if (!is_homologically_trivial(*w))
      throw NotTrivialError("fiber sum summand is not homologically trivial");
  }
  return w1 * global_conjugate(w2, phi);
}

std::string to_string(RelatorKind kind) {
  switch (kind) {
    case RelatorKind::chain_odd: return "chain_odd";
    case RelatorKind::chain_even: return "chain_even";
    case RelatorKind::hyperelliptic: return "hyperelliptic";
    case RelatorKind::matsumoto: return "matsumoto";
    case RelatorKind::star: return "star";
    case RelatorKind::custom: return "custom";
  }
  return "?";
}

Relator Relator::from_sides(const TwistWord& left, const TwistWord& right, RelatorKind kind) {
  return {left * right.inverse(), left.size(), kind};
}

TwistWord Relator::left_side() const { return word.subword(0, left_len); }

TwistWord Relator::right_side() const { return word.subword(left_len, word.size()).inverse(); }

Relator Relator::inverse() const { return from_sides(right_side(), left_side(), kind); }

TwistWord substitute(const TwistWord& word, std::size_t at, const Relator& relator) {
  if (word.genus() != relator.word.genus())
    throw GenusMismatch("relator genus " + std::to_string(relator.word.genus()) +
                        " differs from word genus " + std::to_string(word.genus()));
  if (!is_homologically_trivial(relator.word))
    throw NotTrivialError(to_string(relator.kind) + " relator is not homologically trivial");
  const TwistWord left = relator.left_side();
  if (at > word.size() || left.size() > word.size() - at)
    throw SubstitutionMismatch("left side of length " + std::to_string(left.size()) +
                               " does not fit at position " + std::to_string(at));
  for (std::size_t j = 0; j < left.size(); ++j)
    if (!same_letter(word[at + j], left[j]))
      throw SubstitutionMismatch("position " + std::to_string(at + j) + ": found " +
                                 word[at + j].curve.name + " [" +
                                 format_vector(word[at + j].curve.hclass) + "], expected " +
                                 left[j].curve.name + " [" + format_vector(left[j].curve.hclass) + "]");
  TwistWord out = word.subword(0, at);
  out.append(relator.right_side());
  out.append(word.subword(at + left.size(), word.size()));
  return out;
}

namespace {

TwistWord named(const CurveCatalog& cat, int g, const std::vector<std::string>& names) {
  TwistWord w(g);
  for (const auto& n : names) w.push_back({cat.at(g, n), 1});
  return w;
}

std::vector<std::string> chain_names(int from, int to) {
  std::vector<std::string> out;
  for (int j = from; j <= to; ++j) out.push_back("c" + std::to_string(j));
  return out;
}

}  // namespace

Relator build_relator(RelatorKind kind, int genus, const CurveCatalog& catalog, int h) {
  if (genus < 1) throw RangeError("genus must be at least 1");
  TwistWord left(genus), right(genus);
  switch (kind) {
    case RelatorKind::chain_odd:
      left = named(catalog, genus, chain_names(1, 2 * genus + 1)).power(2 * genus + 2);
      break;
    case RelatorKind::chain_even:
      left = named(catalog, genus, chain_names(1, 2 * genus)).power(4 * genus + 2);
      break;
    case RelatorKind::hyperelliptic: {
      auto names = chain_names(1, 2 * genus + 1);
      names.push_back(names.back());
      for (int j = 2 * genus; j >= 1; --j) names.push_back("c" + std::to_string(j));
      left = named(catalog, genus, names).power(2);
      break;
    }
    case RelatorKind::matsumoto: {
      if (genus < 2) throw RangeError("Matsumoto relator needs genus >= 2");
      std::vector<std::string> names;
      for (int j = 0; j <= genus; ++j) names.push_back("b" + std::to_string(j));
      if (genus % 2 == 0)
        names.push_back("c");
      else
        names.insert(names.end(), {"a", "a", "b", "b"});
      left = named(catalog, genus, names).power(2);
      break;
    }
    case RelatorKind::star: {
      if (h < 1 || h > genus - 2)
        throw RangeError("star relator needs 1 <= h <= g-2, got h=" + std::to_string(h) +
                         " at g=" + std::to_string(genus));
      std::vector<std::string> names{"cp" + std::to_string(2 * h + 1)};
      for (int j = 2 * h + 1; j >= 1; --j) names.push_back("c" + std::to_string(j));
      left = named(catalog, genus, names).power(2 * h + 1);
      std::vector<std::string> rnames{"d" + std::to_string(h + 1)};
      for (int i = 0; i < h; ++i) rnames.push_back("c" + std::to_string(2 * h + 3));
      rnames.push_back("e" + std::to_string(h + 2));
      right = named(catalog, genus, rnames);
      break;
    }
    case RelatorKind::custom:
      throw RangeError("custom relators are built with Relator::from_sides");
  }
  Relator r = Relator::from_sides(left, right, kind);
  if (!is_homologically_trivial(r.word))
    throw NotTrivialError(to_string(kind) + " relator at genus " + std::to_string(genus) +
                          " is not homologically trivial on the given catalog");
  return r;
}

}  // namespace slopeforge
