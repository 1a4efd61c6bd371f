#include "slopeforge/surface.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "slopeforge/error.hpp"
#include "slopeforge/symplectic.hpp"
#include "slopeforge/twist_word.hpp"

namespace slopeforge {

SurfaceContext::SurfaceContext(int genus) : genus_(genus) {
  if (genus < 1) throw RangeError("genus must be at least 1, got " + std::to_string(genus));
}

std::vector<std::string> SurfaceContext::basis() const {
  std::vector<std::string> out;
  for (int i = 1; i <= genus_; ++i) {
    out.push_back("a" + std::to_string(i));
    out.push_back("b" + std::to_string(i));
  }
  return out;
}

int SurfaceContext::form(int row, int col) const {
  if (row / 2 != col / 2) return 0;
  if (row % 2 == 0 && col % 2 == 1) return 1;
  if (row % 2 == 1 && col % 2 == 0) return -1;
  return 0;
}

HomologyVector SurfaceContext::a(int i) const {
  auto v = zero();
  v.at(2 * (i - 1)) = 1;
  return v;
}

HomologyVector SurfaceContext::b(int i) const {
  auto v = zero();
  v.at(2 * (i - 1) + 1) = 1;
  return v;
}

Integer symplectic_pairing(const HomologyVector& x, const HomologyVector& y) {
  if (x.size() != y.size() || x.size() % 2 != 0)
    throw GenusMismatch("pairing of vectors of lengths " + std::to_string(x.size()) + " and " +
                        std::to_string(y.size()));
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); i += 2) s += x[i] * y[i + 1] - x[i + 1] * y[i];
  return s;
}

HomologyVector apply_twist(const HomologyVector& v, int exponent, const HomologyVector& x) {
  Integer c = symplectic_pairing(x, v);
  if (c == 0) return x;
  c *= exponent;
  HomologyVector out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * v[i];
  return out;
}

bool is_zero(const HomologyVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_primitive(const HomologyVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g == 1;
}

bool equal_up_to_sign(const HomologyVector& v, const HomologyVector& w) {
  if (v.size() != w.size()) return false;
  if (v == w) return true;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != -w[i]) return false;
  return true;
}

HomologyVector operator+(const HomologyVector& x, const HomologyVector& y) {
  HomologyVector out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += y.at(i);
  return out;
}

HomologyVector operator-(const HomologyVector& x, const HomologyVector& y) {
  HomologyVector out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= y.at(i);
  return out;
}

HomologyVector operator-(const HomologyVector& x) {
  HomologyVector out = x;
  for (auto& e : out) e = -e;
  return out;
}

std::string format_vector(const HomologyVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].get_str();
  }
  return out;
}

Curve Curve::from_class(std::string name, HomologyVector hclass) {
  Curve c;
  c.name = std::move(name);
  c.genus = static_cast<int>(hclass.size() / 2);
  c.separating = is_zero(hclass);
  c.hclass = std::move(hclass);
  return c;
}

std::string Curve::root_name() const { return name.substr(0, name.find('@')); }

Integer intersection_number(const Curve& u, const Curve& v) {
  if (u.genus != v.genus)
    throw GenusMismatch("curves " + u.name + " (g=" + std::to_string(u.genus) + ") and " + v.name +
                        " (g=" + std::to_string(v.genus) + ")");
  return symplectic_pairing(u.hclass, v.hclass);
}

std::vector<Curve> standard_chain_classes(int genus) {
  SurfaceContext s(genus);
  std::vector<Curve> out;
  for (int j = 1; j <= 2 * genus + 1; ++j) {
    HomologyVector v = s.zero();
    if (j % 2 == 0) {
      v = s.a(j / 2);
    } else {
      int i = (j + 1) / 2;
      if (i - 1 >= 1) v = v + s.b(i - 1);
      if (i <= genus) v = v + s.b(i);
    }
    out.push_back(Curve::from_class("c" + std::to_string(j), std::move(v)));
  }
  return out;
}

namespace {

std::string kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::chain: return "chain";
    case FamilyKind::hyperelliptic: return "hyperelliptic";
    case FamilyKind::matsumoto: return "matsumoto";
    case FamilyKind::star: return "star";
  }
  return "?";
}

std::string c_name(int j) { return "c" + std::to_string(j); }

// Chain u_1..u_{2k} of the genus-k surface with <u_j, u_{j+1}> = 1.
std::vector<HomologyVector> oriented_chain(int k) {
  std::vector<HomologyVector> us;
  for (const auto& c : standard_chain_classes(k)) us.push_back(c.hclass);
  us.pop_back();  // the closing curve c_{2k+1}
  for (std::size_t j = 1; j < us.size(); ++j)
    if (symplectic_pairing(us[j - 1], us[j]) != 1) us[j] = -us[j];
  return us;
}

// Lift of a class on the genus-k quotient of the rotation: handle i goes to
// the pair of handles i and g+1-i.
HomologyVector lift_paired(int genus, const HomologyVector& reduced) {
  HomologyVector v(2 * genus, 0);
  int k = static_cast<int>(reduced.size() / 2);
  for (int i = 0; i < k; ++i)
    for (int handle : {i, genus - 1 - i}) {
      v[2 * handle] += reduced[2 * i];
      v[2 * handle + 1] += reduced[2 * i + 1];
    }
  return v;
}

// Classes of b_0, ..., b_g and of c (even g) or a, b (odd g). The curves are
// invariant under the pi-rotation of S_g swapping handle i with handle
// g+1-i; on the -1 eigenspace of that rotation B_0 ... B_g restricts to
// partial sums of a chain on the quotient surface.
std::vector<Curve> matsumoto_curves(int genus) {
  const int k = genus / 2;
  auto us = oriented_chain(k);
  HomologyVector x(2 * k, 0);
  for (std::size_t j = 1; j < us.size(); j += 2) x = x + us[j];
  std::vector<HomologyVector> partial;
  HomologyVector s(2 * k, 0);
  for (const auto& u : us) {
    s = s + u;
    partial.push_back(s);
  }

  std::vector<HomologyVector> bs;
  std::vector<Curve> out;
  if (genus % 2 == 0) {
    bs.push_back(lift_paired(genus, x));
    for (const auto& p : partial) bs.push_back(lift_paired(genus, p));
  } else {
    SurfaceContext surf(genus);
    const HomologyVector beta = surf.b(k + 1);
    const HomologyVector alpha = surf.a(k + 1);
    bs.push_back(beta);
    bs.push_back(lift_paired(genus, x) - beta);
    for (const auto& p : partial) bs.push_back(lift_paired(genus, p) + beta);
    for (std::size_t j = 0; j < bs.size(); ++j)
      out.push_back(Curve::from_class("b" + std::to_string(j), bs[j]));
    out.push_back(Curve::from_class("a", alpha));
    out.push_back(Curve::from_class("b", alpha + beta));
    return out;
  }
  for (std::size_t j = 0; j < bs.size(); ++j)
    out.push_back(Curve::from_class("b" + std::to_string(j), bs[j]));
  out.push_back(Curve::from_class("c", HomologyVector(2 * genus, 0)));
  return out;
}

// Curves of the star relator embedded in S_g: the chain c_1..c_{2h+1}, the
// second end c'_{2h+1} meeting c_{2h} once, and the three boundary curves of
// the genus-h subsurface they fill.
std::vector<Curve> star_curves(int genus, int h) {
  SurfaceContext s(genus);
  auto chain = standard_chain_classes(genus);
  std::vector<Curve> out(chain.begin(), chain.begin() + 2 * h + 1);
  out.push_back(Curve::from_class("cp" + std::to_string(2 * h + 1), s.b(h) - s.b(h + 2)));
  out.push_back(Curve::from_class("d" + std::to_string(h + 1), s.b(h + 1)));
  out.push_back(chain[2 * h + 2]);
  out.push_back(Curve::from_class("e" + std::to_string(h + 2), s.b(h + 2)));
  return out;
}

std::vector<Curve> builtin_family(const FamilyKey& key) {
  switch (key.kind) {
    case FamilyKind::chain: return standard_chain_classes(key.genus);
    case FamilyKind::hyperelliptic: {
      auto out = standard_chain_classes(key.genus);
      if (key.genus >= 2)
        out.push_back(Curve::from_class("d2", SurfaceContext(key.genus).b(2)));
      return out;
    }
    case FamilyKind::matsumoto: return matsumoto_curves(key.genus);
    case FamilyKind::star: return star_curves(key.genus, key.h);
  }
  return {};
}

std::vector<FamilyKey> families_at(int genus) {
  std::vector<FamilyKey> keys{{FamilyKind::chain, genus}, {FamilyKind::hyperelliptic, genus}};
  if (genus >= 2) keys.push_back({FamilyKind::matsumoto, genus});
  for (int h = 1; h <= genus - 2; ++h) keys.push_back({FamilyKind::star, genus, h});
  return keys;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string FamilyKey::label() const {
  std::string out = kind_name(kind) + "(" + std::to_string(genus);
  if (kind == FamilyKind::star) out += "," + std::to_string(h);
  return out + ")";
}

std::vector<std::string> family_curve_names(const FamilyKey& key) {
  const int g = key.genus;
  std::vector<std::string> names;
  auto chain_upto = [&](int n) {
    for (int j = 1; j <= n; ++j) names.push_back(c_name(j));
  };
  switch (key.kind) {
    case FamilyKind::chain: chain_upto(2 * g + 1); break;
    case FamilyKind::hyperelliptic:
      chain_upto(2 * g + 1);
      if (g >= 2) names.push_back("d2");
      break;
    case FamilyKind::matsumoto:
      for (int j = 0; j <= g; ++j) names.push_back("b" + std::to_string(j));
      if (g % 2 == 0) {
        names.push_back("c");
      } else {
        names.push_back("a");
        names.push_back("b");
      }
      break;
    case FamilyKind::star:
      chain_upto(2 * key.h + 1);
      names.push_back("cp" + std::to_string(2 * key.h + 1));
      names.push_back("d" + std::to_string(key.h + 1));
      names.push_back(c_name(2 * key.h + 3));
      names.push_back("e" + std::to_string(key.h + 2));
      break;
  }
  return names;
}

CurveCatalog CurveCatalog::builtin(int min_genus, int max_genus) {
  if (min_genus < 1 || max_genus < min_genus)
    throw RangeError("invalid catalog genus range [" + std::to_string(min_genus) + ", " +
                     std::to_string(max_genus) + "]");
  CurveCatalog cat;
  for (int g = min_genus; g <= max_genus; ++g) {
    for (const auto& key : families_at(g))
      for (auto& c : builtin_family(key)) cat.curves_[g][c.name] = std::move(c);
    cat.register_families(g);
  }
  return cat;
}

CurveCatalog CurveCatalog::parse(std::string_view text) {
  CurveCatalog cat;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (line.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw ParseError("catalog line " + std::to_string(lineno) + ": " + why);
    };
    std::istringstream fields(line);
    std::string keyword, name, gfield, cfield, extra;
    fields >> keyword >> name >> gfield >> cfield;
    if (keyword != "curve") fail("expected 'curve', got '" + keyword + "'");
    if (name.empty() || gfield.empty() || cfield.empty()) fail("expected 'curve <name> g=<int> class=<...>'");
    if (fields >> extra) fail("trailing text '" + extra + "'");
    if (name.find_first_of("^#") != std::string::npos) fail("invalid curve name '" + name + "'");
    if (gfield.rfind("g=", 0) != 0) fail("expected g=<int>");
    if (cfield.rfind("class=", 0) != 0) fail("expected class=<i1,...,i2g>");
    int genus = 0;
    try {
      std::size_t used = 0;
      genus = std::stoi(gfield.substr(2), &used);
      if (used != gfield.size() - 2) fail("malformed genus '" + gfield + "'");
    } catch (const std::logic_error&) {
      fail("malformed genus '" + gfield + "'");
    }
    if (genus < 1) fail("genus must be positive");
    HomologyVector v;
    std::istringstream entries(cfield.substr(6));
    std::string entry;
    while (std::getline(entries, entry, ',')) {
      Integer x;
      if (entry.empty() || x.set_str(entry, 10) != 0) fail("malformed class entry '" + entry + "'");
      v.push_back(x);
    }
    if (static_cast<int>(v.size()) != 2 * genus)
      fail("class of " + name + " has " + std::to_string(v.size()) + " entries, expected " +
           std::to_string(2 * genus));
    cat.add(Curve::from_class(name, std::move(v)));
  }
  return cat;
}

CurveCatalog CurveCatalog::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void CurveCatalog::add(Curve curve) {
  const int g = curve.genus;
  curves_[g][curve.name] = std::move(curve);
  register_families(g);
}

void CurveCatalog::register_families(int genus) {
  const auto& byname = curves_[genus];
  for (const auto& key : families_at(genus)) {
    if (std::find(families_.begin(), families_.end(), key) != families_.end()) continue;
    auto names = family_curve_names(key);
    bool complete = std::all_of(names.begin(), names.end(),
                                [&](const std::string& n) { return byname.count(n) > 0; });
    if (complete) families_.push_back(key);
  }
  std::sort(families_.begin(), families_.end());
}

const Curve* CurveCatalog::find(int genus, std::string_view name) const {
  auto g = curves_.find(genus);
  if (g == curves_.end()) return nullptr;
  auto c = g->second.find(name);
  return c == g->second.end() ? nullptr : &c->second;
}

const Curve& CurveCatalog::at(int genus, std::string_view name) const {
  const Curve* c = find(genus, name);
  if (!c)
    throw ParseError("unknown curve '" + std::string(name) + "' at genus " + std::to_string(genus));
  return *c;
}

std::vector<Curve> CurveCatalog::family(const FamilyKey& key) const {
  std::vector<Curve> out;
  for (const auto& n : family_curve_names(key)) out.push_back(at(key.genus, n));
  return out;
}

std::vector<int> CurveCatalog::genera() const {
  std::vector<int> out;
  for (const auto& [g, m] : curves_)
    if (!m.empty()) out.push_back(g);
  return out;
}

std::vector<Curve> CurveCatalog::curves(int genus) const {
  std::vector<Curve> out;
  auto g = curves_.find(genus);
  if (g != curves_.end())
    for (const auto& [n, c] : g->second) out.push_back(c);
  return out;
}

std::string CurveCatalog::serialize() const {
  std::string out;
  for (const auto& [g, byname] : curves_)
    for (const auto& [n, c] : byname)
      out += "curve " + n + " g=" + std::to_string(g) + " class=" + format_vector(c.hclass) + "\n";
  return out;
}

bool CatalogReport::passed() const {
  return curve_violations.empty() &&
         std::all_of(families.begin(), families.end(), [](const FamilyCheck& f) { return f.passed(); });
}

std::string CatalogReport::to_string() const {
  std::string out;
  for (const auto& v : curve_violations) out += "curve: " + v + "\n";
  for (const auto& f : families) {
    out += f.key.label() + ": " + (f.passed() ? "pass" : "FAIL") + "\n";
    for (const auto& v : f.violations) out += "  " + v + "\n";
  }
  return out;
}

CatalogReport validate_catalog(const CurveCatalog& catalog) {
  CatalogReport report;
  for (int g : catalog.genera()) {
    for (const auto& c : catalog.curves(g)) {
      const std::string tag = c.name + " (g=" + std::to_string(g) + ")";
      if (static_cast<int>(c.hclass.size()) != 2 * g)
        report.curve_violations.push_back(tag + ": class has wrong length");
      if (c.separating != is_zero(c.hclass))
        report.curve_violations.push_back(tag + ": separating flag disagrees with class " +
                                          format_vector(c.hclass));
      if (!c.separating && !is_zero(c.hclass) && !is_primitive(c.hclass))
        report.curve_violations.push_back(tag + ": class " + format_vector(c.hclass) +
                                          " is not primitive");
    }
  }

  for (const auto& key : catalog.families()) {
    FamilyCheck check{key, {}};
    auto curves = catalog.family(key);
    for (const auto& c : curves)
      if (c.separating != is_zero(c.hclass)) check.violations.push_back(c.name + ": separating flag");

    // Chain adjacency for the chain part of each family.
    std::size_t chain_len = 0;
    if (key.kind == FamilyKind::chain || key.kind == FamilyKind::hyperelliptic)
      chain_len = 2 * key.genus + 1;
    else if (key.kind == FamilyKind::star)
      chain_len = 2 * key.h + 1;
    for (std::size_t i = 0; i < chain_len; ++i)
      for (std::size_t j = i + 1; j < chain_len; ++j) {
        Integer p = intersection_number(curves[i], curves[j]);
        bool ok = (j == i + 1) ? (p == 1 || p == -1) : (p == 0);
        // On the closed surface c_1 and c_{2g+1} are homologous.
        if (!ok)
          check.violations.push_back("<" + curves[i].name + "," + curves[j].name +
                                     "> = " + p.get_str());
      }
    if (key.kind == FamilyKind::star) {
      // c'_{2h+1} meets only c_{2h}.
      const Curve& cp = curves[chain_len];
      for (std::size_t i = 0; i < chain_len; ++i) {
        Integer p = intersection_number(cp, curves[i]);
        bool ok = (i + 2 == chain_len) ? (p == 1 || p == -1) : (p == 0);
        if (!ok)
          check.violations.push_back("<" + cp.name + "," + curves[i].name + "> = " + p.get_str());
      }
    }

    RelatorKind rk = RelatorKind::custom;
    switch (key.kind) {
      case FamilyKind::chain: rk = RelatorKind::chain_odd; break;
      case FamilyKind::hyperelliptic: rk = RelatorKind::hyperelliptic; break;
      case FamilyKind::matsumoto: rk = RelatorKind::matsumoto; break;
      case FamilyKind::star: rk = RelatorKind::star; break;
    }
    try {
      Relator r = build_relator(rk, key.genus, catalog, key.h);
      (void)r;
    } catch (const NotTrivialError& e) {
      check.violations.push_back(e.what());
    }
    report.families.push_back(std::move(check));
  }
  return report;
}

}  // namespace slopeforge
