#include "slopeforge/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <regex>

#include <CLI11.hpp>

#include "slopeforge/constructions.hpp"
#include "slopeforge/error.hpp"
#include "slopeforge/ledger.hpp"
#include "slopeforge/meyer.hpp"
#include "slopeforge/symplectic.hpp"

namespace slopeforge::cli {

Rational parse_rational(std::string_view text) {
  static const std::regex fraction(R"(\s*([+-]?\d+)\s*/\s*(\d+)\s*)");
  static const std::regex decimal(R"(\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, fraction)) {
    Integer den(m[2].str());
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational q(Integer(m[1].str()), den);
    q.canonicalize();
    return q;
  }
  if (!std::regex_match(s, m, decimal) || (m[2].length() == 0 && m[3].length() == 0))
    throw ParseError("not a number: '" + s + "'");
  const std::string whole = m[2].str(), frac = m[3].str();
  Integer num(whole.empty() && frac.empty() ? std::string("0") : whole + frac);
  long exponent = -static_cast<long>(frac.size());
  if (m[4].matched) {
    try {
      exponent += std::stol(m[4].str());
    } catch (const std::out_of_range&) {
      throw ParseError("exponent out of range in '" + s + "'");
    }
  }
  if (std::labs(exponent) > 100000) throw ParseError("exponent out of range in '" + s + "'");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational q = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
  q.canonicalize();
  return m[1].str() == "-" ? Rational(-q) : q;
}

namespace {

struct Config {
  int genus = 0;
  int h = 0;
  int m = 1;
  std::string r;
  std::string eps;
  std::string max_copies = "100000";
  std::string catalog_path;
  std::string word_path;
  std::string emit_word;
  std::string emit_csv;
  std::string format = "table";
  bool verify = false;
};

std::size_t word_budget() {
  const char* env = std::getenv("SLOPEFORGE_BUDGET");
  if (!env || !*env) return kDefaultWordBudget;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    throw ParseError(std::string("SLOPEFORGE_BUDGET is not a nonnegative integer: '") + env + "'");
  }
}

CurveCatalog load_catalog(const Config& cfg, int min_genus, int max_genus) {
  if (!cfg.catalog_path.empty()) return CurveCatalog::load(cfg.catalog_path);
  return CurveCatalog::builtin(min_genus, max_genus);
}

std::string slope_text(const Rational& q) { return q.get_str() + " (" + to_decimal(q) + ")"; }

void print_table(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write " + path);
  f << text;
}

void emit_csv(const std::string& path, const std::vector<LedgerRow>& rows) {
  std::string text = csv_header() + "\n";
  for (const auto& r : rows) text += csv_row(r) + "\n";
  write_file(path, text);
}

int cmd_invariants(const Config& cfg, std::ostream& out, std::ostream& err) {
  const CurveCatalog catalog = load_catalog(cfg, cfg.genus, cfg.genus);
  const TwistWord word = load_word_file(cfg.word_path, catalog, cfg.genus);
  if (word.empty()) throw ParseError("word file " + cfg.word_path + " contains no letters");
  if (!word.all_positive()) {
    err << "error: word has " << word.negative_count()
        << " negative letters; a Lefschetz fibration needs a positive factorization\n";
    return kNotTrivial;
  }
  const SignatureReport rep = signature_of_word(word);
  auto inv = FibrationInvariants::from_euler_sigma(cfg.genus, Integer(static_cast<long>(rep.euler)),
                                                   Integer(static_cast<long>(rep.sigma)));
  inv.letters = Integer(static_cast<unsigned long>(rep.length));
  if (cfg.format == "csv") {
    out << csv_header() << '\n' << csv_row(make_row(inv, std::nullopt, 1)) << '\n';
    return kOk;
  }
  print_table(out, {{"g", std::to_string(cfg.genus)},
                    {"n", std::to_string(rep.length)},
                    {"e", std::to_string(rep.euler)},
                    {"sigma", std::to_string(rep.sigma)},
                    {"c1^2", inv.c1sq().get_str()},
                    {"chi_h", inv.chi_h().get_str()},
                    {"K^2", inv.ksq().get_str()},
                    {"chi_f", inv.chi_f().get_str()},
                    {"lambda", slope_text(inv.slope())}});
  return kOk;
}

void report_record(const ConstructionRecord& rec, const Config& cfg, std::ostream& out) {
  const FibrationInvariants& inv = rec.ledger;
  std::vector<std::pair<std::string, std::string>> rows{{"construction", rec.label},
                                                        {"g", std::to_string(rec.genus)}};
  if (rec.h) rows.emplace_back("h", std::to_string(*rec.h));
  rows.emplace_back("stage", std::to_string(rec.stage));
  rows.emplace_back("n", inv.letters ? inv.letters->get_str() : "?");
  rows.emplace_back("word", rec.word ? std::to_string(rec.word->size()) + " letters" : "not materialized");
  rows.emplace_back("e", inv.euler.get_str());
  rows.emplace_back("sigma", inv.sigma.get_str());
  rows.emplace_back("K^2", inv.ksq().get_str());
  rows.emplace_back("chi_f", inv.chi_f().get_str());
  rows.emplace_back("lambda", slope_text(inv.slope()));
  if (cfg.verify && rec.word) {
    const SignatureReport rep = signature_of_word(*rec.word);
    const bool match = Integer(static_cast<long>(rep.euler)) == inv.euler &&
                       Integer(static_cast<long>(rep.sigma)) == inv.sigma;
    rows.emplace_back("engine", "e=" + std::to_string(rep.euler) + " sigma=" + std::to_string(rep.sigma) +
                                    (match ? " (matches ledger)" : " (MISMATCH)"));
  }
  print_table(out, rows);
}

int cmd_construct(const std::string& kind, const Config& cfg, std::ostream& out, std::ostream& err) {
  const std::size_t budget = word_budget();
  const CurveCatalog catalog = load_catalog(cfg, cfg.genus, cfg.genus);
  std::vector<ConstructionRecord> recs;
  if (kind == "high-slope") {
    if (high_slope_word_length(cfg.genus, cfg.h, 1) > Integer(static_cast<unsigned long>(budget)))
      recs = high_slope_sequence(catalog, cfg.genus, cfg.h, 1, budget);
    else
      recs.push_back(build_high_slope_word(catalog, cfg.genus, cfg.h));
  } else if (kind == "sequence") {
    if (cfg.m < 1) throw RangeError("--m must be at least 1");
    recs = high_slope_sequence(catalog, cfg.genus, cfg.h, cfg.m, budget);
  } else {
    recs.push_back(build_counterexample(catalog, cfg.genus));
  }

  std::vector<LedgerRow> rows;
  for (const auto& r : recs) rows.push_back(make_row(r.ledger, r.h, r.stage));
  if (cfg.format == "csv") {
    out << csv_header() << '\n';
    for (const auto& r : rows) out << csv_row(r) << '\n';
  } else {
    for (std::size_t i = 0; i < recs.size(); ++i) {
      if (i) out << '\n';
      report_record(recs[i], cfg, out);
    }
  }
  if (cfg.verify)
    for (const auto& r : recs)
      if (r.word) {
        const SignatureReport rep = signature_of_word(*r.word);
        if (Integer(static_cast<long>(rep.sigma)) != r.ledger.sigma ||
            Integer(static_cast<long>(rep.euler)) != r.ledger.euler) {
          err << "error: engine invariants disagree with the ledger at stage " << r.stage << '\n';
          return kFailure;
        }
      }
  for (const auto& r : recs)
    if (!r.word)
      err << "warning: stage " << r.stage << " word has " << high_slope_word_length(r.genus, *r.h, r.stage).get_str()
          << " letters, over the budget of " << budget << "; ledger only\n";

  if (!cfg.emit_csv.empty()) emit_csv(cfg.emit_csv, rows);
  if (!cfg.emit_word.empty()) {
    auto last = std::find_if(recs.rbegin(), recs.rend(), [](const ConstructionRecord& r) { return r.word.has_value(); });
    if (last == recs.rend())
      err << "warning: no stage was materialized; " << cfg.emit_word << " not written\n";
    else
      write_file(cfg.emit_word, "# " + last->label + " g=" + std::to_string(last->genus) +
                                    (last->h ? " h=" + std::to_string(*last->h) : "") + " stage=" +
                                    std::to_string(last->stage) + "\n" + write_word_file(*last->word, catalog));
  }
  return kOk;
}

int cmd_approx(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Rational r = parse_rational(cfg.r);
  const Rational eps = cfg.eps.empty() ? Rational(1, 1000000) : parse_rational(cfg.eps);
  const Integer max_copies(cfg.max_copies);
  if (!(Rational(2) < r && r < Rational(8))) {
    err << "error: r = " << cfg.r << " must lie in the open interval (2, 8)\n";
    return kOutOfRange;
  }
  if (eps < 0) {
    err << "error: --eps must be nonnegative\n";
    return kOutOfRange;
  }
  if (cfg.genus < 3) throw RangeError("approx needs g >= 3 for a high-slope block");
  const int h = cfg.h > 0 ? cfg.h : h_max(cfg.genus);
  const FibrationInvariants low = hyperelliptic_invariants(cfg.genus);
  const FibrationInvariants high = theorem_stage(cfg.genus, h);
  const Rational lo = low.slope(), hi = high.slope();
  if (!(lo < r && r < hi)) {
    err << "error: r = " << r.get_str() << " is not inside the achievable open interval (" << lo.get_str()
        << ", " << hi.get_str() << ") = (" << to_decimal(lo) << ", " << to_decimal(hi) << ")\n";
    return kApproxFailure;
  }
  Approximation a;
  try {
    a = approximate_slope(r, eps, low, high, max_copies);
  } catch (const SearchExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kApproxFailure;
  }
  const Rational gap = abs(a.lambda - r);
  if (cfg.format == "csv") {
    out << "g,h,k,l,lambda_num,lambda_den,lambda_decimal,error_decimal\n"
        << cfg.genus << ',' << h << ',' << a.k.get_str() << ',' << a.l.get_str() << ','
        << a.lambda.get_num().get_str() << ',' << a.lambda.get_den().get_str() << ',' << to_decimal(a.lambda)
        << ',' << to_decimal(gap) << '\n';
    return kOk;
  }
  print_table(out, {{"low", "hyperelliptic(g=" + std::to_string(cfg.genus) + ") K^2=" + low.ksq().get_str() +
                                " chi_f=" + low.chi_f().get_str() + " lambda=" + lo.get_str()},
                    {"high", "high-slope(g=" + std::to_string(cfg.genus) + ",h=" + std::to_string(h) +
                                 ") K^2=" + high.ksq().get_str() + " chi_f=" + high.chi_f().get_str() +
                                 " lambda=" + hi.get_str()},
                    {"k", a.k.get_str()},
                    {"l", a.l.get_str()},
                    {"lambda", slope_text(a.lambda)},
                    {"|lambda-r|", to_decimal(gap)}});
  return kOk;
}

int cmd_catalog(const std::string& action, const Config& cfg, std::ostream& out) {
  const int lo = cfg.genus > 0 ? cfg.genus : 1;
  const int hi = cfg.genus > 0 ? cfg.genus : 8;
  const CurveCatalog catalog = load_catalog(cfg, lo, hi);
  if (action == "show") {
    out << catalog.serialize();
    return kOk;
  }
  const CatalogReport rep = validate_catalog(catalog);
  out << rep.to_string();
  out << (rep.passed() ? "catalog: pass\n" : "catalog: FAIL\n");
  return rep.passed() ? kOk : kNotTrivial;
}

// "--g 4" and "--g=4" are accepted as spellings of --genus.
std::vector<std::string> normalize(std::vector<std::string> args) {
  for (auto& a : args) {
    if (a == "--g") a = "--genus";
    else if (a.rfind("--g=", 0) == 0) a = "--genus=" + a.substr(4);
  }
  return args;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Lefschetz fibration factorizations, invariants and slopes"};
  app.name("slopeforge");
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help and exit");

  auto add_genus = [&](CLI::App* c, bool required) {
    auto* o = c->add_option("-g,--genus", cfg.genus, "fiber genus")->check(CLI::PositiveNumber);
    if (required) o->required();
  };
  auto add_common = [&](CLI::App* c) {
    c->add_option("--catalog", cfg.catalog_path, "curve catalog file (default: built-in)");
    c->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"table", "csv"}));
  };

  auto* inv = app.add_subcommand("invariants", "invariants of the fibration with a given monodromy word");
  add_genus(inv, true);
  inv->add_option("--word", cfg.word_path, "word file")->required();
  add_common(inv);

  auto* con = app.add_subcommand("construct", "build a factorization and its ledger");
  con->require_subcommand(1);
  std::string kind;
  for (const char* name : {"high-slope", "sequence", "counterexample"}) {
    auto* sub = con->add_subcommand(name, std::string(name) + " construction");
    add_genus(sub, true);
    if (std::string(name) != "counterexample") sub->add_option("--h", cfg.h, "star relator size")->required();
    if (std::string(name) == "sequence") sub->add_option("--m", cfg.m, "number of stages")->required();
    sub->add_option("--emit-word", cfg.emit_word, "write the (last materialized) word here");
    sub->add_option("--emit-csv", cfg.emit_csv, "write ledger CSV rows here");
    sub->add_flag("--verify", cfg.verify, "recompute (e, sigma) from the word and compare");
    add_common(sub);
    sub->callback([&kind, name] { kind = name; });
  }

  auto* apx = app.add_subcommand("approx", "approximate a slope by fiber sums of two blocks");
  add_genus(apx, true);
  apx->add_option("--r", cfg.r, "target slope in (2, 8)")->required();
  apx->add_option("--eps", cfg.eps, "tolerance (default 1e-6)");
  apx->add_option("--h", cfg.h, "star relator size of the high block (default: h_max(g))");
  apx->add_option("--max-copies", cfg.max_copies, "search bound on k + l");
  add_common(apx);

  auto* cat = app.add_subcommand("catalog", "inspect or validate a curve catalog");
  cat->require_subcommand(1);
  std::string action;
  for (const char* name : {"validate", "show"}) {
    auto* sub = cat->add_subcommand(name, std::string(name) + " the catalog");
    add_genus(sub, false);
    sub->add_option("--catalog", cfg.catalog_path, "curve catalog file (default: built-in)");
    sub->callback([&action, name] { action = name; });
  }

  std::vector<std::string> args = normalize(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (inv->parsed()) return cmd_invariants(cfg, out, err);
    if (con->parsed()) return cmd_construct(kind, cfg, out, err);
    if (apx->parsed()) return cmd_approx(cfg, out, err);
    if (cat->parsed()) return cmd_catalog(action, cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const GenusMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const NotTrivialError& e) {
    err << "error: " << e.what() << '\n';
    return kNotTrivial;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kOutOfRange;
  } catch (const DivisibilityError& e) {
    err << "error: " << e.what() << '\n';
    return kOutOfRange;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace slopeforge::cli
