#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "sl2roots/census.hpp"
#include "sl2roots/fibpoly.hpp"
#include "sl2roots/roots.hpp"
#include "sl2roots/sl2.hpp"
#include "sl2roots/words.hpp"

namespace sl2roots::cli {

namespace {

using json = nlohmann::ordered_json;

// The root-vs-oracle part of `verify` scans every (g, n); keep it at desk size.
constexpr std::uint32_t kVerifyRootsCap = 13;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

std::string ratio_text(const Rational& r) {
  std::ostringstream os;
  os << r.numerator() << '/' << r.denominator();
  return os.str();
}

json ratio_json(const Rational& r, bool as_float) {
  if (as_float) return boost::rational_cast<double>(r);
  return ratio_text(r);
}

std::string ratio_csv(const Rational& r, bool as_float) {
  if (!as_float) return ratio_text(r);
  std::ostringstream os;
  os << std::setprecision(10) << boost::rational_cast<double>(r);
  return os.str();
}

json class_json(const ClassEntry& e) {
  return {{"type", to_string(e.type)},
          {"representative", e.representative.to_wire()},
          {"size", e.size}};
}

json census_json(const PowerCensus& pc, bool as_float) {
  return {{"q", pc.q},
          {"n", pc.n},
          {"mode", to_string(pc.mode)},
          {"c", pc.c},
          {"s", pc.s},
          {"per_type",
           {{"central", pc.per_type.central},
            {"split", pc.per_type.split},
            {"nonsemisimple", pc.per_type.nonsemisimple},
            {"anisotropic", pc.per_type.anisotropic}}},
          {"ratio_c", ratio_json(pc.ratio_c, as_float)},
          {"ratio_s", ratio_json(pc.ratio_s, as_float)}};
}

constexpr const char* kCensusCsvHeader =
    "q,n,mode,c,s,central,split,nonsemisimple,anisotropic,ratio_c,ratio_s";

std::string census_csv(const PowerCensus& pc, bool as_float) {
  std::ostringstream os;
  os << pc.q << ',' << pc.n << ',' << to_string(pc.mode) << ',' << pc.c << ','
     << pc.s << ',' << pc.per_type.central << ',' << pc.per_type.split << ','
     << pc.per_type.nonsemisimple << ',' << pc.per_type.anisotropic << ','
     << ratio_csv(pc.ratio_c, as_float) << ',' << ratio_csv(pc.ratio_s, as_float);
  return os.str();
}

std::pair<std::uint32_t, std::uint32_t> parse_sweep(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("--sweep expects qmin:qmax");
  try {
    const unsigned long lo = std::stoul(text.substr(0, colon));
    const unsigned long hi = std::stoul(text.substr(colon + 1));
    if (lo > hi) throw std::invalid_argument("--sweep range is empty");
    if (hi > kFormulaCap)
      throw CapExceeded("--sweep capped at q <= " + std::to_string(kFormulaCap));
    return {static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi)};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("--sweep expects qmin:qmax, got '" + text + "'");
  }
}

std::vector<std::uint64_t> parse_word(const std::string& text) {
  std::vector<std::uint64_t> exps;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("--word expects r1,r2,...; got '" + text + "'");
    exps.push_back(std::stoull(tok));
  }
  return exps;
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

struct VerifyRow {
  std::string suite;
  std::uint32_t q;
  std::string n;
  std::string detail;
  bool ok;
};

int run_verify(std::uint32_t max_q, std::uint64_t max_n, std::ostream& out) {
  if (max_q > kBruteCap)
    throw CapExceeded("verify is capped at --max-q " + std::to_string(kBruteCap));
  if (max_n == 0) throw std::invalid_argument("--max-n must be positive");
  std::vector<VerifyRow> rows;

  for (std::uint32_t q = 3; q <= std::min(max_q, kVerifyRootsCap); q += 2) {
    if (!is_prime(q)) continue;
    const PrimeField F(q);
    const auto group = enumerate_sl2(F);
    for (std::uint64_t n = 1; n <= max_n; ++n) {
      const auto pre = power_preimages(F, n);
      std::uint64_t bad = 0;
      for (const Sl2Elem& g : group)
        if (nth_roots(to_bruhat(g), n).forms() != pre[element_index(g)]) ++bad;
      rows.push_back({"roots", q, std::to_string(n),
                      "nth_roots = oracle preimages (" + std::to_string(bad) +
                          " mismatches)",
                      bad == 0});
    }
  }

  for (std::uint32_t q = 3; q <= max_q; q += 2) {
    if (!is_prime(q)) continue;
    for (std::uint64_t n = 2; n <= max_n; ++n) {
      if (!formula_supported(n)) continue;
      const PowerCensus f = power_census_formula(q, n);
      const PowerCensus b = power_census_brute(q, n);
      std::ostringstream d;
      d << "formula (c,s)=(" << f.c << ',' << f.s << ") brute (" << b.c << ','
        << b.s << ')';
      rows.push_back({"census", q, std::to_string(n), d.str(),
                      f.c == b.c && f.s == b.s});
    }
  }

  for (std::uint32_t q = 3; q <= max_q; q += 2) {
    if (!is_prime(q)) continue;
    for (std::uint64_t n = 1; n <= max_n; ++n) {
      const BorelCensus bc = borel_power_census(q, n);
      const std::uint64_t brute = borel_power_count_brute(q, n);
      std::ostringstream d;
      d << "formula " << bc.total << " brute " << brute;
      rows.push_back({"borel", q, std::to_string(n), d.str(),
                      bc.total >= 0 && static_cast<std::uint64_t>(bc.total) == brute});
    }
  }

  for (const SuiteClaim& c : verify_surjectivity_suite(max_q)) {
    rows.push_back({"words", c.q, "-",
                    c.name + (c.expected ? "" : " (expected false)"), c.pass()});
  }

  std::size_t failed = 0;
  for (const VerifyRow& r : rows) {
    out << std::left << std::setw(7) << r.suite << " q=" << std::setw(3) << r.q
        << " n=" << std::setw(3) << r.n << ' ' << verdict(r.ok) << "  "
        << r.detail << '\n';
    if (!r.ok) ++failed;
  }
  out << rows.size() - failed << '/' << rows.size() << " checks passed";
  if (max_q > kVerifyRootsCap)
    out << " (root suite limited to q <= " << kVerifyRootsCap << ')';
  out << '\n';
  return failed == 0 ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Roots, power counts and word maps in SL2(F_q)", "sl2root"};
  app.require_subcommand(1);

  std::string format = "json";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  int fib_r = 0;
  bool fib_homogeneous = false;
  auto* fib = app.add_subcommand("fib", "Print u_R, or f_R with --homogeneous");
  fib->add_option("-n", fib_r, "Index R")->required();
  fib->add_flag("--homogeneous", fib_homogeneous, "Print f_R instead of u_R");

  std::uint32_t q = 0;
  auto* classes = app.add_subcommand("classes", "Conjugacy class table");
  classes->add_option("--q", q, "Odd prime")->required();
  add_format(classes);

  std::uint64_t n = 1;
  std::string elem;
  bool root_one = false;
  auto* root = app.add_subcommand("root", "All n-th roots of an element");
  root->add_option("--q", q, "Odd prime")->required();
  root->add_option("-n", n, "Root degree")->required()->check(CLI::PositiveNumber);
  root->add_option("--elem", elem, "Element a,b,c,d")->required();
  auto* all_flag = root->add_flag("--all", "Print every root (default)");
  root->add_flag("--one", root_one, "Print only the first root")->excludes(all_flag);
  add_format(root);

  auto* power = app.add_subcommand("power", "x^n via the power formulas");
  power->add_option("--q", q, "Odd prime")->required();
  power->add_option("-n", n, "Exponent")->required()->check(CLI::PositiveNumber);
  power->add_option("--elem", elem, "Element a,b,c,d")->required();

  bool brute = false, as_float = false;
  std::string sweep;
  std::uint32_t cap = kBruteCap;
  auto* census = app.add_subcommand("census", "Count n-th powers");
  census->add_option("--q", q, "Odd prime");
  census->add_option("-n", n, "Power")->required()->check(CLI::PositiveNumber);
  census->add_flag("--brute", brute, "Enumerate the group instead of the closed forms");
  census->add_option("--sweep", sweep, "One row per odd prime in qmin:qmax");
  census->add_flag("--float", as_float, "Render ratios as decimals");
  census->add_option("--cap", cap, "Largest q for enumeration");
  add_format(census);

  std::string word_text;
  bool show_missing = false, no_shortcut = false;
  auto* word = app.add_subcommand("word", "Image of X1^r1 ... Xl^rl");
  word->add_option("--q", q, "Odd prime")->required();
  word->add_option("--word", word_text, "Exponents r1,r2,...")->required();
  word->add_flag("--missing", show_missing, "Describe missing classes in full");
  word->add_flag("--no-shortcut", no_shortcut, "Always form the full set products");
  word->add_option("--cap", cap, "Largest q for enumeration");

  std::uint32_t max_q = 13;
  std::uint64_t max_n = 12;
  auto* verify = app.add_subcommand("verify", "Formula-versus-oracle checks");
  verify->add_option("--max-q", max_q, "Largest q");
  verify->add_option("--max-n", max_n, "Largest n");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    app.exit(e, out, err);
    return kBadArgs;
  }

  try {
    if (fib->parsed()) {
      out << (fib_homogeneous ? f_poly(fib_r) : u_poly(fib_r)).to_string() << '\n';
      return kOk;
    }

    if (classes->parsed()) {
      const auto table = class_table(PrimeField(q));
      if (format == "csv") {
        out << "type,representative,size\n";
        for (const ClassEntry& e : table)
          out << csv_field(to_string(e.type)) << ',' << csv_field(e.representative.to_wire())
              << ',' << e.size << '\n';
      } else {
        json arr = json::array();
        for (const ClassEntry& e : table) arr.push_back(class_json(e));
        out << arr.dump(2) << '\n';
      }
      return kOk;
    }

    if (root->parsed()) {
      const PrimeField F(q);
      const Sl2Elem g = parse_wire(F, elem);
      const RootSolution sol = nth_roots(to_bruhat(g), n);
      std::vector<Root> shown = sol.roots;
      if (root_one && shown.size() > 1) shown.resize(1);
      if (format == "csv") {
        out << "root,bruhat,method\n";
        for (const Root& r : shown)
          out << csv_field(to_matrix(r.x).to_wire()) << ',' << csv_field(to_string(r.x))
              << ',' << to_string(r.method) << '\n';
      } else {
        json roots = json::array();
        for (const Root& r : shown)
          roots.push_back({{"root", to_matrix(r.x).to_wire()},
                           {"bruhat", to_string(r.x)},
                           {"method", to_string(r.method)}});
        json doc = {{"q", q},
                    {"n", n},
                    {"elem", g.to_wire()},
                    {"bruhat", to_string(to_bruhat(g))},
                    {"count", sol.size()},
                    {"roots", roots}};
        out << doc.dump(2) << '\n';
      }
      return sol.empty() ? kNoRoots : kOk;
    }

    if (power->parsed()) {
      const PrimeField F(q);
      const Sl2Elem g = parse_wire(F, elem);
      const BruhatForm x = to_bruhat(g);
      const BruhatForm xn = power_bruhat(x, n);
      json r = nullptr;
      if (!is_borel(x))
        if (auto k = smallest_borel_power(x)) r = *k;
      json doc = {{"q", q},
                  {"n", n},
                  {"elem", g.to_wire()},
                  {"bruhat", to_string(x)},
                  {"power", {{"elem", to_matrix(xn).to_wire()}, {"bruhat", to_string(xn)}}},
                  {"smallest_borel_power", r}};
      out << doc.dump(2) << '\n';
      return kOk;
    }

    if (census->parsed()) {
      auto compute = [&](std::uint32_t qq) {
        return brute ? power_census_brute(qq, n, cap) : power_census_formula(qq, n);
      };
      if (!sweep.empty()) {
        const auto [lo, hi] = parse_sweep(sweep);
        std::vector<PowerCensus> reports;
        for (std::uint32_t qq = std::max<std::uint32_t>(lo, 3); qq <= hi; ++qq)
          if (qq % 2 == 1 && is_prime(qq)) reports.push_back(compute(qq));
        if (format == "csv") {
          out << kCensusCsvHeader << '\n';
          for (const auto& pc : reports) out << census_csv(pc, as_float) << '\n';
        } else {
          json arr = json::array();
          for (const auto& pc : reports) arr.push_back(census_json(pc, as_float));
          out << arr.dump(2) << '\n';
        }
        return kOk;
      }
      if (q == 0) throw std::invalid_argument("census needs --q or --sweep");
      const PowerCensus pc = compute(q);
      if (format == "csv") {
        out << kCensusCsvHeader << '\n' << census_csv(pc, as_float) << '\n';
      } else {
        out << census_json(pc, as_float).dump(2) << '\n';
      }
      return kOk;
    }

    if (word->parsed()) {
      const WordSpec w(parse_word(word_text));
      const ImageReport rep = word_image(q, w, {cap, !no_shortcut});
      json missing = json::array();
      for (const ClassEntry& e : rep.missing) {
        if (show_missing)
          missing.push_back(class_json(e));
        else
          missing.push_back(e.representative.to_wire());
      }
      json doc = {{"q", rep.q},
                  {"word", w.exponents},
                  {"image_size", rep.image_size},
                  {"group_size", rep.group_size},
                  {"surjective", rep.surjective},
                  {"missing", missing}};
      out << doc.dump(2) << '\n';
      return rep.surjective ? kOk : kNotSurjective;
    }

    if (verify->parsed()) return run_verify(max_q, max_n, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadArgs;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kBadArgs;
  }
  err << app.help();
  return kBadArgs;
}

}  // namespace sl2roots::cli
