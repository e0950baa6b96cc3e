// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 only when
// all ten pass. Every check is exact; the time budgets below are part of the
// criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "sl2roots/census.hpp"
#include "sl2roots/fibpoly.hpp"
#include "sl2roots/roots.hpp"
#include "sl2roots/sl2.hpp"
#include "sl2roots/words.hpp"

using namespace sl2roots;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first few mismatches for the report line.
class Failures {
 public:
  void add(const std::string& what) {
    ++count_;
    if (count_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  Outcome outcome(const std::string& summary) const {
    if (count_ == 0) return {true, summary};
    return {false, std::to_string(count_) + " mismatches: " + first_};
  }

 private:
  std::size_t count_ = 0;
  std::string first_;
};

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

bool is_odd_prime(std::uint32_t q) { return q > 2 && is_prime(q); }

// 1. nth_roots equals the exhaustive preimage of the power map.
Outcome root_completeness() {
  Failures f;
  std::size_t checked = 0;
  for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
    const PrimeField F(q);
    const auto G = enumerate_sl2(F);
    for (std::uint64_t n = 1; n <= 12; ++n) {
      const auto pre = power_preimages(F, n);
      for (const Sl2Elem& g : G) {
        ++checked;
        if (nth_roots(to_bruhat(g), n).forms() != pre[element_index(g)])
          f.add("q=" + str(q) + " n=" + str(n) + " g=" + g.to_wire());
      }
    }
  }
  return f.outcome(str(checked) + " (g, n) pairs");
}

// 2. power_bruhat against repeated matrix multiplication.
Outcome power_formula() {
  Failures f;
  const auto G7 = enumerate_sl2(PrimeField(7));
  for (const Sl2Elem& g : G7) {
    const BruhatForm x = to_bruhat(g);
    Sl2Elem acc = g;
    for (std::uint64_t n = 1; n <= 24; ++n, acc = acc * g)
      if (to_matrix(power_bruhat(x, n)) != acc) f.add("q=7 " + g.to_wire() + "^" + str(n));
  }
  std::mt19937_64 rng(20240611);
  constexpr std::size_t kSamples = 100000;
  constexpr std::uint64_t kMaxExponent = 200;
  const std::uint32_t primes[] = {11, 13, 17};
  for (std::size_t i = 0; i < kSamples; ++i) {
    const std::uint32_t q = primes[i % 3];
    const PrimeField F(q);
    std::uniform_int_distribution<std::int64_t> coord(0, q - 1), unit(1, q - 1);
    std::uniform_int_distribution<std::uint64_t> expo(1, kMaxExponent);
    const FieldElem a = F(unit(rng)), b = F(coord(rng)), c = F(coord(rng));
    // [[a, b], [c, (1 + bc)/a]] covers every element with a != 0; mix in cells
    const Sl2Elem g = (i % 2 == 0) ? Sl2Elem(a, b, c, (F(1) + b * c) / a)
                                   : x12(b) * n_elem(a) * x12(c);
    const std::uint64_t n = expo(rng);
    Sl2Elem acc = g;
    for (std::uint64_t k = 1; k < n; ++k) acc = acc * g;
    if (to_matrix(power_bruhat(to_bruhat(g), n)) != acc)
      f.add("q=" + str(q) + " " + g.to_wire() + "^" + str(n));
  }
  return f.outcome(str(G7.size()) + "x24 exhaustive + " + str(kSamples) + " random");
}

// 3. Squares: printed (c, s) against enumeration.
Outcome square_census() {
  Failures f;
  for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
    const std::uint64_t Q = q;
    const bool minus_one_square = Q % 4 == 1;
    const std::uint64_t c = (Q + 5) / 2;
    const std::uint64_t s = minus_one_square ? Q * Q * (Q - 1) / 2 - Q + 1 : Q * Q * (Q - 1) / 2 + 1;
    const PowerCensus fm = power_census_formula(q, 2);
    const PowerCensus br = power_census_brute(q, 2);
    if (fm.c != c || fm.s != s || br.c != c || br.s != s)
      f.add("q=" + str(q) + " expected (" + str(c) + "," + str(s) + ") brute (" + str(br.c) +
            "," + str(br.s) + ")");
  }
  const PowerCensus q5 = power_census_brute(5, 2), q7 = power_census_brute(7, 2);
  if (q5.c != 5 || q5.s != 46) f.add("q=5 pinned (5,46)");
  if (q7.c != 6 || q7.s != 148) f.add("q=7 pinned (6,148)");
  return f.outcome("8 primes, (5,46) and (6,148) pinned");
}

// 4. Cubes, with the SL2(F_3) exception.
Outcome cube_census() {
  Failures f;
  for (std::uint32_t q : {5u, 7u, 11u, 13u, 17u, 19u}) {
    const std::uint64_t Q = q;
    const std::uint64_t c = (Q - 1) % 3 == 0 ? (2 * Q + 13) / 3 : (2 * Q + 11) / 3;
    const std::uint64_t s = 2 * Q * (Q * Q - 1) / 3;
    const PowerCensus fm = power_census_formula(q, 3);
    const PowerCensus br = power_census_brute(q, 3);
    if (fm.c != c || fm.s != s || br.c != c || br.s != s)
      f.add("q=" + str(q) + " expected (" + str(c) + "," + str(s) + ") brute (" + str(br.c) +
            "," + str(br.s) + ")");
  }
  const PrimeField F3(3);
  std::vector<Sl2Elem> printed;
  for (const char* w : {"1,0,0,1", "-1,0,0,-1", "0,1,-1,0", "1,1,1,-1", "1,-1,-1,-1",
                        "0,-1,1,0", "-1,1,1,1", "-1,-1,-1,1"})
    printed.push_back(parse_wire(F3, w));
  std::sort(printed.begin(), printed.end());
  if (power_census_brute(3, 3).s != 8) f.add("q=3 s != 8");
  if (power_set(3, 3) != printed) f.add("q=3 cube set differs from the 8 listed matrices");
  return f.outcome("6 primes + SL2(F_3) cube set");
}

// 5. Fourth powers: mod-8 class table and three-case element count.
Outcome fourth_census() {
  Failures f;
  for (std::uint32_t q : {7u, 11u, 13u, 17u, 23u}) {
    const std::uint64_t Q = q;
    std::uint64_t c = 0, s = 0;
    switch (Q % 8) {
      case 1: c = (3 * Q + 21) / 8; s = (3 * Q * Q * Q - 4 * Q * Q - 7 * Q + 8) / 8; break;
      case 3: c = (3 * Q + 15) / 8; s = 3 * (Q * Q * Q - Q) / 8; break;
      case 5: c = (3 * Q + 17) / 8; s = 3 * (Q * Q * Q - Q) / 8; break;
      default: c = (3 * Q + 11) / 8; s = (3 * Q * Q * Q - 4 * Q * Q + Q + 8) / 8; break;
    }
    const PowerCensus fm = power_census_formula(q, 4);
    const PowerCensus br = power_census_brute(q, 4);
    if (fm.c != c || fm.s != s) f.add("q=" + str(q) + " formula drifted from table");
    if (br.c != c || br.s != s)
      f.add("q=" + str(q) + " (q mod 8 = " + str(Q % 8) + ") table (" + str(c) + "," + str(s) +
            ") brute (" + str(br.c) + "," + str(br.s) + ")");
  }
  return f.outcome("q = 7, 11, 13, 17, 23");
}

// 6. Prime n: all four rows of the table.
Outcome prime_table() {
  Failures f;
  const std::pair<std::uint64_t, std::uint32_t> cases[] = {{5, 7},  {5, 5},  {5, 11}, {5, 19},
                                                          {7, 13}, {7, 29}, {11, 23}};
  std::set<int> rows;
  for (const auto& [n, q] : cases) {
    const std::uint64_t Q = q, order = Q * Q * Q - Q;
    std::uint64_t c = 0, s = 0;
    if (Q % n == 0) {
      rows.insert(1);
      c = Q;
      s = (Q - 2) * (Q * Q - 1);
    } else if ((Q - 1) % n == 0) {
      rows.insert(2);
      c = (n + 1) * (Q - 1) / (2 * n) + 5;
      s = (n + 1) * order / (2 * n);
    } else if ((Q + 1) % n == 0) {
      rows.insert(3);
      c = ((n + 1) * (Q - 3) + 4) / (2 * n) + 5;
      s = (n + 1) * order / (2 * n);
    } else {
      rows.insert(0);
      c = Q + 4;
      s = order;
    }
    const PowerCensus fm = power_census_formula(q, n);
    const PowerCensus br = power_census_brute(q, n);
    if (fm.c != c || fm.s != s || br.c != c || br.s != s)
      f.add("(n,q)=(" + str(n) + "," + str(q) + ") table (" + str(c) + "," + str(s) +
            ") brute (" + str(br.c) + "," + str(br.s) + ")");
  }
  if (rows.size() != 4) f.add("not all four rows exercised");
  return f.outcome("7 (n, q) pairs, 4 rows");
}

// 7. Word-map surjectivity claims for q <= 13.
Outcome surjectivity() {
  Failures f;
  const auto claims = verify_surjectivity_suite(13, 7);
  for (const SuiteClaim& c : claims)
    if (!c.pass()) f.add(c.name + " q=" + str(c.q));
  // the (4,4) image is G minus exactly {-1} when q = 3, 5 mod 8
  for (std::uint32_t q : {3u, 5u, 11u, 13u}) {
    const ImageReport r = word_image(q, WordSpec({4, 4}));
    if (r.missing.size() != 1 || !std::holds_alternative<Central>(r.missing[0].type) ||
        std::get<Central>(r.missing[0].type).sign != -1)
      f.add("q=" + str(q) + " X1^4 X2^4 image is not G minus {-1}");
  }
  return f.outcome(str(claims.size()) + " claims");
}

// 8. Fibonacci polynomial identities.
Outcome fibonacci_identities() {
  Failures f;
  for (int n = 1; n <= 12; ++n)
    for (int m = 1; m <= 30; ++m)
      if (divide_exact(u_poly(m), u_poly(n)).has_value() != (m % n == 0))
        f.add("u_" + str(n) + " | u_" + str(m));
  const BiPoly Y = BiPoly::Y();
  for (int m = 0; m <= 12; ++m)
    for (int n = 1; n <= 12; ++n)
      if (u_poly(m + n) != u_poly(m + 1) * u_poly(n) + Y * u_poly(m) * u_poly(n - 1))
        f.add("addition m=" + str(m) + " n=" + str(n));
  for (int r = -1; r <= 20; ++r)
    if (f_poly(r) != u_poly(r + 1).substitute_y_neg_square()) f.add("substitution r=" + str(r));
  for (int r = 0; r <= 20; ++r)
    if (!f_poly(r).is_homogeneous(r)) f.add("homogeneity r=" + str(r));
  // Binet closed form over F_p and F_p(δ)
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const PrimeField F(p);
    const QuadExtField E(F);
    const FieldElem two = F(2);
    for (FieldElem x : F.elements())
      for (FieldElem y : F.elements()) {
        const FieldElem disc = x * x + F(4) * y;
        for (int n = 0; n <= 20; ++n) {
          FieldElem expected;
          if (disc.is_zero()) {
            expected = n == 0 ? F(0) : F(n) * (x / two).pow(n - 1);
          } else if (auto r = sqrt_in_field(disc)) {
            const FieldElem a = (x + *r) / two, b = (x - *r) / two;
            expected = (a.pow(n) - b.pow(n)) / (a - b);
          } else {
            const FieldElem k = *sqrt_in_field(disc / E.eps());
            expected = two * ExtElem(x / two, k / two, E.eps()).pow(n).y() / k;
          }
          if (u_poly(n).evaluate(x, y) != expected)
            f.add("closed form p=" + str(p) + " n=" + str(n));
        }
      }
  }
  return f.outcome("divisibility, addition, substitution, closed form, homogeneity");
}

// 9. Borel census formula against enumeration of B.
Outcome borel_census() {
  Failures f;
  std::size_t checked = 0;
  for (std::uint32_t q = 3; q <= 13; q += 2) {
    if (!is_odd_prime(q)) continue;
    for (std::uint64_t n = 1; n <= 12; ++n) {
      ++checked;
      const BorelCensus bc = borel_power_census(q, n);
      const std::uint64_t brute = borel_power_count_brute(q, n);
      if (bc.total < 0 || static_cast<std::uint64_t>(bc.total) != brute)
        f.add("q=" + str(q) + " n=" + str(n) + " formula " + str(bc.total) + " brute " +
              str(brute));
    }
  }
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const BorelCensus bc = borel_power_census(q, q);
    if (bc.M_n != 1) f.add("M_n at n=q=" + str(q));
  }
  return f.outcome(str(checked) + " (q, n) pairs");
}

// 10. Asymptotic ratios over the prime sweep q <= 97, from enumeration.
Outcome asymptotics() {
  constexpr std::uint32_t kSweepMax = 97;
  Failures f;
  for (std::uint64_t n : {3u, 5u}) {
    const Rational limit = asymptotic_ratio(n);
    std::optional<Rational> prev;
    std::size_t points = 0;
    for (std::uint32_t q = 3; q <= kSweepMax; q += 2) {
      if (!is_odd_prime(q) || (std::uint64_t{q} * q - 1) % n != 0) continue;
      const PowerCensus br = power_census_brute(q, n, kSweepMax);
      if (br.s != power_census_formula(q, n).s) f.add("n=" + str(n) + " q=" + str(q) + " s");
      Rational dev = br.ratio_s - limit;
      if (dev < 0) dev = -dev;
      // non-increasing; the deviation may be flat
      if (prev && dev > *prev)
        f.add("n=" + str(n) + " q=" + str(q) + " deviation grew to " + str(dev));
      prev = dev;
      ++points;
    }
    if (points < 10) f.add("n=" + str(n) + " sweep too short");
  }
  for (std::uint32_t q = 3; q <= kSweepMax; q += 2) {
    if (!is_odd_prime(q)) continue;
    const PowerCensus br = power_census_brute(q, 2, kSweepMax);
    Rational dev = br.ratio_s - Rational(1, 2);
    if (dev < 0) dev = -dev;
    if (dev > Rational(2, q)) f.add("n=2 q=" + str(q) + " deviation " + str(dev));
  }
  return f.outcome("odd primes q <= 97 by enumeration");
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "root-solver completeness", 120, root_completeness},
      {2, "power formula oracle", 10, power_formula},
      {3, "square census", 30, square_census},
      {4, "cube census", 30, cube_census},
      {5, "fourth-power census", 30, fourth_census},
      {6, "prime-n census table", 120, prime_table},
      {7, "word-map surjectivity", 180, surjectivity},
      {8, "Fibonacci identities", 5, fibonacci_identities},
      {9, "Borel census", 10, borel_census},
      {10, "asymptotic ratios", 60, asymptotics},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.ok = false;
      o.detail += " (over time budget)";
    }
    if (!o.ok) ++failed;
    char timing[48];
    std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", secs, c.budget_seconds);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << " ("
              << timing << "): " << o.detail << std::endl;
  }
  std::cout << (10 - failed) << "/10 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
