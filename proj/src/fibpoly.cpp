#include "sl2roots/fibpoly.hpp"

#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sl2roots {

BiPoly BiPoly::constant(const BigInt& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const BigInt& c, unsigned x_deg, unsigned y_deg) {
  BiPoly p;
  p.add_term({x_deg, y_deg}, c);
  return p;
}

void BiPoly::add_term(const Exponent& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt BiPoly::coeff(unsigned x_deg, unsigned y_deg) const {
  auto it = terms_.find({x_deg, y_deg});
  return it == terms_.end() ? BigInt(0) : it->second;
}

int BiPoly::x_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.first);
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, static_cast<int>(e.first + e.second));
  return d;
}

bool BiPoly::is_homogeneous(unsigned degree) const {
  for (const auto& [e, c] : terms_)
    if (e.first + e.second != degree) return false;
  return true;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_)
      r.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
  return r;
}

BiPoly BiPoly::operator-() const { return scaled(-1); }

BiPoly BiPoly::scaled(const BigInt& c) const {
  BiPoly r;
  if (c == 0) return r;
  for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
  return r;
}

BiPoly BiPoly::substitute_y_neg_square() const {
  BiPoly r;
  for (const auto& [e, c] : terms_)
    r.add_term({e.first, 2 * e.second}, e.second % 2 == 0 ? c : BigInt(-c));
  return r;
}

FieldElem BiPoly::evaluate(FieldElem x, FieldElem y) const {
  const std::uint32_t p = x.modulus();
  FieldElem acc(0, p);
  for (const auto& [e, c] : terms_) {
    BigInt m = c % p;
    if (m < 0) m += p;
    FieldElem coef(m.convert_to<std::int64_t>(), p);
    acc += coef * x.pow(e.first) * y.pow(e.second);
  }
  return acc;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending X degree, then descending Y degree.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    if (mag != 1 || (e.first == 0 && e.second == 0))
      factors.push_back(mag.str());
    if (e.first == 1) factors.emplace_back("X");
    if (e.first > 1) factors.push_back("X^" + std::to_string(e.first));
    if (e.second == 1) factors.emplace_back("Y");
    if (e.second > 1) factors.push_back("Y^" + std::to_string(e.second));
    for (std::size_t i = 0; i < factors.size(); ++i)
      os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

std::optional<BiPoly> divide_exact(const BiPoly& num, const BiPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const unsigned dx = static_cast<unsigned>(den.x_degree());
  // Leading coefficient in X, as a polynomial in Y.
  BiPoly lead;
  for (const auto& [e, c] : den.terms())
    if (e.first == dx) lead = lead + BiPoly::monomial(c, 0, e.second);
  if (lead.terms().size() != 1 || lead.terms().begin()->first.second != 0)
    throw std::invalid_argument("divisor must have a unit leading X coefficient");
  const BigInt lc = lead.terms().begin()->second;
  if (lc != 1 && lc != -1)
    throw std::invalid_argument("divisor must have a unit leading X coefficient");

  BiPoly quotient;
  BiPoly rem = num;
  while (!rem.is_zero() && rem.x_degree() >= static_cast<int>(dx)) {
    const unsigned rx = static_cast<unsigned>(rem.x_degree());
    BiPoly step;
    for (const auto& [e, c] : rem.terms())
      if (e.first == rx) step = step + BiPoly::monomial(c * lc, rx - dx, e.second);
    quotient = quotient + step;
    rem = rem - step * den;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quotient;
}

namespace {

// Append-only caches. std::deque keeps references stable across growth.
struct PolyCache {
  std::mutex mu;
  std::deque<BiPoly> polys;
};

PolyCache& u_cache() {
  static PolyCache cache;
  return cache;
}

PolyCache& f_cache() {
  static PolyCache cache;
  return cache;
}

}  // namespace

const BiPoly& u_poly(int r) {
  if (r < 0) throw std::invalid_argument("u_r requires r >= 0");
  PolyCache& cache = u_cache();
  std::lock_guard lock(cache.mu);
  if (cache.polys.empty()) {
    cache.polys.push_back(BiPoly());
    cache.polys.push_back(BiPoly::constant(1));
  }
  while (cache.polys.size() <= static_cast<std::size_t>(r)) {
    const std::size_t k = cache.polys.size();
    cache.polys.push_back(BiPoly::X() * cache.polys[k - 1] +
                          BiPoly::Y() * cache.polys[k - 2]);
  }
  return cache.polys[static_cast<std::size_t>(r)];
}

const BiPoly& f_poly(int r) {
  if (r < -1) throw std::invalid_argument("f_r requires r >= -1");
  PolyCache& cache = f_cache();
  std::lock_guard lock(cache.mu);
  // Slot k holds f_{k-1}.
  if (cache.polys.empty()) {
    cache.polys.push_back(BiPoly());
    cache.polys.push_back(BiPoly::constant(1));
  }
  const BiPoly y2 = BiPoly::monomial(1, 0, 2);
  while (cache.polys.size() <= static_cast<std::size_t>(r + 1)) {
    const std::size_t k = cache.polys.size();
    cache.polys.push_back(BiPoly::X() * cache.polys[k - 1] -
                          y2 * cache.polys[k - 2]);
  }
  return cache.polys[static_cast<std::size_t>(r + 1)];
}

BiPoly s_poly(int n, int alpha) {
  if (n < 1) throw std::invalid_argument("S_n requires n >= 1");
  if (alpha != 1 && alpha != -1)
    throw std::invalid_argument("S_n is defined only at alpha = +1 or -1");
  BiPoly s;
  if (n % 2 == 0) {
    const int m = n / 2;
    if (alpha == -1) return s;
    for (int i = 0; i < m; ++i)
      s = s + BiPoly::monomial(2, static_cast<unsigned>(2 * i), 0);
    return s;
  }
  const int m = (n - 1) / 2;
  for (int i = 0; i <= 2 * m; ++i)
    s = s + BiPoly::monomial(i % 2 == 0 ? 1 : alpha, static_cast<unsigned>(i), 0);
  return s;
}

FieldElem eval_f(int r, FieldElem x, FieldElem y) {
  if (r < -1) throw std::invalid_argument("f_r requires r >= -1");
  const std::uint32_t p = x.modulus();
  FieldElem prev(0, p);  // f_{-1}
  FieldElem cur(1, p);   // f_0
  if (r == -1) return prev;
  const FieldElem y2 = y * y;
  for (int k = 1; k <= r; ++k) {
    FieldElem next = x * cur - y2 * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

FieldElem eval_u(int r, FieldElem x, FieldElem y) {
  if (r < 0) throw std::invalid_argument("u_r requires r >= 0");
  const std::uint32_t p = x.modulus();
  FieldElem prev(0, p);  // u_0
  FieldElem cur(1, p);   // u_1
  if (r == 0) return prev;
  for (int k = 2; k <= r; ++k) {
    FieldElem next = x * cur + y * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace sl2roots
