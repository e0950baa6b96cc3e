#include "sl2roots/sl2.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include "sl2roots/fibpoly.hpp"

namespace sl2roots {

Sl2Elem::Sl2Elem(FieldElem a, FieldElem b, FieldElem c, FieldElem d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (!(a * d - b * c).is_one())
    throw std::invalid_argument("matrix determinant is not 1");
}

Sl2Elem Sl2Elem::identity(const PrimeField& F) {
  return {F.one(), F.zero(), F.zero(), F.one(), Unchecked{}};
}

Sl2Elem Sl2Elem::inverse() const { return {d_, -b_, -c_, a_, Unchecked{}}; }

Sl2Elem Sl2Elem::operator*(const Sl2Elem& o) const {
  return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_,
          c_ * o.b_ + d_ * o.d_, Unchecked{}};
}

Sl2Elem Sl2Elem::operator-() const { return {-a_, -b_, -c_, -d_, Unchecked{}}; }

Sl2Elem Sl2Elem::pow(std::uint64_t n) const {
  Sl2Elem base = *this;
  Sl2Elem acc(FieldElem(1, modulus()), FieldElem(0, modulus()),
              FieldElem(0, modulus()), FieldElem(1, modulus()), Unchecked{});
  while (n != 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

std::string Sl2Elem::to_wire() const {
  std::ostringstream os;
  os << a_ << ',' << b_ << ',' << c_ << ',' << d_;
  return os.str();
}

Sl2Elem parse_wire(const PrimeField& F, std::string_view text) {
  std::vector<std::int64_t> vals;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed element '" + std::string(text) +
                                  "', expected a,b,c,d");
    vals.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (vals.size() != 4)
    throw std::invalid_argument("element needs exactly four entries a,b,c,d");
  return {F(vals[0]), F(vals[1]), F(vals[2]), F(vals[3])};
}

std::size_t element_index(const Sl2Elem& g) {
  const std::size_t p = g.modulus();
  return ((std::size_t{g.a().value()} * p + g.b().value()) * p + g.c().value()) *
             p +
         g.d().value();
}

Sl2Elem x12(FieldElem t) {
  const std::uint32_t p = t.modulus();
  return {FieldElem(1, p), t, FieldElem(0, p), FieldElem(1, p)};
}

Sl2Elem x21(FieldElem t) {
  const std::uint32_t p = t.modulus();
  return {FieldElem(1, p), FieldElem(0, p), t, FieldElem(1, p)};
}

Sl2Elem h(FieldElem a) {
  const std::uint32_t p = a.modulus();
  return {a, FieldElem(0, p), FieldElem(0, p), a.inverse()};
}

Sl2Elem n_elem(FieldElem alpha) {
  const std::uint32_t p = alpha.modulus();
  return {FieldElem(0, p), alpha, -alpha.inverse(), FieldElem(0, p)};
}

// Bruhat coordinates -----------------------------------------------------------

BruhatForm to_bruhat(const Sl2Elem& g) {
  if (g.c().is_zero()) return Borel{g.a(), g.b() / g.a()};
  const FieldElem c_inv = g.c().inverse();
  return Cell{g.a() * c_inv, -c_inv, g.d() * c_inv};
}

Sl2Elem to_matrix(const BruhatForm& x) {
  if (const auto* b = std::get_if<Borel>(&x)) return h(b->alpha) * x12(b->psi);
  const auto& c = std::get<Cell>(x);
  return x12(c.tau) * n_elem(c.alpha) * x12(c.psi);
}

bool is_borel(const BruhatForm& x) { return std::holds_alternative<Borel>(x); }

std::string to_string(const BruhatForm& x) {
  std::ostringstream os;
  if (const auto* b = std::get_if<Borel>(&x)) {
    os << "h(" << b->alpha << ")X12(" << b->psi << ')';
  } else {
    const auto& c = std::get<Cell>(x);
    os << "X12(" << c.tau << ")n(" << c.alpha << ")X12(" << c.psi << ')';
  }
  return os.str();
}

BruhatForm mul(const BruhatForm& x, const BruhatForm& y) {
  if (const auto* b1 = std::get_if<Borel>(&x)) {
    if (const auto* b2 = std::get_if<Borel>(&y)) {
      const FieldElem inv2 = b2->alpha.inverse();
      return Borel{b1->alpha * b2->alpha, inv2 * inv2 * b1->psi + b2->psi};
    }
    const auto& c2 = std::get<Cell>(y);
    return Cell{b1->alpha * b1->alpha * (b1->psi + c2.tau), b1->alpha * c2.alpha,
                c2.psi};
  }
  const auto& c1 = std::get<Cell>(x);
  if (const auto* b2 = std::get_if<Borel>(&y)) {
    // n(α)h(β) = n(α/β), then X12 moves past h(β) as in the Borel rule.
    const FieldElem inv2 = b2->alpha.inverse();
    return Cell{c1.tau, c1.alpha * inv2, inv2 * inv2 * c1.psi + b2->psi};
  }
  const auto& c2 = std::get<Cell>(y);
  const FieldElem joint = c1.psi + c2.tau;
  if (joint.is_zero()) {
    const FieldElem ratio = c2.alpha / c1.alpha;
    return Borel{-(c1.alpha / c2.alpha), ratio * ratio * c1.tau + c2.psi};
  }
  const FieldElem inv = joint.inverse();
  return Cell{c1.tau - c1.alpha * c1.alpha * inv, -(c1.alpha * c2.alpha * inv),
              c2.psi - c2.alpha * c2.alpha * inv};
}

namespace {

// h(a)X12(t) raised to n: h(a^n)X12((1 + a^-2 + ... + a^-2(n-1)) t).
Borel borel_power(const Borel& x, std::uint64_t n) {
  const std::uint32_t p = x.alpha.modulus();
  const FieldElem w = (x.alpha * x.alpha).inverse();
  FieldElem geometric(0, p);
  if (w.is_one()) {
    geometric = FieldElem(static_cast<std::int64_t>(n % p), p);
  } else {
    geometric = (FieldElem(1, p) - w.pow(n)) / (FieldElem(1, p) - w);
  }
  return Borel{x.alpha.pow(n), geometric * x.psi};
}

// Generic cell power, valid whenever f_{n-1}(t + s, a) != 0.
Cell generic_cell_power(const Cell& x, std::uint64_t n) {
  const FieldElem sum = x.tau + x.psi;
  const int k = static_cast<int>(n);
  const FieldElem f1 = eval_f(k - 1, sum, x.alpha);
  const FieldElem f2 = eval_f(k - 2, sum, x.alpha);
  const FieldElem shift = x.alpha * x.alpha * f2 / f1;
  FieldElem an = x.alpha.pow(n) / f1;
  if ((n - 1) % 2 == 1) an = -an;
  return Cell{x.tau - shift, an, x.psi - shift};
}

}  // namespace

std::optional<std::uint64_t> smallest_borel_power(
    const BruhatForm& x, std::optional<std::uint64_t> limit) {
  const auto* cell = std::get_if<Cell>(&x);
  if (cell == nullptr)
    throw std::invalid_argument("smallest_borel_power expects a cell element");
  const std::uint32_t p = cell->alpha.modulus();
  const std::uint64_t bound = limit.value_or(2 * std::uint64_t{p} + 2);
  const FieldElem sum = cell->tau + cell->psi;
  const FieldElem y2 = cell->alpha * cell->alpha;
  // Walk f_0, f_1, ... and report r = k + 1 at the first zero f_k.
  FieldElem prev(0, p), cur(1, p);
  for (std::uint64_t k = 1; k + 1 <= bound; ++k) {
    FieldElem next = sum * cur - y2 * prev;
    prev = cur;
    cur = next;
    if (cur.is_zero()) return k + 1;
  }
  return std::nullopt;
}

BruhatForm power_bruhat(const BruhatForm& x, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("power_bruhat requires n >= 1");
  if (const auto* b = std::get_if<Borel>(&x)) return borel_power(*b, n);
  const auto& c = std::get<Cell>(x);
  if (n == 1) return c;

  const std::uint64_t order_bound = 2 * std::uint64_t{c.alpha.modulus()} + 2;
  const auto r = smallest_borel_power(x, std::min(n, order_bound));
  if (!r) {
    if (n > order_bound)
      throw std::logic_error("cell element without a Borel power");
    return generic_cell_power(c, n);
  }
  // x^r = h(-a/a_{r-1}) X12((a_{r-1}²/a² - 1) t) with
  // a_{r-1} = (-1)^{r-2} a^{r-1} / f_{r-2}(t + s, a).
  const FieldElem sum = c.tau + c.psi;
  FieldElem a_prev =
      c.alpha.pow(*r - 1) / eval_f(static_cast<int>(*r) - 2, sum, c.alpha);
  if (*r % 2 == 1) a_prev = -a_prev;
  const FieldElem ratio = a_prev / c.alpha;
  const Borel xr{-(c.alpha / a_prev), (ratio * ratio - FieldElem(1, ratio.modulus())) * c.tau};

  const std::uint64_t k = n / *r;
  const std::uint64_t m = n % *r;
  BruhatForm result = borel_power(xr, k);
  if (m == 0) return result;
  const BruhatForm tail = m == 1 ? BruhatForm(c) : BruhatForm(generic_cell_power(c, m));
  return mul(result, tail);
}

// Conjugacy classes -------------------------------------------------------------

ClassKind kind_of(const ClassType& t) {
  return static_cast<ClassKind>(t.index());
}

ClassType classify(const Sl2Elem& g) {
  const std::uint32_t p = g.modulus();
  const PrimeField F(p);
  if (g.b().is_zero() && g.c().is_zero() && g.a() == g.d() &&
      (g.a().is_one() || (-g.a()).is_one()))
    return Central{g.a().is_one() ? 1 : -1};

  const FieldElem tr = g.trace();
  const FieldElem disc = tr * tr - F(4);
  if (disc.is_zero()) {
    const int sign = tr == F(2) ? 1 : -1;
    // Labels follow the representatives h(s)X12(s·u), whose (1,2) entry is
    // u itself. b and -c share a square class (-bc = (a - s)^2), so either
    // nonzero one decides.
    const FieldElem u = g.b().is_zero() ? -g.c() : g.b();
    return NonSemisimple{sign, !F.is_square(u)};
  }
  if (auto root = sqrt_in_field(disc)) {
    const FieldElem half = F(2).inverse();
    const FieldElem a = (tr + *root) * half;
    const FieldElem ai = a.inverse();
    return SplitRegular{a.value() < ai.value() ? a : ai};
  }
  return Anisotropic{tr};
}

Sl2Elem class_representative(const ClassType& t, const PrimeField& F) {
  return std::visit(
      [&](const auto& c) -> Sl2Elem {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Central>) {
          return h(F(c.sign));
        } else if constexpr (std::is_same_v<T, SplitRegular>) {
          return h(c.a);
        } else if constexpr (std::is_same_v<T, NonSemisimple>) {
          const FieldElem u = c.twisted ? nonsquare_witness(F) : F.one();
          return h(F(c.sign)) * x12(F(c.sign) * u);
        } else {
          return n_elem(-F.one()) * x12(c.delta);
        }
      },
      t);
}

std::uint64_t class_size(const ClassType& t, std::uint64_t q) {
  switch (kind_of(t)) {
    case ClassKind::central:
      return 1;
    case ClassKind::split:
      return q * (q + 1);
    case ClassKind::nonsemisimple:
      return (q * q - 1) / 2;
    case ClassKind::anisotropic:
      return q * (q - 1);
  }
  return 0;
}

std::string to_string(const ClassType& t) {
  std::ostringstream os;
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Central>) {
          os << "Central(" << (c.sign > 0 ? "+1" : "-1") << ')';
        } else if constexpr (std::is_same_v<T, SplitRegular>) {
          os << "SplitRegular(" << c.a << ')';
        } else if constexpr (std::is_same_v<T, NonSemisimple>) {
          os << "NonSemisimple(" << (c.sign > 0 ? "+1" : "-1") << ','
             << (c.twisted ? "eps" : "1") << ')';
        } else {
          os << "Anisotropic(" << c.delta << ')';
        }
      },
      t);
  return os.str();
}

std::vector<ClassEntry> class_table(const PrimeField& F) {
  const std::uint64_t q = F.order();
  std::vector<ClassType> types;
  types.push_back(Central{1});
  types.push_back(Central{-1});
  for (const FieldElem a : F.units()) {
    const FieldElem ai = a.inverse();
    if (a != ai && a.value() < ai.value()) types.push_back(SplitRegular{a});
  }
  types.push_back(NonSemisimple{1, false});
  types.push_back(NonSemisimple{-1, false});
  types.push_back(NonSemisimple{1, true});
  types.push_back(NonSemisimple{-1, true});
  for (const FieldElem d : F.elements())
    if (!F.is_square(d * d - F(4))) types.push_back(Anisotropic{d});

  std::vector<ClassEntry> table;
  table.reserve(types.size());
  for (const ClassType& t : types)
    table.push_back({t, class_representative(t, F), class_size(t, q)});
  return table;
}

std::size_t class_index(const ClassType& t, const PrimeField& F) {
  const auto table = class_table(F);
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i].type == t) return i;
  throw std::logic_error("class not found in class table");
}

std::vector<Sl2Elem> enumerate_sl2(const PrimeField& F) {
  std::vector<Sl2Elem> out;
  const std::uint64_t q = F.order();
  out.reserve(q * (q * q - 1));
  const auto elems = F.elements();
  for (const FieldElem a : elems) {
    for (const FieldElem b : elems) {
      if (a.is_zero()) {
        if (b.is_zero()) continue;
        const FieldElem c = -b.inverse();
        for (const FieldElem d : elems) out.emplace_back(a, b, c, d);
      } else {
        for (const FieldElem c : elems)
          out.emplace_back(a, b, c, (F.one() + b * c) / a);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t group_order(std::uint64_t q) { return q * (q * q - 1); }

}  // namespace sl2roots
