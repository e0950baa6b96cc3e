#include "sl2roots/field.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace sl2roots {

namespace {

void require_same_field(FieldElem a, FieldElem b) {
  if (a.modulus() != b.modulus())
    throw std::invalid_argument("field elements from different fields");
}

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldElem::FieldElem(std::int64_t value, std::uint32_t p)
    : value_(reduce(value, p)), p_(p) {}

FieldElem FieldElem::operator+(FieldElem o) const {
  require_same_field(*this, o);
  std::uint64_t s = std::uint64_t{value_} + o.value_;
  if (s >= p_) s -= p_;
  FieldElem r;
  r.value_ = static_cast<std::uint32_t>(s);
  r.p_ = p_;
  return r;
}

FieldElem FieldElem::operator-(FieldElem o) const {
  require_same_field(*this, o);
  FieldElem r;
  r.value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + (p_ - o.value_);
  r.p_ = p_;
  return r;
}

FieldElem FieldElem::operator*(FieldElem o) const {
  require_same_field(*this, o);
  FieldElem r;
  r.value_ = static_cast<std::uint32_t>((std::uint64_t{value_} * o.value_) % p_);
  r.p_ = p_;
  return r;
}

FieldElem FieldElem::operator/(FieldElem o) const { return *this * o.inverse(); }

FieldElem FieldElem::operator-() const {
  FieldElem r;
  r.value_ = value_ == 0 ? 0 : p_ - value_;
  r.p_ = p_;
  return r;
}

FieldElem FieldElem::inverse() const {
  if (value_ == 0) throw std::domain_error("inverse of zero");
  // Extended Euclid on (value, p).
  std::int64_t old_r = value_, r = p_, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return FieldElem(old_s, p_);
}

FieldElem FieldElem::pow(std::uint64_t e) const {
  FieldElem base = *this;
  FieldElem acc(1, p_);
  while (e != 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

FieldElem FieldElem::pow_signed(std::int64_t e) const {
  if (e >= 0) return pow(static_cast<std::uint64_t>(e));
  return inverse().pow(static_cast<std::uint64_t>(-e));
}

std::ostream& operator<<(std::ostream& os, FieldElem x) {
  return os << x.value();
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("field order must be an odd prime, got " +
                                std::to_string(p));
}

std::vector<FieldElem> PrimeField::elements() const {
  std::vector<FieldElem> out;
  out.reserve(p_);
  for (std::uint32_t v = 0; v < p_; ++v) out.emplace_back(v, p_);
  return out;
}

std::vector<FieldElem> PrimeField::units() const {
  std::vector<FieldElem> out;
  out.reserve(p_ - 1);
  for (std::uint32_t v = 1; v < p_; ++v) out.emplace_back(v, p_);
  return out;
}

bool PrimeField::is_square(FieldElem a) const {
  if (a.is_zero()) return true;
  return a.pow((p_ - 1) / 2).is_one();
}

FieldElem nonsquare_witness(const PrimeField& field) {
  for (std::uint32_t v = 2; v < field.order(); ++v) {
    FieldElem x = field(v);
    if (!field.is_square(x)) return x;
  }
  throw std::logic_error("no quadratic non-residue found");
}

std::vector<FieldElem> nth_roots_in_field(FieldElem a, std::uint64_t n) {
  const std::uint32_t p = a.modulus();
  if (p > kFieldScanCap)
    throw CapExceeded("field root scan capped at p <= " +
                      std::to_string(kFieldScanCap));
  if (n == 0) throw std::invalid_argument("root degree must be positive");
  std::vector<FieldElem> roots;
  if (a.is_zero()) {
    roots.emplace_back(0, p);
    return roots;
  }
  for (std::uint32_t v = 1; v < p; ++v) {
    FieldElem x(v, p);
    if (x.pow(n) == a) roots.push_back(x);
  }
  return roots;
}

bool is_nth_power(FieldElem a, std::uint64_t n) {
  if (a.is_zero()) return true;
  const std::uint64_t q1 = a.modulus() - 1;
  const std::uint64_t d = std::gcd(n, q1);
  return a.pow(q1 / d).is_one();
}

std::optional<FieldElem> sqrt_in_field(FieldElem a) {
  const std::uint32_t p = a.modulus();
  if (a.is_zero()) return a;
  if (!a.pow((p - 1) / 2).is_one()) return std::nullopt;
  // p - 1 = q * 2^s with q odd.
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  FieldElem z(2, p);
  while (z.pow((p - 1) / 2).is_one()) z += FieldElem(1, p);
  FieldElem c = z.pow(q);
  FieldElem r = a.pow((q + 1) / 2);
  FieldElem t = a.pow(q);
  unsigned m = s;
  while (!t.is_one()) {
    unsigned i = 0;
    FieldElem t2 = t;
    while (!t2.is_one()) {
      t2 *= t2;
      ++i;
    }
    FieldElem b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b *= b;
    r *= b;
    c = b * b;
    t *= c;
    m = i;
  }
  FieldElem other = -r;
  return other.value() < r.value() ? other : r;
}

std::uint64_t nth_power_count(const PrimeField& field, std::uint64_t n) {
  const std::uint64_t q1 = field.order() - 1;
  return q1 / std::gcd(n, q1) + 1;
}

QuadExtField::QuadExtField(const PrimeField& base)
    : base_(base), eps_(nonsquare_witness(base)) {}

ExtElem ExtElem::operator+(const ExtElem& o) const {
  return {x_ + o.x_, y_ + o.y_, eps_};
}

ExtElem ExtElem::operator-(const ExtElem& o) const {
  return {x_ - o.x_, y_ - o.y_, eps_};
}

ExtElem ExtElem::operator*(const ExtElem& o) const {
  return {x_ * o.x_ + eps_ * y_ * o.y_, x_ * o.y_ + y_ * o.x_, eps_};
}

ExtElem ExtElem::operator-() const { return {-x_, -y_, eps_}; }

ExtElem ExtElem::pow(std::uint64_t e) const {
  ExtElem base = *this;
  ExtElem acc(FieldElem(1, x_.modulus()), FieldElem(0, x_.modulus()), eps_);
  while (e != 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

ExtElem ExtElem::conjugate() const { return {x_, -y_, eps_}; }

FieldElem ExtElem::norm() const { return x_ * x_ - eps_ * y_ * y_; }

ExtElem ext_elem(const QuadExtField& E, std::int64_t x, std::int64_t y) {
  return {E.base()(x), E.base()(y), E.eps()};
}

std::vector<ExtElem> norm_one_elements(const QuadExtField& E) {
  const std::uint32_t p = E.base().order();
  if (p > kFieldScanCap)
    throw CapExceeded("norm-one scan capped at p <= " +
                      std::to_string(kFieldScanCap));
  // sqrt_of[v] lists the square roots of v.
  std::vector<std::vector<std::uint32_t>> sqrt_of(p);
  for (std::uint32_t x = 0; x < p; ++x)
    sqrt_of[(std::uint64_t{x} * x) % p].push_back(x);

  std::vector<ExtElem> out;
  for (std::uint32_t y = 0; y < p; ++y) {
    FieldElem fy = E.base()(y);
    FieldElem target = E.base().one() + E.eps() * fy * fy;
    for (std::uint32_t x : sqrt_of[target.value()])
      out.emplace_back(E.base()(x), fy, E.eps());
  }
  std::sort(out.begin(), out.end());
  return out;
}

NormOnePowerData norm_one_nth_power_data(const QuadExtField& E,
                                         std::uint64_t n) {
  NormOnePowerData data;
  for (const ExtElem& z : norm_one_elements(E)) {
    ExtElem zn = z.pow(n);
    if (zn.is_one()) ++data.kernel_size;
    if (zn.is_minus_one()) data.contains_minus_one = true;
  }
  return data;
}

}  // namespace sl2roots
