#ifndef SL2ROOTS_FIELD_HPP
#define SL2ROOTS_FIELD_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl2roots {

/// Raised when an exhaustive routine is asked to scan a field or group
/// larger than its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest prime for which field-level exhaustive scans are allowed.
inline constexpr std::uint32_t kFieldScanCap = 10007;

bool is_prime(std::uint64_t n);

/// Element of F_p stored as its canonical residue in [0, p).
///
/// Every element carries its modulus so mixed-field arithmetic can be caught;
/// the default-constructed value is the (invalid) residue 0 mod 0 and is only
/// meant as a placeholder in containers.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(std::int64_t value, std::uint32_t p);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  FieldElem operator+(FieldElem o) const;
  FieldElem operator-(FieldElem o) const;
  FieldElem operator*(FieldElem o) const;
  FieldElem operator/(FieldElem o) const;
  FieldElem operator-() const;
  FieldElem& operator+=(FieldElem o) { return *this = *this + o; }
  FieldElem& operator-=(FieldElem o) { return *this = *this - o; }
  FieldElem& operator*=(FieldElem o) { return *this = *this * o; }
  FieldElem& operator/=(FieldElem o) { return *this = *this / o; }

  /// Throws std::domain_error on zero.
  FieldElem inverse() const;
  FieldElem pow(std::uint64_t e) const;
  /// Negative exponents go through the inverse.
  FieldElem pow_signed(std::int64_t e) const;

  friend bool operator==(FieldElem, FieldElem) = default;
  friend std::strong_ordering operator<=>(FieldElem a, FieldElem b) {
    if (auto c = a.p_ <=> b.p_; c != 0) return c;
    return a.value_ <=> b.value_;
  }

 private:
  std::uint32_t value_ = 0;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, FieldElem x);

/// F_p for an odd prime p.
class PrimeField {
 public:
  /// Throws std::invalid_argument unless p is an odd prime.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t order() const { return p_; }
  FieldElem operator()(std::int64_t v) const { return FieldElem(v, p_); }
  FieldElem zero() const { return FieldElem(0, p_); }
  FieldElem one() const { return FieldElem(1, p_); }

  /// All residues 0..p-1 in ascending order.
  std::vector<FieldElem> elements() const;
  /// All nonzero residues in ascending order.
  std::vector<FieldElem> units() const;

  /// Euler's criterion; zero counts as a square.
  bool is_square(FieldElem a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// Smallest positive quadratic non-residue mod p.
FieldElem nonsquare_witness(const PrimeField& field);

/// All x in F_p with x^n = a, ascending. Exhaustive scan; p is capped by
/// kFieldScanCap.
std::vector<FieldElem> nth_roots_in_field(FieldElem a, std::uint64_t n);

/// Euler-style test: a is an n-th power iff a = 0 or a^((p-1)/d) = 1 with
/// d = gcd(n, p-1).
bool is_nth_power(FieldElem a, std::uint64_t n);

/// A square root of a (Tonelli-Shanks), or nullopt for non-residues. Of the
/// two roots the one with the smaller residue is returned.
std::optional<FieldElem> sqrt_in_field(FieldElem a);

/// Number of n-th powers in F_p including 0, (p-1)/gcd(n, p-1) + 1.
std::uint64_t nth_power_count(const PrimeField& field, std::uint64_t n);

/// Quadratic extension F_p[δ]/(δ² - eps), eps the smallest non-residue.
class QuadExtField {
 public:
  explicit QuadExtField(const PrimeField& base);

  const PrimeField& base() const { return base_; }
  FieldElem eps() const { return eps_; }

 private:
  PrimeField base_;
  FieldElem eps_;
};

/// x + y·δ in a QuadExtField.
class ExtElem {
 public:
  ExtElem(FieldElem x, FieldElem y, FieldElem eps) : x_(x), y_(y), eps_(eps) {}

  FieldElem x() const { return x_; }
  FieldElem y() const { return y_; }

  ExtElem operator+(const ExtElem& o) const;
  ExtElem operator-(const ExtElem& o) const;
  ExtElem operator*(const ExtElem& o) const;
  ExtElem operator-() const;
  ExtElem pow(std::uint64_t e) const;
  /// Galois conjugate x - yδ (the Frobenius image).
  ExtElem conjugate() const;
  /// x² - eps·y², i.e. the product with the conjugate.
  FieldElem norm() const;
  bool is_one() const { return x_.is_one() && y_.is_zero(); }
  bool is_minus_one() const { return (-x_).is_one() && y_.is_zero(); }

  friend bool operator==(const ExtElem& a, const ExtElem& b) {
    return a.x_ == b.x_ && a.y_ == b.y_;
  }
  friend std::strong_ordering operator<=>(const ExtElem& a, const ExtElem& b) {
    if (auto c = a.x_ <=> b.x_; c != 0) return c;
    return a.y_ <=> b.y_;
  }

 private:
  FieldElem x_, y_, eps_;
};

ExtElem ext_elem(const QuadExtField& E, std::int64_t x, std::int64_t y);

/// The norm-one subgroup {x : x^(1+p) = 1}, sorted by (x, y).
std::vector<ExtElem> norm_one_elements(const QuadExtField& E);

struct NormOnePowerData {
  std::uint64_t kernel_size = 0;    // |{x in norm-one group : x^n = 1}|
  bool contains_minus_one = false;  // -1 is an n-th power inside the group
};

NormOnePowerData norm_one_nth_power_data(const QuadExtField& E,
                                         std::uint64_t n);

}  // namespace sl2roots

#endif  // SL2ROOTS_FIELD_HPP
