#ifndef SL2ROOTS_FIBPOLY_HPP
#define SL2ROOTS_FIBPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "sl2roots/field.hpp"

namespace sl2roots {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse polynomial in Z[X, Y]. Keys are (deg_X, deg_Y); zero coefficients
/// are never stored.
class BiPoly {
 public:
  using Exponent = std::pair<unsigned, unsigned>;
  using Terms = std::map<Exponent, BigInt>;

  BiPoly() = default;
  static BiPoly constant(const BigInt& c);
  static BiPoly monomial(const BigInt& c, unsigned x_deg, unsigned y_deg);
  static BiPoly X() { return monomial(1, 1, 0); }
  static BiPoly Y() { return monomial(1, 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of X^i Y^j (zero when absent).
  BigInt coeff(unsigned x_deg, unsigned y_deg) const;

  /// -1 for the zero polynomial.
  int x_degree() const;
  int total_degree() const;
  bool is_homogeneous(unsigned degree) const;

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator-() const;
  BiPoly scaled(const BigInt& c) const;

  /// Replaces Y by -Y².
  BiPoly substitute_y_neg_square() const;

  /// Evaluates with coefficients reduced into the field of x and y.
  FieldElem evaluate(FieldElem x, FieldElem y) const;

  /// Human-readable form with terms in descending X degree (ties broken by
  /// descending Y degree), e.g. `X^3 - 2*X*Y^2`.
  std::string to_string() const;

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  void add_term(const Exponent& e, const BigInt& c);
  Terms terms_;
};

/// Exact division in Z[Y][X]. The divisor must have a leading X coefficient
/// of ±1 (a unit constant); throws std::invalid_argument otherwise. Returns
/// the quotient when the remainder is zero.
std::optional<BiPoly> divide_exact(const BiPoly& num, const BiPoly& den);

/// u_0 = 0, u_1 = 1, u_r = X u_{r-1} + Y u_{r-2}. Cached per process.
const BiPoly& u_poly(int r);

/// f_{-1} = 0, f_0 = 1, f_r = X f_{r-1} - Y² f_{r-2}; homogeneous of degree r.
const BiPoly& f_poly(int r);

/// S_n(alpha, X) for alpha = ±1, returned as a polynomial in X only.
///   S_{2m}(α, X)   = (1 + α)(1 + X² + ... + X^{2(m-1)})
///   S_{2m+1}(α, X) = 1 + αX + X² + αX³ + ... + αX^{2m-1} + X^{2m}
BiPoly s_poly(int n, int alpha);

/// f_r(x, y) by running the recurrence in the field.
FieldElem eval_f(int r, FieldElem x, FieldElem y);

/// u_r(x, y) by running the recurrence in the field.
FieldElem eval_u(int r, FieldElem x, FieldElem y);

}  // namespace sl2roots

#endif  // SL2ROOTS_FIBPOLY_HPP
