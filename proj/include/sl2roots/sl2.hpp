#ifndef SL2ROOTS_SL2_HPP
#define SL2ROOTS_SL2_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sl2roots/field.hpp"

namespace sl2roots {

/// 2x2 matrix [[a, b], [c, d]] over F_p with determinant one.
class Sl2Elem {
 public:
  /// Throws std::invalid_argument when ad - bc != 1.
  Sl2Elem(FieldElem a, FieldElem b, FieldElem c, FieldElem d);

  static Sl2Elem identity(const PrimeField& F);

  FieldElem a() const { return a_; }
  FieldElem b() const { return b_; }
  FieldElem c() const { return c_; }
  FieldElem d() const { return d_; }
  std::uint32_t modulus() const { return a_.modulus(); }

  FieldElem trace() const { return a_ + d_; }
  Sl2Elem inverse() const;
  Sl2Elem operator*(const Sl2Elem& o) const;
  Sl2Elem operator-() const;
  /// Square-and-multiply; n = 0 gives the identity.
  Sl2Elem pow(std::uint64_t n) const;

  bool is_upper_triangular() const { return c_.is_zero(); }

  /// Wire format `a,b,c,d`.
  std::string to_wire() const;

  friend bool operator==(const Sl2Elem&, const Sl2Elem&) = default;
  friend std::strong_ordering operator<=>(const Sl2Elem&,
                                          const Sl2Elem&) = default;

 private:
  struct Unchecked {};
  Sl2Elem(FieldElem a, FieldElem b, FieldElem c, FieldElem d, Unchecked)
      : a_(a), b_(b), c_(c), d_(d) {}

  FieldElem a_, b_, c_, d_;
};

/// Parses `a,b,c,d` (decimal integers, reduced mod p). Throws
/// std::invalid_argument on malformed input or det != 1.
Sl2Elem parse_wire(const PrimeField& F, std::string_view text);

/// Dense index in [0, p^4) used for membership bitsets.
std::size_t element_index(const Sl2Elem& g);

// Generators.
Sl2Elem x12(FieldElem t);
Sl2Elem x21(FieldElem t);
Sl2Elem h(FieldElem a);
/// n(α) = X12(α) X21(-1/α) X12(α) = [[0, α], [-1/α, 0]].
Sl2Elem n_elem(FieldElem alpha);

/// h(α)·X12(ψ).
struct Borel {
  FieldElem alpha, psi;
  friend bool operator==(const Borel&, const Borel&) = default;
  friend auto operator<=>(const Borel&, const Borel&) = default;
};

/// X12(τ)·n(α)·X12(ψ).
struct Cell {
  FieldElem tau, alpha, psi;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Unique Bruhat coordinates of an element. Borel forms sort before Cell
/// forms; within a tag, coordinates compare lexicographically.
using BruhatForm = std::variant<Borel, Cell>;

BruhatForm to_bruhat(const Sl2Elem& g);
Sl2Elem to_matrix(const BruhatForm& x);
std::string to_string(const BruhatForm& x);
bool is_borel(const BruhatForm& x);

/// Product computed from the Bruhat multiplication rules (no matrices).
BruhatForm mul(const BruhatForm& x, const BruhatForm& y);

/// x^n for n >= 1 via the Fibonacci power formulas. For cell elements the
/// smallest power r with x^r in B is located first; when r <= n the power is
/// assembled as (x^r)^k · x^m using the collapse formula and the Borel closed
/// form. Throws std::invalid_argument for n = 0.
BruhatForm power_bruhat(const BruhatForm& x, std::uint64_t n);

/// Least r >= 1 with x^r in B, found as one more than the index of the first
/// vanishing f_{r-1}(t + s, a). The search stops at `limit` (default: the
/// largest possible element order 2p + 2). Throws for Borel input.
std::optional<std::uint64_t> smallest_borel_power(
    const BruhatForm& x, std::optional<std::uint64_t> limit = std::nullopt);

// Conjugacy classes ----------------------------------------------------------

struct Central {
  int sign;  // +1 or -1
  friend bool operator==(const Central&, const Central&) = default;
  friend auto operator<=>(const Central&, const Central&) = default;
};

/// Class of h(a), a != ±1; `a` is the smaller residue of {a, 1/a}.
struct SplitRegular {
  FieldElem a;
  friend bool operator==(const SplitRegular&, const SplitRegular&) = default;
  friend auto operator<=>(const SplitRegular&, const SplitRegular&) = default;
};

/// Class of h(sign)·X12(sign·u) with u = 1 (untwisted) or u = eps (twisted),
/// eps = nonsquare_witness.
struct NonSemisimple {
  int sign;
  bool twisted;
  friend bool operator==(const NonSemisimple&, const NonSemisimple&) = default;
  friend auto operator<=>(const NonSemisimple&, const NonSemisimple&) = default;
};

/// Class of the companion matrix n(-1)·X12(δ), δ² - 4 a non-square.
struct Anisotropic {
  FieldElem delta;
  friend bool operator==(const Anisotropic&, const Anisotropic&) = default;
  friend auto operator<=>(const Anisotropic&, const Anisotropic&) = default;
};

using ClassType = std::variant<Central, SplitRegular, NonSemisimple, Anisotropic>;

enum class ClassKind { central, split, nonsemisimple, anisotropic };

ClassKind kind_of(const ClassType& t);
ClassType classify(const Sl2Elem& g);
Sl2Elem class_representative(const ClassType& t, const PrimeField& F);
std::uint64_t class_size(const ClassType& t, std::uint64_t q);
std::string to_string(const ClassType& t);

struct ClassEntry {
  ClassType type;
  Sl2Elem representative;
  std::uint64_t size;
};

/// All q + 4 classes: central (+1, -1), split by increasing a, the four
/// non-semisimple classes in the order X12(1), h(-1)X12(-1), X12(eps),
/// h(-1)X12(-eps), then anisotropic by increasing δ.
std::vector<ClassEntry> class_table(const PrimeField& F);

/// Position of the class of t inside class_table(F).
std::size_t class_index(const ClassType& t, const PrimeField& F);

/// Every element of SL2(F_p), sorted by (a, b, c, d).
std::vector<Sl2Elem> enumerate_sl2(const PrimeField& F);

std::uint64_t group_order(std::uint64_t q);

}  // namespace sl2roots

#endif  // SL2ROOTS_SL2_HPP
