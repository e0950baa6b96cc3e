#ifndef SL2ROOTS_WORDS_HPP
#define SL2ROOTS_WORDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sl2roots/census.hpp"
#include "sl2roots/field.hpp"
#include "sl2roots/sl2.hpp"

namespace sl2roots {

/// Exponents (r_1, ..., r_l) of the word X_1^{r_1} ... X_l^{r_l}.
struct WordSpec {
  std::vector<std::uint64_t> exponents;

  /// Throws std::invalid_argument for an empty word or a zero exponent.
  explicit WordSpec(std::vector<std::uint64_t> exps);
  std::string to_string() const;  // "2,2"
};

struct ImageReport {
  std::uint32_t q = 0;
  WordSpec word{{1}};
  std::uint64_t image_size = 0;
  std::uint64_t group_size = 0;
  bool surjective = false;
  bool decided_by_shortcut = false;
  std::vector<ClassEntry> missing;  // classes outside the image
};

struct WordOptions {
  std::uint32_t cap = kBruteCap;
  /// Stop multiplying once |A| + |B| > |G|, which forces AB = G.
  bool use_shortcut = true;
};

/// Whole-group tables shared by the word computations.
class GroupTables {
 public:
  /// Throws CapExceeded for q > cap.
  explicit GroupTables(std::uint32_t q, std::uint32_t cap = kBruteCap);

  const PrimeField& field() const { return F_; }
  const std::vector<ClassEntry>& classes() const { return classes_; }
  const std::vector<Sl2Elem>& members(std::size_t cls) const { return members_[cls]; }
  std::size_t class_of(const Sl2Elem& g) const { return class_of_[element_index(g)]; }
  std::uint64_t order() const { return group_order(F_.order()); }

  /// Classes met by {g^r}; power maps commute with conjugation, so the
  /// class of rep^r decides each class.
  std::vector<bool> power_classes(std::uint64_t r) const;

  /// Classes met by A·B for conjugation-closed A, B given as class masks:
  /// one representative per class of A times every element of B.
  std::vector<bool> product(const std::vector<bool>& a,
                            const std::vector<bool>& b) const;

  std::uint64_t size_of(const std::vector<bool>& mask) const;

 private:
  PrimeField F_;
  std::vector<ClassEntry> classes_;
  std::vector<std::vector<Sl2Elem>> members_;
  std::vector<std::uint16_t> class_of_;
};

/// {g^r : g in SL2(F_q)}, sorted.
std::vector<Sl2Elem> power_set(std::uint32_t q, std::uint64_t r,
                               std::uint32_t cap = kBruteCap);

ImageReport word_image(std::uint32_t q, const WordSpec& w,
                       const WordOptions& opts = {});
ImageReport word_image(const GroupTables& G, const WordSpec& w,
                       bool use_shortcut = true);

struct SuiteClaim {
  std::string name;  // e.g. "X1^2 X2^2 surjective"
  std::uint32_t q = 0;
  bool expected = false;
  bool observed = false;
  bool pass() const { return expected == observed; }
};

/// Surjectivity claims for every odd prime q <= qmax: (2,2); (3,3) except
/// q = 3; (4,4) image G or G minus {-1} by q mod 8; (4,4,4); (m,n) for odd
/// primes m, n <= max_prime except m = n = q = 3; (2,n) for odd primes n with
/// n not dividing q and n < q - 1; and (3,...,3) at q = 3 for lengths 1..4.
std::vector<SuiteClaim> verify_surjectivity_suite(std::uint32_t qmax,
                                                  std::uint64_t max_prime = 7,
                                                  std::uint32_t cap = kBruteCap);

/// {b^r : b in B}, as Borel forms, sorted.
std::vector<Borel> borel_power_set(std::uint32_t q, std::uint64_t r);

/// |B^{r_1} ... B^{r_l}| computed by set products inside B.
std::uint64_t borel_word_image_size(std::uint32_t q, const WordSpec& w);

}  // namespace sl2roots

#endif  // SL2ROOTS_WORDS_HPP
