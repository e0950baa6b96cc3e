#ifndef SL2ROOTS_CENSUS_HPP
#define SL2ROOTS_CENSUS_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "sl2roots/field.hpp"

namespace sl2roots {

using Rational = boost::rational<std::int64_t>;

/// Largest q for the closed forms (keeps q^3 terms inside 64 bits).
inline constexpr std::uint32_t kFormulaCap = 1000000;

/// Default group-enumeration cap for brute-force censuses.
inline constexpr std::uint32_t kBruteCap = 31;

enum class CensusMode { formula, brute_force };

std::string to_string(CensusMode m);

/// Number of power classes of each conjugacy type.
struct PerType {
  std::uint64_t central = 0;
  std::uint64_t split = 0;
  std::uint64_t nonsemisimple = 0;
  std::uint64_t anisotropic = 0;

  std::uint64_t total() const { return central + split + nonsemisimple + anisotropic; }
  friend bool operator==(const PerType&, const PerType&) = default;
};

struct PowerCensus {
  std::uint32_t q = 0;
  std::uint64_t n = 0;
  CensusMode mode = CensusMode::formula;
  std::uint64_t c = 0;  // power classes
  std::uint64_t s = 0;  // power elements
  PerType per_type;
  Rational ratio_c;  // c / (q + 4)
  Rational ratio_s;  // s / (q^3 - q)
};

struct BorelCensus {
  std::uint32_t q = 0;
  std::uint64_t n = 0;
  std::int64_t M_n = 0;
  std::int64_t M_n_minus = 0;
  std::int64_t N_nq = 0;
  std::int64_t total = 0;  // (N_nq - 3) q + M_n + M_n_minus
};

/// Closed-form count of n-th powers of elements of B.
BorelCensus borel_power_census(std::uint32_t q, std::uint64_t n);

/// |{b^n : b in B}| by enumeration of B (q <= kFieldScanCap).
std::uint64_t borel_power_count_brute(std::uint32_t q, std::uint64_t n);

/// Anisotropic classes that are n-th powers, from the kernel size d of
/// x -> x^n on the norm-one group and whether -1 is an n-th power there.
std::uint64_t anisotropic_power_classes(std::uint32_t q, std::uint64_t n);

/// Closed forms for n = 2, 3, 4 and odd primes n. per_type holds the
/// per-type class counts the closed form is assembled from; c and s are the
/// printed totals. Throws std::invalid_argument for unsupported n and
/// CapExceeded for q > kFormulaCap.
PowerCensus power_census_formula(std::uint32_t q, std::uint64_t n);

/// Census by enumerating SL2(F_q). Throws CapExceeded for q > cap.
PowerCensus power_census_brute(std::uint32_t q, std::uint64_t n,
                               std::uint32_t cap = kBruteCap);

/// Limit of s(n, q)/|SL2(F_q)|: 1/2 for n = 2, 3/8 for n = 4 and
/// (n + 1)/(2n) for odd primes. Throws std::invalid_argument otherwise.
Rational asymptotic_ratio(std::uint64_t n);

bool formula_supported(std::uint64_t n);

}  // namespace sl2roots

#endif  // SL2ROOTS_CENSUS_HPP
