#include "sl2roots/census.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "sl2roots/sl2.hpp"

namespace sl2roots {

namespace {

void require_odd_prime(std::uint32_t q) { (void)PrimeField(q); }

void finish(PowerCensus& pc) {
  const auto q = static_cast<std::int64_t>(pc.q);
  pc.ratio_c = Rational(static_cast<std::int64_t>(pc.c), q + 4);
  pc.ratio_s = Rational(static_cast<std::int64_t>(pc.s), q * q * q - q);
}

bool minus_one_is_square(std::uint32_t q) { return q % 4 == 1; }

}  // namespace

std::string to_string(CensusMode m) {
  return m == CensusMode::formula ? "formula" : "brute-force";
}

bool formula_supported(std::uint64_t n) {
  return n == 2 || n == 4 || (n >= 3 && is_prime(n));
}

BorelCensus borel_power_census(std::uint32_t q, std::uint64_t n) {
  require_odd_prime(q);
  if (n == 0) throw std::invalid_argument("power must be positive");
  BorelCensus bc;
  bc.q = q;
  bc.n = n;
  const bool coprime = std::gcd<std::uint64_t>(n, q) == 1;
  bc.M_n = coprime ? q : 1;
  if (n % 2 == 1) {
    bc.M_n_minus = coprime ? q : 1;
  } else {
    bc.M_n_minus = minus_one_is_square(q) ? 1 : 0;
  }
  bc.N_nq = static_cast<std::int64_t>(nth_power_count(PrimeField(q), n));
  bc.total = (bc.N_nq - 3) * static_cast<std::int64_t>(q) + bc.M_n + bc.M_n_minus;
  return bc;
}

std::uint64_t borel_power_count_brute(std::uint32_t q, std::uint64_t n) {
  const PrimeField F(q);
  if (q > kFieldScanCap)
    throw CapExceeded("Borel enumeration capped at q <= " +
                      std::to_string(kFieldScanCap));
  std::vector<bool> seen(std::size_t{q} * q, false);
  std::uint64_t count = 0;
  for (const FieldElem a : F.units()) {
    for (const FieldElem t : F.elements()) {
      const auto x = std::get<Borel>(power_bruhat(Borel{a, t}, n));
      const std::size_t idx = std::size_t{x.alpha.value()} * q + x.psi.value();
      if (!seen[idx]) {
        seen[idx] = true;
        ++count;
      }
    }
  }
  return count;
}

std::uint64_t anisotropic_power_classes(std::uint32_t q, std::uint64_t n) {
  const PrimeField F(q);
  if (n == 0) throw std::invalid_argument("power must be positive");
  if (std::gcd<std::uint64_t>(n, q + 1) == 1) return (q - 1) / 2;
  const auto data = norm_one_nth_power_data(QuadExtField(F), n);
  const std::uint64_t image = (q + 1) / data.kernel_size;
  return data.contains_minus_one ? (image - 2) / 2 : (image - 1) / 2;
}

PowerCensus power_census_formula(std::uint32_t q, std::uint64_t n) {
  require_odd_prime(q);
  if (!formula_supported(n))
    throw std::invalid_argument("no closed form for n = " + std::to_string(n) +
                                "; supported: 2, 4 and odd primes");
  if (q > kFormulaCap)
    throw CapExceeded("closed forms capped at q <= " + std::to_string(kFormulaCap));
  PowerCensus pc;
  pc.q = q;
  pc.n = n;
  pc.mode = CensusMode::formula;
  const std::uint64_t Q = q;
  const std::uint64_t order = Q * Q * Q - Q;
  PerType& t = pc.per_type;

  if (n == 2) {
    t = {2, (Q - 3) / 4, 2, (Q - 1) / 4};
    pc.c = (Q + 5) / 2;
    pc.s = minus_one_is_square(q) ? Q * Q * (Q - 1) / 2 - Q + 1
                                  : Q * Q * (Q - 1) / 2 + 1;
  } else if (n == 3 && q != 3) {
    const bool split_case = (Q - 1) % 3 == 0;
    t.central = 2;
    t.split = split_case ? (Q - 7) / 6 : (Q - 3) / 2;
    t.nonsemisimple = 4;
    t.anisotropic = (Q + 1) % 3 == 0 ? (Q - 5) / 6 : (Q - 1) / 2;
    pc.c = split_case ? (2 * Q + 13) / 3 : (2 * Q + 11) / 3;
    pc.s = 2 * Q * (Q * Q - 1) / 3;
  } else if (n == 4) {
    // s is evaluated as 8s to stay in integers.
    switch (Q % 8) {
      case 1:
        t = {2, (Q - 9) / 8, 2, (Q - 1) / 4};
        pc.c = (3 * Q + 21) / 8;
        pc.s = (3 * Q * Q * Q - 4 * Q * Q - 7 * Q + 8) / 8;
        break;
      case 3:
        t = {1, (Q - 3) / 4, 2, (Q - 3) / 8};
        pc.c = (3 * Q + 15) / 8;
        pc.s = 3 * order / 8;
        break;
      case 5:
        t = {1, (Q - 5) / 8, 2, (Q - 1) / 4};
        pc.c = (3 * Q + 17) / 8;
        pc.s = 3 * order / 8;
        break;
      default:  // 7
        t = {2, (Q - 3) / 4, 2, (Q - 7) / 8};
        pc.c = (3 * Q + 11) / 8;
        pc.s = (3 * Q * Q * Q - 4 * Q * Q + Q + 8) / 8;
        break;
    }
  } else {
    // Odd prime n; the four-row table.
    if (Q % n == 0) {
      t = {2, (Q - 3) / 2, 0, (Q - 1) / 2};
      pc.c = Q;
      pc.s = (Q - 2) * (Q * Q - 1);
    } else if ((Q - 1) % n == 0) {
      t = {2, (Q - 1) / (2 * n) - 1, 4, (Q - 1) / 2};
      pc.c = (n + 1) * (Q - 1) / (2 * n) + 5;
      pc.s = order / (2 * n) * (n + 1);
    } else if ((Q + 1) % n == 0) {
      t = {2, (Q - 3) / 2, 4, (Q + 1) / (2 * n) - 1};
      pc.c = ((n + 1) * (Q - 3) + 4) / (2 * n) + 5;
      pc.s = order / (2 * n) * (n + 1);
    } else {
      t = {2, (Q - 3) / 2, 4, (Q - 1) / 2};
      pc.c = Q + 4;
      pc.s = order;
    }
  }
  finish(pc);
  return pc;
}

PowerCensus power_census_brute(std::uint32_t q, std::uint64_t n,
                               std::uint32_t cap) {
  const PrimeField F(q);
  if (q > cap)
    throw CapExceeded("brute-force census capped at q <= " + std::to_string(cap));
  if (n == 0) throw std::invalid_argument("power must be positive");

  const std::size_t Q = q;
  std::vector<bool> image(Q * Q * Q * Q, false);
  std::uint64_t count = 0;
  for (const Sl2Elem& g : enumerate_sl2(F)) {
    const std::size_t idx = element_index(g.pow(n));
    if (!image[idx]) {
      image[idx] = true;
      ++count;
    }
  }

  PowerCensus pc;
  pc.q = q;
  pc.n = n;
  pc.mode = CensusMode::brute_force;
  pc.s = count;
  // Power sets are unions of classes, so a class is hit iff its
  // representative is.
  for (const ClassEntry& e : class_table(F)) {
    if (!image[element_index(e.representative)]) continue;
    ++pc.c;
    switch (kind_of(e.type)) {
      case ClassKind::central:
        ++pc.per_type.central;
        break;
      case ClassKind::split:
        ++pc.per_type.split;
        break;
      case ClassKind::nonsemisimple:
        ++pc.per_type.nonsemisimple;
        break;
      case ClassKind::anisotropic:
        ++pc.per_type.anisotropic;
        break;
    }
  }
  finish(pc);
  return pc;
}

Rational asymptotic_ratio(std::uint64_t n) {
  if (n == 2) return Rational(1, 2);
  if (n == 4) return Rational(3, 8);
  if (n >= 3 && is_prime(n))
    return Rational(static_cast<std::int64_t>(n + 1),
                    static_cast<std::int64_t>(2 * n));
  throw std::invalid_argument("no asymptotic ratio for n = " + std::to_string(n));
}

}  // namespace sl2roots
