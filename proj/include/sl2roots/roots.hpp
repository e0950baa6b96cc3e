#ifndef SL2ROOTS_ROOTS_HPP
#define SL2ROOTS_ROOTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sl2roots/field.hpp"
#include "sl2roots/sl2.hpp"

namespace sl2roots {

/// Largest prime accepted by the root solvers. The cell solver scans all
/// (X, Y) pairs, so cost grows like q^2.
inline constexpr std::uint32_t kRootSolverCap = 1000;

/// Largest prime for which whole-group enumeration is used as a fallback.
inline constexpr std::uint32_t kExhaustiveRootCap = 31;

enum class RootMethod {
  borel_case,        // root inside B, target in B
  cell_small_n,      // cell root of a Borel target, n <= 4 closed forms
  cell_general,      // cell root of a Borel target via the (d, r) systems
  bivariate_system,  // cell root of a cell target
  exhaustive,        // whole-group scan
};

std::string to_string(RootMethod m);

struct Root {
  BruhatForm x;
  RootMethod method;
  friend bool operator==(const Root&, const Root&) = default;
};

struct RootSolution {
  std::vector<Root> roots;  // sorted by x

  std::vector<BruhatForm> forms() const;
  bool empty() const { return roots.empty(); }
  std::size_t size() const { return roots.size(); }
};

/// Roots h(a)X12(t) of X^n = h(α)X12(ψ) inside B.
std::vector<BruhatForm> roots_in_borel(const Borel& g, std::uint64_t n);

/// Cell roots of a Borel target. n <= 4 uses the closed forms; n >= 5 runs
/// borel_roots_in_cell_general.
std::vector<BruhatForm> borel_roots_in_cell(const Borel& g, std::uint64_t n);

/// Cell roots of a Borel target from the (d, r) systems, for any n >= 1:
/// for every divisor r >= 2 of n, scan (X, Y != 0) with f_{r-1} = 0 as the
/// first vanishing f and the multiplied-through d-equation, rebuild x and
/// keep it only if x^n = g.
std::vector<BruhatForm> borel_roots_in_cell_general(const Borel& g,
                                                    std::uint64_t n);

/// Roots of X^n = X12(τ)n(α)X12(ψ). All lie in the cell.
std::vector<BruhatForm> roots_of_cell(const Cell& g, std::uint64_t n);

/// Closed-form square, cube and fourth roots. cbrt_sl2 falls back to
/// exhaustive search in characteristic 3.
std::vector<BruhatForm> sqrt_sl2(const BruhatForm& g);
std::vector<BruhatForm> cbrt_sl2(const BruhatForm& g);
std::vector<BruhatForm> fourth_root_sl2(const BruhatForm& g);

/// {x : x^n = g} by scanning the whole group. p <= kExhaustiveRootCap.
std::vector<BruhatForm> roots_exhaustive(const BruhatForm& g, std::uint64_t n);

/// Preimages of the power map: entry element_index(g) lists every x with
/// x^n = g, sorted. p <= kExhaustiveRootCap.
std::vector<std::vector<BruhatForm>> power_preimages(const PrimeField& F,
                                                     std::uint64_t n);

/// All n-th roots of g. Every root is re-checked with power_bruhat; for
/// n in {2, 3, 4} the closed-form solver must agree (std::logic_error
/// otherwise). Throws CapExceeded for p > kRootSolverCap.
RootSolution nth_roots(const BruhatForm& g, std::uint64_t n);

}  // namespace sl2roots

#endif  // SL2ROOTS_ROOTS_HPP
