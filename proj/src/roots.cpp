#include "sl2roots/roots.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "sl2roots/fibpoly.hpp"

namespace sl2roots {

namespace {

std::uint32_t modulus_of(const BruhatForm& x) {
  return std::visit([](const auto& v) { return v.alpha.modulus(); }, x);
}

void sort_unique(std::vector<BruhatForm>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

FieldElem sign_elem(std::uint64_t k, std::uint32_t p) {
  return FieldElem(k % 2 == 0 ? 1 : -1, p);
}

// (f_{r-1}, f_r) at (x, y) in one pass, r >= 0.
std::pair<FieldElem, FieldElem> f_pair(std::uint64_t r, FieldElem x,
                                       FieldElem y) {
  const std::uint32_t p = x.modulus();
  const FieldElem y2 = y * y;
  FieldElem prev(0, p), cur(1, p);
  for (std::uint64_t k = 1; k <= r; ++k) {
    FieldElem next = x * cur - y2 * prev;
    prev = cur;
    cur = next;
  }
  return {prev, cur};
}

void push_all_t(std::vector<BruhatForm>& out, const PrimeField& F,
                FieldElem a) {
  for (const FieldElem t : F.elements()) out.push_back(Borel{a, t});
}

}  // namespace

std::string to_string(RootMethod m) {
  switch (m) {
    case RootMethod::borel_case:
      return "borel-case";
    case RootMethod::cell_small_n:
      return "cell-small-n";
    case RootMethod::cell_general:
      return "cell-general";
    case RootMethod::bivariate_system:
      return "bivariate-system";
    case RootMethod::exhaustive:
      return "exhaustive";
  }
  return "unknown";
}

std::vector<BruhatForm> RootSolution::forms() const {
  std::vector<BruhatForm> out;
  out.reserve(roots.size());
  for (const Root& r : roots) out.push_back(r.x);
  return out;
}

std::vector<BruhatForm> roots_in_borel(const Borel& g, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("root degree must be positive");
  const std::uint32_t p = g.alpha.modulus();
  const PrimeField F(p);
  std::vector<BruhatForm> out;
  const bool unipotent_sign = g.alpha.is_one() || (-g.alpha).is_one();
  for (const FieldElem a : nth_roots_in_field(g.alpha, n)) {
    if (unipotent_sign) {
      // S_n(α, a)·t = ψ·a^{2(n-1)}.
      const BiPoly S = s_poly(static_cast<int>(n), g.alpha.is_one() ? 1 : -1);
      const FieldElem lhs = S.evaluate(a, a);
      const FieldElem rhs = g.psi * a.pow(2 * (n - 1));
      if (!lhs.is_zero()) {
        out.push_back(Borel{a, rhs / lhs});
      } else if (rhs.is_zero()) {
        push_all_t(out, F, a);
      }
    } else {
      const FieldElem w = (a * a).inverse();
      out.push_back(Borel{a, (F.one() - w) / (F.one() - w.pow(n)) * g.psi});
    }
  }
  sort_unique(out);
  return out;
}

std::vector<BruhatForm> borel_roots_in_cell(const Borel& g, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("root degree must be positive");
  if (n >= 5) return borel_roots_in_cell_general(g, n);
  const PrimeField F(g.alpha.modulus());
  const bool is_one = g.alpha.is_one() && g.psi.is_zero();
  const bool is_minus_one = (-g.alpha).is_one() && g.psi.is_zero();
  std::vector<BruhatForm> out;
  const auto elems = F.elements();
  const auto units = F.units();
  switch (n) {
    case 1:
      break;
    case 2:
      if (is_minus_one)
        for (const FieldElem t : elems)
          for (const FieldElem a : units) out.push_back(Cell{t, a, -t});
      break;
    case 3:
      if (is_one || is_minus_one) {
        const FieldElem sign = is_one ? F.one() : -F.one();
        for (const FieldElem s : elems)
          for (const FieldElem a : units) out.push_back(Cell{sign * a - s, a, s});
      }
      break;
    case 4:
      if (is_one) {
        for (const FieldElem t : elems)
          for (const FieldElem a : units) out.push_back(Cell{t, a, -t});
      } else if (is_minus_one) {
        for (const FieldElem gamma : nth_roots_in_field(F(2), 2))
          for (const FieldElem t : elems)
            for (const FieldElem a : units)
              out.push_back(Cell{t, a, -t + gamma * a});
      }
      break;
  }
  sort_unique(out);
  return out;
}

std::vector<BruhatForm> borel_roots_in_cell_general(const Borel& g,
                                                    std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("root degree must be positive");
  const std::uint32_t p = g.alpha.modulus();
  const PrimeField F(p);
  const FieldElem alpha = g.alpha;
  const bool alpha_pm_one = (alpha * alpha).is_one();
  std::vector<BruhatForm> out;

  for (std::uint64_t r = 2; r <= n; ++r) {
    if (n % r != 0) continue;
    const std::uint64_t d = n / r;
    for (const FieldElem X : F.elements()) {
      for (const FieldElem Y : F.units()) {
        // r must be the first index with f_{r-1}(X, Y) = 0.
        const FieldElem y2 = Y * Y;
        FieldElem prev(0, p), cur(1, p);  // f_{-1}, f_0
        FieldElem f_rm3 = prev;           // f_{r-3}
        bool minimal = true;
        for (std::uint64_t k = 1; k <= r - 1; ++k) {
          if (k == r - 2) f_rm3 = cur;
          FieldElem next = X * cur - y2 * prev;
          prev = cur;
          cur = next;
          if (k < r - 1 && cur.is_zero()) {
            minimal = false;
            break;
          }
        }
        if (!minimal || !cur.is_zero()) continue;

        // f_{r-3}^d = (-1)^{d(r-1)} α X^d Y^{d(r-4)}, with negative powers of
        // Y moved to the left-hand side.
        FieldElem lhs = f_rm3.pow(d);
        FieldElem rhs = sign_elem(d * (r - 1), p) * alpha * X.pow(d);
        if (r >= 4)
          rhs *= Y.pow(d * (r - 4));
        else
          lhs *= Y.pow(d * (4 - r));
        if (lhs != rhs) continue;

        std::vector<FieldElem> ts;
        if (!alpha_pm_one) {
          ts.push_back(g.psi / ((alpha * alpha).inverse() - F.one()));
        } else if (g.psi.is_zero()) {
          ts = F.elements();
        }
        for (const FieldElem t : ts) {
          const BruhatForm x = Cell{t, Y, X - t};
          if (power_bruhat(x, n) == BruhatForm(g)) out.push_back(x);
        }
      }
    }
  }
  sort_unique(out);
  return out;
}

std::vector<BruhatForm> roots_of_cell(const Cell& g, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("root degree must be positive");
  if (n == 1) return {g};
  const std::uint32_t p = g.alpha.modulus();
  const PrimeField F(p);
  const FieldElem sum = g.tau + g.psi;
  const FieldElem two_alpha = F(2) * g.alpha;
  std::vector<BruhatForm> out;
  for (const FieldElem X : F.elements()) {
    for (const FieldElem Y : F.units()) {
      const auto [fn2, fn1] = f_pair(n - 1, X, Y);
      const FieldElem yn2 = Y.pow(n - 2);
      // α f_{n-1} + (-1)^n Y^n = 0
      if (!(g.alpha * fn1 + sign_elem(n, p) * yn2 * Y * Y).is_zero()) continue;
      // 2α f_{n-2} + (-1)^{n-2} X Y^{n-2} + (-1)^{n-1} (τ+ψ) Y^{n-2} = 0
      if (!(two_alpha * fn2 + sign_elem(n - 2, p) * X * yn2 +
            sign_elem(n - 1, p) * sum * yn2)
               .is_zero())
        continue;
      const FieldElem t = g.tau + Y * Y * fn2 / fn1;
      out.push_back(Cell{t, Y, X - t});
    }
  }
  sort_unique(out);
  return out;
}

std::vector<BruhatForm> sqrt_sl2(const BruhatForm& g) {
  const std::uint32_t p = modulus_of(g);
  const PrimeField F(p);
  std::vector<BruhatForm> out;
  if (const auto* b = std::get_if<Borel>(&g)) {
    const FieldElem alpha = b->alpha, psi = b->psi;
    if (alpha.is_one()) {
      const FieldElem t = psi / F(2);
      out.push_back(Borel{F.one(), t});
      out.push_back(Borel{-F.one(), t});
    } else if ((-alpha).is_one()) {
      if (psi.is_zero()) {
        for (const FieldElem a : nth_roots_in_field(alpha, 2)) push_all_t(out, F, a);
        for (const FieldElem t : F.elements())
          for (const FieldElem a : F.units()) out.push_back(Cell{t, a, -t});
      }
    } else {
      for (const FieldElem a : nth_roots_in_field(alpha, 2))
        out.push_back(Borel{a, alpha * psi / (F.one() + alpha)});
    }
  } else {
    const auto& c = std::get<Cell>(g);
    const FieldElem sum = c.tau + c.psi;
    const FieldElem k = F(2) - sum / c.alpha;
    if (!k.is_zero()) {
      const FieldElem X = sum - F(2) * c.alpha;
      for (const FieldElem r : nth_roots_in_field(k, 2)) {
        const FieldElem Y = c.alpha * r;
        const FieldElem t = c.tau + Y * Y / X;
        out.push_back(Cell{t, Y, X - t});
      }
    }
  }
  sort_unique(out);
  return out;
}

std::vector<BruhatForm> cbrt_sl2(const BruhatForm& g) {
  const std::uint32_t p = modulus_of(g);
  if (p == 3) return roots_exhaustive(g, 3);
  const PrimeField F(p);
  std::vector<BruhatForm> out;
  if (const auto* b = std::get_if<Borel>(&g)) {
    const FieldElem alpha = b->alpha, psi = b->psi;
    if ((alpha * alpha).is_one()) {
      const FieldElem sigma = alpha;
      out.push_back(Borel{sigma, psi / F(3)});
      if (psi.is_zero()) {
        for (const FieldElem a : nth_roots_in_field(sigma, 3))
          if (a != sigma) push_all_t(out, F, a);
        for (const FieldElem s : F.elements())
          for (const FieldElem a : F.units())
            out.push_back(Cell{sigma * a - s, a, s});
      }
    } else {
      for (const FieldElem a : nth_roots_in_field(alpha, 3)) {
        const FieldElem ai = a.inverse();
        out.push_back(Borel{a, psi / (F.one() + alpha.inverse() * ai + ai * ai)});
      }
    }
  } else {
    const auto& c = std::get<Cell>(g);
    const FieldElem sum = c.tau + c.psi;
    const FieldElem k = sum / c.alpha;
    auto emit = [&](FieldElem X, FieldElem Y) {
      const FieldElem f1 = X, f2 = X * X - Y * Y;
      if (f2.is_zero()) return;
      const FieldElem t = c.tau + Y * Y * f1 / f2;
      out.push_back(Cell{t, Y, X - t});
    };
    for (const FieldElem y : F.units()) {
      // Y^3 - 3Y^2 + 4 - ((τ+ψ)/α)^2 = 0 in the scaled variable y = Y/α.
      if (!(y * y * y - F(3) * y * y + F(4) - k * k).is_zero()) continue;
      const FieldElem Y = c.alpha * y;
      if (y != F(2)) {
        emit(sum * y / (y - F(2)), Y);
      } else {
        // The linear equation degenerates; fall back to α(X² - Y²) = Y³.
        for (const FieldElem X : F.elements())
          if ((c.alpha * (X * X - Y * Y) - Y * Y * Y).is_zero()) emit(X, Y);
      }
    }
  }
  sort_unique(out);
  return out;
}

std::vector<BruhatForm> fourth_root_sl2(const BruhatForm& g) {
  const std::uint32_t p = modulus_of(g);
  const PrimeField F(p);
  std::vector<BruhatForm> out;
  if (const auto* b = std::get_if<Borel>(&g)) {
    const FieldElem alpha = b->alpha, psi = b->psi;
    if (alpha.is_one()) {
      if (psi.is_zero()) {
        out.push_back(Borel{F.one(), F.zero()});
        out.push_back(Borel{-F.one(), F.zero()});
        for (const FieldElem a : nth_roots_in_field(-F.one(), 2)) push_all_t(out, F, a);
        for (const FieldElem t : F.elements())
          for (const FieldElem a : F.units()) out.push_back(Cell{t, a, -t});
      } else {
        out.push_back(Borel{F.one(), psi / F(4)});
        out.push_back(Borel{-F.one(), psi / F(4)});
      }
    } else if ((-alpha).is_one()) {
      if (psi.is_zero()) {
        for (const FieldElem a : nth_roots_in_field(alpha, 4)) push_all_t(out, F, a);
        for (const FieldElem gamma : nth_roots_in_field(F(2), 2))
          for (const FieldElem t : F.elements())
            for (const FieldElem a : F.units())
              out.push_back(Cell{t, a, -t + gamma * a});
      }
    } else {
      for (const FieldElem a : nth_roots_in_field(alpha, 4)) {
        const FieldElem ai2 = (a * a).inverse();
        out.push_back(
            Borel{a, psi / ((F.one() + alpha.inverse()) * (F.one() + ai2))});
      }
    }
  } else {
    const auto& c = std::get<Cell>(g);
    const FieldElem sum = c.tau + c.psi;
    const FieldElem shift = sum - F(2) * c.alpha;
    const FieldElem disc = c.alpha * (F(2) * c.alpha - sum);
    std::vector<FieldElem> xs;
    for (const FieldElem r : nth_roots_in_field(disc, 2)) {
      xs.push_back(shift + F(2) * r);
      xs.push_back(shift - F(2) * r);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (const FieldElem X : xs) {
      const FieldElem y2 =
          (shift * X - sum * sum + F(4) * c.alpha * c.alpha) / F(2);
      if (y2.is_zero()) continue;
      for (const FieldElem Y : nth_roots_in_field(y2, 2)) {
        const FieldElem f2 = X * X - Y * Y;
        const FieldElem f3 = X * f2 - Y * Y * X;
        if (f3.is_zero()) continue;
        const FieldElem t = c.tau + Y * Y * f2 / f3;
        out.push_back(Cell{t, Y, X - t});
      }
    }
  }
  sort_unique(out);
  return out;
}

std::vector<BruhatForm> roots_exhaustive(const BruhatForm& g, std::uint64_t n) {
  const std::uint32_t p = modulus_of(g);
  if (p > kExhaustiveRootCap)
    throw CapExceeded("exhaustive root search capped at p <= " +
                      std::to_string(kExhaustiveRootCap));
  const Sl2Elem target = to_matrix(g);
  std::vector<BruhatForm> out;
  for (const Sl2Elem& x : enumerate_sl2(PrimeField(p)))
    if (x.pow(n) == target) out.push_back(to_bruhat(x));
  sort_unique(out);
  return out;
}

std::vector<std::vector<BruhatForm>> power_preimages(const PrimeField& F,
                                                     std::uint64_t n) {
  const std::size_t p = F.order();
  if (p > kExhaustiveRootCap)
    throw CapExceeded("exhaustive root search capped at p <= " +
                      std::to_string(kExhaustiveRootCap));
  std::vector<std::vector<BruhatForm>> table(p * p * p * p);
  // enumerate_sl2 is sorted by matrix entries, not by Bruhat form.
  for (const Sl2Elem& x : enumerate_sl2(F))
    table[element_index(x.pow(n))].push_back(to_bruhat(x));
  for (auto& v : table) std::sort(v.begin(), v.end());
  return table;
}

RootSolution nth_roots(const BruhatForm& g, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("root degree must be positive");
  const std::uint32_t p = modulus_of(g);
  if (p > kRootSolverCap)
    throw CapExceeded("root solver capped at p <= " +
                      std::to_string(kRootSolverCap));

  RootSolution sol;
  auto add = [&](const std::vector<BruhatForm>& xs, RootMethod m) {
    for (const BruhatForm& x : xs) sol.roots.push_back({x, m});
  };
  if (const auto* b = std::get_if<Borel>(&g)) {
    add(roots_in_borel(*b, n), RootMethod::borel_case);
    add(borel_roots_in_cell(*b, n),
        n <= 4 ? RootMethod::cell_small_n : RootMethod::cell_general);
  } else {
    add(roots_of_cell(std::get<Cell>(g), n), RootMethod::bivariate_system);
  }

  for (const Root& r : sol.roots)
    if (power_bruhat(r.x, n) != g)
      throw std::logic_error("root check failed for " + to_string(r.x));
  std::sort(sol.roots.begin(), sol.roots.end(),
            [](const Root& a, const Root& b) { return a.x < b.x; });

  if (n >= 2 && n <= 4) {
    const auto special = n == 2 ? sqrt_sl2(g) : n == 3 ? cbrt_sl2(g) : fourth_root_sl2(g);
    if (special != sol.forms())
      throw std::logic_error("closed-form and general root sets differ for " +
                             to_string(g) + ", n = " + std::to_string(n));
  }
  return sol;
}

}  // namespace sl2roots
