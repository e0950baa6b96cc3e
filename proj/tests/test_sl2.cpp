#include <gtest/gtest.h>

#include <map>
#include <set>

#include "sl2roots/sl2.hpp"

using namespace sl2roots;

TEST(Sl2Elem, DeterminantChecked) {
  const PrimeField F(5);
  EXPECT_THROW(Sl2Elem(F(1), F(1), F(1), F(1)), std::invalid_argument);
  EXPECT_NO_THROW(Sl2Elem(F(1), F(1), F(1), F(2)));
}

TEST(Sl2Elem, WireRoundTrip) {
  const PrimeField F(7);
  const Sl2Elem g = parse_wire(F, "1,-1,0,1");
  EXPECT_EQ(g.to_wire(), "1,6,0,1");
  EXPECT_EQ(parse_wire(F, g.to_wire()), g);
  EXPECT_THROW(parse_wire(F, "1,2,3"), std::invalid_argument);
  EXPECT_THROW(parse_wire(F, "1,2,3,x"), std::invalid_argument);
  EXPECT_THROW(parse_wire(F, "1,1,1,1"), std::invalid_argument);
}

TEST(Sl2Elem, GroupOrder) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    EXPECT_EQ(enumerate_sl2(PrimeField(p)).size(), group_order(p));
  }
  EXPECT_EQ(group_order(7), 336u);
}

TEST(Generators, NElementShape) {
  const PrimeField F(7);
  for (FieldElem a : F.units()) {
    EXPECT_EQ(n_elem(a), x12(a) * x21(-a.inverse()) * x12(a));
    EXPECT_EQ(n_elem(a), Sl2Elem(F(0), a, -a.inverse(), F(0)));
  }
}

TEST(Bruhat, Examples) {
  const PrimeField F5(5);
  EXPECT_EQ(to_bruhat(Sl2Elem::identity(F5)), BruhatForm(Borel{F5(1), F5(0)}));
  EXPECT_EQ(to_bruhat(n_elem(F5(1))), BruhatForm(Cell{F5(0), F5(1), F5(0)}));
  EXPECT_EQ(to_bruhat(parse_wire(F5, "1,1,1,2")), BruhatForm(Cell{F5(1), F5(4), F5(2)}));
}

TEST(Bruhat, RoundTripWholeGroup) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (const Sl2Elem& g : enumerate_sl2(PrimeField(p))) {
      const BruhatForm x = to_bruhat(g);
      EXPECT_EQ(to_matrix(x), g);
      EXPECT_EQ(is_borel(x), g.is_upper_triangular());
    }
  }
}

TEST(Bruhat, CellMatrixIsProductOfFactors) {
  const PrimeField F(7);
  const Cell c{F(3), F(5), F(2)};
  EXPECT_EQ(to_matrix(c), x12(F(3)) * n_elem(F(5)) * x12(F(2)));
  const Borel b{F(3), F(4)};
  EXPECT_EQ(to_matrix(b), h(F(3)) * x12(F(4)));
}

TEST(Mul, PrintedExamples) {
  const PrimeField F(7);
  EXPECT_EQ(mul(Borel{F(2), F(3)}, Borel{F(4), F(5)}),
            BruhatForm(Borel{F(8), F(4).pow_signed(-2) * F(3) + F(5)}));
  EXPECT_EQ(mul(Cell{F(0), F(1), F(0)}, Cell{F(0), F(1), F(0)}),
            BruhatForm(Borel{F(-1), F(0)}));
  const Cell c{F(1), F(1), F(1)};
  EXPECT_EQ(to_matrix(mul(c, c)), to_matrix(c) * to_matrix(c));
}

// Every product in SL2(F_5) and SL2(F_3), against matrix multiplication.
TEST(Mul, MatchesMatrixProductExhaustively) {
  for (std::uint32_t p : {3u, 5u}) {
    const auto G = enumerate_sl2(PrimeField(p));
    for (const Sl2Elem& g : G) {
      const BruhatForm x = to_bruhat(g);
      for (const Sl2Elem& k : G) {
        ASSERT_EQ(mul(x, to_bruhat(k)), to_bruhat(g * k)) << g.to_wire() << " * " << k.to_wire();
      }
    }
  }
}

TEST(Power, PrintedExamples) {
  const PrimeField F(11);
  for (FieldElem a : F.units()) {
    for (FieldElem t : F.elements()) {
      EXPECT_EQ(power_bruhat(Cell{t, a, -t}, 2), BruhatForm(Borel{F(-1), F(0)}));
      const FieldElem w = a.pow_signed(-2);
      EXPECT_EQ(power_bruhat(Borel{a, t}, 3),
                BruhatForm(Borel{a.pow(3), (F(1) + w + w * w) * t}));
    }
  }
  const BruhatForm c = Cell{F(1), F(1), F(1)};
  BruhatForm acc = c;
  for (int i = 1; i < 7; ++i) acc = mul(acc, c);
  EXPECT_EQ(power_bruhat(c, 7), acc);
  EXPECT_THROW(power_bruhat(c, 0), std::invalid_argument);
}

TEST(Power, MatchesRepeatedMultiplication) {
  const auto G = enumerate_sl2(PrimeField(7));
  for (const Sl2Elem& g : G) {
    const BruhatForm x = to_bruhat(g);
    BruhatForm acc = x;
    for (std::uint64_t n = 1; n <= 24; ++n) {
      ASSERT_EQ(power_bruhat(x, n), acc) << g.to_wire() << " ^ " << n;
      acc = mul(acc, x);
    }
  }
}

TEST(Power, LargeExponents) {
  const PrimeField F(13);
  for (const Sl2Elem& g : {parse_wire(F, "1,1,1,2"), parse_wire(F, "0,1,12,5"),
                           parse_wire(F, "3,0,0,9"), parse_wire(F, "12,4,0,12")}) {
    for (std::uint64_t n : {100ull, 1000003ull, (1ull << 62) + 7}) {
      EXPECT_EQ(to_matrix(power_bruhat(to_bruhat(g), n)), g.pow(n));
    }
  }
}

TEST(SmallestBorelPower, Examples) {
  const PrimeField F(7);
  EXPECT_EQ(smallest_borel_power(Cell{F(3), F(2), F(-3)}), 2u);
  EXPECT_EQ(smallest_borel_power(Cell{F(0), F(2), F(2)}), 3u);
  EXPECT_EQ(smallest_borel_power(Cell{F(0), F(2), F(-2)}), 3u);
  EXPECT_THROW(smallest_borel_power(Borel{F(1), F(0)}), std::invalid_argument);
}

TEST(SmallestBorelPower, MatchesScan) {
  for (std::uint32_t p : {5u, 7u, 11u}) {
    for (const Sl2Elem& g : enumerate_sl2(PrimeField(p))) {
      if (g.is_upper_triangular()) continue;
      std::optional<std::uint64_t> expected;
      Sl2Elem acc = g;
      for (std::uint64_t r = 1; r <= 2 * p + 2; ++r, acc = acc * g) {
        if (acc.is_upper_triangular()) {
          expected = r;
          break;
        }
      }
      ASSERT_EQ(smallest_borel_power(to_bruhat(g)), expected) << g.to_wire();
    }
  }
}

TEST(Classify, Examples) {
  const PrimeField F(7);
  EXPECT_EQ(classify(Sl2Elem::identity(F)), ClassType(Central{1}));
  EXPECT_EQ(classify(h(F(2))), ClassType(SplitRegular{F(2)}));
  EXPECT_EQ(classify(h(F(4))), ClassType(SplitRegular{F(2)}));
  for (FieldElem d : F.elements()) {
    if (F.is_square(d * d - F(4))) continue;
    EXPECT_EQ(classify(n_elem(F(-1)) * x12(d)), ClassType(Anisotropic{d}));
  }
}

TEST(ClassTable, CountsAndSizes) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const PrimeField F(p);
    const auto table = class_table(F);
    EXPECT_EQ(table.size(), p + 4u);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
      total += table[i].size;
      EXPECT_EQ(classify(table[i].representative), table[i].type);
      EXPECT_EQ(class_index(table[i].type, F), i);
      EXPECT_EQ(class_size(table[i].type, p), table[i].size);
    }
    EXPECT_EQ(total, group_order(p));
  }
}

// Orbits under conjugation, computed directly, must match classify().
TEST(ClassTable, ClassifyMatchesConjugationOrbits) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const PrimeField F(p);
    const auto G = enumerate_sl2(F);
    std::set<Sl2Elem> seen;
    std::size_t orbits = 0;
    for (const Sl2Elem& g : G) {
      if (seen.count(g)) continue;
      ++orbits;
      std::set<Sl2Elem> orbit;
      for (const Sl2Elem& k : G) orbit.insert(k * g * k.inverse());
      const ClassType t = classify(g);
      for (const Sl2Elem& y : orbit) {
        ASSERT_EQ(classify(y), t) << y.to_wire() << " vs " << g.to_wire();
      }
      EXPECT_EQ(orbit.size(), class_size(t, p)) << to_string(t);
      seen.insert(orbit.begin(), orbit.end());
    }
    EXPECT_EQ(orbits, p + 4u);
  }
}

TEST(ClassTable, NamesAndOrder) {
  const auto table = class_table(PrimeField(5));
  ASSERT_EQ(table.size(), 9u);
  EXPECT_EQ(to_string(table[0].type), "Central(+1)");
  EXPECT_EQ(to_string(table[1].type), "Central(-1)");
  EXPECT_EQ(kind_of(table[2].type), ClassKind::split);
  EXPECT_EQ(kind_of(table[3].type), ClassKind::nonsemisimple);
  EXPECT_EQ(kind_of(table[8].type), ClassKind::anisotropic);
}
