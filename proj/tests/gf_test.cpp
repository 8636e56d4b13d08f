#include <gtest/gtest.h>

#include <random>

#include "gcode/error.hpp"
#include "gcode/gf.hpp"
#include "oracles.hpp"

using namespace gcode;

namespace {

// Monic polynomial over F_p (low degree first) has no monic factor of degree <= m/2.
bool irreducible_by_trial_division(std::uint32_t p, std::vector<std::uint32_t> f) {
  const std::size_t m = f.size() - 1;
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      auto r = f;
      for (std::size_t top = m + 1; top-- > d;) {
        const std::uint32_t lead = r[top];
        if (lead == 0) continue;
        for (std::size_t i = 0; i <= d; ++i) {
          r[top - d + i] = (r[top - d + i] + p * p - lead * g[i] % p) % p;
        }
      }
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; })) return false;
    }
  }
  return true;
}

}  // namespace

TEST(FiniteField, PrimeFieldArithmetic) {
  const auto f = FiniteField::make(11);
  EXPECT_EQ(f.add(5, 9), 3u);
  EXPECT_EQ(f.inv(2), 6u);
  EXPECT_EQ(f.neg(4), 7u);
  EXPECT_EQ(f.sub(3, 5), 9u);
  EXPECT_EQ(f.div(1, 2), 6u);
  EXPECT_EQ(f.pow(2, 10), 1u);
  EXPECT_EQ(f.pow(2, -1), 6u);
  EXPECT_EQ(f.name(), "11");
  EXPECT_TRUE(f.modulus().empty());
}

TEST(FiniteField, F8UsesSmallestModulus) {
  const auto f = FiniteField::make(2, 3);
  EXPECT_EQ(f.q(), 8u);
  EXPECT_EQ(f.modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
  // x * x^2 = x^3 = x + 1
  EXPECT_EQ(f.mul(2, 4), 3u);
  EXPECT_EQ(f.name(), "2^3");
  EXPECT_EQ(f.describe(), "2^3 modulus 1 1 0 1");
}

TEST(FiniteField, ModuliAreSmallestIrreducible) {
  EXPECT_EQ(FiniteField::make(2, 2).modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(FiniteField::make(3, 2).modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(FiniteField::make(2, 4).modulus(), (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
  for (auto [p, m] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {3u, 2u}, {3u, 3u}, {5u, 2u}, {2u, 6u}}) {
    EXPECT_TRUE(irreducible_by_trial_division(p, FiniteField::make(p, m).modulus())) << p << "^" << m;
  }
}

TEST(FiniteField, Deterministic) {
  EXPECT_EQ(FiniteField::make(3, 3).modulus(), FiniteField::make(3, 3).modulus());
  EXPECT_EQ(FiniteField::of_order(27).modulus(), FiniteField::make(3, 3).modulus());
}

TEST(FiniteField, PrimitiveElements) {
  EXPECT_EQ(FiniteField::make(2).primitive_element(), 1u);
  EXPECT_EQ(FiniteField::make(11).primitive_element(), 2u);
  EXPECT_EQ(FiniteField::make(7).primitive_element(), 3u);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u, 32u, 49u, 64u}) {
    const auto f = FiniteField::of_order(q);
    EXPECT_EQ(f.primitive_element(), oracle::primitive_by_powers(f)) << q;
    EXPECT_EQ(f.multiplicative_order(f.primitive_element()), q - 1);
  }
}

TEST(FiniteField, LogExpRoundTrip) {
  const auto f = FiniteField::of_order(16);
  for (Rep a = 1; a < 16; ++a) EXPECT_EQ(f.exp(f.log(a)), a);
  EXPECT_EQ(f.exp(-1), f.inv(f.primitive_element()));
}

TEST(FiniteField, AxiomsExhaustiveSmall) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    const auto f = FiniteField::of_order(q);
    for (Rep a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      for (Rep b = 0; b < q; ++b) {
        ASSERT_EQ(f.add(a, b), f.add(b, a));
        ASSERT_EQ(f.mul(a, b), f.mul(b, a));
        ASSERT_EQ(f.sub(f.add(a, b), b), a);
        for (Rep c = 0; c < q; ++c) {
          ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
          ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST(FiniteField, AxiomsRandomLarge) {
  std::mt19937 rng(7);
  for (std::uint32_t q : {243u, 256u, 343u, 1024u, 2187u, 4096u}) {
    const auto f = FiniteField::of_order(q);
    std::uniform_int_distribution<Rep> pick(0, q - 1);
    for (int t = 0; t < 2000; ++t) {
      const Rep a = pick(rng), b = pick(rng), c = pick(rng);
      ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
    }
  }
}

TEST(FiniteField, InversesExhaustive) {
  for (std::uint32_t q : {2u, 4u, 8u, 9u, 16u, 27u, 49u, 64u, 81u, 125u, 128u, 243u, 256u}) {
    const auto f = FiniteField::of_order(q);
    for (Rep a = 1; a < q; ++a) ASSERT_EQ(f.mul(a, f.inv(a)), 1u) << q << " " << a;
  }
}

TEST(FiniteField, Errors) {
  EXPECT_THROW(FiniteField::make(4), std::invalid_argument);
  EXPECT_THROW(FiniteField::make(2, 0), std::invalid_argument);
  EXPECT_THROW(FiniteField::make(2, 13), CapExceeded);
  EXPECT_THROW(FiniteField::of_order(6), std::invalid_argument);
  EXPECT_THROW(FiniteField::make(5).inv(0), std::domain_error);
  EXPECT_EQ(prime_power(49), (std::pair<std::uint32_t, std::uint32_t>{7, 2}));
  EXPECT_EQ(prime_power(12), (std::pair<std::uint32_t, std::uint32_t>{0, 0}));
}

TEST(FieldElement, Operators) {
  const auto f = FiniteField::make(11);
  const FieldElement a(f, 5), b(f, 9);
  EXPECT_EQ((a + b).rep(), 3u);
  EXPECT_EQ((a * b).rep(), 1u);
  EXPECT_EQ((a / a).rep(), 1u);
  EXPECT_EQ((-a).rep(), 6u);
  EXPECT_EQ(FieldElement(f, 2).inv().rep(), 6u);
  EXPECT_THROW(FieldElement(f, 11), std::invalid_argument);
  EXPECT_THROW(a + FieldElement(FiniteField::make(7), 1), std::invalid_argument);
  EXPECT_THROW(a / FieldElement(f, 0), std::domain_error);
}
