#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "pgq/gf.hpp"

using pgq::Field;
using pgq::FieldElement;
using pgq::FieldErrc;

namespace {

FieldErrc error_of(std::uint32_t p, unsigned k) {
  try {
    Field f(p, k);
  } catch (const pgq::field_error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for p=" << p << " k=" << k;
  return FieldErrc::not_prime_power;
}

}  // namespace

TEST(Field, PrimeFieldHasNoModulus) {
  Field f(5, 1);
  EXPECT_EQ(f.order(), 5u);
  EXPECT_TRUE(f.modulus().empty());
}

TEST(Field, RejectsBadParameters) {
  EXPECT_EQ(error_of(2, 3), FieldErrc::even_characteristic);
  EXPECT_EQ(error_of(9, 1), FieldErrc::not_prime);
  EXPECT_EQ(error_of(5, 0), FieldErrc::bad_exponent);
  EXPECT_EQ(error_of(3, 11), FieldErrc::too_large);
  EXPECT_THROW(Field::of_order(15), pgq::field_error);
  EXPECT_THROW(Field::of_order(8), pgq::field_error);
  EXPECT_THROW(Field::of_order(1), pgq::field_error);
}

// Exhaustive oracle: the reducible monic quadratics over GF(3) are exactly
// the products of two monic linears; the first remaining one in the
// (c1, c0) order is the modulus.
TEST(Field, Gf9ModulusIsFirstIrreducibleQuadratic) {
  std::set<std::vector<std::uint32_t>> reducible;
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b)  // (x + a)(x + b) = x^2 + (a+b)x + ab
      reducible.insert({(a * b) % 3, (a + b) % 3, 1});
  std::vector<std::uint32_t> first;
  for (std::uint32_t idx = 0; idx < 9 && first.empty(); ++idx) {
    std::vector<std::uint32_t> f{idx % 3, idx / 3, 1};
    if (!reducible.count(f)) first = f;
  }
  ASSERT_EQ(first, (std::vector<std::uint32_t>{1, 0, 1}));  // x^2 + 1

  Field f(3, 2);
  EXPECT_EQ(f.order(), 9u);
  EXPECT_EQ(f.modulus(), first);
}

TEST(Field, ModulusIsIrreducibleForLargerDegrees) {
  // no element of GF(p) is a root, and the multiplicative group is cyclic of order q-1
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 3}, {5, 2}, {3, 4}, {7, 2}}) {
    Field f(p, k);
    const auto& m = f.modulus();
    ASSERT_EQ(m.size(), k + 1);
    EXPECT_EQ(m.back(), 1u);
    for (std::uint32_t x = 0; x < p; ++x) {
      std::uint64_t v = 0;
      for (std::size_t i = m.size(); i-- > 0;) v = (v * x + m[i]) % p;
      EXPECT_NE(v, 0u);
    }
    EXPECT_EQ(f.multiplicative_order(f.primitive_root()), f.order() - 1);
  }
}

TEST(Field, PrimeFieldArithmetic) {
  Field f(5, 1);
  EXPECT_EQ(f.add({2}, {4}).code, 1u);
  EXPECT_EQ(f.inv({2}).code, 3u);
  EXPECT_EQ(f.neg({2}).code, 3u);
  EXPECT_EQ(f.mul({3}, {4}).code, 2u);
  EXPECT_THROW(f.inv({0}), pgq::field_error);
  try {
    f.inv({0});
  } catch (const pgq::field_error& e) {
    EXPECT_EQ(e.code(), FieldErrc::division_by_zero);
  }
}

TEST(Field, Gf9Multiplication) {
  Field f(3, 2);
  // x * x = x^2 = -1 = 2 modulo x^2 + 1
  EXPECT_EQ(f.mul({3}, {3}).code, 2u);
  EXPECT_EQ(f.mul_poly({3}, {3}).code, 2u);
  // (x+1)(x+1) = x^2 + 2x + 1 = 2x -> code 6
  EXPECT_EQ(f.mul({4}, {4}).code, 6u);
}

TEST(Field, PrimitiveRoots) {
  EXPECT_EQ(Field(5, 1).primitive_root().code, 2u);
  EXPECT_EQ(Field(3, 1).primitive_root().code, 2u);
  Field f9(3, 2);
  EXPECT_EQ(f9.primitive_root().code, 4u);  // x + 1
  // oracle: (x+1)^2 = 2x, (x+1)^4 = 2, so order 8; and codes 1..3 have smaller order
  EXPECT_EQ(f9.mul_poly({4}, {4}).code, 6u);
  EXPECT_EQ(f9.mul_poly({6}, {6}).code, 2u);
  for (std::uint32_t c = 1; c < 4; ++c) EXPECT_LT(f9.multiplicative_order({c}), 8u);
}

TEST(Field, PrimitiveRootHasExactOrder) {
  for (std::uint64_t q : {3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 81, 125, 243}) {
    Field f = Field::of_order(q);
    const FieldElement w = f.primitive_root();
    EXPECT_EQ(f.pow(w, q - 1).code, 1u);
    std::uint64_t m = q - 1;
    for (std::uint64_t r = 2; r <= m; ++r) {
      if (m % r) continue;
      EXPECT_NE(f.pow(w, (q - 1) / r).code, 1u) << "q=" << q << " r=" << r;
      while (m % r == 0) m /= r;
    }
  }
}

TEST(Field, AxiomsExhaustiveSmall) {
  for (std::uint64_t q : {3, 5, 7, 9}) {
    Field f = Field::of_order(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        const FieldElement x{a}, y{b};
        ASSERT_EQ(f.add(x, y), f.add(y, x));
        ASSERT_EQ(f.mul(x, y), f.mul(y, x));
        ASSERT_EQ(f.mul(x, y), f.mul_poly(x, y));
        for (std::uint32_t c = 0; c < q; ++c) {
          const FieldElement z{c};
          ASSERT_EQ(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
          ASSERT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
          ASSERT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
        }
      }
    }
  }
}

TEST(Field, AxiomsSampledLarger) {
  std::mt19937_64 rng(7);
  for (std::uint64_t q : {11, 13, 17, 19, 23, 25, 27, 29}) {
    Field f = Field::of_order(q);
    std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
    for (int i = 0; i < 10000; ++i) {
      const FieldElement x{pick(rng)}, y{pick(rng)}, z{pick(rng)};
      ASSERT_EQ(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
      ASSERT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
      ASSERT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
      ASSERT_EQ(f.mul(x, y), f.mul_poly(x, y));
      ASSERT_EQ(f.add(x, f.neg(x)).code, 0u);
    }
  }
}

TEST(Field, InverseIsAnInvolution) {
  for (std::uint64_t q : {3, 5, 9, 25, 27, 29}) {
    Field f = Field::of_order(q);
    for (std::uint32_t a = 1; a < q; ++a) {
      EXPECT_EQ(f.inv(f.inv({a})).code, a);
      EXPECT_EQ(f.mul(f.inv({a}), {a}).code, 1u);
    }
  }
}

TEST(Field, OrderParsing) {
  Field f = Field::of_order(27);
  EXPECT_EQ(f.characteristic(), 3u);
  EXPECT_EQ(f.degree(), 3u);
  EXPECT_EQ(Field::of_order(29).degree(), 1u);
}
