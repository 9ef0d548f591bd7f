#include <gtest/gtest.h>

#include <numeric>

#include "fsig/group.hpp"

using namespace fsig;

TEST(Group, AcceptsCoprimeWeights) {
  const GroupParams g = validate_group(7, 3);
  EXPECT_EQ(g.n, 7);
  EXPECT_EQ(g.a, 3);
  EXPECT_NO_THROW(validate_group(2, 1));
}

TEST(Group, RejectsBadWeights) {
  EXPECT_THROW(validate_group(6, 4), ValidationError);
  EXPECT_THROW(validate_group(7, 0), ValidationError);
  EXPECT_THROW(validate_group(7, 7), ValidationError);
  EXPECT_THROW(validate_group(1, 0), ValidationError);
  EXPECT_THROW(validate_group(-5, 2), ValidationError);
}

TEST(Group, CharacteristicChecks) {
  const GroupParams g = validate_group(7, 3);
  const CharacteristicParams ch = validate_characteristic(2, 5, g);
  EXPECT_EQ(ch.q, 32);
  EXPECT_EQ(validate_characteristic(3, 0, g).q, 1);
  EXPECT_THROW(validate_characteristic(7, 1, g), ValidationError);
  EXPECT_THROW(validate_characteristic(4, 1, g), ValidationError);
  EXPECT_THROW(validate_characteristic(2, -1, g), ValidationError);
  EXPECT_THROW(validate_characteristic(2, 40, g), ValidationError);
}

TEST(Group, PrimalityMatchesTrialDivision) {
  for (Int p = -3; p < 2000; ++p) {
    bool expected = p >= 2;
    for (Int d = 2; d * d <= p && expected; ++d) expected = p % d != 0;
    EXPECT_EQ(is_prime(p), expected) << p;
  }
}

TEST(Group, ModInverseAgreesWithSearch) {
  for (Int n = 2; n <= 60; ++n) {
    for (Int x = 1; x < n; ++x) {
      if (std::gcd(x, n) != 1) {
        EXPECT_THROW(mod_inverse(x, n), ValidationError);
        continue;
      }
      const Int inv = mod_inverse(x, n);
      EXPECT_GE(inv, 0);
      EXPECT_LT(inv, n);
      EXPECT_EQ((x * inv) % n, 1 % n);
    }
  }
}

TEST(Group, ModIsNonNegative) {
  EXPECT_EQ(mod(-1, 7), 6);
  EXPECT_EQ(mod(-14, 7), 0);
  EXPECT_EQ(mod(15, 7), 1);
}

TEST(Group, Gorenstein) {
  EXPECT_TRUE(is_gorenstein(validate_group(5, 4)));
  EXPECT_TRUE(is_gorenstein(validate_group(2, 1)));
  EXPECT_FALSE(is_gorenstein(validate_group(7, 3)));
}

TEST(Group, RationalRendering) {
  EXPECT_EQ(to_string(Rational(6, 14)), "3/7");
  EXPECT_EQ(to_string(Rational(5, 16)), "5/16");
  EXPECT_EQ(to_string(Rational(2)), "2/1");
  EXPECT_DOUBLE_EQ(approximate(Rational(1, 4)), 0.25);
}
