#include <gtest/gtest.h>

#include <numeric>

#include "fsig/monomial_module.hpp"

using namespace fsig;

namespace {

// Minimal generators by brute force: every monomial of weight t in a box
// that certainly contains them, minus those divisible by another one.
std::vector<Exponent> brute_force_generators(Int t, const GroupParams& g) {
  std::vector<Exponent> members;
  for (Int i = 0; i <= g.n; ++i) {
    for (Int j = 0; j <= g.n; ++j) {
      if (mod(i + j * g.a, g.n) == t) members.push_back({i, j});
    }
  }
  std::vector<Exponent> gens;
  for (const Exponent& m : members) {
    bool minimal = true;
    for (const Exponent& d : members) {
      if (d != m && d.i <= m.i && d.j <= m.j) {
        minimal = false;
        break;
      }
    }
    if (minimal) gens.push_back(m);
  }
  return gens;
}

std::vector<Exponent> sorted(std::vector<Exponent> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(MonomialModule, SevenThreeGenerators) {
  const GroupParams g = validate_group(7, 3);
  EXPECT_EQ(minimal_generators(0, g).mingens, (std::vector<Exponent>{{0, 0}}));
  EXPECT_EQ(minimal_generators(1, g).mingens, (std::vector<Exponent>{{1, 0}, {0, 5}}));
  EXPECT_EQ(minimal_generators(2, g).mingens, (std::vector<Exponent>{{2, 0}, {0, 3}}));
  EXPECT_EQ(minimal_generators(3, g).mingens, (std::vector<Exponent>{{3, 0}, {0, 1}}));
  EXPECT_EQ(minimal_generators(4, g).mingens, (std::vector<Exponent>{{4, 0}, {1, 1}, {0, 6}}));
}

TEST(MonomialModule, MatchesBruteForce) {
  for (Int n = 2; n <= 36; ++n) {
    for (Int a = 1; a < n; ++a) {
      if (std::gcd(n, a) != 1) continue;
      const GroupParams g{n, a};
      for (Int t = 0; t < n; ++t) {
        const MonomialModule m = minimal_generators(t, g);
        EXPECT_EQ(sorted(m.mingens), sorted(brute_force_generators(t, g)))
            << n << "," << a << " t=" << t;
        EXPECT_EQ(num_generators(t, g), m.num_generators());
        for (const Exponent& x : m.mingens) EXPECT_EQ(weight(x, g), t);
      }
    }
  }
}

TEST(MonomialModule, MonomialStrings) {
  EXPECT_EQ(monomial_string({0, 0}), "1");
  EXPECT_EQ(monomial_string({1, 0}), "x");
  EXPECT_EQ(monomial_string({0, 5}), "y^5");
  EXPECT_EQ(monomial_string({4, 1}), "x^4y");
  EXPECT_EQ(monomial_string({2, 3}), "x^2y^3");
}

TEST(MonomialModule, HomsHaveDifferenceWeight) {
  const GroupParams g = validate_group(7, 3);
  for (Int s = 0; s < 7; ++s) {
    for (Int t = 0; t < 7; ++t) {
      const MonomialModule h = hom_monomials(s, t, g);
      EXPECT_EQ(h.mingens, minimal_generators(mod(t - s, 7), g).mingens);
    }
  }
}

TEST(MonomialModule, InducedMatrixOfMultiplication) {
  const GroupParams g = validate_group(7, 3);
  // x: M_1 -> M_2 sends x -> x^2 and y^5 -> x y^5, which lies in m M_2.
  const InducedMatrix im = induced_matrix({1, 0}, 1, 2, g);
  ASSERT_EQ(im.rows, 2);
  ASSERT_EQ(im.cols, 2);
  EXPECT_EQ(im.at(0, 0), 1);
  EXPECT_EQ(im.at(1, 0), 0);
  EXPECT_EQ(im.at(0, 1), 0);
  EXPECT_EQ(im.at(1, 1), 0);
  // 1: M_2 -> M_2 is the identity.
  const InducedMatrix id = induced_matrix({0, 0}, 2, 2, g);
  EXPECT_EQ(id.at(0, 0), 1);
  EXPECT_EQ(id.at(1, 1), 1);
  EXPECT_EQ(id.at(0, 1), 0);
  EXPECT_THROW(induced_matrix({1, 0}, 1, 3, g), ValidationError);
}

TEST(MonomialModule, RejectsBadLabel) {
  const GroupParams g = validate_group(7, 3);
  EXPECT_THROW(minimal_generators(7, g), ValidationError);
  EXPECT_THROW(minimal_generators(-1, g), ValidationError);
  EXPECT_EQ(all_modules(g).size(), 7u);
}
