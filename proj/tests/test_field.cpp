#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace blockbiset;

namespace {

const std::vector<std::pair<int, int>> kFields{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1},
                                               {3, 2}, {3, 4}, {5, 1}, {5, 2}, {7, 1}};

/// Remainder of f modulo the monic g over Z/p, coefficients low to high.
std::vector<int> poly_rem(std::vector<int> f, const std::vector<int>& g, int p)
{
  const int dg = static_cast<int>(g.size()) - 1;
  for (int d = static_cast<int>(f.size()) - 1; d >= dg; --d) {
    int c = ((f[d] % p) + p) % p;
    for (int i = 0; i <= dg; ++i)
      f[d - dg + i] = (((f[d - dg + i] - c * g[i]) % p) + p) % p;
  }
  f.resize(dg);
  return f;
}

/// Irreducible iff no monic polynomial of degree 1..deg/2 divides it.
bool irreducible_by_trial_division(const std::vector<int>& f, int p)
{
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i)
      count *= p;
    for (int code = 0; code < count; ++code) {
      std::vector<int> g(d + 1);
      int v = code;
      for (int i = 0; i < d; ++i) {
        g[i] = v % p;
        v /= p;
      }
      g[d] = 1;
      auto r = poly_rem(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](int x) { return x == 0; }))
        return false;
    }
  }
  return true;
}

}  // namespace

TEST(GaloisField, ModulusIsSmallestIrreducible)
{
  for (auto [p, m] : kFields) {
    GaloisField F(p, m);
    ASSERT_EQ(F.modulus().size(), static_cast<std::size_t>(m + 1));
    EXPECT_EQ(F.modulus().back(), 1);
    EXPECT_TRUE(irreducible_by_trial_division(F.modulus(), p)) << F.describe();
    if (m == 1)
      continue;
    // no smaller code gives an irreducible polynomial
    std::uint32_t code = 0;
    for (int i = m - 1; i >= 0; --i)
      code = code * p + F.modulus()[i];
    for (std::uint32_t c = 0; c < code; ++c) {
      std::vector<int> f(m + 1);
      std::uint32_t v = c;
      for (int i = 0; i < m; ++i) {
        f[i] = static_cast<int>(v % p);
        v /= p;
      }
      f[m] = 1;
      EXPECT_FALSE(irreducible_by_trial_division(f, p)) << F.describe() << " code " << c;
    }
  }
}

TEST(GaloisField, TablesAgreeWithPolynomialProduct)
{
  for (auto [p, m] : kFields) {
    GaloisField F(p, m);
    for (std::uint32_t a = 0; a < F.size(); ++a)
      for (std::uint32_t b = 0; b < F.size(); ++b)
        ASSERT_EQ(F.mul({a}, {b}), F.mul_reference({a}, {b})) << F.describe() << " " << a << "*" << b;
  }
}

TEST(GaloisField, AdditionIsCoefficientwise)
{
  for (auto [p, m] : kFields) {
    GaloisField F(p, m);
    for (std::uint32_t a = 0; a < F.size(); ++a)
      for (std::uint32_t b = 0; b < F.size(); ++b) {
        auto ca = F.coefficients({a});
        auto cb = F.coefficients({b});
        for (int i = 0; i < m; ++i)
          ca[i] = (ca[i] + cb[i]) % p;
        ASSERT_EQ(F.add({a}, {b}), F.from_coefficients(ca)) << F.describe();
      }
  }
}

TEST(GaloisField, FieldAxioms)
{
  std::mt19937 rng(7);
  for (auto [p, m] : kFields) {
    GaloisField F(p, m);
    std::uniform_int_distribution<std::uint32_t> pick(0, F.size() - 1);
    for (int t = 0; t < 500; ++t) {
      FieldElement a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
      EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      EXPECT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
      EXPECT_EQ(F.add(a, F.neg(a)), GaloisField::zero());
      EXPECT_EQ(F.sub(F.add(a, b), b), a);
      EXPECT_EQ(F.pow(a, F.size()), a);
      if (!F.is_zero(a)) {
        EXPECT_EQ(F.mul(a, F.inv(a)), GaloisField::one());
        EXPECT_EQ(F.div(F.mul(b, a), a), b);
      }
    }
    EXPECT_EQ(F.from_int(p), GaloisField::zero());
    EXPECT_EQ(F.from_int(-1), F.neg(GaloisField::one()));
    EXPECT_THROW(F.inv(GaloisField::zero()), std::domain_error);
  }
}

TEST(GaloisField, MultiplicativeGroupIsCyclic)
{
  for (auto [p, m] : kFields) {
    GaloisField F(p, m);
    const std::uint32_t n = F.size() - 1;
    bool found = false;
    for (std::uint32_t g = 1; g < F.size() && !found; ++g) {
      std::uint32_t ord = 1;
      for (FieldElement x{g}; x != GaloisField::one(); x = F.mul_reference(x, {g}))
        ++ord;
      found = ord == n;
    }
    EXPECT_TRUE(found) << F.describe();
  }
}

TEST(GaloisField, RejectsBadParameters)
{
  EXPECT_THROW(GaloisField(4, 1), std::invalid_argument);
  EXPECT_THROW(GaloisField(2, 0), std::invalid_argument);
}

TEST(SplittingField, DegreeIsOrderOfPModuloExponent)
{
  using oracle::catalog_group;
  EXPECT_EQ(splitting_field(catalog_group("A5"), 2).m, 4);
  EXPECT_EQ(splitting_field(catalog_group("A5"), 3).m, 4);
  EXPECT_EQ(splitting_field(catalog_group("A5"), 5).m, 2);
  EXPECT_EQ(splitting_field(catalog_group("S3"), 3).m, 1);
  EXPECT_EQ(splitting_field(catalog_group("S3"), 2).m, 2);
  EXPECT_EQ(splitting_field(catalog_group("S4"), 3).m, 2);
  EXPECT_EQ(splitting_field(catalog_group("C9"), 3).m, 1);
  EXPECT_EQ(splitting_field(catalog_group("A5"), 2).p_prime_exponent, 15);
}
