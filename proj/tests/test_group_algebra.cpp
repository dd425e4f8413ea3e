#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace blockbiset;
using oracle::catalog_group;

namespace {

GroupAlgebra algebra_over_splitting_field(const Group& G, int p)
{
  auto spec = splitting_field(G, p);
  return GroupAlgebra(G, std::make_shared<const GaloisField>(p, spec.m));
}

GroupAlgebraElement random_element(std::mt19937& rng, const GroupAlgebra& kG)
{
  std::uniform_int_distribution<std::uint32_t> pick(0, kG.field().size() - 1);
  auto x = kG.zero();
  for (auto& c : x.coeffs)
    c = FieldElement{pick(rng)};
  return x;
}

/// Number of idempotents of Z(kG), by enumerating every element.
long count_central_idempotents(const CenterAlgebra& Z)
{
  const auto q = Z.field().size();
  const int r = Z.dimension();
  std::vector<std::uint32_t> digits(r, 0);
  long count = 0;
  while (true) {
    FieldVector x(r);
    for (int i = 0; i < r; ++i)
      x[i] = FieldElement{digits[i]};
    if (Z.mul(x, x) == x)
      ++count;
    int k = 0;
    while (k < r && ++digits[k] == q)
      digits[k++] = 0;
    if (k == r)
      break;
  }
  return count;
}

}  // namespace

TEST(GroupAlgebra, RingAxioms)
{
  std::mt19937 rng(17);
  GroupAlgebra kG = algebra_over_splitting_field(catalog_group("S3"), 2);
  for (int t = 0; t < 30; ++t) {
    auto a = random_element(rng, kG), b = random_element(rng, kG), c = random_element(rng, kG);
    EXPECT_EQ(kG.mul(kG.mul(a, b), c), kG.mul(a, kG.mul(b, c)));
    EXPECT_EQ(kG.mul(a, kG.add(b, c)), kG.add(kG.mul(a, b), kG.mul(a, c)));
    EXPECT_EQ(kG.mul(kG.one(), a), a);
    for (int g = 0; g < kG.group().order(); ++g) {
      EXPECT_EQ(kG.left(g, a), kG.mul(kG.basis(g), a));
      EXPECT_EQ(kG.right(a, g), kG.mul(a, kG.basis(g)));
    }
  }
}

TEST(Center, DimensionIsClassCountAndBasisIsCentral)
{
  for (const auto& [name, p] : oracle::catalog_pairs()) {
    Group G = catalog_group(name);
    GroupAlgebra kG = algebra_over_splitting_field(G, p);
    auto basis = center_basis(kG);
    EXPECT_EQ(static_cast<int>(basis.size()), oracle::class_count(G)) << name;
    for (const auto& z : basis)
      EXPECT_TRUE(kG.is_central(z));
  }
}

TEST(Center, StructureConstantsMatchGroupAlgebraProducts)
{
  for (const char* name : {"S4", "A5", "SL(2,3)"}) {
    Group G = catalog_group(name);
    GroupAlgebra kG = algebra_over_splitting_field(G, 2);
    CenterAlgebra Z(kG);
    for (int i = 0; i < Z.dimension(); ++i)
      for (int j = 0; j < Z.dimension(); ++j) {
        auto lhs = kG.mul(Z.to_group_algebra(Z.unit(i), G.order()),
                          Z.to_group_algebra(Z.unit(j), G.order()));
        auto rhs = Z.to_group_algebra(Z.mul(Z.unit(i), Z.unit(j)), G.order());
        EXPECT_EQ(lhs, rhs) << name;
      }
  }
}

TEST(Blocks, OrthogonalCentralIdempotentsSummingToOne)
{
  for (const auto& [name, p] : oracle::catalog_pairs()) {
    Group G = catalog_group(name);
    GroupAlgebra kG = algebra_over_splitting_field(G, p);
    auto blocks = block_idempotents(kG);
    auto total = kG.zero();
    int dims = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const auto& b = blocks[i].idempotent;
      EXPECT_TRUE(kG.is_central(b));
      total = kG.add(total, b);
      dims += blocks[i].dimension;
      EXPECT_EQ(blocks[i].dimension, summand_dimension(kG, b));
      for (std::size_t j = 0; j < blocks.size(); ++j)
        EXPECT_EQ(kG.mul(b, blocks[j].idempotent), i == j ? b : kG.zero()) << name << " " << p;
    }
    EXPECT_EQ(total, kG.one()) << name << " " << p;
    EXPECT_EQ(dims, G.order());
    ASSERT_FALSE(blocks.empty());
    EXPECT_TRUE(blocks.front().is_principal);
    EXPECT_EQ(kG.augmentation(blocks.front().idempotent), GaloisField::one());
    for (std::size_t i = 1; i < blocks.size(); ++i)
      EXPECT_FALSE(blocks[i].is_principal);
  }
}

// Z(kG) is a product of local rings, one per block, so it has exactly
// 2^(number of blocks) idempotents. Counting them by enumeration certifies
// that the blocks found are primitive and complete.
TEST(Blocks, CountMatchesIdempotentEnumeration)
{
  const std::vector<std::pair<std::string, int>> cases{
      {"S3", 2}, {"A4", 3}, {"S4", 3}, {"D12", 3}, {"D12", 2}, {"C3xS3", 2}, {"A5", 2}};
  for (const auto& [name, p] : cases) {
    GroupAlgebra kG = algebra_over_splitting_field(catalog_group(name), p);
    CenterAlgebra Z(kG);
    const long idempotents = count_central_idempotents(Z);
    const auto blocks = block_idempotents(kG);
    EXPECT_EQ(idempotents, 1L << blocks.size()) << name << " " << p;
  }
}

TEST(Blocks, KnownDimensions)
{
  auto dims = [](const std::string& name, int p) {
    std::vector<int> out;
    for (const auto& b : block_idempotents(algebra_over_splitting_field(catalog_group(name), p)))
      out.push_back(b.dimension);
    return out;
  };
  EXPECT_EQ(dims("A5", 2), (std::vector<int>{44, 16}));
  EXPECT_EQ(dims("S4", 3), (std::vector<int>{6, 9, 9}));
  EXPECT_EQ(dims("S4", 2), (std::vector<int>{24}));
  EXPECT_EQ(dims("C3", 3), (std::vector<int>{3}));
  EXPECT_EQ(dims("S3", 2), (std::vector<int>{2, 4}));
}

TEST(Blocks, PrimeNotDividingOrderGivesMatrixBlocks)
{
  // kS3 over GF(5) is split semisimple: blocks of dimension 1, 1, 4.
  Group G = catalog_group("S3");
  GroupAlgebra kG(G, std::make_shared<const GaloisField>(5, 1));
  std::vector<int> dims;
  for (const auto& b : block_idempotents(kG))
    dims.push_back(b.dimension);
  EXPECT_EQ(dims, (std::vector<int>{1, 4, 1}));
}

TEST(Blocks, StableUnderFieldExtension)
{
  for (const auto& [name, p] : oracle::catalog_pairs()) {
    Group G = catalog_group(name);
    if (G.order() > 60)
      continue;
    const int m = splitting_field(G, p).m;
    GroupAlgebra small(G, std::make_shared<const GaloisField>(p, m));
    GroupAlgebra big(G, std::make_shared<const GaloisField>(p, 2 * m));
    auto a = block_idempotents(small);
    auto b = block_idempotents(big);
    ASSERT_EQ(a.size(), b.size()) << name << " " << p;
    // dimension and support of each idempotent do not depend on the field;
    // blocks of equal dimension may come out in a different order
    auto shape = [&](const std::vector<Block>& blocks) {
      std::vector<std::pair<int, std::vector<bool>>> out;
      for (const auto& blk : blocks) {
        std::vector<bool> support;
        for (auto c : blk.idempotent.coeffs)
          support.push_back(c.code != 0);
        out.emplace_back(blk.dimension, std::move(support));
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    EXPECT_EQ(shape(a), shape(b)) << name << " " << p;
    EXPECT_TRUE(b.front().is_principal);
  }
}
