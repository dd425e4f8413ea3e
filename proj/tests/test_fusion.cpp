#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace blockbiset;
using oracle::catalog_group;

namespace {

struct Fixture {
  Group G;
  Subgroup S;
  FusionSystem F;
  TwistedDiagonals L;

  Fixture(const std::string& name, int p)
      : G(catalog_group(name)), S(sylow_subgroup(G, p)), F(G, S, p), L(S)
  {
  }
};

}  // namespace

TEST(FusionSystem, HomSetsMatchConjugationScan)
{
  for (const auto& [name, p] : oracle::catalog_pairs()) {
    Fixture f(name, p);
    const auto& subs = f.F.subgroups();
    for (std::size_t i = 0; i < subs.size(); ++i)
      for (std::size_t j = 0; j < subs.size(); ++j) {
        std::set<std::vector<int>> expected;
        for (int g = 0; g < f.G.order(); ++g) {
          std::vector<int> images;
          bool inside = true;
          for (int x : subs[i].elements()) {
            int y = oracle::perm_conj(f.G, g, x);
            inside = inside && subs[j].contains(y);
            images.push_back(y);
          }
          if (inside)
            expected.insert(images);
        }
        std::set<std::vector<int>> got;
        for (const auto& m : f.F.hom_set(i, j))
          got.insert(m.images);
        EXPECT_EQ(got, expected) << name << " " << p;
        EXPECT_EQ(got.size(), f.F.hom_set(i, j).size());
      }
  }
}

TEST(FusionSystem, ClassCountsForKnownCases)
{
  EXPECT_EQ(Fixture("A5", 2).F.f_classes().size(), 3u);
  EXPECT_EQ(Fixture("S4", 2).F.f_classes().size(), 7u);
  EXPECT_EQ(Fixture("D8", 2).F.f_classes().size(), 8u);
  EXPECT_EQ(Fixture("A4", 2).F.f_classes().size(), 3u);
  EXPECT_EQ(Fixture("C9", 3).F.f_classes().size(), 3u);
}

TEST(FusionSystem, FullyNormalizedRepsSatisfySylowCriterion)
{
  for (const auto& [name, p] : oracle::catalog_pairs()) {
    Fixture f(name, p);
    for (int r : f.F.fully_normalized_reps())
      EXPECT_TRUE(f.F.satisfies_sylow_criterion(r)) << name << " " << p << " subgroup " << r;
    for (std::size_t i = 0; i < f.F.subgroups().size(); ++i) {
      int rep = f.F.representative_of(static_cast<int>(i));
      EXPECT_TRUE(f.F.f_conjugate(f.F.subgroups()[i], f.F.subgroups()[rep]));
    }
  }
}

TEST(FusionSystem, RejectsSubgroupsOutsideS)
{
  Fixture f("S3", 2);
  Subgroup c3 = sylow_subgroup(f.G, 3);
  EXPECT_THROW(f.F.is_in_F(inclusion(c3)), NotASubgroup);
}

TEST(TwistedDiagonals, AbelianClassCountIsNumberOfInjections)
{
  // S x S-conjugation acts on (phi, Q) through inner automorphisms only, so
  // for abelian S every pair is its own class.
  for (auto [name, p] : std::vector<std::pair<std::string, int>>{
           {"C2", 2}, {"C3", 3}, {"C9", 3}, {"A5", 2}, {"C3xS3", 3}, {"A5", 5}}) {
    Fixture f(name, p);
    std::size_t expected = 0;
    for (const auto& q : all_subgroups(f.S))
      expected += injective_homs(q, f.S).size();
    EXPECT_EQ(static_cast<std::size_t>(f.L.class_count()), expected) << name;
  }
  EXPECT_EQ(Fixture("A5", 2).L.class_count(), 16);
  EXPECT_EQ(Fixture("C9", 3).L.class_count(), 9);
  EXPECT_EQ(Fixture("C3xS3", 3).L.class_count(), 81);
}

TEST(TwistedDiagonals, ClassesAreConjugacyClasses)
{
  // orbit count of S x S acting on all (phi, Q) by
  // (a, b) . (phi, Q) = (c_a phi c_b^-1, bQb^-1)
  for (auto [name, p] : std::vector<std::pair<std::string, int>>{{"D8", 2}, {"Q8", 2}, {"S4", 2}}) {
    Fixture f(name, p);
    const Group& G = f.G;
    std::set<std::pair<std::vector<int>, std::vector<int>>> all;
    for (const auto& q : all_subgroups(f.S))
      for (const auto& phi : injective_homs(q, f.S))
        all.insert({q.elements(), phi.images});
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    int orbits = 0;
    for (const auto& start : all) {
      if (seen.count(start))
        continue;
      ++orbits;
      for (int a : f.S.elements())
        for (int b : f.S.elements()) {
          // u' = b u b^-1 maps to a phi(u) a^-1
          std::vector<std::pair<int, int>> graph;
          for (std::size_t i = 0; i < start.first.size(); ++i)
            graph.emplace_back(oracle::perm_conj(G, b, start.first[i]),
                               oracle::perm_conj(G, a, start.second[i]));
          std::sort(graph.begin(), graph.end());
          std::pair<std::vector<int>, std::vector<int>> moved;
          for (auto [u, v] : graph) {
            moved.first.push_back(u);
            moved.second.push_back(v);
          }
          seen.insert(moved);
        }
    }
    EXPECT_EQ(f.L.class_count(), orbits) << name;
  }
}

TEST(TwistedDiagonals, CanonicalOrderAndLookup)
{
  Fixture f("S4", 2);
  for (int j = 0; j < f.L.class_count(); ++j) {
    EXPECT_EQ(f.L.at(j).class_id, j);
    EXPECT_EQ(f.L.class_of(f.L.at(j).phi), j);
    EXPECT_EQ(f.L.class_of(f.L.representative(j)), j);
    if (j > 0) {
      EXPECT_GE(f.L.at(j - 1).Q().order(), f.L.at(j).Q().order());
    }
  }
  EXPECT_EQ(f.L.class_of(f.L.left_factor(f.S)), -1);
}

TEST(TwistedDiagonals, MarksMatchCosetCounting)
{
  for (auto [name, p] : std::vector<std::pair<std::string, int>>{{"D8", 2}, {"A5", 2}, {"C9", 3}, {"S3", 3}}) {
    Fixture f(name, p);
    const Group& SS = f.L.square();
    for (int of = 0; of < f.L.class_count(); ++of) {
      const Subgroup& d = f.L.representative(of);
      // cosets x D as sorted element sets
      std::set<std::vector<int>> cosets;
      for (int x = 0; x < SS.order(); ++x) {
        std::vector<int> c;
        for (int y : d.elements())
          c.push_back(SS.mul(x, y));
        std::sort(c.begin(), c.end());
        cosets.insert(c);
      }
      for (int at = 0; at < f.L.class_count(); ++at) {
        const Subgroup& h = f.L.representative(at);
        std::int64_t fixed = 0;
        for (const auto& c : cosets) {
          bool stable = true;
          for (int y : h.elements()) {
            std::vector<int> moved;
            for (int z : c)
              moved.push_back(SS.mul(y, z));
            std::sort(moved.begin(), moved.end());
            if (moved != c) {
              stable = false;
              break;
            }
          }
          fixed += stable;
        }
        EXPECT_EQ(f.L.mark(at, of), fixed) << name << " at " << at << " of " << of;
      }
    }
  }
}

TEST(TwistedDiagonals, OppositeIsAnInvolution)
{
  for (const auto& [name, p] : oracle::catalog_pairs()) {
    Fixture f(name, p);
    for (int j = 0; j < f.L.class_count(); ++j) {
      EXPECT_EQ(f.L.opposite(f.L.opposite(j)), j);
      EXPECT_EQ(f.L.class_of(inverse(f.L.at(j).phi)), f.L.opposite(j));
      if (f.L.at(j).phi.is_inclusion()) {
        EXPECT_EQ(f.L.opposite(j), j);
      }
    }
  }
}

TEST(TwistedDiagonals, FxFSubconjugacy)
{
  Fixture f("A5", 2);
  const int v4 = f.L.class_of(inclusion(f.S));
  for (int j = 0; j < f.L.class_count(); ++j) {
    const auto& cls = f.L.at(j);
    // every (psi, Q) with psi in F lies under (id, S) here
    EXPECT_EQ(fxf_subconjugate(f.F, cls, f.L.at(v4)), f.F.is_in_F(cls.phi)) << j;
  }
  int twisted = -1;
  for (int j = 0; j < f.L.class_count(); ++j)
    if (!f.L.at(j).phi.is_inclusion())
      twisted = j;
  ASSERT_GE(twisted, 0);
  EXPECT_THROW(fxf_subconjugate(f.F, f.L.at(v4), f.L.at(twisted)), ArgumentNotUntwisted);
}
