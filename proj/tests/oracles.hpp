#pragma once

// Brute-force reference computations shared by the tests. Everything here
// works from raw permutations or raw sets, independently of the algorithms
// under test.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <blockbiset/blockbiset.hpp>

namespace oracle {

using namespace blockbiset;

inline Group catalog_group(const std::string& name)
{
  const GroupSpec* spec = find_in_catalog(name);
  if (!spec)
    throw std::invalid_argument("no catalog group " + name);
  return spec->build();
}

/// g x g^-1 computed on permutations.
inline int perm_conj(const Group& G, int g, int x)
{
  const Perm& pg = G.element(g);
  return G.index_of(pg * G.element(x) * pg.inverse());
}

/// Every subgroup of the p-group S by scanning all subsets containing 1.
inline std::set<std::vector<int>> subgroups_by_subsets(const Subgroup& S)
{
  const Group& G = S.parent();
  const auto& el = S.elements();
  const int n = S.order();
  std::set<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1)
        sub.push_back(el[i]);
    if (!std::binary_search(sub.begin(), sub.end(), G.identity()))
      continue;
    bool closed = true;
    for (int a : sub) {
      for (int b : sub) {
        const Perm ab = G.element(a) * G.element(b);
        if (!std::binary_search(sub.begin(), sub.end(), G.index_of(ab))) {
          closed = false;
          break;
        }
      }
      if (!closed)
        break;
    }
    if (closed)
      out.insert(sub);
  }
  return out;
}

/// Number of conjugacy classes by orbit enumeration on permutations.
inline int class_count(const Group& G)
{
  std::vector<char> seen(G.order(), 0);
  int n = 0;
  for (int x = 0; x < G.order(); ++x) {
    if (seen[x])
      continue;
    ++n;
    for (int g = 0; g < G.order(); ++g)
      seen[perm_conj(G, g, x)] = 1;
  }
  return n;
}

/// Explicit action tables of the biset with the given orbit multiplicities:
/// one copy of (S x S)/Delta_j per orbit, points are left cosets.
inline BisetActions explicit_actions(const TwistedDiagonals& L, const Multiplicities& mult)
{
  const Group& SS = L.square();
  const Subgroup& S = L.sylow();
  const Group& G = S.parent();
  BisetActions A;
  A.size = 0;
  A.left.assign(S.order(), {});
  A.right.assign(S.order(), {});
  for (int j = 0; j < L.class_count(); ++j) {
    const Subgroup& d = L.representative(j);
    std::vector<int> coset_of(SS.order(), -1);
    int cosets = 0;
    for (int x = 0; x < SS.order(); ++x) {
      if (coset_of[x] >= 0)
        continue;
      for (int y : d.elements())
        coset_of[SS.mul(x, y)] = cosets;
      ++cosets;
    }
    std::vector<int> rep(cosets);
    for (int x = SS.order() - 1; x >= 0; --x)
      rep[coset_of[x]] = x;
    for (std::int64_t copy = 0; copy < mult[j]; ++copy) {
      const int base = A.size;
      for (int i = 0; i < S.order(); ++i) {
        const int s = S.elements()[i];
        const int l = L.pair(s, G.identity());
        const int r = L.pair(G.identity(), G.inv(s));
        for (int c = 0; c < cosets; ++c) {
          A.left[i].push_back(base + coset_of[SS.mul(l, rep[c])]);
          A.right[i].push_back(base + coset_of[SS.mul(r, rep[c])]);
        }
      }
      A.size += cosets;
    }
  }
  return A;
}

/// Random sparse multiplicity vector with entries in [0, max_mult].
inline Multiplicities random_multiplicities(std::mt19937& rng, int classes, int max_mult,
                                            double density)
{
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> value(1, max_mult);
  Multiplicities m(classes, 0);
  for (auto& x : m)
    if (coin(rng) < density)
      x = value(rng);
  return m;
}

/// All (group name, prime) pairs of the catalog.
inline std::vector<std::pair<std::string, int>> catalog_pairs()
{
  std::vector<std::pair<std::string, int>> out;
  for (const auto& spec : catalog()) {
    Group G = spec.build();
    for (int p : spec.resolved_primes(G))
      out.emplace_back(spec.name, p);
  }
  return out;
}

}  // namespace oracle
