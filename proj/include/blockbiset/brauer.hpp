#pragma once

#include <map>
#include <memory>
#include <vector>

#include "biset.hpp"
#include "errors.hpp"
#include "fusion.hpp"
#include "group_algebra.hpp"
#include "linalg.hpp"

/**
 * @file brauer.hpp
 * @brief Fixed points, traces and Brauer quotients of a block B = kGb under
 * subgroups of S x S acting by (a, u) . x = a x u^-1.
 *
 * For a Delta-invariant basis X of B, the image of X^Delta spans B(Delta)
 * freely, so dim B(Delta) is the mark of X at Delta. Reading these dimensions
 * at every twisted class recovers X up to isomorphism without constructing it.
 */

namespace blockbiset {

/// kG*b together with an echelon basis of it.
class BlockAlgebra {
 public:
  BlockAlgebra(GroupAlgebra kG, Block block, std::shared_ptr<const TwistedDiagonals> lattice)
      : kG_(std::move(kG)), block_(std::move(block)), lattice_(std::move(lattice))
  {
    EchelonSpan span(kG_.field(), kG_.dimension());
    for (int g = 0; g < kG_.group().order(); ++g)
      span.insert(kG_.right(block_.idempotent, g).coeffs);
    basis_ = span.rows();
  }

  const GroupAlgebra& algebra() const { return kG_; }
  const Block& block() const { return block_; }
  const TwistedDiagonals& lattice() const { return *lattice_; }
  const std::vector<FieldVector>& basis() const { return basis_; }
  int dimension() const { return static_cast<int>(basis_.size()); }

  /// (a, u) . x = a x u^-1 for an element of S x S.
  GroupAlgebraElement act(int pair, const GroupAlgebraElement& x) const
  {
    auto [a, u] = lattice_->components(pair);
    return kG_.two_sided(a, x, kG_.group().inv(u));
  }

 private:
  GroupAlgebra kG_;
  Block block_;
  std::shared_ptr<const TwistedDiagonals> lattice_;
  std::vector<FieldVector> basis_;
};

struct FixedSpace {
  Subgroup subgroup;  // of S x S
  std::vector<GroupAlgebraElement> basis;

  int dimension() const { return static_cast<int>(basis.size()); }
};

struct BrauerQuotientDim {
  Subgroup subgroup;
  int dim = 0;
};

/// B^Delta as the nullspace of {d . x - x = 0 : d generating Delta} on B.
inline FixedSpace fixed_space(const BlockAlgebra& B, const Subgroup& delta)
{
  const GaloisField& F = B.algebra().field();
  const auto& basis = B.basis();
  const std::size_t n = static_cast<std::size_t>(B.algebra().dimension());
  FixedSpace out{delta, {}};
  const auto gens = generating_sequence(delta);
  if (gens.empty()) {
    for (const auto& v : basis)
      out.basis.push_back(GroupAlgebraElement{v});
    return out;
  }
  std::vector<FieldVector> system(gens.size() * n, FieldVector(basis.size(), GaloisField::zero()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    GroupAlgebraElement b{basis[i]};
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto moved = B.act(gens[k], b);
      for (std::size_t h = 0; h < n; ++h)
        system[k * n + h][i] = F.sub(moved.coeffs[h], basis[i][h]);
    }
  }
  for (const auto& c : nullspace(F, std::move(system), basis.size())) {
    FieldVector v(n, GaloisField::zero());
    for (std::size_t i = 0; i < basis.size(); ++i)
      axpy(F, v, c[i], basis[i]);
    out.basis.push_back(GroupAlgebraElement{std::move(v)});
  }
  return out;
}

inline bool is_fixed(const BlockAlgebra& B, const Subgroup& h, const GroupAlgebraElement& x)
{
  for (int g : generating_sequence(h))
    if (B.act(g, x) != x)
      return false;
  return true;
}

/// tr_K^Delta(x) = sum over left coset representatives d of K in Delta of d . x.
inline GroupAlgebraElement trace_map(const BlockAlgebra& B, const Subgroup& delta,
                                     const Subgroup& k, const GroupAlgebraElement& x)
{
  if (!delta.contains(k))
    throw NotASubgroup("K is not contained in Delta");
  if (!is_fixed(B, k, x))
    throw NotFixedByK("element is not fixed by K");
  const Group& SS = delta.parent();
  const GroupAlgebra& kG = B.algebra();
  std::vector<char> covered(SS.order(), 0);
  auto sum = kG.zero();
  for (int d : delta.elements()) {
    if (covered[d])
      continue;
    for (int y : k.elements())
      covered[SS.mul(d, y)] = 1;
    sum = kG.add(sum, B.act(d, x));
  }
  if (!is_fixed(B, delta, sum))
    throw std::logic_error("trace is not fixed by Delta");
  return sum;
}

/// Subgroups of index p in the p-group Delta.
inline std::vector<Subgroup> maximal_subgroups(const Subgroup& delta)
{
  std::vector<Subgroup> out;
  if (delta.is_trivial())
    return out;
  const long p = prime_power_base(delta.order());
  for (auto& h : all_subgroups(delta))
    if (static_cast<long>(h.order()) * p == delta.order())
      out.push_back(std::move(h));
  return out;
}

/// Memo of fixed spaces keyed by subgroup, for one block.
class FixedSpaceCache {
 public:
  const FixedSpace& get(const BlockAlgebra& B, const Subgroup& delta)
  {
    auto it = cache_.find(delta.elements());
    if (it == cache_.end())
      it = cache_.emplace(delta.elements(), fixed_space(B, delta)).first;
    return it->second;
  }

 private:
  std::map<std::vector<int>, FixedSpace> cache_;
};

/// dim B^Delta minus the dimension of the span of traces from the maximal
/// subgroups of Delta (traces from smaller subgroups factor through these).
inline BrauerQuotientDim brauer_quotient_dim(const BlockAlgebra& B, const Subgroup& delta,
                                             FixedSpaceCache& cache)
{
  const FixedSpace& top = cache.get(B, delta);
  EchelonSpan traces(B.algebra().field(), B.algebra().dimension());
  for (const auto& k : maximal_subgroups(delta)) {
    const FixedSpace& fk = cache.get(B, k);
    for (const auto& x : fk.basis)
      traces.insert(trace_map(B, delta, k, x).coeffs);
  }
  return BrauerQuotientDim{delta, top.dimension() - static_cast<int>(traces.rank())};
}

inline BrauerQuotientDim brauer_quotient_dim(const BlockAlgebra& B, const Subgroup& delta)
{
  FixedSpaceCache cache;
  return brauer_quotient_dim(B, delta, cache);
}

/// The biset X of an S-invariant basis of B, recovered from its marks.
struct RecoveredBiset {
  MarksVector marks;
  Biset biset;
};

/// marks(X)[Delta] := dim B(Delta) at every twisted class and certificate
/// subgroup; X is then the Moebius inverse of those marks.
inline RecoveredBiset recover_block_biset(const BlockAlgebra& B,
                                          std::shared_ptr<const TwistedDiagonals> lattice)
{
  const TwistedDiagonals& L = *lattice;
  FixedSpaceCache cache;
  MarksVector m;
  for (int i = 0; i < L.class_count(); ++i)
    m.values.push_back(brauer_quotient_dim(B, L.representative(i), cache).dim);
  for (const auto& r : L.prime_order_subgroups()) {
    m.left_certificate.push_back(brauer_quotient_dim(B, L.left_factor(r), cache).dim);
    m.right_certificate.push_back(brauer_quotient_dim(B, L.right_factor(r), cache).dim);
  }
  Multiplicities c = multiplicities_from_marks(L, m);
  Biset x = Biset::from_multiplicities(std::move(lattice), std::move(c));
  if (x.size() != B.dimension())
    throw NonIntegralSolution("recovered biset has " + std::to_string(x.size()) +
                              " points but the block has dimension " +
                              std::to_string(B.dimension()));
  return RecoveredBiset{std::move(m), std::move(x)};
}

/// br_P(b): the coefficients of b on C_G(P), an element of k C_G(P).
struct BrauerImage {
  Subgroup centralizer;
  FieldVector coeffs;  // aligned with centralizer.elements()

  bool is_zero() const { return is_zero_vector(coeffs); }
};

inline BrauerImage brauer_map_on_idempotent(const Block& b, const Subgroup& p)
{
  BrauerImage out{centralizer(p.parent(), p), {}};
  for (int g : out.centralizer.elements())
    out.coeffs.push_back(b.idempotent.coeffs[g]);
  return out;
}

struct DefectGroup {
  int subgroup_index = 0;  // into FusionSystem::subgroups()
  Subgroup group;

  int order() const { return group.order(); }
};

/// Maximal P <= S with br_P(b) != 0, cross-checked against the maximal Q with
/// nonzero mark at (id, Q). Returns the fully normalized representative.
inline DefectGroup defect_group(const Block& b, const FusionSystem& F, const TwistedDiagonals& L,
                                const MarksVector& block_marks)
{
  const auto& subs = F.subgroups();
  int by_brauer = -1;
  int by_marks = -1;
  for (int i = static_cast<int>(subs.size()) - 1; i >= 0; --i) {
    if (by_brauer < 0 && !brauer_map_on_idempotent(b, subs[i]).is_zero())
      by_brauer = i;
    if (by_marks < 0 && block_marks.values[L.class_of(inclusion(subs[i]))] != 0)
      by_marks = i;
  }
  if (by_brauer < 0 || by_marks < 0)
    throw InconsistentDefect("no subgroup with nonzero Brauer quotient");
  if (!F.f_conjugate(subs[by_brauer], subs[by_marks]))
    throw InconsistentDefect("Brauer map gives order " + std::to_string(subs[by_brauer].order()) +
                             ", Brauer quotients give order " +
                             std::to_string(subs[by_marks].order()));
  // every P with nonvanishing br_P(b) must be F-subconjugate to the defect group
  for (const auto& p : subs)
    if (!brauer_map_on_idempotent(b, p).is_zero() && !F.f_subconjugate(p, subs[by_brauer]))
      throw InconsistentDefect("nonvanishing Brauer image outside the defect group");
  int rep = F.representative_of(by_brauer);
  return DefectGroup{rep, subs[rep]};
}

inline DefectGroup defect_group(const BlockAlgebra& B, const FusionSystem& F,
                                std::shared_ptr<const TwistedDiagonals> lattice)
{
  return defect_group(B.block(), F, *lattice, recover_block_biset(B, lattice).marks);
}

}  // namespace blockbiset
