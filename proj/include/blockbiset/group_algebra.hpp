#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "permgroup.hpp"

/**
 * @file group_algebra.hpp
 * @brief The group algebra kG over a splitting field, its center and blocks.
 *
 * Blocks are found inside Z(kG), which has the conjugacy class sums as a
 * basis. The p^m-power map is linear on the commutative algebra Z(kG), and a
 * high enough iterate of it kills the nilradical and maps every element onto
 * its semisimple part sum_j lambda_j e_j. Splitting a central idempotent e is
 * then a matter of picking a basis element whose semisimple part is not a
 * scalar multiple of e and interpolating on the roots of its minimal
 * polynomial.
 */

namespace blockbiset {

struct FieldSpec {
  int p = 0;
  int m = 1;
  int p_prime_exponent = 1;  ///< e: the p'-part of exp(G)
};

/// GF(p^m) with m the multiplicative order of p modulo the p'-part of exp(G).
inline FieldSpec splitting_field(const Group& G, int p)
{
  long e = G.exponent();
  while (e % p == 0)
    e /= p;
  int m = 1;
  if (e > 1) {
    long x = p % e;
    while (x != 1) {
      x = (x * p) % e;
      ++m;
    }
  }
  return FieldSpec{p, m, static_cast<int>(e)};
}

struct GroupAlgebraElement {
  FieldVector coeffs;  ///< indexed by group element index

  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;
};

/// kG for an enumerated group G and a finite field k.
class GroupAlgebra {
 public:
  GroupAlgebra(Group group, std::shared_ptr<const GaloisField> field)
      : group_(std::move(group)), field_(std::move(field))
  {
  }

  const Group& group() const { return group_; }
  const GaloisField& field() const { return *field_; }
  const std::shared_ptr<const GaloisField>& shared_field() const { return field_; }
  int dimension() const { return group_.order(); }

  GroupAlgebraElement zero() const
  {
    return {FieldVector(group_.order(), GaloisField::zero())};
  }

  GroupAlgebraElement basis(int g) const
  {
    auto x = zero();
    x.coeffs[g] = GaloisField::one();
    return x;
  }

  GroupAlgebraElement one() const { return basis(group_.identity()); }

  GroupAlgebraElement add(const GroupAlgebraElement& a, const GroupAlgebraElement& b) const
  {
    auto out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i)
      out.coeffs[i] = field_->add(out.coeffs[i], b.coeffs[i]);
    return out;
  }

  GroupAlgebraElement sub(const GroupAlgebraElement& a, const GroupAlgebraElement& b) const
  {
    auto out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i)
      out.coeffs[i] = field_->sub(out.coeffs[i], b.coeffs[i]);
    return out;
  }

  GroupAlgebraElement scale(FieldElement c, const GroupAlgebraElement& a) const
  {
    auto out = a;
    for (auto& x : out.coeffs)
      x = field_->mul(c, x);
    return out;
  }

  GroupAlgebraElement mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b) const
  {
    auto out = zero();
    const int n = group_.order();
    for (int x = 0; x < n; ++x) {
      if (field_->is_zero(a.coeffs[x]))
        continue;
      for (int y = 0; y < n; ++y) {
        if (field_->is_zero(b.coeffs[y]))
          continue;
        auto& slot = out.coeffs[group_.mul(x, y)];
        slot = field_->add(slot, field_->mul(a.coeffs[x], b.coeffs[y]));
      }
    }
    return out;
  }

  /// g-bar * a
  GroupAlgebraElement left(int g, const GroupAlgebraElement& a) const
  {
    auto out = zero();
    for (int x = 0; x < group_.order(); ++x)
      out.coeffs[group_.mul(g, x)] = a.coeffs[x];
    return out;
  }

  /// a * h-bar
  GroupAlgebraElement right(const GroupAlgebraElement& a, int h) const
  {
    auto out = zero();
    for (int x = 0; x < group_.order(); ++x)
      out.coeffs[group_.mul(x, h)] = a.coeffs[x];
    return out;
  }

  /// g-bar * a * h-bar, the interior two-sided action.
  GroupAlgebraElement two_sided(int g, const GroupAlgebraElement& a, int h) const
  {
    auto out = zero();
    for (int x = 0; x < group_.order(); ++x)
      out.coeffs[group_.mul(group_.mul(g, x), h)] = a.coeffs[x];
    return out;
  }

  FieldElement augmentation(const GroupAlgebraElement& a) const
  {
    FieldElement s = GaloisField::zero();
    for (auto c : a.coeffs)
      s = field_->add(s, c);
    return s;
  }

  bool is_central(const GroupAlgebraElement& a) const
  {
    for (int g : group_.generators())
      if (left(g, a) != right(a, g))
        return false;
    return true;
  }

  bool is_zero(const GroupAlgebraElement& a) const { return is_zero_vector(a.coeffs); }

 private:
  Group group_;
  std::shared_ptr<const GaloisField> field_;
};

/// Conjugacy class sums, one per class, ordered by smallest member.
inline std::vector<GroupAlgebraElement> center_basis(const GroupAlgebra& kG)
{
  std::vector<GroupAlgebraElement> out;
  for (const auto& cls : conjugacy_classes(kG.group())) {
    auto x = kG.zero();
    for (int g : cls)
      x.coeffs[g] = GaloisField::one();
    out.push_back(std::move(x));
  }
  return out;
}

/// Z(kG) in the class-sum basis, with structure constants reduced mod p.
class CenterAlgebra {
 public:
  explicit CenterAlgebra(const GroupAlgebra& kG) : field_(kG.shared_field())
  {
    const Group& G = kG.group();
    classes_ = conjugacy_classes(G);
    r_ = static_cast<int>(classes_.size());
    class_of_.assign(G.order(), 0);
    for (int i = 0; i < r_; ++i)
      for (int g : classes_[i])
        class_of_[g] = i;
    std::vector<long> counts(static_cast<std::size_t>(r_) * r_ * r_, 0);
    for (int k = 0; k < r_; ++k) {
      const int z = classes_[k].front();
      for (int x = 0; x < G.order(); ++x) {
        int i = class_of_[x];
        int j = class_of_[G.mul(G.inv(x), z)];
        ++counts[(static_cast<std::size_t>(i) * r_ + j) * r_ + k];
      }
    }
    constants_.reserve(counts.size());
    for (long c : counts)
      constants_.push_back(field_->from_int(c));
    identity_class_ = class_of_[G.identity()];
  }

  int dimension() const { return r_; }
  const GaloisField& field() const { return *field_; }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int g) const { return class_of_[g]; }

  FieldVector one() const
  {
    FieldVector v(r_, GaloisField::zero());
    v[identity_class_] = GaloisField::one();
    return v;
  }

  FieldVector unit(int i) const
  {
    FieldVector v(r_, GaloisField::zero());
    v[i] = GaloisField::one();
    return v;
  }

  FieldVector mul(const FieldVector& a, const FieldVector& b) const
  {
    const GaloisField& F = *field_;
    FieldVector out(r_, GaloisField::zero());
    for (int i = 0; i < r_; ++i) {
      if (F.is_zero(a[i]))
        continue;
      for (int j = 0; j < r_; ++j) {
        if (F.is_zero(b[j]))
          continue;
        FieldElement ab = F.mul(a[i], b[j]);
        const FieldElement* row = &constants_[(static_cast<std::size_t>(i) * r_ + j) * r_];
        for (int k = 0; k < r_; ++k)
          if (!F.is_zero(row[k]))
            out[k] = F.add(out[k], F.mul(ab, row[k]));
      }
    }
    return out;
  }

  FieldVector pow(FieldVector a, std::uint64_t e) const
  {
    FieldVector result = one();
    while (e > 0) {
      if (e & 1)
        result = mul(result, a);
      e >>= 1;
      if (e > 0)
        a = mul(a, a);
    }
    return result;
  }

  /// x -> x^(q^N) with q^N > dim Z, which annihilates the nilradical.
  FieldVector semisimple_part(FieldVector x) const
  {
    std::uint64_t q = field_->size();
    std::uint64_t reach = 1;
    do {
      x = pow(std::move(x), q);
      reach *= q;
    } while (reach <= static_cast<std::uint64_t>(r_));
    return x;
  }

  /// dim(eZ / J(eZ)) for a central idempotent e.
  int semisimple_rank(const FieldVector& e) const
  {
    EchelonSpan span(*field_, r_);
    for (int i = 0; i < r_; ++i)
      span.insert(semisimple_part(mul(e, unit(i))));
    return static_cast<int>(span.rank());
  }

  /// Basis of the nilradical of eZ: the kernel of the semisimple projection.
  std::vector<FieldVector> nilradical(const FieldVector& e) const
  {
    const GaloisField& F = *field_;
    EchelonSpan ez(F, r_);
    for (int i = 0; i < r_; ++i)
      ez.insert(mul(e, unit(i)));
    const auto& basis = ez.rows();
    // rows: coordinates of the images, one equation per coordinate
    std::vector<FieldVector> images;
    for (const auto& b : basis)
      images.push_back(semisimple_part(b));
    std::vector<FieldVector> system(r_, FieldVector(basis.size(), GaloisField::zero()));
    for (std::size_t c = 0; c < basis.size(); ++c)
      for (int k = 0; k < r_; ++k)
        system[k][c] = images[c][k];
    std::vector<FieldVector> out;
    for (const auto& coeffs : nullspace(F, system, basis.size())) {
      FieldVector v(r_, GaloisField::zero());
      for (std::size_t c = 0; c < basis.size(); ++c)
        axpy(F, v, coeffs[c], basis[c]);
      out.push_back(std::move(v));
    }
    return out;
  }

  FieldVector sub(const FieldVector& a, const FieldVector& b) const
  {
    FieldVector out = a;
    for (int i = 0; i < r_; ++i)
      out[i] = field_->sub(a[i], b[i]);
    return out;
  }

  FieldVector scale(FieldElement c, const FieldVector& a) const
  {
    FieldVector out = a;
    for (auto& x : out)
      x = field_->mul(c, x);
    return out;
  }

  /// Central primitive idempotents below e, found by recursive splitting.
  std::vector<FieldVector> primitive_idempotents(const FieldVector& e) const
  {
    const GaloisField& F = *field_;
    std::vector<FieldVector> images;
    EchelonSpan span(F, r_);
    for (int i = 0; i < r_; ++i) {
      images.push_back(semisimple_part(mul(e, unit(i))));
      span.insert(images.back());
    }
    if (span.rank() == 0)
      throw SplittingFailure("zero idempotent");
    if (span.rank() == 1)
      return {e};

    // first basis element whose semisimple part is not a multiple of e
    const FieldVector* sep = nullptr;
    for (const auto& s : images) {
      EchelonSpan two(F, r_);
      two.insert(e);
      if (two.insert(s)) {
        sep = &s;
        break;
      }
    }
    if (!sep)
      throw SplittingFailure("no separating element in a non-primitive summand");
    const FieldVector& s = *sep;

    // minimal polynomial of s in eZ: first linear dependence among e, s, s^2, ...
    std::vector<FieldVector> powers{e};
    std::vector<FieldElement> minpoly;
    EchelonSpan indep(F, r_);
    indep.insert(e);
    while (true) {
      powers.push_back(mul(powers.back(), s));
      if (!indep.insert(powers.back()))
        break;
    }
    {
      const std::size_t d = powers.size();
      std::vector<FieldVector> system(r_, FieldVector(d, GaloisField::zero()));
      for (std::size_t c = 0; c < d; ++c)
        for (int k = 0; k < r_; ++k)
          system[k][c] = powers[c][k];
      auto rel = nullspace(F, system, d);
      if (rel.size() != 1)
        throw SplittingFailure("minimal polynomial relation is not unique");
      minpoly = rel.front();  // minpoly[i] multiplies s^i, monic by construction
    }
    const std::size_t deg = minpoly.size() - 1;
    std::vector<FieldElement> roots;
    for (std::uint32_t c = 0; c < F.size(); ++c) {
      FieldElement lam{c};
      FieldElement v = GaloisField::zero();
      for (std::size_t i = minpoly.size(); i-- > 0;)
        v = F.add(F.mul(v, lam), minpoly[i]);
      if (F.is_zero(v))
        roots.push_back(lam);
    }
    if (roots.size() != deg)
      throw SplittingFailure("minimal polynomial of degree " + std::to_string(deg) + " has " +
                             std::to_string(roots.size()) + " roots in " + F.describe());

    std::vector<FieldVector> out;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      FieldVector f = e;
      for (std::size_t j = 0; j < roots.size(); ++j) {
        if (j == i)
          continue;
        FieldVector factor = sub(s, scale(roots[j], e));
        f = scale(F.inv(F.sub(roots[i], roots[j])), mul(f, factor));
      }
      f = lift_idempotent(f);
      auto parts = primitive_idempotents(f);
      out.insert(out.end(), parts.begin(), parts.end());
    }
    return out;
  }

  /// Iterates f <- 3f^2 - 2f^3 until it stabilizes.
  FieldVector lift_idempotent(FieldVector f) const
  {
    const GaloisField& F = *field_;
    for (int iter = 0; iter < 64; ++iter) {
      FieldVector f2 = mul(f, f);
      FieldVector f3 = mul(f2, f);
      FieldVector next = sub(scale(F.from_int(3), f2), scale(F.from_int(2), f3));
      if (next == f)
        return f;
      f = std::move(next);
    }
    throw SplittingFailure("idempotent lifting did not stabilize");
  }

  GroupAlgebraElement to_group_algebra(const FieldVector& z, int group_order) const
  {
    GroupAlgebraElement x{FieldVector(group_order, GaloisField::zero())};
    for (int g = 0; g < group_order; ++g)
      x.coeffs[g] = z[class_of_[g]];
    return x;
  }

 private:
  std::shared_ptr<const GaloisField> field_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<FieldElement> constants_;
  int r_ = 0;
  int identity_class_ = 0;
};

struct Block {
  GroupAlgebraElement idempotent;
  int dimension = 0;
  bool is_principal = false;
};

/// dim kG*b as the rank of {b*g : g in G}.
inline int summand_dimension(const GroupAlgebra& kG, const GroupAlgebraElement& b)
{
  EchelonSpan span(kG.field(), kG.dimension());
  for (int g = 0; g < kG.group().order(); ++g)
    span.insert(kG.right(b, g).coeffs);
  return static_cast<int>(span.rank());
}

/// True iff the augmentation of b is 1.
inline bool is_principal(const GroupAlgebra& kG, const GroupAlgebraElement& b)
{
  return kG.augmentation(b) == GaloisField::one();
}

inline bool is_principal(const GroupAlgebra& kG, const Block& b)
{
  return is_principal(kG, b.idempotent);
}

/// All central primitive idempotents of kG. Principal block first, then by
/// descending dimension, then by coefficient codes.
inline std::vector<Block> block_idempotents(const GroupAlgebra& kG)
{
  CenterAlgebra Z(kG);
  std::vector<Block> blocks;
  for (const auto& e : Z.primitive_idempotents(Z.one())) {
    Block b;
    b.idempotent = Z.to_group_algebra(e, kG.group().order());
    b.dimension = summand_dimension(kG, b.idempotent);
    b.is_principal = is_principal(kG, b.idempotent);
    blocks.push_back(std::move(b));
  }
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
    if (a.is_principal != b.is_principal)
      return a.is_principal;
    if (a.dimension != b.dimension)
      return a.dimension > b.dimension;
    return a.idempotent.coeffs < b.idempotent.coeffs;
  });
  return blocks;
}

/// The Block record for kG itself (b = 1), used when treating the whole
/// algebra as a summand.
inline Block whole_algebra(const GroupAlgebra& kG)
{
  return Block{kG.one(), kG.dimension(), true};
}

}  // namespace blockbiset
