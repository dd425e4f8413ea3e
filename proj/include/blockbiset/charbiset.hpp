#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "biset.hpp"
#include "brauer.hpp"
#include "errors.hpp"
#include "fusion.hpp"
#include "group_algebra.hpp"
#include "permgroup.hpp"

/**
 * @file charbiset.hpp
 * @brief F-(semi)characteristic bisets, the Omega_P basis, and the
 * block-by-block verification pipeline.
 */

namespace blockbiset {

namespace detail {

inline std::string join_ints(const std::vector<int>& v)
{
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

inline std::string describe(const Morphism& phi)
{
  return "(" + join_ints(phi.images) + " on " + join_ints(phi.domain.elements()) + ")";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// semicharacteristic check

struct SemicharVerdict {
  bool bifree = false;
  bool symmetric = false;
  bool f_generated = false;
  bool f_invariant = false;
  bool index_prime_to_p = false;  ///< |Omega|/|S| prime to p
  bool characteristic = false;    ///< all four conditions and the index condition
  std::vector<std::string> witnesses;

  bool semicharacteristic() const { return bifree && symmetric && f_generated && f_invariant; }
};

inline SemicharVerdict is_semicharacteristic(const Biset& omega, const FusionSystem& F)
{
  const TwistedDiagonals& L = omega.lattice();
  SemicharVerdict v;
  const MarksVector m = marks(omega);

  v.bifree = m.bifree();
  if (!v.bifree)
    v.witnesses.push_back("bifree: a prime-order one-sided subgroup has fixed points");

  if (v.bifree) {
    const Multiplicities c =
        omega.has_multiplicities() || omega.has_actions() ? multiplicities_of(omega)
                                                          : multiplicities_from_marks(L, m);
    v.symmetric = true;
    v.f_generated = true;
    for (int j = 0; j < L.class_count(); ++j) {
      if (c[j] != c[L.opposite(j)] && v.symmetric) {
        v.symmetric = false;
        v.witnesses.push_back("symmetric: orbit type " + std::to_string(j) + " occurs " +
                              std::to_string(c[j]) + " times, its opposite " +
                              std::to_string(L.opposite(j)) + " occurs " +
                              std::to_string(c[L.opposite(j)]) + " times");
      }
      if (c[j] != 0 && !F.is_in_F(L.at(j).phi)) {
        v.f_generated = false;
        v.witnesses.push_back("F-generated: orbit type " + std::to_string(j) + " " +
                              detail::describe(L.at(j).phi) + " is not in F");
      }
    }
  } else {
    v.symmetric = marks(opposite(omega)) == m;
    v.f_generated = false;
  }

  v.f_invariant = true;
  const Subgroup& S = F.sylow();
  for (const auto& P : F.subgroups()) {
    const Morphism incl = inclusion(P);
    const auto plain_left = restrict_twist(L, m, Side::left, incl);
    const auto plain_right = restrict_twist(L, m, Side::right, incl);
    for (const auto& phi : F.hom_set(P, S)) {
      if (phi.is_inclusion())
        continue;
      bool left_ok = restrict_twist(L, m, Side::left, phi) == plain_left;
      bool right_ok = restrict_twist(L, m, Side::right, phi) == plain_right;
      if (!left_ok || !right_ok) {
        v.f_invariant = false;
        v.witnesses.push_back(std::string("F-invariant: ") + (left_ok ? "right" : "left") +
                              " twist by " + detail::describe(phi) + " changes the marks");
      }
    }
  }

  const std::int64_t index = omega.size() / S.order();
  v.index_prime_to_p = omega.size() % S.order() == 0 && index % F.prime() != 0;
  v.characteristic = v.semicharacteristic() && v.index_prime_to_p;
  return v;
}

// ---------------------------------------------------------------------------
// Omega_P

struct OmegaBasisElement {
  int subgroup_index = 0;  // into FusionSystem::subgroups()
  Subgroup P;
  Multiplicities multiplicities;
};

/**
 * The minimal F-semicharacteristic biset with exactly one orbit [id, P].
 *
 * The marks of an F-generated, F-invariant biset are constant on the twisted
 * classes (psi, Q) with psi in F and Q in a fixed F-class, and vanish at
 * classes outside F. Walking the F-classes of subgroups by descending order,
 * each class gets the least common mark compatible with the orbits already
 * placed above it; the class of P instead gets the mark that puts exactly one
 * orbit on (id, P).
 */
inline OmegaBasisElement omega_basis_element(const FusionSystem& F,
                                             const std::shared_ptr<const TwistedDiagonals>& lattice,
                                             int p_index)
{
  const TwistedDiagonals& L = *lattice;
  const auto& subs = F.subgroups();
  const auto& reps = F.fully_normalized_reps();
  if (std::find(reps.begin(), reps.end(), p_index) == reps.end())
    throw std::invalid_argument("P is not a fully normalized representative");
  const int k = L.class_count();
  const int p_level = F.f_class_of(p_index);
  const int p_class = L.class_of(inclusion(subs[p_index]));

  std::vector<int> level(k, -1);
  for (int j = 0; j < k; ++j)
    if (F.is_in_F(L.at(j).phi))
      level[j] = F.f_class_of(F.checked_index(L.at(j).Q()));

  std::vector<int> order(F.f_classes().size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return subs[F.f_classes()[a].front()].order() > subs[F.f_classes()[b].front()].order();
  });

  Multiplicities c(k, 0);
  for (int lv : order) {
    std::vector<int> members;
    for (int j = 0; j < k; ++j)
      if (level[j] == lv)
        members.push_back(j);
    std::vector<std::int64_t> above(members.size(), 0);
    for (std::size_t t = 0; t < members.size(); ++t)
      for (int i = 0; i < k; ++i)
        if (c[i] != 0)
          above[t] += c[i] * L.mark(members[t], i);

    std::int64_t target = -1;
    if (lv == p_level) {
      auto it = std::find(members.begin(), members.end(), p_class);
      target = above[it - members.begin()] + L.mark(p_class, p_class);
    } else {
      std::int64_t lo = *std::max_element(above.begin(), above.end());
      std::int64_t period = 1;
      for (int j : members)
        period = std::lcm(period, L.mark(j, j));
      for (std::int64_t cand = lo; cand < lo + period && target < 0; ++cand) {
        bool ok = true;
        for (std::size_t t = 0; t < members.size() && ok; ++t)
          ok = (cand - above[t]) % L.mark(members[t], members[t]) == 0;
        if (ok)
          target = cand;
      }
    }
    for (std::size_t t = 0; t < members.size(); ++t) {
      const std::int64_t rest = target - above[t];
      const std::int64_t diag = L.mark(members[t], members[t]);
      if (target < 0 || rest < 0 || rest % diag != 0)
        throw SolveFailure("no nonnegative integral orbit count at twisted class " +
                           std::to_string(members[t]));
      c[members[t]] = rest / diag;
    }
  }

  if (c[p_class] != 1)
    throw SolveFailure("orbit [id,P] does not occur exactly once");
  for (int q : reps)
    if (q != p_index && c[L.class_of(inclusion(subs[q]))] != 0)
      throw SolveFailure("fully normalized subgroup outside the F-class of P carries an orbit");
  for (int j = 0; j < k; ++j)
    if (c[j] != 0 && !fxf_subconjugate(F, L.at(j), L.at(p_class)))
      throw SolveFailure("orbit type " + std::to_string(j) +
                         " is not F x F-subconjugate to (id,P)");
  const auto verdict = is_semicharacteristic(Biset::from_multiplicities(lattice, c), F);
  if (!verdict.semicharacteristic())
    throw SolveFailure("constructed Omega_P is not F-semicharacteristic");
  return OmegaBasisElement{p_index, subs[p_index], std::move(c)};
}

/// Omega_P for every fully normalized representative, by descending |P|.
inline std::vector<OmegaBasisElement> omega_basis(const FusionSystem& F,
                                                  const std::shared_ptr<const TwistedDiagonals>& lattice)
{
  std::vector<int> reps = F.fully_normalized_reps();
  std::stable_sort(reps.begin(), reps.end(), [&](int a, int b) {
    return F.subgroups()[a].order() > F.subgroups()[b].order();
  });
  std::vector<OmegaBasisElement> out;
  for (int r : reps)
    out.push_back(omega_basis_element(F, lattice, r));
  return out;
}

/// Coefficient of Omega_P per fully normalized P (subgroup index), in basis
/// order.
using OmegaDecomposition = std::vector<std::pair<int, std::int64_t>>;

inline Multiplicities recompose(const std::vector<OmegaBasisElement>& basis,
                                const OmegaDecomposition& coeffs, int class_count)
{
  Multiplicities out(class_count, 0);
  for (const auto& [idx, coef] : coeffs)
    for (const auto& e : basis)
      if (e.subgroup_index == idx)
        for (int j = 0; j < class_count; ++j)
          out[j] += coef * e.multiplicities[j];
  return out;
}

/// Greedy elimination by descending |P|: the coefficient of Omega_P is the
/// remaining multiplicity of [id, P].
inline OmegaDecomposition decompose_in_omega_basis(const Biset& x, const FusionSystem& F,
                                                   const std::vector<OmegaBasisElement>& basis)
{
  if (!is_semicharacteristic(x, F).semicharacteristic())
    throw NotSemicharacteristic("biset is not F-semicharacteristic");
  const TwistedDiagonals& L = x.lattice();
  Multiplicities rest = multiplicities_of(x);
  OmegaDecomposition out;
  for (const auto& e : basis) {
    const std::int64_t coef = rest[L.class_of(inclusion(e.P))];
    for (int j = 0; j < L.class_count(); ++j) {
      rest[j] -= coef * e.multiplicities[j];
      if (rest[j] < 0)
        throw DecompositionFailure("negative remainder at twisted class " + std::to_string(j));
    }
    out.emplace_back(e.subgroup_index, coef);
  }
  for (auto r : rest)
    if (r != 0)
      throw DecompositionFailure("nonzero remainder after exhausting the basis");
  return out;
}

// ---------------------------------------------------------------------------
// corollaries

struct DefectCorollaryVerdict {
  bool support_in_defect = false;      ///< every Omega_P present has P <=_F D
  bool defect_coefficient_prime = false;  ///< coefficient of Omega_D prime to p
  bool dimension_p_part = false;       ///< p-part of dim B equals |S|^2/|D|

  bool all() const { return support_in_defect && defect_coefficient_prime && dimension_p_part; }
};

inline DefectCorollaryVerdict corollary_defect_checks(const OmegaDecomposition& decomposition,
                                                      const DefectGroup& defect,
                                                      const FusionSystem& F, int block_dimension)
{
  const int p = F.prime();
  DefectCorollaryVerdict v;
  v.support_in_defect = true;
  v.defect_coefficient_prime = false;
  for (const auto& [idx, coef] : decomposition) {
    if (coef != 0 && !F.f_subconjugate(F.subgroups()[idx], defect.group))
      v.support_in_defect = false;
    if (idx == defect.subgroup_index)
      v.defect_coefficient_prime = coef % p != 0;
  }
  const long s = F.sylow().order();
  v.dimension_p_part = p_part(block_dimension, p) == s * s / defect.order();
  return v;
}

/// First g (index order) whose point stabilizer in _S G_S is exactly (id, D):
/// S cap g^-1 S g = D and g centralizes D.
inline int green_sylow_intersection_check(const Subgroup& sylow, const Subgroup& defect)
{
  const Group& G = sylow.parent();
  for (int g = 0; g < G.order(); ++g) {
    bool centralizes = true;
    for (int u : defect.elements())
      if (G.conj(g, u) != u) {
        centralizes = false;
        break;
      }
    if (!centralizes)
      continue;
    std::vector<int> sg;
    for (int u : sylow.elements())
      if (sylow.contains(G.conj(g, u)))
        sg.push_back(u);
    if (sg == defect.elements())
      return g;
  }
  throw NoWitness("no g with S cap S^g = D and g in C_G(D)");
}

struct CharacteristicPVerdict {
  bool characteristic_p = false;
  bool local_characteristic_p = false;
  bool unique_block = true;              ///< meaningful when characteristic_p
  bool nonprincipal_defect_zero = true;  ///< meaningful when local_characteristic_p

  bool passed() const
  {
    return (!characteristic_p || unique_block) &&
           (!local_characteristic_p || nonprincipal_defect_zero);
  }
};

struct BlockDefectSummary {
  bool is_principal = false;
  int defect_order = 1;
};

inline CharacteristicPVerdict characteristic_p_corollary_check(
    const Group& G, int p, const std::vector<BlockDefectSummary>& blocks)
{
  CharacteristicPVerdict v;
  v.characteristic_p = is_characteristic_p(G, p);
  v.local_characteristic_p = is_local_characteristic_p(G, p);
  if (v.characteristic_p)
    v.unique_block = blocks.size() == 1;
  if (v.local_characteristic_p)
    for (const auto& b : blocks)
      if (!b.is_principal && b.defect_order != 1)
        v.nonprincipal_defect_zero = false;
  return v;
}

// ---------------------------------------------------------------------------
// pipeline

struct BlockReport {
  int index = 0;
  int dimension = 0;
  bool is_principal = false;
  GroupAlgebraElement idempotent;
  DefectGroup defect;
  MarksVector marks;
  Multiplicities multiplicities;
  OmegaDecomposition omega_coefficients;
  SemicharVerdict verdict;
  DefectCorollaryVerdict corollary;
  int green_witness = -1;
  bool characteristic_iff_maximal_defect = false;
  bool subbiset_of_double_cosets = false;

  bool passed() const
  {
    return verdict.semicharacteristic() && corollary.all() && green_witness >= 0 &&
           characteristic_iff_maximal_defect && subbiset_of_double_cosets;
  }
};

struct TheoremReport {
  Group group;
  int p = 0;
  FieldSpec field;
  std::shared_ptr<const GaloisField> galois;
  Subgroup sylow;
  std::shared_ptr<const FusionSystem> fusion;
  std::shared_ptr<const TwistedDiagonals> lattice;
  std::vector<OmegaBasisElement> omega;
  Multiplicities double_coset_multiplicities;
  SemicharVerdict double_coset_verdict;
  std::vector<BlockReport> blocks;
  bool partition_holds = false;
  CharacteristicPVerdict characteristic_p;

  bool passed() const
  {
    if (!double_coset_verdict.characteristic || !partition_holds || !characteristic_p.passed())
      return false;
    for (const auto& b : blocks)
      if (!b.passed())
        return false;
    return true;
  }
};

/// Runs every check on every p-block of kG.
inline TheoremReport verify_theorem_main(const Group& G, int p)
{
  if (!is_prime(p))
    throw std::invalid_argument("p must be prime");
  TheoremReport rep;
  rep.group = G;
  rep.p = p;
  rep.field = splitting_field(G, p);
  rep.galois = std::make_shared<const GaloisField>(p, rep.field.m);
  GroupAlgebra kG(G, rep.galois);

  rep.sylow = sylow_subgroup(G, p);
  rep.fusion = std::make_shared<const FusionSystem>(G, rep.sylow, p);
  rep.lattice = std::make_shared<const TwistedDiagonals>(rep.sylow);
  const FusionSystem& F = *rep.fusion;
  const TwistedDiagonals& L = *rep.lattice;
  rep.omega = omega_basis(F, rep.lattice);

  Biset sgs = double_coset_biset(rep.lattice);
  rep.double_coset_multiplicities = sgs.multiplicities();
  rep.double_coset_verdict = is_semicharacteristic(sgs, F);

  Multiplicities total(L.class_count(), 0);
  std::vector<BlockDefectSummary> summaries;
  const auto blocks = block_idempotents(kG);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    BlockReport br;
    br.index = static_cast<int>(bi);
    br.dimension = blocks[bi].dimension;
    br.is_principal = blocks[bi].is_principal;
    br.idempotent = blocks[bi].idempotent;

    BlockAlgebra B(kG, blocks[bi], rep.lattice);
    auto recovered = recover_block_biset(B, rep.lattice);
    br.marks = recovered.marks;
    br.multiplicities = recovered.biset.multiplicities();
    br.verdict = is_semicharacteristic(recovered.biset, F);
    br.omega_coefficients = decompose_in_omega_basis(recovered.biset, F, rep.omega);
    br.defect = defect_group(blocks[bi], F, L, br.marks);
    br.corollary = corollary_defect_checks(br.omega_coefficients, br.defect, F, br.dimension);
    br.green_witness = green_sylow_intersection_check(rep.sylow, br.defect.group);
    br.characteristic_iff_maximal_defect =
        br.verdict.characteristic == (br.defect.order() == rep.sylow.order());
    br.subbiset_of_double_cosets = true;
    for (int j = 0; j < L.class_count(); ++j) {
      if (br.multiplicities[j] > rep.double_coset_multiplicities[j])
        br.subbiset_of_double_cosets = false;
      total[j] += br.multiplicities[j];
    }
    summaries.push_back({br.is_principal, br.defect.order()});
    rep.blocks.push_back(std::move(br));
  }
  rep.partition_holds = total == rep.double_coset_multiplicities;
  rep.characteristic_p = characteristic_p_corollary_check(G, p, summaries);
  return rep;
}

}  // namespace blockbiset
