#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "errors.hpp"
#include "permgroup.hpp"

/**
 * @file fusion.hpp
 * @brief The fusion system F_S(G) and twisted diagonal subgroups of S x S.
 */

namespace blockbiset {

// ---------------------------------------------------------------------------
// FusionSystem

/// F_S(G): all hom-sets between subgroups of S, built once by scanning G.
class FusionSystem {
 public:
  FusionSystem(Group group, Subgroup sylow, int p)
      : group_(std::move(group)), sylow_(std::move(sylow)), p_(p)
  {
    subgroups_ = all_subgroups(sylow_);
    for (std::size_t i = 0; i < subgroups_.size(); ++i)
      index_[subgroups_[i].elements()] = static_cast<int>(i);
    const std::size_t n = subgroups_.size();
    homs_.assign(n * n, {});
    for (std::size_t i = 0; i < n; ++i) {
      const Subgroup& P = subgroups_[i];
      std::vector<Morphism> distinct;
      for (int g = 0; g < group_.order(); ++g) {
        Morphism m = conjugation(P, g);
        bool in_s = true;
        for (int y : m.images)
          if (!sylow_.contains(y)) {
            in_s = false;
            break;
          }
        if (!in_s)
          continue;
        bool seen = false;
        for (const auto& d : distinct)
          if (d.images == m.images) {
            seen = true;
            break;
          }
        if (!seen)
          distinct.push_back(std::move(m));
      }
      std::sort(distinct.begin(), distinct.end(),
                [](const Morphism& a, const Morphism& b) { return a.images < b.images; });
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& m : distinct) {
          bool inside = true;
          for (int y : m.images)
            if (!subgroups_[j].contains(y)) {
              inside = false;
              break;
            }
          if (inside)
            homs_[i * n + j].push_back(m);
        }
    }
    build_classes();
  }

  const Group& group() const { return group_; }
  const Subgroup& sylow() const { return sylow_; }
  int prime() const { return p_; }

  /// Subgroups of S, sorted by (order, element set).
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }

  int subgroup_index(const Subgroup& q) const
  {
    auto it = index_.find(q.elements());
    return it == index_.end() ? -1 : it->second;
  }

  const std::vector<Morphism>& hom_set(int i, int j) const
  {
    return homs_[static_cast<std::size_t>(i) * subgroups_.size() + j];
  }

  /// F(P, Q) = { c_g|_P : g in G, c_g(P) <= Q }
  const std::vector<Morphism>& hom_set(const Subgroup& P, const Subgroup& Q) const
  {
    return hom_set(checked_index(P), checked_index(Q));
  }

  /// phi in F(domain(phi), S)
  bool is_in_F(const Morphism& phi) const
  {
    const auto& homs = hom_set(checked_index(phi.domain), static_cast<int>(subgroups_.size()) - 1);
    for (const auto& m : homs)
      if (m.images == phi.images)
        return true;
    return false;
  }

  /// Some element of F carries P into Q.
  bool f_subconjugate(const Subgroup& P, const Subgroup& Q) const
  {
    return !hom_set(P, Q).empty();
  }

  bool f_conjugate(const Subgroup& P, const Subgroup& Q) const
  {
    return P.order() == Q.order() && f_subconjugate(P, Q);
  }

  /// F-conjugacy classes, as subgroup indices, ordered by first member.
  const std::vector<std::vector<int>>& f_classes() const { return classes_; }
  int f_class_of(int subgroup_index) const { return class_of_[subgroup_index]; }

  /// One subgroup index per F-class, maximizing |N_S(P)| (ties: smallest
  /// element set).
  const std::vector<int>& fully_normalized_reps() const { return reps_; }

  int representative_of(int subgroup_index) const { return reps_[class_of_[subgroup_index]]; }

  /// N_S(P) is a Sylow p-subgroup of N_G(P).
  bool satisfies_sylow_criterion(int subgroup_index) const
  {
    const Subgroup& P = subgroups_[subgroup_index];
    return normalizer(sylow_, P).order() == p_part(normalizer(group_, P).order(), p_);
  }

  int checked_index(const Subgroup& q) const
  {
    int i = subgroup_index(q);
    if (i < 0)
      throw NotASubgroup("not a subgroup of the Sylow subgroup");
    return i;
  }

 private:
  void build_classes()
  {
    const int n = static_cast<int>(subgroups_.size());
    class_of_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
      if (class_of_[i] >= 0)
        continue;
      std::vector<int> members;
      for (int j = i; j < n; ++j)
        if (class_of_[j] < 0 && subgroups_[j].order() == subgroups_[i].order() &&
            !hom_set(i, j).empty()) {
          class_of_[j] = static_cast<int>(classes_.size());
          members.push_back(j);
        }
      classes_.push_back(std::move(members));
    }
    for (const auto& members : classes_) {
      int best = members.front();
      int best_n = normalizer(sylow_, subgroups_[best]).order();
      for (int j : members) {
        int nj = normalizer(sylow_, subgroups_[j]).order();
        if (nj > best_n) {
          best = j;
          best_n = nj;
        }
      }
      reps_.push_back(best);
    }
  }

  Group group_;
  Subgroup sylow_;
  int p_;
  std::vector<Subgroup> subgroups_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<Morphism>> homs_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<int> reps_;
};

// ---------------------------------------------------------------------------
// Twisted diagonals

/// A twisted diagonal class [phi, Q]: the S x S-conjugacy class of
/// (phi, Q) = {(phi(u), u) : u in Q}.
struct TwistedClass {
  Morphism phi;  // domain is Q, values in S
  int class_id = 0;

  const Subgroup& Q() const { return phi.domain; }
};

/**
 * S x S realized as a permutation group on 2n points, together with every
 * twisted diagonal (phi, Q) sorted into S x S-conjugacy classes and the table
 * of marks restricted to those classes.
 *
 * Class ids follow the canonical order: descending |Q|, then Q's element set,
 * then phi's image table.
 */
class TwistedDiagonals {
 public:
  explicit TwistedDiagonals(const Subgroup& sylow) : sylow_(sylow)
  {
    const Group& G = sylow_.parent();
    const int n = G.degree();
    const int s = sylow_.order();

    std::vector<Perm> gens;
    for (int g : generating_sequence(sylow_)) {
      std::vector<int> left(2 * n), right(2 * n);
      for (int x = 0; x < n; ++x) {
        left[x] = G.element(g)(x);
        left[n + x] = n + x;
        right[x] = x;
        right[n + x] = n + G.element(g)(x);
      }
      gens.emplace_back(std::move(left));
      gens.emplace_back(std::move(right));
    }
    square_ = group_from_generators(2 * n, gens, static_cast<std::size_t>(s) * s + 1);

    components_.resize(square_.order());
    pair_.assign(static_cast<std::size_t>(s) * s, -1);
    for (int x = 0; x < square_.order(); ++x) {
      auto im = square_.element(x).images();
      std::vector<int> a(im.begin(), im.begin() + n);
      std::vector<int> u(n);
      for (int i = 0; i < n; ++i)
        u[i] = im[n + i] - n;
      int ga = G.index_of(Perm(std::move(a)));
      int gu = G.index_of(Perm(std::move(u)));
      components_[x] = {ga, gu};
      pair_[static_cast<std::size_t>(sylow_.local_index(ga)) * s + sylow_.local_index(gu)] = x;
    }

    subgroups_ = all_subgroups(sylow_);
    build_classes();
    build_marks();
  }

  const Subgroup& sylow() const { return sylow_; }
  const Group& square() const { return square_; }
  const std::vector<Subgroup>& subgroups_of_sylow() const { return subgroups_; }

  /// Index of (a, u) in S x S; a, u are indices in the parent of S.
  int pair(int a, int u) const
  {
    return pair_[static_cast<std::size_t>(sylow_.local_index(a)) * sylow_.order() +
                 sylow_.local_index(u)];
  }

  std::pair<int, int> components(int x) const { return components_[x]; }

  /// {(phi(u), u) : u in domain(phi)}
  Subgroup diagonal(const Morphism& phi) const
  {
    std::vector<int> elems;
    for (std::size_t i = 0; i < phi.images.size(); ++i)
      elems.push_back(pair(phi.images[i], phi.domain.elements()[i]));
    std::sort(elems.begin(), elems.end());
    return Subgroup(square_, std::move(elems));
  }

  /// R x 1
  Subgroup left_factor(const Subgroup& r) const
  {
    std::vector<int> elems;
    for (int a : r.elements())
      elems.push_back(pair(a, sylow_.parent().identity()));
    std::sort(elems.begin(), elems.end());
    return Subgroup(square_, std::move(elems));
  }

  /// 1 x R
  Subgroup right_factor(const Subgroup& r) const
  {
    std::vector<int> elems;
    for (int u : r.elements())
      elems.push_back(pair(sylow_.parent().identity(), u));
    std::sort(elems.begin(), elems.end());
    return Subgroup(square_, std::move(elems));
  }

  const std::vector<TwistedClass>& classes() const { return classes_; }
  int class_count() const { return static_cast<int>(classes_.size()); }
  const TwistedClass& at(int id) const { return classes_[id]; }
  const Subgroup& representative(int id) const { return reps_[id]; }

  /// Class id of a twisted diagonal subgroup of S x S, or -1 if h is not one.
  int class_of(const Subgroup& h) const
  {
    auto it = lookup_.find(h.elements());
    return it == lookup_.end() ? -1 : it->second;
  }

  int class_of(const Morphism& phi) const { return class_of(diagonal(phi)); }

  /// Class of [phi^-1, phi(Q)], the orbit type of the opposite biset.
  int opposite(int id) const { return opposite_[id]; }

  /// Number of fixed points of H on the transitive biset of class `of`:
  /// (1/|D|) #{x in S x S : x^-1 H x <= D}.
  std::int64_t mark(const Subgroup& h, int of) const
  {
    const Subgroup& d = reps_[of];
    std::int64_t count = 0;
    for (int x = 0; x < square_.order(); ++x) {
      int xi = square_.inv(x);
      bool inside = true;
      for (int y : h.elements())
        if (!d.contains(square_.conj(xi, y))) {
          inside = false;
          break;
        }
      if (inside)
        ++count;
    }
    return count / d.order();
  }

  /// Table of marks restricted to twisted classes: fixed points of the
  /// representative of class `at` on the transitive biset of class `of`.
  std::int64_t mark(int at, int of) const
  {
    return marks_[static_cast<std::size_t>(at) * classes_.size() + of];
  }

  /// |S|^2 / |Q|
  std::int64_t orbit_size(int id) const
  {
    return static_cast<std::int64_t>(sylow_.order()) * sylow_.order() / classes_[id].Q().order();
  }

  /// Subgroups of S of prime order p (all of them), for bifreeness certificates.
  std::vector<Subgroup> prime_order_subgroups() const
  {
    std::vector<Subgroup> out;
    for (const auto& r : subgroups_)
      if (r.order() > 1 && is_prime(r.order()))
        out.push_back(r);
    return out;
  }

 private:
  struct Candidate {
    Morphism phi;
    Subgroup delta;
  };

  static bool canonical_less(const Morphism& a, const Morphism& b)
  {
    if (a.domain.order() != b.domain.order())
      return a.domain.order() > b.domain.order();
    if (a.domain.elements() != b.domain.elements())
      return a.domain.elements() < b.domain.elements();
    return a.images < b.images;
  }

  void build_classes()
  {
    std::vector<Candidate> all;
    std::map<std::vector<int>, int> where;
    for (const auto& q : subgroups_)
      for (auto& phi : injective_homs(q, sylow_)) {
        Subgroup d = diagonal(phi);
        where[d.elements()] = static_cast<int>(all.size());
        all.push_back(Candidate{std::move(phi), std::move(d)});
      }

    std::vector<int> assigned(all.size(), -1);
    std::vector<std::vector<int>> groups;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (assigned[i] >= 0)
        continue;
      std::vector<int> members;
      for (int x = 0; x < square_.order(); ++x) {
        int j = where.at(conjugate(all[i].delta, x).elements());
        if (assigned[j] < 0) {
          assigned[j] = static_cast<int>(groups.size());
          members.push_back(j);
        }
      }
      groups.push_back(std::move(members));
    }

    std::vector<int> rep_of_group;
    for (const auto& members : groups) {
      int best = members.front();
      for (int j : members)
        if (canonical_less(all[j].phi, all[best].phi))
          best = j;
      rep_of_group.push_back(best);
    }
    std::vector<int> order(groups.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return canonical_less(all[rep_of_group[a]].phi, all[rep_of_group[b]].phi);
    });
    std::vector<int> id_of_group(groups.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      int gi = order[k];
      id_of_group[gi] = static_cast<int>(k);
      const Candidate& c = all[rep_of_group[gi]];
      classes_.push_back(TwistedClass{c.phi, static_cast<int>(k)});
      reps_.push_back(c.delta);
    }
    for (std::size_t i = 0; i < all.size(); ++i)
      lookup_[all[i].delta.elements()] = id_of_group[assigned[i]];

    opposite_.resize(classes_.size());
    for (std::size_t k = 0; k < classes_.size(); ++k) {
      std::vector<int> swapped;
      for (int x : reps_[k].elements()) {
        auto [a, u] = components_[x];
        swapped.push_back(pair(u, a));
      }
      std::sort(swapped.begin(), swapped.end());
      opposite_[k] = lookup_.at(swapped);
    }
  }

  void build_marks()
  {
    const std::size_t k = classes_.size();
    marks_.assign(k * k, 0);
    for (std::size_t at = 0; at < k; ++at)
      for (std::size_t of = 0; of < k; ++of) {
        // fixed points only when |Q_at| <= |Q_of|
        if (reps_[at].order() > reps_[of].order())
          continue;
        marks_[at * k + of] = mark(reps_[at], static_cast<int>(of));
      }
  }

  Subgroup sylow_;
  Group square_;
  std::vector<std::pair<int, int>> components_;
  std::vector<int> pair_;
  std::vector<Subgroup> subgroups_;
  std::vector<TwistedClass> classes_;
  std::vector<Subgroup> reps_;
  std::map<std::vector<int>, int> lookup_;
  std::vector<int> opposite_;
  std::vector<std::int64_t> marks_;
};

/// All twisted diagonal classes of S x S in canonical order.
inline std::vector<TwistedClass> twisted_classes(const Subgroup& sylow)
{
  return TwistedDiagonals(sylow).classes();
}

/// (psi, Q) is F x F-subconjugate to (id, P): some chi in F(Q, P) and
/// chi' in F(psi(Q), P) satisfy chi = chi' o psi.
inline bool fxf_subconjugate(const FusionSystem& F, const TwistedClass& a, const TwistedClass& b)
{
  if (!b.phi.is_inclusion())
    throw ArgumentNotUntwisted("second class must be of the form (id, P)");
  const Subgroup& Q = a.Q();
  const Subgroup& P = b.Q();
  const Subgroup psiQ = a.phi.image();
  const auto& chis = F.hom_set(Q, P);
  const auto& chi_primes = F.hom_set(psiQ, P);
  for (const auto& chi : chis)
    for (const auto& chi2 : chi_primes)
      if (compose(chi2, a.phi).images == chi.images)
        return true;
  return false;
}

}  // namespace blockbiset
