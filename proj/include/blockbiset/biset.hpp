#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fusion.hpp"
#include "permgroup.hpp"

/**
 * @file biset.hpp
 * @brief (S,S)-bisets, marks and Moebius inversion over twisted diagonals.
 *
 * A biset is held either as explicit action tables on a point set, as a
 * multiplicity for each transitive orbit type [phi, Q], or both. The point
 * stabilizer of w is {(s1, s2) : s1 w = w s2}; (s1, s2) acts as w -> s1 w s2^-1.
 */

namespace blockbiset {

inline constexpr std::int64_t kMaxExplicitPoints = 65536;

/// Multiplicity per twisted class id.
using Multiplicities = std::vector<std::int64_t>;

/// Explicit action tables. Rows are indexed by the position of s in
/// S.elements(): left[i][w] = s_i w, right[i][w] = w s_i.
struct BisetActions {
  int size = 0;
  std::vector<std::vector<int>> left;
  std::vector<std::vector<int>> right;
};

class Biset {
 public:
  static Biset from_actions(std::shared_ptr<const TwistedDiagonals> lattice, BisetActions actions)
  {
    if (actions.size > kMaxExplicitPoints)
      throw std::length_error("explicit biset exceeds " + std::to_string(kMaxExplicitPoints) +
                              " points");
    Biset b;
    b.lattice_ = std::move(lattice);
    b.size_ = actions.size;
    b.actions_ = std::move(actions);
    b.validate_actions();
    return b;
  }

  static Biset from_multiplicities(std::shared_ptr<const TwistedDiagonals> lattice,
                                   Multiplicities mult)
  {
    if (static_cast<int>(mult.size()) != lattice->class_count())
      throw std::invalid_argument("multiplicity vector has the wrong length");
    Biset b;
    b.size_ = 0;
    for (std::size_t j = 0; j < mult.size(); ++j) {
      if (mult[j] < 0)
        throw std::invalid_argument("negative multiplicity");
      b.size_ += mult[j] * lattice->orbit_size(static_cast<int>(j));
    }
    b.lattice_ = std::move(lattice);
    b.mult_ = std::move(mult);
    return b;
  }

  const TwistedDiagonals& lattice() const { return *lattice_; }
  const std::shared_ptr<const TwistedDiagonals>& shared_lattice() const { return lattice_; }

  bool has_actions() const { return actions_.has_value(); }
  bool has_multiplicities() const { return mult_.has_value(); }
  const BisetActions& actions() const { return *actions_; }
  const Multiplicities& multiplicities() const { return *mult_; }

  std::int64_t size() const { return size_; }

  /// Attaches an orbit multiplicity map to an explicit biset; the sizes must
  /// agree.
  void set_multiplicities(Multiplicities mult)
  {
    std::int64_t total = 0;
    for (std::size_t j = 0; j < mult.size(); ++j)
      total += mult[j] * lattice_->orbit_size(static_cast<int>(j));
    if (total != size_)
      throw std::invalid_argument("multiplicities do not match the biset size");
    mult_ = std::move(mult);
  }

 private:
  void validate_actions() const
  {
    const Subgroup& S = lattice_->sylow();
    const Group& G = S.parent();
    const auto& A = *actions_;
    const int s = S.order();
    if (static_cast<int>(A.left.size()) != s || static_cast<int>(A.right.size()) != s)
      throw std::invalid_argument("action tables need one row per element of S");
    const int e = S.local_index(G.identity());
    for (int w = 0; w < A.size; ++w)
      if (A.left[e][w] != w || A.right[e][w] != w)
        throw std::invalid_argument("identity does not act trivially");
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        const int ij = S.local_index(G.mul(S.elements()[i], S.elements()[j]));
        for (int w = 0; w < A.size; ++w) {
          if (A.left[i][A.left[j][w]] != A.left[ij][w])
            throw std::invalid_argument("left table is not an action");
          if (A.right[j][A.right[i][w]] != A.right[ij][w])
            throw std::invalid_argument("right table is not an action");
          if (A.left[i][A.right[j][w]] != A.right[j][A.left[i][w]])
            throw std::invalid_argument("left and right actions do not commute");
        }
      }
  }

  std::shared_ptr<const TwistedDiagonals> lattice_;
  std::optional<BisetActions> actions_;
  std::optional<Multiplicities> mult_;
  std::int64_t size_ = 0;
};

/// Fixed-point counts at every twisted class, plus counts at R x 1 and 1 x R
/// for the subgroups R of S of prime order. A left (right) action is free iff
/// the corresponding certificate counts are all zero.
struct MarksVector {
  std::vector<std::int64_t> values;
  std::vector<std::int64_t> left_certificate;
  std::vector<std::int64_t> right_certificate;

  bool bifree() const
  {
    for (auto v : left_certificate)
      if (v != 0)
        return false;
    for (auto v : right_certificate)
      if (v != 0)
        return false;
    return true;
  }

  friend bool operator==(const MarksVector&, const MarksVector&) = default;
};

/// One orbit of an explicit biset.
struct BisetOrbit {
  int representative = 0;
  int size = 0;
  Subgroup stabilizer;  // in S x S
  int class_id = -1;    // -1 when the stabilizer is not a twisted diagonal
};

namespace detail {

/// Number of points w with s1 w = w s2 for every (s1, s2) in h.
inline std::int64_t count_fixed(const TwistedDiagonals& L, const BisetActions& A,
                                const Subgroup& h)
{
  const Subgroup& S = L.sylow();
  std::vector<std::pair<int, int>> gens;
  for (int x : generating_sequence(h)) {
    auto [a, u] = L.components(x);
    gens.emplace_back(S.local_index(a), S.local_index(u));
  }
  std::int64_t count = 0;
  for (int w = 0; w < A.size; ++w) {
    bool fixed = true;
    for (auto [a, u] : gens)
      if (A.left[a][w] != A.right[u][w]) {
        fixed = false;
        break;
      }
    if (fixed)
      ++count;
  }
  return count;
}

}  // namespace detail

inline std::vector<BisetOrbit> orbits(const Biset& omega)
{
  const TwistedDiagonals& L = omega.lattice();
  const Group& SS = L.square();
  const Subgroup& S = L.sylow();
  const auto& A = omega.actions();
  std::vector<char> seen(A.size, 0);
  std::vector<BisetOrbit> out;
  for (int w = 0; w < A.size; ++w) {
    if (seen[w])
      continue;
    BisetOrbit orb;
    orb.representative = w;
    std::vector<int> stack{w};
    seen[w] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++orb.size;
      for (int i = 0; i < S.order(); ++i)
        for (int y : {A.left[i][x], A.right[i][x]})
          if (!seen[y]) {
            seen[y] = 1;
            stack.push_back(y);
          }
    }
    std::vector<int> stab;
    for (int x = 0; x < SS.order(); ++x) {
      auto [a, u] = L.components(x);
      if (A.left[S.local_index(a)][w] == A.right[S.local_index(u)][w])
        stab.push_back(x);
    }
    orb.stabilizer = Subgroup(SS, std::move(stab));
    orb.class_id = L.class_of(orb.stabilizer);
    out.push_back(std::move(orb));
  }
  return out;
}

/// Orbit multiplicities of a biset, from the stored map or by an orbit scan.
inline Multiplicities multiplicities_of(const Biset& omega)
{
  if (omega.has_multiplicities())
    return omega.multiplicities();
  Multiplicities m(omega.lattice().class_count(), 0);
  for (const auto& orb : orbits(omega)) {
    if (orb.class_id < 0)
      throw NotBifree("orbit of point " + std::to_string(orb.representative) +
                      " has a stabilizer that is not a twisted diagonal");
    ++m[orb.class_id];
  }
  return m;
}

inline MarksVector marks(const Biset& omega)
{
  const TwistedDiagonals& L = omega.lattice();
  MarksVector out;
  const auto primes = L.prime_order_subgroups();
  if (omega.has_actions()) {
    const auto& A = omega.actions();
    for (int i = 0; i < L.class_count(); ++i)
      out.values.push_back(detail::count_fixed(L, A, L.representative(i)));
    for (const auto& r : primes) {
      out.left_certificate.push_back(detail::count_fixed(L, A, L.left_factor(r)));
      out.right_certificate.push_back(detail::count_fixed(L, A, L.right_factor(r)));
    }
    return out;
  }
  const auto& c = omega.multiplicities();
  out.values.assign(L.class_count(), 0);
  for (int i = 0; i < L.class_count(); ++i)
    for (int j = 0; j < L.class_count(); ++j)
      if (c[j] != 0)
        out.values[i] += c[j] * L.mark(i, j);
  for (const auto& r : primes) {
    std::int64_t lv = 0, rv = 0;
    for (int j = 0; j < L.class_count(); ++j)
      if (c[j] != 0) {
        lv += c[j] * L.mark(L.left_factor(r), j);
        rv += c[j] * L.mark(L.right_factor(r), j);
      }
    out.left_certificate.push_back(lv);
    out.right_certificate.push_back(rv);
  }
  return out;
}

/// Moebius inversion of the table of marks over twisted classes. Class ids run
/// in descending |Q|, and a mark between distinct classes of equal order
/// vanishes, so the system is triangular.
inline Multiplicities multiplicities_from_marks(const TwistedDiagonals& L, const MarksVector& m)
{
  if (!m.bifree())
    throw NotBifree("nonzero fixed points at a one-sided prime-order subgroup");
  const int k = L.class_count();
  Multiplicities c(k, 0);
  for (int i = 0; i < k; ++i) {
    std::int64_t rest = m.values[i];
    for (int j = 0; j < i; ++j)
      if (c[j] != 0)
        rest -= c[j] * L.mark(i, j);
    const std::int64_t diag = L.mark(i, i);
    if (rest < 0 || rest % diag != 0)
      throw NonIntegralSolution("class " + std::to_string(i) + ": residual " +
                                std::to_string(rest) + " over diagonal mark " +
                                std::to_string(diag));
    c[i] = rest / diag;
  }
  return c;
}

/// Omega with s1 . w . s2 := s2^-1 w s1^-1.
inline Biset opposite(const Biset& omega)
{
  const TwistedDiagonals& L = omega.lattice();
  std::optional<Biset> out;
  if (omega.has_actions()) {
    const Subgroup& S = L.sylow();
    const Group& G = S.parent();
    const auto& A = omega.actions();
    BisetActions B;
    B.size = A.size;
    B.left.resize(S.order());
    B.right.resize(S.order());
    for (int i = 0; i < S.order(); ++i) {
      int inv = S.local_index(G.inv(S.elements()[i]));
      B.left[i] = A.right[inv];
      B.right[i] = A.left[inv];
    }
    out = Biset::from_actions(omega.shared_lattice(), std::move(B));
  }
  if (omega.has_multiplicities()) {
    const auto& c = omega.multiplicities();
    Multiplicities d(c.size(), 0);
    for (int j = 0; j < L.class_count(); ++j)
      d[L.opposite(j)] += c[j];
    if (out)
      out->set_multiplicities(std::move(d));
    else
      out = Biset::from_multiplicities(omega.shared_lattice(), std::move(d));
  }
  if (!out)
    throw std::invalid_argument("empty biset representation");
  return *out;
}

/// Omega is isomorphic to its opposite; decided on orbit multiplicities.
inline bool is_symmetric(const Biset& omega)
{
  const TwistedDiagonals& L = omega.lattice();
  const Multiplicities c = multiplicities_of(omega);
  for (int j = 0; j < L.class_count(); ++j)
    if (c[j] != c[L.opposite(j)])
      return false;
  return true;
}

enum class Side { left, right };

/// Marks of the restricted, twisted biset over the twisted diagonals of P x S
/// (left side) or S x P (right side), where P is the domain of phi.
///
/// Left: index set is every (R <= S, alpha: R -> P); the value is the mark of
/// Omega at {(phi(alpha(v)), v)}. Right: index set is every (R <= P,
/// beta: R -> S); the value is the mark of Omega at {(beta(v), phi(v))}. The
/// plain restriction is the case where phi is the inclusion of P.
inline std::vector<std::int64_t> restrict_twist(const TwistedDiagonals& L, const MarksVector& m,
                                               Side side, const Morphism& phi)
{
  const Subgroup& P = phi.domain;
  const Subgroup& S = L.sylow();
  std::vector<std::int64_t> out;
  for (const auto& r : L.subgroups_of_sylow()) {
    if (side == Side::left) {
      for (const auto& alpha : injective_homs(r, P))
        out.push_back(m.values[L.class_of(compose(phi, alpha))]);
    } else {
      if (!P.contains(r))
        continue;
      for (const auto& beta : injective_homs(r, S)) {
        std::vector<int> elems;
        for (std::size_t i = 0; i < r.elements().size(); ++i)
          elems.push_back(L.pair(beta.images[i], phi(r.elements()[i])));
        std::sort(elems.begin(), elems.end());
        out.push_back(m.values[L.class_of(Subgroup(L.square(), std::move(elems)))]);
      }
    }
  }
  return out;
}

inline std::vector<std::int64_t> restrict_twist(const Biset& omega, Side side, const Morphism& phi)
{
  return restrict_twist(omega.lattice(), marks(omega), side, phi);
}

/// One double coset S g S, recorded with its point stabilizer (c_g, S_g),
/// S_g = S cap g^-1 S g.
struct DoubleCoset {
  int representative = 0;
  int size = 0;
  Morphism stabilizer;
  int class_id = -1;
};

/// Double cosets of S in G, ordered by smallest element.
inline std::vector<DoubleCoset> double_cosets(const TwistedDiagonals& L)
{
  const Subgroup& S = L.sylow();
  const Group& G = S.parent();
  std::vector<char> seen(G.order(), 0);
  std::vector<DoubleCoset> out;
  for (int g = 0; g < G.order(); ++g) {
    if (seen[g])
      continue;
    DoubleCoset dc;
    dc.representative = g;
    for (int a : S.elements())
      for (int b : S.elements()) {
        int y = G.mul(G.mul(a, g), b);
        if (!seen[y]) {
          seen[y] = 1;
          ++dc.size;
        }
      }
    std::vector<int> sg;
    for (int u : S.elements())
      if (S.contains(G.conj(g, u)))
        sg.push_back(u);
    dc.stabilizer = conjugation(Subgroup(G, std::move(sg)), g);
    dc.class_id = L.class_of(dc.stabilizer);
    out.push_back(std::move(dc));
  }
  return out;
}

/// _S G _S with explicit actions and the orbit multiplicities read off the
/// double cosets.
inline Biset double_coset_biset(std::shared_ptr<const TwistedDiagonals> lattice)
{
  const Subgroup& S = lattice->sylow();
  const Group& G = S.parent();
  BisetActions A;
  A.size = G.order();
  for (int s : S.elements()) {
    std::vector<int> l(G.order()), r(G.order());
    for (int g = 0; g < G.order(); ++g) {
      l[g] = G.mul(s, g);
      r[g] = G.mul(g, s);
    }
    A.left.push_back(std::move(l));
    A.right.push_back(std::move(r));
  }
  Multiplicities mult(lattice->class_count(), 0);
  for (const auto& dc : double_cosets(*lattice))
    ++mult[dc.class_id];
  Biset b = Biset::from_actions(lattice, std::move(A));
  b.set_multiplicities(std::move(mult));
  return b;
}

}  // namespace blockbiset
