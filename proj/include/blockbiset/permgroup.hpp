#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

/**
 * @file permgroup.hpp
 * @brief Finite permutation groups small enough to enumerate.
 *
 * A Group materializes its full element list in lexicographic order of the
 * image arrays together with a multiplication table, so that every later
 * stage can work with plain element indices. Subgroups are sorted index sets
 * into their parent group.
 */

namespace blockbiset {

inline constexpr std::size_t kDefaultMaxOrder = 2000;

// ---------------------------------------------------------------------------
// integer helpers

inline bool is_prime(long n)
{
  if (n < 2)
    return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

/// Largest power of p dividing n (n > 0).
inline long p_part(long n, long p)
{
  long r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline std::vector<int> prime_divisors(long n)
{
  std::vector<int> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<int>(d));
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(static_cast<int>(n));
  return out;
}

/// Returns the prime p if n = p^k with k >= 1, 1 if n == 1, and 0 otherwise.
inline long prime_power_base(long n)
{
  if (n == 1)
    return 1;
  auto ps = prime_divisors(n);
  return ps.size() == 1 ? ps.front() : 0;
}

// ---------------------------------------------------------------------------
// Perm

/// A permutation of {0, ..., degree-1}; composition is right-to-left,
/// (g * h)(x) = g(h(x)).
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<int> images) : images_(std::move(images))
  {
    std::vector<char> seen(images_.size(), 0);
    for (int x : images_) {
      if (x < 0 || x >= static_cast<int>(images_.size()) || seen[x])
        throw InvalidPermutation("image array is not a bijection on " +
                                 std::to_string(images_.size()) + " points");
      seen[x] = 1;
    }
  }

  static Perm identity(int degree)
  {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    return Perm(std::move(im));
  }

  /// Builds a permutation from disjoint cycles, e.g. {{0, 1}, {2, 3, 4}}.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles)
  {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0 || c[i] >= degree)
          throw InvalidPermutation("cycle point out of range");
        im[c[i]] = c[(i + 1) % c.size()];
      }
    }
    return Perm(std::move(im));
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  std::span<const int> images() const { return images_; }

  Perm operator*(const Perm& rhs) const
  {
    std::vector<int> im(images_.size());
    for (std::size_t x = 0; x < im.size(); ++x)
      im[x] = images_[rhs.images_[x]];
    Perm out;
    out.images_ = std::move(im);
    return out;
  }

  Perm inverse() const
  {
    std::vector<int> im(images_.size());
    for (std::size_t x = 0; x < im.size(); ++x)
      im[images_[x]] = static_cast<int>(x);
    Perm out;
    out.images_ = std::move(im);
    return out;
  }

  bool is_identity() const
  {
    for (std::size_t x = 0; x < images_.size(); ++x)
      if (images_[x] != static_cast<int>(x))
        return false;
    return true;
  }

  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

// ---------------------------------------------------------------------------
// Group

class Subgroup;

namespace detail {

struct GroupData {
  int degree = 0;
  std::vector<Perm> elements;
  std::vector<int> generators;
  std::vector<int> table;  // row-major, order x order
  std::vector<int> inverse;
  int identity = 0;
};

}  // namespace detail

/// Immutable handle to an enumerated permutation group. Copies share data.
class Group {
 public:
  Group() = default;

  int degree() const { return data_->degree; }
  int order() const { return static_cast<int>(data_->elements.size()); }
  const Perm& element(int i) const { return data_->elements[i]; }
  const std::vector<Perm>& elements() const { return data_->elements; }
  const std::vector<int>& generators() const { return data_->generators; }
  int identity() const { return data_->identity; }

  int mul(int a, int b) const { return data_->table[static_cast<std::size_t>(a) * order() + b]; }
  int inv(int a) const { return data_->inverse[a]; }
  /// g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

  /// Index of a permutation, or -1 when it is not an element.
  int index_of(const Perm& p) const
  {
    auto it = std::lower_bound(data_->elements.begin(), data_->elements.end(), p);
    if (it == data_->elements.end() || *it != p)
      return -1;
    return static_cast<int>(it - data_->elements.begin());
  }

  int element_order(int a) const
  {
    int n = 1;
    for (int x = a; x != identity(); x = mul(x, a))
      ++n;
    return n;
  }

  int exponent() const
  {
    long e = 1;
    for (int i = 0; i < order(); ++i)
      e = std::lcm(e, static_cast<long>(element_order(i)));
    return static_cast<int>(e);
  }

  bool same_as(const Group& other) const { return data_ == other.data_; }
  bool valid() const { return data_ != nullptr; }

  inline Subgroup whole() const;
  inline Subgroup trivial() const;

 private:
  friend Group group_from_generators(int, const std::vector<Perm>&, std::size_t);
  std::shared_ptr<const detail::GroupData> data_;
};

/// Enumerates the closure of gens on `degree` points. Elements are sorted by
/// image array, so indices are reproducible.
inline Group group_from_generators(int degree, const std::vector<Perm>& gens,
                                   std::size_t max_order = kDefaultMaxOrder)
{
  if (degree < 1)
    throw InvalidPermutation("degree must be positive");
  if (max_order < 1)
    throw ClosureExceedsBound("max_order must be at least 1");
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw InvalidPermutation("generator of degree " + std::to_string(g.degree()) +
                               " on a group of degree " + std::to_string(degree));

  std::set<Perm> seen{Perm::identity(degree)};
  std::deque<Perm> queue{Perm::identity(degree)};
  while (!queue.empty()) {
    Perm x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Perm y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > max_order)
          throw ClosureExceedsBound("group closure exceeds " + std::to_string(max_order) +
                                    " elements");
        queue.push_back(std::move(y));
      }
    }
  }

  auto data = std::make_shared<detail::GroupData>();
  data->degree = degree;
  data->elements.assign(seen.begin(), seen.end());
  const int n = static_cast<int>(data->elements.size());
  auto lookup = [&](const Perm& p) {
    auto it = std::lower_bound(data->elements.begin(), data->elements.end(), p);
    return static_cast<int>(it - data->elements.begin());
  };
  data->identity = lookup(Perm::identity(degree));
  data->table.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      data->table[static_cast<std::size_t>(a) * n + b] =
          lookup(data->elements[a] * data->elements[b]);
  data->inverse.resize(n);
  for (int a = 0; a < n; ++a)
    data->inverse[a] = lookup(data->elements[a].inverse());
  for (const auto& g : gens) {
    int i = lookup(g);
    if (std::find(data->generators.begin(), data->generators.end(), i) ==
        data->generators.end())
      data->generators.push_back(i);
  }

  Group out;
  out.data_ = std::move(data);
  return out;
}

// ---------------------------------------------------------------------------
// Subgroup

/// A subgroup of a Group, stored as the sorted list of element indices.
/// Index order agrees with lexicographic order on image arrays.
class Subgroup {
 public:
  Subgroup() = default;

  /// Unchecked; `elements` must be sorted and closed.
  Subgroup(Group parent, std::vector<int> elements)
      : parent_(std::move(parent)), elements_(std::move(elements))
  {
  }

  /// Checked construction from an arbitrary index set.
  static Subgroup from_elements(const Group& parent, std::vector<int> elements)
  {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    Subgroup h(parent, std::move(elements));
    if (h.elements_.empty() || !h.contains(parent.identity()))
      throw NotASubgroup("set does not contain the identity");
    for (int a : h.elements_) {
      if (a < 0 || a >= parent.order())
        throw NotASubgroup("index out of range");
      for (int b : h.elements_)
        if (!h.contains(parent.mul(a, parent.inv(b))))
          throw NotASubgroup("set is not closed under a*b^-1");
    }
    return h;
  }

  const Group& parent() const { return parent_; }
  const std::vector<int>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool is_trivial() const { return elements_.size() == 1; }

  bool contains(int g) const { return std::binary_search(elements_.begin(), elements_.end(), g); }
  bool contains(const Subgroup& h) const
  {
    return std::includes(elements_.begin(), elements_.end(), h.elements_.begin(),
                         h.elements_.end());
  }

  /// Position of g within elements(), or -1.
  int local_index(int g) const
  {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
    if (it == elements_.end() || *it != g)
      return -1;
    return static_cast<int>(it - elements_.begin());
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }

  /// (order, lexicographic element set)
  friend bool operator<(const Subgroup& a, const Subgroup& b)
  {
    if (a.order() != b.order())
      return a.order() < b.order();
    return a.elements_ < b.elements_;
  }

 private:
  Group parent_;
  std::vector<int> elements_;
};

inline Subgroup Group::whole() const
{
  std::vector<int> all(order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(*this, std::move(all));
}

inline Subgroup Group::trivial() const { return Subgroup(*this, {identity()}); }

/// Subgroup generated by the given element indices.
inline Subgroup closure(const Group& g, std::span<const int> gens)
{
  std::vector<char> in(g.order(), 0);
  std::vector<int> found{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (int s : gens) {
      int y = g.mul(found[i], s);
      if (!in[y]) {
        in[y] = 1;
        found.push_back(y);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return Subgroup(g, std::move(found));
}

/// Subgroup generated by h and one extra element.
inline Subgroup closure(const Subgroup& h, int extra)
{
  std::vector<int> gens = h.elements();
  gens.push_back(extra);
  return closure(h.parent(), gens);
}

/// Greedy generating sequence: scan elements in index order, keep those not
/// already in the closure of the kept ones.
inline std::vector<int> generating_sequence(const Subgroup& h)
{
  std::vector<int> gens;
  Subgroup current = h.parent().trivial();
  for (int x : h.elements()) {
    if (current.contains(x))
      continue;
    gens.push_back(x);
    current = closure(h.parent(), gens);
    if (current.order() == h.order())
      break;
  }
  return gens;
}

inline Subgroup intersection(const Subgroup& a, const Subgroup& b)
{
  std::vector<int> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(out));
  return Subgroup(a.parent(), std::move(out));
}

/// g H g^-1
inline Subgroup conjugate(const Subgroup& h, int g)
{
  const Group& G = h.parent();
  std::vector<int> out;
  out.reserve(h.order());
  for (int x : h.elements())
    out.push_back(G.conj(g, x));
  std::sort(out.begin(), out.end());
  return Subgroup(G, std::move(out));
}

/// Conjugacy classes of G, each sorted, ordered by smallest member.
inline std::vector<std::vector<int>> conjugacy_classes(const Group& G)
{
  std::vector<int> cls(G.order(), -1);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < G.order(); ++x) {
    if (cls[x] >= 0)
      continue;
    std::vector<int> c;
    for (int g = 0; g < G.order(); ++g) {
      int y = G.conj(g, x);
      if (cls[y] < 0) {
        cls[y] = static_cast<int>(out.size());
        c.push_back(y);
      }
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

namespace detail {

inline void require_same_parent(const Subgroup& a, const Subgroup& b)
{
  if (!a.parent().same_as(b.parent()))
    throw NotASubgroup("subgroups belong to different groups");
}

}  // namespace detail

/// N_H(P) for an ambient subgroup H.
inline Subgroup normalizer(const Subgroup& ambient, const Subgroup& p)
{
  detail::require_same_parent(ambient, p);
  const Group& G = ambient.parent();
  std::vector<int> out;
  for (int g : ambient.elements()) {
    bool ok = true;
    for (int x : p.elements())
      if (!p.contains(G.conj(g, x))) {
        ok = false;
        break;
      }
    if (ok)
      out.push_back(g);
  }
  return Subgroup(G, std::move(out));
}

/// C_H(P) for an ambient subgroup H.
inline Subgroup centralizer(const Subgroup& ambient, const Subgroup& p)
{
  detail::require_same_parent(ambient, p);
  const Group& G = ambient.parent();
  std::vector<int> out;
  for (int g : ambient.elements()) {
    bool ok = true;
    for (int x : p.elements())
      if (G.mul(g, x) != G.mul(x, g)) {
        ok = false;
        break;
      }
    if (ok)
      out.push_back(g);
  }
  return Subgroup(G, std::move(out));
}

inline Subgroup normalizer(const Group& G, const Subgroup& p) { return normalizer(G.whole(), p); }
inline Subgroup centralizer(const Group& G, const Subgroup& p) { return centralizer(G.whole(), p); }

inline Subgroup center(const Subgroup& h) { return centralizer(h, h); }

inline bool is_p_group(const Subgroup& h, int p)
{
  return p_part(h.order(), p) == h.order();
}

/// Sylow p-subgroup of H by one greedy pass over the p-elements of H in index
/// order: an element is adopted when it keeps the running subgroup a p-group.
/// A single pass suffices: if the result P were not Sylow, some g in
/// N_Q(P) \ P (Q a Sylow containing P) would have been adopted when scanned.
inline Subgroup sylow_subgroup(const Subgroup& h, int p)
{
  const Group& G = h.parent();
  const long target = p_part(h.order(), p);
  Subgroup current = G.trivial();
  for (int x : h.elements()) {
    if (current.order() == target)
      break;
    if (current.contains(x) || p_part(G.element_order(x), p) != G.element_order(x))
      continue;
    Subgroup next = closure(current, x);
    if (is_p_group(next, p))
      current = std::move(next);
  }
  return current;
}

inline Subgroup sylow_subgroup(const Group& G, int p) { return sylow_subgroup(G.whole(), p); }

/// Every subgroup of a p-group, each once, sorted by (order, element set).
inline std::vector<Subgroup> all_subgroups(const Subgroup& s)
{
  if (prime_power_base(s.order()) == 0)
    throw NotPGroup("order " + std::to_string(s.order()) + " is not a prime power");
  const Group& G = s.parent();
  std::set<std::vector<int>> seen{{G.identity()}};
  std::vector<Subgroup> out{G.trivial()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int x : s.elements()) {
      if (out[i].contains(x))
        continue;
      Subgroup next = closure(out[i], x);
      if (seen.insert(next.elements()).second)
        out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// O_p(H): intersection of all H-conjugates of a Sylow p-subgroup.
inline Subgroup p_core(const Subgroup& h, int p)
{
  Subgroup core = sylow_subgroup(h, p);
  for (int g : h.elements()) {
    if (core.is_trivial())
      break;
    core = intersection(core, conjugate(core, g));
  }
  return core;
}

inline Subgroup p_core(const Group& G, int p) { return p_core(G.whole(), p); }

/// C_H(O_p(H)) <= O_p(H)
inline bool is_characteristic_p(const Subgroup& h, int p)
{
  Subgroup core = p_core(h, p);
  return core.contains(centralizer(h, core));
}

inline bool is_characteristic_p(const Group& G, int p) { return is_characteristic_p(G.whole(), p); }

/// N_H(P) has characteristic p for every nonidentity p-subgroup P of H. Every
/// p-subgroup is conjugate into a fixed Sylow subgroup, so it suffices to run
/// over the subgroups of that Sylow subgroup.
inline bool is_local_characteristic_p(const Subgroup& h, int p)
{
  for (const auto& q : all_subgroups(sylow_subgroup(h, p))) {
    if (q.is_trivial())
      continue;
    if (!is_characteristic_p(normalizer(h, q), p))
      return false;
  }
  return true;
}

inline bool is_local_characteristic_p(const Group& G, int p)
{
  return is_local_characteristic_p(G.whole(), p);
}

// ---------------------------------------------------------------------------
// Morphisms between subgroups

/// An injective group map given as an explicit table on its domain.
struct Morphism {
  Subgroup domain;
  std::vector<int> images;  // images[i] is the image of domain.elements()[i]
  int witness = -1;         // g with map = c_g restricted to domain, when known

  int operator()(int x) const { return images[domain.local_index(x)]; }

  Subgroup image() const
  {
    std::vector<int> im = images;
    std::sort(im.begin(), im.end());
    return Subgroup(domain.parent(), std::move(im));
  }

  bool is_inclusion() const { return images == domain.elements(); }

  friend bool operator==(const Morphism& a, const Morphism& b)
  {
    return a.domain == b.domain && a.images == b.images;
  }
};

inline Morphism inclusion(const Subgroup& q)
{
  return Morphism{q, q.elements(), q.parent().identity()};
}

/// c_g restricted to q.
inline Morphism conjugation(const Subgroup& q, int g)
{
  Morphism m{q, {}, g};
  m.images.reserve(q.order());
  for (int x : q.elements())
    m.images.push_back(q.parent().conj(g, x));
  return m;
}

/// outer after inner; inner's image must lie in outer's domain.
inline Morphism compose(const Morphism& outer, const Morphism& inner)
{
  Morphism m{inner.domain, {}, -1};
  m.images.reserve(inner.images.size());
  for (int y : inner.images)
    m.images.push_back(outer(y));
  if (outer.witness >= 0 && inner.witness >= 0)
    m.witness = inner.domain.parent().mul(outer.witness, inner.witness);
  return m;
}

inline Morphism inverse(const Morphism& m)
{
  Subgroup img = m.image();
  Morphism out{img, std::vector<int>(img.order()), -1};
  for (std::size_t i = 0; i < m.images.size(); ++i)
    out.images[img.local_index(m.images[i])] = m.domain.elements()[i];
  if (m.witness >= 0)
    out.witness = m.domain.parent().inv(m.witness);
  return out;
}

namespace detail {

/// Extends generator images to a homomorphism on q, if one exists.
inline std::optional<std::vector<int>> extend_to_hom(const Subgroup& q,
                                                     const std::vector<int>& gens,
                                                     const std::vector<int>& gen_images)
{
  const Group& G = q.parent();
  std::vector<int> img(q.order(), -1);
  std::vector<int> order{G.identity()};
  img[q.local_index(G.identity())] = G.identity();
  for (std::size_t i = 0; i < order.size(); ++i) {
    int x = order[i];
    int fx = img[q.local_index(x)];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int y = G.mul(x, gens[k]);
      int fy = G.mul(fx, gen_images[k]);
      int& slot = img[q.local_index(y)];
      if (slot < 0) {
        slot = fy;
        order.push_back(y);
      } else if (slot != fy) {
        return std::nullopt;
      }
    }
  }
  return img;
}

}  // namespace detail

/// Every injective homomorphism q -> t, sorted by image table.
inline std::vector<Morphism> injective_homs(const Subgroup& q, const Subgroup& t)
{
  detail::require_same_parent(q, t);
  const Group& G = q.parent();
  std::vector<Morphism> out;
  if (q.order() > t.order())
    return out;
  const std::vector<int> gens = generating_sequence(q);
  std::vector<std::vector<int>> candidates;
  for (int g : gens) {
    std::vector<int> c;
    for (int y : t.elements())
      if (G.element_order(y) == G.element_order(g))
        c.push_back(y);
    candidates.push_back(std::move(c));
  }
  std::vector<std::size_t> pos(gens.size(), 0);
  std::vector<int> chosen(gens.size());
  while (true) {
    bool exhausted = false;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (candidates[k].empty()) {
        exhausted = true;
        break;
      }
      chosen[k] = candidates[k][pos[k]];
    }
    if (exhausted)
      break;
    if (auto img = detail::extend_to_hom(q, gens, chosen)) {
      std::vector<int> sorted = *img;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end())
        out.push_back(Morphism{q, std::move(*img), -1});
    }
    std::size_t k = 0;
    while (k < gens.size() && ++pos[k] == candidates[k].size())
      pos[k++] = 0;
    if (k == gens.size())
      break;
  }
  std::sort(out.begin(), out.end(),
            [](const Morphism& a, const Morphism& b) { return a.images < b.images; });
  return out;
}

}  // namespace blockbiset
