#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "permgroup.hpp"

/**
 * @file field.hpp
 * @brief GF(p^m) in polynomial representation.
 *
 * An element is the polynomial a_0 + a_1 x + ... + a_{m-1} x^{m-1} reduced
 * modulo the smallest monic irreducible of degree m (coefficient order, constant
 * term least significant). Its code is the base-p number with digits a_i.
 * Multiplication and addition go through log/Zech tables that are derived once
 * from the polynomial product, which stays available as mul_reference().
 */

namespace blockbiset {

struct FieldElement {
  std::uint32_t code = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

class GaloisField {
 public:
  GaloisField(int p, int m) : p_(p), m_(m)
  {
    if (!is_prime(p))
      throw std::invalid_argument("field characteristic must be prime");
    if (m < 1)
      throw std::invalid_argument("field degree must be positive");
    q_ = 1;
    for (int i = 0; i < m; ++i)
      q_ *= static_cast<std::uint32_t>(p);
    find_modulus();
    build_tables();
  }

  int characteristic() const { return p_; }
  int degree() const { return m_; }
  std::uint32_t size() const { return q_; }

  /// Monic modulus, coefficients a_0 .. a_m.
  const std::vector<int>& modulus() const { return modulus_; }

  static FieldElement zero() { return {0}; }
  static FieldElement one() { return {1}; }

  FieldElement from_int(long v) const
  {
    long r = v % p_;
    if (r < 0)
      r += p_;
    return {static_cast<std::uint32_t>(r)};
  }

  /// Polynomial coefficients a_0 .. a_{m-1}.
  std::vector<int> coefficients(FieldElement a) const
  {
    std::vector<int> c(m_);
    std::uint32_t v = a.code;
    for (int i = 0; i < m_; ++i) {
      c[i] = static_cast<int>(v % p_);
      v /= p_;
    }
    return c;
  }

  FieldElement from_coefficients(const std::vector<int>& c) const
  {
    std::uint32_t v = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
      int d = ((c[i] % p_) + p_) % p_;
      v = v * p_ + static_cast<std::uint32_t>(d);
    }
    return {v % q_};
  }

  bool is_zero(FieldElement a) const { return a.code == 0; }

  FieldElement add(FieldElement a, FieldElement b) const
  {
    if (p_ == 2)
      return {a.code ^ b.code};
    if (a.code == 0)
      return b;
    if (b.code == 0)
      return a;
    // a + b = a (1 + b/a)
    const std::uint32_t la = log_[a.code];
    const std::uint32_t lb = log_[b.code];
    const std::uint32_t d = lb >= la ? lb - la : lb + (q_ - 1) - la;
    const std::uint32_t z = zech_[d];
    if (z == kNone)
      return zero();
    return {exp_[la + z]};
  }

  FieldElement neg(FieldElement a) const
  {
    if (p_ == 2 || a.code == 0)
      return a;
    return {exp_[log_[a.code] + log_minus_one_]};
  }

  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

  FieldElement mul(FieldElement a, FieldElement b) const
  {
    if (a.code == 0 || b.code == 0)
      return zero();
    return {exp_[log_[a.code] + log_[b.code]]};
  }

  FieldElement inv(FieldElement a) const
  {
    if (a.code == 0)
      throw std::domain_error("inverse of zero");
    std::uint32_t l = log_[a.code];
    return {exp_[l == 0 ? 0 : (q_ - 1) - l]};
  }

  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  FieldElement pow(FieldElement a, std::uint64_t e) const
  {
    if (e == 0)
      return one();
    if (a.code == 0)
      return zero();
    std::uint64_t l = (static_cast<std::uint64_t>(log_[a.code]) * (e % (q_ - 1))) % (q_ - 1);
    return {exp_[l]};
  }

  /// Schoolbook polynomial product reduced by the modulus; no tables.
  FieldElement mul_reference(FieldElement a, FieldElement b) const
  {
    return from_coefficients(poly_mulmod(coefficients(a), coefficients(b)));
  }

  std::string describe() const
  {
    return "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
  }

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;

  std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b) const
  {
    std::vector<long> prod(2 * m_, 0);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j)
        prod[i + j] += static_cast<long>(a[i]) * b[j];
    for (auto& c : prod)
      c %= p_;
    for (int d = 2 * m_ - 1; d >= m_; --d) {
      long c = prod[d] % p_;
      if (c == 0)
        continue;
      // subtract c * x^{d-m} * modulus
      for (int i = 0; i <= m_; ++i)
        prod[d - m_ + i] = ((prod[d - m_ + i] - c * modulus_[i]) % p_ + p_) % p_;
    }
    return std::vector<int>(prod.begin(), prod.begin() + m_);
  }

  /// True iff the monic polynomial f (coefficients low to high) has no monic
  /// factor of degree 1 .. deg/2.
  bool is_irreducible(const std::vector<int>& f) const
  {
    const int n = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= n; ++d) {
      long count = 1;
      for (int i = 0; i < d; ++i)
        count *= p_;
      for (long code = 0; code < count; ++code) {
        std::vector<int> g(d + 1);
        long v = code;
        for (int i = 0; i < d; ++i) {
          g[i] = static_cast<int>(v % p_);
          v /= p_;
        }
        g[d] = 1;
        // remainder of f by g
        std::vector<long> r(f.begin(), f.end());
        for (int k = n; k >= d; --k) {
          long c = ((r[k] % p_) + p_) % p_;
          if (c == 0)
            continue;
          for (int i = 0; i <= d; ++i)
            r[k - d + i] = ((r[k - d + i] - c * g[i]) % p_ + p_) % p_;
        }
        bool zero_rem = true;
        for (int i = 0; i < d; ++i)
          if (((r[i] % p_) + p_) % p_ != 0)
            zero_rem = false;
        if (zero_rem)
          return false;
      }
    }
    return true;
  }

  void find_modulus()
  {
    for (std::uint32_t code = 0; code < q_; ++code) {
      std::vector<int> f(m_ + 1);
      std::uint32_t v = code;
      for (int i = 0; i < m_; ++i) {
        f[i] = static_cast<int>(v % p_);
        v /= p_;
      }
      f[m_] = 1;
      if (m_ == 1 || (f[0] != 0 && is_irreducible(f))) {
        modulus_ = std::move(f);
        return;
      }
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  void build_tables()
  {
    const std::uint32_t n = q_ - 1;
    log_.assign(q_, 0);
    exp_.assign(2 * static_cast<std::size_t>(n) + 1, 0);
    // smallest code generating the multiplicative group
    for (std::uint32_t g = 1; g < q_; ++g) {
      std::uint32_t x = 1;
      std::uint32_t ord = 0;
      do {
        x = mul_reference({x}, {g}).code;
        ++ord;
      } while (x != 1);
      if (ord != n)
        continue;
      x = 1;
      for (std::uint32_t i = 0; i < n; ++i) {
        exp_[i] = x;
        exp_[i + n] = x;
        log_[x] = i;
        x = mul_reference({x}, {g}).code;
      }
      exp_[2 * n] = exp_[0];
      break;
    }
    zech_.assign(n, kNone);
    for (std::uint32_t k = 0; k < n; ++k) {
      std::uint32_t y = exp_[k];
      std::uint32_t d0 = y % p_;
      std::uint32_t y1 = y - d0 + (d0 + 1) % p_;  // y + 1
      zech_[k] = y1 == 0 ? kNone : log_[y1];
    }
    log_minus_one_ = log_[static_cast<std::uint32_t>(p_ - 1)];
  }

  int p_;
  int m_;
  std::uint32_t q_ = 1;
  std::vector<int> modulus_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> zech_;
  std::uint32_t log_minus_one_ = 0;
};

}  // namespace blockbiset
