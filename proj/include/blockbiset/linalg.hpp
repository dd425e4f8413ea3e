#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "field.hpp"

// Exact linear algebra over GF(p^m). Pivoting is always on the first nonzero
// entry in column order, so every result is reproducible.

namespace blockbiset {

using FieldVector = std::vector<FieldElement>;

/// v += c * w, from column `from` on.
inline void axpy(const GaloisField& F, FieldVector& v, FieldElement c, const FieldVector& w,
                 std::size_t from = 0)
{
  if (F.is_zero(c))
    return;
  for (std::size_t j = from; j < v.size(); ++j)
    if (!F.is_zero(w[j]))
      v[j] = F.add(v[j], F.mul(c, w[j]));
}

inline bool is_zero_vector(const FieldVector& v)
{
  for (auto x : v)
    if (x.code != 0)
      return false;
  return true;
}

/// Incrementally built row-echelon basis of a subspace of F^dim.
class EchelonSpan {
 public:
  EchelonSpan(const GaloisField& field, std::size_t dim) : field_(&field), dim_(dim) {}

  /// Adds v to the span; returns true when the rank grew.
  bool insert(FieldVector v)
  {
    auto pivot = reduce(v);
    if (!pivot)
      return false;
    FieldElement s = field_->inv(v[*pivot]);
    for (std::size_t j = *pivot; j < dim_; ++j)
      v[j] = field_->mul(s, v[j]);
    rows_.push_back(std::move(v));
    pivots_.push_back(*pivot);
    return true;
  }

  bool contains(FieldVector v) const { return !reduce(v).has_value(); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return dim_; }
  const std::vector<FieldVector>& rows() const { return rows_; }

 private:
  /// Reduces v against the stored rows; returns its pivot if nonzero.
  std::optional<std::size_t> reduce(FieldVector& v) const
  {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      FieldElement c = v[pivots_[r]];
      if (!field_->is_zero(c))
        axpy(*field_, v, field_->neg(c), rows_[r], pivots_[r]);
    }
    for (std::size_t j = 0; j < dim_; ++j)
      if (!field_->is_zero(v[j]))
        return j;
    return std::nullopt;
  }

  const GaloisField* field_;
  std::size_t dim_;
  std::vector<FieldVector> rows_;
  std::vector<std::size_t> pivots_;
};

inline std::size_t rank(const GaloisField& F, const std::vector<FieldVector>& rows,
                        std::size_t dim)
{
  EchelonSpan span(F, dim);
  for (const auto& r : rows)
    span.insert(r);
  return span.rank();
}

/// Basis of {x in F^ncols : A x = 0}, A given by its rows.
inline std::vector<FieldVector> nullspace(const GaloisField& F, std::vector<FieldVector> a,
                                          std::size_t ncols)
{
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && F.is_zero(a[sel][col]))
      ++sel;
    if (sel == a.size())
      continue;
    std::swap(a[row], a[sel]);
    FieldElement s = F.inv(a[row][col]);
    for (std::size_t j = col; j < ncols; ++j)
      a[row][j] = F.mul(s, a[row][j]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || F.is_zero(a[r][col]))
        continue;
      axpy(F, a[r], F.neg(a[r][col]), a[row], col);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<char> is_pivot(ncols, 0);
  for (auto c : pivot_cols)
    is_pivot[c] = 1;
  std::vector<FieldVector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free])
      continue;
    FieldVector x(ncols, GaloisField::zero());
    x[free] = GaloisField::one();
    for (std::size_t r = 0; r < pivot_cols.size(); ++r)
      x[pivot_cols[r]] = F.neg(a[r][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace blockbiset
