#pragma once

#include <optional>
#include <vector>

#include "birmap/kpoly.hpp"
#include "birmap/number_field.hpp"

namespace birmap {

using KMatrix = std::vector<std::vector<FieldElem>>;

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> k_rref(KMatrix& m);

// Basis of the right nullspace of m (cols unknowns).
std::vector<std::vector<FieldElem>> k_nullspace(KMatrix m, const FieldPtr& f, size_t cols);

// det(x I - M) by the Faddeev–LeVerrier recurrence (exact in characteristic 0).
KPoly k_charpoly(const KMatrix& m, const FieldPtr& f);

inline std::vector<int> k_rref(KMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rows;
    for (size_t i = rank; i < rows; ++i)
      if (!m[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    FieldElem inv = m[rank][col].inv();
    for (size_t j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      FieldElem f = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++rank;
  }
  return pivots;
}

inline std::vector<std::vector<FieldElem>> k_nullspace(KMatrix m, const FieldPtr& f, size_t cols) {
  std::vector<std::vector<FieldElem>> basis;
  std::vector<int> pivots = k_rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  for (size_t freec = 0; freec < cols; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<FieldElem> v(cols, FieldElem::zero(f));
    v[freec] = FieldElem::one(f);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<size_t>(pivots[r])] = -m[r][freec];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline KPoly k_charpoly(const KMatrix& m, const FieldPtr& f) {
  const size_t n = m.size();
  auto mat_mul = [&](const KMatrix& a, const KMatrix& b) {
    KMatrix c(n, std::vector<FieldElem>(n, FieldElem::zero(f)));
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) {
        if (a[i][k].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) FieldElem::addmul(c[i][j], a[i][k], b[k][j]);
      }
    return c;
  };
  std::vector<FieldElem> coeff(n + 1, FieldElem::zero(f));
  coeff[n] = FieldElem::one(f);
  KMatrix b(n, std::vector<FieldElem>(n, FieldElem::zero(f)));
  for (size_t i = 0; i < n; ++i) b[i][i] = FieldElem::one(f);
  KMatrix mb = b;
  for (size_t k = 1; k <= n; ++k) {
    mb = mat_mul(m, b);
    FieldElem tr = FieldElem::zero(f);
    for (size_t i = 0; i < n; ++i) tr += mb[i][i];
    FieldElem ck = -(tr.scaled(Rat(1, static_cast<long>(k))));
    coeff[n - k] = ck;
    b = mb;
    for (size_t i = 0; i < n; ++i) b[i][i] += ck;
  }
  return KPoly(f, std::move(coeff));
}

}  // namespace birmap
