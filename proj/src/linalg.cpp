#include "polarscope/linalg.hpp"

#include <algorithm>

namespace polarscope {

void Matrix::append_row(std::span<const Element> values) {
  if (rows == 0 && cols == 0) cols = static_cast<int>(values.size());
  data.insert(data.end(), values.begin(), values.end());
  ++rows;
}

int row_reduce(const Field& field, Matrix& m, std::vector<int>* pivots) {
  if (pivots) pivots->clear();
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot_row = -1;
    for (int r = rank; r < m.rows; ++r) {
      if (m(r, col) != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != rank) {
      std::swap_ranges(m.row(pivot_row).begin(), m.row(pivot_row).end(), m.row(rank).begin());
    }
    auto prow = m.row(rank);
    const Element scale = field.inv(prow[col]);
    for (int c = col; c < m.cols; ++c) prow[c] = field.mul(prow[c], scale);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      const Element factor = m(r, col);
      if (factor == 0) continue;
      auto target = m.row(r);
      const Element nf = field.neg(factor);
      for (int c = col; c < m.cols; ++c) {
        if (prow[c] != 0) target[c] = field.add(target[c], field.mul(nf, prow[c]));
      }
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  m.rows = rank;
  m.data.resize(static_cast<std::size_t>(rank) * m.cols);
  return rank;
}

Matrix null_space(const Field& field, const Matrix& m) {
  Matrix reduced = m;
  std::vector<int> pivots;
  row_reduce(field, reduced, &pivots);
  const int n = m.cols;
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  Matrix basis(0, n);
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Element> v(n, 0);
    v[free] = 1;
    for (int r = 0; r < reduced.rows; ++r) v[pivots[r]] = field.neg(reduced(r, free));
    basis.append_row(v);
  }
  row_reduce(field, basis);
  return basis;
}

bool normalize(const Field& field, std::span<Element> v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] != 1) {
      const Element s = field.inv(v[i]);
      for (std::size_t j = i; j < v.size(); ++j) v[j] = field.mul(v[j], s);
    }
    return true;
  }
  return false;
}

Element dot(const Field& field, std::span<const Element> a, std::span<const Element> b) {
  Element s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s = field.add(s, field.mul(a[i], b[i]));
  }
  return s;
}

}  // namespace polarscope
