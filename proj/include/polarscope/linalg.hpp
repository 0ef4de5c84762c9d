#pragma once

#include <span>
#include <vector>

#include "polarscope/gf.hpp"

namespace polarscope {

/// Dense row-major matrix over a finite field.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Element> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}

  Element& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  Element operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
  std::span<Element> row(int r) { return {data.data() + static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols)}; }
  std::span<const Element> row(int r) const {
    return {data.data() + static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols)};
  }
  void append_row(std::span<const Element> values);

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

/// Reduced row-echelon form in place. Zero rows are dropped; returns the rank
/// and fills `pivots` with the pivot column of each remaining row.
int row_reduce(const Field& field, Matrix& m, std::vector<int>* pivots = nullptr);

/// Rows form the RREF basis of { y : m * y^T = 0 }.
Matrix null_space(const Field& field, const Matrix& m);

/// Scales v so that its first nonzero entry is 1. Returns false for the zero vector.
bool normalize(const Field& field, std::span<Element> v);

Element dot(const Field& field, std::span<const Element> a, std::span<const Element> b);

}  // namespace polarscope
