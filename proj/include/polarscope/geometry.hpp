#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polarscope/gf.hpp"
#include "polarscope/linalg.hpp"

namespace polarscope {

using BigInt = boost::multiprecision::cpp_int;

/// A projective subspace of PG(n, q), stored as its reduced row-echelon basis.
///
/// The RREF basis is unique per subspace, so equality, ordering and hashing
/// are structural. Projective dimension is rows - 1; the empty subspace has
/// no rows and dimension -1.
class Subspace {
 public:
  Subspace() = default;

  static Subspace empty(int ambient_dim);
  static Subspace whole(int ambient_dim);
  /// Canonicalizes an arbitrary spanning set (rows may be dependent).
  static Subspace from_rows(const Field& field, int ambient_dim, const std::vector<std::vector<Element>>& rows);
  static Subspace from_matrix(const Field& field, int ambient_dim, Matrix m);
  static Subspace point(const Field& field, std::span<const Element> v);
  /// Rows already in RREF; only checked in debug builds.
  static Subspace from_canonical(int ambient_dim, Matrix rref);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows - 1; }
  int rank() const { return basis_.rows; }
  bool is_empty() const { return basis_.rows == 0; }
  int cols() const { return ambient_ + 1; }

  const Matrix& basis() const { return basis_; }
  std::span<const Element> row(int i) const { return basis_.row(i); }
  std::vector<std::vector<Element>> rows() const;
  /// Pivot column of each basis row.
  std::vector<int> pivots() const;

  bool contains(const Field& field, std::span<const Element> v) const;
  bool contains(const Field& field, const Subspace& other) const;

  /// Calls fn(vector) for each point, as the normalized vector sum a_i * row_i
  /// with leading coefficient 1. Order is deterministic.
  void for_each_point(const Field& field, const std::function<void(std::span<const Element>)>& fn) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_.rows == b.basis_.rows && a.basis_.data == b.basis_.data;
  }
  /// Lexicographic on (ambient, rank, row-major basis entries).
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

  std::size_t hash() const;

 private:
  Subspace(int ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

  int ambient_ = -1;
  Matrix basis_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

/// Smallest subspace containing both. Throws InvalidArgument on ambient mismatch.
Subspace span(const Field& field, const Subspace& a, const Subspace& b);
/// Set-theoretic intersection (Zassenhaus). Throws InvalidArgument on ambient mismatch.
Subspace intersect(const Field& field, const Subspace& a, const Subspace& b);

/// The hyperplane { x : c . x = 0 }. Throws InvalidArgument for the zero covector.
Subspace hyperplane(const Field& field, std::span<const Element> covector);
/// Normalized covector of a hyperplane. Throws InvalidArgument if h is not a hyperplane.
std::vector<Element> covector_of(const Field& field, const Subspace& h);

/// Number of projective points of a subspace of the given projective dimension.
std::uint64_t points_in_dim(std::uint32_t q, int dim);

/// Encodes a vector of field elements as a base-q integer, first coordinate
/// most significant (so integer order is lexicographic order).
std::uint64_t encode_vector(std::span<const Element> v, std::uint32_t q);

/// Gaussian coefficient [n choose k]_q. Standard q-binomial for 0 <= k <= n,
/// zero otherwise (k < 0, k > n, or n < 0).
BigInt gaussian(int n, int k, std::uint64_t q);

/// Generalized binomial C(m, 2) = m(m-1)/2 for any integer m; C(-1, 2) = 1.
long long choose2(long long m);

/// Checks prod_{l<n} (1 + q^l t) == sum_{l<=n} q^C(l,2) [n l]_q t^l exactly.
bool q_binomial_identity_check(int n, std::uint64_t q, std::uint64_t t);

/// Calls fn for every k-dimensional subspace of PG(n, q), grouped by pivot
/// pattern. Throws BudgetExceeded when the count exceeds `budget`.
void for_each_subspace(const Field& field, int n, int k, const std::function<void(const Subspace&)>& fn,
                       std::uint64_t budget = 5'000'000);

/// All k-subspaces of PG(n, q), lexicographically sorted by canonical basis.
std::vector<Subspace> enumerate_subspaces(const Field& field, int n, int k, std::uint64_t budget = 5'000'000);

}  // namespace polarscope
