#include "polarscope/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "polarscope/error.hpp"

namespace polarscope {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw InvalidArgument("ambient mismatch: PG(" + std::to_string(a.ambient_dim()) + ") vs PG(" +
                          std::to_string(b.ambient_dim()) + ")");
  }
}

}  // namespace

Subspace Subspace::empty(int ambient_dim) { return Subspace(ambient_dim, Matrix(0, ambient_dim + 1)); }

Subspace Subspace::whole(int ambient_dim) {
  Matrix m(ambient_dim + 1, ambient_dim + 1);
  for (int i = 0; i <= ambient_dim; ++i) m(i, i) = 1;
  return Subspace(ambient_dim, std::move(m));
}

Subspace Subspace::from_rows(const Field& field, int ambient_dim, const std::vector<std::vector<Element>>& rows) {
  Matrix m(0, ambient_dim + 1);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != ambient_dim + 1) {
      throw InvalidArgument("row length " + std::to_string(r.size()) + " does not match PG(" +
                            std::to_string(ambient_dim) + ")");
    }
    for (auto x : r) {
      if (x >= field.order()) throw InvalidArgument("field element " + std::to_string(x) + " out of range");
    }
    m.append_row(r);
  }
  return from_matrix(field, ambient_dim, std::move(m));
}

Subspace Subspace::from_matrix(const Field& field, int ambient_dim, Matrix m) {
  if (m.cols != ambient_dim + 1) throw InvalidArgument("matrix width does not match ambient dimension");
  row_reduce(field, m);
  return Subspace(ambient_dim, std::move(m));
}

Subspace Subspace::point(const Field& field, std::span<const Element> v) {
  Matrix m(0, static_cast<int>(v.size()));
  m.append_row(v);
  auto s = from_matrix(field, static_cast<int>(v.size()) - 1, std::move(m));
  if (s.is_empty()) throw InvalidArgument("the zero vector is not a projective point");
  return s;
}

Subspace Subspace::from_canonical(int ambient_dim, Matrix rref) {
  assert(rref.cols == ambient_dim + 1);
  return Subspace(ambient_dim, std::move(rref));
}

std::vector<std::vector<Element>> Subspace::rows() const {
  std::vector<std::vector<Element>> out;
  out.reserve(basis_.rows);
  for (int r = 0; r < basis_.rows; ++r) out.emplace_back(basis_.row(r).begin(), basis_.row(r).end());
  return out;
}

std::vector<int> Subspace::pivots() const {
  std::vector<int> out;
  for (int r = 0; r < basis_.rows; ++r) {
    auto row = basis_.row(r);
    auto it = std::find_if(row.begin(), row.end(), [](Element x) { return x != 0; });
    out.push_back(static_cast<int>(it - row.begin()));
  }
  return out;
}

bool Subspace::contains(const Field& field, std::span<const Element> v) const {
  std::vector<Element> w(v.begin(), v.end());
  const auto piv = pivots();
  for (int r = 0; r < basis_.rows; ++r) {
    const Element c = w[piv[r]];
    if (c == 0) continue;
    const Element nc = field.neg(c);
    auto row = basis_.row(r);
    for (int j = piv[r]; j < cols(); ++j) {
      if (row[j] != 0) w[j] = field.add(w[j], field.mul(nc, row[j]));
    }
  }
  return std::all_of(w.begin(), w.end(), [](Element x) { return x == 0; });
}

bool Subspace::contains(const Field& field, const Subspace& other) const {
  if (other.ambient_ != ambient_ || other.rank() > rank()) return false;
  for (int r = 0; r < other.rank(); ++r) {
    if (!contains(field, other.row(r))) return false;
  }
  return true;
}

void Subspace::for_each_point(const Field& field, const std::function<void(std::span<const Element>)>& fn) const {
  const int r = rank();
  const int c = cols();
  const std::uint32_t q = field.order();
  std::vector<Element> coeff(r, 0);
  std::vector<Element> v(c, 0);
  for (int lead = 0; lead < r; ++lead) {
    std::fill(coeff.begin(), coeff.end(), 0);
    coeff[lead] = 1;
    while (true) {
      std::fill(v.begin(), v.end(), 0);
      for (int i = lead; i < r; ++i) {
        if (coeff[i] == 0) continue;
        auto row = basis_.row(i);
        for (int j = 0; j < c; ++j) {
          if (row[j] != 0) v[j] = field.add(v[j], field.mul(coeff[i], row[j]));
        }
      }
      fn(v);
      int pos = r - 1;
      while (pos > lead) {
        if (++coeff[pos] < q) break;
        coeff[pos] = 0;
        --pos;
      }
      if (pos == lead) break;
    }
  }
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  if (auto c = a.basis_.rows <=> b.basis_.rows; c != 0) return c;
  return std::lexicographical_compare_three_way(a.basis_.data.begin(), a.basis_.data.end(), b.basis_.data.begin(),
                                                b.basis_.data.end());
}

std::size_t Subspace::hash() const {
  std::size_t h = static_cast<std::size_t>(ambient_) * 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(basis_.rows);
  for (Element x : basis_.data) h = (h ^ x) * 0x100000001b3ULL;
  return h;
}

Subspace span(const Field& field, const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  Matrix m = a.basis();
  m.cols = a.cols();
  for (int r = 0; r < b.rank(); ++r) m.append_row(b.row(r));
  return Subspace::from_matrix(field, a.ambient_dim(), std::move(m));
}

Subspace intersect(const Field& field, const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const int c = a.cols();
  if (a.is_empty() || b.is_empty()) return Subspace::empty(a.ambient_dim());
  Matrix z(a.rank() + b.rank(), 2 * c);
  for (int r = 0; r < a.rank(); ++r) {
    for (int j = 0; j < c; ++j) z(r, j) = z(r, c + j) = a.row(r)[j];
  }
  for (int r = 0; r < b.rank(); ++r) {
    for (int j = 0; j < c; ++j) z(a.rank() + r, j) = b.row(r)[j];
  }
  std::vector<int> pivots;
  row_reduce(field, z, &pivots);
  Matrix out(0, c);
  for (int r = 0; r < z.rows; ++r) {
    if (pivots[r] >= c) out.append_row(z.row(r).subspan(c));
  }
  return Subspace::from_matrix(field, a.ambient_dim(), std::move(out));
}

Subspace hyperplane(const Field& field, std::span<const Element> covector) {
  Matrix c(0, static_cast<int>(covector.size()));
  c.append_row(covector);
  if (row_reduce(field, c) == 0) throw InvalidArgument("hyperplane covector is zero");
  return Subspace::from_canonical(static_cast<int>(covector.size()) - 1, null_space(field, c));
}

std::vector<Element> covector_of(const Field& field, const Subspace& h) {
  if (h.dim() != h.ambient_dim() - 1) throw InvalidArgument("not a hyperplane");
  Matrix c = null_space(field, h.basis());
  return {c.row(0).begin(), c.row(0).end()};
}

std::uint64_t points_in_dim(std::uint32_t q, int dim) {
  std::uint64_t total = 0, power = 1;
  for (int i = 0; i <= dim; ++i) {
    total += power;
    power *= q;
  }
  return total;
}

std::uint64_t encode_vector(std::span<const Element> v, std::uint32_t q) {
  std::uint64_t code = 0;
  for (Element x : v) code = code * q + x;
  return code;
}

BigInt gaussian(int n, int k, std::uint64_t q) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n - i)) - 1;
    den *= boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(i + 1)) - 1;
  }
  return num / den;
}

long long choose2(long long m) { return m * (m - 1) / 2; }

bool q_binomial_identity_check(int n, std::uint64_t q, std::uint64_t t) {
  BigInt lhs = 1;
  for (int l = 0; l < n; ++l) lhs *= 1 + boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(l)) * t;
  BigInt rhs = 0;
  for (int l = 0; l <= n; ++l) {
    rhs += boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(choose2(l))) * gaussian(n, l, q) *
           boost::multiprecision::pow(BigInt(t), static_cast<unsigned>(l));
  }
  return lhs == rhs;
}

void for_each_subspace(const Field& field, int n, int k, const std::function<void(const Subspace&)>& fn,
                       std::uint64_t budget) {
  if (k < -1 || k > n) throw InvalidArgument("subspace dimension out of range");
  const BigInt count = gaussian(n + 1, k + 1, field.order());
  if (count > budget) {
    throw BudgetExceeded("enumerating " + count.str() + " subspaces exceeds budget " + std::to_string(budget));
  }
  const int cols = n + 1;
  const int rows = k + 1;
  if (rows == 0) {
    fn(Subspace::empty(n));
    return;
  }
  const std::uint32_t q = field.order();
  std::vector<int> piv(rows);
  for (int i = 0; i < rows; ++i) piv[i] = i;
  while (true) {
    std::vector<bool> is_pivot(cols, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<std::pair<int, int>> free_cells;
    for (int r = 0; r < rows; ++r) {
      for (int c = piv[r] + 1; c < cols; ++c) {
        if (!is_pivot[c]) free_cells.emplace_back(r, c);
      }
    }
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) m(r, piv[r]) = 1;
    std::vector<Element> vals(free_cells.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < free_cells.size(); ++i) m(free_cells[i].first, free_cells[i].second) = vals[i];
      fn(Subspace::from_canonical(n, m));
      std::size_t pos = 0;
      while (pos < vals.size()) {
        if (++vals[pos] < q) break;
        vals[pos] = 0;
        ++pos;
      }
      if (pos == vals.size()) break;
    }
    // Next pivot combination.
    int i = rows - 1;
    while (i >= 0 && piv[i] == cols - rows + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < rows; ++j) piv[j] = piv[j - 1] + 1;
  }
}

std::vector<Subspace> enumerate_subspaces(const Field& field, int n, int k, std::uint64_t budget) {
  std::vector<Subspace> out;
  for_each_subspace(field, n, k, [&](const Subspace& s) { out.push_back(s); }, budget);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polarscope
