#include "polarscope/forms.hpp"

#include <algorithm>
#include <stdexcept>

#include "polarscope/error.hpp"
#include "polarscope/isotropic.hpp"

namespace polarscope {

std::string_view to_string(FormKind kind) {
  switch (kind) {
    case FormKind::parabolic: return "quadratic-parabolic";
    case FormKind::hyperbolic: return "quadratic-hyperbolic";
    case FormKind::elliptic: return "quadratic-elliptic";
    case FormKind::hermitian: return "hermitian";
    case FormKind::symplectic: return "symplectic";
  }
  return "?";
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::elliptic: return "elliptic";
    case Family::parabolic: return "parabolic";
    case Family::hyperbolic: return "hyperbolic";
    case Family::hermitian_odd: return "hermitian-odd";
    case Family::hermitian_even: return "hermitian-even";
    case Family::symplectic: return "symplectic";
  }
  return "?";
}

FormKind form_kind_from_string(std::string_view s) {
  for (auto k : {FormKind::parabolic, FormKind::hyperbolic, FormKind::elliptic, FormKind::hermitian,
                 FormKind::symplectic}) {
    if (to_string(k) == s) return k;
  }
  throw InvalidArgument("unknown form kind '" + std::string(s) + "'");
}

Family family_from_string(std::string_view s) {
  for (auto f : {Family::elliptic, Family::parabolic, Family::hyperbolic, Family::hermitian_odd,
                 Family::hermitian_even, Family::symplectic}) {
    if (to_string(f) == s) return f;
  }
  throw InvalidArgument("unknown family '" + std::string(s) + "'");
}

FormKind form_kind_of(Family family) {
  switch (family) {
    case Family::elliptic: return FormKind::elliptic;
    case Family::parabolic: return FormKind::parabolic;
    case Family::hyperbolic: return FormKind::hyperbolic;
    case Family::hermitian_odd:
    case Family::hermitian_even: return FormKind::hermitian;
    case Family::symplectic: return FormKind::symplectic;
  }
  return FormKind::symplectic;
}

bool is_quadratic(FormKind kind) {
  return kind == FormKind::parabolic || kind == FormKind::hyperbolic || kind == FormKind::elliptic;
}

FormSpec FormSpec::make(FormKind kind, FieldPtr field, int ambient_dim, Matrix data) {
  if (!field) throw InvalidArgument("form requires a field");
  const Field& f = *field;
  const int n = ambient_dim + 1;
  if (ambient_dim < 0 || data.rows != n || data.cols != n) {
    throw InvalidArgument("form matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  for (Element x : data.data) {
    if (x >= f.order()) throw InvalidArgument("form matrix entry out of field range");
  }
  Matrix gram(n, n);
  if (is_quadratic(kind)) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j) {
        if (data(i, j) != 0) throw InvalidArgument("quadratic coefficients must be upper triangular");
      }
    }
    for (int i = 0; i < n; ++i) {
      gram(i, i) = f.add(data(i, i), data(i, i));
      for (int j = i + 1; j < n; ++j) gram(i, j) = gram(j, i) = data(i, j);
    }
  } else if (kind == FormKind::symplectic) {
    for (int i = 0; i < n; ++i) {
      if (data(i, i) != 0) throw InvalidArgument("alternating Gram matrix must have zero diagonal");
      for (int j = i + 1; j < n; ++j) {
        if (data(j, i) != f.neg(data(i, j))) throw InvalidArgument("alternating Gram matrix must be skew");
      }
    }
    gram = data;
  } else {
    if (!f.has_conjugation()) throw InvalidArgument("Hermitian forms need a field of square order");
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        if (data(j, i) != f.conj(data(i, j))) throw InvalidArgument("Hermitian Gram matrix must satisfy M = conj(M^T)");
      }
    }
    gram = data;
  }
  FormSpec form(kind, std::move(field), ambient_dim, std::move(data), std::move(gram));
  if (!radical(form).is_empty()) throw InvalidArgument("form is degenerate");
  return form;
}

Element FormSpec::value(std::span<const Element> v) const {
  const Field& f = *field_;
  const int n = ambient_ + 1;
  if (is_quadratic(kind_)) {
    Element s = 0;
    for (int i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      Element row = 0;
      for (int j = i; j < n; ++j) {
        if (data_(i, j) != 0 && v[j] != 0) row = f.add(row, f.mul(data_(i, j), v[j]));
      }
      s = f.add(s, f.mul(v[i], row));
    }
    return s;
  }
  if (kind_ == FormKind::symplectic) return 0;
  const Element s = pair(v, v);
  if (f.conj(s) != s) throw std::logic_error("Hermitian form value outside the fixed subfield");
  return s;
}

Element FormSpec::pair(std::span<const Element> x, std::span<const Element> y) const {
  const Field& f = *field_;
  const int n = ambient_ + 1;
  Element s = 0;
  const bool herm = kind_ == FormKind::hermitian;
  for (int j = 0; j < n; ++j) {
    if (y[j] == 0) continue;
    Element col = 0;
    for (int i = 0; i < n; ++i) {
      if (x[i] != 0 && gram_(i, j) != 0) col = f.add(col, f.mul(x[i], gram_(i, j)));
    }
    s = f.add(s, f.mul(col, herm ? f.conj(y[j]) : y[j]));
  }
  return s;
}

std::vector<Element> FormSpec::orthogonality_covector(std::span<const Element> x) const {
  const Field& f = *field_;
  const int n = ambient_ + 1;
  std::vector<Element> c(n, 0);
  for (int j = 0; j < n; ++j) {
    Element col = 0;
    for (int i = 0; i < n; ++i) {
      if (x[i] != 0 && gram_(i, j) != 0) col = f.add(col, f.mul(x[i], gram_(i, j)));
    }
    // sum_j col_j conj(y_j) = 0  <=>  sum_j conj(col_j) y_j = 0
    c[j] = kind_ == FormKind::hermitian ? f.conj(col) : col;
  }
  return c;
}

Pairing polarize(const FormSpec& form) { return Pairing(form); }

int ambient_dim_for(Family family, int rank) {
  switch (family) {
    case Family::elliptic: return 2 * rank + 1;
    case Family::parabolic: return 2 * rank;
    case Family::hyperbolic: return 2 * rank - 1;
    case Family::hermitian_odd: return 2 * rank - 1;
    case Family::hermitian_even: return 2 * rank;
    case Family::symplectic: return 2 * rank - 1;
  }
  return -1;
}

FormSpec standard_form(Family family, int rank, FieldPtr field) {
  if (!field) throw InvalidArgument("standard form requires a field");
  if (rank < 1) throw InvalidArgument("rank must be at least 1");
  const Field& f = *field;
  const int n = ambient_dim_for(family, rank);
  Matrix m(n + 1, n + 1);
  switch (family) {
    case Family::parabolic:
      m(0, 0) = 1;
      for (int i = 1; i + 1 <= n; i += 2) m(i, i + 1) = 1;
      break;
    case Family::hyperbolic:
      for (int i = 0; i + 1 <= n; i += 2) m(i, i + 1) = 1;
      break;
    case Family::elliptic: {
      // x0^2 + a x0 x1 + b x1^2 with t^2 + a t + b irreducible; smallest (a, b).
      bool found = false;
      for (Element a = 0; a < f.order() && !found; ++a) {
        for (Element b = 1; b < f.order() && !found; ++b) {
          bool has_root = false;
          for (Element t = 0; t < f.order() && !has_root; ++t) {
            has_root = f.add(f.add(f.mul(t, t), f.mul(a, t)), b) == 0;
          }
          if (!has_root) {
            m(0, 0) = 1;
            m(0, 1) = a;
            m(1, 1) = b;
            found = true;
          }
        }
      }
      for (int i = 2; i + 1 <= n; i += 2) m(i, i + 1) = 1;
      break;
    }
    case Family::hermitian_even:
      if (!f.has_conjugation()) throw InvalidArgument("Hermitian spaces need a field of square order (h even)");
      m(0, 0) = 1;
      for (int i = 1; i + 1 <= n; i += 2) m(i, i + 1) = m(i + 1, i) = 1;
      break;
    case Family::hermitian_odd:
      if (!f.has_conjugation()) throw InvalidArgument("Hermitian spaces need a field of square order (h even)");
      for (int i = 0; i + 1 <= n; i += 2) m(i, i + 1) = m(i + 1, i) = 1;
      break;
    case Family::symplectic:
      for (int i = 0; i + 1 <= n; i += 2) {
        m(i, i + 1) = 1;
        m(i + 1, i) = f.neg(1);
      }
      break;
  }
  return FormSpec::make(form_kind_of(family), std::move(field), n, std::move(m));
}

Element evaluate(const FormSpec& form, const Subspace& point) {
  if (point.ambient_dim() != form.ambient_dim() || point.dim() != 0) {
    throw InvalidArgument("evaluate expects a point of PG(" + std::to_string(form.ambient_dim()) + ")");
  }
  return form.value(point.row(0));
}

Subspace perp(const FormSpec& form, const Subspace& u) {
  if (u.ambient_dim() != form.ambient_dim()) throw InvalidArgument("subspace not in the form's ambient space");
  Matrix eqs(0, form.ambient_dim() + 1);
  for (int r = 0; r < u.rank(); ++r) eqs.append_row(form.orthogonality_covector(u.row(r)));
  return Subspace::from_matrix(form.field(), form.ambient_dim(), null_space(form.field(), eqs));
}

bool is_totally_singular(const FormSpec& form, const Subspace& u) {
  if (u.ambient_dim() != form.ambient_dim()) throw InvalidArgument("subspace not in the form's ambient space");
  for (int i = 0; i < u.rank(); ++i) {
    if (form.value(u.row(i)) != 0) return false;
    for (int j = i + 1; j < u.rank(); ++j) {
      if (form.pair(u.row(i), u.row(j)) != 0) return false;
    }
  }
  return true;
}

Subspace radical(const FormSpec& form, const Subspace& w) {
  const Field& f = form.field();
  Subspace r = intersect(f, w, perp(form, w));
  if (!is_quadratic(form.kind()) || r.is_empty()) return r;
  if (f.p() != 2) return r;  // b(x, x) = 2 Q(x), so Q vanishes on the pairing radical
  // Characteristic 2: Q restricted to r is Frobenius-semilinear,
  // Q(sum a_i r_i) = sum a_i^2 Q(r_i). Solve sum b_i Q(r_i) = 0 and take square roots.
  Matrix values(1, r.rank());
  bool all_zero = true;
  for (int i = 0; i < r.rank(); ++i) {
    values(0, i) = form.value(r.row(i));
    all_zero = all_zero && values(0, i) == 0;
  }
  if (all_zero) return r;
  Matrix sol = null_space(f, values);
  Matrix out(0, r.cols());
  for (int s = 0; s < sol.rows; ++s) {
    std::vector<Element> v(r.cols(), 0);
    for (int i = 0; i < r.rank(); ++i) {
      const Element a = f.frobenius_root(sol(s, i));
      if (a == 0) continue;
      for (int j = 0; j < r.cols(); ++j) v[j] = f.add(v[j], f.mul(a, r.row(i)[j]));
    }
    out.append_row(v);
  }
  return Subspace::from_matrix(f, r.ambient_dim(), std::move(out));
}

Subspace radical(const FormSpec& form) { return radical(form, Subspace::whole(form.ambient_dim())); }

std::vector<std::vector<Element>> singular_points(const FormSpec& form, const Subspace& w) {
  std::vector<std::vector<Element>> out;
  w.for_each_point(form.field(), [&](std::span<const Element> v) {
    if (form.value(v) == 0) out.emplace_back(v.begin(), v.end());
  });
  std::sort(out.begin(), out.end());
  return out;
}

int witt_index(const FormSpec& form, const Subspace& w) {
  auto pts = singular_points(form, w);
  if (pts.empty()) return 0;
  std::vector<Element> flat;
  for (const auto& p : pts) flat.insert(flat.end(), p.begin(), p.end());
  IsotropicGraph graph(form, std::move(flat), form.ambient_dim() + 1);
  return graph.max_rank(w.rank());
}

}  // namespace polarscope
