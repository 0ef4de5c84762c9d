#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polarscope/geometry.hpp"
#include "polarscope/gf.hpp"
#include "polarscope/linalg.hpp"

namespace polarscope {

enum class FormKind { parabolic, hyperbolic, elliptic, hermitian, symplectic };

/// The six rows of the table of finite classical polar spaces.
enum class Family { elliptic, parabolic, hyperbolic, hermitian_odd, hermitian_even, symplectic };

std::string_view to_string(FormKind kind);   // "quadratic-parabolic", ..., "hermitian", "symplectic"
std::string_view to_string(Family family);   // "elliptic", ..., "hermitian-odd", "hermitian-even", "symplectic"
FormKind form_kind_from_string(std::string_view s);
Family family_from_string(std::string_view s);
FormKind form_kind_of(Family family);
bool is_quadratic(FormKind kind);

/// A nondegenerate quadratic, Hermitian or alternating form on GF(q)^(n+1).
///
/// `data` holds upper-triangular coefficients c_ij (Q(x) = sum_{i<=j} c_ij x_i x_j)
/// for the quadratic kinds and the Gram matrix otherwise.
class FormSpec {
 public:
  /// Validates shape, symmetry type and nondegeneracy.
  static FormSpec make(FormKind kind, FieldPtr field, int ambient_dim, Matrix data);

  FormKind kind() const { return kind_; }
  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  int ambient_dim() const { return ambient_; }
  const Matrix& data() const { return data_; }
  /// Gram matrix of the pairing: B(x, y) = x G y^T, or x G conj(y)^T for Hermitian forms.
  const Matrix& gram() const { return gram_; }

  /// Q(v), h(v, v) or 0 (alternating).
  Element value(std::span<const Element> v) const;
  Element pair(std::span<const Element> x, std::span<const Element> y) const;
  /// A covector c with pair(x, y) == 0 exactly when dot(c, y) == 0.
  std::vector<Element> orthogonality_covector(std::span<const Element> x) const;

  friend bool operator==(const FormSpec& a, const FormSpec& b) {
    return a.kind_ == b.kind_ && a.ambient_ == b.ambient_ && *a.field_ == *b.field_ && a.data_ == b.data_;
  }

 private:
  FormSpec(FormKind kind, FieldPtr field, int ambient, Matrix data, Matrix gram)
      : kind_(kind), field_(std::move(field)), ambient_(ambient), data_(std::move(data)), gram_(std::move(gram)) {}

  FormKind kind_;
  FieldPtr field_;
  int ambient_;
  Matrix data_;
  Matrix gram_;
};

/// The bilinear or sesquilinear pairing attached to a form. For quadratic
/// kinds this is b(x, y) = Q(x + y) - Q(x) - Q(y); in characteristic 2 it is
/// alternating and degenerate for parabolic quadrics (the nucleus).
class Pairing {
 public:
  explicit Pairing(const FormSpec& form) : form_(&form) {}
  Element operator()(std::span<const Element> x, std::span<const Element> y) const { return form_->pair(x, y); }
  const Matrix& gram() const { return form_->gram(); }
  bool sesquilinear() const { return form_->kind() == FormKind::hermitian; }

 private:
  const FormSpec* form_;
};

Pairing polarize(const FormSpec& form);

/// A fixed standard form of the given Table row with Witt index `rank`.
/// Throws InvalidArgument for illegal combinations (e.g. Hermitian over a field of odd degree).
FormSpec standard_form(Family family, int rank, FieldPtr field);

/// Ambient projective dimension of the Table row.
int ambient_dim_for(Family family, int rank);

/// Form value on the canonical vector of a point. Throws InvalidArgument when
/// `point` is not a point of the form's ambient space.
Element evaluate(const FormSpec& form, const Subspace& point);

/// Points pairing to zero with every point of U.
Subspace perp(const FormSpec& form, const Subspace& u);

/// True iff the form vanishes on U: Q(u_i) = 0 and b(u_i, u_j) = 0 on a basis
/// (only the pairing for alternating forms; h(u_i, u_j) = 0 for Hermitian).
bool is_totally_singular(const FormSpec& form, const Subspace& u);

/// Radical of the form restricted to W: the singular points of W that pair to
/// zero with all of W (for quadratic kinds), W ∩ perp(W) otherwise.
Subspace radical(const FormSpec& form, const Subspace& w);
Subspace radical(const FormSpec& form);

/// Rank (vector dimension) of the largest totally singular subspace inside W.
/// Depth-first extension over the singular points of W.
int witt_index(const FormSpec& form, const Subspace& w);

/// Singular points of W, normalized, in lexicographic order.
std::vector<std::vector<Element>> singular_points(const FormSpec& form, const Subspace& w);

}  // namespace polarscope
