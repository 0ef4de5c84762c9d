#pragma once

#include <optional>
#include <vector>

#include "polarscope/pseudopolar.hpp"

namespace polarscope {

/// Conditions (i)-(iv) for a set of (d-1)-spaces of PG(n, q), counted over
/// the whole ambient projective space.
CheckReport check_projective_pseudopolar(const Field& field, int ambient_dim, const std::vector<Subspace>& members,
                                         int rank, int param_half);

/// A point P and a member L with P not on L such that the number of members
/// through P meeting L in a (d-2)-space is not exactly one.
struct NotPolarCertificate {
  Subspace point;
  Subspace member;
  std::size_t meeting_members = 0;
};

/// Searches the points covered by `members` for a violation of the unique
/// neighbour axiom.
std::optional<NotPolarCertificate> find_not_polar_certificate(const Field& field,
                                                              const std::vector<Subspace>& members);

/// Projective dimension of the span of all members (-1 for an empty set).
int span_dimension(const Field& field, int ambient_dim, const std::vector<Subspace>& members);

struct DualHyperovalExample {
  int ambient_dim = 0;
  Subspace plane1, plane2, common_line;
  std::vector<Subspace> lines;          // (H1 \ {l}) u (H2 \ {l})
  CheckReport report;                   // d = 2, e = 1
  int span_dim = 0;
  std::vector<Subspace> classical;      // lines of the standard Q+(3, q) in PG(n, q)
  CheckReport classical_report;
  int classical_span_dim = 0;
  std::optional<NotPolarCertificate> certificate;
};

/// Two planes through a common line l, each with the dual of the hyperoval
/// conic-plus-nucleus having l as one of its lines. Throws InvalidArgument
/// for odd q or n < 4.
DualHyperovalExample dual_hyperoval_example(FieldPtr field, int ambient_dim);

}  // namespace polarscope
