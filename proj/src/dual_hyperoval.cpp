#include "polarscope/dual_hyperoval.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "polarscope/error.hpp"

namespace polarscope {
namespace {

std::vector<std::uint64_t> point_codes(const Field& field, const Subspace& s) {
  std::vector<std::uint64_t> out;
  s.for_each_point(field, [&](std::span<const Element> v) { out.push_back(encode_vector(v, field.order())); });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t shared_count(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

Subspace unit_span(const Field& field, int ambient_dim, std::initializer_list<int> coords) {
  std::vector<std::vector<Element>> rows;
  for (int c : coords) {
    rows.emplace_back(ambient_dim + 1, 0);
    rows.back()[c] = 1;
  }
  return Subspace::from_rows(field, ambient_dim, rows);
}

}  // namespace

CheckReport check_projective_pseudopolar(const Field& field, int ambient_dim, const std::vector<Subspace>& members,
                                         int rank, int param_half) {
  if (rank < 2 || param_half < 2) throw InvalidArgument("projective pseudopolar conditions need d >= 2 and e >= 1");
  for (const auto& m : members) {
    if (m.ambient_dim() != ambient_dim || m.dim() != rank - 1) {
      throw InvalidArgument("members must be (d-1)-spaces of PG(" + std::to_string(ambient_dim) + ")");
    }
  }
  const std::uint32_t q = field.order();
  std::vector<std::vector<std::uint64_t>> pts;
  std::map<std::uint64_t, std::int64_t> degree;
  for (const auto& m : members) {
    pts.push_back(point_codes(field, m));
    for (auto p : pts.back()) ++degree[p];
  }
  const std::size_t hyper_points = points_in_dim(q, rank - 2);
  auto power = [&](long long half) { return q_power_half(field, half); };

  CheckReport report{Definition::projective, {}};
  const auto neighbours = static_cast<std::int64_t>(to_u64(gaussian(rank, 1, q) * power(param_half - 2)));
  ConditionResult c1{"i", "every member meets [d 1]_q q^(e-1) members in a (d-2)-space"};
  ConditionResult c2{"ii", "every member is disjoint from some member"};
  c1.expected = {neighbours};
  c2.expected = {1};
  for (std::size_t a = 0; a < members.size(); ++a) {
    std::int64_t meet = 0;
    std::int64_t disjoint = 0;
    for (std::size_t b = 0; b < members.size(); ++b) {
      if (a == b) continue;
      const std::size_t s = shared_count(pts[a], pts[b]);
      meet += s == hyper_points;
      disjoint += s == 0;
    }
    ++c1.instances;
    ++c2.instances;
    if (a == 0) {
      c1.observed = {meet};
      c2.observed = {disjoint};
    }
    if (c1.passed && meet != neighbours) {
      c1.passed = false;
      c1.observed = {meet};
      c1.witness = members[a];
      c1.witness_role = "member";
    }
    if (c2.passed && disjoint == 0) {
      c2.passed = false;
      c2.observed = {0};
      c2.witness = members[a];
      c2.witness_role = "member";
    }
  }
  c1.vacuous = c2.vacuous = members.empty();

  BigInt size = 1;
  BigInt point_degree = 1;
  for (int i = 0; i < rank; ++i) {
    const BigInt factor = power(param_half + 2LL * i - 2) + 1;
    size *= factor;
    if (i + 1 < rank) point_degree *= factor;
  }
  ConditionResult c3{"iii", "|S| = prod_{i=0}^{d-1} (q^(e+i-1)+1)"};
  c3.expected = {static_cast<std::int64_t>(to_u64(size))};
  c3.observed = {static_cast<std::int64_t>(members.size())};
  c3.passed = c3.expected == c3.observed;
  c3.instances = 1;

  const auto deg = static_cast<std::int64_t>(to_u64(point_degree));
  ConditionResult c4{"iv", "every point of the projective space lies on 0 or prod_{i=0}^{d-2} (q^(e+i-1)+1) members"};
  c4.expected = {0, deg};
  c4.instances = points_in_dim(q, ambient_dim);
  std::set<std::int64_t> seen;
  if (degree.size() < c4.instances) seen.insert(0);
  for (const auto& [code, k] : degree) {
    seen.insert(k);
    if (c4.passed && k != deg) {
      c4.passed = false;
      std::vector<Element> v(ambient_dim + 1);
      std::uint64_t c = code;
      for (int j = ambient_dim; j >= 0; --j) {
        v[j] = static_cast<Element>(c % q);
        c /= q;
      }
      c4.witness = Subspace::point(field, v);
      c4.witness_role = "point";
      c4.observed = {k};
    }
  }
  if (c4.passed) c4.observed.assign(seen.begin(), seen.end());

  report.conditions = {c1, c2, c3, c4};
  return report;
}

std::optional<NotPolarCertificate> find_not_polar_certificate(const Field& field,
                                                              const std::vector<Subspace>& members) {
  if (members.empty()) return std::nullopt;
  const int d = members.front().dim() + 1;
  const std::uint32_t q = field.order();
  const std::size_t hyper_points = points_in_dim(q, d - 2);
  std::vector<std::vector<std::uint64_t>> pts;
  std::map<std::uint64_t, std::vector<std::size_t>> through;
  std::map<std::uint64_t, std::vector<Element>> coords;
  for (std::size_t m = 0; m < members.size(); ++m) {
    pts.push_back(point_codes(field, members[m]));
    members[m].for_each_point(field, [&](std::span<const Element> v) {
      const auto code = encode_vector(v, q);
      through[code].push_back(m);
      coords.emplace(code, std::vector<Element>(v.begin(), v.end()));
    });
  }
  for (const auto& [code, on] : through) {
    for (std::size_t l = 0; l < members.size(); ++l) {
      if (std::binary_search(pts[l].begin(), pts[l].end(), code)) continue;
      std::size_t count = 0;
      for (auto m : on) count += shared_count(pts[m], pts[l]) == hyper_points;
      if (count != 1) return NotPolarCertificate{Subspace::point(field, coords[code]), members[l], count};
    }
  }
  return std::nullopt;
}

int span_dimension(const Field& field, int ambient_dim, const std::vector<Subspace>& members) {
  Matrix m(0, ambient_dim + 1);
  for (const auto& s : members) {
    for (int r = 0; r < s.rank(); ++r) m.append_row(s.row(r));
  }
  return row_reduce(field, m) - 1;
}

DualHyperovalExample dual_hyperoval_example(FieldPtr field_ptr, int ambient_dim) {
  if (!field_ptr || field_ptr->p() != 2) throw InvalidArgument("dual hyperoval example needs q even");
  if (ambient_dim < 4) throw InvalidArgument("dual hyperoval example needs n >= 4");
  const Field& f = *field_ptr;
  const int n = ambient_dim;

  DualHyperovalExample ex;
  ex.ambient_dim = n;
  ex.plane1 = unit_span(f, n, {0, 1, 2});
  ex.plane2 = unit_span(f, n, {0, 1, 3});
  ex.common_line = unit_span(f, n, {0, 1});

  // Dual coordinates of the hyperoval {(1,t,t^2)} u {(0,0,1), (0,1,0)}: the
  // conic y1^2 = y0 y2 plus its nucleus. (0,0,1) is the common line.
  std::vector<std::array<Element, 3>> oval;
  for (Element t = 0; t < f.order(); ++t) oval.push_back({1, t, f.mul(t, t)});
  oval.push_back({0, 1, 0});

  for (int third : {2, 3}) {
    const int basis[3] = {0, 1, third};
    for (const auto& a : oval) {
      Matrix eq(0, 3);
      eq.append_row(a);
      const Matrix local = null_space(f, eq);
      std::vector<std::vector<Element>> rows;
      for (int r = 0; r < local.rows; ++r) {
        rows.emplace_back(n + 1, 0);
        for (int c = 0; c < 3; ++c) rows.back()[basis[c]] = local(r, c);
      }
      ex.lines.push_back(Subspace::from_rows(f, n, rows));
    }
  }
  std::sort(ex.lines.begin(), ex.lines.end());
  ex.report = check_projective_pseudopolar(f, n, ex.lines, 2, 2);
  ex.span_dim = span_dimension(f, n, ex.lines);
  ex.certificate = find_not_polar_certificate(f, ex.lines);

  PolarSpace quadric(make_polar_space(Family::hyperbolic, 2, field_ptr));
  for (const auto& g : quadric.generators()) {
    auto rows = g.rows();
    for (auto& r : rows) r.resize(n + 1, 0);
    ex.classical.push_back(Subspace::from_rows(f, n, rows));
  }
  ex.classical_report = check_projective_pseudopolar(f, n, ex.classical, 2, 2);
  ex.classical_span_dim = span_dimension(f, n, ex.classical);
  return ex;
}

}  // namespace polarscope
