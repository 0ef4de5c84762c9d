#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "polarscope/forms.hpp"
#include "polarscope/geometry.hpp"
#include "polarscope/isotropic.hpp"

namespace polarscope {

/// A finite classical polar space as declared: Table row, rank d, parameter
/// e stored as 2e (so Hermitian e = 1/2, 3/2 is exact), and the concrete form.
struct PolarSpaceSpec {
  Family family;
  int rank;
  int param_half;
  FormSpec form;

  int ambient_dim() const { return form.ambient_dim(); }
  const Field& field() const { return form.field(); }
  const FieldPtr& field_ptr() const { return form.field_ptr(); }
  std::uint32_t q() const { return form.field().order(); }

  friend bool operator==(const PolarSpaceSpec&, const PolarSpaceSpec&) = default;
};

/// 2e for each Table row.
int param_half_of(Family family);

/// Standard form for the Table row. Throws InvalidArgument for illegal rows.
PolarSpaceSpec make_polar_space(Family family, int rank, FieldPtr field);
/// Explicit form; checked against the Table row's form kind and ambient dimension.
PolarSpaceSpec make_polar_space(Family family, int rank, FormSpec form);

/// q^(k/2) = p^(h k / 2) as an exact integer. Throws std::domain_error when the
/// exponent is negative or the power is not an integer.
BigInt q_power_half(const Field& field, long long half_exponent);

/// Closed forms for the numbers of points, generators, and generators through a point.
BigInt expected_point_count(const PolarSpaceSpec& spec);
BigInt expected_generator_count(const PolarSpaceSpec& spec);
BigInt expected_generators_per_point(const PolarSpaceSpec& spec);

std::uint64_t to_u64(const BigInt& value);

struct Budget {
  std::uint64_t max_generators = 200'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  void check_time(const char* what) const;
};

/// A polar space with its singular points materialized (and generators on demand).
///
/// Points are stored in lexicographic order of their normalized coordinate
/// vectors; generators in lexicographic order of their canonical bases. All
/// queries are const and safe to share between threads; the generator list is
/// built once under std::call_once.
class PolarSpace {
 public:
  explicit PolarSpace(PolarSpaceSpec spec, Budget budget = {});

  const PolarSpaceSpec& spec() const { return spec_; }
  const Field& field() const { return spec_.field(); }
  int rank() const { return spec_.rank; }
  int ambient_dim() const { return spec_.ambient_dim(); }
  std::uint32_t q() const { return spec_.q(); }

  std::size_t point_count() const { return graph_->size(); }
  std::span<const Element> point(std::uint32_t i) const { return graph_->point(i); }
  Subspace point_subspace(std::uint32_t i) const;
  /// Index of the singular point spanned by v (any nonzero scalar multiple).
  std::optional<std::uint32_t> point_index(std::span<const Element> v) const;
  const IsotropicGraph& graph() const { return *graph_; }

  const std::vector<Subspace>& generators() const;
  std::size_t generator_count() const { return generators().size(); }
  std::size_t points_per_generator() const { return points_per_generator_; }
  std::span<const std::uint32_t> generator_points(std::size_t g) const;
  std::span<const std::uint32_t> generators_on_point(std::uint32_t p) const;
  std::optional<std::uint32_t> generator_index(const Subspace& s) const;

  /// Indices of the points of U, which must be totally singular; throws
  /// InvalidArgument if some point of U is not a point of the space.
  std::vector<std::uint32_t> points_of(const Subspace& u) const;

  /// Projective dimension of a subspace with the given number of points, or -2
  /// if the count is not the size of a projective subspace.
  int dim_from_point_count(std::size_t count) const;

 private:
  void build_generators() const;

  PolarSpaceSpec spec_;
  Budget budget_;
  std::unique_ptr<IsotropicGraph> graph_;
  std::vector<std::int32_t> dense_index_;  // code -> point index, -1 if not singular
  std::unordered_map<std::uint64_t, std::uint32_t> sparse_index_;
  std::size_t points_per_generator_ = 0;
  std::vector<int> dim_of_count_;

  mutable std::once_flag generators_once_;
  mutable std::vector<Subspace> generators_;
  mutable std::vector<std::uint32_t> generator_points_;
  mutable std::vector<std::vector<std::uint32_t>> point_generators_;
  mutable std::unordered_map<Subspace, std::uint32_t, SubspaceHash> generator_lookup_;
};

/// A set of generators of a fixed polar space: canonical, distinct, sorted.
class GeneratorSet {
 public:
  /// Throws ValidationError when a member is not a totally singular
  /// (d-1)-space of the declared form, or members repeat.
  GeneratorSet(PolarSpaceSpec space, std::vector<Subspace> members);

  const PolarSpaceSpec& space() const { return space_; }
  const std::vector<Subspace>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

 private:
  PolarSpaceSpec space_;
  std::vector<Subspace> members_;
};

/// All singular points, as subspaces, in lexicographic order.
std::vector<Subspace> enumerate_points(const PolarSpace& space);
/// All generators; depth-first extension of totally singular subspaces.
const std::vector<Subspace>& enumerate_generators(const PolarSpace& space);
/// Generators containing U. Throws InvalidArgument if U is not totally singular.
std::vector<Subspace> generators_through(const PolarSpace& space, const Subspace& u);

/// Positions of the set's members in space.generators(); throws
/// ValidationError when the set belongs to another space.
std::vector<std::uint32_t> member_ids(const PolarSpace& space, const GeneratorSet& set);

/// For each projective dimension k in -1..d-1, the number of members meeting
/// `pi` in a k-space.
std::map<int, std::size_t> intersection_spectrum(const PolarSpace& space, const GeneratorSet& set,
                                                 const Subspace& pi);

/// The same spectrum indexed by i = d - 1 - k (entry i counts (d-i-1)-space meetings).
std::vector<std::size_t> spectrum_by_codim(const std::map<int, std::size_t>& spectrum, int rank);

}  // namespace polarscope
