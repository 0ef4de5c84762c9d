#include "polarscope/polarspace.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "polarscope/error.hpp"

namespace polarscope {

int param_half_of(Family family) {
  switch (family) {
    case Family::elliptic: return 4;
    case Family::parabolic: return 2;
    case Family::hyperbolic: return 0;
    case Family::hermitian_odd: return 1;
    case Family::hermitian_even: return 3;
    case Family::symplectic: return 2;
  }
  return -1;
}

PolarSpaceSpec make_polar_space(Family family, int rank, FieldPtr field) {
  return make_polar_space(family, rank, standard_form(family, rank, std::move(field)));
}

PolarSpaceSpec make_polar_space(Family family, int rank, FormSpec form) {
  if (rank < 1) throw InvalidArgument("rank must be at least 1");
  if (form.kind() != form_kind_of(family)) {
    throw InvalidArgument("form kind " + std::string(to_string(form.kind())) + " does not match family " +
                          std::string(to_string(family)));
  }
  if (form.ambient_dim() != ambient_dim_for(family, rank)) {
    throw InvalidArgument("family " + std::string(to_string(family)) + " of rank " + std::to_string(rank) +
                          " lives in PG(" + std::to_string(ambient_dim_for(family, rank)) + "), not PG(" +
                          std::to_string(form.ambient_dim()) + ")");
  }
  const int param_half = param_half_of(family);
  if ((form.field().h() * static_cast<unsigned>(param_half)) % 2 != 0) {
    throw InvalidArgument("q^e is not an integer for this field");
  }
  return PolarSpaceSpec{family, rank, param_half, std::move(form)};
}

BigInt q_power_half(const Field& field, long long half_exponent) {
  if (half_exponent < 0) throw std::domain_error("negative exponent in q-power");
  const long long numerator = static_cast<long long>(field.h()) * half_exponent;
  if (numerator % 2 != 0) throw std::domain_error("q-power with non-integer exponent");
  return boost::multiprecision::pow(BigInt(field.p()), static_cast<unsigned>(numerator / 2));
}

BigInt expected_point_count(const PolarSpaceSpec& spec) {
  const int d = spec.rank;
  // [d 1]_q (q^(d+e-1) + 1)
  return gaussian(d, 1, spec.q()) * (q_power_half(spec.field(), 2LL * (d - 1) + spec.param_half) + 1);
}

BigInt expected_generator_count(const PolarSpaceSpec& spec) {
  BigInt total = 1;
  for (int i = 0; i < spec.rank; ++i) total *= q_power_half(spec.field(), spec.param_half + 2LL * i) + 1;
  return total;
}

BigInt expected_generators_per_point(const PolarSpaceSpec& spec) {
  BigInt total = 1;
  for (int i = 0; i + 1 < spec.rank; ++i) total *= q_power_half(spec.field(), spec.param_half + 2LL * i) + 1;
  return total;
}

std::uint64_t to_u64(const BigInt& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("count overflows 64 bits");
  return value.convert_to<std::uint64_t>();
}

void Budget::check_time(const char* what) const {
  if (deadline && std::chrono::steady_clock::now() > *deadline) {
    throw BudgetExceeded(std::string(what) + ": time budget exceeded");
  }
}

PolarSpace::PolarSpace(PolarSpaceSpec spec, Budget budget) : spec_(std::move(spec)), budget_(budget) {
  const Field& f = field();
  const int cols = ambient_dim() + 1;
  const std::uint32_t q = f.order();
  const BigInt ambient_points = gaussian(cols, 1, q);
  if (ambient_points > 20'000'000) throw BudgetExceeded("ambient space has too many points: " + ambient_points.str());

  std::vector<std::uint64_t> codes;
  std::vector<Element> v(cols);
  for (int lead = 0; lead < cols; ++lead) {
    std::fill(v.begin(), v.end(), 0);
    v[lead] = 1;
    while (true) {
      if (spec_.form.value(v) == 0) codes.push_back(encode_vector(v, q));
      int pos = cols - 1;
      while (pos > lead) {
        if (++v[pos] < q) break;
        v[pos] = 0;
        --pos;
      }
      if (pos == lead) break;
    }
  }
  std::sort(codes.begin(), codes.end());

  std::vector<Element> flat(codes.size() * cols);
  for (std::size_t i = 0; i < codes.size(); ++i) {
    std::uint64_t c = codes[i];
    for (int j = cols - 1; j >= 0; --j) {
      flat[i * cols + j] = static_cast<Element>(c % q);
      c /= q;
    }
  }
  BigInt space_codes = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(cols));
  if (space_codes <= (1u << 24)) {
    dense_index_.assign(space_codes.convert_to<std::size_t>(), -1);
    for (std::size_t i = 0; i < codes.size(); ++i) dense_index_[codes[i]] = static_cast<std::int32_t>(i);
  } else {
    for (std::size_t i = 0; i < codes.size(); ++i) sparse_index_.emplace(codes[i], static_cast<std::uint32_t>(i));
  }
  graph_ = std::make_unique<IsotropicGraph>(spec_.form, std::move(flat), cols);

  points_per_generator_ = static_cast<std::size_t>(points_in_dim(q, rank() - 1));
  dim_of_count_.assign(points_per_generator_ + 1, -2);
  for (int k = -1; k < rank(); ++k) dim_of_count_[points_in_dim(q, k)] = k;
}

Subspace PolarSpace::point_subspace(std::uint32_t i) const { return Subspace::point(field(), point(i)); }

std::optional<std::uint32_t> PolarSpace::point_index(std::span<const Element> v) const {
  std::vector<Element> w(v.begin(), v.end());
  if (static_cast<int>(w.size()) != ambient_dim() + 1 || !normalize(field(), w)) return std::nullopt;
  const std::uint64_t code = encode_vector(w, q());
  if (!dense_index_.empty()) {
    const auto idx = dense_index_[code];
    if (idx < 0) return std::nullopt;
    return static_cast<std::uint32_t>(idx);
  }
  auto it = sparse_index_.find(code);
  if (it == sparse_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::uint32_t> PolarSpace::points_of(const Subspace& u) const {
  if (u.ambient_dim() != ambient_dim()) throw InvalidArgument("subspace not in the ambient space of the polar space");
  std::vector<std::uint32_t> out;
  u.for_each_point(field(), [&](std::span<const Element> v) {
    auto idx = point_index(v);
    if (!idx) throw InvalidArgument("subspace contains a point outside the polar space");
    out.push_back(*idx);
  });
  std::sort(out.begin(), out.end());
  return out;
}

int PolarSpace::dim_from_point_count(std::size_t count) const {
  if (count >= dim_of_count_.size()) return -2;
  return dim_of_count_[count];
}

void PolarSpace::build_generators() const {
  const int d = rank();
  const int cols = ambient_dim() + 1;
  std::size_t visited = 0;
  graph_->for_each_subspace(d, [&](std::span<const std::uint32_t> rows) {
    if ((++visited & 0x3ff) == 0) budget_.check_time("generator enumeration");
    if (static_cast<int>(rows.size()) < d) return IsotropicGraph::Visit::descend;
    if (generators_.size() >= budget_.max_generators) {
      throw BudgetExceeded("more than " + std::to_string(budget_.max_generators) + " generators");
    }
    Matrix m(0, cols);
    for (auto r : rows) m.append_row(graph_->point(r));
    generators_.push_back(Subspace::from_canonical(ambient_dim(), std::move(m)));
    return IsotropicGraph::Visit::skip;
  });
  std::sort(generators_.begin(), generators_.end());

  generator_points_.reserve(generators_.size() * points_per_generator_);
  point_generators_.assign(point_count(), {});
  generator_lookup_.reserve(generators_.size());
  for (std::uint32_t g = 0; g < generators_.size(); ++g) {
    auto pts = points_of(generators_[g]);
    for (auto p : pts) point_generators_[p].push_back(g);
    generator_points_.insert(generator_points_.end(), pts.begin(), pts.end());
    generator_lookup_.emplace(generators_[g], g);
  }
}

const std::vector<Subspace>& PolarSpace::generators() const {
  std::call_once(generators_once_, [this] { build_generators(); });
  return generators_;
}

std::span<const std::uint32_t> PolarSpace::generator_points(std::size_t g) const {
  generators();
  return {generator_points_.data() + g * points_per_generator_, points_per_generator_};
}

std::span<const std::uint32_t> PolarSpace::generators_on_point(std::uint32_t p) const {
  generators();
  return point_generators_[p];
}

std::optional<std::uint32_t> PolarSpace::generator_index(const Subspace& s) const {
  generators();
  auto it = generator_lookup_.find(s);
  if (it == generator_lookup_.end()) return std::nullopt;
  return it->second;
}

GeneratorSet::GeneratorSet(PolarSpaceSpec space, std::vector<Subspace> members)
    : space_(std::move(space)), members_(std::move(members)) {
  for (const auto& m : members_) {
    if (m.ambient_dim() != space_.ambient_dim()) throw ValidationError("member lives in a different ambient space");
    if (m.dim() != space_.rank - 1) {
      throw ValidationError("member of dimension " + std::to_string(m.dim()) + " is not a generator (expected " +
                            std::to_string(space_.rank - 1) + ")");
    }
    if (!is_totally_singular(space_.form, m)) throw ValidationError("member is not totally singular for the declared form");
  }
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw ValidationError("generator set contains a repeated member");
  }
}

std::vector<Subspace> enumerate_points(const PolarSpace& space) {
  std::vector<Subspace> out;
  out.reserve(space.point_count());
  for (std::uint32_t i = 0; i < space.point_count(); ++i) out.push_back(space.point_subspace(i));
  return out;
}

const std::vector<Subspace>& enumerate_generators(const PolarSpace& space) { return space.generators(); }

std::vector<Subspace> generators_through(const PolarSpace& space, const Subspace& u) {
  if (u.ambient_dim() != space.ambient_dim() || !is_totally_singular(space.spec().form, u)) {
    throw InvalidArgument("generators_through expects a totally singular subspace");
  }
  const auto& gens = space.generators();
  if (u.is_empty()) return gens;
  std::vector<std::uint32_t> common;
  for (int r = 0; r < u.rank(); ++r) {
    auto p = space.point_index(u.row(r));
    auto on = space.generators_on_point(*p);
    if (r == 0) {
      common.assign(on.begin(), on.end());
    } else {
      std::vector<std::uint32_t> next;
      std::set_intersection(common.begin(), common.end(), on.begin(), on.end(), std::back_inserter(next));
      common.swap(next);
    }
  }
  std::vector<Subspace> out;
  for (auto g : common) out.push_back(gens[g]);
  return out;
}

std::vector<std::uint32_t> member_ids(const PolarSpace& space, const GeneratorSet& set) {
  if (!(set.space() == space.spec())) throw ValidationError("generator set belongs to a different polar space");
  std::vector<std::uint32_t> ids;
  ids.reserve(set.size());
  for (const auto& m : set.members()) {
    auto g = space.generator_index(m);
    if (!g) throw ValidationError("member is not a generator of the polar space");
    ids.push_back(*g);
  }
  return ids;
}

std::map<int, std::size_t> intersection_spectrum(const PolarSpace& space, const GeneratorSet& set,
                                                 const Subspace& pi) {
  const int d = space.rank();
  if (pi.dim() != d - 1 || !is_totally_singular(space.spec().form, pi)) {
    throw InvalidArgument("intersection_spectrum expects a generator");
  }
  const auto ids = member_ids(space, set);
  std::vector<std::uint32_t> shared(space.generator_count(), 0);
  for (auto p : space.points_of(pi)) {
    for (auto g : space.generators_on_point(p)) ++shared[g];
  }
  std::map<int, std::size_t> spectrum;
  for (int k = -1; k < d; ++k) spectrum[k] = 0;
  for (auto g : ids) ++spectrum[space.dim_from_point_count(shared[g])];
  return spectrum;
}

std::vector<std::size_t> spectrum_by_codim(const std::map<int, std::size_t>& spectrum, int rank) {
  std::vector<std::size_t> out(rank + 1, 0);
  for (int i = 0; i <= rank; ++i) {
    auto it = spectrum.find(rank - 1 - i);
    if (it != spectrum.end()) out[i] = it->second;
  }
  return out;
}

}  // namespace polarscope
