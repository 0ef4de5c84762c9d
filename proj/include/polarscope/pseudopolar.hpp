#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polarscope/polarspace.hpp"

namespace polarscope {

enum class Definition { strong, pseudo, alt, projective };
std::string_view to_string(Definition d);
Definition definition_from_string(std::string_view s);

/// Verdict on one condition. `expected` and `observed` are the counts at the
/// witness when the condition fails; otherwise at the first instance checked.
struct ConditionResult {
  std::string id;
  std::string description;
  bool passed = true;
  bool vacuous = false;  // quantified over an empty range
  std::vector<std::int64_t> expected;
  std::vector<std::int64_t> observed;
  std::optional<Subspace> witness;
  std::string witness_role;  // "generator", "point", ...
  std::optional<Subspace> context;  // the generator paired with a point witness
  std::uint64_t instances = 0;
};

struct CheckReport {
  Definition definition;
  std::vector<ConditionResult> conditions;

  bool passed() const;
  const ConditionResult& condition(std::string_view id) const;
};

/// Members meeting pi in a (d-i-1)-space, i = 0..d, for pi in S and for pi not in S.
std::vector<BigInt> strong_spectrum_in(const PolarSpaceSpec& spec);
std::vector<BigInt> strong_spectrum_out(const PolarSpaceSpec& spec);
/// Members through P meeting tau in a (d-j-2)-space, j = 0..d-2.
std::vector<BigInt> strong_local_counts(const PolarSpaceSpec& spec);

BigInt pseudo_neighbour_count(const PolarSpaceSpec& spec);  // [d 1]_q q^(e-1)
BigInt pseudo_set_size(const PolarSpaceSpec& spec);         // prod_{i<d} (q^(e+i-1)+1)
BigInt pseudo_point_degree(const PolarSpaceSpec& spec);     // prod_{i<d-1} (q^(e+i-1)+1)
BigInt alt_outside_count(const PolarSpaceSpec& spec);       // q^(e-1)+1

/// Strong pseudopolar conditions. Throws InvalidArgument when d < 3 or e < 1,
/// ValidationError when S is not a set of generators of `space`.
CheckReport check_strong_pseudopolar(const PolarSpace& space, const GeneratorSet& set);
CheckReport check_pseudopolar(const PolarSpace& space, const GeneratorSet& set);
/// Conditions (i), (ii) of check_pseudopolar with the alternative (iii'), (iv').
CheckReport check_alt(const PolarSpace& space, const GeneratorSet& set);
CheckReport check(Definition definition, const PolarSpace& space, const GeneratorSet& set);

enum class SectionTag { tangent, same_rank, rank_drop };
std::string_view to_string(SectionTag tag);

struct SectionClass {
  SectionTag tag;
  std::optional<Family> family;  // non-tangent only
  int rank = 0;                  // Witt index of the section
  int param_half = 0;
  Subspace radical;              // nonempty iff tangent
};

/// Classifies the polar space cut out by hyperplane H.
SectionClass classify_hyperplane(const PolarSpace& space, const Subspace& h);

/// Generators of the space contained in H. Throws InvalidArgument unless H is same-rank.
GeneratorSet section_set(const PolarSpace& space, const Subspace& h);

/// W(2d-1, q) for q even with the generators of the standard Q+(2d-1, q), whose
/// polarized form is W's symplectic form. Throws InvalidArgument for odd q.
std::pair<PolarSpaceSpec, GeneratorSet> quadric_in_symplectic(int rank, FieldPtr field);

/// Generators of the standard Q+(2d-1, q) inside an already built W(2d-1, q).
GeneratorSet quadric_in_symplectic(const PolarSpace& w);

struct EmbeddedVerdict {
  bool is_polar_space = false;
  std::vector<ConditionResult> axioms;  // "axiom-1" .. "axiom-4"
  int rank = 0;
  std::optional<int> param_half;        // from x - 1 = q^e', when x is uniform and a power of q
  std::uint64_t generators_per_hyperplane = 0;  // x
  bool uniform_x = false;
  bool materialized_t = false;
  std::uint64_t t_size = 0;
  std::uint64_t axiom3_pairs = 0;       // (Q, sigma) pairs with Q in O, Q not in sigma

  std::uint64_t point_count = 0;        // |O|
  BigInt expected_point_count;          // [d 1]_q (q^(e+d-2)+1)
  BigInt expected_e_count;              // [d 1]_q q^(d+e-2)
  bool e_identity_holds = false;        // |E| = expected = |O \ pi| for every pi in S
};

/// Checks that (O, T), with O the points covered by S and T the subspaces of
/// members of S, is a polar space; also its rank, parameter and the |O| and
/// |E| counts. T is materialized when d <= 4 and q <= 4.
EmbeddedVerdict verify_embedded(const PolarSpace& space, const GeneratorSet& set);

}  // namespace polarscope
