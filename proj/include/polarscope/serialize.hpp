#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "polarscope/dual_hyperoval.hpp"
#include "polarscope/harness.hpp"

namespace polarscope {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Parse errors raise InvalidArgument; well-formed data that fails a
/// mathematical check raises ValidationError.
json field_to_json(const Field& field);
FieldPtr field_from_json(const json& j);

json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Field& field, int ambient_dim, const json& rows);

json form_to_json(const FormSpec& form);
json space_to_json(const PolarSpaceSpec& spec);
PolarSpaceSpec space_from_json(const json& j);

json generator_set_to_json(const GeneratorSet& set);
GeneratorSet generator_set_from_json(const json& j);

json report_to_json(const CheckReport& report);
json verdict_to_json(const EmbeddedVerdict& verdict);
json harness_to_json(const HarnessSummary& summary);
json dual_hyperoval_to_json(const DualHyperovalExample& example);

struct ClassificationRow {
  std::vector<Element> covector;
  SectionClass cls;
};

/// `# schema_version=1`, a header line, then one row per hyperplane.
std::string classification_csv(const std::vector<ClassificationRow>& rows);

}  // namespace polarscope
