#include "polarscope/serialize.hpp"

#include <sstream>

#include "polarscope/error.hpp"

namespace polarscope {
namespace {

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("field '") + key + "': " + e.what());
  }
}

json counts(const std::vector<std::int64_t>& v) { return json(v); }

std::string bigint(const BigInt& v) { return v.str(); }

std::string join(std::span<const Element> v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

json field_to_json(const Field& field) {
  return json{{"p", field.p()}, {"h", field.h()}, {"modulus", field.modulus()}};
}

FieldPtr field_from_json(const json& j) {
  const auto p = get<std::uint32_t>(j, "p");
  const auto h = get<std::uint32_t>(j, "h");
  if (!j.contains("modulus")) return Field::make(p, h);
  auto modulus = get<std::vector<std::uint32_t>>(j, "modulus");
  if (modulus.size() != h + 1) throw InvalidArgument("modulus length does not match h");
  return Field::with_modulus(p, std::move(modulus));
}

json subspace_to_json(const Subspace& s) { return json(s.rows()); }

Subspace subspace_from_json(const Field& field, int ambient_dim, const json& rows) {
  std::vector<std::vector<Element>> r;
  try {
    r = rows.get<std::vector<std::vector<Element>>>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("subspace rows: ") + e.what());
  }
  for (const auto& row : r) {
    if (static_cast<int>(row.size()) != ambient_dim + 1) throw InvalidArgument("row length does not match ambient_dim");
    for (auto x : row) {
      if (x >= field.order()) throw InvalidArgument("field element out of range");
    }
  }
  return Subspace::from_rows(field, ambient_dim, r);
}

json form_to_json(const FormSpec& form) {
  json rows = json::array();
  for (int r = 0; r < form.data().rows; ++r) {
    rows.push_back(std::vector<Element>(form.data().row(r).begin(), form.data().row(r).end()));
  }
  return json{{"kind", to_string(form.kind())},
              {"field", field_to_json(form.field())},
              {"ambient_dim", form.ambient_dim()},
              {"matrix", rows}};
}

json space_to_json(const PolarSpaceSpec& spec) {
  const json form = form_to_json(spec.form);
  return json{{"family", to_string(spec.family)},
              {"rank", spec.rank},
              {"param_half", spec.param_half},
              {"field", form["field"]},
              {"ambient_dim", spec.ambient_dim()},
              {"form_kind", form["kind"]},
              {"form_matrix", form["matrix"]}};
}

PolarSpaceSpec space_from_json(const json& j) {
  const Family family = family_from_string(get<std::string>(j, "family"));
  const int rank = get<int>(j, "rank");
  const int ambient = get<int>(j, "ambient_dim");
  if (!j.contains("field")) throw InvalidArgument("missing field 'field'");
  FieldPtr field = field_from_json(j.at("field"));
  if (j.contains("form_kind") && form_kind_from_string(get<std::string>(j, "form_kind")) != form_kind_of(family)) {
    throw ValidationError("form_kind does not match the family");
  }
  if (ambient < 0 || ambient > 64) throw InvalidArgument("ambient_dim out of range");
  const auto rows = get<std::vector<std::vector<Element>>>(j, "form_matrix");
  if (static_cast<int>(rows.size()) != ambient + 1) throw InvalidArgument("form_matrix has the wrong number of rows");
  Matrix m(0, ambient + 1);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != ambient + 1) throw InvalidArgument("form_matrix row has the wrong length");
    for (auto x : r) {
      if (x >= field->order()) throw InvalidArgument("form_matrix entry out of range");
    }
    m.append_row(r);
  }
  PolarSpaceSpec spec = [&] {
    try {
      return make_polar_space(family, rank, FormSpec::make(form_kind_of(family), field, ambient, std::move(m)));
    } catch (const InvalidArgument& e) {
      throw ValidationError(e.what());
    }
  }();
  if (j.contains("param_half") && get<int>(j, "param_half") != spec.param_half) {
    throw ValidationError("param_half does not match the family");
  }
  return spec;
}

json generator_set_to_json(const GeneratorSet& set) {
  json gens = json::array();
  for (const auto& g : set.members()) gens.push_back(subspace_to_json(g));
  return json{{"schema_version", kSchemaVersion}, {"space", space_to_json(set.space())}, {"generators", gens}};
}

GeneratorSet generator_set_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("generator set must be a JSON object");
  if (j.contains("schema_version") && get<int>(j, "schema_version") != kSchemaVersion) {
    throw InvalidArgument("unsupported schema_version");
  }
  if (!j.contains("space") || !j.contains("generators")) throw InvalidArgument("generator set needs 'space' and 'generators'");
  PolarSpaceSpec spec = space_from_json(j.at("space"));
  if (!j.at("generators").is_array()) throw InvalidArgument("'generators' must be an array");
  std::vector<Subspace> members;
  for (const auto& g : j.at("generators")) {
    members.push_back(subspace_from_json(spec.field(), spec.ambient_dim(), g));
  }
  return GeneratorSet(std::move(spec), std::move(members));
}

json report_to_json(const CheckReport& report) {
  json conditions = json::array();
  for (const auto& c : report.conditions) {
    json jc{{"id", c.id},
            {"description", c.description},
            {"passed", c.passed},
            {"vacuous", c.vacuous},
            {"expected", counts(c.expected)},
            {"observed", counts(c.observed)},
            {"instances", c.instances}};
    if (c.witness) jc["witness"] = json{{"role", c.witness_role}, {"subspace", subspace_to_json(*c.witness)}};
    if (c.context) jc["context"] = subspace_to_json(*c.context);
    conditions.push_back(std::move(jc));
  }
  return json{{"schema_version", kSchemaVersion},
              {"definition", to_string(report.definition)},
              {"passed", report.passed()},
              {"conditions", conditions}};
}

json verdict_to_json(const EmbeddedVerdict& v) {
  json axioms = json::array();
  for (const auto& a : v.axioms) {
    json ja{{"id", a.id}, {"description", a.description}, {"passed", a.passed}, {"instances", a.instances},
            {"observed", counts(a.observed)}};
    if (a.witness) ja["witness"] = json{{"role", a.witness_role}, {"subspace", subspace_to_json(*a.witness)}};
    if (a.context) ja["context"] = subspace_to_json(*a.context);
    axioms.push_back(std::move(ja));
  }
  return json{{"is_polar_space", v.is_polar_space},
              {"rank", v.rank},
              {"param_half", v.param_half ? json(*v.param_half) : json(nullptr)},
              {"generators_per_hyperplane", v.generators_per_hyperplane},
              {"uniform", v.uniform_x},
              {"point_count", v.point_count},
              {"expected_point_count", bigint(v.expected_point_count)},
              {"expected_e_count", bigint(v.expected_e_count)},
              {"e_identity_holds", v.e_identity_holds},
              {"materialized_t", v.materialized_t},
              {"t_size", v.t_size},
              {"axiom3_pairs", v.axiom3_pairs},
              {"axioms", axioms}};
}

json harness_to_json(const HarnessSummary& s) {
  json positives = json::array();
  for (const auto& p : s.positives) {
    positives.push_back(json{{"label", p.label},
                             {"covector", p.covector},
                             {"size", p.size},
                             {"strong", p.strong},
                             {"pseudo", p.pseudo},
                             {"alt", p.alt},
                             {"embedded", verdict_to_json(p.embedded)},
                             {"passed", p.passed}});
  }
  json negatives = json::array();
  for (const auto& n : s.negatives) {
    negatives.push_back(json{{"sample", n.sample},
                             {"members", n.members},
                             {"strong", n.strong},
                             {"pseudo", n.pseudo},
                             {"alt", n.alt},
                             {"embedded", n.embedded ? json(*n.embedded) : json(nullptr)},
                             {"pseudo_failure", n.pseudo_failure},
                             {"rejected", n.rejected()}});
  }
  return json{{"schema_version", kSchemaVersion},
              {"space", space_to_json(s.space)},
              {"hyperplanes_total", s.hyperplanes_total},
              {"hyperplanes_examined", s.hyperplanes_examined},
              {"tangent", s.tangent},
              {"same_rank", s.same_rank},
              {"rank_drop", s.rank_drop},
              {"positives", positives},
              {"negatives", negatives},
              {"implication_violations", s.implication_violations},
              {"all_positive_pass", s.all_positive_pass()},
              {"all_negative_fail", s.all_negative_fail()},
              {"passed", s.passed()}};
}

json dual_hyperoval_to_json(const DualHyperovalExample& ex) {
  json lines = json::array();
  for (const auto& l : ex.lines) lines.push_back(subspace_to_json(l));
  json out{{"schema_version", kSchemaVersion},
           {"ambient_dim", ex.ambient_dim},
           {"plane1", subspace_to_json(ex.plane1)},
           {"plane2", subspace_to_json(ex.plane2)},
           {"common_line", subspace_to_json(ex.common_line)},
           {"lines", lines},
           {"report", report_to_json(ex.report)},
           {"span_dim", ex.span_dim},
           {"classical_report", report_to_json(ex.classical_report)},
           {"classical_span_dim", ex.classical_span_dim}};
  if (ex.certificate) {
    out["not_polar_certificate"] = json{{"point", subspace_to_json(ex.certificate->point)},
                                        {"member", subspace_to_json(ex.certificate->member)},
                                        {"meeting_members", ex.certificate->meeting_members}};
  } else {
    out["not_polar_certificate"] = nullptr;
  }
  return out;
}

std::string classification_csv(const std::vector<ClassificationRow>& rows) {
  std::ostringstream out;
  out << "# schema_version=" << kSchemaVersion << "\n";
  out << "hyperplane,class,section_family,section_rank,section_param_half\n";
  for (const auto& r : rows) {
    out << join(r.covector, ' ') << ',' << to_string(r.cls.tag) << ',';
    if (r.cls.family) {
      out << to_string(*r.cls.family) << ',' << r.cls.rank << ',' << r.cls.param_half;
    } else {
      out << ",,";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace polarscope
