#include "polarscope/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "polarscope/error.hpp"
#include "polarscope/serialize.hpp"

namespace polarscope::cli {
namespace {

struct SpaceArgs {
  std::string family;
  int rank = 0;
  std::uint32_t p = 0;
  std::uint32_t h = 1;
};

struct Common {
  std::string out_path;
  std::string format;
  std::uint64_t budget_generators = Budget{}.max_generators;
  double budget_seconds = 0;
};

void add_space_options(CLI::App* cmd, SpaceArgs& s) {
  cmd->add_option("FAMILY", s.family, "elliptic, parabolic, hyperbolic, hermitian-odd, hermitian-even, symplectic");
  cmd->add_option("RANK", s.rank, "rank d");
  cmd->add_option("P", s.p, "characteristic");
  cmd->add_option("H", s.h, "extension degree");
  cmd->add_option("--family", s.family, "family (same as positional)");
  cmd->add_option("--rank", s.rank, "rank d");
  cmd->add_option("--p", s.p, "characteristic");
  cmd->add_option("--h", s.h, "extension degree");
}

void add_common_options(CLI::App* cmd, Common& c, const std::string& default_format) {
  c.format = default_format;
  cmd->add_option("--out", c.out_path, "write the result to this file instead of stdout");
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--budget-generators", c.budget_generators, "maximum number of generators to enumerate");
  cmd->add_option("--budget-seconds", c.budget_seconds, "time budget for enumeration (0: none)");
}

Budget make_budget(const Common& c) {
  Budget b;
  b.max_generators = c.budget_generators;
  if (c.budget_seconds > 0) {
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(c.budget_seconds));
  }
  return b;
}

PolarSpaceSpec make_spec(const SpaceArgs& s) {
  if (s.family.empty() || s.rank == 0 || s.p == 0) throw InvalidArgument("need family, rank, p and h");
  return make_polar_space(family_from_string(s.family), s.rank, field_make(s.p, s.h));
}

void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + c.out_path);
  f << text;
}

std::vector<Element> parse_covector(const std::string& text) {
  std::vector<Element> v;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::istringstream t(token);
    long long x;
    if (!(t >> x) || x < 0) throw InvalidArgument("hyperplane must be comma-separated field elements");
    v.push_back(static_cast<Element>(x));
  }
  return v;
}

std::string format_covector(std::span<const Element> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string space_label(const PolarSpaceSpec& spec) {
  std::ostringstream s;
  s << to_string(spec.family) << " rank " << spec.rank << " over GF(" << spec.q() << ") in PG(" << spec.ambient_dim()
    << ")";
  return s.str();
}

int cmd_construct(const SpaceArgs& s, const Common& c, bool enumerate, std::ostream& out) {
  PolarSpaceSpec spec = make_spec(s);
  const BigInt points = expected_point_count(spec);
  const BigInt gens = expected_generator_count(spec);
  const BigInt per_point = expected_generators_per_point(spec);
  json j{{"schema_version", kSchemaVersion},
         {"space", space_to_json(spec)},
         {"points", points.str()},
         {"generators", gens.str()},
         {"generators_per_point", per_point.str()}};
  bool ok = true;
  std::optional<PolarSpace> space;
  if (enumerate) {
    space.emplace(spec, make_budget(c));
    const std::size_t np = space->point_count();
    const std::size_t ng = space->generator_count();
    bool per_point_ok = true;
    for (std::uint32_t p = 0; p < np; ++p) per_point_ok &= space->generators_on_point(p).size() == per_point;
    ok = np == points && ng == gens && per_point_ok;
    j["enumerated"] = json{{"points", np}, {"generators", ng}, {"generators_per_point_uniform", per_point_ok}};
    j["matches"] = ok;
  }
  std::ostringstream text;
  if (c.format == "json") {
    text << j.dump(2) << "\n";
  } else {
    text << space_label(spec) << "\n";
    text << "points " << points << "\n";
    text << "generators " << gens << "\n";
    text << "generators per point " << per_point << "\n";
    if (enumerate) {
      text << "enumerated points " << space->point_count() << ", generators " << space->generator_count() << ": "
           << (ok ? "match" : "MISMATCH") << "\n";
    }
  }
  if (enumerate && !c.out_path.empty()) {
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write " + c.out_path);
    f << generator_set_to_json(GeneratorSet(spec, space->generators())).dump(2) << "\n";
  }
  out << text.str();
  return ok ? kPass : kCheckFailed;
}

int cmd_section(const SpaceArgs& s, const Common& c, const std::string& hyperplane_text, bool all, std::ostream& out) {
  PolarSpace space(make_spec(s), make_budget(c));
  if (all) {
    std::vector<ClassificationRow> rows;
    for (const auto& cv : hyperplane_covectors(space.field(), space.ambient_dim())) {
      rows.push_back({cv, classify_hyperplane(space, hyperplane(space.field(), cv))});
    }
    if (c.format == "json") {
      json j = json::array();
      for (const auto& r : rows) {
        j.push_back(json{{"hyperplane", r.covector},
                         {"class", to_string(r.cls.tag)},
                         {"section_family", r.cls.family ? json(to_string(*r.cls.family)) : json(nullptr)},
                         {"section_rank", r.cls.rank},
                         {"section_param_half", r.cls.param_half}});
      }
      emit(c, out, json{{"schema_version", kSchemaVersion}, {"hyperplanes", j}}.dump(2) + "\n");
    } else {
      emit(c, out, classification_csv(rows));
    }
    return kPass;
  }
  if (hyperplane_text.empty()) throw InvalidArgument("give --hyperplane c0,c1,... or --all");
  const auto cv = parse_covector(hyperplane_text);
  if (static_cast<int>(cv.size()) != space.ambient_dim() + 1) {
    throw InvalidArgument("hyperplane needs " + std::to_string(space.ambient_dim() + 1) + " coordinates");
  }
  for (auto x : cv) {
    if (x >= space.q()) throw InvalidArgument("hyperplane coordinate out of range");
  }
  const GeneratorSet set = section_set(space, hyperplane(space.field(), cv));
  emit(c, out, generator_set_to_json(set).dump(2) + "\n");
  return kPass;
}

json read_json_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot read " + path);
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

int cmd_check(const std::string& set_path, const std::string& mode, const Common& c, std::ostream& out) {
  if (set_path.empty()) throw InvalidArgument("give a generator set file");
  const GeneratorSet set = generator_set_from_json(read_json_file(set_path));
  PolarSpace space(set.space(), make_budget(c));
  if (mode == "embedded") {
    const EmbeddedVerdict v = verify_embedded(space, set);
    emit(c, out, verdict_to_json(v).dump(2) + "\n");
    return v.is_polar_space ? kPass : kCheckFailed;
  }
  const CheckReport report = check(definition_from_string(mode), space, set);
  if (c.format == "text") {
    std::ostringstream t;
    t << to_string(report.definition) << " " << verdict(report.passed()) << "\n";
    for (const auto& cond : report.conditions) {
      t << "  (" << cond.id << ") " << verdict(cond.passed) << (cond.vacuous ? " vacuous" : "") << " observed ["
        << format_covector(std::vector<Element>(cond.observed.begin(), cond.observed.end())) << "] expected ["
        << format_covector(std::vector<Element>(cond.expected.begin(), cond.expected.end())) << "]\n";
    }
    emit(c, out, t.str());
  } else {
    emit(c, out, report_to_json(report).dump(2) + "\n");
  }
  return report.passed() ? kPass : kCheckFailed;
}

int cmd_verify(const SpaceArgs& s, const Common& c, const HarnessOptions& options, std::ostream& out) {
  PolarSpace space(make_spec(s), make_budget(c));
  const HarnessSummary summary = equivalence_harness(space, options);
  if (c.format == "json") {
    emit(c, out, harness_to_json(summary).dump(2) + "\n");
    return summary.passed() ? kPass : kCheckFailed;
  }
  std::ostringstream t;
  t << space_label(space.spec()) << "\n";
  if (summary.hyperplanes_total) {
    t << "hyperplanes " << summary.hyperplanes_total << ", examined " << summary.hyperplanes_examined << ": tangent "
      << summary.tangent << ", same-rank " << summary.same_rank << ", rank-drop " << summary.rank_drop << "\n";
  }
  for (const auto& p : summary.positives) {
    const auto& v = p.embedded;
    t << (p.covector.empty() ? p.label : "hyperplane " + format_covector(p.covector)) << "  |S|=" << p.size
      << "  strong " << verdict(p.strong) << "  pseudo " << verdict(p.pseudo) << "  alt " << verdict(p.alt)
      << "  embedded " << (v.is_polar_space ? "polar" : "not-polar") << " rank " << v.rank << " param_half "
      << (v.param_half ? std::to_string(*v.param_half) : "?") << " |O|=" << v.point_count << "  "
      << verdict(p.passed) << "\n";
  }
  std::size_t rejected = 0;
  for (const auto& n : summary.negatives) rejected += n.rejected();
  t << "random sets " << summary.negatives.size() << ": rejected " << rejected << "\n";
  t << "implication violations " << summary.implication_violations << "\n";
  t << "verdict " << verdict(summary.passed()) << "\n";
  emit(c, out, t.str());
  return summary.passed() ? kPass : kCheckFailed;
}

int cmd_dual_hyperoval(std::uint32_t p, std::uint32_t h, int n, const Common& c, std::ostream& out) {
  if (p != 2) throw InvalidArgument("dual hyperoval example needs q even (p = 2)");
  const DualHyperovalExample ex = dual_hyperoval_example(field_make(p, h), n);
  if (c.format == "json") {
    emit(c, out, dual_hyperoval_to_json(ex).dump(2) + "\n");
    return ex.report.passed() ? kPass : kCheckFailed;
  }
  std::ostringstream t;
  t << "dual hyperoval set in PG(" << n << "," << (1u << h) << "): " << ex.lines.size() << " lines\n";
  for (const auto& l : ex.lines) {
    t << "  line";
    for (int r = 0; r < l.rank(); ++r) t << " [" << format_covector(l.row(r)) << "]";
    t << "\n";
  }
  for (const auto& cond : ex.report.conditions) {
    t << "  (" << cond.id << ") " << verdict(cond.passed) << " observed ["
      << format_covector(std::vector<Element>(cond.observed.begin(), cond.observed.end())) << "] expected ["
      << format_covector(std::vector<Element>(cond.expected.begin(), cond.expected.end())) << "]\n";
  }
  t << "span dimension " << ex.span_dim << " (classical Q+(3,q) example: " << ex.classical_span_dim << ")\n";
  if (ex.certificate) {
    t << "not a polar space: point [" << format_covector(ex.certificate->point.row(0)) << "] off a member meets "
      << ex.certificate->meeting_members << " members through it in a point (a polar space needs exactly 1)\n";
  }
  t << "verdict " << verdict(ex.report.passed()) << "\n";
  emit(c, out, t.str());
  return ex.report.passed() ? kPass : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite classical polar spaces and pseudopolar generator sets", "polarscope"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);

  SpaceArgs construct_space;
  Common construct_common;
  bool enumerate = false;
  auto* construct = app.add_subcommand("construct", "closed-form counts for a polar space, optionally enumerated");
  add_space_options(construct, construct_space);
  add_common_options(construct, construct_common, "text");
  construct->add_flag("--enumerate", enumerate, "enumerate points and generators and compare");

  SpaceArgs section_space;
  Common section_common;
  std::string hyperplane_text;
  bool all = false;
  auto* section = app.add_subcommand("section", "generators inside a hyperplane, or classify all hyperplanes");
  add_space_options(section, section_space);
  add_common_options(section, section_common, "csv");
  section->add_option("--hyperplane", hyperplane_text, "covector c0,c1,...,cn of the hyperplane");
  section->add_flag("--all", all, "classify every hyperplane (CSV)");

  std::string set_path;
  std::string mode = "pseudo";
  Common check_common;
  auto* check_cmd = app.add_subcommand("check", "run a checker on a generator set file");
  check_cmd->add_option("SET", set_path, "generator set file");
  check_cmd->add_option("--set", set_path, "generator set file");
  check_cmd->add_option("--mode", mode, "strong, pseudo, alt or embedded")
      ->check(CLI::IsMember({"strong", "pseudo", "alt", "embedded"}));
  add_common_options(check_cmd, check_common, "json");

  SpaceArgs verify_space;
  Common verify_common;
  HarnessOptions options;
  std::size_t max_sections = 0;
  auto* verify = app.add_subcommand("verify-theorem", "equivalence harness on sections and random sets");
  add_space_options(verify, verify_space);
  add_common_options(verify, verify_common, "text");
  verify->add_option("--samples", options.samples, "random sets to test");
  verify->add_option("--seed", options.seed, "random seed");
  verify->add_option("--max-sections", max_sections, "same-rank hyperplanes to test (0: all)");

  std::uint32_t demo_p = 2;
  std::uint32_t demo_h = 1;
  int demo_n = 4;
  Common demo_common;
  auto* demo = app.add_subcommand("demo-dual-hyperoval", "the dual hyperoval pseudopolar set of lines");
  demo->add_option("H", demo_h, "extension degree (q = 2^h)");
  demo->add_option("N", demo_n, "ambient projective dimension");
  demo->add_option("--p", demo_p, "characteristic (must be 2)");
  demo->add_option("--h", demo_h, "extension degree");
  demo->add_option("--n", demo_n, "ambient projective dimension");
  add_common_options(demo, demo_common, "text");

  std::vector<const char*> argv{"polarscope"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*construct) return cmd_construct(construct_space, construct_common, enumerate, out);
    if (*section) return cmd_section(section_space, section_common, hyperplane_text, all, out);
    if (*check_cmd) return cmd_check(set_path, mode, check_common, out);
    if (*verify) {
      if (max_sections > 0) options.max_sections = max_sections;
      return cmd_verify(verify_space, verify_common, options, out);
    }
    if (*demo) return cmd_dual_hyperoval(demo_p, demo_h, demo_n, demo_common, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace polarscope::cli
