#include "doctest.h"
#include "polarscope/error.hpp"
#include "polarscope/serialize.hpp"

using namespace polarscope;

namespace {

GeneratorSet section(const PolarSpace& s) {
  std::vector<Element> cv(s.ambient_dim() + 1, 0);
  cv[0] = 1;
  return section_set(s, hyperplane(s.field(), cv));
}

}  // namespace

TEST_SUITE("serialize") {

TEST_CASE("generator sets round-trip without drift") {
  for (auto [fam, p, h] : {std::tuple{Family::parabolic, 2u, 1u}, std::tuple{Family::elliptic, 2u, 1u},
                           std::tuple{Family::parabolic, 3u, 1u}}) {
    const PolarSpace s(make_polar_space(fam, 3, Field::make(p, h)));
    const GeneratorSet set = section(s);
    const std::string text = generator_set_to_json(set).dump(2);
    const GeneratorSet back = generator_set_from_json(json::parse(text));
    CHECK(back.space() == set.space());
    CHECK(back.members() == set.members());
    CHECK(generator_set_to_json(back).dump(2) == text);
  }
}

TEST_CASE("field and space documents") {
  auto f9 = Field::make(3, 2);
  const json jf = field_to_json(*f9);
  CHECK(jf["p"] == 3);
  CHECK(jf["h"] == 2);
  CHECK(*field_from_json(jf) == *f9);
  CHECK(*field_from_json(json{{"p", 3}, {"h", 2}}) == *f9);
  CHECK_THROWS_AS(field_from_json(json{{"p", 3}}), InvalidArgument);
  CHECK_THROWS_AS(field_from_json(json{{"p", 3}, {"h", 2}, {"modulus", {1, 0, 0}}}), InvalidArgument);

  const PolarSpaceSpec spec = make_polar_space(Family::hermitian_odd, 2, Field::make(2, 2));
  const json js = space_to_json(spec);
  CHECK(js["family"] == "hermitian-odd");
  CHECK(js["form_kind"] == "hermitian");
  CHECK(space_from_json(js) == spec);

  json wrong = js;
  wrong["param_half"] = 3;
  CHECK_THROWS_AS(space_from_json(wrong), ValidationError);
  wrong = js;
  wrong["form_kind"] = "symplectic";
  CHECK_THROWS_AS(space_from_json(wrong), ValidationError);
  wrong = js;
  wrong.erase("form_matrix");
  CHECK_THROWS_AS(space_from_json(wrong), InvalidArgument);
  wrong = js;
  wrong["form_matrix"][0][1] = 0;  // degenerate
  wrong["form_matrix"][1][0] = 0;
  CHECK_THROWS_AS(space_from_json(wrong), ValidationError);
}

TEST_CASE("generator documents are validated") {
  const PolarSpace s(make_polar_space(Family::parabolic, 3, Field::make(2, 1)));
  json doc = generator_set_to_json(section(s));
  json bad = doc;
  bad["generators"][0] = json::array({json::array({1, 0, 0, 0, 0, 0, 0}), json::array({0, 1, 0, 0, 0, 0, 0}),
                                      json::array({0, 0, 0, 1, 0, 0, 0})});
  CHECK_THROWS_AS(generator_set_from_json(bad), ValidationError);
  bad = doc;
  bad["generators"][0][0] = json::array({1, 0});
  CHECK_THROWS_AS(generator_set_from_json(bad), InvalidArgument);
  bad = doc;
  bad["schema_version"] = 99;
  CHECK_THROWS_AS(generator_set_from_json(bad), InvalidArgument);
  bad = doc;
  bad.erase("space");
  CHECK_THROWS_AS(generator_set_from_json(bad), InvalidArgument);
  CHECK_THROWS_AS(generator_set_from_json(json::array()), InvalidArgument);
  // a non-canonical basis of the same plane is accepted and canonicalized
  json alt = doc;
  auto rows = alt["generators"][0];
  for (std::size_t c = 0; c < rows[0].size(); ++c) rows[0][c] = rows[0][c].get<int>() ^ rows[1][c].get<int>();
  alt["generators"][0] = rows;
  CHECK(generator_set_from_json(alt).members() == generator_set_from_json(doc).members());
}

TEST_CASE("report and classification formats") {
  const PolarSpace s(make_polar_space(Family::parabolic, 3, Field::make(2, 1)));
  const GeneratorSet set = section(s);
  std::vector<Subspace> less(set.members().begin() + 1, set.members().end());
  const json r = report_to_json(check_pseudopolar(s, GeneratorSet(s.spec(), less)));
  CHECK(r["schema_version"] == kSchemaVersion);
  CHECK(r["definition"] == "pseudo");
  CHECK(r["passed"] == false);
  bool found = false;
  for (const auto& c : r["conditions"]) {
    if (c["id"] != "iii") continue;
    found = true;
    CHECK(c["observed"] == json::array({29}));
    CHECK(c["expected"] == json::array({30}));
  }
  CHECK(found);

  const json v = verdict_to_json(verify_embedded(s, set));
  CHECK(v["is_polar_space"] == true);
  CHECK(v["param_half"] == 0);
  CHECK(v["expected_point_count"] == "35");

  std::vector<ClassificationRow> rows;
  for (const auto& cv : hyperplane_covectors(s.field(), 6)) rows.push_back({cv, classify_hyperplane(s, hyperplane(s.field(), cv))});
  const std::string csv = classification_csv(rows);
  CHECK(csv.rfind("# schema_version=1\nhyperplane,class,section_family,section_rank,section_param_half\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 129);
  CHECK(csv.find("1 0 0 0 0 0 0,same-rank,hyperbolic,3,0\n") != std::string::npos);
}

}
