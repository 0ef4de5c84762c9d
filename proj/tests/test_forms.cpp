#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "polarscope/error.hpp"
#include "polarscope/forms.hpp"
#include "polarscope/pseudopolar.hpp"

using namespace polarscope;

namespace {

std::vector<Element> unit(int n, int i) {
  std::vector<Element> v(n + 1, 0);
  v[i] = 1;
  return v;
}

Subspace pt(const Field& f, std::vector<Element> v) { return Subspace::point(f, v); }

}  // namespace

TEST_SUITE("forms") {

TEST_CASE("standard normal forms") {
  auto f2 = Field::make(2, 1);
  const FormSpec par = standard_form(Family::parabolic, 3, f2);
  CHECK(par.ambient_dim() == 6);
  Matrix want(7, 7);
  want(0, 0) = want(1, 2) = want(3, 4) = want(5, 6) = 1;
  CHECK(par.data() == want);

  const FormSpec hyp = standard_form(Family::hyperbolic, 3, f2);
  CHECK(hyp.ambient_dim() == 5);
  oracle::NaiveField nf(*f2);
  for (std::uint64_t code = 0; code < 64; ++code) {
    const auto v = oracle::decode(code, 6, 2);
    const Element x = (v[0] & v[1]) ^ (v[2] & v[3]) ^ (v[4] & v[5]);
    CHECK(hyp.value(v) == x);
  }

  const FormSpec sym = standard_form(Family::symplectic, 3, f2);
  CHECK(sym.ambient_dim() == 5);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(sym.gram()(i, j) == ((i / 2 == j / 2 && i != j) ? 1u : 0u));
}

TEST_CASE("form values agree with the coefficient matrix") {
  for (auto [fam, d, p, h] : {std::tuple{Family::parabolic, 3, 3u, 1u}, std::tuple{Family::elliptic, 2, 3u, 1u},
                              std::tuple{Family::elliptic, 2, 2u, 2u}, std::tuple{Family::hermitian_even, 2, 2u, 2u},
                              std::tuple{Family::hermitian_odd, 2, 3u, 2u}}) {
    auto f = Field::make(p, h);
    const FormSpec form = standard_form(fam, d, f);
    oracle::NaiveField nf(*f);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 500; ++t) {
      std::vector<Element> x(form.ambient_dim() + 1), y(form.ambient_dim() + 1);
      for (auto& c : x) c = rng() % f->order();
      for (auto& c : y) c = rng() % f->order();
      if (is_quadratic(form.kind())) {
        CHECK(form.value(x) == oracle::quadratic_value(nf, form, x));
      } else {
        CHECK(form.value(x) == oracle::gram_pair(nf, form, x, x));
      }
      CHECK(form.pair(x, y) == oracle::gram_pair(nf, form, x, y));
      // the orthogonality covector encodes y -> pair(x, y) up to a scalar
      const auto c = form.orthogonality_covector(x);
      Element dotv = 0;
      for (std::size_t i = 0; i < c.size(); ++i) dotv = nf.add(dotv, nf.mul(c[i], y[i]));
      CHECK((dotv == 0) == (form.pair(x, y) == 0));
    }
  }
}

TEST_CASE("evaluate on points") {
  auto f2 = Field::make(2, 1);
  const FormSpec par = standard_form(Family::parabolic, 3, f2);
  CHECK(evaluate(par, pt(*f2, unit(6, 0))) == 1);
  CHECK(evaluate(par, pt(*f2, unit(6, 1))) == 0);
  const FormSpec sym = standard_form(Family::symplectic, 3, f2);
  for (const auto& p : enumerate_subspaces(*f2, 5, 0)) CHECK(evaluate(sym, p) == 0);
  CHECK_THROWS_AS(evaluate(par, pt(*f2, unit(5, 0))), InvalidArgument);
}

TEST_CASE("perp") {
  auto f2 = Field::make(2, 1);
  const FormSpec par = standard_form(Family::parabolic, 3, f2);
  CHECK(perp(par, Subspace::empty(6)) == Subspace::whole(6));
  const Subspace p = pt(*f2, unit(6, 1));
  const Subspace hp = perp(par, p);
  CHECK(hp.dim() == 5);
  CHECK(hp.contains(*f2, unit(6, 0)));  // the nucleus
  CHECK(hp.contains(*f2, p));

  const FormSpec sym = standard_form(Family::symplectic, 3, f2);
  const Subspace q = pt(*f2, {1, 0, 1, 1, 0, 1});
  const Subspace hq = perp(sym, q);
  CHECK(hq.dim() == 4);
  CHECK(hq.contains(*f2, q));
}

TEST_CASE("perp is an inclusion-reversing involution") {
  struct Case {
    Family fam;
    int d;
  };
  auto f2 = Field::make(2, 1);
  for (auto c : {Case{Family::elliptic, 3}, Case{Family::symplectic, 3}}) {
    const FormSpec form = standard_form(c.fam, c.d, f2);
    const int n = form.ambient_dim();
    oracle::NaiveField nf(*f2);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
      std::vector<std::vector<Element>> rows(1 + rng() % (n + 1), std::vector<Element>(n + 1));
      for (auto& r : rows)
        for (auto& x : r) x = rng() % 2;
      const Subspace u = Subspace::from_rows(*f2, n, rows);
      const Subspace pu = perp(form, u);
      CHECK(perp(form, pu) == u);
      CHECK(pu.dim() == n - 1 - u.dim());
      // every basis vector of perp(U) pairs to zero with every basis vector of U
      for (const auto& a : pu.rows())
        for (const auto& b : u.rows()) CHECK(oracle::gram_pair(nf, form, b, a) == 0);
      if (u.rank() > 1) {
        const Subspace v = Subspace::from_rows(*f2, n, {u.rows().front()});
        CHECK(perp(form, v).contains(*f2, pu));
      }
    }
  }
}

TEST_CASE("total singularity") {
  auto f2 = Field::make(2, 1);
  const FormSpec par = standard_form(Family::parabolic, 3, f2);
  CHECK(is_totally_singular(par, pt(*f2, unit(6, 1))));
  CHECK_FALSE(is_totally_singular(par, pt(*f2, unit(6, 0))));
  // e1, e2 are singular but b(e1, e2) = 1
  CHECK_FALSE(is_totally_singular(par, Subspace::from_rows(*f2, 6, {unit(6, 1), unit(6, 2)})));
  const FormSpec hyp = standard_form(Family::hyperbolic, 3, f2);
  CHECK(is_totally_singular(hyp, Subspace::from_rows(*f2, 5, {unit(5, 1), unit(5, 3), unit(5, 5)})));
}

TEST_CASE("radicals") {
  for (auto [fam, d, p, h] : {std::tuple{Family::parabolic, 3, 2u, 1u}, std::tuple{Family::parabolic, 2, 3u, 1u},
                              std::tuple{Family::hyperbolic, 3, 2u, 1u}, std::tuple{Family::elliptic, 3, 2u, 1u},
                              std::tuple{Family::symplectic, 3, 3u, 1u}, std::tuple{Family::hermitian_even, 2, 2u, 2u},
                              std::tuple{Family::hermitian_odd, 2, 2u, 2u}}) {
    const FormSpec form = standard_form(fam, d, Field::make(p, h));
    CHECK(radical(form).is_empty());
  }
  auto f2 = Field::make(2, 1);
  const FormSpec par = standard_form(Family::parabolic, 3, f2);
  const Subspace p = pt(*f2, unit(6, 3));
  CHECK(radical(par, perp(par, p)) == p);
  const Subspace h0 = hyperplane(*f2, unit(6, 0));
  CHECK(radical(par, h0).is_empty());
}

TEST_CASE("Witt index of sections") {
  auto f2 = Field::make(2, 1);
  const FormSpec par = standard_form(Family::parabolic, 3, f2);
  CHECK(witt_index(par, Subspace::whole(6)) == 3);
  CHECK(witt_index(par, hyperplane(*f2, unit(6, 0))) == 3);
  // x0 + x1 + x2 = 0 turns x0^2 + x1 x2 into x1^2 + x1 x2 + x2^2, which is anisotropic
  CHECK(witt_index(par, hyperplane(*f2, std::vector<Element>{1, 1, 1, 0, 0, 0, 0})) == 2);
}

TEST_CASE("singular point counts match a brute-force count for every small Table row") {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> fields{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}};
  for (auto fam : {Family::elliptic, Family::parabolic, Family::hyperbolic, Family::hermitian_odd,
                   Family::hermitian_even, Family::symplectic}) {
    for (int d = 1; d <= 4; ++d) {
      const int n = ambient_dim_for(fam, d);
      if (n > 7) continue;
      for (auto [p, h] : fields) {
        const bool herm = fam == Family::hermitian_odd || fam == Family::hermitian_even;
        if (herm && h % 2) continue;
        const std::uint32_t q = h == 1 ? p : p * p;
        std::uint64_t vectors = 1;
        for (int i = 0; i <= n; ++i) vectors *= q;
        if (vectors > 70000) continue;
        auto f = Field::make(p, h);
        const PolarSpaceSpec spec = make_polar_space(fam, d, f);
        INFO(to_string(fam) << " rank " << d << " GF(" << q << ")");
        const auto want = oracle::polar_counts(p, h, d, spec.param_half).points;
        CHECK(oracle::Int(oracle::singular_point_count(oracle::NaiveField(*f), spec.form)) == want);
        CHECK(expected_point_count(spec) == want);
        CHECK(oracle::Int(singular_points(spec.form, Subspace::whole(n)).size()) == want);
      }
    }
  }
  auto f4 = Field::make(2, 2);
  const PolarSpaceSpec h64 = make_polar_space(Family::hermitian_even, 3, f4);
  CHECK(oracle::singular_point_count(oracle::NaiveField(*f4), h64.form) == 2709);
}

TEST_CASE("hyperplane classes of Q(6,2)") {
  auto f2 = Field::make(2, 1);
  const PolarSpace space(make_polar_space(Family::parabolic, 3, f2));
  oracle::NaiveField nf(*f2);
  std::size_t tangent = 0, same = 0, drop = 0;
  for (const auto& h : enumerate_subspaces(*f2, 6, 5)) {
    // singular points inside H, counted independently
    std::size_t inside = 0;
    for (std::uint32_t i = 0; i < space.point_count(); ++i) inside += h.contains(*f2, space.point(i));
    std::size_t direct = 0;
    h.for_each_point(*f2, [&](std::span<const Element> v) {
      direct += oracle::quadratic_value(nf, space.spec().form, std::vector<Element>(v.begin(), v.end())) == 0;
    });
    CHECK(inside == direct);
    const SectionClass c = classify_hyperplane(space, h);
    switch (c.tag) {
      case SectionTag::tangent:
        ++tangent;
        CHECK(c.radical.dim() == 0);
        CHECK(perp(space.spec().form, c.radical) == h);
        CHECK(direct == 31);  // cone over Q(4,2): 1 + 2 * 15
        break;
      case SectionTag::same_rank:
        ++same;
        CHECK(c.family == Family::hyperbolic);
        CHECK(c.rank == 3);
        CHECK(c.param_half == 0);
        CHECK(direct == 35);
        break;
      case SectionTag::rank_drop:
        ++drop;
        CHECK(c.family == Family::elliptic);
        CHECK(c.rank == 2);
        CHECK(direct == 27);
        break;
    }
  }
  CHECK(tangent == 63);
  CHECK(same == 36);
  CHECK(drop == 28);
  CHECK(tangent + same + drop == 127);
}

TEST_CASE("illegal forms and rows") {
  auto f2 = Field::make(2, 1);
  CHECK_THROWS_AS(standard_form(Family::hermitian_even, 2, f2), InvalidArgument);
  CHECK_THROWS_AS(standard_form(Family::parabolic, 0, f2), InvalidArgument);
  CHECK_THROWS_AS(family_from_string("orthogonal"), InvalidArgument);
  CHECK_THROWS_AS(form_kind_from_string("quadratic"), InvalidArgument);
  Matrix degenerate(3, 3);
  degenerate(0, 1) = 1;
  CHECK_THROWS_AS(FormSpec::make(FormKind::hyperbolic, f2, 2, degenerate), InvalidArgument);
  Matrix not_skew(2, 2);
  not_skew(0, 1) = 1;
  CHECK_THROWS_AS(FormSpec::make(FormKind::symplectic, Field::make(3, 1), 1, not_skew), InvalidArgument);
  for (auto fam : {Family::elliptic, Family::parabolic, Family::hyperbolic, Family::hermitian_odd,
                   Family::hermitian_even, Family::symplectic}) {
    CHECK(family_from_string(to_string(fam)) == fam);
  }
}

}
