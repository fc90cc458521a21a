#include <doctest.h>

#include "fixtures.hpp"
#include "gpd/burnside.hpp"
#include "gpd/comparison.hpp"
#include "gpd/error.hpp"
#include "gpd/random.hpp"
#include "oracles.hpp"

using namespace gpd;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Malformed;
}

bool isomorphic(const BiSet& a, const BiSet& b) { return find_isomorphism(a, b).has_value(); }

BiSet fixed_point(const GroupoidPtr& c2) {
  return validate_biset({fx::trivial(), c2, {1}, {{0}, {0}}, {{0}}}, Admissibility::Compute);
}

}  // namespace

TEST_CASE("double translation groupoid") {
  const auto c2 = fx::c2();
  const auto s3 = fx::s3();
  const DoubleTranslation id = double_translation(identity_biset(c2));
  CHECK(id.groupoid->num_objects() == 2);
  CHECK(components(*id.groupoid).count == 1);
  CHECK(double_translation(empty_biset(c2, s3)).groupoid->num_objects() == 0);
  const DoubleTranslation inc = double_translation(s_of_functor(fx::inclusion(c2, s3)));
  CHECK(inc.groupoid->num_objects() == 6);
  CHECK(components(*inc.groupoid).count == 1);
  CHECK_NOTHROW(check_functor(inc.p));
  CHECK_NOTHROW(check_functor(inc.q));
}

TEST_CASE("biset_to_span") {
  const auto c2 = fx::c2();
  const auto one = fx::trivial();
  const Span id = biset_to_span(identity_biset(c2));
  CHECK(is_equivalence(id.left));
  CHECK(is_equivalence(id.right));
  CHECK(isomorphic(span_to_biset(id), identity_biset(c2)));
  const Functor p = validate_functor(c2, one, {0}, {0, 0});
  const Span sp = biset_to_span(s_of_functor(p));
  CHECK(is_equivalence(sp.left));
  CHECK(isomorphic(span_to_biset(sp), span_to_biset(s_span(p))));
  CHECK(kind_of([&] { biset_to_span(fixed_point(c2)); }) == ErrorKind::NotAdmissible);
}

TEST_CASE("homotopy fibers of the double translation detect admissibility") {
  const auto c2 = fx::c2();
  CHECK_FALSE(is_finite_weak_cover(double_translation(fixed_point(c2)).q));
  Rng rng(4);
  for (int i = 0; i < 30; ++i) {
    const auto h = random_groupoid(rng, 2, 6);
    const auto g = random_groupoid(rng, 2, 6);
    const BiSet x = random_biset(rng, h, g, 2, i % 2 == 0);
    CHECK(bool(is_finite_weak_cover(double_translation(x).q)) == x.admissible());
  }
}

TEST_CASE("functoriality on isomorphisms") {
  const auto c2 = fx::c2();
  const BiSet id = identity_biset(c2);
  const SpanMorphism m = functoriality_on_morphisms(identity_iso(id));
  CHECK(m.t == identity_functor(m.t.source));
  const BiSetIso swap{id, id, BiSetMap{{1, 0}}};
  CHECK_NOTHROW(check_biset_iso(swap));
  const SpanMorphism aut = functoriality_on_morphisms(swap);
  CHECK(is_span_isomorphism(aut));
  CHECK_FALSE(aut.t == identity_functor(aut.t.source));
  Rng rng(14);
  for (int i = 0; i < 15; ++i) {
    const auto h = random_groupoid(rng, 2, 6);
    const auto g = random_groupoid(rng, 2, 6);
    const BiSet x = random_biset(rng, h, g, 2);
    const BiSetIso a = twist(rng, x);
    const BiSetIso b = twist(rng, a.target);
    const SpanMorphism both = functoriality_on_morphisms(compose_isos(b, a));
    const SpanMorphism each =
        compose_span_morphisms(functoriality_on_morphisms(b), functoriality_on_morphisms(a));
    CHECK(both.t == each.t);
  }
}

TEST_CASE("span_to_biset") {
  const auto c2 = fx::c2();
  const auto s3 = fx::s3();
  const Functor sg = fx::sign(s3, c2);
  CHECK(isomorphic(span_to_biset(s_span(sg)), s_of_functor(sg)));
  const BiSet id = span_to_biset(s_span(identity_functor(c2)));
  CHECK(id.fibers() == std::vector<std::uint32_t>{2});
  CHECK(isomorphic(id, identity_biset(c2)));
  const Functor inc = fx::inclusion(c2, s3);
  const BiSet t = span_to_biset(t_span(inc));
  CHECK(t.source() == s3);
  CHECK(t.fibers() == std::vector<std::uint32_t>{6});
  CHECK(colimit(t.column(0)).count() == 3);
  CHECK(t.admissible());
}

TEST_CASE("span morphisms to bi-set maps") {
  const auto c2 = fx::c2();
  const auto s3 = fx::s3();
  const Span a = s_span(identity_functor(c2));
  const BiSetMorphism id = span_morphism_to_biset_map(identity_span_morphism(a));
  CHECK(id.map == identity_iso(id.source).map);
  const Functor inc = fx::inclusion(c2, s3);
  for (Mor g = 0; g < 6; ++g) {
    std::vector<Mor> conj(6);
    for (Mor x = 0; x < 6; ++x) conj[x] = s3->compose(s3->compose(g, x), s3->inverse(g));
    const NatTrans alpha = validate_nat_trans(inc, compose_functors(validate_functor(s3, s3, {0}, conj), inc), {g});
    const BiSetMorphism m = span_morphism_to_biset_map(s_span_morphism(alpha));
    CHECK_NOTHROW(check_biset_iso({m.source, m.target, m.map}));
  }
  Rng rng(15);
  for (int i = 0; i < 10; ++i) {
    const auto h = random_groupoid(rng, 2, 6);
    const auto g = random_groupoid(rng, 2, 6);
    const Span s = random_span(rng, h, g, 2);
    const Relabeling r1 = relabel_objects(s.apex(), random_permutation(rng, s.apex()->num_objects()));
    const Span s1 = make_span(compose_functors(s.left, r1.from), compose_functors(s.right, r1.from));
    const Relabeling r2 = relabel_objects(s1.apex(), random_permutation(rng, s1.apex()->num_objects()));
    const Span s2 = make_span(compose_functors(s1.left, r2.from), compose_functors(s1.right, r2.from));
    const SpanMorphism m1 = strict_span_morphism(s1, s, r1.from);
    const SpanMorphism m2 = strict_span_morphism(s2, s1, r2.from);
    const BiSetMap both = span_morphism_to_biset_map(compose_span_morphisms(m1, m2)).map;
    const BiSetMap first = span_morphism_to_biset_map(m2).map;
    const BiSetMap second = span_morphism_to_biset_map(m1).map;
    BiSetMap chained{std::vector<std::uint32_t>(first.images.size())};
    for (std::size_t e = 0; e < first.images.size(); ++e) chained.images[e] = second.images[first.images[e]];
    CHECK(both == chained);
  }
}

TEST_CASE("beta") {
  const auto c2 = fx::c2();
  const auto s3 = fx::s3();
  const BiSetIso id = beta_iso(identity_biset(c2));
  CHECK(id.source.size() == 2);
  CHECK_NOTHROW(check_biset_iso(id));
  const BiSetIso sg = beta_iso(s_of_functor(fx::sign(s3, c2)));
  CHECK(sg.source.fibers() == sg.target.fibers());
  CHECK(beta_iso(empty_biset(c2, s3)).map.images.empty());
}

TEST_CASE("alpha") {
  const auto c2 = fx::c2();
  const auto s3 = fx::s3();
  const AlphaEquivalence id = alpha_equivalence(s_span(identity_functor(c2)));
  CHECK(id.verdict);
  CHECK(id.morphism.target.apex()->num_objects() == 2);
  CHECK(alpha_equivalence(s_span(fx::inclusion(c2, s3))).verdict);
  const Span e = make_span(Functor{fx::empty(), c2, {}, {}}, Functor{fx::empty(), s3, {}, {}});
  CHECK(alpha_equivalence(e).verdict);
}

TEST_CASE("phi") {
  const auto c2 = fx::c2();
  const auto s3 = fx::s3();
  const BiSet id = identity_biset(c2);
  const PhiEquivalence p = phi_equivalence(id, id);
  CHECK(p.verdict);
  CHECK_NOTHROW(check_span_morphism(p.morphism));
  const BiSet sg = s_of_functor(fx::sign(s3, c2));
  CHECK(phi_equivalence(sg, s_of_functor(fx::inclusion(c2, s3))).verdict);
  CHECK(phi_equivalence(empty_biset(c2, c2), id).verdict);
  CHECK(phi_equivalence(id, empty_biset(c2, c2)).verdict);
  CHECK(kind_of([&] { phi_equivalence(sg, id); }) == ErrorKind::BaseMismatch);
  CHECK(kind_of([&] { phi_equivalence(identity_biset(fx::trivial()), fixed_point(c2)); }) ==
        ErrorKind::BaseMismatch);
  const BiSet collapse = s_of_functor(validate_functor(c2, fx::trivial(), {0}, {0, 0}));
  CHECK(kind_of([&] { phi_equivalence(collapse, fixed_point(c2)); }) == ErrorKind::NotAdmissible);
}

TEST_CASE("Grothendieck construction") {
  const auto s3 = fx::s3();
  const auto one = fx::trivial();
  SUBCASE("constant at the point") {
    GroupoidDiagram d{s3, {one}, {}};
    for (Mor h = 0; h < 6; ++h) d.maps.push_back(identity_functor(one));
    const Grothendieck g = grothendieck(d);
    CHECK(*g.total == *s3);
  }
  SUBCASE("discrete values give the translation groupoid") {
    Rng rng(16);
    for (int i = 0; i < 20; ++i) {
      const auto h = random_groupoid(rng, 3, 8);
      const BiSet x = random_biset(rng, h, one, 3);
      const Grothendieck g = grothendieck(translation_diagram(x));
      const DoubleTranslation d = double_translation(x);
      CHECK(g.total->num_objects() == d.groupoid->num_objects());
      CHECK(g.total->num_morphisms() == d.groupoid->num_morphisms());
      CHECK(components(*g.total).count == components(*d.groupoid).count);
    }
  }
  SUBCASE("broken diagram") {
    GroupoidDiagram d{fx::c2(), {one}, {identity_functor(one)}};
    CHECK(kind_of([&] { check_diagram(d); }) == ErrorKind::NotFunctorial);
  }
  SUBCASE("fiber comparison is an equivalence") {
    Rng rng(18);
    for (int i = 0; i < 20; ++i) {
      const auto h = random_groupoid(rng, 2, 6);
      const auto g = random_groupoid(rng, 2, 6);
      const Grothendieck gr = grothendieck(translation_diagram(random_biset(rng, h, g, 2)));
      for (Obj eta = 0; eta < h->num_objects(); ++eta) CHECK(is_equivalence(fiber_comparison(gr, eta).functor));
    }
  }
}

TEST_CASE("pi0 chain") {
  Rng rng(19);
  for (int i = 0; i < 30; ++i) {
    const auto h = random_groupoid(rng, 3, 8);
    const auto g = random_groupoid(rng, 3, 8);
    const BiSet x = random_biset(rng, h, g, 3);
    for (Obj eta = 0; eta < h->num_objects(); ++eta) {
      const Pi0Chain c = pi0_chain(x, eta);
      CHECK(c.agrees());
    }
  }
}
