#include <doctest.h>

#include "fixtures.hpp"
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

// G(γ, m(-)) as a left K-set
GSet hom_from(const Functor& m, Obj gamma) {
  const Groupoid& k = *m.source;
  const Groupoid& g = *m.target;
  RawGSet raw{m.source, Variance::Covariant, {}, std::vector<std::vector<std::uint32_t>>(k.num_morphisms())};
  for (Obj o = 0; o < k.num_objects(); ++o) raw.fibers.push_back(static_cast<std::uint32_t>(g.hom(gamma, m.obj(o)).size()));
  for (Mor f = 0; f < k.num_morphisms(); ++f) {
    for (Mor a : g.hom(gamma, m.obj(k.source(f)))) raw.action[f].push_back(g.hom_position(g.compose(m.mor(f), a)));
  }
  return validate_gset(std::move(raw));
}

std::vector<int> image(const Functor& f) {
  std::vector<int> out;
  for (Mor m : f.morphisms) out.push_back(static_cast<int>(m));
  return out;
}

}  // namespace

TEST_CASE("pullbacks") {
  const auto c2 = fx::c2();
  const auto one = fx::trivial();
  SUBCASE("points over C2") {
    const Functor pt = point_functor(c2, 0);
    const Pullback pb = pullback(pt, pt);
    CHECK(pb.apex->num_objects() == 2);
    CHECK(*pb.apex == discrete_groupoid(2));
    CHECK_NOTHROW(check_nat_trans(pb.square));
  }
  SUBCASE("unit sections") {
    Rng rng(8);
    for (int i = 0; i < 20; ++i) {
      const auto k = random_groupoid(rng, 3, 8);
      const auto g = random_groupoid(rng, 3, 8);
      const auto n = random_functor(rng, k, g);
      if (!n) continue;
      for (const PullbackUnit& u : {pullback_unit_right(*n), pullback_unit_left(*n)}) {
        CHECK(compose_functors(u.projection, u.section) == identity_functor(k));
        CHECK_NOTHROW(check_nat_trans(u.unit));
        CHECK(is_equivalence(u.section));
      }
    }
  }
  SUBCASE("homotopy fibers") {
    const Pullback f = homotopy_fiber(identity_functor(c2), 0);
    CHECK(f.apex->num_objects() == 2);
    CHECK(components(*f.apex).count == 1);
    CHECK(is_discrete(*f.apex));
    const Functor none{fx::empty(), c2, {}, {}};
    CHECK(homotopy_fiber(none, 0).apex->num_objects() == 0);
    Rng rng(12);
    for (int i = 0; i < 30; ++i) {
      const auto k = random_groupoid(rng, 3, 8);
      const auto g = random_groupoid(rng, 3, 8);
      const auto m = random_functor(rng, k, g);
      if (!m) continue;
      for (Obj gamma = 0; gamma < g->num_objects(); ++gamma) {
        CHECK(components(*homotopy_fiber(*m, gamma).apex).count == colimit(hom_from(*m, gamma)).count());
      }
    }
  }
  SUBCASE("associator") {
    Rng rng(21);
    for (int i = 0; i < 10; ++i) {
      const auto k = random_groupoid(rng, 2, 6);
      const auto g = random_groupoid(rng, 2, 6);
      const auto l = random_groupoid(rng, 2, 6);
      const auto h = random_groupoid(rng, 2, 6);
      const auto mm = random_groupoid(rng, 2, 6);
      const auto m = random_functor(rng, k, g);
      const auto p = random_functor(rng, l, g);
      const auto n = random_functor(rng, l, h);
      const auto q = random_functor(rng, mm, h);
      if (!m || !p || !n || !q) continue;
      const PullbackAssociator a = pullback_associator(*m, *p, *n, *q);
      CHECK(is_isomorphism(a.iso));
    }
  }
}

TEST_CASE("finite weak covers") {
  const auto c2 = fx::c2();
  const auto s3 = fx::s3();
  const auto one = fx::trivial();
  CHECK(is_finite_weak_cover(validate_functor(fx::discrete(2), one, {0, 0}, {0, 0})));
  const WeakCoverVerdict v = is_finite_weak_cover(validate_functor(c2, one, {0}, {0, 0}));
  CHECK_FALSE(v);
  CHECK_FALSE(v.failure.empty());
  const Functor inc = fx::inclusion(c2, s3);
  CHECK(is_finite_weak_cover(inc));
  CHECK(components(*homotopy_fiber(inc, 0).apex).count == 3);
  CHECK(is_finite_weak_cover(identity_functor(s3)));
  CHECK(is_finite_weak_cover(point_functor(c2, 0)));
}

TEST_CASE("span construction") {
  const auto c2 = fx::c2();
  const auto s3 = fx::s3();
  const auto one = fx::trivial();
  const Span id = s_span(identity_functor(s3));
  CHECK(id.left == identity_functor(s3));
  CHECK(id.right == identity_functor(s3));
  CHECK_NOTHROW(t_span(fx::inclusion(c2, s3)));
  CHECK(kind_of([&] { t_span(validate_functor(c2, one, {0}, {0, 0})); }) == ErrorKind::NotAFiniteWeakCover);
  CHECK(kind_of([&] { make_span(identity_functor(c2), identity_functor(s3)); }) == ErrorKind::NotComposable);
}

TEST_CASE("span composition") {
  const auto c2 = fx::c2();
  const auto s3 = fx::s3();
  const Functor inc = fx::inclusion(c2, s3);
  const Span dc = compose_spans(t_span(inc), s_span(inc));
  const oracle::Table t = oracle::permutations(3);
  CHECK(components(*dc.apex()).count == oracle::double_cosets(t, image(inc), image(inc)));
  CHECK(components(*dc.apex()).count == 2);
  const Span e{Functor{fx::empty(), c2, {}, {}}, Functor{fx::empty(), s3, {}, {}}};
  CHECK(compose_spans(s_span(identity_functor(s3)), make_span(e.left, e.right)).apex()->num_objects() == 0);
  const Span b = s_span(fx::sign(s3, c2));
  const SpanMorphism u = span_unitor_right(b);
  CHECK_NOTHROW(check_span_morphism(u));
  CHECK(is_equivalence(u.t));
  CHECK(components(*compose_spans(b, s_span(identity_functor(s3))).apex()).count == components(*b.apex()).count);
}

TEST_CASE("span morphisms and 2-cells") {
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    const auto h = random_groupoid(rng, 2, 6);
    const auto g = random_groupoid(rng, 2, 6);
    const Span a = random_span(rng, h, g, 2);
    const SpanMorphism id = identity_span_morphism(a);
    CHECK_NOTHROW(check_span_morphism(id));
    CHECK(compose_span_morphisms(id, id) == id);
    const TwoCell c = identity_two_cell(id);
    CHECK_NOTHROW(check_two_cell(c));
    CHECK(compose_two_cells_vertical(c, c).psi == c.psi);
    CHECK(compose_two_cells(c, c).psi == c.psi);
    // three relabelings of the apex compose associatively
    std::vector<SpanMorphism> ms;
    Span cur = a;
    for (int j = 0; j < 3; ++j) {
      const Relabeling r = relabel_objects(cur.apex(), random_permutation(rng, cur.apex()->num_objects()));
      const Span next = make_span(compose_functors(cur.left, r.from), compose_functors(cur.right, r.from));
      ms.push_back(strict_span_morphism(next, cur, r.from));
      cur = next;
    }
    const SpanMorphism l = compose_span_morphisms(compose_span_morphisms(ms[0], ms[1]), ms[2]);
    const SpanMorphism r = compose_span_morphisms(ms[0], compose_span_morphisms(ms[1], ms[2]));
    CHECK(l == r);
    CHECK(is_span_isomorphism(l));
  }
}

TEST_CASE("S and T on transformations") {
  const auto c2 = fx::c2();
  const auto s3 = fx::s3();
  const Functor inc = fx::inclusion(c2, s3);
  for (Mor g = 0; g < 6; ++g) {
    std::vector<Mor> conj(6);
    for (Mor x = 0; x < 6; ++x) conj[x] = s3->compose(s3->compose(g, x), s3->inverse(g));
    const NatTrans a = validate_nat_trans(inc, compose_functors(validate_functor(s3, s3, {0}, conj), inc), {g});
    CHECK_NOTHROW(check_span_morphism(s_span_morphism(a)));
    CHECK_NOTHROW(check_span_morphism(t_span_morphism(a)));
  }
}

TEST_CASE("associator and unitors of spans") {
  Rng rng(41);
  for (int i = 0; i < 10; ++i) {
    const auto f = random_groupoid(rng, 2, 4);
    const auto g = random_groupoid(rng, 2, 4);
    const auto h = random_groupoid(rng, 2, 4);
    const auto k = random_groupoid(rng, 2, 4);
    const Span a = random_span(rng, g, f, 2);
    const Span b = random_span(rng, h, g, 2);
    const Span c = random_span(rng, k, h, 2);
    const SpanMorphism as = span_associator(a, b, c);
    CHECK_NOTHROW(check_span_morphism(as));
    CHECK(is_span_isomorphism(as));
    const SpanMorphism ul = span_unitor_left(a);
    CHECK_NOTHROW(check_span_morphism(ul));
    CHECK(is_equivalence(ul.t));
  }
}

TEST_CASE("double coset equivalence") {
  const auto c2 = fx::c2();
  const auto s3 = fx::s3();
  const auto one = fx::trivial();
  const oracle::Table t = oracle::permutations(3);
  SUBCASE("identities") {
    const DoubleCosetWitness w = double_coset_equivalence(identity_functor(c2), identity_functor(c2));
    CHECK(w.verdict);
    CHECK(w.lhs_components == 1);
    CHECK(w.rhs_components == 1);
  }
  SUBCASE("C2 inside S3 on both sides") {
    const Functor inc = fx::inclusion(c2, s3);
    const DoubleCosetWitness w = double_coset_equivalence(inc, inc);
    CHECK(w.verdict);
    CHECK_NOTHROW(check_span_morphism(w.comparison));
    CHECK(w.lhs_components == oracle::double_cosets(t, image(inc), image(inc)));
    CHECK(w.rhs_components == w.lhs_components);
  }
  SUBCASE("trivial subgroup against C2") {
    const Functor p = point_functor(s3, 0);
    const Functor q = fx::inclusion(c2, s3);
    const DoubleCosetWitness w = double_coset_equivalence(p, q);
    CHECK(w.verdict);
    CHECK(w.lhs_components == oracle::double_cosets(t, image(q), {0}));
    CHECK(w.lhs_components == 3);
  }
}

TEST_CASE("oversized composition tables are rejected") {
  const auto s3 = fx::s3();
  CHECK(kind_of([&] { double_coset_equivalence(identity_functor(s3), identity_functor(s3)); }) ==
        ErrorKind::Malformed);
}
