#include <doctest.h>

#include "fixtures.hpp"
#include "gpd/error.hpp"
#include "gpd/random.hpp"
#include "oracles.hpp"

using namespace gpd;

namespace {

RawGroupoid c2_raw() {
  RawGroupoid r;
  r.objects = 1;
  r.morphisms = {{"e", 0, 0}, {"s", 0, 0}};
  r.identities = {{0, 0}};
  r.composites = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  return r;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Malformed;
}

}  // namespace

TEST_CASE("validate_groupoid on a C2 table") {
  const Groupoid g = validate_groupoid(c2_raw());
  CHECK(g.num_objects() == 1);
  CHECK(g.num_morphisms() == 2);
  CHECK(g.name(1) == "s");
  CHECK(g.compose(1, 1) == 0);
  CHECK(g.inverse(1) == 1);
}

TEST_CASE("validate_groupoid rejects broken tables") {
  SUBCASE("missing composite") {
    RawGroupoid r = c2_raw();
    r.composites.pop_back();
    CHECK(kind_of([&] { validate_groupoid(r); }) == ErrorKind::MissingComposite);
  }
  SUBCASE("idempotent non-identity") {
    RawGroupoid r = c2_raw();
    r.composites.back().gf = 1;
    CHECK(kind_of([&] { validate_groupoid(r); }) == ErrorKind::NoInverse);
  }
  SUBCASE("no identity declared") {
    RawGroupoid r = c2_raw();
    r.identities.clear();
    CHECK(kind_of([&] { validate_groupoid(r); }) == ErrorKind::NoIdentity);
  }
  SUBCASE("non-associative") {
    // a magma on {e, a, b} with e a unit, every element invertible, but
    // (a∘a)∘b != a∘(a∘b)
    RawGroupoid r;
    r.objects = 1;
    r.morphisms = {{"e", 0, 0}, {"a", 0, 0}, {"b", 0, 0}};
    r.identities = {{0, 0}};
    const Mor t[3][3] = {{0, 1, 2}, {1, 0, 0}, {2, 0, 0}};
    for (Mor g = 0; g < 3; ++g) {
      for (Mor f = 0; f < 3; ++f) r.composites.push_back({g, f, t[g][f]});
    }
    CHECK(kind_of([&] { validate_groupoid(r); }) == ErrorKind::NonAssociative);
  }
}

TEST_CASE("from_group") {
  CHECK(from_group(oracle::cyclic(2).cayley()).num_morphisms() == 2);
  const Groupoid s3 = from_group(oracle::permutations(3).cayley());
  CHECK(s3.num_objects() == 1);
  CHECK(s3.num_morphisms() == 6);
  const oracle::Table z4 = oracle::cyclic(4);
  const Groupoid g = from_group(z4.cayley());
  CHECK(g.num_morphisms() == 4);
  for (int a = 0; a < 4; ++a) CHECK(g.inverse(a) == static_cast<Mor>(z4.inv(a)));
  CHECK(g.inverse(1) == 3);
  CHECK(kind_of([] { from_group({{0, 1}, {1, 1}}); }) == ErrorKind::NotAGroup);
  CHECK(kind_of([] { from_group({{0, 1}}); }) == ErrorKind::NotAGroup);
}

TEST_CASE("discrete groupoids") {
  CHECK(discrete_groupoid(0).num_objects() == 0);
  CHECK(discrete_groupoid(1) == *fx::trivial());
  const Groupoid d2 = discrete_groupoid(2);
  CHECK(d2.num_morphisms() == 2);
  CHECK(is_discrete(d2));
  CHECK(components(d2).count == 2);
}

TEST_CASE("opposite") {
  CHECK(opposite(*fx::c2()) == *fx::c2());
  const auto s3 = fx::s3();
  CHECK(opposite(opposite(*s3)) == *s3);
  const Groupoid i = *fx::interval();
  const Groupoid o = opposite(i);
  for (Mor m = 0; m < i.num_morphisms(); ++m) {
    CHECK(o.source(m) == i.target(m));
    CHECK(o.target(m) == i.source(m));
  }
}

TEST_CASE("disjoint_union") {
  const auto c2 = fx::c2();
  CHECK(*disjoint_union(fx::empty(), c2).sum == *c2);
  const Coproduct u = disjoint_union(c2, fx::c3());
  CHECK(u.sum->num_objects() == 2);
  CHECK(u.sum->num_morphisms() == 5);
  CHECK_NOTHROW(check_functor(u.in1));
  CHECK_NOTHROW(check_functor(u.in2));
  CHECK(u.in2.obj(0) == 1);
  CHECK(*disjoint_union(fx::trivial(), fx::trivial()).sum == discrete_groupoid(2));
}

TEST_CASE("product") {
  const auto s3 = fx::s3();
  CHECK(product(*fx::trivial(), *s3) == *s3);
  const Groupoid v = product(*fx::c2(), *fx::c2());
  CHECK(v.num_objects() == 1);
  CHECK(v.num_morphisms() == 4);
  CHECK(product(*s3, *fx::c2()).num_morphisms() == 12);
}

TEST_CASE("components") {
  CHECK(components(discrete_groupoid(2)).count == 2);
  CHECK(components(*fx::interval()).count == 1);
  CHECK(components(*disjoint_union(fx::c2(), fx::s3()).sum).count == 2);
}

TEST_CASE("functors") {
  const auto s3 = fx::s3();
  const auto c2 = fx::c2();
  CHECK_NOTHROW(check_functor(identity_functor(s3)));
  const Functor sg = fx::sign(s3, c2);
  // homomorphism property against the oracle's own table
  const oracle::Table t = oracle::permutations(3);
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) CHECK(sg.mor(t(a, b)) == (sg.mor(a) + sg.mor(b)) % 2);
  }
  std::vector<Mor> bad(6, 0);
  bad[1] = 1;
  CHECK(kind_of([&] { validate_functor(s3, c2, {0}, bad); }) == ErrorKind::NotAFunctor);
  CHECK(compose_functors(sg, fx::inclusion(c2, s3)) == identity_functor(c2));
}

TEST_CASE("natural transformations") {
  const auto c2 = fx::c2();
  const auto s3 = fx::s3();
  const Functor inc = fx::inclusion(c2, s3);
  CHECK_NOTHROW(check_nat_trans(identity_nat_trans(inc)));
  // conjugation by g: x ↦ g x g⁻¹ is a functor, and g is a transformation
  // inc -> conj∘inc
  const oracle::Table t = oracle::permutations(3);
  for (int g = 0; g < 6; ++g) {
    std::vector<Mor> conj(6);
    for (int x = 0; x < 6; ++x) conj[x] = t(t(g, x), t.inv(g));
    const Functor cj = validate_functor(s3, s3, {0}, conj);
    const NatTrans a = validate_nat_trans(inc, compose_functors(cj, inc), {static_cast<Mor>(g)});
    CHECK(compose_nat_trans(inverse_nat_trans(a), a) == identity_nat_trans(inc));
  }
  CHECK(kind_of([&] { validate_nat_trans(inc, inc, {}); }) == ErrorKind::NotNatural);
  CHECK(kind_of([&] { validate_nat_trans(inc, inc, {3}); }) == ErrorKind::NotNatural);
}

TEST_CASE("whiskering and interchange") {
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    const auto k = random_groupoid(rng, 3, 8);
    const auto g = random_groupoid(rng, 3, 8);
    const auto f = random_functor(rng, k, g);
    if (!f) continue;
    const NatTrans id = identity_nat_trans(*f);
    const Functor idg = identity_functor(g);
    CHECK(whisker_left(idg, id) == id);
    CHECK(whisker_right(id, identity_functor(k)) == id);
    CHECK(horizontal_compose(identity_nat_trans(idg), id) == id);
  }
}

TEST_CASE("is_equivalence") {
  const auto s3 = fx::s3();
  CHECK(is_equivalence(identity_functor(s3)));
  const auto one = fx::trivial();
  const auto i = fx::interval();
  const EquivalenceVerdict v = is_equivalence(validate_functor(i, one, {0, 0}, {0, 0, 0, 0}));
  REQUIRE(v);
  CHECK_NOTHROW(check_nat_trans(*v.unit));
  CHECK_NOTHROW(check_nat_trans(*v.counit));
  const auto d2 = fx::discrete(2);
  CHECK_FALSE(is_equivalence(validate_functor(d2, one, {0, 0}, {0, 0})));
  CHECK_FALSE(is_equivalence(fx::inclusion(fx::c2(), s3)));
}

TEST_CASE("random groupoids satisfy the laws") {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto g = random_groupoid(rng, 3, 8);
    CHECK(g->num_objects() <= 3);
    CHECK(g->num_morphisms() <= 8);
    CHECK_NOTHROW(check_groupoid_laws(*g));
  }
}
