#include <doctest.h>

#include "fixtures.hpp"
#include "gpd/burnside.hpp"
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

// 1_{C3} with both actions pulled back along x ↦ -x
BiSet negated_identity(const GroupoidPtr& c3) {
  RawBiSet r = identity_biset(c3).raw();
  RawBiSet t = r;
  for (Mor m = 0; m < 3; ++m) {
    t.lact[m] = r.lact[(3 - m) % 3];
    t.ract[m] = r.ract[(3 - m) % 3];
  }
  return validate_biset(t);
}

}  // namespace

TEST_CASE("validate_biset") {
  const auto c2 = fx::c2();
  const BiSet id = validate_biset(identity_biset(c2).raw());
  CHECK(id.admissible());
  const auto one = fx::trivial();
  const RawBiSet fixed{one, c2, {1}, {{0}, {0}}, {{0}}};
  CHECK(kind_of([&] { validate_biset(fixed); }) == ErrorKind::NotAdmissible);
  CHECK_FALSE(validate_biset(fixed, Admissibility::Compute).admissible());
  // left s = (01), right s = (12) do not commute
  const RawBiSet skew{c2, c2, {3}, {{0, 1, 2}, {1, 0, 2}}, {{0, 1, 2}, {0, 2, 1}}};
  CHECK(kind_of([&] { validate_biset(skew, Admissibility::Compute); }) == ErrorKind::NotBifunctorial);
  const RawBiSet broken{one, c2, {2}, {{0, 1}, {0, 1}}, {{1, 0}}};
  CHECK(kind_of([&] { validate_biset(broken, Admissibility::Compute); }) == ErrorKind::NotBifunctorial);
}

TEST_CASE("identity_biset") {
  CHECK(identity_biset(fx::c2()).fibers() == std::vector<std::uint32_t>{2});
  CHECK(identity_biset(fx::discrete(2)).fibers() == std::vector<std::uint32_t>{1, 0, 0, 1});
  CHECK(identity_biset(fx::empty()).size() == 0);
}

TEST_CASE("composition against the pair-quotient oracle") {
  const auto c2 = fx::c2();
  const auto s3 = fx::s3();
  const auto one = fx::trivial();
  SUBCASE("unitors") {
    const BiSet x = s_of_functor(fx::sign(s3, c2));
    const BiSetIso r = unitor_right(x);
    const BiSetIso l = unitor_left(x);
    CHECK_NOTHROW(check_biset_iso(r));
    CHECK_NOTHROW(check_biset_iso(l));
    CHECK(r.target == x);
    CHECK(l.target == x);
    CHECK(r.source.fibers() == oracle::composite_fibers(x, identity_biset(s3)));
  }
  SUBCASE("free row against free column") {
    const BiSet y = validate_biset({one, c2, {2}, {{0, 1}, {1, 0}}, {{0, 1}}});
    const BiSet x = validate_biset({c2, one, {2}, {{0, 1}}, {{0, 1}, {1, 0}}});
    const BiSet xy = compose_bisets(x, y);
    CHECK(xy.fibers() == std::vector<std::uint32_t>{2});
    CHECK(xy.fibers() == oracle::composite_fibers(x, y));
  }
  SUBCASE("S is functorial up to iso") {
    const Functor p = fx::inclusion(c2, s3);
    const Functor q = fx::sign(s3, c2);
    const BiSet both = compose_bisets(s_of_functor(q), s_of_functor(p));
    CHECK(both.fibers() == oracle::composite_fibers(s_of_functor(q), s_of_functor(p)));
    CHECK(isomorphic(both, s_of_functor(compose_functors(q, p))));
    CHECK(isomorphic(both, identity_biset(c2)));
  }
  SUBCASE("random pairs") {
    Rng rng(5);
    for (int i = 0; i < 40; ++i) {
      const auto f = random_groupoid(rng, 2, 6);
      const auto g = random_groupoid(rng, 2, 6);
      const auto h = random_groupoid(rng, 2, 6);
      const BiSet x = random_biset(rng, g, f, 2);
      const BiSet y = random_biset(rng, h, g, 2);
      const BiSet xy = compose_bisets(x, y);
      CHECK(xy.fibers() == oracle::composite_fibers(x, y));
      CHECK(xy.admissible());
    }
  }
  SUBCASE("base mismatch") {
    const BiSet x = identity_biset(c2);
    CHECK(kind_of([&] { compose_bisets(x, identity_biset(s3)); }) == ErrorKind::BaseMismatch);
  }
}

TEST_CASE("unitors and associator") {
  const auto c2 = fx::c2();
  const BiSet id = identity_biset(c2);
  CHECK(unitor_right(id).map == unitor_left(id).map);
  const BiSet none = empty_biset(c2, c2);
  CHECK(unitor_right(none).map.images.empty());
  const BiSetIso a = associator(id, id, id);
  CHECK_NOTHROW(check_biset_iso(a));
  CHECK(a.target.size() == 2);
  const BiSetIso e = associator(id, none, id);
  CHECK(e.source.size() == 0);
  CHECK(e.target.size() == 0);
}

TEST_CASE("tensor") {
  const auto c2 = fx::c2();
  const BiSet x = identity_biset(c2);
  const BiSet y = s_of_functor(fx::sign(fx::s3(), c2));
  CHECK(tensor(x, empty_biset(c2, c2)) == x);
  const BiSet z = compose_bisets(y, s_of_functor(fx::inclusion(c2, fx::s3())));
  const BiSetIso sw = tensor_swap(x, z);
  CHECK_NOTHROW(check_biset_iso(sw));
  CHECK(tensor(x, z).fibers()[0] == x.fibers()[0] + z.fibers()[0]);
}

TEST_CASE("S on functors and transformations") {
  const auto c2 = fx::c2();
  const auto s3 = fx::s3();
  const auto one = fx::trivial();
  CHECK(s_of_functor(identity_functor(s3)) == identity_biset(s3));
  CHECK(s_of_functor(validate_functor(c2, one, {0}, {0, 0})).fibers() == std::vector<std::uint32_t>{1});
  const BiSet sg = s_of_functor(fx::sign(s3, c2));
  CHECK(sg.fibers() == std::vector<std::uint32_t>{2});
  CHECK(sg.admissible());
  CHECK(is_free(sg.column(0)));
  const Functor inc = fx::inclusion(c2, s3);
  for (Mor g = 0; g < 6; ++g) {
    std::vector<Mor> conj(6);
    for (Mor x = 0; x < 6; ++x) conj[x] = s3->compose(s3->compose(g, x), s3->inverse(g));
    const Functor c = validate_functor(s3, s3, {0}, conj);
    const NatTrans a = validate_nat_trans(inc, compose_functors(c, inc), {g});
    CHECK_NOTHROW(check_biset_iso(s_of_nattrans(a)));
  }
}

TEST_CASE("isomorphism search") {
  const auto c2 = fx::c2();
  const BiSet id = identity_biset(c2);
  CHECK(isomorphic(id, id));
  const auto c3 = fx::c3();
  const BiSet neg = negated_identity(c3);
  CHECK_FALSE(neg == identity_biset(c3));
  const auto found = find_isomorphism(identity_biset(c3), neg);
  REQUIRE(found);
  CHECK_NOTHROW(check_biset_iso({identity_biset(c3), neg, *found}));
  CHECK(oracle::brute_force_iso(identity_biset(c3), neg).iso);
  CHECK_FALSE(isomorphic(id, tensor(id, id)));
  Rng rng(99);
  int decided = 0;
  for (int i = 0; i < 60; ++i) {
    const auto h = random_groupoid(rng, 2, 6);
    const auto g = random_groupoid(rng, 2, 6);
    const BiSet x = random_biset(rng, h, g, 2);
    const BiSetIso t = twist(rng, x);
    CHECK_NOTHROW(check_biset_iso(t));
    CHECK(isomorphic(x, t.target));
    const BiSet y = random_biset(rng, h, g, 2);
    const oracle::IsoSearch o = oracle::brute_force_iso(x, y);
    if (o.decided) {
      ++decided;
      CHECK(isomorphic(x, y) == o.iso);
    }
  }
  CHECK(decided >= 30);
}

TEST_CASE("iso calculus") {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto h = random_groupoid(rng, 2, 6);
    const auto g = random_groupoid(rng, 2, 6);
    const BiSet x = random_biset(rng, h, g, 2);
    const BiSetIso t = twist(rng, x);
    const BiSetIso back = compose_isos(inverse_iso(t), t);
    CHECK(back.map == identity_iso(x).map);
    CHECK(horizontal(identity_iso(x), identity_iso(identity_biset(h))).map ==
          identity_iso(compose_bisets(x, identity_biset(h))).map);
  }
}

TEST_CASE("restriction") {
  const auto c2 = fx::c2();
  const auto s3 = fx::s3();
  const BiSet id = identity_biset(s3);
  const Functor inc = fx::inclusion(c2, s3);
  const BiSet r = restrict_target(id, inc);
  CHECK(r.fibers() == std::vector<std::uint32_t>{6});
  CHECK(r.admissible());
  CHECK(columns_free(r));
  const BiSet s = restrict_source(id, inc);
  CHECK(isomorphic(s, s_of_functor(inc)));
}

TEST_CASE("orbits") {
  const auto c2 = fx::c2();
  CHECK(biset_orbits(identity_biset(c2)).count() == 1);
  const BiSet two = tensor(identity_biset(c2), identity_biset(c2));
  const auto parts = orbit_summands(two);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == parts[1]);
  CHECK(orbit_summands(empty_biset(c2, c2)).empty());
  Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    const auto h = random_groupoid(rng, 3, 8);
    const auto g = random_groupoid(rng, 3, 8);
    const BiSet x = random_biset(rng, h, g, 3);
    CHECK(biset_orbits(x).count() == oracle::orbit_count(x));
    BiSet sum = empty_biset(h, g);
    for (const BiSet& p : orbit_summands(x)) sum = tensor(sum, p);
    CHECK(isomorphic(sum, x));
  }
}
