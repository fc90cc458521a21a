#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "gpd/error.hpp"
#include "gpd/random.hpp"

using namespace gpd;

namespace {

GSet regular(const GroupoidPtr& c2, Variance v = Variance::Covariant) {
  return validate_gset({c2, v, {2}, {{0, 1}, {1, 0}}});
}

GSet trivial_set(const GroupoidPtr& c2, std::uint32_t n, Variance v = Variance::Covariant) {
  std::vector<std::uint32_t> id(n);
  for (std::uint32_t i = 0; i < n; ++i) id[i] = i;
  return validate_gset({c2, v, {n}, {id, id}});
}

GSet terminal(const GroupoidPtr& g, Variance v) {
  return validate_gset({g, v, std::vector<std::uint32_t>(g->num_objects(), 1),
                        std::vector<std::vector<std::uint32_t>>(g->num_morphisms(), {0})});
}

}  // namespace

TEST_CASE("validate_gset") {
  const auto s3 = fx::s3();
  CHECK(terminal(s3, Variance::Covariant).size() == 1);
  const auto c2 = fx::c2();
  CHECK(regular(c2).size() == 2);
  CHECK_THROWS_AS(validate_gset({c2, Variance::Covariant, {2}, {{1, 0}, {1, 0}}}), Error);
  try {
    validate_gset({c2, Variance::Covariant, {2}, {{1, 0}, {1, 0}}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFunctorial);
  }
  // s∘s must act as the identity
  CHECK_THROWS_AS(validate_gset({fx::c3(), Variance::Covariant, {2}, {{0, 1}, {1, 0}, {1, 0}}}), Error);
}

TEST_CASE("colimit") {
  const auto c2 = fx::c2();
  CHECK(colimit(regular(c2)).count() == 1);
  CHECK(colimit(trivial_set(c2, 2)).count() == 2);
  const GSet four = validate_gset({c2, Variance::Covariant, {4}, {{0, 1, 2, 3}, {1, 0, 3, 2}}});
  const Orbits o = colimit(four);
  CHECK(o.count() == 2);
  CHECK(o.class_of[0] == o.class_of[1]);
  CHECK(o.class_of[2] == o.class_of[3]);
  CHECK(o.class_of[0] != o.class_of[2]);
  CHECK(colimit(regular(c2, Variance::Contravariant)).count() == 1);
  for (const GSet& t : {regular(c2), trivial_set(c2, 2), four}) CHECK(is_finite(t));
}

TEST_CASE("is_free and the shear map") {
  const auto c2 = fx::c2();
  CHECK(is_free(regular(c2)));
  CHECK(shear_is_injective(regular(c2)));
  const FreenessVerdict v = is_free(trivial_set(c2, 1));
  CHECK_FALSE(v);
  REQUIRE(v.witness);
  CHECK(v.witness->first != v.witness->second);
  CHECK_FALSE(shear_is_injective(trivial_set(c2, 1)));
  CHECK(is_free(corepresentable(fx::s3(), 0)));
  CHECK_FALSE(is_free(fx::mixed_c2_set(c2)));
}

TEST_CASE("corepresentable") {
  const auto c2 = fx::c2();
  const GSet r = corepresentable(c2, 0);
  CHECK(r.raw().action == regular(c2).raw().action);
  CHECK(corepresentable(fx::discrete(2), 0).fibers() == std::vector<std::uint32_t>{1, 0});
  CHECK(corepresentable(fx::interval(), 0).fibers() == std::vector<std::uint32_t>{1, 1});
}

TEST_CASE("decompose_free") {
  const auto c2 = fx::c2();
  const FreeDecomposition one = decompose_free(regular(c2));
  CHECK(one.generators.size() == 1);
  CHECK(one.generators[0].object == 0);
  const GSet four = coproduct(regular(c2), regular(c2));
  const FreeDecomposition two = decompose_free(four);
  CHECK(two.generators.size() == colimit(four).count());
  CHECK_NOTHROW(check_gset_map(two.coproduct, four, two.iso));
  CHECK(is_bijective(two.iso, four));
  try {
    decompose_free(trivial_set(c2, 1));
    FAIL("expected NotFree");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFree);
  }
}

TEST_CASE("coequalizer") {
  const auto c2 = fx::c2();
  const GSet x = regular(c2);
  SUBCASE("equal maps give the codomain") {
    const GSetMap id{{0, 1}};
    const Coequalizer q = coequalizer(x, x, id, id);
    CHECK(q.quotient.size() == 2);
    CHECK(is_bijective(q.projection, q.quotient));
  }
  SUBCASE("kernel pair of the identity") {
    // the diagonal of X, with both projections
    const Coequalizer q = coequalizer(x, x, GSetMap{{0, 1}}, GSetMap{{0, 1}});
    CHECK(q.quotient.size() == 2);
  }
  SUBCASE("kernel pair of a surjection recovers its image") {
    const GSet y = coproduct(regular(c2), regular(c2));  // 2 orbits
    const std::vector<std::uint32_t> f{0, 1, 0, 1};      // fold onto X
    // kernel pair K = {(a, b) : f a = f b}, acting diagonally
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t a = 0; a < 4; ++a) {
      for (std::uint32_t b = 0; b < 4; ++b) {
        if (f[a] == f[b]) pairs.emplace_back(a, b);
      }
    }
    std::vector<std::uint32_t> swap(pairs.size());
    for (std::uint32_t i = 0; i < pairs.size(); ++i) {
      const auto want = std::make_pair(y.act(1, pairs[i].first), y.act(1, pairs[i].second));
      swap[i] = static_cast<std::uint32_t>(std::find(pairs.begin(), pairs.end(), want) - pairs.begin());
    }
    std::vector<std::uint32_t> id(pairs.size());
    for (std::uint32_t i = 0; i < id.size(); ++i) id[i] = i;
    const GSet k = validate_gset({c2, Variance::Covariant, {static_cast<std::uint32_t>(pairs.size())}, {id, swap}});
    GSetMap u{std::vector<std::uint32_t>(pairs.size())}, v = u;
    for (std::uint32_t i = 0; i < pairs.size(); ++i) {
      u.images[i] = pairs[i].first;
      v.images[i] = pairs[i].second;
    }
    const Coequalizer q = coequalizer(k, y, u, v);
    CHECK(q.quotient.size() == x.size());
    CHECK_NOTHROW(check_gset_map(y, q.quotient, q.projection));
    // the class of a determines f(a) and conversely
    std::set<std::pair<std::uint32_t, std::uint32_t>> graph;
    for (std::uint32_t a = 0; a < 4; ++a) graph.emplace(q.projection.images[a], f[a]);
    CHECK(graph.size() == 2);
  }
}

TEST_CASE("translation_groupoid") {
  const auto s3 = fx::s3();
  const TranslationGroupoid point = translation_groupoid(terminal(s3, Variance::Covariant));
  CHECK(*point.groupoid == *s3);
  const auto c2 = fx::c2();
  const TranslationGroupoid r = translation_groupoid(regular(c2));
  CHECK(r.groupoid->num_objects() == 2);
  CHECK(r.groupoid->num_morphisms() == 4);
  CHECK(is_discrete(*r.groupoid));
  CHECK(components(*r.groupoid).count == 1);
  const TranslationGroupoid fixed = translation_groupoid(trivial_set(c2, 1));
  CHECK(*fixed.groupoid == *c2);
}

TEST_CASE("covering maps") {
  const auto c2 = fx::c2();
  const auto one = fx::trivial();
  CHECK(is_covering_map(identity_functor(c2)));
  CHECK(is_covering_map(validate_functor(fx::discrete(2), one, {0, 0}, {0, 0})));
  CHECK_FALSE(is_covering_map(validate_functor(c2, one, {0}, {0, 0})));
  try {
    gset_from_cover(validate_functor(c2, one, {0}, {0, 0}));
    FAIL("expected NotACover");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotACover);
  }
  const GSet x = regular(c2);
  const TranslationGroupoid t = translation_groupoid(x);
  CHECK(is_covering_map(t.projection));
  CHECK(gset_from_cover(t.projection).raw().action == x.raw().action);
  CHECK(is_isomorphism(cover_comparison(t.projection)));
  const GSet ids = gset_from_cover(identity_functor(fx::s3()));
  CHECK(ids.fibers() == std::vector<std::uint32_t>{1});
}

TEST_CASE("coends") {
  const auto c2 = fx::c2();
  CHECK(coend(regular(c2, Variance::Contravariant), regular(c2)).size() == 2);
  const GSet mixed = fx::mixed_c2_set(c2);
  CHECK(coend(terminal(c2, Variance::Contravariant), mixed).size() == colimit(mixed).count());
  const GSet q = validate_gset({c2, Variance::Contravariant, {3}, {{0, 1, 2}, {1, 0, 2}}});
  CHECK(coend(q, corepresentable(c2, 0)).size() == 3);
  CHECK(balanced_product(q, regular(c2)).size() == 3);
#if GPD_CHECKED
  const Coend c = coend(regular(c2, Variance::Contravariant), regular(c2));
  CHECK_THROWS_AS(induced_on_classes(c, [](Obj, std::uint32_t s, std::uint32_t) { return s; }), Error);
#endif
}

TEST_CASE("random G-sets: freeness, orbits and covers") {
  Rng rng(2024);
  int free_seen = 0;
  for (int i = 0; i < 100; ++i) {
    const auto g = random_groupoid(rng, 3, 8);
    const GSet t = random_gset(rng, g, 3, i % 4 == 0);
    CHECK(bool(is_free(t)) == shear_is_injective(t));
    CHECK(colimit(t).count() == components(*translation_groupoid(t).groupoid).count);
    if (is_free(t)) {
      ++free_seen;
      const FreeDecomposition d = decompose_free(t);
      CHECK(is_bijective(d.iso, t));
    }
    const Functor p = random_cover(rng, g, 3);
    CHECK(is_covering_map(p));
    CHECK(is_isomorphism(cover_comparison(p)));
  }
  CHECK(free_seen >= 25);
}
