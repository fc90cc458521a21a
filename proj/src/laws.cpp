#include "gpd/laws.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "gpd/biset.hpp"
#include "gpd/burnside.hpp"
#include "gpd/comparison.hpp"
#include "gpd/error.hpp"
#include "gpd/random.hpp"
#include "gpd/span.hpp"

namespace gpd {

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

std::string sizes(std::initializer_list<std::size_t> xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "sizes " + s;
}

GroupoidPtr small(Rng& rng) { return random_groupoid(rng, 3, 8); }

Outcome pentagon(Rng& rng) {
  GroupoidPtr a[5];
  for (auto& g : a) g = small(rng);
  const BiSet w = random_biset(rng, a[1], a[0], 2);
  const BiSet x = random_biset(rng, a[2], a[1], 2);
  const BiSet y = random_biset(rng, a[3], a[2], 2);
  const BiSet z = random_biset(rng, a[4], a[3], 2);
  const BiSet wx = compose_bisets(w, x);
  const BiSet xy = compose_bisets(x, y);
  const BiSet yz = compose_bisets(y, z);
  const BiSetIso top = compose_isos(associator(wx, y, z), associator(w, x, yz));
  const BiSetIso bottom = compose_isos(horizontal(associator(w, x, y), identity_iso(z)),
                                       compose_isos(associator(w, xy, z), horizontal(identity_iso(w), associator(x, y, z))));
  check_biset_iso(top);
  if (!(top.map == bottom.map)) return fail("pentagon paths differ");
  return {true, sizes({w.size(), x.size(), y.size(), z.size(), top.source.size()})};
}

Outcome triangle(Rng& rng) {
  GroupoidPtr a[3];
  for (auto& g : a) g = small(rng);
  const BiSet x = random_biset(rng, a[1], a[0], 2);
  const BiSet y = random_biset(rng, a[2], a[1], 2);
  const BiSetIso lhs =
      compose_isos(horizontal(unitor_right(x), identity_iso(y)), associator(x, identity_biset(a[1]), y));
  const BiSetIso rhs = horizontal(identity_iso(x), unitor_left(y));
  check_biset_iso(lhs);
  if (!(lhs.map == rhs.map)) return fail("triangle paths differ");
  return {true, sizes({x.size(), y.size(), lhs.source.size()})};
}

Outcome unit(Rng& rng) {
  const GroupoidPtr h = small(rng);
  const GroupoidPtr g = small(rng);
  const BiSet x = random_biset(rng, h, g, 3);
  const BiSetIso r = unitor_right(x);
  const BiSetIso l = unitor_left(x);
  check_biset_iso(r);
  check_biset_iso(l);
  const BiSetIso f = twist(rng, x);
  check_biset_iso(f);
  const BiSetIso via_r = compose_isos(unitor_right(f.target), horizontal(f, identity_iso(identity_biset(h))));
  if (!(via_r.map == compose_isos(f, r).map)) return fail("right unitor is not natural");
  const BiSetIso via_l = compose_isos(unitor_left(f.target), horizontal(identity_iso(identity_biset(g)), f));
  if (!(via_l.map == compose_isos(f, l).map)) return fail("left unitor is not natural");
  return {true, sizes({x.size()})};
}

Outcome pullback_suite(Rng& rng) {
  GroupoidPtr a[4];
  for (auto& g : a) g = random_groupoid(rng, 2, 6);
  const Span s = random_span(rng, a[1], a[0], 2);
  const Span t = random_span(rng, a[2], a[1], 2);
  const Span u = random_span(rng, a[3], a[2], 2);
  const SpanMorphism assoc = span_associator(s, t, u);
  if (!is_span_isomorphism(assoc)) return fail("span associator is not an isomorphism");
  if (!is_equivalence(span_unitor_right(s).t)) return fail("right span unitor is not an equivalence");
  if (!is_equivalence(span_unitor_left(s).t)) return fail("left span unitor is not an equivalence");
  return {true, "apex " + std::to_string(assoc.source.apex()->num_objects())};
}

Outcome round_trip(Rng& rng) {
  const GroupoidPtr h = small(rng);
  const GroupoidPtr g = small(rng);
  const BiSet x = random_biset(rng, h, g, 3);
  const BiSetIso b = beta_iso(x);
  check_biset_iso(b);
  const Span s = random_span(rng, h, g, 2);
  const AlphaEquivalence a = alpha_equivalence(s);
  if (!a.verdict) return fail("alpha is not an equivalence: " + a.verdict.failure);
  return {true, sizes({x.size(), s.apex()->num_objects()})};
}

// The pullback of two double translation groupoids has |out|² composites per
// object, so this suite stays on smaller bases than `small` and redraws pairs
// whose double translation groupoids together exceed kCompatMorphisms.
constexpr std::size_t kCompatMorphisms = 4096;

Outcome compat(Rng& rng) {
  const GroupoidPtr k = random_groupoid(rng, 2, 4);
  const GroupoidPtr h = random_groupoid(rng, 2, 4);
  const GroupoidPtr g = random_groupoid(rng, 2, 4);
  BiSet x = random_biset(rng, h, g, 2);
  BiSet y = random_biset(rng, k, h, 2);
  while (double_translation(x).groupoid->num_morphisms() * double_translation(y).groupoid->num_morphisms() >
         kCompatMorphisms) {
    x = random_biset(rng, h, g, 1);
    y = random_biset(rng, k, h, 1);
  }
  const PhiEquivalence p = phi_equivalence(x, y);
  if (!p.verdict) return fail("phi is not an equivalence: " + p.verdict.failure);
  return {true, sizes({x.size(), y.size()})};
}

Outcome gsets(Rng& rng) {
  const GroupoidPtr g = small(rng);
  const GSet t = random_gset(rng, g, 3, uniform(rng, 0, 1) == 1);
  const bool free = is_free(t).free;
  if (free != shear_is_injective(t)) return fail("is_free and shear injectivity disagree");
  if (free) {
    const FreeDecomposition d = decompose_free(t);
    check_gset_map(d.coproduct, t, d.iso);
    if (!is_bijective(d.iso, t)) return fail("free decomposition is not a bijection");
  }
  const TranslationGroupoid tg = translation_groupoid(t);
  if (colimit(t).count() != components(*tg.groupoid).count) return fail("|colimit| differs from pi0 of GT");
  const GSet back = gset_from_cover(tg.projection);
  if (back.fibers() != t.fibers()) return fail("cover round trip changed the fibers");
  GSetMap same{std::vector<std::uint32_t>(t.size())};
  for (std::uint32_t e = 0; e < t.size(); ++e) same.images[e] = e;
  check_gset_map(back, t, same);
  const Functor p = random_cover(rng, g, 3);
  const Functor c = cover_comparison(p);
  if (!is_isomorphism(c)) return fail("cover comparison is not an isomorphism");
  const TranslationGroupoid tp = translation_groupoid(gset_from_cover(p));
  if (!(compose_functors(tp.projection, c) == p)) return fail("cover comparison does not lie over the base");
  return {true, std::string(free ? "free " : "non-free ") + sizes({t.size()})};
}

Outcome pi0(Rng& rng) {
  const GroupoidPtr h = small(rng);
  const GroupoidPtr g = small(rng);
  const BiSet x = random_biset(rng, h, g, 3, uniform(rng, 0, 1) == 1);
  for (Obj eta = 0; eta < h->num_objects(); ++eta) {
    const Pi0Chain c = pi0_chain(x, eta);
    if (!c.agrees()) {
      return fail("pi0 chain at " + std::to_string(eta) + ": " + std::to_string(c.colimit) + " " +
                  std::to_string(c.translation) + " " + std::to_string(c.homotopy_fiber));
    }
  }
  return {true, sizes({x.size()})};
}

Outcome additivity(Rng& rng) {
  const GroupoidPtr c2 = share(from_group(cyclic_group(2).cayley()));
  const GroupoidPtr c3 = share(from_group(cyclic_group(3).cayley()));
  const GroupoidPtr one = share(discrete_groupoid(1));
  const Additivity a = additivity_witnesses(c2, c3);
  if (auto v = check_additivity_units(a); !v) return fail(v.failure);
  const BiSet z = random_biset(rng, one, a.sum.sum, 3);
  if (auto v = check_recovery(a, z); !v) return fail(v.failure);
  const BiSet w = random_biset(rng, a.sum.sum, one, 3);
  if (auto v = check_splitting(a, w); !v) return fail(v.failure);
  const GroupoidPtr e = share(discrete_groupoid(0));
  const GroupoidPtr g = small(rng);
  if (!burnside_group(e, g, 16).empty() || !burnside_group(g, e, 16).empty()) return fail("E is not a zero object");
  const BiSet out = random_biset(rng, g, e, 2);
  const BiSet in = random_biset(rng, e, g, 2);
  if (!hom_monoid_element(compose_bisets(in, out)).is_zero()) return fail("composite through E is not zero");
  return {true, sizes({z.size(), w.size()})};
}

Outcome canonical(Rng& rng, std::size_t index) {
  const GroupoidPtr h = small(rng);
  const GroupoidPtr g = small(rng);
  const auto specs = random_orbit_specs(rng, *h, *g, 3, true);
  const BiSet a = twist(rng, build_biset(h, g, specs)).target;
  BiSet b;
  std::string kind;
  switch (index % 3) {
    case 0:
      b = twist(rng, a).target;
      kind = "twist";
      break;
    case 1:
      if (auto m = near_miss(rng, *h, *g, specs, true)) {
        b = twist(rng, build_biset(h, g, *m)).target;
        kind = "near-miss";
        break;
      }
      [[fallthrough]];
    default:
      b = random_biset(rng, h, g, 3);
      kind = "independent";
  }
  const bool same_code = canonical_form(a).code == canonical_form(b).code;
  const auto iso = find_isomorphism(a, b);
  if (iso) check_biset_iso({a, b, *iso});
  if (same_code != iso.has_value()) {
    return fail(kind + ": canonical codes " + (same_code ? "agree" : "differ") + " but find_isomorphism says " +
                (iso ? "iso" : "non-iso"));
  }
  return {true, kind + (iso ? " iso" : " non-iso")};
}

using CaseFn = std::function<Outcome(Rng&, std::size_t)>;

const std::map<std::string, CaseFn>& registry() {
  static const std::map<std::string, CaseFn> r = {
      {"pentagon", [](Rng& r, std::size_t) { return pentagon(r); }},
      {"triangle", [](Rng& r, std::size_t) { return triangle(r); }},
      {"unit", [](Rng& r, std::size_t) { return unit(r); }},
      {"pullback", [](Rng& r, std::size_t) { return pullback_suite(r); }},
      {"round-trip", [](Rng& r, std::size_t) { return round_trip(r); }},
      {"compat", [](Rng& r, std::size_t) { return compat(r); }},
      {"gsets", [](Rng& r, std::size_t) { return gsets(r); }},
      {"pi0", [](Rng& r, std::size_t) { return pi0(r); }},
      {"additivity", [](Rng& r, std::size_t) { return additivity(r); }},
      {"canonical", canonical},
  };
  return r;
}

}  // namespace

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return !c.ok; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"pentagon", "triangle", "unit",       "pullback", "round-trip",
                                                 "compat",   "gsets",    "pi0",        "additivity", "canonical"};
  return names;
}

CaseResult run_case(const std::string& suite, std::uint64_t seed, std::size_t index) {
  const auto it = registry().find(suite);
  if (it == registry().end()) throw Error(ErrorKind::Malformed, "unknown suite '" + suite + "'");
  CaseResult r{index, case_seed(seed, index), false, {}};
  Rng rng(r.seed);
  try {
    Outcome o = it->second(rng, index);
    r.ok = o.ok;
    r.detail = std::move(o.detail);
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  return r;
}

SuiteReport run_suite(const std::string& suite, std::uint64_t seed, std::size_t cases, Execution exec) {
  if (!registry().contains(suite)) throw Error(ErrorKind::Malformed, "unknown suite '" + suite + "'");
  SuiteReport report{suite, seed, std::vector<CaseResult>(cases)};
  const auto n = static_cast<long long>(cases);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) report.cases[i] = run_case(suite, seed, static_cast<std::size_t>(i));
  } else {
    for (long long i = 0; i < n; ++i) report.cases[i] = run_case(suite, seed, static_cast<std::size_t>(i));
  }
  return report;
}

}  // namespace gpd
