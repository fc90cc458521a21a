#include "gpd/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "gpd/burnside.hpp"
#include "gpd/error.hpp"

namespace gpd {

namespace {

// The subgroup as a group of its own; element i is elems[i].
FiniteGroup as_group(const FiniteGroup& g, const std::vector<std::uint32_t>& elems) {
  std::vector<std::uint32_t> index(g.order, kNone);
  for (std::uint32_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  FiniteGroup out;
  out.order = static_cast<std::uint32_t>(elems.size());
  out.identity = index[g.identity];
  out.table.resize(out.order * out.order);
  for (std::uint32_t a = 0; a < out.order; ++a) {
    for (std::uint32_t b = 0; b < out.order; ++b) out.table[a * out.order + b] = index[g.mul(elems[a], elems[b])];
  }
  return out;
}

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[uniform(rng, 0, static_cast<std::uint32_t>(v.size() - 1))];
}

bool meets_left_trivially(const std::vector<std::uint32_t>& s, const FiniteGroup& left, const FiniteGroup& right) {
  return std::none_of(s.begin(), s.end(), [&](std::uint32_t e) {
    return e % right.order == right.identity && e / right.order != left.identity;
  });
}

std::vector<std::vector<std::uint32_t>> stabilizers(const Groupoid& source, const Groupoid& target, Obj eta0,
                                                    Obj gamma0, bool admissible) {
  const VertexGroup vg = vertex_group(target, gamma0);
  const VertexGroup vh = vertex_group(source, eta0);
  auto all = subgroups(direct_product(vg.group, vh.group));
  if (admissible) {
    std::erase_if(all, [&](const auto& s) { return !meets_left_trivially(s, vg.group, vh.group); });
  }
  return all;
}

}  // namespace

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint32_t uniform(Rng& rng, std::uint32_t lo, std::uint32_t hi) {
  return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
}

FiniteGroup random_group(Rng& rng, std::uint32_t max_order) {
  std::vector<FiniteGroup> options;
  for (std::uint32_t n = 1; n <= std::min<std::uint32_t>(max_order, 6); ++n) options.push_back(cyclic_group(n));
  if (max_order >= 4) options.push_back(klein_group());
  if (max_order >= 6) options.push_back(symmetric_group(3));
  return pick(rng, options);
}

GroupoidPtr random_groupoid(Rng& rng, std::uint32_t max_objects, std::uint32_t max_morphisms) {
  std::uint32_t objects = max_objects;
  std::uint32_t morphisms = max_morphisms;
  GroupoidPtr out;
  do {
    const auto most = std::min(objects, static_cast<std::uint32_t>(std::sqrt(double(morphisms))));
    const std::uint32_t k = uniform(rng, 1, std::max<std::uint32_t>(most, 1));
    const FiniteGroup grp = random_group(rng, std::max<std::uint32_t>(morphisms / (k * k), 1));
    GroupoidPtr part = share(connected_groupoid(grp, k));
    out = out ? disjoint_union(out, part).sum : part;
    objects -= std::min(objects, k);
    morphisms -= std::min<std::uint32_t>(morphisms, k * k * grp.order);
  } while (objects > 0 && morphisms > 0 && uniform(rng, 0, 1) == 1);
  return out;
}

Relabeling relabel_objects(const GroupoidPtr& g, const std::vector<Obj>& perm) {
  const Groupoid& a = *g;
  GroupoidBuilder b(a.num_objects());
  b.reserve(a.num_morphisms());
  for (Mor m = 0; m < a.num_morphisms(); ++m) {
    b.add_morphism(perm[a.source(m)], perm[a.target(m)], a.has_names() ? a.name(m) : std::string{});
  }
  for (Obj o = 0; o < a.num_objects(); ++o) b.set_identity(perm[o], a.identity(o));
  GroupoidPtr r = share(std::move(b).build([&](Mor second, Mor first) { return a.compose(second, first); }));
  std::vector<Mor> same(a.num_morphisms());
  std::iota(same.begin(), same.end(), 0u);
  std::vector<Obj> back(perm.size());
  for (Obj o = 0; o < perm.size(); ++o) back[perm[o]] = o;
  return {r, Functor{g, r, perm, same}, Functor{r, g, std::move(back), same}};
}

std::vector<std::uint32_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

GSet random_gset(Rng& rng, const GroupoidPtr& base, std::uint32_t max_orbits, bool free_only) {
  const Groupoid& g = *base;
  const std::size_t n = g.num_objects();
  RawGSet raw{base, Variance::Covariant, std::vector<std::uint32_t>(n, 0),
              std::vector<std::vector<std::uint32_t>>(g.num_morphisms())};
  if (n == 0) return validate_gset(std::move(raw));
  const std::uint32_t orbits = uniform(rng, 1, std::max<std::uint32_t>(max_orbits, 1));
  for (std::uint32_t i = 0; i < orbits; ++i) {
    const Obj gamma0 = uniform(rng, 0, static_cast<std::uint32_t>(n - 1));
    const VertexGroup vg = vertex_group(g, gamma0);
    const auto all = subgroups(vg.group);
    const std::vector<std::uint32_t> k = free_only ? std::vector<std::uint32_t>{vg.group.identity} : pick(rng, all);
    // class of a ∈ G(γ0, γ) under a ~ a∘κ, numbered from the current fiber size
    std::vector<std::vector<std::uint32_t>> cls(n);
    for (Obj gamma = 0; gamma < n; ++gamma) {
      const auto as = g.hom(gamma0, gamma);
      cls[gamma].assign(as.size(), kNone);
      for (std::uint32_t j = 0; j < as.size(); ++j) {
        if (cls[gamma][j] != kNone) continue;
        for (std::uint32_t e : k) cls[gamma][g.hom_position(g.compose(as[j], vg.elements[e]))] = raw.fibers[gamma];
        ++raw.fibers[gamma];
      }
    }
    for (Mor m = 0; m < g.num_morphisms(); ++m) {
      const auto as = g.hom(gamma0, g.source(m));
      std::vector<std::uint32_t> done;
      for (std::uint32_t j = 0; j < as.size(); ++j) {
        const std::uint32_t c = cls[g.source(m)][j];
        if (std::find(done.begin(), done.end(), c) != done.end()) continue;
        done.push_back(c);
        auto& table = raw.action[m];
        if (table.size() <= c) table.resize(c + 1, kNone);
        table[c] = cls[g.target(m)][g.hom_position(g.compose(m, as[j]))];
      }
    }
  }
  return validate_gset(std::move(raw));
}

std::vector<OrbitSpec> random_orbit_specs(Rng& rng, const Groupoid& source, const Groupoid& target,
                                          std::uint32_t max_orbits, bool admissible) {
  std::vector<OrbitSpec> specs;
  if (source.num_objects() == 0 || target.num_objects() == 0) return specs;
  const std::uint32_t count = uniform(rng, 0, 15) == 0 ? 0 : uniform(rng, 1, std::max<std::uint32_t>(max_orbits, 1));
  for (std::uint32_t i = 0; i < count; ++i) {
    OrbitSpec s;
    s.eta0 = uniform(rng, 0, static_cast<std::uint32_t>(source.num_objects() - 1));
    s.gamma0 = uniform(rng, 0, static_cast<std::uint32_t>(target.num_objects() - 1));
    s.subgroup = pick(rng, stabilizers(source, target, s.eta0, s.gamma0, admissible));
    specs.push_back(std::move(s));
  }
  return specs;
}

BiSet build_biset(const GroupoidPtr& source, const GroupoidPtr& target, const std::vector<OrbitSpec>& specs) {
  BiSet out = empty_biset(source, target);
  for (const auto& s : specs) out = tensor(out, transitive_biset(source, target, s.eta0, s.gamma0, s.subgroup));
  return out;
}

std::optional<std::vector<OrbitSpec>> near_miss(Rng& rng, const Groupoid& source, const Groupoid& target,
                                                std::vector<OrbitSpec> specs, bool admissible) {
  for (std::uint32_t i : random_permutation(rng, specs.size())) {
    auto& s = specs[i];
    auto options = stabilizers(source, target, s.eta0, s.gamma0, admissible);
    std::erase_if(options, [&](const auto& o) { return o.size() != s.subgroup.size() || o == s.subgroup; });
    if (options.empty()) continue;
    s.subgroup = pick(rng, options);
    return specs;
  }
  return std::nullopt;
}

BiSet random_biset(Rng& rng, const GroupoidPtr& source, const GroupoidPtr& target, std::uint32_t max_orbits,
                   bool admissible) {
  const BiSet x = build_biset(source, target, random_orbit_specs(rng, *source, *target, max_orbits, admissible));
  return twist(rng, x).target;
}

BiSetIso twist(Rng& rng, const BiSet& x) {
  const Groupoid& h = *x.source();
  const Groupoid& g = *x.target();
  const std::size_t nh = h.num_objects();
  const std::size_t ng = g.num_objects();
  std::vector<std::vector<std::uint32_t>> perm(nh * ng);
  for (std::size_t f = 0; f < perm.size(); ++f) perm[f] = random_permutation(rng, x.fibers()[f]);
  RawBiSet raw = x.raw();
  for (Mor m = 0; m < g.num_morphisms(); ++m) {
    for (Obj eta = 0; eta < nh; ++eta) {
      const auto& from = perm[eta * ng + g.source(m)];
      const auto& to = perm[eta * ng + g.target(m)];
      const auto& old = x.raw().lact[m * nh + eta];
      for (std::uint32_t i = 0; i < old.size(); ++i) raw.lact[m * nh + eta][from[i]] = to[old[i]];
    }
  }
  for (Mor m = 0; m < h.num_morphisms(); ++m) {
    for (Obj gamma = 0; gamma < ng; ++gamma) {
      const auto& from = perm[h.target(m) * ng + gamma];
      const auto& to = perm[h.source(m) * ng + gamma];
      const auto& old = x.raw().ract[m * ng + gamma];
      for (std::uint32_t i = 0; i < old.size(); ++i) raw.ract[m * ng + gamma][from[i]] = to[old[i]];
    }
  }
  BiSet y = BiSet::trusted(std::move(raw), x.admissible());
  BiSetMap map{std::vector<std::uint32_t>(x.size())};
  for (std::uint32_t e = 0; e < x.size(); ++e) {
    const BiElement loc = x.locate(e);
    map.images[e] = y.global(loc.eta, loc.gamma, perm[x.fiber_index(loc.eta, loc.gamma)][loc.index]);
  }
  return {x, std::move(y), std::move(map)};
}

std::optional<Functor> random_functor(Rng& rng, const GroupoidPtr& k, const GroupoidPtr& g, bool faithful) {
  const Groupoid& a = *k;
  const Groupoid& b = *g;
  Functor f{k, g, std::vector<Obj>(a.num_objects()), std::vector<Mor>(a.num_morphisms())};
  if (a.num_objects() == 0) return f;
  if (b.num_objects() == 0) return std::nullopt;
  const auto bcomp = components(b);
  for (const auto& comp : components(a).classes()) {
    const Obj k0 = comp.front();
    const VertexGroup vk = vertex_group(a, k0);
    Obj g0 = kNone;
    std::vector<std::uint32_t> psi;
    for (Obj cand : random_permutation(rng, b.num_objects())) {
      const VertexGroup vg = vertex_group(b, cand);
      auto homs = homomorphisms(vk.group, vg.group);
      if (faithful) {
        std::erase_if(homs, [](auto h) {
          std::sort(h.begin(), h.end());
          return std::adjacent_find(h.begin(), h.end()) != h.end();
        });
      }
      if (homs.empty()) continue;
      g0 = cand;
      psi = pick(rng, homs);
      break;
    }
    if (g0 == kNone) return std::nullopt;
    const VertexGroup vg = vertex_group(b, g0);
    std::vector<Obj> reach;
    for (Obj o = 0; o < b.num_objects(); ++o) {
      if (bcomp.label[o] == bcomp.label[g0]) reach.push_back(o);
    }
    std::vector<Mor> e(a.num_objects(), kNone), d(a.num_objects(), kNone);
    for (Obj o : comp) {
      e[o] = a.hom(k0, o).front();
      const Obj to = pick(rng, reach);
      const auto ds = b.hom(g0, to);
      d[o] = ds[uniform(rng, 0, static_cast<std::uint32_t>(ds.size() - 1))];
      f.objects[o] = to;
    }
    for (Obj o : comp) {
      for (Mor m : a.out(o)) {
        const Obj t = a.target(m);
        const Mor loop = a.compose(a.inverse(e[t]), a.compose(m, e[o]));
        const Mor image = vg.elements[psi[vk.index_of[loop]]];
        f.morphisms[m] = b.compose(d[t], b.compose(image, b.inverse(d[o])));
      }
    }
  }
  check_functor(f);
  return f;
}

Span random_span(Rng& rng, const GroupoidPtr& source, const GroupoidPtr& target, std::uint32_t max_components) {
  const Groupoid& h = *source;
  if (h.num_objects() == 0 || target->num_objects() == 0) {
    throw Error(ErrorKind::Malformed, "random_span needs nonempty bases");
  }
  GroupoidPtr apex;
  const std::uint32_t count = uniform(rng, 1, std::max<std::uint32_t>(max_components, 1));
  for (std::uint32_t i = 0; i < count; ++i) {
    const Obj eta0 = uniform(rng, 0, static_cast<std::uint32_t>(h.num_objects() - 1));
    const VertexGroup vh = vertex_group(h, eta0);
    const FiniteGroup l = as_group(vh.group, pick(rng, subgroups(vh.group)));
    GroupoidPtr part = share(connected_groupoid(l, uniform(rng, 1, 2)));
    apex = apex ? disjoint_union(apex, part).sum : part;
  }
  auto q = random_functor(rng, apex, source, true);
  auto p = random_functor(rng, apex, target, false);
  return make_span(std::move(*q), std::move(*p));
}

Functor random_cover(Rng& rng, const GroupoidPtr& base, std::uint32_t max_orbits) {
  const TranslationGroupoid tg = translation_groupoid(random_gset(rng, base, max_orbits, false));
  const Relabeling r = relabel_objects(tg.groupoid, random_permutation(rng, tg.groupoid->num_objects()));
  return compose_functors(tg.projection, r.from);
}

}  // namespace gpd
