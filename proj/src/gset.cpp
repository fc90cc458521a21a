#include "gpd/gset.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "gpd/error.hpp"
#include "gpd/union_find.hpp"

namespace gpd {

GSet GSet::trusted(RawGSet raw) {
  GSet t;
  t.data_ = std::move(raw);
  t.offset_.resize(t.data_.fibers.size() + 1, 0);
  for (Obj o = 0; o < t.data_.fibers.size(); ++o) {
    t.offset_[o + 1] = t.offset_[o] + t.data_.fibers[o];
  }
  t.owner_.reserve(t.offset_.back());
  for (Obj o = 0; o < t.data_.fibers.size(); ++o) {
    t.owner_.insert(t.owner_.end(), t.data_.fibers[o], o);
  }
  return t;
}

GSet GSet::covariant_view(GroupoidPtr opposite_base) const {
  RawGSet raw = data_;
  raw.base = std::move(opposite_base);
  raw.variance = data_.variance == Variance::Covariant ? Variance::Contravariant
                                                       : Variance::Covariant;
  return trusted(std::move(raw));
}

GSet validate_gset(RawGSet raw) {
  if (!raw.base) throw Error(ErrorKind::Malformed, "G-set without base groupoid");
  const Groupoid& g = *raw.base;
  if (raw.fibers.size() != g.num_objects() || raw.action.size() != g.num_morphisms()) {
    throw Error(ErrorKind::NotFunctorial, "fiber or action table has the wrong length");
  }
  GSet t = GSet::trusted(std::move(raw));
  for (Mor f = 0; f < g.num_morphisms(); ++f) {
    const auto& a = t.action(f);
    const std::uint32_t from = t.fiber_size(t.domain(f));
    const std::uint32_t to = t.fiber_size(t.codomain(f));
    if (a.size() != from || from != to) {
      throw Error(ErrorKind::NotFunctorial,
                  "action of morphism " + std::to_string(f) + " is not a bijection of fibers");
    }
    std::vector<bool> hit(to, false);
    for (auto y : a) {
      if (y >= to || hit[y]) {
        throw Error(ErrorKind::NotFunctorial,
                    "action of morphism " + std::to_string(f) + " is not a bijection");
      }
      hit[y] = true;
    }
  }
  for (Obj o = 0; o < g.num_objects(); ++o) {
    const auto& a = t.action(g.identity(o));
    for (std::uint32_t x = 0; x < a.size(); ++x) {
      if (a[x] != x) {
        throw Error(ErrorKind::NotFunctorial,
                    "identity of object " + std::to_string(o) + " acts nontrivially");
      }
    }
  }
  const bool covariant = t.variance() == Variance::Covariant;
  for (Mor f = 0; f < g.num_morphisms(); ++f) {
    for (Mor h : g.out(g.target(f))) {
      const auto& composite = t.action(g.compose(h, f));
      const Mor first = covariant ? f : h;
      const Mor second = covariant ? h : f;
      for (std::uint32_t x = 0; x < composite.size(); ++x) {
        if (composite[x] != t.act(second, t.act(first, x))) {
          throw Error(ErrorKind::NotFunctorial, "action of " + std::to_string(h) + "∘" +
                                                    std::to_string(f) +
                                                    " differs from the composite action");
        }
      }
    }
  }
  return t;
}

void check_gset_map(const GSet& source, const GSet& target, const GSetMap& map) {
  if (!same_groupoid(source.base(), target.base()) || source.variance() != target.variance()) {
    throw Error(ErrorKind::BaseMismatch, "G-set map between different bases");
  }
  if (map.images.size() != source.size()) {
    throw Error(ErrorKind::NotNatural, "map is not defined on every element");
  }
  for (std::uint32_t x = 0; x < source.size(); ++x) {
    if (map.images[x] >= target.size() ||
        target.locate(map.images[x]).object != source.locate(x).object) {
      throw Error(ErrorKind::NotNatural, "element " + std::to_string(x) + " leaves its fiber");
    }
  }
  const Groupoid& g = *source.base();
  for (Mor f = 0; f < g.num_morphisms(); ++f) {
    const Obj d = source.domain(f);
    const Obj c = source.codomain(f);
    for (std::uint32_t x = 0; x < source.fiber_size(d); ++x) {
      const std::uint32_t lhs = map.images[source.global(c, source.act(f, x))];
      const std::uint32_t rhs =
          target.global(c, target.act(f, target.locate(map.images[source.global(d, x)]).index));
      if (lhs != rhs) {
        throw Error(ErrorKind::NotNatural, "square fails at morphism " + std::to_string(f));
      }
    }
  }
}

bool is_bijective(const GSetMap& map, const GSet& target) {
  if (map.images.size() != target.size()) return false;
  std::vector<bool> hit(target.size(), false);
  for (auto y : map.images) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

Orbits colimit(const GSet& t) {
  UnionFind uf(t.size());
  const Groupoid& g = *t.base();
  for (Mor f = 0; f < g.num_morphisms(); ++f) {
    const Obj d = t.domain(f);
    const Obj c = t.codomain(f);
    for (std::uint32_t x = 0; x < t.fiber_size(d); ++x) {
      uf.unite(t.global(d, x), t.global(c, t.act(f, x)));
    }
  }
  Orbits o;
  std::size_t count = 0;
  o.class_of = uf.labels(count);
  o.representatives.reserve(count);
  for (std::uint32_t x = 0; x < t.size(); ++x) {
    if (o.class_of[x] == o.representatives.size()) o.representatives.push_back(t.locate(x));
  }
  return o;
}

bool is_finite(const GSet& t) { return colimit(t).count() <= t.size(); }

FreenessVerdict is_free(const GSet& t) {
  const Groupoid& g = *t.base();
  const bool covariant = t.variance() == Variance::Covariant;
  std::vector<Mor> seen;
  for (Obj other = 0; other < g.num_objects(); ++other) {
    seen.assign(t.fiber_size(other), kNone);
    for (Obj object = 0; object < g.num_objects(); ++object) {
      const auto arrows = covariant ? g.hom(object, other) : g.hom(other, object);
      if (arrows.empty()) continue;
      for (std::uint32_t x = 0; x < t.fiber_size(object); ++x) {
        for (Mor f : arrows) {
          auto& slot = seen[t.act(f, x)];
          if (slot != kNone) {
            return {false, FreenessWitness{other, object, x, slot, f}};
          }
          slot = f;
        }
        for (Mor f : arrows) seen[t.act(f, x)] = kNone;
      }
    }
  }
  return {};
}

bool shear_is_injective(const GSet& t) {
  const Groupoid& g = *t.base();
  std::set<std::pair<std::uint32_t, std::uint32_t>> image;
  for (Mor f = 0; f < g.num_morphisms(); ++f) {
    const Obj d = t.domain(f);
    const Obj c = t.codomain(f);
    for (std::uint32_t x = 0; x < t.fiber_size(d); ++x) {
      if (!image.emplace(t.global(d, x), t.global(c, t.act(f, x))).second) return false;
    }
  }
  return true;
}

GSet corepresentable(const GroupoidPtr& gp, Obj gamma0) {
  const Groupoid& g = *gp;
  RawGSet raw{gp, Variance::Covariant, std::vector<std::uint32_t>(g.num_objects()),
              std::vector<std::vector<std::uint32_t>>(g.num_morphisms())};
  for (Obj o = 0; o < g.num_objects(); ++o) {
    raw.fibers[o] = static_cast<std::uint32_t>(g.hom(gamma0, o).size());
  }
  for (Mor f = 0; f < g.num_morphisms(); ++f) {
    for (Mor x : g.hom(gamma0, g.source(f))) {
      raw.action[f].push_back(g.hom_position(g.compose(f, x)));
    }
  }
  return GSet::trusted(std::move(raw));
}

GSet coproduct(const GSet& a, const GSet& b) {
  if (!same_groupoid(a.base(), b.base()) || a.variance() != b.variance()) {
    throw Error(ErrorKind::BaseMismatch, "coproduct of G-sets over different bases");
  }
  RawGSet raw = a.raw();
  const Groupoid& g = *a.base();
  for (Obj o = 0; o < g.num_objects(); ++o) raw.fibers[o] += b.fiber_size(o);
  for (Mor f = 0; f < g.num_morphisms(); ++f) {
    const std::uint32_t shift = a.fiber_size(a.codomain(f));
    for (auto y : b.action(f)) raw.action[f].push_back(y + shift);
  }
  return GSet::trusted(std::move(raw));
}

FreeDecomposition decompose_free(const GSet& t) {
  if (t.variance() != Variance::Covariant) {
    throw Error(ErrorKind::Malformed, "decompose_free expects a left G-set");
  }
  if (auto v = is_free(t); !v) {
    const auto& w = *v.witness;
    throw Error(ErrorKind::NotFree, "morphisms " + std::to_string(w.first) + " and " +
                                        std::to_string(w.second) + " agree on element " +
                                        std::to_string(w.element) + " over object " +
                                        std::to_string(w.object));
  }
  const Groupoid& g = *t.base();
  FreeDecomposition d;
  d.generators = colimit(t).representatives;
  d.coproduct = GSet::trusted(RawGSet{t.base(), Variance::Covariant,
                                      std::vector<std::uint32_t>(g.num_objects(), 0),
                                      std::vector<std::vector<std::uint32_t>>(g.num_morphisms())});
  for (const auto& gen : d.generators) d.coproduct = coproduct(d.coproduct, corepresentable(t.base(), gen.object));

  d.iso.images.resize(d.coproduct.size());
  std::vector<std::uint32_t> filled(g.num_objects(), 0);
  for (const auto& gen : d.generators) {
    for (Obj o = 0; o < g.num_objects(); ++o) {
      for (Mor f : g.hom(gen.object, o)) {
        d.iso.images[d.coproduct.global(o, filled[o]++)] = t.global(o, t.act(f, gen.index));
      }
    }
  }
  check_gset_map(d.coproduct, t, d.iso);
  if (!is_bijective(d.iso, t)) {
    throw Error(ErrorKind::IllDefined, "free decomposition is not bijective");
  }
  return d;
}

Coequalizer coequalizer(const GSet& x, const GSet& y, const GSetMap& u, const GSetMap& v) {
  check_gset_map(x, y, u);
  check_gset_map(x, y, v);
  const Groupoid& g = *y.base();
  UnionFind uf(y.size());
  for (std::uint32_t e = 0; e < x.size(); ++e) uf.unite(u.images[e], v.images[e]);
  std::size_t count = 0;
  const auto label = uf.labels(count);

  // Classes never straddle fibers, so numbering them globally in element
  // order also numbers them fiber by fiber.
  RawGSet raw{y.base(), y.variance(), std::vector<std::uint32_t>(g.num_objects(), 0),
              std::vector<std::vector<std::uint32_t>>(g.num_morphisms())};
  std::vector<std::uint32_t> first_class(g.num_objects(), 0);
  std::vector<std::uint32_t> rep;
  for (Obj o = 0; o < g.num_objects(); ++o) {
    first_class[o] = static_cast<std::uint32_t>(rep.size());
    for (std::uint32_t e = 0; e < y.fiber_size(o); ++e) {
      const std::uint32_t gl = y.global(o, e);
      if (label[gl] == rep.size()) rep.push_back(gl);
    }
    raw.fibers[o] = static_cast<std::uint32_t>(rep.size()) - first_class[o];
  }
  Coequalizer q;
  q.projection.images.resize(y.size());
  for (std::uint32_t e = 0; e < y.size(); ++e) q.projection.images[e] = label[e];
  for (Mor f = 0; f < g.num_morphisms(); ++f) {
    const Obj d = y.domain(f);
    const Obj c = y.codomain(f);
    auto& a = raw.action[f];
    a.assign(raw.fibers[d], kNone);
    for (std::uint32_t e = 0; e < y.fiber_size(d); ++e) {
      const std::uint32_t cls = label[y.global(d, e)] - first_class[d];
      const std::uint32_t img = label[y.global(c, y.act(f, e))] - first_class[c];
#if GPD_CHECKED
      if (a[cls] != kNone && a[cls] != img) {
        throw Error(ErrorKind::IllDefined, "coequalizer action is not well defined");
      }
#endif
      a[cls] = img;
    }
  }
  q.quotient = GSet::trusted(std::move(raw));
  return q;
}

TranslationGroupoid translation_groupoid(const GSet& t) {
  if (t.variance() != Variance::Covariant) {
    throw Error(ErrorKind::Malformed, "translation groupoid expects a left G-set");
  }
  const Groupoid& g = *t.base();
  const auto n = static_cast<std::uint32_t>(t.size());
  std::vector<std::uint32_t> base(n + 1, 0);
  for (std::uint32_t x = 0; x < n; ++x) {
    base[x + 1] = base[x] + static_cast<std::uint32_t>(g.out(t.locate(x).object).size());
  }
  GroupoidBuilder b(n);
  b.reserve(base.back());
  std::vector<Mor> label(base.back());
  for (std::uint32_t x = 0; x < n; ++x) {
    const auto [o, local] = t.locate(x);
    for (Mor f : g.out(o)) {
      const Mor id = b.add_morphism(x, t.global(g.target(f), t.act(f, local)));
      label[id] = f;
    }
    b.set_identity(x, base[x] + g.out_position(g.identity(o)));
  }
  std::vector<Obj> src_of(base.back());
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t i = base[x]; i < base[x + 1]; ++i) src_of[i] = x;
  }
  auto groupoid = share(std::move(b).build([&](Mor second, Mor first) {
    return base[src_of[first]] + g.out_position(g.compose(label[second], label[first]));
  }));
  std::vector<Obj> on_objects(n);
  for (std::uint32_t x = 0; x < n; ++x) on_objects[x] = t.locate(x).object;
  base.pop_back();
  return {groupoid, Functor{groupoid, t.base(), std::move(on_objects), std::move(label)}, std::move(base)};
}

CoverVerdict is_covering_map(const Functor& p) {
  const Groupoid& h = *p.source;
  const Groupoid& g = *p.target;
  std::vector<std::size_t> count;
  for (Obj e = 0; e < h.num_objects(); ++e) {
    const auto targets = g.out(p.obj(e));
    count.assign(targets.size(), 0);
    for (Mor f : h.out(e)) ++count[g.out_position(p.mor(f))];
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (count[i] != 1) return {false, e, targets[i], count[i]};
    }
  }
  return {};
}

namespace {

struct CoverFibers {
  std::vector<std::uint32_t> local;  // per H-object: index inside its fiber
  std::vector<std::uint32_t> sizes;  // per G-object
};

CoverFibers cover_fibers(const Functor& p) {
  CoverFibers c{std::vector<std::uint32_t>(p.source->num_objects()),
                std::vector<std::uint32_t>(p.target->num_objects(), 0)};
  for (Obj e = 0; e < p.source->num_objects(); ++e) c.local[e] = c.sizes[p.obj(e)]++;
  return c;
}

}  // namespace

GSet gset_from_cover(const Functor& p) {
  if (auto v = is_covering_map(p); !v) {
    throw Error(ErrorKind::NotACover, "morphism " + std::to_string(v.morphism) + " has " +
                                          std::to_string(v.lifts) + " lifts at object " +
                                          std::to_string(v.object));
  }
  const Groupoid& h = *p.source;
  const Groupoid& g = *p.target;
  const CoverFibers c = cover_fibers(p);
  RawGSet raw{p.target, Variance::Covariant, c.sizes,
              std::vector<std::vector<std::uint32_t>>(g.num_morphisms())};
  for (Mor f = 0; f < g.num_morphisms(); ++f) raw.action[f].resize(c.sizes[g.source(f)]);
  for (Mor f = 0; f < h.num_morphisms(); ++f) {
    raw.action[p.mor(f)][c.local[h.source(f)]] = c.local[h.target(f)];
  }
  return GSet::trusted(std::move(raw));
}

Functor cover_comparison(const Functor& p) {
  const GSet x = gset_from_cover(p);
  const TranslationGroupoid tg = translation_groupoid(x);
  const Groupoid& h = *p.source;
  const Groupoid& g = *p.target;
  const CoverFibers c = cover_fibers(p);
  Functor f{p.source, tg.groupoid, std::vector<Obj>(h.num_objects()),
            std::vector<Mor>(h.num_morphisms())};
  for (Obj e = 0; e < h.num_objects(); ++e) f.objects[e] = x.global(p.obj(e), c.local[e]);
  for (Mor m = 0; m < h.num_morphisms(); ++m) {
    const Obj from = f.objects[h.source(m)];
    f.morphisms[m] = tg.arrow(from, g.out_position(p.mor(m)));
  }
  return f;
}

void throw_ill_defined() {
  throw Error(ErrorKind::IllDefined, "induced map on coend classes is not well defined");
}

Coend coend(const GSet& right, const GSet& left) {
  if (!same_groupoid(right.base(), left.base())) {
    throw Error(ErrorKind::BaseMismatch, "coend of G-sets over different groupoids");
  }
  if (right.variance() != Variance::Contravariant || left.variance() != Variance::Covariant) {
    throw Error(ErrorKind::Malformed, "coend expects a right and a left G-set");
  }
  const Groupoid& g = *left.base();
  const std::size_t n = g.num_objects();
  Coend c;
  c.block.resize(n + 1, 0);
  c.width.resize(n);
  for (Obj o = 0; o < n; ++o) {
    c.width[o] = left.fiber_size(o);
    c.block[o + 1] = c.block[o] + right.fiber_size(o) * left.fiber_size(o);
  }
  UnionFind uf(c.block[n]);
  for (Mor f = 0; f < g.num_morphisms(); ++f) {
    const Obj from = g.source(f);
    const Obj to = g.target(f);
    for (std::uint32_t s = 0; s < right.fiber_size(to); ++s) {
      const std::uint32_t sg = right.act(f, s);
      for (std::uint32_t t = 0; t < left.fiber_size(from); ++t) {
        uf.unite(c.block[from] + sg * c.width[from] + t,
                 c.block[to] + s * c.width[to] + left.act(f, t));
      }
    }
  }
  std::size_t count = 0;
  c.class_of = uf.labels(count);
  c.reps.reserve(count);
  for (Obj o = 0; o < n; ++o) {
    for (std::uint32_t s = 0; s < right.fiber_size(o); ++s) {
      for (std::uint32_t t = 0; t < c.width[o]; ++t) {
        if (c.class_of[c.block[o] + s * c.width[o] + t] == c.reps.size()) {
          c.reps.push_back({o, s, t});
        }
      }
    }
  }
  return c;
}

}  // namespace gpd
