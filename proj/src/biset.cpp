#include "gpd/biset.hpp"

#include <string>
#include <utility>

#include "gpd/error.hpp"
#include "gpd/union_find.hpp"

namespace gpd {

BiSet BiSet::trusted(RawBiSet raw, bool admissible) {
  BiSet x;
  x.data_ = std::move(raw);
  x.admissible_ = admissible;
  const std::size_t n = x.data_.fibers.size();
  x.offset_.assign(n + 1, 0);
  for (std::size_t f = 0; f < n; ++f) x.offset_[f + 1] = x.offset_[f] + x.data_.fibers[f];
  x.owner_.reserve(x.offset_.back());
  for (std::size_t f = 0; f < n; ++f) {
    x.owner_.insert(x.owner_.end(), x.data_.fibers[f], static_cast<std::uint32_t>(f));
  }
  return x;
}

BiElement BiSet::locate(std::uint32_t global) const {
  const std::uint32_t f = owner_[global];
  const auto n = static_cast<std::uint32_t>(target_objects());
  return {f / n, f % n, global - offset_[f]};
}

std::uint32_t BiSet::lact_global(Mor g, std::uint32_t x) const {
  const BiElement e = locate(x);
  return global(e.eta, data_.target->target(g), lact(g, e.eta, e.index));
}

std::uint32_t BiSet::ract_global(Mor h, std::uint32_t x) const {
  const BiElement e = locate(x);
  return global(data_.source->source(h), e.gamma, ract(h, e.gamma, e.index));
}

GSet BiSet::column(Obj eta) const {
  const Groupoid& g = *data_.target;
  RawGSet raw{data_.target, Variance::Covariant, std::vector<std::uint32_t>(g.num_objects()),
              std::vector<std::vector<std::uint32_t>>(g.num_morphisms())};
  for (Obj o = 0; o < g.num_objects(); ++o) raw.fibers[o] = fiber_size(eta, o);
  for (Mor m = 0; m < g.num_morphisms(); ++m) raw.action[m] = data_.lact[m * source_objects() + eta];
  return GSet::trusted(std::move(raw));
}

GSet BiSet::row(Obj gamma) const {
  const Groupoid& h = *data_.source;
  RawGSet raw{data_.source, Variance::Contravariant, std::vector<std::uint32_t>(h.num_objects()),
              std::vector<std::vector<std::uint32_t>>(h.num_morphisms())};
  for (Obj o = 0; o < h.num_objects(); ++o) raw.fibers[o] = fiber_size(o, gamma);
  for (Mor m = 0; m < h.num_morphisms(); ++m) raw.action[m] = data_.ract[m * target_objects() + gamma];
  return GSet::trusted(std::move(raw));
}

bool columns_free(const BiSet& x) {
  for (Obj eta = 0; eta < x.source_objects(); ++eta) {
    if (!is_free(x.column(eta))) return false;
  }
  return true;
}

BiSet validate_biset(RawBiSet raw, Admissibility policy) {
  if (!raw.source || !raw.target) throw Error(ErrorKind::Malformed, "bi-set without bases");
  const Groupoid& h = *raw.source;
  const Groupoid& g = *raw.target;
  const std::size_t nh = h.num_objects();
  const std::size_t ng = g.num_objects();
  if (raw.fibers.size() != nh * ng || raw.lact.size() != g.num_morphisms() * nh ||
      raw.ract.size() != h.num_morphisms() * ng) {
    throw Error(ErrorKind::NotBifunctorial, "fiber or action table has the wrong length");
  }
  BiSet x = BiSet::trusted(std::move(raw), false);
  try {
    for (Obj eta = 0; eta < nh; ++eta) validate_gset(x.column(eta).raw());
  } catch (const Error& e) {
    throw Error(ErrorKind::NotBifunctorial, std::string("left action: ") + e.what());
  }
  try {
    for (Obj gamma = 0; gamma < ng; ++gamma) validate_gset(x.row(gamma).raw());
  } catch (const Error& e) {
    throw Error(ErrorKind::NotBifunctorial, std::string("right action: ") + e.what());
  }
  for (Mor a = 0; a < g.num_morphisms(); ++a) {
    for (Mor b = 0; b < h.num_morphisms(); ++b) {
      const Obj from = g.source(a);
      const Obj to = g.target(a);
      for (std::uint32_t e = 0; e < x.fiber_size(h.target(b), from); ++e) {
        if (x.lact(a, h.source(b), x.ract(b, from, e)) != x.ract(b, to, x.lact(a, h.target(b), e))) {
          throw Error(ErrorKind::NotBifunctorial,
                      "actions of " + std::to_string(a) + " and " + std::to_string(b) +
                          " do not commute on element " + std::to_string(e));
        }
      }
    }
  }
  bool admissible = true;
  for (Obj eta = 0; eta < nh && admissible; ++eta) {
    const FreenessVerdict v = is_free(x.column(eta));
    if (v) continue;
    if (policy == Admissibility::Require) {
      const auto& w = *v.witness;
      throw Error(ErrorKind::NotAdmissible,
                  "column " + std::to_string(eta) + " is not free: morphisms " +
                      std::to_string(w.first) + " and " + std::to_string(w.second) +
                      " agree on element " + std::to_string(w.element) + " over object " +
                      std::to_string(w.object));
    }
    admissible = false;
  }
  return BiSet::trusted(RawBiSet(x.raw()), admissible);
}

bool same_bases(const BiSet& a, const BiSet& b) {
  return same_groupoid(a.source(), b.source()) && same_groupoid(a.target(), b.target());
}

bool operator==(const BiSet& a, const BiSet& b) {
  return a.raw().fibers == b.raw().fibers && a.raw().lact == b.raw().lact &&
         a.raw().ract == b.raw().ract && same_bases(a, b);
}

void check_biset_map(const BiSet& source, const BiSet& target, const BiSetMap& map) {
  if (!same_bases(source, target)) {
    throw Error(ErrorKind::BaseMismatch, "bi-set map between different bases");
  }
  if (map.images.size() != source.size()) {
    throw Error(ErrorKind::NotNatural, "map is not defined on every element");
  }
  for (std::uint32_t x = 0; x < source.size(); ++x) {
    const std::uint32_t y = map.images[x];
    if (y >= target.size()) throw Error(ErrorKind::NotNatural, "image out of range");
    const BiElement ex = source.locate(x);
    const BiElement ey = target.locate(y);
    if (ex.eta != ey.eta || ex.gamma != ey.gamma) {
      throw Error(ErrorKind::NotNatural, "element " + std::to_string(x) + " leaves its fiber");
    }
  }
  const Groupoid& g = *source.target();
  const Groupoid& h = *source.source();
  for (std::uint32_t x = 0; x < source.size(); ++x) {
    const BiElement e = source.locate(x);
    for (Mor a : g.out(e.gamma)) {
      if (map.images[source.lact_global(a, x)] != target.lact_global(a, map.images[x])) {
        throw Error(ErrorKind::NotNatural, "left action of " + std::to_string(a) +
                                               " is not respected at element " +
                                               std::to_string(x));
      }
    }
    for (Mor b : h.in(e.eta)) {
      if (map.images[source.ract_global(b, x)] != target.ract_global(b, map.images[x])) {
        throw Error(ErrorKind::NotNatural, "right action of " + std::to_string(b) +
                                               " is not respected at element " +
                                               std::to_string(x));
      }
    }
  }
}

void check_biset_iso(const BiSetIso& iso) {
  check_biset_map(iso.source, iso.target, iso.map);
  if (iso.source.size() != iso.target.size()) {
    throw Error(ErrorKind::NotNatural, "source and target have different sizes");
  }
  std::vector<bool> hit(iso.target.size(), false);
  for (auto y : iso.map.images) {
    if (hit[y]) throw Error(ErrorKind::NotNatural, "map is not injective");
    hit[y] = true;
  }
}

BiSetIso identity_iso(const BiSet& x) {
  BiSetMap m;
  m.images.resize(x.size());
  for (std::uint32_t i = 0; i < x.size(); ++i) m.images[i] = i;
  return {x, x, std::move(m)};
}

BiSetIso compose_isos(const BiSetIso& second, const BiSetIso& first) {
  if (!(first.target == second.source)) {
    throw Error(ErrorKind::NotComposable, "bi-set isomorphisms are not composable");
  }
  BiSetMap m;
  m.images.reserve(first.map.images.size());
  for (auto y : first.map.images) m.images.push_back(second.map.images[y]);
  return {first.source, second.target, std::move(m)};
}

BiSetIso inverse_iso(const BiSetIso& iso) {
  BiSetMap m;
  m.images.resize(iso.map.images.size());
  for (std::uint32_t x = 0; x < iso.map.images.size(); ++x) m.images[iso.map.images[x]] = x;
  return {iso.target, iso.source, std::move(m)};
}


BiSetComposite compose_with_classes(const BiSet& x, const BiSet& y) {
  if (!same_groupoid(x.source(), y.target())) {
    throw Error(ErrorKind::BaseMismatch, "middle groupoids of the composite differ");
  }
  if (!x.admissible() || !y.admissible()) {
    throw Error(ErrorKind::NotAdmissible, "composition needs admissible bi-sets");
  }
  const Groupoid& f = *x.target();
  const Groupoid& h = *y.source();
  const std::size_t nf = f.num_objects();
  const std::size_t nh = h.num_objects();

  std::vector<GSet> rows;
  rows.reserve(nf);
  for (Obj phi = 0; phi < nf; ++phi) rows.push_back(x.row(phi));
  std::vector<GSet> columns;
  columns.reserve(nh);
  for (Obj eta = 0; eta < nh; ++eta) columns.push_back(y.column(eta));

  BiSetComposite c;
  c.coends.reserve(nh * nf);
  RawBiSet raw{y.source(), x.target(), std::vector<std::uint32_t>(nh * nf),
               std::vector<std::vector<std::uint32_t>>(f.num_morphisms() * nh),
               std::vector<std::vector<std::uint32_t>>(h.num_morphisms() * nf)};
  for (Obj eta = 0; eta < nh; ++eta) {
    for (Obj phi = 0; phi < nf; ++phi) {
      c.coends.push_back(coend(rows[phi], columns[eta]));
      raw.fibers[eta * nf + phi] = static_cast<std::uint32_t>(c.coends.back().size());
    }
  }
  for (Mor m = 0; m < f.num_morphisms(); ++m) {
    for (Obj eta = 0; eta < nh; ++eta) {
      const Coend& to = c.coends[eta * nf + f.target(m)];
      raw.lact[m * nh + eta] = induced_on_classes(c.coends[eta * nf + f.source(m)],
                                       [&](Obj gamma, std::uint32_t s, std::uint32_t t) {
                                         return to.in(gamma, x.lact(m, gamma, s), t);
                                       });
    }
  }
  for (Mor m = 0; m < h.num_morphisms(); ++m) {
    for (Obj phi = 0; phi < nf; ++phi) {
      const Coend& to = c.coends[h.source(m) * nf + phi];
      raw.ract[m * nf + phi] = induced_on_classes(c.coends[h.target(m) * nf + phi],
                                       [&](Obj gamma, std::uint32_t s, std::uint32_t t) {
                                         return to.in(gamma, s, y.ract(m, gamma, t));
                                       });
    }
  }
  c.biset = BiSet::trusted(std::move(raw), true);
  if (!columns_free(c.biset)) {
    throw Error(ErrorKind::IllDefined, "composite of admissible bi-sets is not admissible");
  }
  return c;
}

BiSet s_of_functor(const Functor& q) {
  const Groupoid& h = *q.source;
  const Groupoid& g = *q.target;
  const std::size_t nh = h.num_objects();
  const std::size_t ng = g.num_objects();
  RawBiSet raw{q.source, q.target, std::vector<std::uint32_t>(nh * ng),
               std::vector<std::vector<std::uint32_t>>(g.num_morphisms() * nh),
               std::vector<std::vector<std::uint32_t>>(h.num_morphisms() * ng)};
  for (Obj eta = 0; eta < nh; ++eta) {
    for (Obj gamma = 0; gamma < ng; ++gamma) {
      raw.fibers[eta * ng + gamma] = static_cast<std::uint32_t>(g.hom(q.obj(eta), gamma).size());
    }
  }
  for (Mor m = 0; m < g.num_morphisms(); ++m) {
    for (Obj eta = 0; eta < nh; ++eta) {
      auto& a = raw.lact[m * nh + eta];
      for (Mor e : g.hom(q.obj(eta), g.source(m))) a.push_back(g.hom_position(g.compose(m, e)));
    }
  }
  for (Mor m = 0; m < h.num_morphisms(); ++m) {
    const Mor qm = q.mor(m);
    for (Obj gamma = 0; gamma < ng; ++gamma) {
      auto& a = raw.ract[m * ng + gamma];
      for (Mor e : g.hom(q.obj(h.target(m)), gamma)) a.push_back(g.hom_position(g.compose(e, qm)));
    }
  }
  return BiSet::trusted(std::move(raw), true);
}

BiSet identity_biset(const GroupoidPtr& g) { return s_of_functor(identity_functor(g)); }

BiSetIso s_of_nattrans(const NatTrans& alpha) {
  const BiSet from = s_of_functor(alpha.to);
  const BiSet to = s_of_functor(alpha.from);
  const Groupoid& g = *alpha.to.target;
  BiSetMap m;
  m.images.resize(from.size());
  for (std::uint32_t x = 0; x < from.size(); ++x) {
    const BiElement e = from.locate(x);
    const Mor arrow = g.hom(alpha.to.obj(e.eta), e.gamma)[e.index];
    m.images[x] = to.global(e.eta, e.gamma, g.hom_position(g.compose(arrow, alpha.components[e.eta])));
  }
  return {from, to, std::move(m)};
}

BiSetIso unitor_right(const BiSet& x) {
  const Groupoid& g = *x.source();
  const BiSetComposite c = compose_with_classes(x, identity_biset(x.source()));
  BiSetMap m;
  m.images.resize(c.biset.size());
  for (Obj eta = 0; eta < g.num_objects(); ++eta) {
    for (Obj phi = 0; phi < x.target_objects(); ++phi) {
      const Coend& k = c.at(eta, phi);
      for (std::uint32_t cls = 0; cls < k.size(); ++cls) {
        const auto& r = k.reps[cls];
        const Mor arrow = g.hom(eta, r.object)[r.left];
        m.images[c.biset.global(eta, phi, cls)] = x.global(eta, phi, x.ract(arrow, phi, r.right));
      }
    }
  }
  return {c.biset, x, std::move(m)};
}

BiSetIso unitor_left(const BiSet& y) {
  const Groupoid& g = *y.target();
  const BiSetComposite c = compose_with_classes(identity_biset(y.target()), y);
  BiSetMap m;
  m.images.resize(c.biset.size());
  for (Obj eta = 0; eta < y.source_objects(); ++eta) {
    for (Obj gamma = 0; gamma < g.num_objects(); ++gamma) {
      const Coend& k = c.at(eta, gamma);
      for (std::uint32_t cls = 0; cls < k.size(); ++cls) {
        const auto& r = k.reps[cls];
        const Mor arrow = g.hom(r.object, gamma)[r.right];
        m.images[c.biset.global(eta, gamma, cls)] =
            y.global(eta, gamma, y.lact(arrow, eta, r.left));
      }
    }
  }
  return {c.biset, y, std::move(m)};
}

BiSetIso associator(const BiSet& x, const BiSet& y, const BiSet& z) {
  const BiSetComposite yz = compose_with_classes(y, z);
  const BiSetComposite lhs = compose_with_classes(x, yz.biset);
  const BiSetComposite xy = compose_with_classes(x, y);
  const BiSetComposite rhs = compose_with_classes(xy.biset, z);
  BiSetMap m;
  m.images.resize(lhs.biset.size());
  for (Obj kappa = 0; kappa < z.source_objects(); ++kappa) {
    for (Obj phi = 0; phi < x.target_objects(); ++phi) {
      const Coend& outer = lhs.at(kappa, phi);
      for (std::uint32_t cls = 0; cls < outer.size(); ++cls) {
        const auto& r = outer.reps[cls];  // (γ, x, [y, z])
        const auto& inner = yz.at(kappa, r.object).reps[r.left];  // (η, y, z)
        const std::uint32_t u = xy.at(inner.object, phi).in(r.object, r.right, inner.right);
        m.images[lhs.biset.global(kappa, phi, cls)] =
            rhs.biset.global(kappa, phi, rhs.at(kappa, phi).in(inner.object, u, inner.left));
      }
    }
  }
  return {lhs.biset, rhs.biset, std::move(m)};
}

BiSetIso horizontal(const BiSetIso& f, const BiSetIso& g) {
  const BiSetComposite from = compose_with_classes(f.source, g.source);
  const BiSetComposite to = compose_with_classes(f.target, g.target);
  BiSetMap m;
  m.images.resize(from.biset.size());
  for (Obj eta = 0; eta < from.biset.source_objects(); ++eta) {
    for (Obj phi = 0; phi < from.biset.target_objects(); ++phi) {
      const Coend& k = from.at(eta, phi);
      for (std::uint32_t cls = 0; cls < k.size(); ++cls) {
        const auto& r = k.reps[cls];
        const std::uint32_t s = f.target.locate(f.map.images[f.source.global(r.object, phi, r.right)]).index;
        const std::uint32_t t = g.target.locate(g.map.images[g.source.global(eta, r.object, r.left)]).index;
        m.images[from.biset.global(eta, phi, cls)] =
            to.biset.global(eta, phi, to.at(eta, phi).in(r.object, s, t));
      }
    }
  }
  return {from.biset, to.biset, std::move(m)};
}

BiSet tensor(const BiSet& a, const BiSet& b) {
  if (!same_bases(a, b)) throw Error(ErrorKind::BaseMismatch, "tensor of bi-sets over different bases");
  const Groupoid& h = *a.source();
  const Groupoid& g = *a.target();
  const std::size_t nh = h.num_objects();
  const std::size_t ng = g.num_objects();
  RawBiSet raw = a.raw();
  for (std::size_t i = 0; i < raw.fibers.size(); ++i) raw.fibers[i] += b.raw().fibers[i];
  for (Mor m = 0; m < g.num_morphisms(); ++m) {
    for (Obj eta = 0; eta < nh; ++eta) {
      const std::uint32_t shift = a.fiber_size(eta, g.target(m));
      for (auto v : b.raw().lact[m * nh + eta]) raw.lact[m * nh + eta].push_back(v + shift);
    }
  }
  for (Mor m = 0; m < h.num_morphisms(); ++m) {
    for (Obj gamma = 0; gamma < ng; ++gamma) {
      const std::uint32_t shift = a.fiber_size(h.source(m), gamma);
      for (auto v : b.raw().ract[m * ng + gamma]) raw.ract[m * ng + gamma].push_back(v + shift);
    }
  }
  return BiSet::trusted(std::move(raw), a.admissible() && b.admissible());
}

BiSetIso tensor_swap(const BiSet& a, const BiSet& b) {
  BiSet ab = tensor(a, b);
  BiSet ba = tensor(b, a);
  BiSetMap m;
  m.images.resize(ab.size());
  for (std::uint32_t x = 0; x < ab.size(); ++x) {
    const BiElement e = ab.locate(x);
    const std::uint32_t na = a.fiber_size(e.eta, e.gamma);
    const std::uint32_t nb = b.fiber_size(e.eta, e.gamma);
    m.images[x] = ba.global(e.eta, e.gamma, e.index < na ? e.index + nb : e.index - na);
  }
  return {std::move(ab), std::move(ba), std::move(m)};
}

BiSet restrict_target(const BiSet& z, const Functor& f) {
  if (!same_groupoid(f.target, z.target())) {
    throw Error(ErrorKind::BaseMismatch, "restriction functor does not land in the target base");
  }
  const Groupoid& h = *z.source();
  const Groupoid& g0 = *f.source;
  const std::size_t nh = h.num_objects();
  const std::size_t n0 = g0.num_objects();
  RawBiSet raw{z.source(), f.source, std::vector<std::uint32_t>(nh * n0),
               std::vector<std::vector<std::uint32_t>>(g0.num_morphisms() * nh),
               std::vector<std::vector<std::uint32_t>>(h.num_morphisms() * n0)};
  for (Obj eta = 0; eta < nh; ++eta) {
    for (Obj gamma = 0; gamma < n0; ++gamma) raw.fibers[eta * n0 + gamma] = z.fiber_size(eta, f.obj(gamma));
  }
  for (Mor m = 0; m < g0.num_morphisms(); ++m) {
    for (Obj eta = 0; eta < nh; ++eta) raw.lact[m * nh + eta] = z.raw().lact[f.mor(m) * nh + eta];
  }
  for (Mor m = 0; m < h.num_morphisms(); ++m) {
    for (Obj gamma = 0; gamma < n0; ++gamma) {
      raw.ract[m * n0 + gamma] = z.raw().ract[m * z.target_objects() + f.obj(gamma)];
    }
  }
  BiSet r = BiSet::trusted(std::move(raw), false);
  return BiSet::trusted(RawBiSet(r.raw()), columns_free(r));
}

BiSet restrict_source(const BiSet& w, const Functor& f) {
  if (!same_groupoid(f.target, w.source())) {
    throw Error(ErrorKind::BaseMismatch, "restriction functor does not land in the source base");
  }
  const Groupoid& h0 = *f.source;
  const Groupoid& g = *w.target();
  const std::size_t n0 = h0.num_objects();
  const std::size_t ng = g.num_objects();
  RawBiSet raw{f.source, w.target(), std::vector<std::uint32_t>(n0 * ng),
               std::vector<std::vector<std::uint32_t>>(g.num_morphisms() * n0),
               std::vector<std::vector<std::uint32_t>>(h0.num_morphisms() * ng)};
  for (Obj eta = 0; eta < n0; ++eta) {
    for (Obj gamma = 0; gamma < ng; ++gamma) raw.fibers[eta * ng + gamma] = w.fiber_size(f.obj(eta), gamma);
  }
  for (Mor m = 0; m < g.num_morphisms(); ++m) {
    for (Obj eta = 0; eta < n0; ++eta) {
      raw.lact[m * n0 + eta] = w.raw().lact[m * w.source_objects() + f.obj(eta)];
    }
  }
  for (Mor m = 0; m < h0.num_morphisms(); ++m) {
    for (Obj gamma = 0; gamma < ng; ++gamma) raw.ract[m * ng + gamma] = w.raw().ract[f.mor(m) * ng + gamma];
  }
  return BiSet::trusted(std::move(raw), w.admissible());
}

BiOrbits biset_orbits(const BiSet& x) {
  UnionFind uf(x.size());
  const Groupoid& g = *x.target();
  const Groupoid& h = *x.source();
  for (std::uint32_t e = 0; e < x.size(); ++e) {
    const BiElement loc = x.locate(e);
    for (Mor a : g.out(loc.gamma)) uf.unite(e, x.lact_global(a, e));
    for (Mor b : h.in(loc.eta)) uf.unite(e, x.ract_global(b, e));
  }
  BiOrbits o;
  std::size_t count = 0;
  o.class_of = uf.labels(count);
  o.representatives.reserve(count);
  for (std::uint32_t e = 0; e < x.size(); ++e) {
    if (o.class_of[e] == o.representatives.size()) o.representatives.push_back(e);
  }
  return o;
}

std::vector<BiSet> orbit_summands(const BiSet& x) {
  const BiOrbits o = biset_orbits(x);
  const Groupoid& g = *x.target();
  const Groupoid& h = *x.source();
  const std::size_t nh = h.num_objects();
  const std::size_t ng = g.num_objects();
  std::vector<RawBiSet> raws(o.count(),
                             RawBiSet{x.source(), x.target(), std::vector<std::uint32_t>(nh * ng, 0),
                                      std::vector<std::vector<std::uint32_t>>(g.num_morphisms() * nh),
                                      std::vector<std::vector<std::uint32_t>>(h.num_morphisms() * ng)});
  std::vector<std::uint32_t> local(x.size());
  for (std::uint32_t e = 0; e < x.size(); ++e) {
    const BiElement loc = x.locate(e);
    local[e] = raws[o.class_of[e]].fibers[x.fiber_index(loc.eta, loc.gamma)]++;
  }
  for (Mor m = 0; m < g.num_morphisms(); ++m) {
    for (Obj eta = 0; eta < nh; ++eta) {
      for (std::uint32_t i = 0; i < x.fiber_size(eta, g.source(m)); ++i) {
        const std::uint32_t e = x.global(eta, g.source(m), i);
        raws[o.class_of[e]].lact[m * nh + eta].push_back(local[x.lact_global(m, e)]);
      }
    }
  }
  for (Mor m = 0; m < h.num_morphisms(); ++m) {
    for (Obj gamma = 0; gamma < ng; ++gamma) {
      for (std::uint32_t i = 0; i < x.fiber_size(h.target(m), gamma); ++i) {
        const std::uint32_t e = x.global(h.target(m), gamma, i);
        raws[o.class_of[e]].ract[m * ng + gamma].push_back(local[x.ract_global(m, e)]);
      }
    }
  }
  std::vector<BiSet> out;
  out.reserve(raws.size());
  for (auto& r : raws) out.push_back(BiSet::trusted(std::move(r), x.admissible()));
  return out;
}

namespace {

// Extends x0 ↦ y0 along both actions. Returns false (and undoes its
// assignments) on a conflict.
bool propagate(const BiSet& a, const BiSet& b, std::uint32_t x0, std::uint32_t y0,
               std::vector<std::uint32_t>& image, std::vector<bool>& used) {
  const Groupoid& g = *a.target();
  const Groupoid& h = *a.source();
  std::vector<std::uint32_t> assigned{x0};
  image[x0] = y0;
  used[y0] = true;
  auto visit = [&](std::uint32_t x, std::uint32_t y) {
    if (image[x] != kNone) return image[x] == y;
    if (used[y]) return false;
    image[x] = y;
    used[y] = true;
    assigned.push_back(x);
    return true;
  };
  bool ok = true;
  for (std::size_t i = 0; i < assigned.size() && ok; ++i) {
    const std::uint32_t x = assigned[i];
    const std::uint32_t y = image[x];
    const BiElement loc = a.locate(x);
    for (Mor m : g.out(loc.gamma)) {
      if (!(ok = visit(a.lact_global(m, x), b.lact_global(m, y)))) break;
    }
    if (!ok) break;
    for (Mor m : h.in(loc.eta)) {
      if (!(ok = visit(a.ract_global(m, x), b.ract_global(m, y)))) break;
    }
  }
  if (!ok) {
    for (auto x : assigned) {
      used[image[x]] = false;
      image[x] = kNone;
    }
  }
  return ok;
}

std::vector<std::vector<std::uint32_t>> class_sizes(const BiSet& x, const BiOrbits& o) {
  std::vector<std::vector<std::uint32_t>> sizes(o.count(), std::vector<std::uint32_t>(x.fibers().size(), 0));
  for (std::uint32_t e = 0; e < x.size(); ++e) {
    const BiElement loc = x.locate(e);
    ++sizes[o.class_of[e]][x.fiber_index(loc.eta, loc.gamma)];
  }
  return sizes;
}

}  // namespace

std::optional<BiSetMap> find_isomorphism(const BiSet& a, const BiSet& b) {
  if (!same_bases(a, b) || a.fibers() != b.fibers()) return std::nullopt;
  const BiOrbits oa = biset_orbits(a);
  const BiOrbits ob = biset_orbits(b);
  if (oa.count() != ob.count()) return std::nullopt;
  const auto sa = class_sizes(a, oa);
  const auto sb = class_sizes(b, ob);

  std::vector<std::vector<std::uint32_t>> members(ob.count());
  for (std::uint32_t e = 0; e < b.size(); ++e) members[ob.class_of[e]].push_back(e);

  std::vector<std::uint32_t> image(a.size(), kNone);
  std::vector<bool> used(b.size(), false);
  std::vector<bool> matched(ob.count(), false);
  for (std::uint32_t ca = 0; ca < oa.count(); ++ca) {
    const std::uint32_t x0 = oa.representatives[ca];
    const BiElement loc = a.locate(x0);
    bool found = false;
    for (std::uint32_t cb = 0; cb < ob.count() && !found; ++cb) {
      if (matched[cb] || sa[ca] != sb[cb]) continue;
      for (std::uint32_t y0 : members[cb]) {
        const BiElement ly = b.locate(y0);
        if (ly.eta != loc.eta || ly.gamma != loc.gamma) continue;
        if (propagate(a, b, x0, y0, image, used)) {
          matched[cb] = true;
          found = true;
          break;
        }
      }
    }
    if (!found) return std::nullopt;
  }
  return BiSetMap{std::move(image)};
}

}  // namespace gpd
