#include "gpd/comparison.hpp"

#include <string>
#include <utility>

#include "gpd/error.hpp"

namespace gpd {

Mor DoubleTranslation::arrow(std::uint32_t from, Mor g, Mor h) const {
  const Groupoid& hs = *biset.source();
  const Groupoid& gs = *biset.target();
  const Obj eta = biset.locate(from).eta;
  return base[from] + gs.out_position(g) * static_cast<std::uint32_t>(hs.out(eta).size()) +
         hs.out_position(h);
}

DoubleTranslation double_translation(const BiSet& x) {
  const Groupoid& h = *x.source();
  const Groupoid& g = *x.target();
  const auto n = static_cast<std::uint32_t>(x.size());
  std::vector<std::uint32_t> base(n + 1, 0);
  for (std::uint32_t e = 0; e < n; ++e) {
    const BiElement loc = x.locate(e);
    base[e + 1] = base[e] + static_cast<std::uint32_t>(g.out(loc.gamma).size() * h.out(loc.eta).size());
  }
  const std::uint32_t total = base.back();
  GroupoidBuilder b(n);
  b.reserve(total);
  std::vector<Mor> gl(total), hl(total);
  std::vector<Obj> src(total);
  for (std::uint32_t e = 0; e < n; ++e) {
    const BiElement loc = x.locate(e);
    for (Mor gm : g.out(loc.gamma)) {
      const std::uint32_t moved = x.lact_global(gm, e);
      for (Mor hm : h.out(loc.eta)) {
        const Mor id = b.add_morphism(e, x.ract_global(h.inverse(hm), moved));
        gl[id] = gm;
        hl[id] = hm;
        src[id] = e;
      }
    }
  }
  DoubleTranslation d{x, nullptr, {}, {}, base};
  d.base.pop_back();
  for (std::uint32_t e = 0; e < n; ++e) {
    const BiElement loc = x.locate(e);
    b.set_identity(e, d.arrow(e, g.identity(loc.gamma), h.identity(loc.eta)));
  }
  d.groupoid = share(std::move(b).build([&](Mor second, Mor first) {
    return d.arrow(src[first], g.compose(gl[second], gl[first]), h.compose(hl[second], hl[first]));
  }));
  std::vector<Obj> gamma_of(n), eta_of(n);
  for (std::uint32_t e = 0; e < n; ++e) {
    const BiElement loc = x.locate(e);
    gamma_of[e] = loc.gamma;
    eta_of[e] = loc.eta;
  }
  d.p = Functor{d.groupoid, x.target(), std::move(gamma_of), std::move(gl)};
  d.q = Functor{d.groupoid, x.source(), std::move(eta_of), std::move(hl)};
  return d;
}

Span span_of(const DoubleTranslation& d) { return make_span(d.q, d.p); }

Span biset_to_span(const BiSet& x) {
  if (!x.admissible()) {
    throw Error(ErrorKind::NotAdmissible, "bi-set has a non-free column; its double translation is no span");
  }
  return span_of(double_translation(x));
}

SpanMorphism functoriality_on_morphisms(const BiSetIso& f) {
  const DoubleTranslation from = double_translation(f.source);
  const DoubleTranslation to = double_translation(f.target);
  const Groupoid& a = *from.groupoid;
  Functor t{from.groupoid, to.groupoid, f.map.images, std::vector<Mor>(a.num_morphisms())};
  for (Mor m = 0; m < a.num_morphisms(); ++m) {
    t.morphisms[m] = to.arrow(f.map.images[a.source(m)], from.p.mor(m), from.q.mor(m));
  }
  return strict_span_morphism(span_of(from), span_of(to), std::move(t));
}

SpanBiSet span_to_biset_with_classes(const Span& a) {
  const Groupoid& k = *a.apex();
  const Groupoid& h = *a.source();
  const Groupoid& g = *a.target();
  const Functor& p = a.right;
  const Functor& q = a.left;
  const auto nk = k.num_objects();
  const auto nh = h.num_objects();
  const auto ng = g.num_objects();

  SpanBiSet out;
  out.rows.reserve(ng);
  for (Obj gamma = 0; gamma < ng; ++gamma) {
    RawGSet r{a.apex(), Variance::Contravariant, std::vector<std::uint32_t>(nk), {}};
    for (Obj kappa = 0; kappa < nk; ++kappa) {
      r.fibers[kappa] = static_cast<std::uint32_t>(g.hom(p.obj(kappa), gamma).size());
    }
    r.action.resize(k.num_morphisms());
    for (Mor km = 0; km < k.num_morphisms(); ++km) {
      for (Mor s : g.hom(p.obj(k.target(km)), gamma)) {
        r.action[km].push_back(g.hom_position(g.compose(s, p.mor(km))));
      }
    }
    out.rows.push_back(GSet::trusted(std::move(r)));
  }
  out.columns.reserve(nh);
  for (Obj eta = 0; eta < nh; ++eta) {
    RawGSet c{a.apex(), Variance::Covariant, std::vector<std::uint32_t>(nk), {}};
    for (Obj kappa = 0; kappa < nk; ++kappa) {
      c.fibers[kappa] = static_cast<std::uint32_t>(h.hom(eta, q.obj(kappa)).size());
    }
    c.action.resize(k.num_morphisms());
    for (Mor km = 0; km < k.num_morphisms(); ++km) {
      for (Mor t : h.hom(eta, q.obj(k.source(km)))) {
        c.action[km].push_back(h.hom_position(h.compose(q.mor(km), t)));
      }
    }
    out.columns.push_back(GSet::trusted(std::move(c)));
  }

  RawBiSet raw{a.source(), a.target(), std::vector<std::uint32_t>(nh * ng), {}, {}};
  out.coends.reserve(nh * ng);
  for (Obj eta = 0; eta < nh; ++eta) {
    for (Obj gamma = 0; gamma < ng; ++gamma) {
      out.coends.push_back(coend(out.rows[gamma], out.columns[eta]));
      raw.fibers[eta * ng + gamma] = static_cast<std::uint32_t>(out.coends.back().size());
    }
  }
  auto at = [&](Obj eta, Obj gamma) -> const Coend& { return out.coends[eta * ng + gamma]; };

  raw.lact.resize(g.num_morphisms() * nh);
  for (Mor gm = 0; gm < g.num_morphisms(); ++gm) {
    for (Obj eta = 0; eta < nh; ++eta) {
      const Coend& to = at(eta, g.target(gm));
      raw.lact[gm * nh + eta] = induced_on_classes(
          at(eta, g.source(gm)), [&](Obj kappa, std::uint32_t s, std::uint32_t t) {
            const Mor sm = g.hom(p.obj(kappa), g.source(gm))[s];
            return to.in(kappa, g.hom_position(g.compose(gm, sm)), t);
          });
    }
  }
  raw.ract.resize(h.num_morphisms() * ng);
  for (Mor hm = 0; hm < h.num_morphisms(); ++hm) {
    for (Obj gamma = 0; gamma < ng; ++gamma) {
      const Coend& to = at(h.source(hm), gamma);
      raw.ract[hm * ng + gamma] = induced_on_classes(
          at(h.target(hm), gamma), [&](Obj kappa, std::uint32_t s, std::uint32_t t) {
            const Mor tm = h.hom(h.target(hm), q.obj(kappa))[t];
            return to.in(kappa, s, h.hom_position(h.compose(tm, hm)));
          });
    }
  }
  out.biset = BiSet::trusted(std::move(raw), false);
  out.biset = BiSet::trusted(out.biset.raw(), columns_free(out.biset));
  return out;
}

BiSetMorphism span_morphism_to_biset_map(const SpanMorphism& m) {
  check_span_morphism(m);
  const SpanBiSet from = span_to_biset_with_classes(m.source);
  const SpanBiSet to = span_to_biset_with_classes(m.target);
  const Groupoid& h = *m.source.source();
  const Groupoid& g = *m.source.target();
  const Functor& p1 = m.source.right;
  const Functor& q1 = m.source.left;
  BiSetMap map{std::vector<std::uint32_t>(from.biset.size())};
  for (Obj eta = 0; eta < h.num_objects(); ++eta) {
    for (Obj gamma = 0; gamma < g.num_objects(); ++gamma) {
      const Coend& target = to.at(eta, gamma);
      const auto table =
          induced_on_classes(from.at(eta, gamma), [&](Obj kappa, std::uint32_t s, std::uint32_t t) {
            const Mor sm = g.hom(p1.obj(kappa), gamma)[s];
            const Mor tm = h.hom(eta, q1.obj(kappa))[t];
            const Mor s2 = g.compose(sm, g.inverse(m.theta.components[kappa]));
            const Mor t2 = h.compose(m.phi.components[kappa], tm);
            return target.in(m.t.obj(kappa), g.hom_position(s2), h.hom_position(t2));
          });
      for (std::uint32_t c = 0; c < table.size(); ++c) {
        map.images[from.biset.global(eta, gamma, c)] = to.biset.global(eta, gamma, table[c]);
      }
    }
  }
  return {from.biset, to.biset, std::move(map)};
}

BiSetIso beta_iso(const BiSet& x) {
  const DoubleTranslation d = double_translation(x);
  const SpanBiSet sb = span_to_biset_with_classes(span_of(d));
  const Groupoid& h = *x.source();
  const Groupoid& g = *x.target();
  BiSetMap map{std::vector<std::uint32_t>(sb.biset.size())};
  for (Obj eta = 0; eta < h.num_objects(); ++eta) {
    for (Obj gamma = 0; gamma < g.num_objects(); ++gamma) {
      const auto table =
          induced_on_classes(sb.at(eta, gamma), [&](Obj e, std::uint32_t s, std::uint32_t t) {
            const BiElement loc = x.locate(e);
            const Mor sm = g.hom(loc.gamma, gamma)[s];
            const Mor tm = h.hom(eta, loc.eta)[t];
            return x.lact_global(sm, x.ract_global(tm, e));
          });
      for (std::uint32_t c = 0; c < table.size(); ++c) {
        map.images[sb.biset.global(eta, gamma, c)] = table[c];
      }
    }
  }
  BiSetIso iso{sb.biset, x, std::move(map)};
  check_biset_iso(iso);
  return iso;
}

AlphaEquivalence alpha_equivalence(const Span& a) {
  const SpanBiSet sb = span_to_biset_with_classes(a);
  const DoubleTranslation d = double_translation(sb.biset);
  const Groupoid& k = *a.apex();
  const Groupoid& h = *a.source();
  const Groupoid& g = *a.target();
  const Functor& p = a.right;
  const Functor& q = a.left;
  Functor t{a.apex(), d.groupoid, std::vector<Obj>(k.num_objects()), std::vector<Mor>(k.num_morphisms())};
  for (Obj kappa = 0; kappa < k.num_objects(); ++kappa) {
    const Obj pk = p.obj(kappa);
    const Obj qk = q.obj(kappa);
    const std::uint32_t cls =
        sb.at(qk, pk).in(kappa, g.hom_position(g.identity(pk)), h.hom_position(h.identity(qk)));
    t.objects[kappa] = sb.biset.global(qk, pk, cls);
  }
  for (Mor km = 0; km < k.num_morphisms(); ++km) {
    t.morphisms[km] = d.arrow(t.objects[k.source(km)], p.mor(km), q.mor(km));
  }
  SpanMorphism m = strict_span_morphism(a, span_of(d), std::move(t));
  EquivalenceVerdict v = is_equivalence(m.t);
  return {std::move(m), std::move(v)};
}

PhiEquivalence phi_equivalence(const BiSet& x, const BiSet& y) {
  if (!same_groupoid(x.source(), y.target())) {
    throw Error(ErrorKind::BaseMismatch, "phi: the source of X is not the target of Y");
  }
  if (!x.admissible() || !y.admissible()) {
    throw Error(ErrorKind::NotAdmissible, "phi: both bi-sets must have free columns");
  }
  const DoubleTranslation dx = double_translation(x);
  const DoubleTranslation dy = double_translation(y);
  const SpanComposite comp = compose_spans_with_pullback(span_of(dx), span_of(dy));
  const BiSetComposite xy = compose_with_classes(x, y);
  const DoubleTranslation dxy = double_translation(xy.biset);
  const Pullback& pb = comp.pullback;
  const Groupoid& apex = *pb.apex;

  Functor t{pb.apex, dxy.groupoid, std::vector<Obj>(apex.num_objects()),
            std::vector<Mor>(apex.num_morphisms())};
  for (Obj o = 0; o < apex.num_objects(); ++o) {
    const auto& tr = pb.triples[o];
    const BiElement ex = x.locate(tr.kappa);
    const BiElement ey = y.locate(tr.lambda);
    const std::uint32_t xh = x.locate(x.ract_global(tr.g, tr.kappa)).index;
    const std::uint32_t cls = xy.at(ey.eta, ex.gamma).in(ey.gamma, xh, ey.index);
    t.objects[o] = xy.biset.global(ey.eta, ex.gamma, cls);
  }
  for (Mor z = 0; z < apex.num_morphisms(); ++z) {
    t.morphisms[z] =
        dxy.arrow(t.objects[apex.source(z)], dx.p.mor(pb.to_k.mor(z)), dy.q.mor(pb.to_l.mor(z)));
  }
  SpanMorphism m = strict_span_morphism(comp.span, span_of(dxy), std::move(t));
  EquivalenceVerdict v = is_equivalence(m.t);
  return {std::move(m), std::move(v)};
}

void check_diagram(const GroupoidDiagram& d) {
  const Groupoid& h = *d.base;
  if (d.fibers.size() != h.num_objects() || d.maps.size() != h.num_morphisms()) {
    throw Error(ErrorKind::NotFunctorial, "diagram: wrong number of fibers or maps");
  }
  for (Mor m = 0; m < h.num_morphisms(); ++m) {
    const Functor& f = d.maps[m];
    if (!same_groupoid(f.source, d.fibers[h.target(m)]) || !same_groupoid(f.target, d.fibers[h.source(m)])) {
      throw Error(ErrorKind::NotFunctorial, "diagram: F(" + h.name(m) + ") has the wrong endpoints");
    }
    try {
      check_functor(f);
    } catch (const Error& e) {
      throw Error(ErrorKind::NotFunctorial, "diagram: F(" + h.name(m) + "): " + e.what());
    }
  }
  for (Obj o = 0; o < h.num_objects(); ++o) {
    if (!(d.maps[h.identity(o)] == identity_functor(d.fibers[o]))) {
      throw Error(ErrorKind::NotFunctorial, "diagram: F(1) is not the identity at object " + std::to_string(o));
    }
  }
  for (Mor m = 0; m < h.num_morphisms(); ++m) {
    for (Mor m2 : h.in(h.source(m))) {
      if (!(d.maps[h.compose(m, m2)] == compose_functors(d.maps[m2], d.maps[m]))) {
        throw Error(ErrorKind::NotFunctorial,
                    "diagram: F(" + h.name(m) + "∘" + h.name(m2) + ") differs from F(" + h.name(m2) +
                        ")∘F(" + h.name(m) + ")");
      }
    }
  }
}

Mor Grothendieck::arrow(Obj from, Mor h, Mor f) const {
  const Obj eta = eta_of[from];
  const Groupoid& fib = *diagram.fibers[eta];
  const Obj phi = from - start[eta];
  return base[from] + diagram.base->out_position(h) * static_cast<std::uint32_t>(fib.out(phi).size()) +
         fib.out_position(f);
}

Grothendieck grothendieck(const GroupoidDiagram& d) {
  check_diagram(d);
  const Groupoid& h = *d.base;
  Grothendieck gr;
  gr.diagram = d;
  gr.start.assign(h.num_objects() + 1, 0);
  for (Obj eta = 0; eta < h.num_objects(); ++eta) {
    gr.start[eta + 1] = gr.start[eta] + static_cast<std::uint32_t>(d.fibers[eta]->num_objects());
  }
  const std::uint32_t n = gr.start.back();
  gr.eta_of.resize(n);
  gr.base.assign(n + 1, 0);
  for (Obj eta = 0; eta < h.num_objects(); ++eta) {
    const Groupoid& fib = *d.fibers[eta];
    for (Obj phi = 0; phi < fib.num_objects(); ++phi) {
      const Obj o = gr.start[eta] + phi;
      gr.eta_of[o] = eta;
      gr.base[o + 1] = gr.base[o] + static_cast<std::uint32_t>(h.out(eta).size() * fib.out(phi).size());
    }
  }

  // F(h)⁻¹ on objects; F(h) is invertible since F(h⁻¹) inverts it.
  std::vector<std::vector<Obj>> preimage(h.num_morphisms());
  for (Mor m = 0; m < h.num_morphisms(); ++m) {
    const Functor& f = d.maps[m];
    preimage[m].assign(f.target->num_objects(), kNone);
    for (Obj o = 0; o < f.source->num_objects(); ++o) preimage[m][f.obj(o)] = o;
  }

  const std::uint32_t total = gr.base.back();
  GroupoidBuilder b(n);
  b.reserve(total);
  std::vector<Mor> hl(total), fl(total);
  std::vector<Obj> src(total);
  for (Obj o = 0; o < n; ++o) {
    const Obj eta = gr.eta_of[o];
    const Groupoid& fib = *d.fibers[eta];
    const Obj phi = o - gr.start[eta];
    for (Mor hm : h.out(eta)) {
      for (Mor fm : fib.out(phi)) {
        const Obj to = gr.start[h.target(hm)] + preimage[hm][fib.target(fm)];
        const Mor id = b.add_morphism(o, to);
        hl[id] = hm;
        fl[id] = fm;
        src[id] = o;
      }
    }
  }
  gr.base.pop_back();
  for (Obj o = 0; o < n; ++o) {
    const Obj eta = gr.eta_of[o];
    b.set_identity(o, gr.arrow(o, h.identity(eta), d.fibers[eta]->identity(o - gr.start[eta])));
  }
  gr.total = share(std::move(b).build([&](Mor second, Mor first) {
    const Obj from = src[first];
    const Groupoid& fib = *d.fibers[gr.eta_of[from]];
    const Mor f = fib.compose(d.maps[hl[first]].mor(fl[second]), fl[first]);
    return gr.arrow(from, h.compose(hl[second], hl[first]), f);
  }));
  gr.projection = Functor{gr.total, d.base, gr.eta_of, std::move(hl)};
  gr.start.pop_back();
  return gr;
}

FiberComparison fiber_comparison(const Grothendieck& g, Obj eta0) {
  FiberComparison out{homotopy_fiber(g.projection, eta0), {}};
  const GroupoidPtr& fib = g.diagram.fibers[eta0];
  const Mor one = g.diagram.base->identity(eta0);
  Functor f{fib, out.fiber.apex, std::vector<Obj>(fib->num_objects()),
            std::vector<Mor>(fib->num_morphisms())};
  for (Obj phi = 0; phi < fib->num_objects(); ++phi) {
    f.objects[phi] = out.fiber.find(g.start[eta0] + phi, one, 0);
  }
  for (Mor m = 0; m < fib->num_morphisms(); ++m) {
    const Obj from = fib->source(m);
    f.morphisms[m] = out.fiber.arrow(f.objects[from], g.arrow(g.start[eta0] + from, one, m), 0);
  }
  check_functor(f);
  out.functor = std::move(f);
  return out;
}

GroupoidDiagram translation_diagram(const BiSet& x) {
  const Groupoid& h = *x.source();
  const Groupoid& g = *x.target();
  std::vector<GSet> cols;
  std::vector<TranslationGroupoid> tgs;
  GroupoidDiagram d{x.source(), {}, {}};
  for (Obj eta = 0; eta < h.num_objects(); ++eta) {
    cols.push_back(x.column(eta));
    tgs.push_back(translation_groupoid(cols.back()));
    d.fibers.push_back(tgs.back().groupoid);
  }
  d.maps.reserve(h.num_morphisms());
  for (Mor hm = 0; hm < h.num_morphisms(); ++hm) {
    const Obj to_eta = h.source(hm);
    const GSet& from = cols[h.target(hm)];
    const GSet& to = cols[to_eta];
    const TranslationGroupoid& ta = tgs[h.target(hm)];
    const TranslationGroupoid& tb = tgs[to_eta];
    Functor f{ta.groupoid, tb.groupoid, std::vector<Obj>(from.size()),
              std::vector<Mor>(ta.groupoid->num_morphisms())};
    for (std::uint32_t e = 0; e < from.size(); ++e) {
      const auto [gamma, local] = from.locate(e);
      f.objects[e] = to.global(gamma, x.ract(hm, gamma, local));
    }
    for (Mor m = 0; m < ta.groupoid->num_morphisms(); ++m) {
      f.morphisms[m] = tb.arrow(f.objects[ta.groupoid->source(m)], g.out_position(ta.projection.mor(m)));
    }
    d.maps.push_back(std::move(f));
  }
  return d;
}

Pi0Chain pi0_chain(const BiSet& x, Obj eta0) {
  const GSet col = x.column(eta0);
  Pi0Chain c;
  c.colimit = colimit(col).count();
  c.translation = components(*translation_groupoid(col).groupoid).count;
  c.homotopy_fiber = components(*homotopy_fiber(double_translation(x).q, eta0).apex).count;
  return c;
}

}  // namespace gpd
