#include "gpd/span.hpp"

#include <algorithm>
#include <utility>

#include "gpd/error.hpp"

namespace gpd {

namespace {

std::uint32_t in_position(const Groupoid& g, Mor f) {
  const auto in = g.in(g.target(f));
  return static_cast<std::uint32_t>(std::lower_bound(in.begin(), in.end(), f) - in.begin());
}

bool same_span(const Span& a, const Span& b) { return a.left == b.left && a.right == b.right; }

// Identity-component transformation from `from` to `to`; both functors agree
// on objects whenever the legs commute strictly.
NatTrans strict(const Functor& from, const Functor& to) {
  NatTrans a{from, to, {}};
  a.components.reserve(from.objects.size());
  for (Obj o : from.objects) a.components.push_back(from.target->identity(o));
  return a;
}

}  // namespace

SpanMorphism strict_span_morphism(const Span& source, const Span& target, Functor t) {
  SpanMorphism m{source, target, t,
                 strict(source.right, compose_functors(target.right, t)),
                 strict(source.left, compose_functors(target.left, t))};
  check_span_morphism(m);
  return m;
}

Obj Pullback::find(Obj kappa, Mor g, Obj lambda) const {
  const Groupoid& base = *m.target;
  if (base.target(g) != m.obj(kappa) || base.source(g) != p.obj(lambda)) return kNone;
  return g_start[kappa][in_position(base, g)] + lambda_position[lambda];
}

Mor Pullback::arrow(Obj from, Mor k, Mor l) const {
  const Triple& t = triples[from];
  const auto width = static_cast<std::uint32_t>(to_l.target->out(t.lambda).size());
  return morphism_base[from] + to_k.target->out_position(k) * width + to_l.target->out_position(l);
}

Pullback pullback(const Functor& m, const Functor& p) {
  if (!same_groupoid(m.target, p.target)) {
    throw Error(ErrorKind::NotComposable, "pullback of functors with different codomains");
  }
  const Groupoid& k = *m.source;
  const Groupoid& l = *p.source;
  const Groupoid& g = *m.target;

  Pullback pb;
  pb.m = m;
  pb.p = p;
  std::vector<std::vector<Obj>> over(g.num_objects());
  pb.lambda_position.resize(l.num_objects());
  for (Obj lam = 0; lam < l.num_objects(); ++lam) {
    auto& list = over[p.obj(lam)];
    pb.lambda_position[lam] = static_cast<std::uint32_t>(list.size());
    list.push_back(lam);
  }
  pb.kappa_start.resize(k.num_objects());
  pb.g_start.resize(k.num_objects());
  for (Obj kap = 0; kap < k.num_objects(); ++kap) {
    pb.kappa_start[kap] = static_cast<std::uint32_t>(pb.triples.size());
    for (Mor arrow : g.in(m.obj(kap))) {
      pb.g_start[kap].push_back(static_cast<std::uint32_t>(pb.triples.size()));
      for (Obj lam : over[g.source(arrow)]) pb.triples.push_back({kap, arrow, lam});
    }
  }

  const std::size_t n = pb.triples.size();
  GroupoidBuilder b(n);
  std::vector<Obj> src;
  std::vector<Mor> first, second;
  pb.morphism_base.resize(n);
  for (Obj o = 0; o < n; ++o) {
    const auto& t = pb.triples[o];
    pb.morphism_base[o] = static_cast<std::uint32_t>(src.size());
    for (Mor km : k.out(t.kappa)) {
      for (Mor lm : l.out(t.lambda)) {
        const Mor moved = g.compose(m.mor(km), g.compose(t.g, g.inverse(p.mor(lm))));
        b.add_morphism(o, pb.find(k.target(km), moved, l.target(lm)));
        src.push_back(o);
        first.push_back(km);
        second.push_back(lm);
      }
    }
  }
  for (Obj o = 0; o < n; ++o) {
    const auto& t = pb.triples[o];
    b.set_identity(o, pb.morphism_base[o] +
                          k.out_position(k.identity(t.kappa)) *
                              static_cast<std::uint32_t>(l.out(t.lambda).size()) +
                          l.out_position(l.identity(t.lambda)));
  }
  // arrow() needs to_k/to_l targets, which are set below; compute inline.
  auto index = [&](Obj from, Mor km, Mor lm) {
    const auto width = static_cast<std::uint32_t>(l.out(pb.triples[from].lambda).size());
    return pb.morphism_base[from] + k.out_position(km) * width + l.out_position(lm);
  };
  pb.apex = share(std::move(b).build([&](Mor y, Mor x) {
    return index(src[x], k.compose(first[y], first[x]), l.compose(second[y], second[x]));
  }));

  pb.to_k = Functor{pb.apex, m.source, std::vector<Obj>(n), first};
  pb.to_l = Functor{pb.apex, p.source, std::vector<Obj>(n), second};
  std::vector<Mor> comps(n);
  for (Obj o = 0; o < n; ++o) {
    pb.to_k.objects[o] = pb.triples[o].kappa;
    pb.to_l.objects[o] = pb.triples[o].lambda;
    comps[o] = pb.triples[o].g;
  }
  pb.square = NatTrans{compose_functors(p, pb.to_l), compose_functors(m, pb.to_k), std::move(comps)};
  return pb;
}

Pullback homotopy_fiber(const Functor& m, Obj gamma) { return pullback(m, point_functor(m.target, gamma)); }

WeakCoverVerdict is_finite_weak_cover(const Functor& q) {
  for (Obj gamma = 0; gamma < q.target->num_objects(); ++gamma) {
    const Pullback fiber = homotopy_fiber(q, gamma);
    if (!is_discrete(*fiber.apex)) {
      WeakCoverVerdict v;
      v.cover = false;
      v.object = gamma;
      v.components = components(*fiber.apex).count;
      v.failure = "homotopy fiber over object " + std::to_string(gamma) + " is not discrete";
      return v;
    }
  }
  return {};
}

Span make_span(Functor left, Functor right) {
  if (!same_groupoid(left.source, right.source)) {
    throw Error(ErrorKind::NotComposable, "span legs have different apexes");
  }
  if (auto v = is_finite_weak_cover(left); !v) {
    throw Error(ErrorKind::NotAFiniteWeakCover, "left leg: " + v.failure);
  }
  return Span{std::move(left), std::move(right)};
}

SpanComposite compose_spans_with_pullback(const Span& a, const Span& b) {
  if (!same_groupoid(a.source(), b.target())) {
    throw Error(ErrorKind::BaseMismatch, "middle groupoids of the span composite differ");
  }
  SpanComposite c{Span{}, pullback(a.left, b.right)};
  c.span = make_span(compose_functors(b.left, c.pullback.to_l),
                     compose_functors(a.right, c.pullback.to_k));
  return c;
}

void check_span_morphism(const SpanMorphism& m) {
  check_functor(m.t);
  if (!same_groupoid(m.t.source, m.source.apex()) || !same_groupoid(m.t.target, m.target.apex())) {
    throw Error(ErrorKind::NotComposable, "apex functor does not run between the apexes");
  }
  if (!(m.theta.from == m.source.right) || !(m.theta.to == compose_functors(m.target.right, m.t))) {
    throw Error(ErrorKind::NotNatural, "θ does not run from p' to p∘t");
  }
  if (!(m.phi.from == m.source.left) || !(m.phi.to == compose_functors(m.target.left, m.t))) {
    throw Error(ErrorKind::NotNatural, "φ does not run from q' to q∘t");
  }
  check_nat_trans(m.theta);
  check_nat_trans(m.phi);
}

SpanMorphism identity_span_morphism(const Span& a) {
  return SpanMorphism{a, a, identity_functor(a.apex()), identity_nat_trans(a.right),
                      identity_nat_trans(a.left)};
}

SpanMorphism compose_span_morphisms(const SpanMorphism& second, const SpanMorphism& first) {
  if (!same_span(first.target, second.source)) {
    throw Error(ErrorKind::NotComposable, "span morphisms are not composable");
  }
  return SpanMorphism{first.source, second.target, compose_functors(second.t, first.t),
                      compose_nat_trans(whisker_right(second.theta, first.t), first.theta),
                      compose_nat_trans(whisker_right(second.phi, first.t), first.phi)};
}

bool operator==(const SpanMorphism& a, const SpanMorphism& b) {
  return a.t == b.t && a.theta == b.theta && a.phi == b.phi;
}

bool is_span_isomorphism(const SpanMorphism& m) { return is_isomorphism(m.t); }

void check_two_cell(const TwoCell& c) {
  if (!same_span(c.from.source, c.to.source) || !same_span(c.from.target, c.to.target)) {
    throw Error(ErrorKind::NotComposable, "two-cell between non-parallel span morphisms");
  }
  if (!(c.psi.from == c.from.t) || !(c.psi.to == c.to.t)) {
    throw Error(ErrorKind::NotNatural, "ψ does not run between the apex functors");
  }
  check_nat_trans(c.psi);
  const NatTrans right = compose_nat_trans(whisker_left(c.to.target.right, c.psi), c.from.theta);
  if (right.components != c.to.theta.components) {
    throw Error(ErrorKind::NotNatural, "pψ∘θ̄ differs from θ");
  }
  const NatTrans left = compose_nat_trans(whisker_left(c.to.target.left, c.psi), c.from.phi);
  if (left.components != c.to.phi.components) {
    throw Error(ErrorKind::NotNatural, "qψ∘φ̄ differs from φ");
  }
}

TwoCell identity_two_cell(const SpanMorphism& m) { return TwoCell{m, m, identity_nat_trans(m.t)}; }

TwoCell compose_two_cells_vertical(const TwoCell& second, const TwoCell& first) {
  return TwoCell{first.from, second.to, compose_nat_trans(second.psi, first.psi)};
}

TwoCell compose_two_cells(const TwoCell& second, const TwoCell& first) {
  return TwoCell{compose_span_morphisms(second.from, first.from),
                 compose_span_morphisms(second.to, first.to),
                 horizontal_compose(second.psi, first.psi)};
}

Span s_span(const Functor& p) { return make_span(identity_functor(p.source), p); }

Span t_span(const Functor& q) { return make_span(q, identity_functor(q.source)); }

SpanMorphism s_span_morphism(const NatTrans& alpha) {
  const Span source = s_span(alpha.from);
  const Span target = s_span(alpha.to);
  const Functor t = identity_functor(source.apex());
  SpanMorphism m{source, target, t,
                 NatTrans{alpha.from, compose_functors(target.right, t), alpha.components},
                 identity_nat_trans(source.left)};
  check_span_morphism(m);
  return m;
}

SpanMorphism t_span_morphism(const NatTrans& beta) {
  const Span source = t_span(beta.from);
  const Span target = t_span(beta.to);
  const Functor t = identity_functor(source.apex());
  SpanMorphism m{source, target, t, identity_nat_trans(source.right),
                 NatTrans{beta.from, compose_functors(target.left, t), beta.components}};
  check_span_morphism(m);
  return m;
}

PullbackUnit pullback_unit_right(const Functor& n) {
  const Groupoid& g = *n.target;
  PullbackUnit u{pullback(n, identity_functor(n.target)), {}, {}, {}};
  const Pullback& pb = u.pullback;
  const Groupoid& k = *n.source;
  u.projection = pb.to_k;
  u.section = Functor{n.source, pb.apex, std::vector<Obj>(k.num_objects()),
                      std::vector<Mor>(k.num_morphisms())};
  for (Obj kap = 0; kap < k.num_objects(); ++kap) {
    u.section.objects[kap] = pb.find(kap, g.identity(n.obj(kap)), n.obj(kap));
  }
  for (Mor km = 0; km < k.num_morphisms(); ++km) {
    u.section.morphisms[km] = pb.arrow(u.section.obj(k.source(km)), km, n.mor(km));
  }
  std::vector<Mor> comps(pb.triples.size());
  for (Obj o = 0; o < comps.size(); ++o) {
    comps[o] = pb.arrow(o, k.identity(pb.triples[o].kappa), pb.triples[o].g);
  }
  u.unit = NatTrans{identity_functor(pb.apex), compose_functors(u.section, u.projection), std::move(comps)};
  return u;
}

PullbackUnit pullback_unit_left(const Functor& m) {
  const Groupoid& g = *m.target;
  PullbackUnit u{pullback(identity_functor(m.target), m), {}, {}, {}};
  const Pullback& pb = u.pullback;
  const Groupoid& k = *m.source;
  u.projection = pb.to_l;
  u.section = Functor{m.source, pb.apex, std::vector<Obj>(k.num_objects()),
                      std::vector<Mor>(k.num_morphisms())};
  for (Obj kap = 0; kap < k.num_objects(); ++kap) {
    u.section.objects[kap] = pb.find(m.obj(kap), g.identity(m.obj(kap)), kap);
  }
  for (Mor km = 0; km < k.num_morphisms(); ++km) {
    u.section.morphisms[km] = pb.arrow(u.section.obj(k.source(km)), m.mor(km), km);
  }
  std::vector<Mor> comps(pb.triples.size());
  for (Obj o = 0; o < comps.size(); ++o) {
    const auto& t = pb.triples[o];
    comps[o] = pb.arrow(o, g.inverse(t.g), k.identity(t.lambda));
  }
  u.unit = NatTrans{identity_functor(pb.apex), compose_functors(u.section, u.projection), std::move(comps)};
  return u;
}

PullbackAssociator pullback_associator(const Functor& m, const Functor& p, const Functor& n,
                                       const Functor& q) {
  PullbackAssociator a;
  a.inner_left = pullback(m, p);
  a.outer_left = pullback(compose_functors(n, a.inner_left.to_l), q);
  a.inner_right = pullback(n, q);
  a.outer_right = pullback(m, compose_functors(p, a.inner_right.to_k));
  const Groupoid& src = *a.outer_left.apex;
  a.iso = Functor{a.outer_left.apex, a.outer_right.apex, std::vector<Obj>(src.num_objects()),
                  std::vector<Mor>(src.num_morphisms())};
  for (Obj o = 0; o < src.num_objects(); ++o) {
    const auto& outer = a.outer_left.triples[o];
    const auto& inner = a.inner_left.triples[outer.kappa];
    const Obj right_inner = a.inner_right.find(inner.lambda, outer.g, outer.lambda);
    a.iso.objects[o] = a.outer_right.find(inner.kappa, inner.g, right_inner);
  }
  for (Mor x = 0; x < src.num_morphisms(); ++x) {
    const Mor pair = a.outer_left.to_k.mor(x);
    const Mor mu = a.outer_left.to_l.mor(x);
    const Mor km = a.inner_left.to_k.mor(pair);
    const Mor lm = a.inner_left.to_l.mor(pair);
    const Obj from = a.iso.obj(src.source(x));
    const Obj inner_from = a.outer_right.triples[from].lambda;
    a.iso.morphisms[x] = a.outer_right.arrow(from, km, a.inner_right.arrow(inner_from, lm, mu));
  }
  return a;
}

SpanMorphism span_associator(const Span& a, const Span& b, const Span& c) {
  if (!same_groupoid(a.source(), b.target()) || !same_groupoid(b.source(), c.target())) {
    throw Error(ErrorKind::BaseMismatch, "spans are not composable");
  }
  const PullbackAssociator pa = pullback_associator(a.left, b.right, b.left, c.right);
  const Span source{compose_functors(c.left, pa.outer_left.to_l),
                    compose_functors(a.right, compose_functors(pa.inner_left.to_k, pa.outer_left.to_k))};
  const Span target{compose_functors(c.left, compose_functors(pa.inner_right.to_l, pa.outer_right.to_l)),
                    compose_functors(a.right, pa.outer_right.to_k)};
  return strict_span_morphism(source, target, pa.iso);
}

SpanMorphism span_unitor_right(const Span& a) {
  const PullbackUnit u = pullback_unit_right(a.left);
  const Span target{u.pullback.to_l, compose_functors(a.right, u.pullback.to_k)};
  return strict_span_morphism(a, target, u.section);
}

SpanMorphism span_unitor_left(const Span& a) {
  const PullbackUnit u = pullback_unit_left(a.right);
  const Span target{compose_functors(a.left, u.pullback.to_l), u.pullback.to_k};
  return strict_span_morphism(a, target, u.section);
}

DoubleCosetWitness double_coset_equivalence(const Functor& p, const Functor& q) {
  if (auto v = is_finite_weak_cover(q); !v) {
    throw Error(ErrorKind::NotAFiniteWeakCover, v.failure);
  }
  DoubleCosetWitness w;
  const SpanComposite lhs = compose_spans_with_pullback(t_span(q), s_span(p));
  w.lhs = lhs.span;
  w.square = lhs.pullback;
  const Functor& q_bar = w.lhs.left;   // F ×_G H -> H
  const Functor& p_bar = w.lhs.right;  // F ×_G H -> F
  const SpanComposite rhs = compose_spans_with_pullback(s_span(p_bar), t_span(q_bar));
  w.rhs = rhs.span;

  const Pullback& diag = rhs.pullback;
  const Groupoid& apex = *w.square.apex;
  Functor t{w.square.apex, diag.apex, std::vector<Obj>(apex.num_objects()),
            std::vector<Mor>(apex.num_morphisms())};
  for (Obj o = 0; o < apex.num_objects(); ++o) t.objects[o] = diag.find(o, apex.identity(o), o);
  for (Mor x = 0; x < apex.num_morphisms(); ++x) t.morphisms[x] = diag.arrow(t.obj(apex.source(x)), x, x);
  w.comparison = strict_span_morphism(w.lhs, w.rhs, t);
  w.verdict = is_equivalence(t);
  w.lhs_components = components(apex).count;
  w.rhs_components = components(*diag.apex).count;
  return w;
}

}  // namespace gpd
