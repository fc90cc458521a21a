#include "gpd/functor.hpp"

#include <sstream>

#include "gpd/error.hpp"

namespace gpd {

bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool operator==(const Functor& a, const Functor& b) {
  return a.objects == b.objects && a.morphisms == b.morphisms &&
         same_groupoid(a.source, b.source) && same_groupoid(a.target, b.target);
}

void check_functor(const Functor& f) {
  const Groupoid& s = *f.source;
  const Groupoid& t = *f.target;
  if (f.objects.size() != s.num_objects() || f.morphisms.size() != s.num_morphisms()) {
    throw Error(ErrorKind::NotAFunctor, "maps are not defined on all of the source");
  }
  for (Obj o : f.objects) {
    if (o >= t.num_objects()) throw Error(ErrorKind::NotAFunctor, "object image out of range");
  }
  for (Mor m = 0; m < s.num_morphisms(); ++m) {
    const Mor im = f.morphisms[m];
    if (im >= t.num_morphisms()) {
      throw Error(ErrorKind::NotAFunctor, "morphism image out of range");
    }
    if (t.source(im) != f.objects[s.source(m)] || t.target(im) != f.objects[s.target(m)]) {
      throw Error(ErrorKind::NotAFunctor,
                  "morphism " + std::to_string(m) + " is sent to a morphism with wrong endpoints");
    }
  }
  for (Obj o = 0; o < s.num_objects(); ++o) {
    if (f.morphisms[s.identity(o)] != t.identity(f.objects[o])) {
      throw Error(ErrorKind::NotAFunctor,
                  "identity of object " + std::to_string(o) + " is not preserved");
    }
  }
  for (Mor a = 0; a < s.num_morphisms(); ++a) {
    for (Mor b : s.out(s.target(a))) {
      if (f.morphisms[s.compose(b, a)] != t.compose(f.morphisms[b], f.morphisms[a])) {
        std::ostringstream os;
        os << "square for g=" << b << " after f=" << a << " does not commute";
        throw Error(ErrorKind::NotAFunctor, os.str());
      }
    }
  }
}

Functor validate_functor(GroupoidPtr source, GroupoidPtr target, std::vector<Obj> objects,
                         std::vector<Mor> morphisms) {
  Functor f{std::move(source), std::move(target), std::move(objects), std::move(morphisms)};
  check_functor(f);
  return f;
}

Functor identity_functor(GroupoidPtr g) {
  Functor f{g, g, {}, {}};
  f.objects.resize(g->num_objects());
  f.morphisms.resize(g->num_morphisms());
  for (Obj o = 0; o < g->num_objects(); ++o) f.objects[o] = o;
  for (Mor m = 0; m < g->num_morphisms(); ++m) f.morphisms[m] = m;
  return f;
}

Functor point_functor(GroupoidPtr target, Obj o) {
  static const GroupoidPtr terminal = share(discrete_groupoid(1));
  const Mor e = target->identity(o);
  return Functor{terminal, std::move(target), {o}, {e}};
}

Functor compose_functors(const Functor& second, const Functor& first) {
  if (!same_groupoid(first.target, second.source)) {
    throw Error(ErrorKind::NotComposable, "functors are not composable");
  }
  Functor f{first.source, second.target, {}, {}};
  f.objects.reserve(first.objects.size());
  for (Obj o : first.objects) f.objects.push_back(second.objects[o]);
  f.morphisms.reserve(first.morphisms.size());
  for (Mor m : first.morphisms) f.morphisms.push_back(second.morphisms[m]);
  return f;
}

bool is_isomorphism(const Functor& f) {
  if (f.source->num_objects() != f.target->num_objects() ||
      f.source->num_morphisms() != f.target->num_morphisms()) {
    return false;
  }
  std::vector<bool> hit_obj(f.target->num_objects(), false);
  for (Obj o : f.objects) {
    if (hit_obj[o]) return false;
    hit_obj[o] = true;
  }
  std::vector<bool> hit_mor(f.target->num_morphisms(), false);
  for (Mor m : f.morphisms) {
    if (hit_mor[m]) return false;
    hit_mor[m] = true;
  }
  return true;
}

void check_nat_trans(const NatTrans& a) {
  if (!same_groupoid(a.from.source, a.to.source) || !same_groupoid(a.from.target, a.to.target)) {
    throw Error(ErrorKind::NotNatural, "functors are not parallel");
  }
  const Groupoid& s = *a.from.source;
  const Groupoid& t = *a.from.target;
  if (a.components.size() != s.num_objects()) {
    throw Error(ErrorKind::NotNatural, "a component is missing");
  }
  for (Obj o = 0; o < s.num_objects(); ++o) {
    const Mor c = a.components[o];
    if (c >= t.num_morphisms() || t.source(c) != a.from.obj(o) || t.target(c) != a.to.obj(o)) {
      throw Error(ErrorKind::NotNatural,
                  "component at object " + std::to_string(o) + " has wrong endpoints");
    }
  }
  for (Mor m = 0; m < s.num_morphisms(); ++m) {
    const Mor lhs = t.compose(a.to.mor(m), a.components[s.source(m)]);
    const Mor rhs = t.compose(a.components[s.target(m)], a.from.mor(m));
    if (lhs != rhs) {
      throw Error(ErrorKind::NotNatural,
                  "naturality square fails at morphism " + std::to_string(m));
    }
  }
}

NatTrans validate_nat_trans(Functor from, Functor to, std::vector<Mor> components) {
  NatTrans a{std::move(from), std::move(to), std::move(components)};
  check_nat_trans(a);
  return a;
}

NatTrans identity_nat_trans(const Functor& f) {
  NatTrans a{f, f, {}};
  a.components.reserve(f.objects.size());
  for (Obj o : f.objects) a.components.push_back(f.target->identity(o));
  return a;
}

NatTrans compose_nat_trans(const NatTrans& second, const NatTrans& first) {
  if (!(first.to == second.from)) {
    throw Error(ErrorKind::NotComposable, "natural transformations are not composable");
  }
  NatTrans a{first.from, second.to, {}};
  const Groupoid& t = *first.from.target;
  a.components.resize(first.components.size());
  for (Obj o = 0; o < a.components.size(); ++o) {
    a.components[o] = t.compose(second.components[o], first.components[o]);
  }
  return a;
}

NatTrans inverse_nat_trans(const NatTrans& a) {
  NatTrans b{a.to, a.from, {}};
  b.components.reserve(a.components.size());
  for (Mor c : a.components) b.components.push_back(a.from.target->inverse(c));
  return b;
}

NatTrans whisker_left(const Functor& outer, const NatTrans& alpha) {
  NatTrans a{compose_functors(outer, alpha.from), compose_functors(outer, alpha.to), {}};
  a.components.reserve(alpha.components.size());
  for (Mor c : alpha.components) a.components.push_back(outer.mor(c));
  return a;
}

NatTrans whisker_right(const NatTrans& alpha, const Functor& inner) {
  NatTrans a{compose_functors(alpha.from, inner), compose_functors(alpha.to, inner), {}};
  a.components.reserve(inner.objects.size());
  for (Obj o : inner.objects) a.components.push_back(alpha.components[o]);
  return a;
}

NatTrans horizontal_compose(const NatTrans& beta, const NatTrans& alpha) {
  // K'α ∘ βF
  return compose_nat_trans(whisker_left(beta.to, alpha), whisker_right(beta, alpha.from));
}

bool operator==(const NatTrans& a, const NatTrans& b) {
  return a.components == b.components && a.from == b.from && a.to == b.to;
}

EquivalenceVerdict is_equivalence(const Functor& f) {
  EquivalenceVerdict v;
  const Groupoid& s = *f.source;
  const Groupoid& t = *f.target;
  const std::size_t ns = s.num_objects();
  const std::size_t nt = t.num_objects();

  std::vector<Mor> seen(t.num_morphisms(), kNone);
  for (Obj a = 0; a < ns; ++a) {
    for (Obj b = 0; b < ns; ++b) {
      const auto src_hom = s.hom(a, b);
      const auto tgt_hom = t.hom(f.obj(a), f.obj(b));
      if (src_hom.size() != tgt_hom.size()) {
        std::ostringstream os;
        os << "hom(" << a << "," << b << ") has " << src_hom.size() << " morphisms but its image hom has "
           << tgt_hom.size() << (src_hom.size() < tgt_hom.size() ? " (not full)" : " (not faithful)");
        v.failure = os.str();
        return v;
      }
      for (Mor m : src_hom) {
        const Mor im = f.mor(m);
        if (seen[im] == a * ns + b) {
          v.failure = "not faithful on hom(" + std::to_string(a) + "," + std::to_string(b) + ")";
          return v;
        }
        seen[im] = static_cast<Mor>(a * ns + b);
      }
    }
  }

  // For each target object b pick the least a with F(a) isomorphic to b and
  // the least morphism e_b : F(a) -> b.
  const Components tc = components(t);
  std::vector<Obj> rep_of_component(tc.count, kNone);
  for (Obj a = 0; a < ns; ++a) {
    auto& r = rep_of_component[tc.label[f.obj(a)]];
    if (r == kNone) r = a;
  }
  std::vector<Obj> q_obj(nt);
  std::vector<Mor> e(nt);
  for (Obj b = 0; b < nt; ++b) {
    const Obj a = rep_of_component[tc.label[b]];
    if (a == kNone) {
      v.failure = "target object " + std::to_string(b) + " is not in the essential image";
      return v;
    }
    q_obj[b] = a;
    e[b] = t.hom(f.obj(a), b).front();
  }
  auto lift = [&](Obj a, Obj a2, Mor target_mor) {
    for (Mor x : s.hom(a, a2)) {
      if (f.mor(x) == target_mor) return x;
    }
    return kNone;
  };
  Functor q{f.target, f.source, q_obj, std::vector<Mor>(t.num_morphisms())};
  for (Mor y = 0; y < t.num_morphisms(); ++y) {
    const Obj b = t.source(y);
    const Obj b2 = t.target(y);
    const Mor wanted = t.compose(t.inverse(e[b2]), t.compose(y, e[b]));
    q.morphisms[y] = lift(q_obj[b], q_obj[b2], wanted);
  }
  NatTrans counit{compose_functors(f, q), identity_functor(f.target), e};
  std::vector<Mor> unit_components(ns);
  for (Obj a = 0; a < ns; ++a) {
    unit_components[a] = lift(a, q_obj[f.obj(a)], t.inverse(e[f.obj(a)]));
  }
  NatTrans unit{identity_functor(f.source), compose_functors(q, f), std::move(unit_components)};
  check_functor(q);
  check_nat_trans(unit);
  check_nat_trans(counit);
  v.equivalence = true;
  v.quasi_inverse = std::move(q);
  v.unit = std::move(unit);
  v.counit = std::move(counit);
  return v;
}

}  // namespace gpd

namespace gpd {

Coproduct disjoint_union(const GroupoidPtr& first, const GroupoidPtr& second) {
  const Groupoid& a = *first;
  const Groupoid& b = *second;
  const auto na = static_cast<Obj>(a.num_objects());
  const auto ma = static_cast<Mor>(a.num_morphisms());
  GroupoidBuilder builder(a.num_objects() + b.num_objects());
  const bool named = a.has_names() || b.has_names();
  for (Mor f = 0; f < ma; ++f) {
    builder.add_morphism(a.source(f), a.target(f), named ? a.name(f) + "'" : std::string{});
  }
  for (Mor f = 0; f < b.num_morphisms(); ++f) {
    builder.add_morphism(na + b.source(f), na + b.target(f),
                         named ? b.name(f) + "''" : std::string{});
  }
  for (Obj o = 0; o < na; ++o) builder.set_identity(o, a.identity(o));
  for (Obj o = 0; o < b.num_objects(); ++o) builder.set_identity(na + o, ma + b.identity(o));
  GroupoidPtr sum = share(std::move(builder).build([&](Mor g, Mor f) {
    return g < ma ? a.compose(g, f) : ma + b.compose(g - ma, f - ma);
  }));
  Coproduct c{sum, Functor{first, sum, {}, {}}, Functor{second, sum, {}, {}}};
  for (Obj o = 0; o < na; ++o) c.in1.objects.push_back(o);
  for (Mor f = 0; f < ma; ++f) c.in1.morphisms.push_back(f);
  for (Obj o = 0; o < b.num_objects(); ++o) c.in2.objects.push_back(na + o);
  for (Mor f = 0; f < b.num_morphisms(); ++f) c.in2.morphisms.push_back(ma + f);
  return c;
}

}  // namespace gpd
