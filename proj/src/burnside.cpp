#include "gpd/burnside.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <utility>

#include "gpd/error.hpp"
#include "gpd/groups.hpp"

namespace gpd {

namespace {

void put(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>((v >> 24) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>(v & 0xff));
}

std::vector<std::uint32_t> words(const std::string& code) {
  if (code.size() % 4 != 0) throw Error(ErrorKind::Malformed, "class code length is not a multiple of 4");
  std::vector<std::uint32_t> w(code.size() / 4);
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::uint32_t v = 0;
    for (std::size_t j = 0; j < 4; ++j) v = (v << 8) | static_cast<unsigned char>(code[4 * i + j]);
    w[i] = v;
  }
  return w;
}

std::string wrap(const std::string& orbit) {
  std::string out;
  put(out, static_cast<std::uint32_t>(orbit.size()));
  return out + orbit;
}

// Breadth-first labeling from `root`; `label` must hold kNone on the orbit
// and is restored before returning.
std::vector<std::uint32_t> labeling(const BiSet& x, std::uint32_t root, std::vector<std::uint32_t>& label) {
  const Groupoid& h = *x.source();
  const Groupoid& g = *x.target();
  std::vector<std::uint32_t> order{root};
  std::vector<std::uint32_t> images;
  label[root] = 0;
  auto visit = [&](std::uint32_t y) {
    if (label[y] == kNone) {
      label[y] = static_cast<std::uint32_t>(order.size());
      order.push_back(y);
    }
    images.push_back(label[y]);
  };
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::uint32_t e = order[i];
    const BiElement loc = x.locate(e);
    for (Mor gm : g.out(loc.gamma)) visit(x.lact_global(gm, e));
    for (Mor hm : h.in(loc.eta)) visit(x.ract_global(hm, e));
  }
  std::vector<std::uint32_t> out;
  out.reserve(1 + 2 * order.size() + images.size());
  out.push_back(static_cast<std::uint32_t>(order.size()));
  for (std::uint32_t e : order) {
    const BiElement loc = x.locate(e);
    out.push_back(loc.eta);
    out.push_back(loc.gamma);
    label[e] = kNone;
  }
  out.insert(out.end(), images.begin(), images.end());
  return out;
}

}  // namespace

std::vector<BiSet> indecomposables(const BiSet& x) { return orbit_summands(x); }

std::string orbit_code(const BiSet& x, const std::vector<std::uint32_t>& orbit) {
  if (orbit.empty()) return {};
  std::uint32_t lowest = kNone;
  for (std::uint32_t e : orbit) {
    const BiElement loc = x.locate(e);
    lowest = std::min(lowest, x.fiber_index(loc.eta, loc.gamma));
  }
  std::vector<std::uint32_t> label(x.size(), kNone);
  std::vector<std::uint32_t> best;
  for (std::uint32_t e : orbit) {
    const BiElement loc = x.locate(e);
    if (x.fiber_index(loc.eta, loc.gamma) != lowest) continue;
    auto candidate = labeling(x, e, label);
    if (best.empty() || candidate < best) best = std::move(candidate);
  }
  std::string out;
  out.reserve(4 * best.size());
  for (std::uint32_t v : best) put(out, v);
  return out;
}

BisetClass canonical_form(const BiSet& x) {
  const BiOrbits o = biset_orbits(x);
  std::vector<std::vector<std::uint32_t>> members(o.count());
  for (std::uint32_t e = 0; e < x.size(); ++e) members[o.class_of[e]].push_back(e);
  std::vector<std::string> codes;
  codes.reserve(members.size());
  for (const auto& m : members) codes.push_back(orbit_code(x, m));
  std::sort(codes.begin(), codes.end());
  BisetClass c{{}, x.fibers()};
  for (const auto& s : codes) c.code += wrap(s);
  return c;
}

std::vector<std::string> split_code(const std::string& code) {
  std::vector<std::string> out;
  std::size_t at = 0;
  while (at < code.size()) {
    if (code.size() - at < 4) throw Error(ErrorKind::Malformed, "truncated class code");
    const std::uint32_t len = words(code.substr(at, 4))[0];
    at += 4;
    if (code.size() - at < len) throw Error(ErrorKind::Malformed, "truncated class code");
    out.push_back(code.substr(at, len));
    at += len;
  }
  return out;
}

BiSet empty_biset(const GroupoidPtr& source, const GroupoidPtr& target) {
  const std::size_t nh = source->num_objects();
  const std::size_t ng = target->num_objects();
  RawBiSet raw{source, target, std::vector<std::uint32_t>(nh * ng, 0),
               std::vector<std::vector<std::uint32_t>>(target->num_morphisms() * nh),
               std::vector<std::vector<std::uint32_t>>(source->num_morphisms() * ng)};
  return BiSet::trusted(std::move(raw), true);
}

BiSet decode_orbit(const std::string& code, const GroupoidPtr& source, const GroupoidPtr& target) {
  const Groupoid& h = *source;
  const Groupoid& g = *target;
  const std::size_t nh = h.num_objects();
  const std::size_t ng = g.num_objects();
  const auto w = words(code);
  auto bad = [](const char* why) { return Error(ErrorKind::Malformed, std::string("orbit code: ") + why); };
  if (w.empty()) throw bad("empty");
  const std::uint32_t n = w[0];
  if (w.size() < 1 + 2 * std::size_t{n}) throw bad("truncated fiber list");
  RawBiSet raw{source, target, std::vector<std::uint32_t>(nh * ng, 0),
               std::vector<std::vector<std::uint32_t>>(g.num_morphisms() * nh),
               std::vector<std::vector<std::uint32_t>>(h.num_morphisms() * ng)};
  std::vector<std::uint32_t> local(n);
  std::size_t expected = 1 + 2 * std::size_t{n};
  for (std::uint32_t i = 0; i < n; ++i) {
    const Obj eta = w[1 + 2 * i];
    const Obj gamma = w[2 + 2 * i];
    if (eta >= nh || gamma >= ng) throw bad("object out of range");
    local[i] = raw.fibers[eta * ng + gamma]++;
    expected += g.out(gamma).size() + h.in(eta).size();
  }
  if (w.size() != expected) throw bad("wrong length");
  for (Mor m = 0; m < g.num_morphisms(); ++m) {
    for (Obj eta = 0; eta < nh; ++eta) raw.lact[m * nh + eta].assign(raw.fibers[eta * ng + g.source(m)], 0);
  }
  for (Mor m = 0; m < h.num_morphisms(); ++m) {
    for (Obj gamma = 0; gamma < ng; ++gamma) raw.ract[m * ng + gamma].assign(raw.fibers[h.target(m) * ng + gamma], 0);
  }
  std::size_t at = 1 + 2 * std::size_t{n};
  auto fiber = [&](std::uint32_t label) { return std::pair<Obj, Obj>{w[1 + 2 * label], w[2 + 2 * label]}; };
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto [eta, gamma] = fiber(i);
    for (Mor m : g.out(gamma)) {
      const std::uint32_t y = w[at++];
      if (y >= n || fiber(y) != std::pair<Obj, Obj>{eta, g.target(m)}) throw bad("left image in the wrong fiber");
      raw.lact[m * nh + eta][local[i]] = local[y];
    }
    for (Mor m : h.in(eta)) {
      const std::uint32_t y = w[at++];
      if (y >= n || fiber(y) != std::pair<Obj, Obj>{h.source(m), gamma}) throw bad("right image in the wrong fiber");
      raw.ract[m * ng + gamma][local[i]] = local[y];
    }
  }
  return validate_biset(std::move(raw), Admissibility::Compute);
}

BiSet decode_class(const std::string& code, const GroupoidPtr& source, const GroupoidPtr& target) {
  BiSet out = empty_biset(source, target);
  for (const auto& orbit : split_code(code)) out = tensor(out, decode_orbit(orbit, source, target));
  return out;
}

std::string code_hash(const std::string& code) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : code) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
  return same_groupoid(a.source, b.source) && same_groupoid(a.target, b.target) &&
         a.coefficients == b.coefficients;
}

BurnsideElement zero_element(const GroupoidPtr& source, const GroupoidPtr& target) {
  return {source, target, {}};
}

BurnsideElement hom_monoid_element(const BiSet& x) {
  if (!x.admissible()) throw Error(ErrorKind::NotAdmissible, "only admissible bi-sets have a Burnside class");
  BurnsideElement e = zero_element(x.source(), x.target());
  for (const auto& orbit : split_code(canonical_form(x).code)) ++e.coefficients[wrap(orbit)];
  return e;
}

namespace {

void require_same(const BurnsideElement& a, const BurnsideElement& b) {
  if (!same_groupoid(a.source, b.source) || !same_groupoid(a.target, b.target)) {
    throw Error(ErrorKind::BaseMismatch, "Burnside elements over different bases");
  }
}

void accumulate(BurnsideElement& into, const std::string& key, std::int64_t k) {
  if (k == 0) return;
  auto [it, fresh] = into.coefficients.emplace(key, k);
  if (!fresh && (it->second += k) == 0) into.coefficients.erase(it);
}

}  // namespace

BurnsideElement add(const BurnsideElement& a, const BurnsideElement& b) {
  require_same(a, b);
  BurnsideElement out = a;
  for (const auto& [key, k] : b.coefficients) accumulate(out, key, k);
  return out;
}

BurnsideElement negate(const BurnsideElement& a) { return scale(a, -1); }

BurnsideElement subtract(const BurnsideElement& a, const BurnsideElement& b) { return add(a, negate(b)); }

BurnsideElement scale(const BurnsideElement& a, std::int64_t k) {
  BurnsideElement out = zero_element(a.source, a.target);
  for (const auto& [key, c] : a.coefficients) accumulate(out, key, c * k);
  return out;
}

BurnsideElement compose_elements(const BurnsideElement& a, const BurnsideElement& b) {
  if (!same_groupoid(a.source, b.target)) {
    throw Error(ErrorKind::BaseMismatch, "compose_elements: the middle groupoids differ");
  }
  BurnsideElement out = zero_element(b.source, a.target);
  std::vector<BiSet> right;
  for (const auto& [key, k] : b.coefficients) right.push_back(decode_class(key, b.source, b.target));
  for (const auto& [ka, ca] : a.coefficients) {
    const BiSet x = decode_class(ka, a.source, a.target);
    std::size_t j = 0;
    for (const auto& [kb, cb] : b.coefficients) {
      const BurnsideElement z = hom_monoid_element(compose_bisets(x, right[j++]));
      for (const auto& [kz, cz] : z.coefficients) accumulate(out, kz, ca * cb * cz);
    }
  }
  return out;
}

std::string to_string(const BurnsideElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [key, k] : a.coefficients) {
    const std::int64_t mag = k < 0 ? -k : k;
    if (out.empty()) {
      if (k < 0) out += "-";
    } else {
      out += k < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "[" + code_hash(key) + "]";
  }
  return out;
}

BiSet transitive_biset(const GroupoidPtr& source, const GroupoidPtr& target, Obj eta0, Obj gamma0,
                       const std::vector<std::uint32_t>& subgroup) {
  const Groupoid& h = *source;
  const Groupoid& g = *target;
  const std::size_t nh = h.num_objects();
  const std::size_t ng = g.num_objects();
  const VertexGroup vg = vertex_group(g, gamma0);
  const VertexGroup vh = vertex_group(h, eta0);
  const std::uint32_t oh = vh.group.order;

  // Per fiber: class of each pair (a, b), pair index a_pos·|H(η, η0)| + b_pos.
  std::vector<std::vector<std::uint32_t>> cls(nh * ng);
  RawBiSet raw{source, target, std::vector<std::uint32_t>(nh * ng, 0),
               std::vector<std::vector<std::uint32_t>>(g.num_morphisms() * nh),
               std::vector<std::vector<std::uint32_t>>(h.num_morphisms() * ng)};
  for (Obj eta = 0; eta < nh; ++eta) {
    const auto bs = h.hom(eta, eta0);
    for (Obj gamma = 0; gamma < ng; ++gamma) {
      const auto as = g.hom(gamma0, gamma);
      auto& c = cls[eta * ng + gamma];
      c.assign(as.size() * bs.size(), kNone);
      std::uint32_t next = 0;
      for (std::uint32_t i = 0; i < c.size(); ++i) {
        if (c[i] != kNone) continue;
        const Mor a = as[i / bs.size()];
        const Mor b = bs[i % bs.size()];
        for (std::uint32_t v : subgroup) {
          const Mor s = vg.elements[v / oh];
          const Mor t = vh.elements[v % oh];
          const std::uint32_t j = g.hom_position(g.compose(a, s)) * static_cast<std::uint32_t>(bs.size()) +
                                  h.hom_position(h.compose(h.inverse(t), b));
          c[j] = next;
        }
        ++next;
      }
      raw.fibers[eta * ng + gamma] = next;
    }
  }
  auto first_pairs = [&](Obj eta, Obj gamma) {
    const auto& c = cls[eta * ng + gamma];
    std::vector<std::uint32_t> rep(raw.fibers[eta * ng + gamma], kNone);
    for (std::uint32_t i = 0; i < c.size(); ++i) {
      if (rep[c[i]] == kNone) rep[c[i]] = i;
    }
    return rep;
  };
  for (Obj eta = 0; eta < nh; ++eta) {
    const auto bs = h.hom(eta, eta0);
    for (Obj gamma = 0; gamma < ng; ++gamma) {
      const auto as = g.hom(gamma0, gamma);
      const auto rep = first_pairs(eta, gamma);
      for (Mor m : g.out(gamma)) {
        auto& table = raw.lact[m * nh + eta];
        for (std::uint32_t r : rep) {
          const Mor a = g.compose(m, as[r / bs.size()]);
          table.push_back(cls[eta * ng + g.target(m)][g.hom_position(a) * bs.size() + r % bs.size()]);
        }
      }
      for (Mor m : h.in(eta)) {
        const Obj to = h.source(m);
        const std::size_t width = h.hom(to, eta0).size();
        auto& table = raw.ract[m * ng + gamma];
        for (std::uint32_t r : rep) {
          const Mor b = h.compose(bs[r % bs.size()], m);
          table.push_back(cls[to * ng + gamma][(r / bs.size()) * width + h.hom_position(b)]);
        }
      }
    }
  }
  return validate_biset(std::move(raw), Admissibility::Compute);
}

std::vector<BisetClass> burnside_group(const GroupoidPtr& source, const GroupoidPtr& target,
                                       std::size_t bound) {
  const auto ch = components(*source).classes();
  const auto cg = components(*target).classes();
  std::map<std::string, BisetClass> found;
  for (const auto& hc : ch) {
    for (const auto& gc : cg) {
      const Obj eta0 = hc.front();
      const Obj gamma0 = gc.front();
      const VertexGroup vg = vertex_group(*target, gamma0);
      const VertexGroup vh = vertex_group(*source, eta0);
      const FiniteGroup v = direct_product(vg.group, vh.group);
      const std::size_t scale = hc.size() * gc.size() * v.order;
      for (const auto& s : subgroups(v)) {
        if (scale / s.size() > bound) continue;
        const bool free = std::none_of(s.begin(), s.end(), [&](std::uint32_t e) {
          return e % vh.group.order == vh.group.identity && e / vh.group.order != vg.group.identity;
        });
        if (!free) continue;
        BisetClass c = canonical_form(transitive_biset(source, target, eta0, gamma0, s));
        found.emplace(c.code, std::move(c));
      }
    }
  }
  std::vector<BisetClass> out;
  out.reserve(found.size());
  for (auto& [code, c] : found) out.push_back(std::move(c));
  return out;
}

namespace {

BiSet y_biset(const Coproduct& sum, const Functor& in, const GroupoidPtr& part) {
  const Groupoid& s = *sum.sum;
  const Groupoid& g = *part;
  const std::size_t ns = s.num_objects();
  const std::size_t ng = g.num_objects();
  std::vector<Obj> pre_obj(ns, kNone);
  std::vector<Mor> pre_mor(s.num_morphisms(), kNone);
  for (Obj o = 0; o < ng; ++o) pre_obj[in.obj(o)] = o;
  for (Mor m = 0; m < g.num_morphisms(); ++m) pre_mor[in.mor(m)] = m;
  RawBiSet raw{sum.sum, part, std::vector<std::uint32_t>(ns * ng, 0),
               std::vector<std::vector<std::uint32_t>>(g.num_morphisms() * ns),
               std::vector<std::vector<std::uint32_t>>(s.num_morphisms() * ng)};
  for (Obj sigma = 0; sigma < ns; ++sigma) {
    if (pre_obj[sigma] == kNone) continue;
    const Obj g1 = pre_obj[sigma];
    for (Obj gamma = 0; gamma < ng; ++gamma) {
      raw.fibers[sigma * ng + gamma] = static_cast<std::uint32_t>(g.hom(g1, gamma).size());
    }
    for (Mor m = 0; m < g.num_morphisms(); ++m) {
      for (Mor a : g.hom(g1, g.source(m))) raw.lact[m * ns + sigma].push_back(g.hom_position(g.compose(m, a)));
    }
  }
  for (Mor m = 0; m < s.num_morphisms(); ++m) {
    if (pre_mor[m] == kNone) continue;
    const Mor m1 = pre_mor[m];
    for (Obj gamma = 0; gamma < ng; ++gamma) {
      for (Mor a : g.hom(g.target(m1), gamma)) raw.ract[m * ng + gamma].push_back(g.hom_position(g.compose(a, m1)));
    }
  }
  return validate_biset(std::move(raw), Admissibility::Require);
}

AdditivityVerdict fail(std::string why) { return {false, std::move(why)}; }

}  // namespace

Additivity additivity_witnesses(const GroupoidPtr& first, const GroupoidPtr& second) {
  Additivity a;
  a.sum = disjoint_union(first, second);
  a.x1 = s_of_functor(a.sum.in1);
  a.x2 = s_of_functor(a.sum.in2);
  a.y1 = y_biset(a.sum, a.sum.in1, first);
  a.y2 = y_biset(a.sum, a.sum.in2, second);
  return a;
}

AdditivityVerdict check_additivity_units(const Additivity& a) {
  if (!find_isomorphism(compose_bisets(a.y1, a.x1), identity_biset(a.sum.in1.source))) {
    return fail("Y(1) x X(1) is not the identity bi-set");
  }
  if (!find_isomorphism(compose_bisets(a.y2, a.x2), identity_biset(a.sum.in2.source))) {
    return fail("Y(2) x X(2) is not the identity bi-set");
  }
  return {};
}

AdditivityVerdict check_recovery(const Additivity& a, const BiSet& z) {
  if (!find_isomorphism(compose_bisets(a.y1, z), restrict_target(z, a.sum.in1))) {
    return fail("Y(1) x Z differs from Z(1)");
  }
  if (!find_isomorphism(compose_bisets(a.y2, z), restrict_target(z, a.sum.in2))) {
    return fail("Y(2) x Z differs from Z(2)");
  }
  return {};
}

AdditivityVerdict check_splitting(const Additivity& a, const BiSet& w) {
  const BiSet first = compose_bisets(compose_bisets(w, a.x1), a.y1);
  const BiSet second = compose_bisets(compose_bisets(w, a.x2), a.y2);
  if (!find_isomorphism(tensor(first, second), w)) return fail("W is not the sum of its two restrictions");
  return {};
}

}  // namespace gpd
