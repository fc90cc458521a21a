#pragma once

// Brute-force reference computations. Nothing here calls into the library
// beyond reading raw bi-set tables.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "gpd/biset.hpp"

namespace oracle {

/// A group given by its multiplication table, a·b = mul[a*n + b].
struct Table {
  int n = 1;
  int e = 0;
  std::vector<int> mul{0};

  int operator()(int a, int b) const { return mul[a * n + b]; }
  int inv(int a) const {
    for (int b = 0; b < n; ++b) {
      if (mul[a * n + b] == e) return b;
    }
    return -1;
  }
  std::vector<std::vector<std::uint32_t>> cayley() const {
    std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) t[a][b] = static_cast<std::uint32_t>(mul[a * n + b]);
    }
    return t;
  }
};

inline Table cyclic(int n) {
  Table t{n, 0, std::vector<int>(n * n)};
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t.mul[a * n + b] = (a + b) % n;
  }
  return t;
}

/// Permutations of {0..k-1} listed lexicographically, (ab)(i) = a(b(i)).
inline Table permutations(int k) {
  std::vector<std::vector<int>> ps;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do ps.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(ps.size());
  Table t{n, 0, std::vector<int>(n * n)};
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(k);
      for (int i = 0; i < k; ++i) c[i] = ps[a][ps[b][i]];
      t.mul[a * n + b] = static_cast<int>(std::find(ps.begin(), ps.end(), c) - ps.begin());
    }
  }
  return t;
}

/// Every subset closed under the product, as a bitmask. Needs n <= 20.
inline std::vector<std::uint32_t> subgroup_masks(const Table& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << g.n); ++m) {
    if (!(m >> g.e & 1u)) continue;
    bool closed = true;
    for (int a = 0; a < g.n && closed; ++a) {
      if (!(m >> a & 1u)) continue;
      for (int b = 0; b < g.n && closed; ++b) {
        if ((m >> b & 1u) && !(m >> g(a, b) & 1u)) closed = false;
      }
    }
    if (closed) out.push_back(m);
  }
  return out;
}

/// One conjugacy-class representative per class of subgroups, as masks.
inline std::vector<std::uint32_t> subgroup_class_masks(const Table& g) {
  std::set<std::uint32_t> seen;
  for (std::uint32_t m : subgroup_masks(g)) {
    std::uint32_t least = m;
    for (int x = 0; x < g.n; ++x) {
      std::uint32_t c = 0;
      for (int a = 0; a < g.n; ++a) {
        if (m >> a & 1u) c |= 1u << g(g(x, a), g.inv(x));
      }
      least = std::min(least, c);
    }
    seen.insert(least);
  }
  return {seen.begin(), seen.end()};
}

inline std::size_t subgroup_classes(const Table& g) { return subgroup_class_masks(g).size(); }

/// Orbit sizes |G|/|S| of the transitive G-sets, sorted.
inline std::vector<std::uint32_t> transitive_sizes(const Table& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m : subgroup_class_masks(g)) out.push_back(g.n / std::popcount(m));
  std::sort(out.begin(), out.end());
  return out;
}

/// |K \ G / L| for subgroups given as element lists.
inline std::size_t double_cosets(const Table& g, const std::vector<int>& k, const std::vector<int>& l) {
  std::vector<bool> done(g.n, false);
  std::size_t count = 0;
  for (int x = 0; x < g.n; ++x) {
    if (done[x]) continue;
    ++count;
    for (int a : k) {
      for (int b : l) done[g(g(a, x), b)] = true;
    }
  }
  return count;
}

namespace detail {

inline int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace detail

/// Fiber sizes of X ×_G Y for X ∈ B(G, F), Y ∈ B(H, G), indexed η·|F_0| + φ,
/// by quotienting all pairs directly.
inline std::vector<std::uint32_t> composite_fibers(const gpd::BiSet& x, const gpd::BiSet& y) {
  const auto& g = *x.source();
  const std::size_t nf = x.target_objects();
  const std::size_t nh = y.source_objects();
  const std::size_t ng = g.num_objects();
  std::vector<std::uint32_t> out(nh * nf, 0);
  for (gpd::Obj eta = 0; eta < nh; ++eta) {
    for (gpd::Obj phi = 0; phi < nf; ++phi) {
      // pair (γ, a, b) with a ∈ X^γ_φ, b ∈ Y^η_γ
      std::vector<std::size_t> start(ng + 1, 0);
      for (gpd::Obj c = 0; c < ng; ++c) {
        start[c + 1] = start[c] + std::size_t(x.fiber_size(c, phi)) * y.fiber_size(eta, c);
      }
      std::vector<int> parent(start[ng]);
      std::iota(parent.begin(), parent.end(), 0);
      auto id = [&](gpd::Obj c, std::uint32_t a, std::uint32_t b) {
        return static_cast<int>(start[c] + std::size_t(a) * y.fiber_size(eta, c) + b);
      };
      for (gpd::Mor m = 0; m < g.num_morphisms(); ++m) {
        const gpd::Obj s = g.source(m), t = g.target(m);
        for (std::uint32_t a = 0; a < x.fiber_size(t, phi); ++a) {
          for (std::uint32_t b = 0; b < y.fiber_size(eta, s); ++b) {
            const int l = id(s, x.ract(m, phi, a), b);
            const int r = id(t, a, y.lact(m, eta, b));
            parent[detail::find(parent, l)] = detail::find(parent, r);
          }
        }
      }
      std::uint32_t classes = 0;
      for (int i = 0; i < static_cast<int>(parent.size()); ++i) classes += detail::find(parent, i) == i;
      out[eta * nf + phi] = classes;
    }
  }
  return out;
}

/// Number of orbits of the combined action.
inline std::size_t orbit_count(const gpd::BiSet& x) {
  std::vector<int> parent(x.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto& h = *x.source();
  const auto& g = *x.target();
  for (std::uint32_t e = 0; e < x.size(); ++e) {
    const auto at = x.locate(e);
    for (gpd::Mor m : g.out(at.gamma)) {
      parent[detail::find(parent, e)] = detail::find(parent, x.global(at.eta, g.target(m), x.lact(m, at.eta, at.index)));
    }
    for (gpd::Mor m : h.in(at.eta)) {
      parent[detail::find(parent, e)] = detail::find(parent, x.global(h.source(m), at.gamma, x.ract(m, at.gamma, at.index)));
    }
  }
  std::size_t n = 0;
  for (int i = 0; i < static_cast<int>(parent.size()); ++i) n += detail::find(parent, i) == i;
  return n;
}

/// Tries every fiberwise bijection. Returns false without deciding when
/// the search space exceeds `budget`; callers check `decided`.
struct IsoSearch {
  bool decided = true;
  bool iso = false;
};

inline IsoSearch brute_force_iso(const gpd::BiSet& a, const gpd::BiSet& b, double budget = 2e5) {
  if (a.fibers() != b.fibers()) return {true, false};
  double space = 1;
  for (auto n : a.fibers()) {
    for (std::uint32_t i = 2; i <= n; ++i) space *= i;
  }
  if (space > budget) return {false, false};
  const auto& h = *a.source();
  const auto& g = *a.target();
  const std::size_t nh = h.num_objects();
  const std::size_t ng = g.num_objects();
  std::vector<std::vector<std::uint32_t>> perm(a.fibers().size());
  for (std::size_t f = 0; f < perm.size(); ++f) {
    perm[f].resize(a.fibers()[f]);
    std::iota(perm[f].begin(), perm[f].end(), 0u);
  }
  auto equivariant = [&] {
    for (gpd::Mor m = 0; m < g.num_morphisms(); ++m) {
      for (gpd::Obj eta = 0; eta < nh; ++eta) {
        const auto& pa = perm[eta * ng + g.source(m)];
        const auto& pb = perm[eta * ng + g.target(m)];
        for (std::uint32_t i = 0; i < pa.size(); ++i) {
          if (pb[a.lact(m, eta, i)] != b.lact(m, eta, pa[i])) return false;
        }
      }
    }
    for (gpd::Mor m = 0; m < h.num_morphisms(); ++m) {
      for (gpd::Obj c = 0; c < ng; ++c) {
        const auto& pa = perm[h.target(m) * ng + c];
        const auto& pb = perm[h.source(m) * ng + c];
        for (std::uint32_t i = 0; i < pa.size(); ++i) {
          if (pb[a.ract(m, c, i)] != b.ract(m, c, pa[i])) return false;
        }
      }
    }
    return true;
  };
  // odometer over the fibers
  while (true) {
    if (equivariant()) return {true, true};
    std::size_t f = 0;
    while (f < perm.size() && !std::next_permutation(perm[f].begin(), perm[f].end())) ++f;
    if (f == perm.size()) return {true, false};
  }
}

}  // namespace oracle
