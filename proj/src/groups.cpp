#include "gpd/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gpd/error.hpp"

namespace gpd {

std::uint32_t FiniteGroup::inverse(std::uint32_t a) const {
  for (std::uint32_t b = 0; b < order; ++b) {
    if (mul(a, b) == identity) return b;
  }
  throw Error(ErrorKind::NotAGroup, "element without inverse");
}

std::vector<std::vector<std::uint32_t>> FiniteGroup::cayley() const {
  std::vector<std::vector<std::uint32_t>> rows(order, std::vector<std::uint32_t>(order));
  for (std::uint32_t a = 0; a < order; ++a) {
    for (std::uint32_t b = 0; b < order; ++b) rows[a][b] = mul(a, b);
  }
  return rows;
}

FiniteGroup cyclic_group(std::uint32_t n) {
  FiniteGroup g;
  g.order = n;
  g.table.resize(n * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) g.table[a * n + b] = (a + b) % n;
  }
  return g;
}

FiniteGroup klein_group() { return direct_product(cyclic_group(2), cyclic_group(2)); }

FiniteGroup symmetric_group(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  FiniteGroup g;
  g.order = static_cast<std::uint32_t>(perms.size());
  g.table.resize(g.order * g.order);
  for (std::uint32_t a = 0; a < g.order; ++a) {
    for (std::uint32_t b = 0; b < g.order; ++b) {
      std::vector<std::uint32_t> c(n);
      for (std::uint32_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      g.table[a * g.order + b] = static_cast<std::uint32_t>(
          std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  g.order = a.order * b.order;
  g.identity = a.identity * b.order + b.identity;
  g.table.resize(g.order * g.order);
  for (std::uint32_t x = 0; x < g.order; ++x) {
    for (std::uint32_t y = 0; y < g.order; ++y) {
      g.table[x * g.order + y] =
          a.mul(x / b.order, y / b.order) * b.order + b.mul(x % b.order, y % b.order);
    }
  }
  return g;
}

VertexGroup vertex_group(const Groupoid& g, Obj o) {
  VertexGroup v;
  const auto autos = g.hom(o, o);
  v.elements.assign(autos.begin(), autos.end());
  v.index_of.assign(g.num_morphisms(), kNone);
  for (std::uint32_t i = 0; i < v.elements.size(); ++i) v.index_of[v.elements[i]] = i;
  v.group.order = static_cast<std::uint32_t>(v.elements.size());
  v.group.identity = v.index_of[g.identity(o)];
  v.group.table.resize(v.group.order * v.group.order);
  for (std::uint32_t a = 0; a < v.group.order; ++a) {
    for (std::uint32_t b = 0; b < v.group.order; ++b) {
      v.group.table[a * v.group.order + b] = v.index_of[g.compose(v.elements[a], v.elements[b])];
    }
  }
  return v;
}

std::vector<std::uint32_t> subgroup_closure(const FiniteGroup& g, std::vector<std::uint32_t> gens) {
  std::vector<bool> in(g.order, false);
  std::vector<std::uint32_t> members{g.identity};
  in[g.identity] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::uint32_t s : gens) {
      const std::uint32_t x = g.mul(members[i], s);
      if (!in[x]) {
        in[x] = true;
        members.push_back(x);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::vector<std::uint32_t>> subgroups(const FiniteGroup& g) {
  std::set<std::vector<std::uint32_t>> found;
  std::vector<std::vector<std::uint32_t>> queue{{g.identity}};
  found.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto current = queue[i];
    for (std::uint32_t x = 0; x < g.order; ++x) {
      if (std::binary_search(current.begin(), current.end(), x)) continue;
      auto gens = current;
      gens.push_back(x);
      auto next = subgroup_closure(g, std::move(gens));
      if (found.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {found.begin(), found.end()};
}

std::vector<std::vector<std::uint32_t>> homomorphisms(const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> span{a.identity};
  for (std::uint32_t x = 0; x < a.order; ++x) {
    if (!std::binary_search(span.begin(), span.end(), x)) {
      gens.push_back(x);
      span = subgroup_closure(a, gens);
    }
  }
  std::vector<std::vector<std::uint32_t>> result;
  std::vector<std::uint32_t> images(gens.size(), 0);
  while (true) {
    std::vector<std::uint32_t> map(a.order, kNone);
    map[a.identity] = b.identity;
    std::vector<std::uint32_t> queue{a.identity};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i) {
      const std::uint32_t u = queue[i];
      for (std::size_t k = 0; k < gens.size() && ok; ++k) {
        const std::uint32_t v = a.mul(u, gens[k]);
        const std::uint32_t img = b.mul(map[u], images[k]);
        if (map[v] == kNone) {
          map[v] = img;
          queue.push_back(v);
        } else {
          ok = map[v] == img;
        }
      }
    }
    for (std::uint32_t x = 0; x < a.order && ok; ++x) {
      for (std::uint32_t y = 0; y < a.order && ok; ++y) {
        ok = map[a.mul(x, y)] == b.mul(map[x], map[y]);
      }
    }
    if (ok) result.push_back(std::move(map));
    std::size_t k = 0;
    while (k < images.size() && ++images[k] == b.order) images[k++] = 0;
    if (k == images.size()) break;
  }
  return result;
}

Groupoid connected_groupoid(const FiniteGroup& g, std::uint32_t objects) {
  const std::uint32_t n = objects;
  const std::uint32_t k = g.order;
  GroupoidBuilder b(n);
  b.reserve(n * n * k);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      for (std::uint32_t x = 0; x < k; ++x) b.add_morphism(i, j);
    }
  }
  for (std::uint32_t i = 0; i < n; ++i) b.set_identity(i, (i * n + i) * k + g.identity);
  return std::move(b).build([&](Mor second, Mor first) {
    const std::uint32_t i = first / k / n;
    const std::uint32_t l = second / k % n;
    return static_cast<Mor>((i * n + l) * k + g.mul(second % k, first % k));
  });
}

}  // namespace gpd
