#pragma once

#include <cstdint>
#include <vector>

#include "gpd/groupoid.hpp"

namespace gpd {

/// A finite group as a multiplication table over 0..order-1.
struct FiniteGroup {
  std::uint32_t order = 1;
  std::uint32_t identity = 0;
  std::vector<std::uint32_t> table{0};  // table[a * order + b] = a·b

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table[a * order + b]; }
  std::uint32_t inverse(std::uint32_t a) const;
  std::vector<std::vector<std::uint32_t>> cayley() const;
};

FiniteGroup cyclic_group(std::uint32_t n);
FiniteGroup klein_group();
/// Permutations of {0,..,n-1} in lexicographic order; composition (a·b)(i) = a(b(i)).
FiniteGroup symmetric_group(std::uint32_t n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Aut(o) of a groupoid; element i of the group is morphism `elements[i]`.
struct VertexGroup {
  FiniteGroup group;
  std::vector<Mor> elements;
  std::vector<std::uint32_t> index_of;  // morphism -> element, kNone off the vertex
};

VertexGroup vertex_group(const Groupoid& g, Obj o);

/// All subgroups, each a sorted element list, found by closing the trivial
/// subgroup under adjoining one element at a time.
std::vector<std::vector<std::uint32_t>> subgroups(const FiniteGroup& g);
std::vector<std::uint32_t> subgroup_closure(const FiniteGroup& g, std::vector<std::uint32_t> gens);

/// Homomorphisms from `a` to `b` as element maps, enumerated by assigning
/// images to a greedy generating set of `a`.
std::vector<std::vector<std::uint32_t>> homomorphisms(const FiniteGroup& a, const FiniteGroup& b);

/// A connected groupoid with `objects` objects and vertex group `g`.
/// Morphism (i, x, j) : i -> j sits at index (i·objects + j)·|g| + x.
Groupoid connected_groupoid(const FiniteGroup& g, std::uint32_t objects);

}  // namespace gpd
