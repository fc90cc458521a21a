#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gpd/biset.hpp"
#include "gpd/functor.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/groups.hpp"
#include "gpd/gset.hpp"
#include "gpd/span.hpp"

namespace gpd {

using Rng = std::mt19937_64;

/// Seed of case `index` in a run seeded with `seed` (splitmix64).
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

std::uint32_t uniform(Rng& rng, std::uint32_t lo, std::uint32_t hi);  // inclusive

/// One of C1..C6, V4, S3 with order ≤ max_order.
FiniteGroup random_group(Rng& rng, std::uint32_t max_order);

/// Disjoint union of connected components, at least one object.
GroupoidPtr random_groupoid(Rng& rng, std::uint32_t max_objects, std::uint32_t max_morphisms);

/// The same groupoid with objects permuted; `to` maps the original onto it.
struct Relabeling {
  GroupoidPtr groupoid;
  Functor to;
  Functor from;
};

Relabeling relabel_objects(const GroupoidPtr& g, const std::vector<Obj>& perm);
std::vector<std::uint32_t> random_permutation(Rng& rng, std::size_t n);

/// Sum of orbits G(γ0, -)/K; free orbits only when `free_only`.
GSet random_gset(Rng& rng, const GroupoidPtr& base, std::uint32_t max_orbits, bool free_only);

/// One orbit of a bi-set: base point fiber and stabilizer in
/// Aut(γ0) × Aut(η0), as accepted by transitive_biset.
struct OrbitSpec {
  Obj eta0 = 0;
  Obj gamma0 = 0;
  std::vector<std::uint32_t> subgroup;
};

std::vector<OrbitSpec> random_orbit_specs(Rng& rng, const Groupoid& source, const Groupoid& target,
                                          std::uint32_t max_orbits, bool admissible);
BiSet build_biset(const GroupoidPtr& source, const GroupoidPtr& target, const std::vector<OrbitSpec>& specs);
/// One stabilizer replaced by a different subgroup of the same order (fiber
/// sizes are unchanged); nullopt when no orbit admits one.
std::optional<std::vector<OrbitSpec>> near_miss(Rng& rng, const Groupoid& source, const Groupoid& target,
                                                std::vector<OrbitSpec> specs, bool admissible);

BiSet random_biset(Rng& rng, const GroupoidPtr& source, const GroupoidPtr& target, std::uint32_t max_orbits,
                   bool admissible = true);
/// Permutes elements inside every fiber; the iso runs from x to the result.
BiSetIso twist(Rng& rng, const BiSet& x);

/// Per component of K: a random homomorphism of vertex groups, moved around
/// by random connecting morphisms. `faithful` draws injective ones only and
/// returns nullopt when none exists.
std::optional<Functor> random_functor(Rng& rng, const GroupoidPtr& k, const GroupoidPtr& g, bool faithful = false);

/// H <-q- K -p-> G with K a sum of connected groupoids on subgroups of the
/// vertex groups of H and q faithful.
Span random_span(Rng& rng, const GroupoidPtr& source, const GroupoidPtr& target, std::uint32_t max_components);

/// A covering functor onto `base`: the projection of a random G-set's
/// translation groupoid with its objects shuffled.
Functor random_cover(Rng& rng, const GroupoidPtr& base, std::uint32_t max_orbits);

}  // namespace gpd
