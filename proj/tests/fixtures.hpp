#pragma once

#include <cstdint>
#include <vector>

#include "gpd/biset.hpp"
#include "gpd/functor.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/groups.hpp"
#include "gpd/gset.hpp"

// Small named groupoids used across the unit tests.
//
// S3 elements are the permutations of {0,1,2} in lexicographic order:
// 0 = 012, 1 = 021, 2 = 102, 3 = 120, 4 = 201, 5 = 210.
namespace fx {

using namespace gpd;

inline GroupoidPtr group(const FiniteGroup& g) { return share(from_group(g.cayley())); }
inline GroupoidPtr trivial() { return group(cyclic_group(1)); }
inline GroupoidPtr c2() { return group(cyclic_group(2)); }
inline GroupoidPtr c3() { return group(cyclic_group(3)); }
inline GroupoidPtr s3() { return group(symmetric_group(3)); }
inline GroupoidPtr empty() { return share(discrete_groupoid(0)); }
inline GroupoidPtr discrete(std::size_t n) { return share(discrete_groupoid(n)); }
/// Two objects joined by a single isomorphism.
inline GroupoidPtr interval() { return share(connected_groupoid(cyclic_group(1), 2)); }

inline constexpr Mor kTransposition = 1;  // 021
inline const std::vector<Mor> kEven{0, 3, 4};

/// C2 -> S3 onto {012, 021}.
inline Functor inclusion(const GroupoidPtr& c2, const GroupoidPtr& s3) {
  return validate_functor(c2, s3, {0}, {0, kTransposition});
}

/// S3 -> C2, the sign.
inline Functor sign(const GroupoidPtr& s3, const GroupoidPtr& c2) {
  std::vector<Mor> m(6, 1);
  for (Mor e : kEven) m[e] = 0;
  return validate_functor(s3, c2, {0}, m);
}

/// The C2-set with one fixed point and one free orbit.
inline GSet mixed_c2_set(const GroupoidPtr& c2) {
  return validate_gset({c2, Variance::Covariant, {3}, {{0, 1, 2}, {0, 2, 1}}});
}

}  // namespace fx
