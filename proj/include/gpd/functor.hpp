#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpd/groupoid.hpp"

namespace gpd {

struct Functor {
  GroupoidPtr source;
  GroupoidPtr target;
  std::vector<Obj> objects;
  std::vector<Mor> morphisms;

  Obj obj(Obj o) const { return objects[o]; }
  Mor mor(Mor f) const { return morphisms[f]; }
};

/// Pointer identity or structural equality.
bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b);
bool operator==(const Functor& a, const Functor& b);

/// Checks endpoints, identities and every composable pair; throws
/// Error(NotAFunctor) naming the first broken square.
Functor validate_functor(GroupoidPtr source, GroupoidPtr target, std::vector<Obj> objects,
                         std::vector<Mor> morphisms);
/// Throws Error(NotAFunctor) when the functor laws fail.
void check_functor(const Functor& f);

Functor identity_functor(GroupoidPtr g);
/// The functor from the one-object trivial groupoid picking out `o`.
Functor point_functor(GroupoidPtr target, Obj o);
/// second∘first.
Functor compose_functors(const Functor& second, const Functor& first);
/// Bijective on objects and on morphisms.
bool is_isomorphism(const Functor& f);

/// components[o] : from(o) -> to(o).
struct NatTrans {
  Functor from;
  Functor to;
  std::vector<Mor> components;
};

NatTrans validate_nat_trans(Functor from, Functor to, std::vector<Mor> components);
/// Throws Error(NotNatural).
void check_nat_trans(const NatTrans& a);

NatTrans identity_nat_trans(const Functor& f);
/// Vertical composite second∘first.
NatTrans compose_nat_trans(const NatTrans& second, const NatTrans& first);
NatTrans inverse_nat_trans(const NatTrans& a);
/// outer∘α : outer∘F -> outer∘F'.
NatTrans whisker_left(const Functor& outer, const NatTrans& alpha);
/// α_inner : F∘inner -> F'∘inner.
NatTrans whisker_right(const NatTrans& alpha, const Functor& inner);
/// Horizontal composite β∗α : K∘F -> K'∘F' for α: F -> F', β: K -> K'.
NatTrans horizontal_compose(const NatTrans& beta, const NatTrans& alpha);

bool operator==(const NatTrans& a, const NatTrans& b);

/// Outcome of an equivalence check. On success carries a quasi-inverse Q
/// with unit id -> Q∘F and counit F∘Q -> id.
struct EquivalenceVerdict {
  bool equivalence = false;
  std::string failure;
  std::optional<Functor> quasi_inverse;
  std::optional<NatTrans> unit;
  std::optional<NatTrans> counit;

  explicit operator bool() const noexcept { return equivalence; }
};

EquivalenceVerdict is_equivalence(const Functor& f);

/// G' ⊔ G'' with objects and morphisms of G' first, and both inclusions.
struct Coproduct {
  GroupoidPtr sum;
  Functor in1;
  Functor in2;
};

Coproduct disjoint_union(const GroupoidPtr& first, const GroupoidPtr& second);

}  // namespace gpd
