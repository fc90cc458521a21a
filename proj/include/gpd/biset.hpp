#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gpd/functor.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/gset.hpp"

namespace gpd {

/// An element of a bi-set: local index inside the fiber X^η_γ.
struct BiElement {
  Obj eta = 0;
  Obj gamma = 0;
  std::uint32_t index = 0;

  friend bool operator==(const BiElement&, const BiElement&) = default;
};

/// Unvalidated (H, G)-bi-set data, H acting on the right and G on the left.
///
/// `fibers[η·|G_0| + γ]` is |X^η_γ|. `lact[g·|H_0| + η]` maps X^η_{source g}
/// to X^η_{target g}; `ract[h·|G_0| + γ]` maps X^{target h}_γ to
/// X^{source h}_γ.
struct RawBiSet {
  GroupoidPtr source;  // H
  GroupoidPtr target;  // G
  std::vector<std::uint32_t> fibers;
  std::vector<std::vector<std::uint32_t>> lact;
  std::vector<std::vector<std::uint32_t>> ract;
};

/// A functor H^op × G -> Set. Global element indices run fiber by fiber
/// in (η, γ) order.
class BiSet {
 public:
  BiSet() = default;
  static BiSet trusted(RawBiSet raw, bool admissible);

  const GroupoidPtr& source() const noexcept { return data_.source; }
  const GroupoidPtr& target() const noexcept { return data_.target; }
  std::size_t source_objects() const noexcept { return data_.source->num_objects(); }
  std::size_t target_objects() const noexcept { return data_.target->num_objects(); }
  bool admissible() const noexcept { return admissible_; }

  std::uint32_t fiber_index(Obj eta, Obj gamma) const {
    return static_cast<std::uint32_t>(eta * target_objects() + gamma);
  }
  std::uint32_t fiber_size(Obj eta, Obj gamma) const { return data_.fibers[fiber_index(eta, gamma)]; }
  const std::vector<std::uint32_t>& fibers() const noexcept { return data_.fibers; }
  std::size_t size() const noexcept { return owner_.size(); }

  std::uint32_t global(Obj eta, Obj gamma, std::uint32_t x) const {
    return offset_[fiber_index(eta, gamma)] + x;
  }
  BiElement locate(std::uint32_t global) const;

  /// g·x for x ∈ X^η_{source g}.
  std::uint32_t lact(Mor g, Obj eta, std::uint32_t x) const {
    return data_.lact[g * source_objects() + eta][x];
  }
  /// x·h for x ∈ X^{target h}_γ.
  std::uint32_t ract(Mor h, Obj gamma, std::uint32_t x) const {
    return data_.ract[h * target_objects() + gamma][x];
  }
  /// Global versions.
  std::uint32_t lact_global(Mor g, std::uint32_t x) const;
  std::uint32_t ract_global(Mor h, std::uint32_t x) const;

  /// The column X^η as a left G-set and the row X_γ as a right H-set.
  GSet column(Obj eta) const;
  GSet row(Obj gamma) const;

  const RawBiSet& raw() const noexcept { return data_; }

 private:
  RawBiSet data_;
  bool admissible_ = false;
  std::vector<std::uint32_t> offset_;
  std::vector<std::uint32_t> owner_;  // global element -> fiber index
};

enum class Admissibility { Require, Compute };

/// Checks both actions (NotBifunctorial) and their commutation, then
/// admissibility of every column. With Require a non-free column throws
/// Error(NotAdmissible) naming η and the freeness witness.
BiSet validate_biset(RawBiSet raw, Admissibility policy = Admissibility::Require);

/// Same bases (structurally) on both sides.
bool same_bases(const BiSet& a, const BiSet& b);
/// Same bases and identical tables.
bool operator==(const BiSet& a, const BiSet& b);
/// Recomputes admissibility from the columns.
bool columns_free(const BiSet& x);

/// Global element -> global element.
struct BiSetMap {
  std::vector<std::uint32_t> images;
  friend bool operator==(const BiSetMap&, const BiSetMap&) = default;
};

/// Throws Error(NotNatural) unless `map` is fiber preserving and
/// equivariant for both actions.
void check_biset_map(const BiSet& source, const BiSet& target, const BiSetMap& map);

struct BiSetIso {
  BiSet source;
  BiSet target;
  BiSetMap map;
};

/// Naturality plus bijectivity; throws Error(NotNatural).
void check_biset_iso(const BiSetIso& iso);
BiSetIso identity_iso(const BiSet& x);
/// second∘first; throws Error(NotComposable) when the middle bi-sets differ.
BiSetIso compose_isos(const BiSetIso& second, const BiSetIso& first);
BiSetIso inverse_iso(const BiSetIso& iso);

/// X ×_G Y together with the coend used for every fiber, so that maps into
/// and out of the composite can address classes.
/// `coends[η·|F_0| + φ]` computes X_φ ×_G Y^η; class numbers are the local
/// element indices of the fiber (η, φ).
struct BiSetComposite {
  BiSet biset;
  std::vector<Coend> coends;

  const Coend& at(Obj eta, Obj phi) const { return coends[biset.fiber_index(eta, phi)]; }
};

/// For X ∈ B(G, F) and Y ∈ B(H, G). Throws Error(BaseMismatch) or
/// Error(NotAdmissible).
BiSetComposite compose_with_classes(const BiSet& x, const BiSet& y);
inline BiSet compose_bisets(const BiSet& x, const BiSet& y) { return compose_with_classes(x, y).biset; }

/// (1_G)^{γ'}_γ = G(γ', γ); local index = hom_position.
BiSet identity_biset(const GroupoidPtr& g);

/// ρ : X ×_G 1_G -> X, (x, g) ↦ xg.
BiSetIso unitor_right(const BiSet& x);
/// λ : 1_G ×_G Y -> Y, (g, y) ↦ gy.
BiSetIso unitor_left(const BiSet& y);
/// X ×_G (Y ×_H Z) -> (X ×_G Y) ×_H Z.
BiSetIso associator(const BiSet& x, const BiSet& y, const BiSet& z);

/// Horizontal composite of isos, [x, y] ↦ [f x, g y].
BiSetIso horizontal(const BiSetIso& f, const BiSetIso& g);

/// Fiberwise disjoint union, elements of `a` first.
BiSet tensor(const BiSet& a, const BiSet& b);
/// a ⊔ b -> b ⊔ a.
BiSetIso tensor_swap(const BiSet& a, const BiSet& b);

/// S(q)^η_γ = G(qη, γ); local index = hom_position.
BiSet s_of_functor(const Functor& q);
/// For α : q' -> q, the bi-set iso S(q) -> S(q'), x ↦ x∘α_η.
BiSetIso s_of_nattrans(const NatTrans& alpha);

/// Z restricted along f on the left-acting side: fibers Z^η_{fγ}.
BiSet restrict_target(const BiSet& z, const Functor& f);
/// W restricted along f on the right-acting side: fibers W^{fη}_γ.
BiSet restrict_source(const BiSet& w, const Functor& f);

/// Orbits of the combined action; equivalently the components of the
/// double translation groupoid. Labels are numbered by least element.
struct BiOrbits {
  std::vector<std::uint32_t> class_of;         // per global element
  std::vector<std::uint32_t> representatives;  // least global element per class
  std::size_t count() const noexcept { return representatives.size(); }
};

BiOrbits biset_orbits(const BiSet& x);
/// The orbit summands in label order; their tensor is X.
std::vector<BiSet> orbit_summands(const BiSet& x);

/// A natural bijection X -> X' if one exists. Complete: components are
/// matched by fiber-size vectors and each candidate match is decided by
/// propagating from a base point.
std::optional<BiSetMap> find_isomorphism(const BiSet& a, const BiSet& b);

}  // namespace gpd
