#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gpd/functor.hpp"
#include "gpd/groupoid.hpp"

namespace gpd {

enum class Variance { Covariant, Contravariant };

/// An element of a fibered set: the local index inside the fiber over `object`.
struct ElementRef {
  Obj object = 0;
  std::uint32_t index = 0;

  friend bool operator==(const ElementRef&, const ElementRef&) = default;
};

/// Unvalidated G-set data. For a covariant (left) G-set `action[g]` maps the
/// fiber over source(g) to the fiber over target(g); for a contravariant
/// (right) one it maps target(g) to source(g).
struct RawGSet {
  GroupoidPtr base;
  Variance variance = Variance::Covariant;
  std::vector<std::uint32_t> fibers;
  std::vector<std::vector<std::uint32_t>> action;
};

/// A set-valued functor on a groupoid (left G-set) or on its opposite
/// (right G-set). Elements carry global indices, fiber by fiber in object
/// order.
class GSet {
 public:
  static GSet trusted(RawGSet raw);

  const GroupoidPtr& base() const noexcept { return data_.base; }
  Variance variance() const noexcept { return data_.variance; }
  std::uint32_t fiber_size(Obj o) const { return data_.fibers[o]; }
  const std::vector<std::uint32_t>& fibers() const noexcept { return data_.fibers; }
  std::size_t size() const noexcept { return owner_.size(); }

  std::uint32_t global(Obj o, std::uint32_t x) const { return offset_[o] + x; }
  ElementRef locate(std::uint32_t global) const {
    return {owner_[global], global - offset_[owner_[global]]};
  }

  Obj domain(Mor g) const {
    return data_.variance == Variance::Covariant ? data_.base->source(g) : data_.base->target(g);
  }
  Obj codomain(Mor g) const {
    return data_.variance == Variance::Covariant ? data_.base->target(g) : data_.base->source(g);
  }
  std::uint32_t act(Mor g, std::uint32_t x) const { return data_.action[g][x]; }
  const std::vector<std::uint32_t>& action(Mor g) const { return data_.action[g]; }
  const RawGSet& raw() const noexcept { return data_; }

  /// A right G-set as a left G^op-set over `opposite_base` (which must be
  /// opposite(base())); the action tables are shared verbatim.
  GSet covariant_view(GroupoidPtr opposite_base) const;

 private:
  RawGSet data_;
  std::vector<std::uint32_t> offset_;
  std::vector<Obj> owner_;
};

/// Throws Error(NotFunctorial) when an action value is not a bijection of the
/// right fibers, identities act nontrivially, or composites are not respected.
GSet validate_gset(RawGSet raw);

/// Natural map between G-sets over the same base: global element -> global element.
struct GSetMap {
  std::vector<std::uint32_t> images;
};

/// Throws Error(NotNatural).
void check_gset_map(const GSet& source, const GSet& target, const GSetMap& map);
bool is_bijective(const GSetMap& map, const GSet& target);

/// Orbit set G\T; works for either variance.
struct Orbits {
  std::vector<std::uint32_t> class_of;         // per global element
  std::vector<ElementRef> representatives;     // least element of each class
  std::size_t count() const noexcept { return representatives.size(); }
};

Orbits colimit(const GSet& t);
/// Every fiber here is finite, so the orbit set always is too.
bool is_finite(const GSet& t);

struct FreenessWitness {
  Obj other = 0;    // γ'
  Obj object = 0;   // γ, x lives in the fiber over it
  std::uint32_t element = 0;
  Mor first = 0;    // two distinct morphisms with the same image of x
  Mor second = 0;
};

/// Either free, or the first collision in (γ', γ, x) order.
struct FreenessVerdict {
  bool free = true;
  std::optional<FreenessWitness> witness;
  explicit operator bool() const noexcept { return free; }
};

FreenessVerdict is_free(const GSet& t);
/// Builds σ(g, x) = (x, gx) over all composable (g, x) and checks injectivity.
bool shear_is_injective(const GSet& t);

/// G(γ0, -), acting by post-composition; the element at γ is hom_position.
GSet corepresentable(const GroupoidPtr& g, Obj gamma0);

GSet coproduct(const GSet& a, const GSet& b);

/// T ≅ ⊔_i G(γ_i, -) with one generator per orbit (the least element).
struct FreeDecomposition {
  std::vector<ElementRef> generators;
  GSet coproduct;   // ⊔_i G(γ_i, -)
  GSetMap iso;      // (i, f) ↦ f·x_i
};

/// Throws Error(NotFree).
FreeDecomposition decompose_free(const GSet& t);

struct Coequalizer {
  GSet quotient;
  GSetMap projection;
};

/// Fiberwise set coequalizer of u, v : X -> Y with the induced action.
Coequalizer coequalizer(const GSet& x, const GSet& y, const GSetMap& u, const GSetMap& v);

/// Objects are the global elements; morphism (g, x) : x -> gx sits at
/// index base(x) + out_position(g).
struct TranslationGroupoid {
  GroupoidPtr groupoid;
  Functor projection;
  std::vector<std::uint32_t> base;  // per element: its first morphism

  Mor arrow(std::uint32_t x, std::uint32_t out_position) const { return base[x] + out_position; }
};

/// Covariant input.
TranslationGroupoid translation_groupoid(const GSet& t);

struct CoverVerdict {
  bool covering = true;
  Obj object = 0;    // η' where unique lifting fails
  Mor morphism = 0;  // g : p(η') -> γ
  std::size_t lifts = 0;
  explicit operator bool() const noexcept { return covering; }
};

CoverVerdict is_covering_map(const Functor& p);
/// X_γ = p⁻¹(γ) in object order; throws Error(NotACover).
GSet gset_from_cover(const Functor& p);
/// The isomorphism H -> G·gset_from_cover(p) over G.
Functor cover_comparison(const Functor& p);

/// S ×_G T = ⊔_γ S^γ × T_γ / (sg, t) ~ (s, gt), for S contravariant and T
/// covariant over the same base. Classes are numbered by least pair, pairs
/// enumerated by (γ, s, t).
struct Coend {
  std::vector<std::uint32_t> block;     // per γ: first pair index
  std::vector<std::uint32_t> width;     // per γ: |T_γ|
  std::vector<std::uint32_t> class_of;  // per pair
  struct Rep {
    Obj object;
    std::uint32_t right;  // s ∈ S^γ
    std::uint32_t left;   // t ∈ T_γ
  };
  std::vector<Rep> reps;

  std::size_t size() const noexcept { return reps.size(); }
  std::uint32_t in(Obj gamma, std::uint32_t s, std::uint32_t t) const {
    return class_of[block[gamma] + s * width[gamma] + t];
  }
};

Coend coend(const GSet& right, const GSet& left);

[[noreturn]] void throw_ill_defined();

/// The map on classes induced by a map on pairs. `image(γ, s, t)` returns
/// the target class. With GPD_CHECKED every pair of a class is visited and
/// must agree (Error(IllDefined) otherwise); without it only the
/// representatives are.
template <typename F>
std::vector<std::uint32_t> induced_on_classes(const Coend& from, F&& image);
/// The action-language name for the coend.
inline Coend balanced_product(const GSet& right, const GSet& left) { return coend(right, left); }

template <typename F>
std::vector<std::uint32_t> induced_on_classes(const Coend& from, F&& image) {
  std::vector<std::uint32_t> table(from.size(), kNone);
#if GPD_CHECKED
  for (Obj o = 0; o + 1 < from.block.size(); ++o) {
    const std::uint32_t w = from.width[o];
    const std::uint32_t pairs = from.block[o + 1] - from.block[o];
    for (std::uint32_t p = 0; p < pairs; ++p) {
      const std::uint32_t cls = from.in(o, p / w, p % w);
      const std::uint32_t img = image(o, p / w, p % w);
      if (table[cls] == kNone) {
        table[cls] = img;
      } else if (table[cls] != img) {
        throw_ill_defined();
      }
    }
  }
#else
  for (std::uint32_t c = 0; c < from.size(); ++c) {
    const auto& r = from.reps[c];
    table[c] = image(r.object, r.right, r.left);
  }
#endif
  return table;
}

}  // namespace gpd
