#pragma once

#include <cstdint>
#include <vector>

#include "gpd/biset.hpp"
#include "gpd/functor.hpp"
#include "gpd/gset.hpp"
#include "gpd/span.hpp"

namespace gpd {

/// The double translation groupoid GXH of an (H, G)-bi-set.
///
/// Objects are the global elements of X. The morphisms out of x̄ ∈ X^η̄_γ̄ are
/// the pairs (g ∈ out(γ̄), h ∈ out(η̄)), with target (g x̄)·h⁻¹, at index
/// base(x̄) + out_position(g)·|out(η̄)| + out_position(h). Composition is
/// (g'g, h'h).
struct DoubleTranslation {
  BiSet biset;
  GroupoidPtr groupoid;
  Functor p;  // to G
  Functor q;  // to H
  std::vector<std::uint32_t> base;

  Mor arrow(std::uint32_t from, Mor g, Mor h) const;
};

DoubleTranslation double_translation(const BiSet& x);

/// H <-q- GXH -p-> G. The cover condition is re-verified.
Span span_of(const DoubleTranslation& d);
/// Throws Error(NotAdmissible).
Span biset_to_span(const BiSet& x);

/// f : X' -> X induces GX'H -> GXH, (γ, x', η) ↦ (γ, fx', η), with
/// identity transformations.
SpanMorphism functoriality_on_morphisms(const BiSetIso& f);

/// X^η_γ = G(p(-), γ) ×_K H(η, q(-)) for a span H <-q- K -p-> G.
///
/// `coends[η·|G_0| + γ]` computes the fiber; pairs are indexed by hom
/// positions. `rows[γ]` is the right K-set G(p(-), γ) and `columns[η]` the
/// left K-set H(η, q(-)).
struct SpanBiSet {
  BiSet biset;
  std::vector<Coend> coends;
  std::vector<GSet> rows;
  std::vector<GSet> columns;

  const Coend& at(Obj eta, Obj gamma) const { return coends[biset.fiber_index(eta, gamma)]; }
};

SpanBiSet span_to_biset_with_classes(const Span& a);
inline BiSet span_to_biset(const Span& a) { return span_to_biset_with_classes(a).biset; }

/// The map induced by in_{tκ'}∘(θ_{κ'}⁻¹ × φ_{κ'}); Error(IllDefined) if the
/// pairwise images disagree on a class (GPD_CHECKED builds only).
struct BiSetMorphism {
  BiSet source;
  BiSet target;
  BiSetMap map;
};

BiSetMorphism span_morphism_to_biset_map(const SpanMorphism& m);

/// β : span_to_biset(biset_to_span(X)) -> X, (g, x, h) ↦ gxh.
BiSetIso beta_iso(const BiSet& x);

/// α : K -> GXH for X = span_to_biset(A), κ ↦ (pκ, [1, κ, 1], qκ),
/// k ↦ (pk, qk), together with the equivalence verdict for α.
struct AlphaEquivalence {
  SpanMorphism morphism;
  EquivalenceVerdict verdict;
};

AlphaEquivalence alpha_equivalence(const Span& a);

/// φ : (GXH) ×_H (HYK) -> G(X ×_H Y)K for X ∈ B(H, G), Y ∈ B(K, H), with
/// ((γ, x, η), h, (η', y, κ)) ↦ (γ, [xh, y], κ) and (g, ĥ, h', k) ↦ (g, k).
struct PhiEquivalence {
  SpanMorphism morphism;
  EquivalenceVerdict verdict;
};

/// Throws Error(BaseMismatch) or Error(NotAdmissible).
PhiEquivalence phi_equivalence(const BiSet& x, const BiSet& y);

/// A strict functor H^op -> Groupoids: one groupoid per object and, for
/// h : η' -> η, a functor F(h) : F^η -> F^{η'}.
struct GroupoidDiagram {
  GroupoidPtr base;
  std::vector<GroupoidPtr> fibers;
  std::vector<Functor> maps;
};

/// Throws Error(NotFunctorial) unless F(1) = 1 and F(h∘h') = F(h')∘F(h)
/// hold exactly and every F(h) is a functor between the right fibers.
void check_diagram(const GroupoidDiagram& d);

/// The total groupoid FH. Objects (η, φ) sit at start(η) + φ. The morphisms
/// out of (η', φ') are (h, f) with h ∈ out(η'), f ∈ out(φ') in F^{η'}; the
/// target is (target h, F(h)⁻¹(target f)). Composition is
/// (h₂h, F(h)(f₂)∘f).
struct Grothendieck {
  GroupoidPtr total;
  Functor projection;
  GroupoidDiagram diagram;
  std::vector<std::uint32_t> start;  // per η
  std::vector<Obj> eta_of;           // per object
  std::vector<std::uint32_t> base;   // per object: first morphism

  Mor arrow(Obj from, Mor h, Mor f) const;
};

/// Validates the diagram first.
Grothendieck grothendieck(const GroupoidDiagram& d);

/// F^{η0} -> FH ×_H *, φ ↦ (η0, φ, 1), f ↦ (1, f), with the fiber it lands in.
struct FiberComparison {
  Pullback fiber;
  Functor functor;
};

FiberComparison fiber_comparison(const Grothendieck& g, Obj eta0);

/// η ↦ GX^η, h ↦ (x ↦ xh); the Grothendieck construction is GXH up to
/// reindexing.
GroupoidDiagram translation_diagram(const BiSet& x);

/// colim_G X^{η0}, π0(GX^{η0}) and π0(GXH ×_H *) through three separate
/// constructions.
struct Pi0Chain {
  std::size_t colimit = 0;
  std::size_t translation = 0;
  std::size_t homotopy_fiber = 0;

  bool agrees() const noexcept { return colimit == translation && translation == homotopy_fiber; }
};

Pi0Chain pi0_chain(const BiSet& x, Obj eta0);

}  // namespace gpd
