#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpd/functor.hpp"
#include "gpd/groupoid.hpp"

namespace gpd {

/// The bicategorical pullback K ×_G L of m : K -> G and p : L -> G.
///
/// Objects are triples (κ, g : pλ -> mκ, λ) in lexicographic order of
/// (κ, g, λ). The morphisms out of (κ̄, ḡ, λ̄) are all pairs (k, l) with
/// k ∈ out(κ̄), l ∈ out(λ̄); the target is then (κ, mk∘ḡ∘(pl)⁻¹, λ). The pair
/// sits at index base(object) + out_position(k)·|out(λ̄)| + out_position(l).
struct Pullback {
  struct Triple {
    Obj kappa;
    Mor g;
    Obj lambda;
  };

  Functor m;
  Functor p;
  GroupoidPtr apex;
  Functor to_k;
  Functor to_l;
  NatTrans square;  // p∘to_l -> m∘to_k, component g at (κ, g, λ)
  std::vector<Triple> triples;

  /// Object index of (κ, g, λ), or kNone when g : pλ -> mκ fails.
  Obj find(Obj kappa, Mor g, Obj lambda) const;
  /// The morphism (k, l) out of `from`.
  Mor arrow(Obj from, Mor k, Mor l) const;

  // Lookup tables for find(): per κ the first object, per (κ, position of
  // g in in(mκ)) the first object, per λ its position among p⁻¹(pλ).
  std::vector<std::uint32_t> kappa_start;
  std::vector<std::vector<std::uint32_t>> g_start;
  std::vector<std::uint32_t> lambda_position;
  std::vector<std::uint32_t> morphism_base;
};

Pullback pullback(const Functor& m, const Functor& p);

/// Pullback of m along the point γ; the objects are (κ, g : γ -> mκ, *).
Pullback homotopy_fiber(const Functor& m, Obj gamma);

struct WeakCoverVerdict {
  bool cover = true;
  Obj object = 0;          // γ with a non-discrete fiber
  std::size_t components = 0;  // π0 of that fiber
  std::string failure;
  explicit operator bool() const noexcept { return cover; }
};

/// Every homotopy fiber discrete (and finite, which is automatic here).
WeakCoverVerdict is_finite_weak_cover(const Functor& q);

/// H <-q- L -p-> G with q a finite weak cover; an object of C(H, G).
struct Span {
  Functor left;   // q
  Functor right;  // p

  const GroupoidPtr& apex() const { return left.source; }
  const GroupoidPtr& source() const { return left.target; }  // H
  const GroupoidPtr& target() const { return right.target; }  // G
};

/// Checks a common apex and the cover condition; throws
/// Error(NotAFiniteWeakCover) or Error(NotComposable).
Span make_span(Functor left, Functor right);

/// For A ∈ C(G, F) and B ∈ C(H, G): apex K ×_G L of A.left and B.right,
/// left leg B.left∘to_l, right leg A.right∘to_k. The left leg is re-verified.
struct SpanComposite {
  Span span;
  Pullback pullback;
};

SpanComposite compose_spans_with_pullback(const Span& a, const Span& b);
inline Span compose_spans(const Span& a, const Span& b) { return compose_spans_with_pullback(a, b).span; }

/// (t, θ : p' -> p∘t, φ : q' -> q∘t) from `source` = (q', L', p') to
/// `target` = (q, L, p). t need not be invertible.
struct SpanMorphism {
  Span source;
  Span target;
  Functor t;
  NatTrans theta;
  NatTrans phi;
};

/// Throws Error(NotAFunctor | NotNatural | NotComposable).
void check_span_morphism(const SpanMorphism& m);
SpanMorphism identity_span_morphism(const Span& a);
/// second∘first = (t''t', θ''_{t'}∘θ', φ''_{t'}∘φ').
SpanMorphism compose_span_morphisms(const SpanMorphism& second, const SpanMorphism& first);
bool operator==(const SpanMorphism& a, const SpanMorphism& b);
/// (t, 1, 1) for a t under which both legs commute strictly; validated.
SpanMorphism strict_span_morphism(const Span& source, const Span& target, Functor t);
/// A span morphism whose t is an isomorphism of groupoids.
bool is_span_isomorphism(const SpanMorphism& m);

/// ψ : t̄ -> t between parallel span morphisms with pψ∘θ̄ = θ and qψ∘φ̄ = φ.
struct TwoCell {
  SpanMorphism from;
  SpanMorphism to;
  NatTrans psi;
};

/// Throws Error(NotNatural) when either compatibility fails.
void check_two_cell(const TwoCell& c);
TwoCell identity_two_cell(const SpanMorphism& m);
TwoCell compose_two_cells_vertical(const TwoCell& second, const TwoCell& first);
/// The diagonal ψ''∗ψ' : t̄''t̄' -> t''t'.
TwoCell compose_two_cells(const TwoCell& second, const TwoCell& first);

/// H <-1- H -p-> G.
Span s_span(const Functor& p);
/// G <-q- H -1-> H; throws Error(NotAFiniteWeakCover).
Span t_span(const Functor& q);
/// α : p' -> p as (1, α, 1) : S(p') -> S(p).
SpanMorphism s_span_morphism(const NatTrans& alpha);
/// β : q' -> q as (1, 1, β) : T(q') -> T(q).
SpanMorphism t_span_morphism(const NatTrans& beta);

/// A pullback against an identity, its projection back to K, the section
/// s with projection∘s = 1, and the natural isomorphism 1 -> s∘projection.
struct PullbackUnit {
  Pullback pullback;
  Functor projection;
  Functor section;
  NatTrans unit;
};

/// Pullback of n along 1_G: objects (κ, g : γ -> nκ, γ), s(κ) = (κ, 1, nκ),
/// s(k) = (k, nk), unit components (1, g).
PullbackUnit pullback_unit_right(const Functor& n);
/// Pullback of 1_G along m: objects (γ, g : mκ -> γ, κ), s(κ) = (mκ, 1, κ),
/// s(k) = (mk, k), unit components (g⁻¹, 1).
PullbackUnit pullback_unit_left(const Functor& m);

/// For K -m-> G <-p- L -n-> H <-q- M: the isomorphism
/// (K ×_G L) ×_H M -> K ×_G (L ×_H M), ((κ,g,λ),h,μ) ↦ (κ,g,(λ,h,μ)).
struct PullbackAssociator {
  Pullback inner_left;   // K ×_G L
  Pullback outer_left;   // (K ×_G L) ×_H M
  Pullback inner_right;  // L ×_H M
  Pullback outer_right;  // K ×_G (L ×_H M)
  Functor iso;
};

PullbackAssociator pullback_associator(const Functor& m, const Functor& p, const Functor& n,
                                       const Functor& q);

/// The associator (A∘B)∘C -> A∘(B∘C) of the span model, built from the
/// pullback associativity isomorphism; legs commute strictly.
SpanMorphism span_associator(const Span& a, const Span& b, const Span& c);
/// A -> A∘1_G and A -> 1_F∘A through the unit sections; t is an
/// equivalence, not an isomorphism.
SpanMorphism span_unitor_right(const Span& a);
SpanMorphism span_unitor_left(const Span& a);

/// T(q)∘S(p) compared with S(p̄)∘T(q̄) for the pullback F ×_G H.
struct DoubleCosetWitness {
  Span lhs;
  Span rhs;
  Pullback square;        // F ×_G H
  SpanMorphism comparison;  // lhs -> rhs, t(π) = (π, 1, π)
  EquivalenceVerdict verdict;
  std::size_t lhs_components = 0;
  std::size_t rhs_components = 0;
};

/// Throws Error(NotAFiniteWeakCover) when q is not one.
DoubleCosetWitness double_coset_equivalence(const Functor& p, const Functor& q);

}  // namespace gpd
