#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gpd/biset.hpp"
#include "gpd/functor.hpp"
#include "gpd/groupoid.hpp"

namespace gpd {

/// The orbit summands of X, i.e. the components of GXH.
std::vector<BiSet> indecomposables(const BiSet& x);

/// Isomorphism class of a bi-set over fixed bases.
///
/// Each orbit is encoded by a breadth-first labeling started at every
/// element of its lowest nonempty fiber, generators taken as out(γ) acting
/// on the left and then in(η) acting on the right; the least serialization
/// wins. The code is the sorted list of orbit codes, each prefixed by its
/// byte length. All integers are big-endian uint32.
struct BisetClass {
  std::string code;
  std::vector<std::uint32_t> size_vector;  // per (η, γ) fiber

  friend bool operator==(const BisetClass&, const BisetClass&) = default;
};

BisetClass canonical_form(const BiSet& x);
/// Code of a single orbit, starting from the global element list `orbit`.
std::string orbit_code(const BiSet& x, const std::vector<std::uint32_t>& orbit);
/// Splits a class code into its orbit codes.
std::vector<std::string> split_code(const std::string& code);
/// Rebuilds a bi-set from an orbit code or a class code; throws
/// Error(Malformed) on codes that do not describe a bi-set over H, G.
BiSet decode_orbit(const std::string& code, const GroupoidPtr& source, const GroupoidPtr& target);
BiSet decode_class(const std::string& code, const GroupoidPtr& source, const GroupoidPtr& target);
/// FNV-1a of the code, 16 hex digits.
std::string code_hash(const std::string& code);

BiSet empty_biset(const GroupoidPtr& source, const GroupoidPtr& target);

/// Formal integer combination of indecomposable classes (orbit codes).
struct BurnsideElement {
  GroupoidPtr source;
  GroupoidPtr target;
  std::map<std::string, std::int64_t> coefficients;  // no zero entries

  bool is_zero() const noexcept { return coefficients.empty(); }
};

bool operator==(const BurnsideElement& a, const BurnsideElement& b);

BurnsideElement zero_element(const GroupoidPtr& source, const GroupoidPtr& target);
/// Throws Error(NotAdmissible).
BurnsideElement hom_monoid_element(const BiSet& x);
/// Throws Error(BaseMismatch).
BurnsideElement add(const BurnsideElement& a, const BurnsideElement& b);
BurnsideElement negate(const BurnsideElement& a);
BurnsideElement subtract(const BurnsideElement& a, const BurnsideElement& b);
BurnsideElement scale(const BurnsideElement& a, std::int64_t k);
/// For a ∈ B(G, F), b ∈ B(H, G): Σ a_i b_j [X_i ×_G Y_j]. Throws
/// Error(BaseMismatch).
BurnsideElement compose_elements(const BurnsideElement& a, const BurnsideElement& b);
/// "0", or terms like "2*[hash] - [hash]" in code order.
std::string to_string(const BurnsideElement& a);

/// The transitive bi-set G(γ0, -) × H(-, η0) / S for S ≤ Aut(γ0) × Aut(η0),
/// with (a, b) ~ (a∘s, t⁻¹∘b). `subgroup` lists elements of
/// direct_product(vertex_group(G, γ0), vertex_group(H, η0)).
BiSet transitive_biset(const GroupoidPtr& source, const GroupoidPtr& target, Obj eta0, Obj gamma0,
                       const std::vector<std::uint32_t>& subgroup);

/// Admissible indecomposable classes of B(H, G) with total size ≤ bound,
/// sorted by code.
std::vector<BisetClass> burnside_group(const GroupoidPtr& source, const GroupoidPtr& target,
                                       std::size_t bound);

/// X(i) = S(in_i) ∈ B(G_i, G'⊔G'') and Y(i) ∈ B(G'⊔G'', G_i) with
/// Y(i)^σ_γ = G_i(γ_i, γ) when σ = in_i(γ_i) and empty otherwise.
struct Additivity {
  Coproduct sum;
  BiSet x1, x2;
  BiSet y1, y2;
};

Additivity additivity_witnesses(const GroupoidPtr& first, const GroupoidPtr& second);

struct AdditivityVerdict {
  bool holds = true;
  std::string failure;
  explicit operator bool() const noexcept { return holds; }
};

/// Y(i) ×_{G'⊔G''} X(i) ≅ 1_{G_i}.
AdditivityVerdict check_additivity_units(const Additivity& a);
/// Y(i) ×_{G'⊔G''} Z ≅ Z(i) for Z ∈ B(K, G'⊔G'').
AdditivityVerdict check_recovery(const Additivity& a, const BiSet& z);
/// W ≅ (W ×X(1)) ×Y(1) ⊔ (W ×X(2)) ×Y(2) for W ∈ B(G'⊔G'', K).
AdditivityVerdict check_splitting(const Additivity& a, const BiSet& w);

}  // namespace gpd
