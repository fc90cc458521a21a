#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gpd {

using Obj = std::uint32_t;
using Mor = std::uint32_t;

inline constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

class Groupoid;
using GroupoidPtr = std::shared_ptr<const Groupoid>;

/// Unvalidated groupoid tables, as read from a `%GRPD 1` file.
struct RawGroupoid {
  struct Arrow {
    std::string name;
    Obj source = 0;
    Obj target = 0;
  };
  struct Composite {
    Mor g = 0;
    Mor f = 0;
    Mor gf = 0;
  };

  std::size_t objects = 0;
  std::vector<Arrow> morphisms;
  std::vector<std::pair<Obj, Mor>> identities;
  std::vector<Composite> composites;
};

/// A finite groupoid stored as explicit tables over dense object and
/// morphism indices. Immutable once built.
///
/// `compose(g, f)` is g∘f, i.e. f first. The composition table only holds
/// composable pairs: for each g it stores one entry per morphism into
/// source(g).
class Groupoid {
 public:
  Groupoid() = default;

  std::size_t num_objects() const noexcept { return identity_.size(); }
  std::size_t num_morphisms() const noexcept { return source_.size(); }

  Obj source(Mor f) const { return source_[f]; }
  Obj target(Mor f) const { return target_[f]; }
  Mor identity(Obj o) const { return identity_[o]; }
  Mor inverse(Mor f) const { return inverse_[f]; }
  bool is_identity(Mor f) const { return identity_[source_[f]] == f; }

  Mor compose(Mor g, Mor f) const { return table_[table_offset_[g] + in_position_[f]]; }

  /// Morphisms with the given source, ordered by (target, index).
  std::span<const Mor> out(Obj o) const {
    return {out_list_.data() + out_start_[o], out_list_.data() + out_start_[o + 1]};
  }
  /// Morphisms with the given target, ordered by index.
  std::span<const Mor> in(Obj o) const {
    return {in_list_.data() + in_start_[o], in_list_.data() + in_start_[o + 1]};
  }
  /// Morphisms a -> b, ordered by index.
  std::span<const Mor> hom(Obj a, Obj b) const;

  /// Position of f inside out(source(f)).
  std::uint32_t out_position(Mor f) const { return out_position_[f]; }
  /// Position of f inside hom(source(f), target(f)).
  std::uint32_t hom_position(Mor f) const { return hom_position_[f]; }

  /// Morphism name from the input file, or "m<index>".
  std::string name(Mor f) const;
  bool has_names() const noexcept { return !names_.empty(); }

  /// Structural equality; names are ignored.
  friend bool operator==(const Groupoid& a, const Groupoid& b);

 private:
  friend class GroupoidBuilder;

  std::vector<Obj> source_, target_;
  std::vector<Mor> identity_, inverse_;
  std::vector<std::uint32_t> out_start_, in_start_;
  std::vector<Mor> out_list_, in_list_;
  std::vector<std::uint32_t> out_position_, in_position_, hom_position_;
  std::vector<std::size_t> table_offset_;
  std::vector<Mor> table_;
  std::vector<std::string> names_;
};

enum class Verify { None, Full };

/// Incremental construction of a Groupoid. Every construction in the
/// library goes through here.
class GroupoidBuilder {
 public:
  explicit GroupoidBuilder(std::size_t objects);

  Mor add_morphism(Obj source, Obj target, std::string name = {});
  void set_identity(Obj o, Mor f);
  void reserve(std::size_t morphisms);

  /// Fills the table from `compose(g, f)` (kNone marks a missing composite)
  /// and derives inverses. With Verify::Full the unit and associativity
  /// laws are checked exhaustively before inverses are derived. Throws
  /// Error(Malformed) when the table would exceed 2^26 entries.
  Groupoid build(const std::function<Mor(Mor, Mor)>& compose, Verify verify = Verify::None) &&;

 private:
  std::size_t objects_;
  std::vector<Obj> source_, target_;
  std::vector<Mor> identity_;
  std::vector<std::string> names_;
  bool named_ = false;
};

/// Checks the unit and associativity laws and inverse existence; throws
/// Error(NoIdentity | NonAssociative | NoInverse).
void check_groupoid_laws(const Groupoid& g);

Groupoid validate_groupoid(const RawGroupoid& raw);
/// One-object groupoid on a Cayley table (`table[a][b]` is a∘b).
Groupoid from_group(const std::vector<std::vector<std::uint32_t>>& cayley);
Groupoid discrete_groupoid(std::size_t n);
Groupoid opposite(const Groupoid& g);
/// Objects are pairs (η, γ) at η·|G_0| + γ, morphisms (h, g) at h·|G_1| + g.
Groupoid product(const Groupoid& h, const Groupoid& g);

inline GroupoidPtr share(Groupoid g) { return std::make_shared<const Groupoid>(std::move(g)); }

/// Connected components; labels are numbered in order of least object.
struct Components {
  std::vector<std::uint32_t> label;
  std::size_t count = 0;

  std::vector<std::vector<Obj>> classes() const;
};

Components components(const Groupoid& g);

/// True iff there is at most one morphism between any two objects.
bool is_discrete(const Groupoid& g);

}  // namespace gpd
