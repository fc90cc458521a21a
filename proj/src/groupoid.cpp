#include "gpd/groupoid.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gpd/error.hpp"
#include "gpd/union_find.hpp"

namespace gpd {

std::span<const Mor> Groupoid::hom(Obj a, Obj b) const {
  const auto row = out(a);
  const auto lo = std::partition_point(row.begin(), row.end(),
                                       [&](Mor f) { return target_[f] < b; });
  const auto hi = std::partition_point(lo, row.end(), [&](Mor f) { return target_[f] == b; });
  return {lo, hi};
}

std::string Groupoid::name(Mor f) const {
  if (!names_.empty() && !names_[f].empty()) return names_[f];
  return "m" + std::to_string(f);
}

bool operator==(const Groupoid& a, const Groupoid& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.identity_ == b.identity_ &&
         a.table_ == b.table_;
}

GroupoidBuilder::GroupoidBuilder(std::size_t objects)
    : objects_(objects), identity_(objects, kNone) {}

void GroupoidBuilder::reserve(std::size_t morphisms) {
  source_.reserve(morphisms);
  target_.reserve(morphisms);
}

Mor GroupoidBuilder::add_morphism(Obj source, Obj target, std::string name) {
  if (source >= objects_ || target >= objects_) {
    throw Error(ErrorKind::Malformed, "morphism endpoint out of range");
  }
  const auto f = static_cast<Mor>(source_.size());
  source_.push_back(source);
  target_.push_back(target);
  if (!name.empty()) named_ = true;
  names_.push_back(std::move(name));
  return f;
}

void GroupoidBuilder::set_identity(Obj o, Mor f) {
  if (o >= objects_ || f >= source_.size()) {
    throw Error(ErrorKind::Malformed, "identity assignment out of range");
  }
  identity_[o] = f;
}

namespace {

// 256 MiB of Mor entries.
constexpr std::size_t kMaxTableEntries = std::size_t{1} << 26;

void check_unit_and_associativity(const Groupoid& g) {
  for (Obj o = 0; o < g.num_objects(); ++o) {
    const Mor e = g.identity(o);
    for (Mor f : g.in(o)) {
      if (g.compose(e, f) != f) {
        throw Error(ErrorKind::NoIdentity, "identity of object " + std::to_string(o) +
                                               " is not a left unit for morphism " +
                                               std::to_string(f));
      }
    }
    for (Mor f : g.out(o)) {
      if (g.compose(f, e) != f) {
        throw Error(ErrorKind::NoIdentity, "identity of object " + std::to_string(o) +
                                               " is not a right unit for morphism " +
                                               std::to_string(f));
      }
    }
  }
  for (Mor f = 0; f < g.num_morphisms(); ++f) {
    for (Mor gg : g.out(g.target(f))) {
      const Mor gf = g.compose(gg, f);
      for (Mor h : g.out(g.target(gg))) {
        if (g.compose(g.compose(h, gg), f) != g.compose(h, gf)) {
          std::ostringstream os;
          os << "(h∘g)∘f != h∘(g∘f) for h=" << h << " g=" << gg << " f=" << f;
          throw Error(ErrorKind::NonAssociative, os.str());
        }
      }
    }
  }
}

}  // namespace

Groupoid GroupoidBuilder::build(const std::function<Mor(Mor, Mor)>& compose, Verify verify) && {
  Groupoid g;
  const std::size_t n = objects_;
  const std::size_t m = source_.size();
  for (Obj o = 0; o < n; ++o) {
    if (identity_[o] == kNone) {
      throw Error(ErrorKind::NoIdentity, "object " + std::to_string(o) + " has no identity");
    }
    if (source_[identity_[o]] != o || target_[identity_[o]] != o) {
      throw Error(ErrorKind::NoIdentity,
                  "identity of object " + std::to_string(o) + " is not an endomorphism of it");
    }
  }
  g.source_ = std::move(source_);
  g.target_ = std::move(target_);
  g.identity_ = std::move(identity_);
  if (named_) g.names_ = std::move(names_);

  g.out_start_.assign(n + 1, 0);
  g.in_start_.assign(n + 1, 0);
  for (Mor f = 0; f < m; ++f) {
    ++g.out_start_[g.source_[f] + 1];
    ++g.in_start_[g.target_[f] + 1];
  }
  for (std::size_t o = 0; o < n; ++o) {
    g.out_start_[o + 1] += g.out_start_[o];
    g.in_start_[o + 1] += g.in_start_[o];
  }
  g.out_list_.resize(m);
  g.in_list_.resize(m);
  g.out_position_.resize(m);
  g.in_position_.resize(m);
  g.hom_position_.resize(m);
  {
    std::vector<std::uint32_t> out_fill(g.out_start_.begin(), g.out_start_.end() - 1);
    std::vector<std::uint32_t> in_fill(g.in_start_.begin(), g.in_start_.end() - 1);
    for (Mor f = 0; f < m; ++f) {
      g.out_list_[out_fill[g.source_[f]]++] = f;
      g.in_position_[f] = in_fill[g.target_[f]] - g.in_start_[g.target_[f]];
      g.in_list_[in_fill[g.target_[f]]++] = f;
    }
  }
  for (Obj o = 0; o < n; ++o) {
    auto first = g.out_list_.begin() + g.out_start_[o];
    auto last = g.out_list_.begin() + g.out_start_[o + 1];
    std::stable_sort(first, last, [&](Mor a, Mor b) { return g.target_[a] < g.target_[b]; });
    std::uint32_t pos = 0;
    std::uint32_t hom_pos = 0;
    for (auto it = first; it != last; ++it, ++pos) {
      if (it != first && g.target_[*(it - 1)] != g.target_[*it]) hom_pos = 0;
      g.out_position_[*it] = pos;
      g.hom_position_[*it] = hom_pos++;
    }
  }

  g.table_offset_.resize(m);
  std::size_t total = 0;
  for (Mor f = 0; f < m; ++f) {
    g.table_offset_[f] = total;
    total += g.in_start_[g.source_[f] + 1] - g.in_start_[g.source_[f]];
  }
  if (total > kMaxTableEntries) {
    throw Error(ErrorKind::Malformed, "composition table would need " + std::to_string(total) + " entries");
  }
  g.table_.resize(total);
  for (Mor gg = 0; gg < m; ++gg) {
    for (Mor f : g.in(g.source_[gg])) {
      const Mor gf = compose(gg, f);
      if (gf == kNone) {
        throw Error(ErrorKind::MissingComposite, "no composite for g=" + std::to_string(gg) +
                                                     " after f=" + std::to_string(f));
      }
      if (gf >= m || g.source_[gf] != g.source_[f] || g.target_[gf] != g.target_[gg]) {
        throw Error(ErrorKind::Malformed, "composite of g=" + std::to_string(gg) +
                                              " after f=" + std::to_string(f) +
                                              " has wrong endpoints");
      }
      g.table_[g.table_offset_[gg] + g.in_position_[f]] = gf;
    }
  }

  if (verify == Verify::Full) check_unit_and_associativity(g);

  g.inverse_.assign(m, kNone);
  for (Mor f = 0; f < m; ++f) {
    if (g.inverse_[f] != kNone) continue;
    for (Mor h : g.hom(g.target_[f], g.source_[f])) {
      if (g.compose(h, f) == g.identity_[g.source_[f]] &&
          g.compose(f, h) == g.identity_[g.target_[f]]) {
        g.inverse_[f] = h;
        g.inverse_[h] = f;
        break;
      }
    }
    if (g.inverse_[f] == kNone) {
      throw Error(ErrorKind::NoInverse, "morphism " + std::to_string(f) + " has no inverse");
    }
  }
  return g;
}

void check_groupoid_laws(const Groupoid& g) {
  check_unit_and_associativity(g);
  for (Mor f = 0; f < g.num_morphisms(); ++f) {
    const Mor h = g.inverse(f);
    if (g.compose(h, f) != g.identity(g.source(f)) || g.compose(f, h) != g.identity(g.target(f))) {
      throw Error(ErrorKind::NoInverse, "morphism " + std::to_string(f) + " has no inverse");
    }
  }
}

Groupoid validate_groupoid(const RawGroupoid& raw) {
  GroupoidBuilder b(raw.objects);
  std::map<std::string, Mor> seen;
  for (const auto& a : raw.morphisms) {
    if (!a.name.empty() && !seen.emplace(a.name, 0).second) {
      throw Error(ErrorKind::Malformed, "duplicate morphism name '" + a.name + "'");
    }
    b.add_morphism(a.source, a.target, a.name);
  }
  std::vector<bool> has_id(raw.objects, false);
  for (auto [o, f] : raw.identities) {
    if (o < raw.objects && has_id[o]) {
      throw Error(ErrorKind::Malformed, "object " + std::to_string(o) + " has two identities");
    }
    b.set_identity(o, f);
    has_id[o] = true;
  }
  const std::size_t m = raw.morphisms.size();
  std::map<std::pair<Mor, Mor>, Mor> table;
  for (const auto& c : raw.composites) {
    if (c.g >= m || c.f >= m || c.gf >= m) {
      throw Error(ErrorKind::Malformed, "composite entry out of range");
    }
    if (raw.morphisms[c.f].target != raw.morphisms[c.g].source) {
      throw Error(ErrorKind::Malformed, "composite given for non-composable pair g=" +
                                            std::to_string(c.g) + " f=" + std::to_string(c.f));
    }
    auto [it, fresh] = table.emplace(std::pair{c.g, c.f}, c.gf);
    if (!fresh && it->second != c.gf) {
      throw Error(ErrorKind::Malformed, "conflicting composites for g=" + std::to_string(c.g) +
                                            " f=" + std::to_string(c.f));
    }
  }
  return std::move(b).build(
      [&](Mor g, Mor f) {
        auto it = table.find({g, f});
        return it == table.end() ? kNone : it->second;
      },
      Verify::Full);
}

Groupoid from_group(const std::vector<std::vector<std::uint32_t>>& cayley) {
  const std::size_t n = cayley.size();
  if (n == 0) throw Error(ErrorKind::NotAGroup, "empty Cayley table");
  for (const auto& row : cayley) {
    if (row.size() != n) throw Error(ErrorKind::NotAGroup, "Cayley table is not square");
    for (auto v : row) {
      if (v >= n) throw Error(ErrorKind::NotAGroup, "Cayley table entry out of range");
    }
  }
  std::uint32_t e = kNone;
  for (std::uint32_t i = 0; i < n && e == kNone; ++i) {
    bool unit = true;
    for (std::uint32_t j = 0; j < n && unit; ++j) unit = cayley[i][j] == j && cayley[j][i] == j;
    if (unit) e = i;
  }
  if (e == kNone) throw Error(ErrorKind::NotAGroup, "no identity element");
  GroupoidBuilder b(1);
  for (std::uint32_t i = 0; i < n; ++i) b.add_morphism(0, 0, std::to_string(i));
  b.set_identity(0, e);
  try {
    return std::move(b).build([&](Mor g, Mor f) { return cayley[g][f]; }, Verify::Full);
  } catch (const Error& err) {
    throw Error(ErrorKind::NotAGroup, err.what());
  }
}

Groupoid discrete_groupoid(std::size_t n) {
  GroupoidBuilder b(n);
  for (Obj o = 0; o < n; ++o) b.set_identity(o, b.add_morphism(o, o));
  return std::move(b).build([](Mor g, Mor) { return g; });
}

Groupoid opposite(const Groupoid& g) {
  GroupoidBuilder b(g.num_objects());
  b.reserve(g.num_morphisms());
  for (Mor f = 0; f < g.num_morphisms(); ++f) {
    b.add_morphism(g.target(f), g.source(f), g.has_names() ? g.name(f) : std::string{});
  }
  for (Obj o = 0; o < g.num_objects(); ++o) b.set_identity(o, g.identity(o));
  return std::move(b).build([&](Mor second, Mor first) { return g.compose(first, second); });
}

Groupoid product(const Groupoid& h, const Groupoid& g) {
  const std::size_t ng = g.num_objects();
  const std::size_t mg = g.num_morphisms();
  GroupoidBuilder b(h.num_objects() * ng);
  b.reserve(h.num_morphisms() * mg);
  const bool named = h.has_names() || g.has_names();
  for (Mor x = 0; x < h.num_morphisms(); ++x) {
    for (Mor y = 0; y < mg; ++y) {
      b.add_morphism(static_cast<Obj>(h.source(x) * ng + g.source(y)),
                     static_cast<Obj>(h.target(x) * ng + g.target(y)),
                     named ? "(" + h.name(x) + "," + g.name(y) + ")" : std::string{});
    }
  }
  for (Obj a = 0; a < h.num_objects(); ++a) {
    for (Obj c = 0; c < ng; ++c) {
      b.set_identity(static_cast<Obj>(a * ng + c),
                     static_cast<Mor>(h.identity(a) * mg + g.identity(c)));
    }
  }
  return std::move(b).build([&](Mor second, Mor first) {
    return static_cast<Mor>(h.compose(second / mg, first / mg) * mg +
                            g.compose(second % mg, first % mg));
  });
}

std::vector<std::vector<Obj>> Components::classes() const {
  std::vector<std::vector<Obj>> out(count);
  for (Obj o = 0; o < label.size(); ++o) out[label[o]].push_back(o);
  return out;
}

Components components(const Groupoid& g) {
  UnionFind uf(g.num_objects());
  for (Mor f = 0; f < g.num_morphisms(); ++f) uf.unite(g.source(f), g.target(f));
  Components c;
  c.label = uf.labels(c.count);
  return c;
}

bool is_discrete(const Groupoid& g) {
  for (Obj o = 0; o < g.num_objects(); ++o) {
    const auto row = g.out(o);
    for (std::size_t i = 1; i < row.size(); ++i) {
      if (g.target(row[i]) == g.target(row[i - 1])) return false;
    }
  }
  return true;
}

}  // namespace gpd
