#include "gpd/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "gpd/error.hpp"

namespace gpd {

namespace fs = std::filesystem;

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

class Text {
 public:
  Text(std::string_view text, std::string name) : name_(std::move(name)) {
    std::size_t number = 0;
    std::size_t at = 0;
    while (at <= text.size()) {
      const std::size_t end = std::min(text.find('\n', at), text.size());
      std::string_view raw = text.substr(at, end - at);
      ++number;
      at = end + 1;
      if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      Line line{number, {}};
      std::string cur;
      auto flush = [&] {
        if (!cur.empty()) line.tokens.push_back(std::move(cur));
        cur.clear();
      };
      for (std::size_t i = 0; i < raw.size(); ++i) {
        const char c = raw[i];
        if (c == ' ' || c == '\t' || c == '\r') {
          flush();
        } else if (c == ':') {
          flush();
          line.tokens.emplace_back(":");
        } else if (c == '-' && i + 1 < raw.size() && raw[i + 1] == '>') {
          flush();
          line.tokens.emplace_back("->");
          ++i;
        } else {
          cur.push_back(c);
        }
      }
      flush();
      if (!line.tokens.empty()) lines_.push_back(std::move(line));
      if (end == text.size()) break;
    }
  }

  [[noreturn]] void fail(std::size_t line, const std::string& what) const {
    throw Error(ErrorKind::Parse, name_ + ":" + std::to_string(line) + ": " + what);
  }

  void expect_header(const char* tag) {
    if (lines_.empty()) fail(1, std::string("empty file, expected ") + tag + " 1");
    const Line& first = lines_.front();
    if (first.tokens.size() != 2 || first.tokens[0] != tag || first.tokens[1] != "1") {
      fail(first.number, std::string("expected header '") + tag + " 1'");
    }
  }

  std::uint32_t number(const Line& l, std::size_t i, std::size_t below, const char* what) const {
    const std::string& t = l.tokens[i];
    std::uint32_t v = 0;
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || p != t.data() + t.size()) fail(l.number, std::string("bad ") + what + " '" + t + "'");
    if (v >= below) fail(l.number, std::string(what) + " " + t + " out of range");
    return v;
  }

  void arity(const Line& l, std::size_t n) const {
    if (l.tokens.size() != n) fail(l.number, "malformed '" + l.tokens[0] + "' line");
  }

  const std::vector<Line>& lines() const { return lines_; }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  std::vector<Line> lines_;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Re-raises a validation error with the file name in front, same kind.
template <typename F>
auto located(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    const std::string what = e.what();
    const auto colon = what.find(": ");
    throw Error(e.kind(), name + ": " + (colon == std::string::npos ? what : what.substr(colon + 2)));
  }
}

std::unordered_map<std::string, Mor> names_of(const Groupoid& g) {
  std::unordered_map<std::string, Mor> out;
  for (Mor m = 0; m < g.num_morphisms(); ++m) out.emplace(g.name(m), m);
  return out;
}

Mor lookup(const Text& t, const Line& l, const std::unordered_map<std::string, Mor>& names, const std::string& n) {
  const auto it = names.find(n);
  if (it == names.end()) t.fail(l.number, "unknown morphism '" + n + "'");
  return it->second;
}

// `obj`/`map` lines between `from` and `to` (exclusive) of a functor block.
Functor functor_body(const Text& t, std::size_t from, std::size_t to, GroupoidPtr src, GroupoidPtr tgt) {
  const Groupoid& a = *src;
  const Groupoid& b = *tgt;
  const auto an = names_of(a);
  const auto bn = names_of(b);
  std::vector<Obj> objects(a.num_objects(), kNone);
  std::vector<Mor> morphisms(a.num_morphisms(), kNone);
  std::size_t last = from;
  for (std::size_t i = from; i < to; ++i) {
    const Line& l = t.lines()[i];
    last = l.number;
    if (l.tokens[0] == "obj") {
      t.arity(l, 3);
      const Obj o = t.number(l, 1, a.num_objects(), "object");
      if (objects[o] != kNone) t.fail(l.number, "object " + l.tokens[1] + " assigned twice");
      objects[o] = t.number(l, 2, b.num_objects(), "object");
    } else if (l.tokens[0] == "map") {
      t.arity(l, 3);
      const Mor m = lookup(t, l, an, l.tokens[1]);
      if (morphisms[m] != kNone) t.fail(l.number, "morphism '" + l.tokens[1] + "' assigned twice");
      morphisms[m] = lookup(t, l, bn, l.tokens[2]);
    } else {
      t.fail(l.number, "unexpected '" + l.tokens[0] + "' in functor block");
    }
  }
  for (Obj o = 0; o < a.num_objects(); ++o) {
    if (objects[o] == kNone) t.fail(last, "object " + std::to_string(o) + " has no image");
  }
  for (Mor m = 0; m < a.num_morphisms(); ++m) {
    if (morphisms[m] != kNone) continue;
    if (!a.is_identity(m)) t.fail(last, "morphism '" + a.name(m) + "' has no image");
    morphisms[m] = b.identity(objects[a.source(m)]);
  }
  return located(t.name(), [&] {
    return validate_functor(std::move(src), std::move(tgt), std::move(objects), std::move(morphisms));
  });
}

struct Elements {
  std::unordered_map<std::string, std::uint32_t> index;  // name -> position in `cell`
  std::vector<std::uint32_t> cell;                        // fiber cell of each element
  std::vector<std::uint32_t> local;                       // index inside the cell
};

void add_elements(const Text& t, const Line& l, std::size_t first, Elements& e, std::uint32_t cell,
                  std::uint32_t& count) {
  for (std::size_t i = first; i < l.tokens.size(); ++i) {
    const std::string& n = l.tokens[i];
    if (n == ":" || n == "->") t.fail(l.number, "bad element name '" + n + "'");
    if (!e.index.emplace(n, static_cast<std::uint32_t>(e.cell.size())).second) {
      t.fail(l.number, "duplicate element '" + n + "'");
    }
    e.cell.push_back(cell);
    e.local.push_back(count++);
  }
}

std::uint32_t element(const Text& t, const Line& l, const Elements& e, const std::string& n) {
  const auto it = e.index.find(n);
  if (it == e.index.end()) t.fail(l.number, "unknown element '" + n + "'");
  return it->second;
}

// `<kw> <mor> [<obj>] : e -> e'`
struct ActLine {
  Mor mor;
  Obj obj;
  std::uint32_t from;
  std::uint32_t to;
};

ActLine act_line(const Text& t, const Line& l, bool with_object, std::size_t objects,
                 const std::unordered_map<std::string, Mor>& names, const Elements& e) {
  const std::size_t k = with_object ? 1 : 0;
  if (l.tokens.size() != 6 + k || l.tokens[2 + k] != ":" || l.tokens[4 + k] != "->") {
    t.fail(l.number, "expected '" + l.tokens[0] + (with_object ? " <mor> <obj>: e -> e'" : " <mor>: e -> e'") + "'");
  }
  ActLine a{lookup(t, l, names, l.tokens[1]), 0, 0, 0};
  if (with_object) a.obj = t.number(l, 2, objects, "object");
  a.from = element(t, l, e, l.tokens[3 + k]);
  a.to = element(t, l, e, l.tokens[5 + k]);
  return a;
}

fs::path resolve(const fs::path& referrer, const std::string& ref) {
  const fs::path p(ref);
  return p.is_absolute() ? p : referrer.parent_path() / p;
}

}  // namespace

const char* to_string(FileKind kind) noexcept {
  switch (kind) {
    case FileKind::Groupoid: return "%GRPD";
    case FileKind::GSet: return "%GSET";
    case FileKind::BiSet: return "%BISET";
    case FileKind::Functor: return "%FUNC";
    case FileKind::Span: return "%SPAN";
  }
  return "?";
}

FileKind detect_kind(const fs::path& path) {
  const Text t(slurp(path), path.string());
  if (t.lines().empty()) t.fail(1, "empty file");
  const Line& l = t.lines().front();
  for (FileKind k : {FileKind::Groupoid, FileKind::GSet, FileKind::BiSet, FileKind::Functor, FileKind::Span}) {
    if (l.tokens[0] == to_string(k)) {
      if (l.tokens.size() != 2 || l.tokens[1] != "1") t.fail(l.number, "unsupported format version");
      return k;
    }
  }
  t.fail(l.number, "unknown header '" + l.tokens[0] + "'");
}

Groupoid parse_groupoid(std::string_view text, const std::string& name) {
  Text t(text, name);
  t.expect_header("%GRPD");
  RawGroupoid raw;
  bool have_objects = false;
  std::unordered_map<std::string, Mor> names;
  std::vector<const Line*> ids, cmps;
  for (std::size_t i = 1; i < t.lines().size(); ++i) {
    const Line& l = t.lines()[i];
    const std::string& kw = l.tokens[0];
    if (kw == "objects") {
      t.arity(l, 2);
      if (have_objects) t.fail(l.number, "duplicate 'objects' line");
      raw.objects = t.number(l, 1, 1u << 24, "object count");
      have_objects = true;
    } else if (kw == "mor") {
      t.arity(l, 4);
      if (!have_objects) t.fail(l.number, "'mor' before 'objects'");
      if (!names.emplace(l.tokens[1], static_cast<Mor>(raw.morphisms.size())).second) {
        t.fail(l.number, "duplicate morphism name '" + l.tokens[1] + "'");
      }
      raw.morphisms.push_back(
          {l.tokens[1], t.number(l, 2, raw.objects, "object"), t.number(l, 3, raw.objects, "object")});
    } else if (kw == "id") {
      t.arity(l, 3);
      ids.push_back(&l);
    } else if (kw == "cmp") {
      t.arity(l, 4);
      cmps.push_back(&l);
    } else {
      t.fail(l.number, "unknown keyword '" + kw + "'");
    }
  }
  if (!have_objects) t.fail(t.lines().front().number, "missing 'objects' line");
  for (const Line* l : ids) {
    raw.identities.emplace_back(t.number(*l, 1, raw.objects, "object"), lookup(t, *l, names, l->tokens[2]));
  }
  for (const Line* l : cmps) {
    raw.composites.push_back(
        {lookup(t, *l, names, l->tokens[1]), lookup(t, *l, names, l->tokens[2]), lookup(t, *l, names, l->tokens[3])});
  }
  return located(name, [&] { return validate_groupoid(raw); });
}

GroupoidPtr Loader::groupoid(const fs::path& path) {
  std::error_code ec;
  const fs::path canon = fs::weakly_canonical(path, ec);
  const std::string key = ec ? path.string() : canon.string();
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  GroupoidPtr g = share(parse_groupoid(slurp(path), path.string()));
  cache_.emplace(key, g);
  return g;
}

fs::path Loader::path_of(const GroupoidPtr& g) const {
  for (const auto& [key, cached] : cache_) {
    if (cached == g) return key;
  }
  throw Error(ErrorKind::Malformed, "groupoid was not read from a file");
}

Functor Loader::functor(const fs::path& path) {
  Text t(slurp(path), path.string());
  t.expect_header("%FUNC");
  GroupoidPtr src, tgt;
  std::size_t body = 1;
  for (; body < t.lines().size(); ++body) {
    const Line& l = t.lines()[body];
    if (l.tokens[0] == "source") {
      t.arity(l, 2);
      src = groupoid(resolve(path, l.tokens[1]));
    } else if (l.tokens[0] == "target") {
      t.arity(l, 2);
      tgt = groupoid(resolve(path, l.tokens[1]));
    } else {
      break;
    }
  }
  if (!src || !tgt) t.fail(t.lines().front().number, "functor file needs 'source' and 'target' lines");
  return functor_body(t, body, t.lines().size(), src, tgt);
}

GSet Loader::gset(const fs::path& path) {
  Text t(slurp(path), path.string());
  t.expect_header("%GSET");
  GroupoidPtr base;
  int variance = -1;
  std::vector<const Line*> fibers, acts;
  for (std::size_t i = 1; i < t.lines().size(); ++i) {
    const Line& l = t.lines()[i];
    const std::string& kw = l.tokens[0];
    if (kw == "base") {
      t.arity(l, 2);
      base = groupoid(resolve(path, l.tokens[1]));
    } else if (kw == "variance") {
      t.arity(l, 2);
      if (l.tokens[1] == "left") {
        variance = 0;
      } else if (l.tokens[1] == "right") {
        variance = 1;
      } else {
        t.fail(l.number, "variance must be 'left' or 'right'");
      }
    } else if (kw == "fiber") {
      fibers.push_back(&l);
    } else if (kw == "act") {
      acts.push_back(&l);
    } else {
      t.fail(l.number, "unknown keyword '" + kw + "'");
    }
  }
  if (!base || variance < 0) t.fail(t.lines().front().number, "G-set file needs 'base' and 'variance' lines");
  const Groupoid& g = *base;
  RawGSet raw{base, variance == 0 ? Variance::Covariant : Variance::Contravariant,
              std::vector<std::uint32_t>(g.num_objects(), 0), std::vector<std::vector<std::uint32_t>>(g.num_morphisms())};
  Elements e;
  std::vector<bool> seen(g.num_objects(), false);
  for (const Line* l : fibers) {
    if (l->tokens.size() < 3 || l->tokens[2] != ":") t.fail(l->number, "expected 'fiber <obj>: e1 e2 ...'");
    const Obj o = t.number(*l, 1, g.num_objects(), "object");
    if (seen[o]) t.fail(l->number, "fiber " + l->tokens[1] + " listed twice");
    seen[o] = true;
    add_elements(t, *l, 3, e, o, raw.fibers[o]);
  }
  const auto names = names_of(g);
  auto dom = [&](Mor m) { return raw.variance == Variance::Covariant ? g.source(m) : g.target(m); };
  auto cod = [&](Mor m) { return raw.variance == Variance::Covariant ? g.target(m) : g.source(m); };
  for (Mor m = 0; m < g.num_morphisms(); ++m) raw.action[m].assign(raw.fibers[dom(m)], kNone);
  for (const Line* l : acts) {
    const ActLine a = act_line(t, *l, false, 0, names, e);
    if (e.cell[a.from] != dom(a.mor) || e.cell[a.to] != cod(a.mor)) t.fail(l->number, "element in the wrong fiber");
    auto& slot = raw.action[a.mor][e.local[a.from]];
    if (slot != kNone) t.fail(l->number, "action of '" + l->tokens[1] + "' on '" + l->tokens[3] + "' given twice");
    slot = e.local[a.to];
  }
  const std::size_t last = t.lines().back().number;
  for (Mor m = 0; m < g.num_morphisms(); ++m) {
    for (std::uint32_t x = 0; x < raw.action[m].size(); ++x) {
      if (raw.action[m][x] != kNone) continue;
      if (!g.is_identity(m)) t.fail(last, "missing action of '" + g.name(m) + "'");
      raw.action[m][x] = x;
    }
  }
  return located(t.name(), [&] { return validate_gset(std::move(raw)); });
}

BiSet Loader::biset(const fs::path& path, Admissibility policy) {
  Text t(slurp(path), path.string());
  t.expect_header("%BISET");
  GroupoidPtr hp, gp;
  std::vector<const Line*> fibers, lacts, racts;
  for (std::size_t i = 1; i < t.lines().size(); ++i) {
    const Line& l = t.lines()[i];
    const std::string& kw = l.tokens[0];
    if (kw == "H") {
      t.arity(l, 2);
      hp = groupoid(resolve(path, l.tokens[1]));
    } else if (kw == "G") {
      t.arity(l, 2);
      gp = groupoid(resolve(path, l.tokens[1]));
    } else if (kw == "fiber") {
      fibers.push_back(&l);
    } else if (kw == "lact") {
      lacts.push_back(&l);
    } else if (kw == "ract") {
      racts.push_back(&l);
    } else {
      t.fail(l.number, "unknown keyword '" + kw + "'");
    }
  }
  if (!hp || !gp) t.fail(t.lines().front().number, "bi-set file needs 'H' and 'G' lines");
  const Groupoid& h = *hp;
  const Groupoid& g = *gp;
  const std::size_t nh = h.num_objects();
  const std::size_t ng = g.num_objects();
  RawBiSet raw{hp, gp, std::vector<std::uint32_t>(nh * ng, 0),
               std::vector<std::vector<std::uint32_t>>(g.num_morphisms() * nh),
               std::vector<std::vector<std::uint32_t>>(h.num_morphisms() * ng)};
  Elements e;
  std::vector<bool> seen(nh * ng, false);
  for (const Line* l : fibers) {
    if (l->tokens.size() < 4 || l->tokens[3] != ":") t.fail(l->number, "expected 'fiber <eta> <gamma>: e1 e2 ...'");
    const Obj eta = t.number(*l, 1, nh, "object");
    const Obj gamma = t.number(*l, 2, ng, "object");
    const std::uint32_t cell = static_cast<std::uint32_t>(eta * ng + gamma);
    if (seen[cell]) t.fail(l->number, "fiber listed twice");
    seen[cell] = true;
    add_elements(t, *l, 4, e, cell, raw.fibers[cell]);
  }
  for (Mor m = 0; m < g.num_morphisms(); ++m) {
    for (Obj eta = 0; eta < nh; ++eta) raw.lact[m * nh + eta].assign(raw.fibers[eta * ng + g.source(m)], kNone);
  }
  for (Mor m = 0; m < h.num_morphisms(); ++m) {
    for (Obj gamma = 0; gamma < ng; ++gamma) raw.ract[m * ng + gamma].assign(raw.fibers[h.target(m) * ng + gamma], kNone);
  }
  const auto gnames = names_of(g);
  const auto hnames = names_of(h);
  for (const Line* l : lacts) {
    const ActLine a = act_line(t, *l, true, nh, gnames, e);
    if (e.cell[a.from] != a.obj * ng + g.source(a.mor) || e.cell[a.to] != a.obj * ng + g.target(a.mor)) {
      t.fail(l->number, "element in the wrong fiber");
    }
    auto& slot = raw.lact[a.mor * nh + a.obj][e.local[a.from]];
    if (slot != kNone) t.fail(l->number, "left action given twice");
    slot = e.local[a.to];
  }
  for (const Line* l : racts) {
    const ActLine a = act_line(t, *l, true, ng, hnames, e);
    if (e.cell[a.from] != h.target(a.mor) * ng + a.obj || e.cell[a.to] != h.source(a.mor) * ng + a.obj) {
      t.fail(l->number, "element in the wrong fiber");
    }
    auto& slot = raw.ract[a.mor * ng + a.obj][e.local[a.from]];
    if (slot != kNone) t.fail(l->number, "right action given twice");
    slot = e.local[a.to];
  }
  const std::size_t last = t.lines().back().number;
  auto fill = [&](std::vector<std::vector<std::uint32_t>>& tables, const Groupoid& base, std::size_t stride,
                  const char* kw) {
    for (std::size_t i = 0; i < tables.size(); ++i) {
      const Mor m = static_cast<Mor>(i / stride);
      for (std::uint32_t x = 0; x < tables[i].size(); ++x) {
        if (tables[i][x] != kNone) continue;
        if (!base.is_identity(m)) t.fail(last, std::string("missing ") + kw + " of '" + base.name(m) + "'");
        tables[i][x] = x;
      }
    }
  };
  fill(raw.lact, g, nh, "lact");
  fill(raw.ract, h, ng, "ract");
  return located(t.name(), [&] { return validate_biset(std::move(raw), policy); });
}

Span Loader::span(const fs::path& path) {
  Text t(slurp(path), path.string());
  t.expect_header("%SPAN");
  GroupoidPtr hp, lp, gp;
  std::size_t i = 1;
  for (; i < t.lines().size(); ++i) {
    const Line& l = t.lines()[i];
    GroupoidPtr* slot = l.tokens[0] == "H" ? &hp : l.tokens[0] == "L" ? &lp : l.tokens[0] == "G" ? &gp : nullptr;
    if (!slot) break;
    t.arity(l, 2);
    *slot = groupoid(resolve(path, l.tokens[1]));
  }
  if (!hp || !lp || !gp) t.fail(t.lines().front().number, "span file needs 'H', 'L' and 'G' lines");
  std::optional<Functor> left, right;
  while (i < t.lines().size()) {
    const Line& open = t.lines()[i];
    const bool is_left = open.tokens[0] == "leftleg";
    if (!is_left && open.tokens[0] != "rightleg") t.fail(open.number, "expected 'leftleg' or 'rightleg'");
    t.arity(open, 1);
    if ((is_left && left) || (!is_left && right)) t.fail(open.number, "leg given twice");
    std::size_t close = i + 1;
    while (close < t.lines().size() && t.lines()[close].tokens[0] != "end") ++close;
    if (close == t.lines().size()) t.fail(open.number, "unterminated leg block");
    if (is_left) {
      left = functor_body(t, i + 1, close, lp, hp);
    } else {
      right = functor_body(t, i + 1, close, lp, gp);
    }
    i = close + 1;
  }
  if (!left || !right) t.fail(t.lines().back().number, "span file needs both legs");
  return located(t.name(), [&] { return make_span(std::move(*left), std::move(*right)); });
}

void write_groupoid(std::ostream& out, const Groupoid& g) {
  out << "%GRPD 1\nobjects " << g.num_objects() << "\n";
  for (Mor m = 0; m < g.num_morphisms(); ++m) {
    out << "mor " << g.name(m) << " " << g.source(m) << " " << g.target(m) << "\n";
  }
  for (Obj o = 0; o < g.num_objects(); ++o) out << "id " << o << " " << g.name(g.identity(o)) << "\n";
  for (Mor second = 0; second < g.num_morphisms(); ++second) {
    for (Mor first : g.in(g.source(second))) {
      out << "cmp " << g.name(second) << " " << g.name(first) << " " << g.name(g.compose(second, first)) << "\n";
    }
  }
}

void write_functor_body(std::ostream& out, const Functor& f) {
  for (Obj o = 0; o < f.objects.size(); ++o) out << "obj " << o << " " << f.obj(o) << "\n";
  for (Mor m = 0; m < f.morphisms.size(); ++m) {
    out << "map " << f.source->name(m) << " " << f.target->name(f.mor(m)) << "\n";
  }
}

void write_functor(std::ostream& out, const Functor& f, const std::string& source_ref, const std::string& target_ref) {
  out << "%FUNC 1\nsource " << source_ref << "\ntarget " << target_ref << "\n";
  write_functor_body(out, f);
}

void write_gset(std::ostream& out, const GSet& t, const std::string& base_ref) {
  const Groupoid& g = *t.base();
  out << "%GSET 1\nbase " << base_ref << "\nvariance "
      << (t.variance() == Variance::Covariant ? "left" : "right") << "\n";
  for (Obj o = 0; o < g.num_objects(); ++o) {
    out << "fiber " << o << ":";
    for (std::uint32_t x = 0; x < t.fiber_size(o); ++x) out << " x" << t.global(o, x);
    out << "\n";
  }
  for (Mor m = 0; m < g.num_morphisms(); ++m) {
    for (std::uint32_t x = 0; x < t.fiber_size(t.domain(m)); ++x) {
      out << "act " << g.name(m) << ": x" << t.global(t.domain(m), x) << " -> x"
          << t.global(t.codomain(m), t.act(m, x)) << "\n";
    }
  }
}

void write_biset(std::ostream& out, const BiSet& x, const std::string& source_ref, const std::string& target_ref) {
  const Groupoid& h = *x.source();
  const Groupoid& g = *x.target();
  out << "%BISET 1\nH " << source_ref << "\nG " << target_ref << "\n";
  for (Obj eta = 0; eta < h.num_objects(); ++eta) {
    for (Obj gamma = 0; gamma < g.num_objects(); ++gamma) {
      out << "fiber " << eta << " " << gamma << ":";
      for (std::uint32_t i = 0; i < x.fiber_size(eta, gamma); ++i) out << " x" << x.global(eta, gamma, i);
      out << "\n";
    }
  }
  for (Mor m = 0; m < g.num_morphisms(); ++m) {
    for (Obj eta = 0; eta < h.num_objects(); ++eta) {
      for (std::uint32_t i = 0; i < x.fiber_size(eta, g.source(m)); ++i) {
        out << "lact " << g.name(m) << " " << eta << ": x" << x.global(eta, g.source(m), i) << " -> x"
            << x.global(eta, g.target(m), x.lact(m, eta, i)) << "\n";
      }
    }
  }
  for (Mor m = 0; m < h.num_morphisms(); ++m) {
    for (Obj gamma = 0; gamma < g.num_objects(); ++gamma) {
      for (std::uint32_t i = 0; i < x.fiber_size(h.target(m), gamma); ++i) {
        out << "ract " << h.name(m) << " " << gamma << ": x" << x.global(h.target(m), gamma, i) << " -> x"
            << x.global(h.source(m), gamma, x.ract(m, gamma, i)) << "\n";
      }
    }
  }
}

void write_span(std::ostream& out, const Span& s, const std::string& source_ref, const std::string& apex_ref,
                const std::string& target_ref) {
  out << "%SPAN 1\nH " << source_ref << "\nL " << apex_ref << "\nG " << target_ref << "\nleftleg\n";
  write_functor_body(out, s.left);
  out << "end\nrightleg\n";
  write_functor_body(out, s.right);
  out << "end\n";
}

}  // namespace gpd
