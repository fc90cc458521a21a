// burnside: command-line front end for the gpd library.
//
// Exit status: 0 success, 1 the verdict is false (not isomorphic, a law
// fails), 2 bad input.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "gpd/biset.hpp"
#include "gpd/burnside.hpp"
#include "gpd/comparison.hpp"
#include "gpd/error.hpp"
#include "gpd/gset.hpp"
#include "gpd/io.hpp"
#include "gpd/laws.hpp"
#include "gpd/span.hpp"

namespace fs = std::filesystem;
using namespace gpd;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kBadInput = 2;

class Report {
 public:
  explicit Report(bool tsv) : sep_(tsv ? '\t' : ' ') {}

  void row(const std::vector<std::string>& fields) const {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) std::cout << sep_;
      std::cout << fields[i];
    }
    std::cout << '\n';
  }

 private:
  char sep_;
};

std::string num(std::size_t n) { return std::to_string(n); }

std::string join(const std::vector<std::uint32_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s.empty() ? "-" : s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string ref(const Loader& l, const GroupoidPtr& g, const fs::path& out) {
  const fs::path target = l.path_of(g);
  const fs::path rel = fs::proximate(target, fs::absolute(out).parent_path());
  return (rel.empty() || *rel.begin() == ".." ? target : rel).generic_string();
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream f(p);
  if (!f) throw Error(ErrorKind::Parse, p.string() + ": cannot open for writing");
  return f;
}

void write_biset_file(const Loader& l, const BiSet& x, const fs::path& out) {
  auto f = open_out(out);
  write_biset(f, x, ref(l, x.source(), out), ref(l, x.target(), out));
}

/// The apex goes next to the span as <stem>.apex.grpd.
void write_span_file(const Loader& l, const Span& s, const fs::path& out) {
  fs::path apex = out;
  apex.replace_extension(".apex.grpd");
  {
    auto f = open_out(apex);
    write_groupoid(f, *s.apex());
  }
  auto f = open_out(out);
  write_span(f, s, ref(l, s.source(), out), apex.filename().generic_string(), ref(l, s.target(), out));
}

void biset_summary(const Report& r, const BiSet& x) {
  r.row({"biset", "size", num(x.size()), "fibers", join(x.fibers()), "orbits", num(biset_orbits(x).count()),
         "admissible", yes_no(x.admissible())});
}

void span_summary(const Report& r, const Span& s) {
  const Groupoid& a = *s.apex();
  r.row({"span", "apex", "objects", num(a.num_objects()), "morphisms", num(a.num_morphisms()), "components",
         num(components(a).count)});
}

void class_row(const Report& r, const BisetClass& c, std::vector<std::string> extra = {}) {
  std::vector<std::string> f{"class", code_hash(c.code), "size", join(c.size_vector)};
  f.insert(f.end(), extra.begin(), extra.end());
  r.row(f);
}

int validate(const Report& r, const std::vector<std::string>& files) {
  Loader l;
  for (const auto& file : files) {
    switch (detect_kind(file)) {
      case FileKind::Groupoid: {
        const auto g = l.groupoid(file);
        r.row({file, "groupoid", "objects", num(g->num_objects()), "morphisms", num(g->num_morphisms()),
               "components", num(components(*g).count)});
        break;
      }
      case FileKind::Functor: {
        const Functor f = l.functor(file);
        r.row({file, "functor", "objects", num(f.objects.size()), "morphisms", num(f.morphisms.size())});
        break;
      }
      case FileKind::GSet: {
        const GSet t = l.gset(file);
        r.row({file, "gset", "size", num(t.size()), "fibers", join(t.fibers()), "orbits", num(colimit(t).count()),
               "free", yes_no(is_free(t).free)});
        break;
      }
      case FileKind::BiSet: {
        const BiSet x = l.biset(file, Admissibility::Require);
        r.row({file, "biset", "size", num(x.size()), "fibers", join(x.fibers()), "orbits",
               num(biset_orbits(x).count())});
        break;
      }
      case FileKind::Span: {
        const Span s = l.span(file);
        r.row({file, "span", "apex", "objects", num(s.apex()->num_objects()), "morphisms",
               num(s.apex()->num_morphisms())});
        break;
      }
    }
  }
  return kOk;
}

int compose(const Report& r, const std::string& a, const std::string& b, const std::string& out) {
  Loader l;
  const FileKind ka = detect_kind(a);
  const FileKind kb = detect_kind(b);
  if (ka != kb || (ka != FileKind::BiSet && ka != FileKind::Span)) {
    throw Error(ErrorKind::Parse, "compose takes two bi-set files or two span files");
  }
  if (ka == FileKind::BiSet) {
    const BiSet xy = compose_bisets(l.biset(a), l.biset(b));
    biset_summary(r, xy);
    if (xy.admissible()) r.row({"element", to_string(hom_monoid_element(xy))});
    if (!out.empty()) write_biset_file(l, xy, out);
  } else {
    const Span s = compose_spans(l.span(a), l.span(b));
    span_summary(r, s);
    if (!out.empty()) write_span_file(l, s, out);
  }
  return kOk;
}

int iso(const Report& r, const std::string& a, const std::string& b) {
  Loader l;
  const BiSet x = l.biset(a);
  const BiSet y = l.biset(b);
  const auto map = find_isomorphism(x, y);
  if (!map) {
    r.row({"isomorphic", "no"});
    return kFalse;
  }
  r.row({"isomorphic", "yes"});
  for (std::uint32_t e = 0; e < x.size(); ++e) {
    const BiElement from = x.locate(e);
    const BiElement to = y.locate(map->images[e]);
    r.row({"map", num(from.eta), num(from.gamma) + ":", num(from.index), "->", num(to.index)});
  }
  return kOk;
}

int hom(const Report& r, const std::string& left, const std::string& right, std::size_t bound,
        const std::vector<std::string>& elements) {
  Loader l;
  const auto h = l.groupoid(left);
  const auto g = l.groupoid(right);
  const auto basis = burnside_group(h, g, bound);
  for (const auto& c : basis) class_row(r, c);
  r.row({"rank", num(basis.size()), "bound", num(bound)});
  for (const auto& file : elements) {
    const BiSet x = l.biset(file, Admissibility::Require);
    if (x.source() != h || x.target() != g) {
      throw Error(ErrorKind::BaseMismatch, file + ": bases differ from --left and --right");
    }
    r.row({"element", file, to_string(hom_monoid_element(x))});
  }
  return kOk;
}

int decompose(const Report& r, const std::string& file) {
  Loader l;
  const BiSet x = l.biset(file);
  std::map<std::string, std::pair<BisetClass, std::size_t>> counts;
  for (const BiSet& part : indecomposables(x)) {
    BisetClass c = canonical_form(part);
    auto [it, fresh] = counts.try_emplace(c.code, c, 0);
    ++it->second.second;
  }
  for (const auto& [code, entry] : counts) class_row(r, entry.first, {"count", num(entry.second)});
  biset_summary(r, x);
  if (x.admissible()) r.row({"element", to_string(hom_monoid_element(x))});
  return kOk;
}

int to_span(const Report& r, const std::string& file, const std::string& out) {
  Loader l;
  const Span s = biset_to_span(l.biset(file, Admissibility::Require));
  span_summary(r, s);
  if (!out.empty()) write_span_file(l, s, out);
  return kOk;
}

int from_span(const Report& r, const std::string& file, const std::string& out) {
  Loader l;
  const BiSet x = span_to_biset(l.span(file));
  biset_summary(r, x);
  if (!out.empty()) write_biset_file(l, x, out);
  return kOk;
}

int laws(const Report& r, std::vector<std::string> suites, std::uint64_t seed, std::size_t cases, bool serial,
         bool tsv) {
  if (suites.empty()) suites = {"pentagon", "triangle", "unit", "pullback", "round-trip"};
  if (suites.size() == 1 && suites[0] == "all") suites = suite_names();
  std::size_t failed = 0;
  for (const auto& name : suites) {
    const SuiteReport rep = run_suite(name, seed, cases, serial ? Execution::Serial : Execution::Parallel);
    for (const auto& c : rep.cases) {
      if (tsv || !c.ok) r.row({c.ok ? "pass" : "fail", name, num(c.index), std::to_string(c.seed), c.detail});
    }
    r.row({"suite", name, "seed", std::to_string(seed), "cases", num(rep.cases.size()), "failures",
           num(rep.failures())});
    failed += rep.failures();
  }
  return failed ? kFalse : kOk;
}

int double_coset(const Report& r, const std::string& pf, const std::string& qf) {
  Loader l;
  const Functor p = l.functor(pf);
  const Functor q = l.functor(qf);
  const DoubleCosetWitness w = double_coset_equivalence(p, q);
  r.row({"lhs", "components", num(w.lhs_components)});
  r.row({"rhs", "components", num(w.rhs_components)});
  r.row({"equivalence", yes_no(w.verdict.equivalence)});
  if (!w.verdict) r.row({"failure", w.verdict.failure});
  return w.verdict ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Burnside bicategory of finite groupoids"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--report", format, "Report format")->check(CLI::IsMember({"text", "tsv"}));

  std::vector<std::string> files;
  std::string a, b, out;
  std::size_t bound = 12;
  std::vector<std::string> elements;
  std::vector<std::string> suites;
  std::uint64_t seed = 1;
  std::size_t cases = 20;
  bool serial = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check input files of any format");
  validate_cmd->add_option("files", files, "Input files")->required();

  auto* compose_cmd = app.add_subcommand("compose", "Compose X after Y (bi-sets or spans)");
  compose_cmd->add_option("x", a, "Outer bi-set or span")->required();
  compose_cmd->add_option("y", b, "Inner bi-set or span")->required();
  compose_cmd->add_option("--out", out, "Write the composite here");

  auto* iso_cmd = app.add_subcommand("iso", "Search for a natural bijection between two bi-sets");
  iso_cmd->add_option("x", a)->required();
  iso_cmd->add_option("y", b)->required();

  auto* hom_cmd = app.add_subcommand("hom", "Indecomposable classes of B(H, G) up to a size bound");
  hom_cmd->add_option("--left", a, "Groupoid H acting on the right")->required();
  hom_cmd->add_option("--right", b, "Groupoid G acting on the left")->required();
  hom_cmd->add_option("--bound", bound, "Largest total orbit size");
  hom_cmd->add_option("--element", elements, "Bi-set files to express in the basis");

  auto* decompose_cmd = app.add_subcommand("decompose", "Split a bi-set into indecomposables");
  decompose_cmd->add_option("x", a)->required();

  auto* to_span_cmd = app.add_subcommand("to-span", "Bi-set to span through the double translation groupoid");
  to_span_cmd->add_option("x", a)->required();
  to_span_cmd->add_option("--out", out, "Write the span here; the apex goes to <stem>.apex.grpd");

  auto* from_span_cmd = app.add_subcommand("from-span", "Span to bi-set");
  from_span_cmd->add_option("s", a)->required();
  from_span_cmd->add_option("--out", out, "Write the bi-set here");

  auto* laws_cmd = app.add_subcommand("laws", "Run randomized law suites");
  laws_cmd->add_option("--suite", suites, "Suite name, or all")
      ->check(CLI::IsMember([] {
        auto names = suite_names();
        names.push_back("all");
        return names;
      }()));
  laws_cmd->add_option("--seed", seed);
  laws_cmd->add_option("--cases", cases);
  laws_cmd->add_flag("--serial", serial, "Run cases on one thread");

  auto* dc_cmd = app.add_subcommand("double-coset", "Compare T(q)S(p) with S(p')T(q') over the pullback");
  dc_cmd->add_option("p", a, "Functor F -> G")->required();
  dc_cmd->add_option("q", b, "Functor H -> G")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  const Report r(format == "tsv");
  try {
    if (*validate_cmd) return validate(r, files);
    if (*compose_cmd) return compose(r, a, b, out);
    if (*iso_cmd) return iso(r, a, b);
    if (*hom_cmd) return hom(r, a, b, bound, elements);
    if (*decompose_cmd) return decompose(r, a);
    if (*to_span_cmd) return to_span(r, a, out);
    if (*from_span_cmd) return from_span(r, a, out);
    if (*laws_cmd) return laws(r, suites, seed, cases, serial, format == "tsv");
    if (*dc_cmd) return double_coset(r, a, b);
  } catch (const Error& e) {
    std::cout.flush();
    std::cerr << "burnside: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
