#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "gpd/biset.hpp"
#include "gpd/functor.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/gset.hpp"
#include "gpd/span.hpp"

namespace gpd {

enum class FileKind { Groupoid, GSet, BiSet, Functor, Span };

const char* to_string(FileKind kind) noexcept;

/// Reads the `%XXXX 1` header; throws Error(Parse).
FileKind detect_kind(const std::filesystem::path& path);

/// `%GRPD 1` text. Errors are Error(Parse) as "<name>:<line>: ...", or the
/// validation error of the groupoid laws prefixed with <name>.
Groupoid parse_groupoid(std::string_view text, const std::string& name = "<input>");

/// Reads files, resolving references relative to the referring file.
/// Groupoids are cached by canonical path so that every reference to one
/// file yields the same pointer.
class Loader {
 public:
  GroupoidPtr groupoid(const std::filesystem::path& path);
  Functor functor(const std::filesystem::path& path);
  GSet gset(const std::filesystem::path& path);
  BiSet biset(const std::filesystem::path& path, Admissibility policy = Admissibility::Compute);
  Span span(const std::filesystem::path& path);

  /// Canonical path of a groupoid this loader has read; throws
  /// Error(Malformed) for any other groupoid.
  std::filesystem::path path_of(const GroupoidPtr& g) const;

 private:
  std::map<std::string, GroupoidPtr> cache_;
};

void write_groupoid(std::ostream& out, const Groupoid& g);
/// Body lines only (`obj`, `map`), as used inside span files.
void write_functor_body(std::ostream& out, const Functor& f);
void write_functor(std::ostream& out, const Functor& f, const std::string& source_ref, const std::string& target_ref);
/// Elements are named x<global index>.
void write_gset(std::ostream& out, const GSet& t, const std::string& base_ref);
void write_biset(std::ostream& out, const BiSet& x, const std::string& source_ref, const std::string& target_ref);
void write_span(std::ostream& out, const Span& s, const std::string& source_ref, const std::string& apex_ref,
                const std::string& target_ref);

}  // namespace gpd
