#ifndef SEQDB_CATALOG_HPP
#define SEQDB_CATALOG_HPP

#include <compare>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "seqdb/numcore.hpp"

namespace seqdb {

/// Raised on malformed entry records; line is 1-based within the parsed text.
struct EntryParseError : std::runtime_error {
  int line;
  EntryParseError(int l, const std::string& msg)
      : std::runtime_error("line " + std::to_string(l) + ": " + msg), line(l) {}
};

/// Catalog identifier: "A" followed by exactly six digits in canonical form.
/// Short forms (A1003) are accepted on parse, never emitted.
class ANumber {
 public:
  ANumber() = default;
  explicit ANumber(int index);
  static ANumber parse(std::string_view text);

  int index() const { return index_; }
  std::string str() const;

  auto operator<=>(const ANumber&) const = default;

 private:
  int index_ = 0;
};

/// The documented keyword vocabulary; includes "uned" and "obsc".
const std::set<std::string>& keyword_vocabulary();

struct Entry {
  ANumber id;
  std::string name;
  TermList terms;
  std::set<std::string> keywords;
  std::vector<std::string> formulas;
  std::vector<std::string> references;
  std::vector<ANumber> crossrefs;
  std::vector<std::string> comments;
  std::vector<std::string> programs;

  bool operator==(const Entry&) const = default;
};

struct ValidationIssue {
  ANumber id;
  std::string message;
};

class Catalog {
 public:
  /// Inserts an entry; returns false (and leaves the catalog unchanged) when
  /// the id is already present.
  bool insert(Entry e);

  const Entry* find(const ANumber& id) const;
  const std::map<ANumber, Entry>& entries() const { return entries_; }
  const std::vector<ANumber>& journal() const { return journal_; }
  std::size_t size() const { return entries_.size(); }

  /// Catalogs are equal when they hold equal entries; insertion order is
  /// bookkeeping, not identity.
  bool operator==(const Catalog& other) const {
    return entries_ == other.entries_;
  }

 private:
  std::map<ANumber, Entry> entries_;
  std::vector<ANumber> journal_;
};

// ---------------------------------------------------------------------------
// Line-tagged entry format. Each line is "%<tag> <ANumber> <payload>":
//   %I offset (single integer, default 1)     %S terms (repeatable, wrapped)
//   %N name                                   %K keywords, comma-separated
//   %F formula      %D reference      %C comment
//   %Y crossrefs, comma-separated             %P program text
// Records are separated by one blank line; UTF-8, LF endings.
// ---------------------------------------------------------------------------

/// Default bound on stored terms per entry; oversized records are rejected.
inline constexpr std::size_t kDefaultMaxStoredTerms = 1000;

/// Parse one record. Throws EntryParseError (line numbers are relative to
/// the record unless base_line is given).
Entry parse_entry(std::string_view record, int base_line = 0,
                  std::size_t max_terms = kDefaultMaxStoredTerms);

/// Canonical text form; parse_entry(serialize_entry(e)) == e, and
/// serializing a parsed canonical record reproduces it byte-for-byte.
/// %S lines are wrapped at 72 characters, splitting only after commas.
std::string serialize_entry(const Entry& e);

struct LoadIssue {
  int line;  // first line of the offending record
  std::string message;
};

struct LoadResult {
  Catalog catalog;
  std::vector<LoadIssue> issues;
};

/// Load blank-line-separated records. Per-record errors are collected, not
/// fatal; a duplicate ANumber rejects the later record.
LoadResult load_catalog(std::istream& in);
LoadResult load_catalog_text(std::string_view text);

std::string serialize_catalog(const Catalog& c);

/// Warnings only: fewer than 4 terms, unknown keyword, dangling crossref
/// (crossrefs checked only when a catalog is supplied).
std::vector<ValidationIssue> validate_entry(const Entry& e,
                                            const Catalog* context = nullptr);

/// Stable digest of the serialized catalog (FNV-1a 64); used to invalidate
/// index cache files.
std::uint64_t catalog_digest(const Catalog& c);

}  // namespace seqdb

#endif  // SEQDB_CATALOG_HPP
