#ifndef SEQDB_INDEX_HPP
#define SEQDB_INDEX_HPP

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "seqdb/catalog.hpp"

namespace seqdb {

/// Raised for unusable queries (too short, unknown keyword, ...). The
/// message carries guidance for the caller.
struct QueryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Query {
  TermList terms;
  bool sign_insensitive = false;
  /// Minimum aligned terms required; 0 means "the whole query". Values are
  /// clamped to [3, query length].
  int min_overlap = 0;
};

struct MatchResult {
  ANumber id;
  int start_position = 0;  // index into the entry's terms
  int matched_count = 0;
  int edit_count = 0;      // 0 exact; 1..2 from the fuzzy stage

  /// Composite ranking key: fewer edits, larger overlap, start-of-entry
  /// alignment, smaller ANumber, then position. Smaller sorts first.
  std::tuple<int, int, int, int, int> score() const {
    return {edit_count, -matched_count, start_position == 0 ? 0 : 1,
            id.index(), start_position};
  }
  bool operator==(const MatchResult&) const = default;
};

/// Immutable lexicographic/positional index over a frozen catalog.
/// Candidate retrieval goes through 3-term window postings; longer queries
/// are verified by extension at the posting position.
class LexIndex {
 public:
  struct EntryTerms {
    ANumber id;
    std::vector<Term> values;
    std::vector<std::string> texts;  // canonical per-term text
  };

  static LexIndex build(const Catalog& c);

  const std::vector<EntryTerms>& entries() const { return entries_; }
  std::uint64_t digest() const { return digest_; }

  /// Entry ids ordered by their canonical term text (the lexicographic
  /// arrangement of the catalog).
  const std::vector<ANumber>& lexicographic_order() const { return lex_order_; }

  std::vector<MatchResult> find(const Query& q) const;

  /// Versioned text serialization; byte-identical for identical catalogs.
  std::string serialize() const;
  /// Returns nullopt when the blob is unreadable or the digest differs
  /// (stale cache).
  static std::optional<LexIndex> deserialize(std::string_view blob,
                                             std::uint64_t expected_digest);

 private:
  struct Posting {
    std::uint32_t entry;
    std::uint32_t pos;
  };

  void build_postings();

  std::vector<EntryTerms> entries_;  // sorted by ANumber
  std::vector<ANumber> lex_order_;
  std::map<std::string, std::vector<Posting>> grams_;
  std::map<std::string, std::vector<Posting>> abs_grams_;
  std::uint64_t digest_ = 0;
};

LexIndex build_index(const Catalog& c);

/// Every entry whose terms contain the query as a contiguous run (or a run
/// of at least min_overlap aligned terms when the query overhangs the end of
/// an entry). Throws QueryError below 3 terms.
std::vector<MatchResult> find_matches(const LexIndex& ix, const Query& q);

/// Deterministic total order by MatchResult::score.
std::vector<MatchResult> rank_matches(std::vector<MatchResult> ms);

/// Keep only the best-ranked result per entry (input must be ranked).
/// Lookup surfaces display each matching entry once.
std::vector<MatchResult> best_per_entry(std::vector<MatchResult> ranked);

/// Case-insensitive (and Latin-1 diacritic-folded) needle search over name,
/// comments, formulas and references. Results ordered by ANumber.
std::vector<ANumber> search_text(const Catalog& c, const std::string& needle);

/// Entries carrying the keyword, by ANumber. Unknown tags are rejected with
/// the vocabulary listed in the error message.
std::vector<ANumber> search_keyword(const Catalog& c, const std::string& tag);

}  // namespace seqdb

#endif  // SEQDB_INDEX_HPP
