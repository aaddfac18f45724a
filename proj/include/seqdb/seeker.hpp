#ifndef SEQDB_SEEKER_HPP
#define SEQDB_SEEKER_HPP

#include "seqdb/guess.hpp"
#include "seqdb/index.hpp"
#include "seqdb/transforms.hpp"

namespace seqdb {

struct SeekerConfig {
  bool direct_stage = true;
  bool fuzzy_stage = true;
  bool transform_stage = true;
  bool guess_stage = true;
  int max_edits = 2;  // in {0, 1, 2}; 0 disables the fuzzy stage
  const TransformRegistry* registry = &TransformRegistry::standard();
  GuessBounds guess_bounds;
  /// Soft per-stage budget in milliseconds; 0 means unlimited. Budgets can
  /// cut the transform sweep short, so leave 0 where determinism matters.
  long stage_budget_ms = 0;
};

enum class Verdict { identified, explained, unexplained };

std::string verdict_name(Verdict v);

struct SeekerReport {
  std::vector<MatchResult> direct;  // ranked
  std::vector<MatchResult> fuzzy;   // ranked, edit_count >= 1
  std::vector<std::pair<std::string, std::vector<MatchResult>>> via_transforms;
  GuessReport guesses;
  Verdict verdict = Verdict::unexplained;
  bool early_exit = false;  // direct full-confidence match short-circuited
};

/// Matches whose canonical text differs from a stored window's text by at
/// most max_edits single-character substitutions, insertions or deletions.
/// Commas are never edited, so the comparison is per aligned term; exact
/// matches (edit 0) are excluded — they belong to the direct stage.
std::vector<MatchResult> fuzzy_matches(const LexIndex& ix,
                                       const TermList& terms, int max_edits);

/// For every integral transform output of >= 3 terms, a ranked lookup;
/// empty lookups omitted.
std::vector<std::pair<std::string, std::vector<MatchResult>>> transform_lookups(
    const LexIndex& ix, const TermList& terms,
    const TransformRegistry& registry);

/// The staged identification pipeline: direct lookup, fuzzy edits, transform
/// lookups, model guessing. Needs >= 5 terms (guessers want data); shorter
/// inputs are rejected with a suggestion to use plain lookup.
SeekerReport identify(const LexIndex& ix, const Catalog& c,
                      const TermList& terms, const SeekerConfig& cfg = {});

/// Plain Levenshtein distance over characters; exposed for tests that
/// re-verify reported edit counts independently.
int levenshtein(std::string_view a, std::string_view b);

}  // namespace seqdb

#endif  // SEQDB_SEEKER_HPP
