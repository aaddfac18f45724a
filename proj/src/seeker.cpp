#include "seqdb/seeker.hpp"

#include <algorithm>
#include <chrono>

namespace seqdb {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::identified: return "identified";
    case Verdict::explained: return "explained";
    case Verdict::unexplained: return "unexplained";
  }
  return "?";
}

int levenshtein(std::string_view a, std::string_view b) {
  std::vector<int> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    int diag = row[0];
    row[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= b.size(); ++j) {
      int sub = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
      diag = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, sub});
    }
  }
  return row[b.size()];
}

namespace {

// Per-term Levenshtein with an abort threshold. Band-limited: once the
// length gap alone exceeds the budget there is no need to fill the table.
int capped_term_distance(const std::string& a, const std::string& b, int cap) {
  int gap = static_cast<int>(a.size()) - static_cast<int>(b.size());
  if (gap < 0) gap = -gap;
  if (gap > cap) return cap + 1;
  int d = levenshtein(a, b);
  return d;
}

}  // namespace

std::vector<MatchResult> fuzzy_matches(const LexIndex& ix,
                                       const TermList& terms, int max_edits) {
  if (max_edits < 1 || max_edits > 2)
    throw std::invalid_argument("fuzzy_matches: max_edits must be 1 or 2");
  const std::size_t qlen = terms.size();
  if (qlen < 3)
    throw QueryError("fuzzy matching needs at least 3 terms");

  std::vector<std::string> qtext;
  qtext.reserve(qlen);
  for (auto& t : terms.terms) qtext.push_back(t.get_str());

  std::vector<MatchResult> out;
  for (const auto& entry : ix.entries()) {
    if (entry.texts.size() < qlen) continue;
    for (std::size_t pos = 0; pos + qlen <= entry.texts.size(); ++pos) {
      int total = 0;
      for (std::size_t i = 0; i < qlen; ++i) {
        total += capped_term_distance(entry.texts[pos + i], qtext[i],
                                      max_edits - total);
        if (total > max_edits) break;
      }
      if (total >= 1 && total <= max_edits)
        out.push_back({entry.id, static_cast<int>(pos),
                       static_cast<int>(qlen), total});
    }
  }
  return best_per_entry(rank_matches(std::move(out)));
}

std::vector<std::pair<std::string, std::vector<MatchResult>>> transform_lookups(
    const LexIndex& ix, const TermList& terms,
    const TransformRegistry& registry) {
  std::vector<std::pair<std::string, std::vector<MatchResult>>> out;
  for (auto& [name, transformed] : registry.apply_all(terms)) {
    if (transformed.size() < 3) continue;
    Query q;
    q.terms = transformed;
    auto matches = find_matches(ix, q);
    if (matches.empty()) continue;
    out.emplace_back(name, best_per_entry(rank_matches(std::move(matches))));
  }
  return out;
}

SeekerReport identify(const LexIndex& ix, const Catalog& c,
                      const TermList& terms, const SeekerConfig& cfg) {
  if (terms.size() < 5)
    throw QueryError(
        "identification needs at least 5 terms; for shorter sequences use a "
        "plain lookup");
  (void)c;

  using clock = std::chrono::steady_clock;
  auto stage_deadline = [&cfg] {
    return cfg.stage_budget_ms > 0
               ? clock::now() + std::chrono::milliseconds(cfg.stage_budget_ms)
               : clock::time_point::max();
  };

  SeekerReport report;

  if (cfg.direct_stage) {
    Query q;
    q.terms = terms;
    report.direct = best_per_entry(rank_matches(find_matches(ix, q)));
  }
  if (!report.direct.empty()) {
    report.verdict = Verdict::identified;
    // Full-confidence only: whole query matched at the start of an entry.
    const auto& top = report.direct.front();
    if (top.start_position == 0 &&
        top.matched_count == static_cast<int>(terms.size())) {
      report.early_exit = true;
      return report;
    }
  }

  if (cfg.fuzzy_stage && cfg.max_edits >= 1)
    report.fuzzy = fuzzy_matches(ix, terms, std::min(cfg.max_edits, 2));

  if (cfg.transform_stage && terms.size() >= 4) {
    auto deadline = stage_deadline();
    for (auto& [name, transformed] : cfg.registry->apply_all(terms)) {
      if (clock::now() > deadline) break;
      if (transformed.size() < 3) continue;
      Query q;
      q.terms = transformed;
      auto matches = find_matches(ix, q);
      if (!matches.empty())
        report.via_transforms.emplace_back(
            name, best_per_entry(rank_matches(std::move(matches))));
    }
  }

  if (cfg.guess_stage)
    report.guesses = guess_all(terms, cfg.guess_bounds);

  if (report.verdict != Verdict::identified) {
    bool explained = !report.fuzzy.empty() || !report.via_transforms.empty() ||
                     !report.guesses.empty();
    report.verdict = explained ? Verdict::explained : Verdict::unexplained;
  }
  return report;
}

}  // namespace seqdb
