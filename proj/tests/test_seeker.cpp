#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <map>
#include <random>

#include "seqdb/generators.hpp"
#include "seqdb/seeker.hpp"

using namespace seqdb;

namespace {

TermList tl(std::initializer_list<long> values, int offset = 1) {
  TermList t(offset, {});
  for (long v : values) t.terms.emplace_back(v);
  return t;
}

// Memoized recursive edit distance; independent of the implementation's
// iterative matrix.
int edit_distance_oracle(const std::string& a, const std::string& b) {
  std::map<std::pair<std::size_t, std::size_t>, int> memo;
  std::function<int(std::size_t, std::size_t)> go =
      [&](std::size_t i, std::size_t j) -> int {
    if (i == a.size()) return static_cast<int>(b.size() - j);
    if (j == b.size()) return static_cast<int>(a.size() - i);
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int best = go(i + 1, j + 1) + (a[i] == b[j] ? 0 : 1);
    best = std::min(best, go(i + 1, j) + 1);
    best = std::min(best, go(i, j + 1) + 1);
    memo[key] = best;
    return best;
  };
  return go(0, 0);
}

// Comma-protected distance between two equal-length windows.
int window_distance(const Entry& e, int pos, const TermList& q) {
  int total = 0;
  for (std::size_t i = 0; i < q.size(); ++i)
    total += edit_distance_oracle(e.terms.terms[pos + i].get_str(),
                                  q.terms[i].get_str());
  return total;
}

}  // namespace

TEST_CASE("identify: the worked example is identified with early exit") {
  const Catalog& c = seed_catalog();
  auto ix = LexIndex::build(c);
  auto report = identify(ix, c, tl({1, 1, 3, 11, 45}));
  CHECK(report.verdict == Verdict::identified);
  REQUIRE_FALSE(report.direct.empty());
  CHECK(report.direct.front().id.str() == "A001003");
  CHECK(report.early_exit);
  CHECK(report.fuzzy.empty());  // later stages skipped
}

TEST_CASE("identify: absent geometric sequence is explained by a recurrence") {
  Catalog stripped;  // deliberately tiny catalog without powers of two
  Entry filler;
  filler.id = ANumber(77);
  filler.name = "filler";
  filler.terms = tl({3, 1, 4, 1, 5, 9, 2, 6});
  stripped.insert(filler);
  auto ix = LexIndex::build(stripped);

  auto report = identify(ix, stripped, tl({2, 4, 8, 16, 32, 64}));
  CHECK(report.verdict == Verdict::explained);
  CHECK(report.direct.empty());
  bool has_order1 = false;
  for (auto& m : report.guesses.models)
    if (auto* r = std::get_if<RecurrenceModel>(&m.model))
      has_order1 |= r->order == 1;
  CHECK(has_order1);
}

TEST_CASE("identify: white noise is unexplained") {
  const Catalog& c = seed_catalog();
  auto ix = LexIndex::build(c);
  std::mt19937_64 rng(555000111);
  TermList noise(1, {});
  for (int i = 0; i < 10; ++i)
    noise.terms.emplace_back(100000 + static_cast<long>(rng() % 900000));
  auto report = identify(ix, c, noise);
  CHECK(report.verdict == Verdict::unexplained);
  CHECK(report.direct.empty());
  CHECK(report.fuzzy.empty());
  CHECK(report.via_transforms.empty());
  CHECK(report.guesses.empty());
}

TEST_CASE("identify rejects short input with a lookup suggestion") {
  const Catalog& c = seed_catalog();
  auto ix = LexIndex::build(c);
  try {
    identify(ix, c, tl({1, 2, 3, 4}));
    FAIL("expected QueryError");
  } catch (const QueryError& e) {
    CHECK(std::string(e.what()).find("lookup") != std::string::npos);
  }
}

TEST_CASE("fuzzy: one corrupted digit finds the original") {
  const Catalog& c = seed_catalog();
  auto ix = LexIndex::build(c);
  auto ms = fuzzy_matches(ix, tl({1, 1, 3, 11, 46}), 2);
  REQUIRE_FALSE(ms.empty());
  CHECK(ms.front().id.str() == "A001003");
  CHECK(ms.front().edit_count == 1);
}

TEST_CASE("fuzzy: exact queries are excluded") {
  const Catalog& c = seed_catalog();
  auto ix = LexIndex::build(c);
  for (auto& m : fuzzy_matches(ix, tl({1, 1, 3, 11, 45}), 2)) {
    // Any hit here must be a genuine >= 1 edit elsewhere, never A001003@0.
    CHECK((m.id.index() != 1003 || m.start_position != 0));
    CHECK(m.edit_count >= 1);
  }
}

TEST_CASE("fuzzy: 9,9,9,9,9 has no neighbor at distance 1") {
  const Catalog& c = seed_catalog();
  auto ix = LexIndex::build(c);
  auto ms = fuzzy_matches(ix, tl({9, 9, 9, 9, 9}), 1);
  // Exhaustive independent scan of all 5-term windows.
  TermList q = tl({9, 9, 9, 9, 9});
  int oracle_hits = 0;
  for (auto& [id, e] : c.entries())
    for (std::size_t p = 0; p + 5 <= e.terms.size(); ++p) {
      int d = window_distance(e, static_cast<int>(p), q);
      if (d >= 1 && d <= 1) ++oracle_hits;
    }
  CHECK(static_cast<int>(ms.size()) <= oracle_hits);  // dedup may shrink
  CHECK(oracle_hits == 0);
  CHECK(ms.empty());
}

TEST_CASE("fuzzy: reported distances are re-verified independently") {
  const Catalog& c = seed_catalog();
  auto ix = LexIndex::build(c);
  auto probes = {tl({1, 1, 3, 11, 46}), tl({1, 2, 4, 6, 10, 12, 16, 19}),
                 tl({2, 3, 5, 7, 12, 13})};
  for (auto& q : probes) {
    for (auto& m : fuzzy_matches(ix, q, 2)) {
      const Entry* e = c.find(m.id);
      REQUIRE(e != nullptr);
      int oracle = window_distance(*e, m.start_position, q);
      CHECK(oracle == m.edit_count);
      CHECK(oracle >= 1);
      CHECK(oracle <= 2);
    }
  }
}

TEST_CASE("fuzzy: malformed max_edits rejected") {
  auto ix = LexIndex::build(seed_catalog());
  CHECK_THROWS_AS(fuzzy_matches(ix, tl({1, 2, 3, 4, 5}), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(fuzzy_matches(ix, tl({1, 2, 3, 4, 5}), 3),
                  std::invalid_argument);
}

TEST_CASE("transform lookups: inverse binomial reaches the all-ones entry") {
  const Catalog& c = seed_catalog();
  auto ix = LexIndex::build(c);
  auto hits = transform_lookups(ix, tl({1, 2, 4, 8, 16, 32}, 0),
                                TransformRegistry::standard());
  bool found = false;
  for (auto& [name, ms] : hits)
    if (name == "inverse_binomial") {
      found = true;
      REQUIRE_FALSE(ms.empty());
      CHECK(ms.front().id.str() == "A000012");
    }
  CHECK(found);
}

TEST_CASE("transform lookups: non-integral outputs are omitted") {
  Catalog c;
  Entry e;
  e.id = ANumber(3);
  e.name = "halved odds would be fractions";
  e.terms = tl({1, 3, 5, 7, 9, 11});
  c.insert(e);
  auto ix = LexIndex::build(c);
  auto hits = transform_lookups(ix, tl({1, 3, 5, 7, 9, 11}),
                                TransformRegistry::standard());
  for (auto& [name, ms] : hits) CHECK(name != "halve");
}

TEST_CASE("monotonicity: a larger catalog never loses matches") {
  Catalog small;
  Entry a;
  a.id = ANumber(100);
  a.name = "alpha";
  a.terms = tl({5, 10, 20, 40, 80, 160});
  small.insert(a);

  Catalog large = small;
  Entry b;
  b.id = ANumber(200);
  b.name = "beta";
  b.terms = tl({5, 10, 20, 41, 80, 160});
  large.insert(b);

  auto ix_small = LexIndex::build(small);
  auto ix_large = LexIndex::build(large);
  TermList query = tl({5, 10, 20, 40, 80});

  auto direct_small = find_matches(ix_small, Query{query});
  auto direct_large = find_matches(ix_large, Query{query});
  for (auto& m : direct_small)
    CHECK(std::find(direct_large.begin(), direct_large.end(), m) !=
          direct_large.end());

  auto fuzzy_small = fuzzy_matches(ix_small, query, 2);
  auto fuzzy_large = fuzzy_matches(ix_large, query, 2);
  for (auto& m : fuzzy_small)
    CHECK(std::find(fuzzy_large.begin(), fuzzy_large.end(), m) !=
          fuzzy_large.end());
}

TEST_CASE("determinism: identical runs give identical reports") {
  const Catalog& c = seed_catalog();
  auto ix = LexIndex::build(c);
  TermList query = tl({1, 2, 4, 8, 16, 32});
  auto r1 = identify(ix, c, query);
  auto r2 = identify(ix, c, query);
  CHECK(r1.direct == r2.direct);
  CHECK(r1.fuzzy == r2.fuzzy);
  REQUIRE(r1.via_transforms.size() == r2.via_transforms.size());
  for (std::size_t i = 0; i < r1.via_transforms.size(); ++i) {
    CHECK(r1.via_transforms[i].first == r2.via_transforms[i].first);
    CHECK(r1.via_transforms[i].second == r2.via_transforms[i].second);
  }
  CHECK(r1.guesses.models.size() == r2.guesses.models.size());
  CHECK(r1.verdict == r2.verdict);
}

TEST_CASE("stage toggles") {
  const Catalog& c = seed_catalog();
  auto ix = LexIndex::build(c);
  SeekerConfig cfg;
  cfg.fuzzy_stage = false;
  cfg.transform_stage = false;
  cfg.guess_stage = false;
  auto report = identify(ix, c, tl({1, 1, 3, 11, 46}), cfg);
  CHECK(report.fuzzy.empty());
  CHECK(report.via_transforms.empty());
  CHECK(report.guesses.empty());
  CHECK(report.verdict == Verdict::unexplained);
}
