#include "seqdb/index.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace seqdb {

namespace {

std::string gram_key(const std::string& a, const std::string& b,
                     const std::string& c) {
  std::string k;
  k.reserve(a.size() + b.size() + c.size() + 2);
  k += a;
  k += ',';
  k += b;
  k += ',';
  k += c;
  return k;
}

std::string abs_text(const Term& t) {
  Term a;
  mpz_abs(a.get_mpz_t(), t.get_mpz_t());
  return a.get_str();
}

}  // namespace

void LexIndex::build_postings() {
  grams_.clear();
  abs_grams_.clear();
  for (std::uint32_t e = 0; e < entries_.size(); ++e) {
    const auto& terms = entries_[e];
    if (terms.values.size() < 3) continue;
    for (std::uint32_t p = 0; p + 3 <= terms.values.size(); ++p) {
      grams_[gram_key(terms.texts[p], terms.texts[p + 1], terms.texts[p + 2])]
          .push_back({e, p});
      abs_grams_[gram_key(abs_text(terms.values[p]),
                          abs_text(terms.values[p + 1]),
                          abs_text(terms.values[p + 2]))]
          .push_back({e, p});
    }
  }
}

LexIndex LexIndex::build(const Catalog& c) {
  LexIndex ix;
  for (auto& [id, entry] : c.entries()) {
    EntryTerms et;
    et.id = id;
    et.values = entry.terms.terms;
    et.texts.reserve(et.values.size());
    for (auto& v : et.values) et.texts.push_back(v.get_str());
    ix.entries_.push_back(std::move(et));
  }
  // entries() iterates the id-ordered map, so entries_ is sorted already.
  std::vector<std::size_t> order(ix.entries_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ta = ix.entries_[a];
    const auto& tb = ix.entries_[b];
    auto key = [](const EntryTerms& t) {
      std::string k;
      for (auto& s : t.texts) {
        k += s;
        k += ',';
      }
      return k;
    };
    std::string ka = key(ta), kb = key(tb);
    if (ka != kb) return ka < kb;
    return ta.id < tb.id;
  });
  for (auto i : order) ix.lex_order_.push_back(ix.entries_[i].id);
  ix.digest_ = catalog_digest(c);
  ix.build_postings();
  return ix;
}

LexIndex build_index(const Catalog& c) { return LexIndex::build(c); }

std::vector<MatchResult> LexIndex::find(const Query& q) const {
  const std::size_t qlen = q.terms.size();
  if (qlen < 3)
    throw QueryError(
        "sequence queries need at least 3 terms; use `search` for text or "
        "keyword lookups");
  int min_overlap = q.min_overlap <= 0 ? static_cast<int>(qlen)
                                       : q.min_overlap;
  min_overlap = std::clamp(min_overlap, 3, static_cast<int>(qlen));

  const auto& table = q.sign_insensitive ? abs_grams_ : grams_;
  std::string key;
  if (q.sign_insensitive)
    key = gram_key(abs_text(q.terms.terms[0]), abs_text(q.terms.terms[1]),
                   abs_text(q.terms.terms[2]));
  else
    key = gram_key(q.terms.terms[0].get_str(), q.terms.terms[1].get_str(),
                   q.terms.terms[2].get_str());

  std::vector<MatchResult> out;
  auto it = table.find(key);
  if (it == table.end()) return out;

  auto equal_at = [&](const Term& a, const Term& b) {
    if (!q.sign_insensitive) return a == b;
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) == 0;
  };

  for (const Posting& post : it->second) {
    const auto& entry = entries_[post.entry];
    const std::size_t avail = entry.values.size() - post.pos;
    const std::size_t overlap = std::min(qlen, avail);
    if (static_cast<int>(overlap) < min_overlap) continue;
    bool ok = true;
    for (std::size_t i = 3; i < overlap; ++i) {
      if (!equal_at(entry.values[post.pos + i], q.terms.terms[i])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    out.push_back({entry.id, static_cast<int>(post.pos),
                   static_cast<int>(overlap), 0});
  }
  // Postings iterate in map order per key; normalize to (id, position).
  std::sort(out.begin(), out.end(), [](const MatchResult& a, const MatchResult& b) {
    return std::tie(a.id, a.start_position) < std::tie(b.id, b.start_position);
  });
  return out;
}

std::vector<MatchResult> find_matches(const LexIndex& ix, const Query& q) {
  return ix.find(q);
}

std::vector<MatchResult> rank_matches(std::vector<MatchResult> ms) {
  std::sort(ms.begin(), ms.end(), [](const MatchResult& a, const MatchResult& b) {
    return a.score() < b.score();
  });
  return ms;
}

std::vector<MatchResult> best_per_entry(std::vector<MatchResult> ranked) {
  std::set<int> seen;
  std::vector<MatchResult> out;
  for (auto& m : ranked)
    if (seen.insert(m.id.index()).second) out.push_back(m);
  return out;
}

// ---------------------------------------------------------------------------
// Text and keyword search
// ---------------------------------------------------------------------------

namespace {

// Lowercase ASCII and fold the Latin-1 Supplement accents that show up in
// names (Schröder, Möbius, Padé, ...).
std::string fold_text(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    unsigned char c = s[i];
    if (c < 0x80) {
      out += static_cast<char>(std::tolower(c));
      continue;
    }
    if (c == 0xC3 && i + 1 < s.size()) {
      unsigned char d = s[++i];
      unsigned char cp = 0xC0 + (d - 0x80);
      char folded;
      if ((cp >= 0xC0 && cp <= 0xC5) || (cp >= 0xE0 && cp <= 0xE5))
        folded = 'a';
      else if (cp == 0xC7 || cp == 0xE7)
        folded = 'c';
      else if ((cp >= 0xC8 && cp <= 0xCB) || (cp >= 0xE8 && cp <= 0xEB))
        folded = 'e';
      else if ((cp >= 0xCC && cp <= 0xCF) || (cp >= 0xEC && cp <= 0xEF))
        folded = 'i';
      else if (cp == 0xD1 || cp == 0xF1)
        folded = 'n';
      else if ((cp >= 0xD2 && cp <= 0xD6) || (cp >= 0xF2 && cp <= 0xF6) ||
               cp == 0xD8 || cp == 0xF8)
        folded = 'o';
      else if ((cp >= 0xD9 && cp <= 0xDC) || (cp >= 0xF9 && cp <= 0xFC))
        folded = 'u';
      else if (cp == 0xDD || cp == 0xFD || cp == 0xFF)
        folded = 'y';
      else
        folded = '?';
      out += folded;
      continue;
    }
    out += static_cast<char>(c);
  }
  return out;
}

bool contains_folded(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

std::vector<ANumber> search_text(const Catalog& c, const std::string& needle) {
  if (needle.empty()) throw QueryError("text search needs a non-empty needle");
  const std::string folded = fold_text(needle);
  std::vector<ANumber> out;
  for (auto& [id, e] : c.entries()) {
    bool hit = contains_folded(fold_text(e.name), folded);
    auto scan = [&](const std::vector<std::string>& field) {
      for (auto& s : field)
        if (contains_folded(fold_text(s), folded)) return true;
      return false;
    };
    if (!hit) hit = scan(e.comments) || scan(e.formulas) || scan(e.references);
    if (hit) out.push_back(id);
  }
  return out;
}

std::vector<ANumber> search_keyword(const Catalog& c, const std::string& tag) {
  if (!keyword_vocabulary().count(tag)) {
    std::string msg = "unknown keyword \"" + tag + "\"; vocabulary:";
    for (auto& k : keyword_vocabulary()) msg += " " + k;
    throw QueryError(msg);
  }
  std::vector<ANumber> out;
  for (auto& [id, e] : c.entries())
    if (e.keywords.count(tag)) out.push_back(id);
  return out;
}

// ---------------------------------------------------------------------------
// Cache serialization
// ---------------------------------------------------------------------------

std::string LexIndex::serialize() const {
  std::ostringstream out;
  out << "seqdb-index 1\n";
  out << "digest " << digest_ << '\n';
  out << "entries " << entries_.size() << '\n';
  for (const auto& e : entries_) {
    out << e.id.str() << ' ' << e.values.size();
    for (const auto& t : e.texts) out << ' ' << t;
    out << '\n';
  }
  return out.str();
}

std::optional<LexIndex> LexIndex::deserialize(std::string_view blob,
                                              std::uint64_t expected_digest) {
  std::istringstream in{std::string(blob)};
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != "seqdb-index" || version != 1)
    return std::nullopt;
  std::string word;
  std::uint64_t digest = 0;
  if (!(in >> word >> digest) || word != "digest") return std::nullopt;
  if (digest != expected_digest) return std::nullopt;
  std::size_t count = 0;
  if (!(in >> word >> count) || word != "entries") return std::nullopt;
  LexIndex ix;
  ix.digest_ = digest;
  for (std::size_t i = 0; i < count; ++i) {
    EntryTerms et;
    std::string id_text;
    std::size_t n = 0;
    if (!(in >> id_text >> n)) return std::nullopt;
    try {
      et.id = ANumber::parse(id_text);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::string t;
      if (!(in >> t)) return std::nullopt;
      try {
        et.values.emplace_back(t, 10);
      } catch (const std::exception&) {
        return std::nullopt;
      }
      et.texts.push_back(t);
    }
    ix.entries_.push_back(std::move(et));
  }
  // Rebuild derived structures; they are cheap relative to entry storage.
  std::vector<std::size_t> order(ix.entries_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    std::string ka, kb;
    for (auto& s : ix.entries_[a].texts) ka += s, ka += ',';
    for (auto& s : ix.entries_[b].texts) kb += s, kb += ',';
    if (ka != kb) return ka < kb;
    return ix.entries_[a].id < ix.entries_[b].id;
  });
  for (auto i : order) ix.lex_order_.push_back(ix.entries_[i].id);
  ix.build_postings();
  return ix;
}

}  // namespace seqdb
