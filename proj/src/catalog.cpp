#include "seqdb/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

namespace seqdb {

ANumber::ANumber(int index) : index_(index) {
  if (index < 1 || index > 999999)
    throw std::invalid_argument("ANumber index out of range: " +
                                std::to_string(index));
}

ANumber ANumber::parse(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'A' && text[0] != 'a'))
    throw std::invalid_argument("ANumber must start with 'A': " +
                                std::string(text));
  if (text.size() > 7)
    throw std::invalid_argument("ANumber too long: " + std::string(text));
  int v = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("malformed ANumber: " + std::string(text));
    v = v * 10 + (text[i] - '0');
  }
  return ANumber(v);
}

std::string ANumber::str() const {
  char buf[8];
  std::snprintf(buf, sizeof buf, "A%06d", index_);
  return buf;
}

const std::set<std::string>& keyword_vocabulary() {
  static const std::set<std::string> vocab{
      "base", "bref", "cofr", "cons", "core", "dead", "dumb", "easy",
      "eigen", "fini", "frac", "full", "hard", "hear", "less", "look",
      "more", "mult", "new",  "nice", "nonn", "obsc", "sign", "tabf",
      "tabl", "uned", "walk", "word"};
  return vocab;
}

bool Catalog::insert(Entry e) {
  auto [it, ok] = entries_.emplace(e.id, std::move(e));
  if (ok) journal_.push_back(it->first);
  return ok;
}

const Entry* Catalog::find(const ANumber& id) const {
  auto it = entries_.find(id);
  return it == entries_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (pos < text.size()) lines.emplace_back(text.substr(pos));
      break;
    }
    lines.emplace_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t c = s.find(',', pos);
    if (c == std::string_view::npos) {
      auto piece = strip(s.substr(pos));
      if (!piece.empty()) out.push_back(piece);
      break;
    }
    auto piece = strip(s.substr(pos, c - pos));
    if (!piece.empty()) out.push_back(piece);
    pos = c + 1;
  }
  return out;
}

}  // namespace

Entry parse_entry(std::string_view record, int base_line,
                  std::size_t max_terms) {
  auto lines = split_lines(record);
  Entry e;
  bool have_id = false, have_name = false, have_terms = false;
  bool have_offset = false, have_keywords = false;
  std::string term_text;
  int first_line = base_line + 1;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    int lineno = base_line + static_cast<int>(i) + 1;
    const std::string& raw = lines[i];
    if (strip(raw).empty()) continue;
    if (raw.size() < 2 || raw[0] != '%')
      throw EntryParseError(lineno, "expected \"%<tag> <ANumber> <payload>\"");
    char tag = raw[1];
    std::size_t sp = raw.find(' ', 1);
    if (sp == std::string::npos || sp != 2)
      throw EntryParseError(lineno, "expected space after tag");
    std::size_t id_end = raw.find(' ', 3);
    std::string id_text =
        id_end == std::string::npos ? raw.substr(3) : raw.substr(3, id_end - 3);
    ANumber id;
    try {
      id = ANumber::parse(id_text);
    } catch (const std::invalid_argument& ex) {
      throw EntryParseError(lineno, ex.what());
    }
    if (!have_id) {
      e.id = id;
      have_id = true;
    } else if (id != e.id) {
      throw EntryParseError(lineno, "ANumber differs from record's (" +
                                        e.id.str() + " vs " + id.str() + ")");
    }
    std::string payload =
        id_end == std::string::npos ? std::string() : raw.substr(id_end + 1);

    switch (tag) {
      case 'I': {
        if (have_offset) throw EntryParseError(lineno, "duplicate %I line");
        have_offset = true;
        std::string p = strip(payload);
        try {
          std::size_t used = 0;
          e.terms.offset = std::stoi(p, &used);
          if (used != p.size()) throw std::invalid_argument(p);
        } catch (const std::exception&) {
          throw EntryParseError(lineno, "malformed offset: \"" + p + "\"");
        }
        break;
      }
      case 'S':
        have_terms = true;
        term_text += strip(payload);
        break;
      case 'N':
        if (have_name) throw EntryParseError(lineno, "duplicate %N line");
        have_name = true;
        e.name = strip(payload);
        break;
      case 'K': {
        if (have_keywords) throw EntryParseError(lineno, "duplicate %K line");
        have_keywords = true;
        for (auto& k : split_commas(payload)) e.keywords.insert(k);
        break;
      }
      case 'F':
        e.formulas.push_back(strip(payload));
        break;
      case 'D':
        e.references.push_back(strip(payload));
        break;
      case 'C':
        e.comments.push_back(strip(payload));
        break;
      case 'Y': {
        for (auto& x : split_commas(payload)) {
          try {
            e.crossrefs.push_back(ANumber::parse(x));
          } catch (const std::invalid_argument& ex) {
            throw EntryParseError(lineno, ex.what());
          }
        }
        break;
      }
      case 'P':
        e.programs.push_back(strip(payload));
        break;
      default:
        throw EntryParseError(lineno,
                              std::string("unknown tag %") + tag);
    }
  }

  if (!have_terms) throw EntryParseError(first_line, "missing %S line");
  if (!have_name) throw EntryParseError(first_line, "missing %N line");
  try {
    e.terms.terms = parse_term_text(term_text);
  } catch (const std::invalid_argument& ex) {
    throw EntryParseError(first_line, ex.what());
  }
  if (e.terms.terms.empty())
    throw EntryParseError(first_line, "%S carries no terms");
  if (e.terms.terms.size() > max_terms)
    throw EntryParseError(first_line,
                          "entry stores " + std::to_string(e.terms.size()) +
                              " terms, above the cap of " +
                              std::to_string(max_terms));
  return e;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kLineLimit = 72;

// Wrap a comma-separated term string so every emitted line fits the limit.
// Chunks split only after commas, so concatenating payloads reparses.
std::vector<std::string> wrap_terms(const std::string& text,
                                    std::size_t prefix_len) {
  std::vector<std::string> chunks;
  std::size_t budget = kLineLimit - prefix_len;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text.size() - pos <= budget) {
      chunks.push_back(text.substr(pos));
      break;
    }
    // Last comma that keeps the chunk (including the comma) within budget.
    std::size_t cut = text.rfind(',', pos + budget - 1);
    if (cut == std::string::npos || cut < pos) {
      // A single term longer than the budget: split mid-number; payloads
      // concatenate on parse, so the digits reassemble.
      chunks.push_back(text.substr(pos, budget));
      pos += budget;
      continue;
    }
    chunks.push_back(text.substr(pos, cut - pos + 1));
    pos = cut + 1;
  }
  return chunks;
}

}  // namespace

std::string serialize_entry(const Entry& e) {
  std::string id = e.id.str();
  std::ostringstream out;
  out << "%I " << id << ' ' << e.terms.offset << '\n';
  std::string terms = canonical_match_text(e.terms);
  for (auto& chunk : wrap_terms(terms, 3 + id.size() + 1))
    out << "%S " << id << ' ' << chunk << '\n';
  out << "%N " << id << ' ' << e.name << '\n';
  if (!e.keywords.empty()) {
    out << "%K " << id << ' ';
    bool first = true;
    for (auto& k : e.keywords) {
      if (!first) out << ',';
      out << k;
      first = false;
    }
    out << '\n';
  }
  for (auto& f : e.formulas) out << "%F " << id << ' ' << f << '\n';
  for (auto& d : e.references) out << "%D " << id << ' ' << d << '\n';
  for (auto& c : e.comments) out << "%C " << id << ' ' << c << '\n';
  if (!e.crossrefs.empty()) {
    out << "%Y " << id << ' ';
    for (std::size_t i = 0; i < e.crossrefs.size(); ++i) {
      if (i) out << ',';
      out << e.crossrefs[i].str();
    }
    out << '\n';
  }
  for (auto& p : e.programs) out << "%P " << id << ' ' << p << '\n';
  return out.str();
}

LoadResult load_catalog_text(std::string_view text) {
  LoadResult result;
  auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size()) {
    while (i < lines.size() && strip(lines[i]).empty()) ++i;
    if (i >= lines.size()) break;
    std::size_t start = i;
    std::string record;
    while (i < lines.size() && !strip(lines[i]).empty()) {
      record += lines[i];
      record += '\n';
      ++i;
    }
    try {
      Entry e = parse_entry(record, static_cast<int>(start));
      if (!result.catalog.insert(std::move(e))) {
        result.issues.push_back({static_cast<int>(start) + 1,
                                 "duplicate ANumber; record rejected"});
      }
    } catch (const EntryParseError& ex) {
      result.issues.push_back({static_cast<int>(start) + 1, ex.what()});
    }
  }
  return result;
}

LoadResult load_catalog(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_catalog_text(buf.str());
}

std::string serialize_catalog(const Catalog& c) {
  std::string out;
  bool first = true;
  for (auto& [id, e] : c.entries()) {
    if (!first) out += '\n';
    out += serialize_entry(e);
    first = false;
  }
  return out;
}

std::vector<ValidationIssue> validate_entry(const Entry& e,
                                            const Catalog* context) {
  std::vector<ValidationIssue> issues;
  if (e.terms.size() < 4)
    issues.push_back({e.id, "fewer than 4 terms"});
  for (auto& k : e.keywords)
    if (!keyword_vocabulary().count(k))
      issues.push_back({e.id, "unknown keyword \"" + k + "\""});
  if (context) {
    for (auto& x : e.crossrefs)
      if (!context->find(x))
        issues.push_back({e.id, "dangling crossref " + x.str()});
  }
  return issues;
}

std::uint64_t catalog_digest(const Catalog& c) {
  std::uint64_t h = 14695981039346656037ull;
  for (char ch : serialize_catalog(c)) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace seqdb
