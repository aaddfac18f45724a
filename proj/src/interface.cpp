#include "seqdb/interface.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace seqdb {

// ---------------------------------------------------------------------------
// Mail grammar
// ---------------------------------------------------------------------------

MailParseResult parse_mail_command(const std::string& body, int max_commands) {
  MailParseResult result;
  std::istringstream in(body);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    std::string trimmed = line.substr(b, e - b + 1);
    if (trimmed.rfind("lookup", 0) != 0) continue;  // non-command line
    std::string rest = trimmed.substr(6);
    if (!rest.empty() && rest[0] != ' ' && rest[0] != '\t' && rest[0] != ',')
      continue;  // e.g. "lookupx ..." is not a command
    if (static_cast<int>(result.commands.size()) >= max_commands) {
      result.truncated = true;
      result.errors.push_back(
          {lineno, "command limit reached; line ignored"});
      continue;
    }
    // Terms separated by spaces or commas.
    for (auto& ch : rest)
      if (ch == ',' || ch == '\t') ch = ' ';
    std::istringstream ts(rest);
    std::string tok;
    Command cmd;
    cmd.verb = Verb::lookup;
    bool bad = false;
    while (ts >> tok) {
      bool ok = !tok.empty();
      for (std::size_t i = 0; i < tok.size() && ok; ++i) {
        if (i == 0 && tok[i] == '-' && tok.size() > 1) continue;
        ok = std::isdigit(static_cast<unsigned char>(tok[i])) != 0;
      }
      if (!ok) {
        result.errors.push_back(
            {lineno, "not an integer: \"" + tok + "\""});
        bad = true;
        break;
      }
      cmd.terms.terms.emplace_back(tok, 10);
    }
    if (bad) continue;
    if (cmd.terms.empty()) {
      result.errors.push_back({lineno, "lookup line carries no terms"});
      continue;
    }
    result.commands.push_back(std::move(cmd));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Rate limiter
// ---------------------------------------------------------------------------

RateLimiter::Decision RateLimiter::admit(const std::string& client_key,
                                         std::int64_t now) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = last_admit_.find(client_key);
  if (it != last_admit_.end() && now - it->second < window_) {
    return {false, window_ - (now - it->second)};
  }
  last_admit_[client_key] = now;
  return {true, 0};
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

std::string terms_preview(const TermList& t, int max_terms) {
  std::string s;
  int shown = std::min<int>(max_terms, static_cast<int>(t.size()));
  for (int i = 0; i < shown; ++i) {
    if (i) s += ", ";
    s += t.terms[i].get_str();
  }
  if (shown < static_cast<int>(t.size())) s += ", ...";
  return s;
}

std::string poly_text(const std::vector<Rational>& coeffs,
                      const std::string& var) {
  std::string s;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] == 0 && coeffs.size() > 1) continue;
    Rational c = coeffs[i];
    std::string piece;
    if (c < 0) {
      piece += first ? "-" : " - ";
      c = -c;
    } else if (!first) {
      piece += " + ";
    }
    std::string cs = c.get_str();
    if (i == 0 || cs != "1") piece += cs;
    if (i > 0) {
      if (cs != "1") piece += "*";
      piece += var;
      if (i > 1) piece += "^" + std::to_string(i);
    }
    s += piece;
    first = false;
  }
  if (s.empty()) s = "0";
  return s;
}

std::vector<Rational> to_rationals(const std::vector<Term>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (auto& t : v) out.emplace_back(t);
  return out;
}

}  // namespace

std::string describe_model(const FittedModel& m) {
  std::ostringstream out;
  if (auto* r = std::get_if<RecurrenceModel>(&m.model)) {
    out << "linear recurrence, order " << r->order << ": a(n) = ";
    for (int j = 1; j <= r->order; ++j) {
      if (j > 1) out << " + ";
      out << "(" << r->coefficients[j - 1].get_str() << ")*a(n-" << j << ")";
    }
  } else if (auto* p = std::get_if<PolynomialModel>(&m.model)) {
    out << "polynomial, degree " << p->degree() << ": a(n) = "
        << poly_text(p->coefficients, "n");
  } else if (auto* q = std::get_if<RationalFunctionModel>(&m.model)) {
    out << "rational function: a(n) = (" << poly_text(q->numerator, "n")
        << ") / (" << poly_text(q->denominator, "n") << ")";
  } else if (auto* h = std::get_if<PRecursiveModel>(&m.model)) {
    out << "P-recursive, order " << h->order << " degree " << h->degree()
        << ": ";
    for (int i = 0; i <= h->order; ++i) {
      if (i) out << " + ";
      out << "(" << poly_text(to_rationals(h->polys[i]), "n") << ")*a(n+" << i
          << ")";
    }
    out << " = 0";
    if (h->ambiguous) out << "  [solution space dimension > 1]";
  }
  out << "  [fit on " << m.fit_terms << " terms, verified on all "
      << m.fit_terms + m.verification_terms << "]";
  if (!m.extrapolated.empty())
    out << "; next: " << canonical_match_text(m.extrapolated);
  return out.str();
}

void render_entry_abridged(std::ostream& out, const Entry& e,
                           const RenderOptions& o) {
  out << e.id.str() << "  " << e.name << '\n';
  out << "  terms: " << terms_preview(e.terms, o.max_terms) << '\n';
  if (!e.keywords.empty()) {
    out << "  keywords: ";
    bool first = true;
    for (auto& k : e.keywords) {
      if (!first) out << ',';
      out << k;
      first = false;
    }
    out << '\n';
  }
  for (auto& f : e.formulas) out << "  formula: " << f << '\n';
  int shown = 0;
  for (auto& d : e.references) {
    if (shown >= o.max_references) break;
    out << "  ref: " << d << '\n';
    ++shown;
  }
  std::size_t omitted = e.references.size() - shown + e.comments.size();
  if (omitted > 0)
    out << "  (" << omitted << " references/comments omitted)\n";
}

void render_matches(std::ostream& out, const Catalog& c,
                    const std::vector<MatchResult>& ms,
                    const RenderOptions& o) {
  if (o.porcelain) {
    int rank = 0;
    for (auto& m : ms) {
      const Entry* e = c.find(m.id);
      out << "match\t" << ++rank << '\t' << m.id.str() << '\t' << m.edit_count
          << '\t' << m.matched_count << '\t' << m.start_position << '\t'
          << (e ? e->name : "") << '\n';
    }
    return;
  }
  if (ms.empty()) {
    out << "no matches\n";
    return;
  }
  out << ms.size() << " match" << (ms.size() == 1 ? "" : "es") << ":\n\n";
  for (auto& m : ms) {
    const Entry* e = c.find(m.id);
    if (!e) continue;
    render_entry_abridged(out, *e, o);
    out << "  match: position " << m.start_position << ", " << m.matched_count
        << " terms";
    if (m.edit_count) out << ", " << m.edit_count << " edit(s)";
    out << "\n\n";
  }
}

void render_seeker_report(std::ostream& out, const Catalog& c,
                          const SeekerReport& r, const RenderOptions& o) {
  if (o.porcelain) {
    int rank = 0;
    for (auto& m : r.direct)
      out << "direct\t" << ++rank << '\t' << m.id.str() << '\t' << m.edit_count
          << '\t' << m.matched_count << '\t' << m.start_position << '\n';
    rank = 0;
    for (auto& m : r.fuzzy)
      out << "fuzzy\t" << ++rank << '\t' << m.id.str() << '\t' << m.edit_count
          << '\t' << m.matched_count << '\t' << m.start_position << '\n';
    for (auto& [name, ms] : r.via_transforms) {
      rank = 0;
      for (auto& m : ms)
        out << "transform\t" << name << '\t' << ++rank << '\t' << m.id.str()
            << '\t' << m.matched_count << '\t' << m.start_position << '\n';
    }
    for (auto& g : r.guesses.models)
      out << "guess\t" << g.kind << '\t'
          << canonical_match_text(g.extrapolated) << '\n';
    out << "verdict\t" << verdict_name(r.verdict) << '\n';
    return;
  }

  out << "== direct lookup ==\n";
  if (r.direct.empty())
    out << "no direct matches\n";
  else
    render_matches(out, c, r.direct, o);
  if (r.early_exit) {
    out << "(full match at entry start; later stages skipped)\n";
    out << "verdict: " << verdict_name(r.verdict) << '\n';
    return;
  }
  out << "== fuzzy (one or two character edits) ==\n";
  if (r.fuzzy.empty())
    out << "no fuzzy matches\n";
  else
    render_matches(out, c, r.fuzzy, o);
  out << "== transform lookups ==\n";
  if (r.via_transforms.empty()) out << "no transform hits\n";
  for (auto& [name, ms] : r.via_transforms) {
    out << "after " << name << ":\n";
    render_matches(out, c, ms, o);
  }
  out << "== guessed models ==\n";
  if (r.guesses.empty()) out << "no model found\n";
  for (auto& g : r.guesses.models) out << describe_model(g) << '\n';
  out << "verdict: " << verdict_name(r.verdict) << '\n';
}

std::vector<MatchResult> ranked_lookup(const LexIndex& ix,
                                       const TermList& terms) {
  Query q;
  q.terms = terms;
  return best_per_entry(rank_matches(find_matches(ix, q)));
}

std::string mail_reply(const LexIndex& ix, const Catalog& c,
                       const std::string& body, const RenderOptions& o,
                       int max_commands) {
  auto parsed = parse_mail_command(body, max_commands);
  std::ostringstream out;
  for (auto& err : parsed.errors)
    out << "error line " << err.line << ": " << err.message << '\n';
  for (auto& cmd : parsed.commands) {
    out << "lookup " << canonical_match_text(cmd.terms) << ":\n";
    try {
      render_matches(out, c, ranked_lookup(ix, cmd.terms), o);
    } catch (const QueryError& e) {
      out << "error: " << e.what() << '\n';
    }
  }
  if (parsed.commands.empty() && parsed.errors.empty())
    out << "no lookup commands found\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Config
// ---------------------------------------------------------------------------

AppConfig parse_config_text(const std::string& text) {
  AppConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    auto strip = [](std::string s) {
      std::size_t x = s.find_first_not_of(" \t\r");
      std::size_t y = s.find_last_not_of(" \t\r");
      return x == std::string::npos ? std::string() : s.substr(x, y - x + 1);
    };
    std::string key = strip(line.substr(0, eq));
    std::string value = strip(line.substr(eq + 1));
    long long v;
    try {
      v = std::stoll(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": not a number: " + value);
    }
    if (key == "rate.window_seconds")
      cfg.rate_window_seconds = v;
    else if (key == "guess.max_order")
      cfg.guess_max_order = static_cast<int>(v);
    else if (key == "guess.max_degree")
      cfg.guess_max_degree = static_cast<int>(v);
    else if (key == "guess.max_total_degree")
      cfg.guess_max_total_degree = static_cast<int>(v);
    else if (key == "seek.max_edits")
      cfg.seek_max_edits = static_cast<int>(v);
    else if (key == "mail.max_commands")
      cfg.mail_max_commands = static_cast<int>(v);
    else if (key == "render.max_references")
      cfg.abridge_references = static_cast<int>(v);
    else
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": unknown key " + key);
  }
  return cfg;
}

AppConfig parse_config(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

SeekerConfig seeker_config_from(const AppConfig& a) {
  SeekerConfig s;
  s.max_edits = a.seek_max_edits;
  s.guess_bounds.max_order = a.guess_max_order;
  s.guess_bounds.max_degree = a.guess_max_degree;
  s.guess_bounds.max_total_degree = a.guess_max_total_degree;
  return s;
}

}  // namespace seqdb
