#ifndef SEQDB_INTERFACE_HPP
#define SEQDB_INTERFACE_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "seqdb/generators.hpp"
#include "seqdb/seeker.hpp"

namespace seqdb {

// ---------------------------------------------------------------------------
// Commands and the mail-body grammar
// ---------------------------------------------------------------------------

enum class Verb { lookup, seek, search, gen, ingest, serve };

struct Command {
  Verb verb = Verb::lookup;
  TermList terms;                  // for lookup/seek
  std::vector<std::string> args;   // residual arguments
  std::string client_key;
};

struct MailLineError {
  int line;  // 1-based within the body
  std::string message;
};

struct MailParseResult {
  std::vector<Command> commands;
  std::vector<MailLineError> errors;
  bool truncated = false;  // command cap reached; rest ignored
};

/// Every body line of the form "lookup <integers separated by spaces or
/// commas>" becomes a lookup command; other lines are ignored. A lookup line
/// with a bad token produces a per-line error and processing continues.
MailParseResult parse_mail_command(const std::string& body,
                                   int max_commands = 10);

// ---------------------------------------------------------------------------
// Rate limiting: at most one admitted seek per client per window
// ---------------------------------------------------------------------------

class RateLimiter {
 public:
  explicit RateLimiter(std::int64_t window_seconds = 3600)
      : window_(window_seconds) {}

  struct Decision {
    bool admitted = false;
    std::int64_t retry_after = 0;  // seconds; meaningful when rejected
  };

  /// Atomic admit decision for a monotone `now` (seconds). State updates
  /// only on admission.
  Decision admit(const std::string& client_key, std::int64_t now);

  std::int64_t window() const { return window_; }

 private:
  std::mutex mutex_;
  std::unordered_map<std::string, std::int64_t> last_admit_;
  std::int64_t window_;
};

// ---------------------------------------------------------------------------
// Rendering (human and porcelain forms)
// ---------------------------------------------------------------------------

struct RenderOptions {
  bool porcelain = false;
  int max_references = 3;  // Figure-1 style abridging
  int max_terms = 24;
};

void render_matches(std::ostream& out, const Catalog& c,
                    const std::vector<MatchResult>& ms, const RenderOptions& o);
void render_entry_abridged(std::ostream& out, const Entry& e,
                           const RenderOptions& o);
void render_seeker_report(std::ostream& out, const Catalog& c,
                          const SeekerReport& r, const RenderOptions& o);
std::string describe_model(const FittedModel& m);

/// The single lookup pipeline every surface (CLI, HTTP, mail) goes through.
std::vector<MatchResult> ranked_lookup(const LexIndex& ix, const TermList& terms);

/// Mail reply text for a whole body: per-command ranked matches plus
/// per-line error reports.
std::string mail_reply(const LexIndex& ix, const Catalog& c,
                       const std::string& body, const RenderOptions& o,
                       int max_commands = 10);

// ---------------------------------------------------------------------------
// Configuration (key = value text)
// ---------------------------------------------------------------------------

struct AppConfig {
  std::int64_t rate_window_seconds = 3600;
  int guess_max_order = 8;
  int guess_max_degree = 4;
  int guess_max_total_degree = 4;
  int seek_max_edits = 2;
  int mail_max_commands = 10;
  int abridge_references = 3;
};

/// Lines "key = value"; '#' starts a comment. Unknown keys are rejected.
AppConfig parse_config(std::istream& in);
AppConfig parse_config_text(const std::string& text);

SeekerConfig seeker_config_from(const AppConfig& a);

// ---------------------------------------------------------------------------
// HTTP service
// ---------------------------------------------------------------------------

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 0;  // 0 picks an ephemeral port
  AppConfig app;
  /// Injected clock (seconds, monotone) for the rate limiter.
  std::function<std::int64_t()> now;
};

class HttpService {
 public:
  HttpService(Catalog catalog, ServiceConfig cfg);
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  /// Bind and serve on a background thread; returns the bound port.
  int start();
  void stop();

  /// Swap in a new catalog+index snapshot atomically.
  void reload(Catalog catalog);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Blocking variant used by `seqdb serve`.
int serve_forever(Catalog catalog, ServiceConfig cfg, std::ostream& log);

// ---------------------------------------------------------------------------
// CLI
// ---------------------------------------------------------------------------

/// Full command-line entry point (argv without the program name).
/// Returns the process exit status; errors print one machine-readable
/// "error<TAB>message" line on err.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace seqdb

#endif  // SEQDB_INTERFACE_HPP
