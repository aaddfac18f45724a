#include <atomic>
#include <chrono>
#include <memory>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "seqdb/interface.hpp"

namespace seqdb {

namespace {

using nlohmann::json;

struct Snapshot {
  Catalog catalog;
  LexIndex index;
};

std::int64_t steady_seconds() {
  return std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

json match_to_json(const Catalog& c, const MatchResult& m) {
  const Entry* e = c.find(m.id);
  json j;
  j["id"] = m.id.str();
  j["name"] = e ? e->name : "";
  j["score"] = {{"edits", m.edit_count},
                {"matched", m.matched_count},
                {"start", m.start_position}};
  if (e) {
    TermList window;
    window.offset = e->terms.offset + m.start_position;
    auto begin = e->terms.terms.begin() + m.start_position;
    window.terms.assign(begin, begin + m.matched_count);
    j["window"] = canonical_match_text(window);
  }
  return j;
}

std::optional<TermList> parse_terms_param(const std::string& value,
                                          std::string& error) {
  TermList t;
  try {
    std::string spaced = value;
    for (auto& ch : spaced)
      if (ch == ' ') ch = ',';
    t.terms = parse_term_text(spaced);
  } catch (const std::invalid_argument& e) {
    error = e.what();
    return std::nullopt;
  }
  if (t.terms.empty()) {
    error = "no terms supplied";
    return std::nullopt;
  }
  return t;
}

}  // namespace

struct HttpService::Impl {
  std::shared_ptr<const Snapshot> snapshot;
  std::mutex snapshot_mutex;
  RateLimiter limiter;
  ServiceConfig cfg;
  httplib::Server server;
  std::thread worker;
  int port = 0;

  explicit Impl(Catalog catalog, ServiceConfig c)
      : limiter(c.app.rate_window_seconds), cfg(std::move(c)) {
    auto ix = LexIndex::build(catalog);
    snapshot = std::make_shared<const Snapshot>(
        Snapshot{std::move(catalog), std::move(ix)});
    if (!cfg.now) cfg.now = steady_seconds;
    setup_routes();
  }

  std::shared_ptr<const Snapshot> snap() {
    std::lock_guard<std::mutex> lock(snapshot_mutex);
    return snapshot;
  }

  std::string client_key(const httplib::Request& req) const {
    if (auto it = req.headers.find("X-Client-Key"); it != req.headers.end())
      return it->second;
    return req.remote_addr;
  }

  void setup_routes() {
    server.Get("/lookup", [this](const httplib::Request& req,
                                 httplib::Response& res) {
      auto s = snap();
      std::string error;
      if (!req.has_param("terms")) {
        res.status = 400;
        res.set_content(json{{"error", "missing terms parameter"}}.dump(),
                        "application/json");
        return;
      }
      auto terms = parse_terms_param(req.get_param_value("terms"), error);
      if (!terms) {
        res.status = 400;
        res.set_content(json{{"error", error}}.dump(), "application/json");
        return;
      }
      try {
        auto ranked = ranked_lookup(s->index, *terms);
        json out;
        out["query"] = canonical_match_text(*terms);
        out["matches"] = json::array();
        for (auto& m : ranked) out["matches"].push_back(match_to_json(s->catalog, m));
        res.set_content(out.dump(2), "application/json");
      } catch (const QueryError& e) {
        res.status = 400;
        res.set_content(json{{"error", e.what()}}.dump(), "application/json");
      }
    });

    server.Post("/seek", [this](const httplib::Request& req,
                                httplib::Response& res) {
      auto decision = limiter.admit(client_key(req), cfg.now());
      if (!decision.admitted) {
        res.status = 429;
        res.set_header("Retry-After", std::to_string(decision.retry_after));
        res.set_content(json{{"error", "rate limited: one seek per window"},
                             {"retry_after", decision.retry_after}}
                            .dump(),
                        "application/json");
        return;
      }
      std::string terms_text;
      if (!req.body.empty() && req.body.front() == '{') {
        try {
          auto parsed = json::parse(req.body);
          terms_text = parsed.at("terms").get<std::string>();
        } catch (const std::exception& e) {
          res.status = 400;
          res.set_content(json{{"error", std::string("bad JSON body: ") +
                                             e.what()}}
                              .dump(),
                          "application/json");
          return;
        }
      } else if (req.has_param("terms")) {
        terms_text = req.get_param_value("terms");
      } else {
        terms_text = req.body;
      }
      std::string error;
      auto terms = parse_terms_param(terms_text, error);
      if (!terms) {
        res.status = 400;
        res.set_content(json{{"error", error}}.dump(), "application/json");
        return;
      }
      auto s = snap();
      try {
        auto report = identify(s->index, s->catalog, *terms,
                               seeker_config_from(cfg.app));
        json out;
        out["verdict"] = verdict_name(report.verdict);
        out["direct"] = json::array();
        for (auto& m : report.direct)
          out["direct"].push_back(match_to_json(s->catalog, m));
        out["fuzzy"] = json::array();
        for (auto& m : report.fuzzy)
          out["fuzzy"].push_back(match_to_json(s->catalog, m));
        out["via_transforms"] = json::array();
        for (auto& [name, ms] : report.via_transforms) {
          json t;
          t["transform"] = name;
          t["matches"] = json::array();
          for (auto& m : ms) t["matches"].push_back(match_to_json(s->catalog, m));
          out["via_transforms"].push_back(t);
        }
        out["guesses"] = json::array();
        for (auto& g : report.guesses.models) {
          FittedModel copy = g;
          out["guesses"].push_back({{"kind", g.kind},
                                    {"description", describe_model(copy)},
                                    {"extrapolated",
                                     canonical_match_text(g.extrapolated)}});
        }
        res.set_content(out.dump(2), "application/json");
      } catch (const QueryError& e) {
        res.status = 400;
        res.set_content(json{{"error", e.what()}}.dump(), "application/json");
      }
    });

    server.Get(R"(/entry/(A?\d+))", [this](const httplib::Request& req,
                                           httplib::Response& res) {
      auto s = snap();
      ANumber id;
      try {
        std::string text = req.matches[1];
        id = text[0] == 'A' ? ANumber::parse(text)
                            : ANumber(std::stoi(text));
      } catch (const std::exception& e) {
        res.status = 400;
        res.set_content(json{{"error", e.what()}}.dump(), "application/json");
        return;
      }
      const Entry* e = s->catalog.find(id);
      if (!e) {
        res.status = 404;
        res.set_content(json{{"error", "no entry " + id.str()}}.dump(),
                        "application/json");
        return;
      }
      res.set_content(serialize_entry(*e), "text/plain");
    });

    server.Get("/search", [this](const httplib::Request& req,
                                 httplib::Response& res) {
      auto s = snap();
      try {
        std::vector<ANumber> ids;
        if (req.has_param("text"))
          ids = search_text(s->catalog, req.get_param_value("text"));
        else if (req.has_param("keyword"))
          ids = search_keyword(s->catalog, req.get_param_value("keyword"));
        else {
          res.status = 400;
          res.set_content(
              json{{"error", "need text= or keyword= parameter"}}.dump(),
              "application/json");
          return;
        }
        json out;
        out["results"] = json::array();
        for (auto& id : ids) {
          const Entry* e = s->catalog.find(id);
          out["results"].push_back(
              {{"id", id.str()}, {"name", e ? e->name : ""}});
        }
        res.set_content(out.dump(2), "application/json");
      } catch (const QueryError& e) {
        res.status = 400;
        res.set_content(json{{"error", e.what()}}.dump(), "application/json");
      }
    });

    server.Post("/mail", [this](const httplib::Request& req,
                                httplib::Response& res) {
      auto s = snap();
      RenderOptions opts;
      opts.max_references = cfg.app.abridge_references;
      res.set_content(mail_reply(s->index, s->catalog, req.body, opts,
                                 cfg.app.mail_max_commands),
                      "text/plain");
    });
  }
};

HttpService::HttpService(Catalog catalog, ServiceConfig cfg)
    : impl_(std::make_unique<Impl>(std::move(catalog), std::move(cfg))) {}

HttpService::~HttpService() { stop(); }

int HttpService::start() {
  if (impl_->cfg.port == 0) {
    impl_->port = impl_->server.bind_to_any_port(impl_->cfg.host);
  } else {
    if (!impl_->server.bind_to_port(impl_->cfg.host, impl_->cfg.port))
      throw std::runtime_error("cannot bind " + impl_->cfg.host + ":" +
                               std::to_string(impl_->cfg.port));
    impl_->port = impl_->cfg.port;
  }
  impl_->worker = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return impl_->port;
}

void HttpService::stop() {
  if (!impl_) return;
  if (impl_->server.is_running()) impl_->server.stop();
  if (impl_->worker.joinable()) impl_->worker.join();
}

void HttpService::reload(Catalog catalog) {
  auto ix = LexIndex::build(catalog);
  auto fresh = std::make_shared<const Snapshot>(
      Snapshot{std::move(catalog), std::move(ix)});
  std::lock_guard<std::mutex> lock(impl_->snapshot_mutex);
  impl_->snapshot = std::move(fresh);
}

int serve_forever(Catalog catalog, ServiceConfig cfg, std::ostream& log) {
  HttpService service(std::move(catalog), std::move(cfg));
  int port = service.start();
  log << "serving on port " << port << '\n';
  log.flush();
  // Block until interrupted; the service thread does the work.
  for (;;) std::this_thread::sleep_for(std::chrono::hours(1));
}

}  // namespace seqdb
