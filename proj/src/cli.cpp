#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "seqdb/interface.hpp"

namespace seqdb {

namespace {

TermList terms_from_args(const std::vector<std::string>& raw) {
  std::string joined;
  for (auto& a : raw) {
    joined += a;
    joined += ' ';
  }
  for (auto& ch : joined)
    if (ch == ' ' || ch == '\t') ch = ',';
  // Collapse runs of commas from mixed separators.
  std::string clean;
  bool prev_comma = true;
  for (char ch : joined) {
    if (ch == ',') {
      if (!prev_comma) clean += ',';
      prev_comma = true;
    } else {
      clean += ch;
      prev_comma = false;
    }
  }
  if (!clean.empty() && clean.back() == ',') clean.pop_back();
  TermList t;
  t.terms = parse_term_text(clean);
  return t;
}

struct CatalogSource {
  std::string path;  // empty -> built-in seed

  Catalog load(std::ostream& err, bool& ok) const {
    ok = true;
    if (path.empty()) return seed_catalog();
    std::ifstream in(path);
    if (!in) {
      err << "error\tcannot open catalog file: " << path << '\n';
      ok = false;
      return {};
    }
    auto result = load_catalog(in);
    for (auto& issue : result.issues)
      err << "warning\tcatalog line " << issue.line << ": " << issue.message
          << '\n';
    return std::move(result.catalog);
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"seqdb: integer sequence catalog, lookup and identification"};
  app.require_subcommand(1);

  std::string catalog_path;
  std::string config_path;
  bool porcelain = false;
  if (const char* env = std::getenv("SEQDB_CATALOG")) catalog_path = env;
  app.add_option("--catalog", catalog_path,
                 "catalog file (defaults to $SEQDB_CATALOG, then the built-in "
                 "seed catalog)");
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_flag("--porcelain", porcelain, "stable machine-readable output");

  auto* lookup_cmd = app.add_subcommand("lookup", "find a sequence by terms");
  std::vector<std::string> lookup_terms;
  lookup_cmd->add_option("terms", lookup_terms, "sequence terms")->required();

  auto* seek_cmd = app.add_subcommand(
      "seek", "staged identification: lookup, fuzzy, transforms, guessing");
  std::vector<std::string> seek_terms;
  seek_cmd->add_option("terms", seek_terms, "sequence terms")->required();

  auto* search_cmd = app.add_subcommand("search", "text or keyword search");
  std::string search_text_arg, search_keyword_arg;
  auto* topt = search_cmd->add_option("--text", search_text_arg,
                                      "substring of name/comments/references");
  auto* kopt = search_cmd->add_option("--keyword", search_keyword_arg,
                                      "catalog keyword");
  topt->excludes(kopt);

  auto* gen_cmd = app.add_subcommand("gen", "run a sequence generator");
  std::string gen_id;
  int gen_count = 0;
  bool gen_check = false;
  gen_cmd->add_option("anumber", gen_id, "A-number of the generator")->required();
  gen_cmd->add_option("--count", gen_count, "number of terms");
  gen_cmd->add_flag("--check", gen_check, "run the generator's cross-oracle");

  auto* ingest_cmd =
      app.add_subcommand("ingest", "load, validate and write a catalog");
  std::vector<std::string> ingest_files;
  std::string ingest_out;
  ingest_cmd->add_option("files", ingest_files, "entry files")->required();
  ingest_cmd->add_option("--out", ingest_out, "output path (default stdout)");

  auto* serve_cmd = app.add_subcommand("serve", "HTTP query service");
  std::string serve_addr = "127.0.0.1:8080";
  long rate_window = 3600;
  serve_cmd->add_option("--addr", serve_addr, "host:port");
  serve_cmd->add_option("--rate-window", rate_window,
                        "seconds between admitted seeks per client");

  auto* mail_cmd = app.add_subcommand(
      "mail", "process an email-style command body from stdin");

  std::vector<const char*> argv;
  argv.push_back("seqdb");
  for (auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  AppConfig config;
  if (!config_path.empty()) {
    std::ifstream cf(config_path);
    if (!cf) {
      err << "error\tcannot open config file: " << config_path << '\n';
      return 1;
    }
    try {
      config = parse_config(cf);
    } catch (const std::invalid_argument& e) {
      err << "error\t" << e.what() << '\n';
      return 1;
    }
  }

  RenderOptions opts;
  opts.porcelain = porcelain;
  opts.max_references = config.abridge_references;
  CatalogSource source{catalog_path};

  try {
    if (*lookup_cmd) {
      bool ok = true;
      Catalog c = source.load(err, ok);
      if (!ok) return 1;
      auto ix = LexIndex::build(c);
      auto ranked = ranked_lookup(ix, terms_from_args(lookup_terms));
      render_matches(out, c, ranked, opts);
      return 0;
    }
    if (*seek_cmd) {
      bool ok = true;
      Catalog c = source.load(err, ok);
      if (!ok) return 1;
      auto ix = LexIndex::build(c);
      auto report = identify(ix, c, terms_from_args(seek_terms),
                             seeker_config_from(config));
      render_seeker_report(out, c, report, opts);
      return 0;
    }
    if (*search_cmd) {
      if (search_text_arg.empty() && search_keyword_arg.empty()) {
        err << "error\tsearch needs --text or --keyword\n";
        return 2;
      }
      bool ok = true;
      Catalog c = source.load(err, ok);
      if (!ok) return 1;
      auto ids = search_text_arg.empty()
                     ? search_keyword(c, search_keyword_arg)
                     : search_text(c, search_text_arg);
      for (auto& id : ids) {
        const Entry* e = c.find(id);
        if (porcelain)
          out << id.str() << '\t' << (e ? e->name : "") << '\n';
        else
          out << id.str() << "  " << (e ? e->name : "") << '\n';
      }
      if (ids.empty() && !porcelain) out << "no results\n";
      return 0;
    }
    if (*gen_cmd) {
      ANumber id = ANumber::parse(gen_id);
      const GeneratorInfo* g = find_generator(id);
      if (!g) {
        err << "error\tno generator for " << id.str() << "; available:";
        for (auto& info : generator_table()) err << ' ' << info.id.str();
        err << '\n';
        return 2;
      }
      int count = gen_count > 0 ? gen_count : g->default_count;
      if (count > g->max_count) {
        err << "error\t" << id.str() << " regeneration is capped at "
            << g->max_count << " terms\n";
        return 2;
      }
      if (gen_check) {
        std::ostringstream log;
        bool passed = g->check(count, log);
        out << log.str();
        out << (passed ? "check passed\n" : "check FAILED\n");
        return passed ? 0 : 1;
      }
      TermList terms = g->generate(count);
      if (porcelain)
        out << "gen\t" << id.str() << '\t' << canonical_match_text(terms) << '\n';
      else
        out << id.str() << " (" << g->summary
            << "): " << canonical_match_text(terms) << '\n';
      return 0;
    }
    if (*ingest_cmd) {
      Catalog combined;
      bool had_errors = false;
      for (auto& path : ingest_files) {
        std::ifstream f(path);
        if (!f) {
          err << "error\tcannot open " << path << '\n';
          return 1;
        }
        auto result = load_catalog(f);
        for (auto& issue : result.issues) {
          out << (porcelain ? "issue\t" : "issue: ") << path << ':'
              << issue.line << (porcelain ? "\t" : " ") << issue.message
              << '\n';
          had_errors = true;
        }
        for (auto& [id, e] : result.catalog.entries()) {
          if (!combined.insert(e)) {
            out << (porcelain ? "issue\t" : "issue: ") << path
                << (porcelain ? "\t" : " ") << "duplicate " << id.str()
                << " across files\n";
            had_errors = true;
          }
        }
      }
      for (auto& [id, e] : combined.entries())
        for (auto& issue : validate_entry(e, &combined))
          out << (porcelain ? "warn\t" : "warning: ") << id.str()
              << (porcelain ? "\t" : " ") << issue.message << '\n';
      std::string serialized = serialize_catalog(combined);
      if (ingest_out.empty()) {
        out << serialized;
      } else {
        std::ofstream o(ingest_out);
        if (!o) {
          err << "error\tcannot write " << ingest_out << '\n';
          return 1;
        }
        o << serialized;
        out << (porcelain ? "ingested\t" : "ingested ") << combined.size()
            << (porcelain ? "\t" : " entries -> ") << ingest_out << '\n';
      }
      return had_errors ? 1 : 0;
    }
    if (*serve_cmd) {
      bool ok = true;
      Catalog c = source.load(err, ok);
      if (!ok) return 1;
      auto colon = serve_addr.rfind(':');
      if (colon == std::string::npos) {
        err << "error\t--addr must be host:port\n";
        return 2;
      }
      ServiceConfig scfg;
      scfg.host = serve_addr.substr(0, colon);
      scfg.port = std::stoi(serve_addr.substr(colon + 1));
      scfg.app = config;
      scfg.app.rate_window_seconds = rate_window;
      return serve_forever(std::move(c), std::move(scfg), out);
    }
    if (*mail_cmd) {
      bool ok = true;
      Catalog c = source.load(err, ok);
      if (!ok) return 1;
      auto ix = LexIndex::build(c);
      std::ostringstream body;
      body << in.rdbuf();
      out << mail_reply(ix, c, body.str(), opts, config.mail_max_commands);
      return 0;
    }
  } catch (const QueryError& e) {
    err << "error\t" << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error\t" << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error\t" << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace seqdb
