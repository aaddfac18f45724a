// Acceptance suite: runs every criterion end to end and prints one PASS/FAIL
// line each. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "seqdb/interface.hpp"

using namespace seqdb;
using nlohmann::json;

namespace {

struct Criterion {
  int number;
  std::string description;
  double budget_seconds;  // 0 = untimed
  std::function<bool(std::ostream&)> run;
};

TermList tl(std::initializer_list<long> values, int offset = 1) {
  TermList t(offset, {});
  for (long v : values) t.terms.emplace_back(v);
  return t;
}

// --- 1: worked example lookup ----------------------------------------------

bool worked_example(std::ostream& log) {
  const Catalog& c = seed_catalog();
  auto ix = LexIndex::build(c);
  auto start = std::chrono::steady_clock::now();
  auto ranked = ranked_lookup(ix, tl({1, 1, 3, 11, 45}));
  auto elapsed = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  log << "query time " << std::fixed << std::setprecision(4) << elapsed
      << " s, " << ranked.size() << " match(es)\n";
  if (ranked.empty()) return false;
  if (ranked.front().id.str() != "A001003") return false;
  return elapsed < 1.0;
}

// --- 2: formula/recurrence agreement ---------------------------------------

bool formula_recurrence(std::ostream& log) {
  auto rec = super_catalan_recurrence(300);
  for (int n = 2; n <= 300; ++n)
    if (super_catalan_formula(n) != rec.terms[n - 1]) {
      log << "mismatch at n=" << n << '\n';
      return false;
    }
  log << "exact agreement for 2 <= n <= 300\n";
  return true;
}

// --- 3: p-recursive recovery ------------------------------------------------

bool guess_recovery(std::ostream& log) {
  auto sc = super_catalan_recurrence(12);
  auto m = guess_p_recursive(sc, 8, 4);
  if (!m) {
    log << "no model found\n";
    return false;
  }
  bool shape = m->order == 2 && m->degree() == 1 &&
               m->polys[0] == std::vector<Term>{-1, 1} &&
               m->polys[1] == std::vector<Term>{-3, -6} &&
               m->polys[2] == std::vector<Term>{2, 1};
  if (!shape) {
    log << "model differs from (n+1)a(n+1) = 3(2n-1)a(n) - (n-2)a(n-1)\n";
    return false;
  }
  auto reference = super_catalan_recurrence(20);
  auto next = extrapolate(Model(*m), sc, 8);
  for (int i = 0; i < 8; ++i)
    if (next.terms[i] != reference.terms[12 + i]) {
      log << "extrapolated term " << 13 + i << " differs\n";
      return false;
    }
  log << "order 2 degree 1 recovered; terms 13..20 match the generator\n";
  return true;
}

// --- 4: transform round trips -----------------------------------------------

bool transform_round_trips(std::ostream& log) {
  std::mt19937_64 rng(404);
  const auto& reg = TransformRegistry::standard();
  const std::pair<const char*, const char*> pairs[] = {
      {"binomial", "inverse_binomial"},
      {"moebius_divisor", "inverse_moebius_divisor"},
      {"euler", "inverse_euler"},
      {"partial_sums", "inverse_partial_sums"},
  };
  for (int trial = 0; trial < 100; ++trial) {
    RationalSeq in;
    for (int i = 0; i < 30; ++i)
      in.emplace_back(static_cast<long>(rng() % 2000001) - 1000000);
    for (auto& [fwd, inv] : pairs) {
      auto* f = reg.find(fwd);
      auto* g = reg.find(inv);
      if (!f || !g) return false;
      if (g->apply(f->apply(in)) != in || f->apply(g->apply(in)) != in) {
        log << "round trip failed for " << fwd << " on trial " << trial << '\n';
        return false;
      }
    }
  }
  log << "4 transform pairs x 100 random length-30 inputs, exact\n";
  return true;
}

// --- 5: the binomial identity ------------------------------------------------

bool binomial_identity(std::ostream& log) {
  const long expected[] = {1, 12, 240, 5376};
  for (int n = 0; n < 4; ++n)
    if (a006588(n) != expected[n]) {
      log << "value mismatch at n=" << n << '\n';
      return false;
    }
  for (int n = 0; n <= 200; ++n)
    if (a006588(n) != a006588_sum(n)) {
      log << "identity fails at n=" << n << '\n';
      return false;
    }
  log << "sum equals 4^n C(3n,n) for 0 <= n <= 200; prefix 1,12,240,5376\n";
  return true;
}

// --- 6: the sigma inequality --------------------------------------------------

bool sigma_inequality(std::ostream& log) {
  auto seq = a055682(100000);
  for (int n = 3; n <= 100000; ++n)
    if (seq.terms[n - 1] < 1) {
      log << "a055682(" << n << ") < 1\n";
      return false;
    }
  log << "a055682(n) >= 1 for 3 <= n <= 10^5\n";
  return true;
}

// --- 7: Lagarias criterion at desk scale --------------------------------------

bool lagarias_nonnegative(std::ostream& log) {
  auto seq = a057641(5000);
  for (int n = 1; n <= 5000; ++n)
    if (seq.terms[n - 1] < 0) {
      log << "a057641(" << n << ") < 0\n";
      return false;
    }
  log << "a057641(n) >= 0 for 1 <= n <= 5000 with certified floors\n";
  return true;
}

// --- 8: EKG -------------------------------------------------------------------

bool ekg_criterion(std::ostream& log) {
  auto e = ekg(1000);
  if (canonical_match_text(TermList(1, {e.terms.begin(), e.terms.begin() + 20})) !=
      "1,2,4,6,3,9,12,8,10,5,15,18,14,7,21,24,16,20,22,11") {
    log << "first 20 terms differ\n";
    return false;
  }
  std::set<Term> seen(e.terms.begin(), e.terms.end());
  if (seen.size() != 1000) {
    log << "terms repeat within the first 1000\n";
    return false;
  }
  log << "first 20 terms exact; first 1000 distinct\n";
  return true;
}

// --- 9: home primes ------------------------------------------------------------

bool home_primes_criterion(std::ostream& log) {
  const char* expected[] = {"1",   "2",   "3",   "211", "5",  "23", "7",
                            "3331113965338635107", "311", "773", "11",
                            "223", "13"};
  FactorEffort effort;  // trial division to 10^5, 2*10^7 rho iterations
  for (int n = 1; n <= 13; ++n) {
    auto r = home_prime(Term(n), 64, effort);
    if (r.status != HomePrimeResult::Status::resolved ||
        r.value != Term(expected[n - 1])) {
      log << "a(" << n << ") wrong or unresolved\n";
      return false;
    }
    if (n == 8 && r.steps != 13) {
      log << "a(8) took " << r.steps << " steps, expected 13\n";
      return false;
    }
  }
  log << "a(1..13) match; a(8) reached in exactly 13 steps "
         "(trial limit 100000, rho budget 2e7)\n";
  return true;
}

// --- 10: bootstrap --------------------------------------------------------------

bool bootstrap_criterion(std::ostream& log) {
  auto b = bootstrap_a079000(1000);
  if (canonical_match_text(TermList(1, {b.terms.begin(), b.terms.begin() + 20})) !=
      "1,4,6,7,8,9,11,13,15,16,17,18,19,20,21,23,25,27,29,31") {
    log << "first 20 terms differ\n";
    return false;
  }
  std::set<long> members;
  for (auto& t : b.terms) members.insert(t.get_si());
  for (long n = 1; n <= 1000; ++n)
    if ((members.count(n) > 0) != (b.terms[n - 1] % 2 != 0)) {
      log << "biconditional fails at n=" << n << '\n';
      return false;
    }
  log << "first 20 terms exact; membership-parity biconditional to 1000\n";
  return true;
}

// --- 11: lacing ------------------------------------------------------------------

bool lacing_criterion(std::ostream& log) {
  const long expected[] = {1, 3, 42, 1080, 51840};
  for (int n = 1; n <= 5; ++n)
    if (lacing_count(n) != expected[n - 1]) {
      log << "count mismatch at n=" << n << '\n';
      return false;
    }
  log << "brute force reproduces 1, 3, 42, 1080, 51840\n";
  return true;
}

bool lacing_slow(std::ostream& log) {
  if (lacing_count(6) != 3758400) {
    log << "n=6 mismatch\n";
    return false;
  }
  log << "n = 6 gives 3758400\n";
  return true;
}

// --- 12: encodings ----------------------------------------------------------------

bool encodings_criterion(std::ostream& log) {
  if (canonical_match_text(pascal_flat(5)) != "1,1,1,1,2,1,1,3,3,1,1,4,6,4,1") {
    log << "Pascal flattening differs\n";
    return false;
  }
  if (canonical_match_text(nim_flat(5)) != "0,1,1,2,0,2,3,3,3,3,4,2,0,2,4") {
    log << "Nim antidiagonal flattening differs\n";
    return false;
  }
  auto [nums, dens] = bernoulli_pair(20);
  if (canonical_match_text(TermList(0, {nums.terms.begin(), nums.terms.begin() + 3})) !=
          "1,-1,1" ||
      canonical_match_text(TermList(0, {dens.terms.begin(), dens.terms.begin() + 3})) !=
          "1,2,6") {
    log << "Bernoulli pair prefix differs\n";
    return false;
  }
  for (int i = 0; i < 20; ++i) {
    if (dens.terms[i] < 1 || gcd(nums.terms[i], dens.terms[i]) != 1) {
      log << "pair not reduced at index " << i << '\n';
      return false;
    }
  }
  log << "Pascal, Nim and Bernoulli encodings byte-exact and reduced\n";
  return true;
}

// --- 13: fuzzy recovery -------------------------------------------------------------

bool fuzzy_recovery(std::ostream& log) {
  const Catalog& c = seed_catalog();
  auto ix = LexIndex::build(c);
  std::vector<const Entry*> entries;
  for (auto& [id, e] : c.entries()) entries.push_back(&e);

  std::mt19937_64 rng(13131313);
  int successes = 0, collisions = 0;
  const int trials = 200;
  for (int trial = 0; trial < trials; ++trial) {
    const Entry* e = entries[trial % entries.size()];
    int prefix = std::min<int>(6, static_cast<int>(e->terms.size()));
    TermList q(e->terms.offset, {e->terms.terms.begin(),
                                 e->terms.terms.begin() + prefix});
    // Corrupt one random digit, avoiding signs and leading zeroes.
    for (int attempt = 0;; ++attempt) {
      int ti = static_cast<int>(rng() % q.terms.size());
      std::string text = q.terms[ti].get_str();
      int pos = static_cast<int>(rng() % text.size());
      if (text[pos] == '-') continue;
      char replacement = static_cast<char>('0' + rng() % 10);
      if (replacement == text[pos]) continue;
      bool leading = (pos == 0 || (pos == 1 && text[0] == '-'));
      if (leading && replacement == '0' && text.size() - (text[0] == '-') > 1)
        continue;
      text[pos] = replacement;
      q.terms[ti] = Term(text, 10);
      break;
    }
    auto report = identify(ix, c, q);
    bool found = false;
    for (auto& m : report.fuzzy)
      found |= m.id == e->id && m.edit_count == 1;
    if (found) {
      ++successes;
    } else {
      ++collisions;
      log << "  trial " << trial << ": " << e->id.str() << " masked ("
          << verdict_name(report.verdict) << " via "
          << (report.early_exit ? "direct collision" : "other") << ") query "
          << canonical_match_text(q) << '\n';
    }
  }
  double rate = 100.0 * successes / trials;
  log << successes << "/" << trials << " recovered at edit 1 ("
      << std::fixed << std::setprecision(1) << rate << "%), " << collisions
      << " collision(s) logged\n";
  return successes >= trials * 95 / 100;
}

// --- 14: guess suite ------------------------------------------------------------------

bool guess_suite(std::ostream& log) {
  auto fib = guess_linear_recurrence(tl({1, 1, 2, 3, 5, 8, 13, 21, 34, 55}), 8);
  if (!fib || fib->order != 2 ||
      fib->coefficients != std::vector<Rational>{Rational(1), Rational(1)}) {
    log << "Fibonacci model wrong\n";
    return false;
  }
  auto sq = guess_polynomial(tl({0, 1, 4, 9, 16, 25, 36, 49}, 0));
  if (!sq || sq->degree() != 2 ||
      sq->coefficients != std::vector<Rational>{Rational(0), Rational(0),
                                                Rational(1)}) {
    log << "squares model wrong\n";
    return false;
  }
  TermList factorial(1, {});
  Term v = 1;
  for (long n = 1; n <= 10; ++n) {
    factorial.terms.push_back(v);
    v *= n;
  }
  auto fact = guess_p_recursive(factorial, 8, 4);
  if (!fact || fact->order != 1 || fact->degree() != 1) {
    log << "factorial model wrong\n";
    return false;
  }
  std::mt19937_64 rng(1414);
  TermList noise(1, {});
  for (int i = 0; i < 12; ++i)
    noise.terms.emplace_back(100000 + static_cast<long>(rng() % 900000));
  if (!guess_all(noise).empty()) {
    log << "noise produced a model\n";
    return false;
  }
  log << "Fibonacci C-finite, squares polynomial, factorial P-recursive, "
         "noise rejected\n";
  return true;
}

// --- 15: interface equivalence ----------------------------------------------------------

std::vector<std::string> ids_from_porcelain(const std::string& text) {
  std::vector<std::string> ids;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("match\t", 0) != 0) continue;
    auto p1 = line.find('\t');
    auto p2 = line.find('\t', p1 + 1);
    auto p3 = line.find('\t', p2 + 1);
    ids.push_back(line.substr(p2 + 1, p3 - p2 - 1));
  }
  return ids;
}

bool interface_equivalence(std::ostream& log) {
  // CLI lookup.
  std::istringstream empty_in;
  std::ostringstream cli_out, cli_err;
  int rc = run_cli({"--porcelain", "lookup", "1", "1", "3", "11", "45"},
                   empty_in, cli_out, cli_err);
  if (rc != 0) {
    log << "CLI lookup failed\n";
    return false;
  }
  auto cli_ids = ids_from_porcelain(cli_out.str());

  // Mail body.
  std::istringstream mail_in("lookup 1 1 3 11 45\n");
  std::ostringstream mail_out, mail_err;
  rc = run_cli({"--porcelain", "mail"}, mail_in, mail_out, mail_err);
  if (rc != 0) {
    log << "mail lookup failed\n";
    return false;
  }
  auto mail_ids = ids_from_porcelain(mail_out.str());

  // HTTP lookup + seek rate limiting.
  ServiceConfig cfg;
  std::int64_t fake_now = 50'000;
  cfg.now = [&fake_now] { return fake_now; };
  HttpService service(build_seed_catalog(), std::move(cfg));
  int port = service.start();
  httplib::Client client("127.0.0.1", port);
  auto res = client.Get("/lookup?terms=1,1,3,11,45");
  if (!res || res->status != 200) {
    log << "HTTP lookup failed\n";
    return false;
  }
  std::vector<std::string> http_ids;
  auto parsed = json::parse(res->body);
  for (auto& m : parsed["matches"])
    http_ids.push_back(m["id"].get<std::string>());

  if (cli_ids != mail_ids || cli_ids != http_ids || cli_ids.empty()) {
    auto dump = [&log](const char* tag, const std::vector<std::string>& v) {
      log << tag << ":";
      for (auto& s : v) log << ' ' << s;
      log << '\n';
    };
    log << "ranked id lists differ across surfaces\n";
    dump("cli", cli_ids);
    dump("mail", mail_ids);
    dump("http", http_ids);
    log << "http body: " << res->body << '\n';
    return false;
  }

  httplib::Headers key{{"X-Client-Key", "claire"}};
  auto first = client.Post("/seek", key, "1,2,4,8,16,32", "text/plain");
  auto second = client.Post("/seek", key, "1,2,4,8,16,32", "text/plain");
  if (!first || first->status != 200 || !second || second->status != 429) {
    log << "rate limiting did not engage\n";
    return false;
  }
  auto rejected = json::parse(second->body);
  if (!rejected.contains("retry_after") ||
      rejected["retry_after"].get<long>() <= 0) {
    log << "retry_after missing\n";
    return false;
  }
  service.stop();

  // Exactly one admit per window under 100 concurrent attempts.
  RateLimiter limiter(3600);
  std::atomic<int> admitted{0};
  std::vector<std::thread> threads;
  for (int i = 0; i < 100; ++i)
    threads.emplace_back([&] {
      if (limiter.admit("one-key", 7).admitted) ++admitted;
    });
  for (auto& t : threads) t.join();
  if (admitted.load() != 1) {
    log << "admits: " << admitted.load() << '\n';
    return false;
  }

  log << "CLI, mail and HTTP agree (" << cli_ids.size()
      << " ids); second seek rejected with retry-after; 1 admit under 100 "
         "threads\n";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  bool skip_slow = false;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--skip-slow") skip_slow = true;
    if (arg.rfind("--only=", 0) == 0) only = std::stoi(arg.substr(7));
  }

  std::vector<Criterion> criteria = {
      {1, "worked example: lookup 1 1 3 11 45 -> A001003 first", 1.0,
       worked_example},
      {2, "super-Catalan formula equals recurrence for n <= 300", 5.0,
       formula_recurrence},
      {3, "P-recursive guess recovers the order-2 degree-1 recurrence", 2.0,
       guess_recovery},
      {4, "transform inverse-forward round trips, 100 random inputs", 10.0,
       transform_round_trips},
      {5, "binomial identity sum = 4^n C(3n,n) for n <= 200", 0.0,
       binomial_identity},
      {6, "sigma(n) < n sqrt(n): a055682 positive to 10^5", 30.0,
       sigma_inequality},
      {7, "Lagarias expression nonnegative to 5000, certified floors", 60.0,
       lagarias_nonnegative},
      {8, "EKG first 20 exact, first 1000 distinct", 0.0, ekg_criterion},
      {9, "home primes a(1..13), a(8) in exactly 13 steps", 600.0,
       home_primes_criterion},
      {10, "bootstrap first 20 exact, parity biconditional to 1000", 0.0,
       bootstrap_criterion},
      {11, "shoe lacings 1, 3, 42, 1080, 51840", 60.0, lacing_criterion},
      {12, "Pascal/Nim/Bernoulli encodings byte-exact", 0.0,
       encodings_criterion},
      {13, "fuzzy recovery of corrupted prefixes, >= 95% of 200 trials", 0.0,
       fuzzy_recovery},
      {14, "guess suite: C-finite, polynomial, P-recursive, noise", 0.0,
       guess_suite},
      {15, "interface equivalence and rate limiting", 0.0,
       interface_equivalence},
  };
  if (!skip_slow)
    criteria.push_back({16, "optional slow: lacing n = 6 -> 3758400", 0.0,
                        lacing_slow});

  int failures = 0;
  for (auto& c : criteria) {
    if (only && c.number != only) continue;
    std::ostringstream log;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
      ok = c.run(log);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool in_budget = c.budget_seconds == 0.0 || elapsed <= c.budget_seconds;
    bool pass = ok && in_budget;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << " ["
              << std::fixed << std::setprecision(2) << elapsed << " s]: "
              << c.description << '\n';
    if (!error.empty()) std::cout << "  exception: " << error << '\n';
    if (!in_budget && ok)
      std::cout << "  exceeded budget of " << c.budget_seconds << " s\n";
    std::istringstream detail(log.str());
    std::string line;
    while (std::getline(detail, line)) std::cout << "  " << line << '\n';
    if (!pass) ++failures;
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
