#include "seqdb/numcore.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <mutex>

namespace seqdb {

RationalPair::RationalPair(Term n, Term d) {
  if (d == 0) throw std::invalid_argument("RationalPair: zero denominator");
  Rational q(std::move(n), std::move(d));
  q.canonicalize();
  num = q.get_num();
  den = q.get_den();
}

Term binomial_coefficient(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  Term r;
  mpz_bin_ui(r.get_mpz_t(), Term(n).get_mpz_t(),
             static_cast<unsigned long>(k));
  return r;
}

// ---------------------------------------------------------------------------
// Primes
// ---------------------------------------------------------------------------

namespace {

std::vector<std::uint64_t> sieve_u64(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p * p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
  }
  for (std::uint64_t p = 2; p <= limit; ++p)
    if (!composite[p]) out.push_back(p);
  return out;
}

// Shared small-prime table for trial division at the default limit.
const std::vector<std::uint64_t>& default_trial_primes() {
  static const std::vector<std::uint64_t> table = sieve_u64(FactorEffort{}.trial_limit);
  return table;
}

// One Miller-Rabin round. n odd, n > base >= 2.
bool miller_rabin_round(const Term& n, unsigned long base) {
  Term d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Term x, b(base), nm1 = n - 1;
  mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == nm1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Deterministic witness set below the published 3.317e24 bound
// (Sorenson & Webster).
constexpr unsigned long kSmallWitnesses[] = {2,  3,  5,  7,  11, 13,
                                             17, 19, 23, 29, 31, 37};

const Term& deterministic_bound() {
  static const Term bound("3317044064679887385961981");
  return bound;
}

}  // namespace

std::vector<Term> primes_up_to(std::uint64_t limit) {
  if (limit < 2) throw std::invalid_argument("primes_up_to: limit must be >= 2");
  std::vector<Term> out;
  for (auto p : sieve_u64(limit)) out.emplace_back(static_cast<unsigned long>(p));
  return out;
}

Term nth_prime(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("nth_prime: n must be >= 1");
  // p_n < n (ln n + ln ln n) for n >= 6; small n handled by the floor of 13.
  double nd = static_cast<double>(n);
  std::uint64_t bound = 13;
  if (n >= 6) {
    double est = nd * (std::log(nd) + std::log(std::log(nd)));
    bound = static_cast<std::uint64_t>(est) + 16;
  }
  for (;;) {
    auto ps = sieve_u64(bound);
    if (ps.size() >= n) return Term(static_cast<unsigned long>(ps[n - 1]));
    bound = bound * 2;
  }
}

PrimalityResult classify_prime(const Term& t) {
  if (t < 0) throw std::invalid_argument("classify_prime: negative input");
  PrimalityResult res;
  if (t < 2) return res;
  for (unsigned long p : kSmallWitnesses) {
    if (t == p) {
      res.prime = true;
      return res;
    }
    if (mpz_divisible_ui_p(t.get_mpz_t(), p)) return res;
  }
  if (t < deterministic_bound()) {
    for (unsigned long w : kSmallWitnesses) {
      ++res.rounds;
      if (!miller_rabin_round(t, w)) return res;
    }
    res.prime = true;
    return res;
  }
  res.deterministic = false;
  static const std::vector<std::uint64_t> bases = sieve_u64(320);  // first 64 primes
  for (int i = 0; i < 64; ++i) {
    ++res.rounds;
    if (!miller_rabin_round(t, static_cast<unsigned long>(bases[i]))) return res;
  }
  res.prime = true;
  return res;
}

bool is_prime(const Term& t) { return classify_prime(t).prime; }

// ---------------------------------------------------------------------------
// Factorization: trial division, then Brent-cycle rho with a deterministic
// parameter schedule. The iteration budget is shared across the whole
// factorization; exhausting it yields nullopt.
// ---------------------------------------------------------------------------

namespace {

std::optional<Term> brent_rho(const Term& n, std::uint64_t& budget) {
  // n odd composite, no factor below the trial limit.
  for (unsigned long c = 1; budget > 0; ++c) {
    Term x = 2, y = 2, q = 1, factor = 1, ys = y;
    std::uint64_t r = 1;
    const std::uint64_t batch = 128;
    while (factor == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r && budget > 0; ++i) {
        y = (y * y + c) % n;
        --budget;
      }
      std::uint64_t k = 0;
      while (k < r && factor == 1 && budget > 0) {
        ys = y;
        std::uint64_t steps = std::min(batch, r - k);
        for (std::uint64_t i = 0; i < steps && budget > 0; ++i) {
          y = (y * y + c) % n;
          q = q * (x > y ? x - y : y - x) % n;
          --budget;
        }
        factor = gcd(q, n);
        k += steps;
      }
      r *= 2;
    }
    if (factor == n) {
      // Backtrack one step at a time from the last batch.
      factor = 1;
      while (factor == 1 && budget > 0) {
        ys = (ys * ys + c) % n;
        factor = gcd(x > ys ? x - ys : ys - x, n);
        --budget;
      }
    }
    if (factor > 1 && factor < n) return factor;
    // Cycle degenerated for this c; retry with the next constant.
  }
  return std::nullopt;
}

bool factor_into(const Term& n, std::vector<Term>& out,
                 const std::vector<std::uint64_t>& trial,
                 std::uint64_t& budget) {
  Term m = n;
  for (auto p : trial) {
    if (Term(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p) > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
      out.emplace_back(static_cast<unsigned long>(p));
    }
  }
  if (m == 1) return true;
  if (classify_prime(m).prime) {
    out.push_back(m);
    return true;
  }
  // Composite cofactor beyond the trial range: split recursively.
  auto f = brent_rho(m, budget);
  if (!f) return false;
  Term other = m / *f;
  return factor_into(*f, out, trial, budget) &&
         factor_into(other, out, trial, budget);
}

}  // namespace

std::optional<std::vector<Term>> factorize(const Term& t,
                                           const FactorEffort& effort) {
  if (t < 2) throw std::invalid_argument("factorize: input must be >= 2");
  const std::vector<std::uint64_t>* trial = &default_trial_primes();
  std::vector<std::uint64_t> custom;
  if (effort.trial_limit != FactorEffort{}.trial_limit) {
    custom = sieve_u64(effort.trial_limit);
    trial = &custom;
  }
  std::vector<Term> out;
  std::uint64_t budget = effort.rho_iterations;
  if (!factor_into(t, out, *trial, budget)) return std::nullopt;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Term> divisors(const Term& n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
  if (n == 1) return {Term(1)};
  auto fac = factorize(n);
  if (!fac) throw std::runtime_error("divisors: factorization effort exhausted");
  std::vector<Term> out{Term(1)};
  std::size_t i = 0;
  while (i < fac->size()) {
    std::size_t j = i;
    while (j < fac->size() && (*fac)[j] == (*fac)[i]) ++j;
    std::size_t e = j - i;
    std::size_t base = out.size();
    Term pw = 1;
    for (std::size_t k = 1; k <= e; ++k) {
      pw *= (*fac)[i];
      for (std::size_t d = 0; d < base; ++d) out.push_back(out[d] * pw);
    }
    i = j;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Term divisor_sigma(const Term& n) {
  if (n < 1) throw std::invalid_argument("divisor_sigma: n must be >= 1");
  if (n == 1) return 1;
  auto fac = factorize(n);
  if (!fac) throw std::runtime_error("divisor_sigma: factorization effort exhausted");
  Term sigma = 1;
  std::size_t i = 0;
  while (i < fac->size()) {
    std::size_t j = i;
    while (j < fac->size() && (*fac)[j] == (*fac)[i]) ++j;
    Term pw = 1, sum = 1;
    for (std::size_t k = i; k < j; ++k) {
      pw *= (*fac)[i];
      sum += pw;
    }
    sigma *= sum;
    i = j;
  }
  return sigma;
}

int moebius_mu(const Term& n) {
  if (n < 1) throw std::invalid_argument("moebius_mu: n must be >= 1");
  if (n == 1) return 1;
  auto fac = factorize(n);
  if (!fac) throw std::runtime_error("moebius_mu: factorization effort exhausted");
  for (std::size_t i = 1; i < fac->size(); ++i)
    if ((*fac)[i] == (*fac)[i - 1]) return 0;
  return fac->size() % 2 == 0 ? 1 : -1;
}

Term gcd(const Term& a, const Term& b) {
  Term r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Term nim_sum(const Term& a, const Term& b) {
  if (a < 0 || b < 0) throw std::invalid_argument("nim_sum: negative input");
  Term r;
  mpz_xor(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

TermList flatten_triangle_by_rows(const std::vector<TermList>& rows) {
  TermList out;
  out.offset = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != r + 1)
      throw std::invalid_argument("flatten_triangle_by_rows: row " +
                                  std::to_string(r) + " has " +
                                  std::to_string(rows[r].size()) +
                                  " entries, expected " + std::to_string(r + 1));
    out.terms.insert(out.terms.end(), rows[r].terms.begin(),
                     rows[r].terms.end());
  }
  return out;
}

TermList flatten_square_by_antidiagonals(
    const std::function<Term(int row, int col)>& cell, int depth) {
  if (depth < 1)
    throw std::invalid_argument("flatten_square_by_antidiagonals: depth < 1");
  TermList out;
  out.offset = 0;
  for (int d = 0; d < depth; ++d)
    for (int r = 0; r <= d; ++r) out.terms.push_back(cell(r, d - r));
  return out;
}

std::pair<TermList, TermList> link_rationals(
    const std::vector<RationalPair>& values) {
  TermList nums, dens;
  nums.offset = dens.offset = 0;
  for (const auto& v : values) {
    RationalPair reduced(v.num, v.den);
    nums.terms.push_back(reduced.num);
    dens.terms.push_back(reduced.den);
  }
  return {nums, dens};
}

std::string canonical_term_text(const Term& t) { return t.get_str(); }

std::string canonical_match_text(const TermList& t) {
  std::string out;
  for (std::size_t i = 0; i < t.terms.size(); ++i) {
    if (i) out += ',';
    out += t.terms[i].get_str();
  }
  return out;
}

std::vector<Term> parse_term_text(std::string_view text) {
  std::vector<Term> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) return out;
  for (;;) {
    skip_ws();
    std::size_t start = i;
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++digits;
    }
    if (digits == 0)
      throw std::invalid_argument("parse_term_text: expected integer at position " +
                                  std::to_string(start));
    out.emplace_back(std::string(text.substr(start, i - start)), 10);
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != ',')
      throw std::invalid_argument("parse_term_text: expected ',' at position " +
                                  std::to_string(i));
    ++i;
  }
  return out;
}

Term integer_sqrt(const Term& n) {
  if (n < 0) throw std::invalid_argument("integer_sqrt: negative input");
  Term r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace seqdb
