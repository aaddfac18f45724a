#ifndef SEQDB_NUMCORE_HPP
#define SEQDB_NUMCORE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace seqdb {

/// Exact arbitrary-precision signed integer. Never rounded.
using Term = mpz_class;
/// Exact rational, kept canonical (reduced, positive denominator) by GMP.
using Rational = mpq_class;

/// A finite run of terms plus the index of the first one.
struct TermList {
  int offset = 1;
  std::vector<Term> terms;

  TermList() = default;
  TermList(int off, std::vector<Term> t) : offset(off), terms(std::move(t)) {}
  explicit TermList(std::vector<Term> t) : terms(std::move(t)) {}

  std::size_t size() const { return terms.size(); }
  bool empty() const { return terms.empty(); }
  bool operator==(const TermList&) const = default;
};

/// Reduced numerator/denominator pair; denominator >= 1.
struct RationalPair {
  Term num;
  Term den{1};

  RationalPair() = default;
  RationalPair(Term n, Term d);
  explicit RationalPair(const Rational& q) : num(q.get_num()), den(q.get_den()) {}
  Rational value() const { return Rational(num) / Rational(den); }
  bool integral() const { return den == 1; }
  bool operator==(const RationalPair&) const = default;
};

// ---------------------------------------------------------------------------
// Binomial coefficients and primes
// ---------------------------------------------------------------------------

/// Exact C(n, k). Zero when k < 0 or k > n >= 0; for n < 0 the upper
/// extension C(n, k) = (-1)^k C(k-n-1, k) applies, so transform code never
/// needs a special case.
Term binomial_coefficient(long n, long k);

/// All primes <= limit, ascending. limit >= 2.
std::vector<Term> primes_up_to(std::uint64_t limit);

/// n-th prime, 1-indexed: nth_prime(1) == 2.
Term nth_prime(std::uint64_t n);

struct PrimalityResult {
  bool prime = false;
  /// True when decided by the published deterministic Miller-Rabin witness
  /// set {2,3,...,37}, valid for all n < 3.317e24. Above that bound the
  /// answer used the first 64 prime bases and is probabilistic (error
  /// bound 4^-64 per the Miller-Rabin analysis for random bases).
  bool deterministic = true;
  int rounds = 0;
};

PrimalityResult classify_prime(const Term& t);
bool is_prime(const Term& t);

/// Effort bounds for factorize(); exhaustion yields "unresolved", never a
/// wrong answer.
struct FactorEffort {
  std::uint32_t trial_limit = 100'000;
  std::uint64_t rho_iterations = 20'000'000;
};

/// Nondecreasing prime factors of t >= 2 (with multiplicity), or nullopt if
/// the effort bound was exhausted before a full certified factorization.
/// Trial division up to effort.trial_limit, then Brent-cycle Pollard rho
/// with deterministic parameters; every emitted factor passes
/// classify_prime.
std::optional<std::vector<Term>> factorize(const Term& t,
                                           const FactorEffort& effort = {});

/// Ordered divisors of n >= 1.
std::vector<Term> divisors(const Term& n);
/// Sum of divisors of n >= 1.
Term divisor_sigma(const Term& n);
/// Moebius mu: 0 when squareful, else (-1)^(number of prime factors).
int moebius_mu(const Term& n);
Term gcd(const Term& a, const Term& b);
/// Bitwise xor of nonnegative values (Nim addition).
Term nim_sum(const Term& a, const Term& b);

// ---------------------------------------------------------------------------
// Encoding conventions: triangles row-by-row, squares by antidiagonals,
// rationals as linked numerator/denominator lists.
// ---------------------------------------------------------------------------

/// Concatenate triangle rows; row r must carry exactly r+1 entries.
TermList flatten_triangle_by_rows(const std::vector<TermList>& rows);

/// For d = 0..depth-1 emit cell(0,d), cell(1,d-1), ..., cell(d,0).
TermList flatten_square_by_antidiagonals(
    const std::function<Term(int row, int col)>& cell, int depth);

/// Parallel (numerators, denominators) lists in reduced form.
std::pair<TermList, TermList> link_rationals(
    const std::vector<RationalPair>& values);

// ---------------------------------------------------------------------------
// Canonical text
// ---------------------------------------------------------------------------

/// Base-10, comma-separated, no spaces, '-' for negatives. Empty list -> "".
std::string canonical_match_text(const TermList& t);
std::string canonical_term_text(const Term& t);

/// Inverse of canonical_match_text's grammar. Throws std::invalid_argument
/// on malformed input. Accepts optional whitespace around commas.
std::vector<Term> parse_term_text(std::string_view text);

/// Integer square root of n >= 0 (largest r with r*r <= n).
Term integer_sqrt(const Term& n);

}  // namespace seqdb

#endif  // SEQDB_NUMCORE_HPP
