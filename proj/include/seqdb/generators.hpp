#ifndef SEQDB_GENERATORS_HPP
#define SEQDB_GENERATORS_HPP

#include <functional>
#include <iosfwd>
#include <optional>

#include "seqdb/catalog.hpp"
#include "seqdb/real_bounds.hpp"

namespace seqdb {

// Super-Catalan numbers (Schroeder's second problem), 1-indexed.
/// a(1) = 1; a(n) = (1/n) sum_{k=0}^{n-2} C(2n-k-2, n-1) C(n-2, k).
Term super_catalan_formula(int n);
/// a(1) = a(2) = 1; (n+1) a(n+1) = 3(2n-1) a(n) - (n-2) a(n-1).
TermList super_catalan_recurrence(int count);

/// prime(n) - 1.
TermList a006093(int count);
/// Sum of divisors.
TermList a000203(int count);
/// floor(n*sqrt(n)) - sigma(n), via the integer square root of n^3.
TermList a055682(int count);
/// floor(H_n + exp(H_n) log(H_n)) - sigma(n) with certified floors.
/// Throws PrecisionExceeded if a floor cannot be pinned.
TermList a057641(int count);

/// 4^n C(3n, n).
Term a006588(int n);
/// sum_{k=0}^{n} C(4n+1, 2n-2k) C(n+k, k); equal to a006588(n).
Term a006588_sum(int n);

/// Pascal's triangle read by rows (rows 0..rows-1).
TermList pascal_flat(int rows);
/// Nim-addition table read by antidiagonals.
TermList nim_flat(int depth);

/// Motzkin numbers by the standard lattice-path recurrence.
TermList motzkin(int count);

/// Bernoulli numbers B_0..B_{count-1} (B_1 = -1/2) as linked
/// numerator/denominator lists.
std::pair<TermList, TermList> bernoulli_pair(int count);

/// EKG sequence: a(1)=1, a(2)=2, then least unused m with gcd(prev, m) >= 2.
TermList ekg(int count);

struct HomePrimeResult {
  enum class Status { resolved, unresolved };
  Status status = Status::unresolved;
  Term value;  // the home prime when resolved; last value reached otherwise
  int steps = 0;
};

/// Concatenate nondecreasing prime factors and repeat until a prime is
/// reached. a(1) = 1. Unresolved (never a wrong value) when step_bound or
/// the factoring effort is exhausted.
HomePrimeResult home_prime(const Term& n, int step_bound = 64,
                           const FactorEffort& effort = {});

/// a(n) = smallest integer > a(n-1) consistent with "n is in the sequence
/// iff a(n) is odd", by greedy parity-constraint propagation.
TermList bootstrap_a079000(int count);

/// Shoe lacings with n eyelet pairs: Hamiltonian cycles through the 2n
/// eyelets (the closed loop of the lace, reversal identified) in which every
/// eyelet has at least one cycle-neighbor on the other column. Brute force;
/// 1 <= n <= 6.
Term lacing_count(int n);

/// Registered generator with its cross-oracle self-check.
struct GeneratorInfo {
  ANumber id;
  std::string summary;
  int default_count = 20;
  int max_count = 1000;  // desk-scale regeneration cap
  std::function<TermList(int)> generate;
  /// Runs the generator's independent cross-oracle at the given count,
  /// logging detail; returns overall success.
  std::function<bool(int, std::ostream&)> check;
};

const std::vector<GeneratorInfo>& generator_table();
const GeneratorInfo* find_generator(const ANumber& id);

/// The full seed catalog: every generated sequence above plus literal
/// entries for sequences that have no generating rule here.
/// Deterministic: repeated calls produce equal catalogs.
const Catalog& seed_catalog();

/// Rebuilds the seed catalog from scratch (for determinism checks).
Catalog build_seed_catalog();

}  // namespace seqdb

#endif  // SEQDB_GENERATORS_HPP
