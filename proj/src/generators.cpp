#include "seqdb/generators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace seqdb {

// ---------------------------------------------------------------------------
// Super-Catalan numbers
// ---------------------------------------------------------------------------

Term super_catalan_formula(int n) {
  if (n < 1) throw std::invalid_argument("super_catalan_formula: n >= 1");
  if (n == 1) return 1;
  Term sum = 0;
  for (int k = 0; k <= n - 2; ++k)
    sum += binomial_coefficient(2 * n - k - 2, n - 1) *
           binomial_coefficient(n - 2, k);
  if (!mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(n)))
    throw std::logic_error("super_catalan_formula: sum not divisible by n");
  Term out;
  mpz_divexact_ui(out.get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

TermList super_catalan_recurrence(int count) {
  if (count < 1) throw std::invalid_argument("super_catalan_recurrence: count >= 1");
  TermList out(1, {});
  out.terms.reserve(count);
  out.terms.emplace_back(1);
  if (count >= 2) out.terms.emplace_back(1);
  for (int n = 2; static_cast<int>(out.terms.size()) < count; ++n) {
    // (n+1) a(n+1) = 3(2n-1) a(n) - (n-2) a(n-1)
    Term rhs = 3 * Term(2 * n - 1) * out.terms[n - 1] -
               Term(n - 2) * out.terms[n - 2];
    if (!mpz_divisible_ui_p(rhs.get_mpz_t(), static_cast<unsigned long>(n + 1)))
      throw std::logic_error("super_catalan_recurrence: inexact division");
    Term next;
    mpz_divexact_ui(next.get_mpz_t(), rhs.get_mpz_t(),
                    static_cast<unsigned long>(n + 1));
    out.terms.push_back(std::move(next));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Number-theoretic sequences
// ---------------------------------------------------------------------------

namespace {

// sigma(1..n) by divisor-sum sieve.
std::vector<unsigned long> sigma_table(int n) {
  std::vector<unsigned long> s(n + 1, 0);
  for (int d = 1; d <= n; ++d)
    for (int m = d; m <= n; m += d) s[m] += static_cast<unsigned>(d);
  return s;
}

}  // namespace

TermList a006093(int count) {
  if (count < 1) throw std::invalid_argument("a006093: count >= 1");
  // p_n < n(ln n + ln ln n) for n >= 6.
  std::uint64_t bound = 15;
  if (count >= 6) {
    double nd = count;
    bound = static_cast<std::uint64_t>(nd * (std::log(nd) + std::log(std::log(nd)))) + 16;
  }
  std::vector<Term> primes;
  for (;;) {
    primes = primes_up_to(bound);
    if (primes.size() >= static_cast<std::size_t>(count)) break;
    bound *= 2;
  }
  TermList out(1, {});
  for (int i = 0; i < count; ++i) out.terms.push_back(primes[i] - 1);
  return out;
}

TermList a000203(int count) {
  if (count < 1) throw std::invalid_argument("a000203: count >= 1");
  auto s = sigma_table(count);
  TermList out(1, {});
  for (int n = 1; n <= count; ++n) out.terms.emplace_back(s[n]);
  return out;
}

TermList a055682(int count) {
  if (count < 1) throw std::invalid_argument("a055682: count >= 1");
  auto s = sigma_table(count);
  TermList out(1, {});
  for (int n = 1; n <= count; ++n) {
    Term cube = Term(n) * n * n;
    out.terms.push_back(integer_sqrt(cube) - Term(s[n]));
  }
  return out;
}

TermList a057641(int count) {
  if (count < 1) throw std::invalid_argument("a057641: count >= 1");
  auto s = sigma_table(count);
  TermList out(1, {});
  Rational h(0);
  for (int n = 1; n <= count; ++n) {
    h += Rational(1, n);
    HighPrecisionValue v(harmonic_expression_evaluator(h), 128);
    out.terms.push_back(v.floor_or_throw() - Term(s[n]));
  }
  return out;
}

Term a006588(int n) {
  if (n < 0) throw std::invalid_argument("a006588: n >= 0");
  Term pow4;
  mpz_ui_pow_ui(pow4.get_mpz_t(), 4, static_cast<unsigned long>(n));
  return pow4 * binomial_coefficient(3 * n, n);
}

Term a006588_sum(int n) {
  if (n < 0) throw std::invalid_argument("a006588_sum: n >= 0");
  Term sum = 0;
  for (int k = 0; k <= n; ++k)
    sum += binomial_coefficient(4 * n + 1, 2 * n - 2 * k) *
           binomial_coefficient(n + k, k);
  return sum;
}

TermList pascal_flat(int rows) {
  if (rows < 1) throw std::invalid_argument("pascal_flat: rows >= 1");
  std::vector<TermList> triangle;
  for (int r = 0; r < rows; ++r) {
    TermList row(0, {});
    for (int k = 0; k <= r; ++k) row.terms.push_back(binomial_coefficient(r, k));
    triangle.push_back(std::move(row));
  }
  return flatten_triangle_by_rows(triangle);
}

TermList nim_flat(int depth) {
  return flatten_square_by_antidiagonals(
      [](int r, int c) { return nim_sum(Term(r), Term(c)); }, depth);
}

TermList motzkin(int count) {
  if (count < 1) throw std::invalid_argument("motzkin: count >= 1");
  TermList out(0, {});
  out.terms.emplace_back(1);
  for (int n = 1; n < count; ++n) {
    Term m = out.terms[n - 1];
    for (int k = 0; k + 2 <= n; ++k) m += out.terms[k] * out.terms[n - 2 - k];
    out.terms.push_back(std::move(m));
  }
  return out;
}

std::pair<TermList, TermList> bernoulli_pair(int count) {
  if (count < 1) throw std::invalid_argument("bernoulli_pair: count >= 1");
  std::vector<Rational> b{Rational(1)};
  for (int n = 1; n < count; ++n) {
    // sum_{k=0}^{n} C(n+1,k) B_k = 0  =>  B_n = -(sum below)/(n+1)
    Rational s(0);
    for (int k = 0; k < n; ++k)
      s += Rational(binomial_coefficient(n + 1, k)) * b[k];
    b.push_back(-s / Rational(n + 1));
  }
  std::vector<RationalPair> pairs;
  pairs.reserve(b.size());
  for (auto& q : b) pairs.emplace_back(q);
  return link_rationals(pairs);
}

TermList ekg(int count) {
  if (count < 1) throw std::invalid_argument("ekg: count >= 1");
  TermList out(1, {});
  out.terms.emplace_back(1);
  if (count >= 2) out.terms.emplace_back(2);
  std::vector<bool> used{false, true, true};  // index by value
  long prev = 2;
  while (static_cast<int>(out.terms.size()) < count) {
    long m = 2;
    for (;; ++m) {
      if (static_cast<std::size_t>(m) < used.size() && used[m]) continue;
      if (std::gcd(prev, m) >= 2) break;
    }
    if (static_cast<std::size_t>(m) >= used.size()) used.resize(m + 1, false);
    used[m] = true;
    out.terms.emplace_back(m);
    prev = m;
  }
  return out;
}

HomePrimeResult home_prime(const Term& n, int step_bound,
                           const FactorEffort& effort) {
  if (n < 1) throw std::invalid_argument("home_prime: n >= 1");
  HomePrimeResult res;
  if (n == 1) {  // a(1) = 1 by the reference listing
    res.status = HomePrimeResult::Status::resolved;
    res.value = 1;
    return res;
  }
  Term cur = n;
  for (;;) {
    if (is_prime(cur)) {
      res.status = HomePrimeResult::Status::resolved;
      res.value = cur;
      return res;
    }
    if (res.steps >= step_bound) {
      res.value = cur;
      return res;
    }
    auto fac = factorize(cur, effort);
    if (!fac) {
      res.value = cur;
      return res;
    }
    std::string cat;
    for (auto& f : *fac) cat += f.get_str();
    cur = Term(cat, 10);
    ++res.steps;
  }
}

TermList bootstrap_a079000(int count) {
  if (count < 1) throw std::invalid_argument("bootstrap_a079000: count >= 1");
  enum class Parity { unknown, odd, even };
  std::map<long, Parity> required;
  TermList out(1, {});
  long prev = 0;
  for (long n = 1; n <= count; ++n) {
    long v = prev + 1;
    for (;; ++v) {
      Parity req;
      auto it = required.find(n);
      if (it != required.end())
        req = it->second;
      else
        // Membership of n is still open only when n > prev; this choice
        // settles it: v == n makes n a member, v > n skips it for good.
        req = (v == n) ? Parity::odd : Parity::even;
      bool odd = v % 2 != 0;
      if ((req == Parity::odd) == odd) break;
    }
    for (long w = prev + 1; w < v; ++w) required[w] = Parity::even;
    required[v] = Parity::odd;  // v is now a member, so a(v) must be odd
    out.terms.emplace_back(v);
    prev = v;
  }
  return out;
}

namespace {

struct LacingSearch {
  int n, total;
  std::vector<int> perm;
  std::vector<bool> used;
  unsigned long count = 0;

  bool col(int v) const { return v >= n; }

  void dfs() {
    if (static_cast<int>(perm.size()) == total) {
      // Close the loop; re-check the two vertices adjacent to the seam.
      bool ca = col(perm[total - 2]), cb = col(perm[total - 1]);
      bool cc = col(perm[0]), cd = col(perm[1]);
      if (ca == cb && cb == cc) return;
      if (cb == cc && cc == cd) return;
      ++count;
      return;
    }
    for (int v = 1; v < total; ++v) {
      if (used[v]) continue;
      if (perm.size() >= 2 && col(perm[perm.size() - 2]) == col(perm.back()) &&
          col(perm.back()) == col(v))
        continue;
      used[v] = true;
      perm.push_back(v);
      dfs();
      perm.pop_back();
      used[v] = false;
    }
  }
};

}  // namespace

Term lacing_count(int n) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("lacing_count: brute force covers 1 <= n <= 6");
  if (n == 1) return 1;  // the two-eyelet loop, its own reversal
  LacingSearch s;
  s.n = n;
  s.total = 2 * n;
  s.used.assign(s.total, false);
  s.perm.push_back(0);
  s.used[0] = true;
  s.dfs();
  return Term(static_cast<unsigned long>(s.count / 2));
}

// ---------------------------------------------------------------------------
// Generator registry and seed catalog
// ---------------------------------------------------------------------------

namespace {

TermList literal_terms(int offset, const char* csv) {
  TermList t(offset, parse_term_text(csv));
  return t;
}

Entry basic_entry(const char* id, std::string name, TermList terms,
                  std::initializer_list<const char*> keywords) {
  Entry e;
  e.id = ANumber::parse(id);
  e.name = std::move(name);
  e.terms = std::move(terms);
  for (auto* k : keywords) e.keywords.insert(k);
  return e;
}

// --- cross-oracles -------------------------------------------------------

bool check_super_catalan(int count, std::ostream& log) {
  auto rec = super_catalan_recurrence(count);
  for (int n = 1; n <= count; ++n) {
    if (super_catalan_formula(n) != rec.terms[n - 1]) {
      log << "formula/recurrence mismatch at n=" << n << '\n';
      return false;
    }
  }
  log << "formula == recurrence for n <= " << count << '\n';
  return true;
}

bool check_sigma(int count, std::ostream& log) {
  auto seq = a000203(count);
  for (int n = 1; n <= count; ++n) {
    Term s = 0;
    for (auto& d : divisors(Term(n))) s += d;
    if (s != seq.terms[n - 1]) {
      log << "sigma mismatch at n=" << n << '\n';
      return false;
    }
  }
  log << "sieve == divisor enumeration for n <= " << count << '\n';
  return true;
}

bool check_a006093(int count, std::ostream& log) {
  auto seq = a006093(count);
  long prev = 1;  // value of term + 1 for the previous prime
  for (int i = 0; i < count; ++i) {
    Term p = seq.terms[i] + 1;
    if (!is_prime(p)) {
      log << "term+1 not prime at i=" << i << '\n';
      return false;
    }
    for (long v = prev + 1; v < p.get_si(); ++v)
      if (is_prime(Term(v))) {
        log << "skipped prime " << v << '\n';
        return false;
      }
    prev = p.get_si();
  }
  log << "terms are prime(n)-1 with no prime skipped, n <= " << count << '\n';
  return true;
}

bool check_a055682(int count, std::ostream& log) {
  auto seq = a055682(count);
  for (int n = 1; n <= count; ++n) {
    Term s = 0;
    for (auto& d : divisors(Term(n))) s += d;
    Term r = integer_sqrt(Term(n) * n * n);
    if (r * r > Term(n) * n * n || (r + 1) * (r + 1) <= Term(n) * n * n) {
      log << "isqrt failed at n=" << n << '\n';
      return false;
    }
    if (seq.terms[n - 1] != r - s) {
      log << "value mismatch at n=" << n << '\n';
      return false;
    }
    if (n >= 3 && seq.terms[n - 1] < 1) {
      log << "positivity fails at n=" << n << '\n';
      return false;
    }
  }
  log << "definition and positivity hold for n <= " << count << '\n';
  return true;
}

bool check_a057641(int count, std::ostream& log) {
  auto seq = a057641(count);
  auto s = sigma_table(count);
  Rational h(0);
  for (int n = 1; n <= count; ++n) {
    h += Rational(1, n);
    HighPrecisionValue v(harmonic_expression_evaluator(h), 512);
    if (v.floor_or_throw() - Term(s[n]) != seq.terms[n - 1]) {
      log << "floor mismatch at n=" << n << '\n';
      return false;
    }
  }
  log << "floors stable under a different starting precision, n <= " << count
      << '\n';
  return true;
}

bool check_a006588(int count, std::ostream& log) {
  for (int n = 0; n < count; ++n) {
    if (a006588(n) != a006588_sum(n)) {
      log << "identity fails at n=" << n << '\n';
      return false;
    }
  }
  log << "closed form == sum for n < " << count << '\n';
  return true;
}

bool check_pascal(int rows, std::ostream& log) {
  auto flat = pascal_flat(rows);
  // Additive Pascal-rule oracle.
  std::vector<std::vector<Term>> tri{{Term(1)}};
  for (int r = 1; r < rows; ++r) {
    std::vector<Term> row(r + 1, Term(1));
    for (int k = 1; k < r; ++k) row[k] = tri[r - 1][k - 1] + tri[r - 1][k];
    tri.push_back(std::move(row));
  }
  std::size_t i = 0;
  for (auto& row : tri)
    for (auto& v : row)
      if (flat.terms.at(i++) != v) {
        log << "Pascal mismatch at flat position " << i - 1 << '\n';
        return false;
      }
  log << "flattening matches additive Pascal table, " << rows << " rows\n";
  return true;
}

bool check_nim(int depth, std::ostream& log) {
  auto flat = nim_flat(depth);
  std::size_t i = 0;
  for (int d = 0; d < depth; ++d)
    for (int r = 0; r <= d; ++r) {
      unsigned long x = static_cast<unsigned long>(r) ^
                        static_cast<unsigned long>(d - r);
      if (flat.terms.at(i++) != Term(x)) {
        log << "nim mismatch at flat position " << i - 1 << '\n';
        return false;
      }
    }
  log << "antidiagonal flattening matches xor table, depth " << depth << '\n';
  return true;
}

// Count Motzkin paths by explicit enumeration (visits every path).
long long motzkin_paths(int n, int h) {
  if (n == 0) return h == 0 ? 1 : 0;
  long long s = motzkin_paths(n - 1, h) + motzkin_paths(n - 1, h + 1);
  if (h > 0) s += motzkin_paths(n - 1, h - 1);
  return s;
}

bool check_motzkin(int count, std::ostream& log) {
  auto seq = motzkin(count);
  int limit = std::min(count, 13);
  for (int n = 0; n < limit; ++n) {
    if (seq.terms[n] != Term(static_cast<long>(motzkin_paths(n, 0)))) {
      log << "path enumeration mismatch at n=" << n << '\n';
      return false;
    }
  }
  log << "recurrence matches path enumeration for n < " << limit << '\n';
  return true;
}

bool check_bernoulli(int count, std::ostream& log) {
  auto [nums, dens] = bernoulli_pair(count);
  for (int n = 1; n < count; ++n) {
    Rational s(0);
    for (int k = 0; k <= n; ++k)
      s += Rational(binomial_coefficient(n + 1, k)) *
           Rational(nums.terms[k]) / Rational(dens.terms[k]);
    if (s != 0) {
      log << "defining sum nonzero at n=" << n << '\n';
      return false;
    }
    if (n >= 3 && n % 2 == 1 && nums.terms[n] != 0) {
      log << "odd-index numerator nonzero at n=" << n << '\n';
      return false;
    }
  }
  log << "sum_{k<=n} C(n+1,k) B_k = 0 holds below " << count << '\n';
  return true;
}

bool check_ekg(int count, std::ostream& log) {
  auto seq = ekg(count);
  std::set<Term> seen;
  for (auto& t : seq.terms)
    if (!seen.insert(t).second) {
      log << "repeated term " << t.get_str() << '\n';
      return false;
    }
  for (std::size_t i = 2; i < seq.terms.size(); ++i)
    if (gcd(seq.terms[i - 1], seq.terms[i]) < 2) {
      log << "gcd < 2 at position " << i << '\n';
      return false;
    }
  log << "first " << count << " terms distinct with gcd >= 2 links\n";
  return true;
}

bool check_home_primes(int count, std::ostream& log) {
  for (int n = 1; n <= count; ++n) {
    auto r = home_prime(Term(n));
    if (r.status != HomePrimeResult::Status::resolved) {
      log << "unresolved at n=" << n << '\n';
      return false;
    }
    if (n > 1) {
      // Re-walk the chain verifying each hop.
      Term cur(n);
      int steps = 0;
      while (!is_prime(cur)) {
        auto fac = factorize(cur);
        if (!fac) {
          log << "chain refactorization gave up at n=" << n << '\n';
          return false;
        }
        Term prod = 1;
        std::string cat;
        for (auto& f : *fac) {
          if (!is_prime(f)) {
            log << "non-prime factor in chain of n=" << n << '\n';
            return false;
          }
          prod *= f;
          cat += f.get_str();
        }
        if (prod != cur) {
          log << "factors do not multiply back at n=" << n << '\n';
          return false;
        }
        cur = Term(cat, 10);
        ++steps;
      }
      if (cur != r.value || steps != r.steps) {
        log << "chain re-walk disagrees at n=" << n << '\n';
        return false;
      }
    }
    if (!is_prime(r.value) && n != 1) {
      log << "final value not prime at n=" << n << '\n';
      return false;
    }
  }
  log << "chains verified for n <= " << count << '\n';
  return true;
}

bool check_bootstrap(int count, std::ostream& log) {
  auto seq = bootstrap_a079000(count);
  std::set<long> members;
  for (auto& t : seq.terms) members.insert(t.get_si());
  for (int n = 1; n <= count; ++n) {
    bool member = members.count(n) > 0;
    bool odd = seq.terms[n - 1] % 2 != 0;
    if (member != odd) {
      log << "biconditional fails at n=" << n << '\n';
      return false;
    }
  }
  log << "membership-parity biconditional holds for n <= " << count << '\n';
  return true;
}

bool check_lacing(int count, std::ostream& log) {
  static const long expected[] = {1, 3, 42, 1080, 51840, 3758400};
  int limit = std::min(count, 6);
  for (int n = 1; n <= limit; ++n) {
    if (lacing_count(n) != Term(expected[n - 1])) {
      log << "count mismatch at n=" << n << '\n';
      return false;
    }
  }
  log << "brute-force counts match reference values for n <= " << limit << '\n';
  return true;
}

bool check_all_ones(int count, std::ostream& log) {
  log << "constant generator\n";
  (void)count;
  return true;
}

TermList all_ones(int count) {
  TermList t(1, {});
  t.terms.assign(count, Term(1));
  return t;
}

// --- seed data -----------------------------------------------------------

Catalog build_seed() {
  Catalog c;
  auto add = [&c](Entry e) {
    if (!c.insert(std::move(e)))
      throw std::logic_error("seed entry id collision");
  };

  {
    auto e = basic_entry("A000012",
                         "The simplest sequence of positive numbers: the all 1's sequence.",
                         all_ones(50), {"core", "easy", "mult", "nonn"});
    e.formulas.push_back("a(n) = 1.");
    add(std::move(e));
  }
  {
    auto e = basic_entry("A000043",
                         "Mersenne exponents: primes p such that 2^p - 1 is prime.",
                         literal_terms(1, "2,3,5,7,13,17,19,31,61,89,107,127"),
                         {"hard", "more", "nice", "nonn"});
    e.comments.push_back("The search for Mersenne primes tracks the current status of this sequence.");
    add(std::move(e));
  }
  {
    auto e = basic_entry("A000203", "sigma(n): sum of the divisors of n.",
                         a000203(100), {"core", "easy", "mult", "nice", "nonn"});
    e.formulas.push_back("a(n) = Sum_{d | n} d.");
    e.comments.push_back("The sum-of-divisors function.");
    add(std::move(e));
  }
  {
    auto e = basic_entry("A000315",
                         "Number of reduced Latin squares of order n.",
                         literal_terms(1, "1,1,1,4,56,9408,16942080"),
                         {"hard", "more", "nice", "nonn"});
    add(std::move(e));
  }
  {
    auto e = basic_entry("A000796", "Decimal expansion of Pi.",
                         literal_terms(1, "3,1,4,1,5,9,2,6,5,3,5,8,9,7,9,3,2,3,8,4"),
                         {"cons", "core", "easy", "nice", "nonn"});
    add(std::move(e));
  }
  {
    auto e = basic_entry(
        "A001003",
        "Schröder's second problem: ways to insert parentheses in a string of "
        "n letters with at least two letters inside each pair.",
        super_catalan_recurrence(30), {"core", "easy", "nice", "nonn"});
    e.comments.push_back("Also called the super-Catalan numbers or little Schroeder numbers.");
    e.formulas.push_back(
        "a(n) = (1/n) * Sum_{k=0..n-2} C(2n-k-2, n-1)*C(n-2, k) for n > 1; a(1) = 1.");
    e.formulas.push_back(
        "(n+1)*a(n+1) = 3*(2n-1)*a(n) - (n-2)*a(n-1) for n > 1; a(1) = a(2) = 1.");
    add(std::move(e));
  }
  {
    auto e = basic_entry("A001006", "Motzkin numbers.", motzkin(30),
                         {"core", "easy", "nice", "nonn"});
    e.comments.push_back(
        "Number of lattice paths from (0,0) to (n,0) with steps U, D, F never "
        "going below the axis.");
    add(std::move(e));
  }
  {
    auto e = basic_entry("A001203", "Continued fraction expansion of Pi.",
                         literal_terms(0, "3,7,15,1,292,1,1,1,2,1"),
                         {"cofr", "core", "nice", "nonn"});
    add(std::move(e));
  }
  {
    auto e = basic_entry("A003987",
                         "Table of Nim-addition (XOR of n and k) read by antidiagonals.",
                         nim_flat(10), {"easy", "nice", "nonn", "tabl"});
    e.comments.push_back("Square arrays enter the catalog by antidiagonals.");
    add(std::move(e));
  }
  {
    auto e = basic_entry(
        "A005228",
        "A classic puzzle sequence: together with its first differences, "
        "every positive integer appears exactly once.",
        literal_terms(1, "1,3,7,12,18,26,35,45,56,69,83"),
        {"easy", "nice", "nonn"});
    add(std::move(e));
  }
  {
    auto e = basic_entry("A005316", "Meandric numbers: ways a river can cross a road n times.",
                         literal_terms(0, "1,1,1,2,3,8,14,42,81,262"),
                         {"hard", "nice", "nonn"});
    add(std::move(e));
  }
  {
    auto e = basic_entry("A006093", "a(n) = prime(n) - 1.", a006093(40),
                         {"easy", "nonn"});
    e.formulas.push_back("a(n) = prime(n) - 1.");
    add(std::move(e));
  }
  {
    auto e = basic_entry("A006588", "a(n) = 4^n * C(3n, n).", [] {
                           TermList t(0, {});
                           for (int n = 0; n < 20; ++n) t.terms.push_back(a006588(n));
                           return t;
                         }(),
                         {"easy", "nonn"});
    e.formulas.push_back("a(n) = 4^n*binomial(3n, n) = Sum_{k=0..n} C(4n+1, 2n-2k)*C(n+k, k).");
    add(std::move(e));
  }
  {
    auto e = basic_entry("A007299", "Number of inequivalent Hadamard matrices of order 4n.",
                         literal_terms(1, "1,1,1,5,3,60,487"),
                         {"hard", "more", "nice", "nonn"});
    add(std::move(e));
  }
  {
    auto e = basic_entry("A007318", "Pascal's triangle read by rows: C(n,k) for 0 <= k <= n.",
                         pascal_flat(10), {"core", "easy", "nice", "nonn", "tabl"});
    e.formulas.push_back("C(n, k) = C(n-1, k-1) + C(n-1, k).");
    add(std::move(e));
  }
  {
    auto e = basic_entry("A008253", "Coordination sequence for the diamond lattice.",
                         literal_terms(0, "1,4,12,24,42"),
                         {"easy", "nice", "nonn"});
    e.comments.push_back("Number of carbon atoms n bonds away from a fixed atom.");
    add(std::move(e));
  }
  {
    auto nums = bernoulli_pair(20).first;
    auto e = basic_entry("A027641", "Numerator of Bernoulli number B_n.",
                         std::move(nums), {"frac", "nice", "sign"});
    e.comments.push_back(
        "Rationals enter the catalog as a linked pair of sequences; the "
        "denominators are A027642.");
    e.crossrefs.push_back(ANumber::parse("A027642"));
    add(std::move(e));
  }
  {
    auto dens = bernoulli_pair(20).second;
    auto e = basic_entry("A027642", "Denominator of Bernoulli number B_n.",
                         std::move(dens), {"frac", "nice", "nonn"});
    e.crossrefs.push_back(ANumber::parse("A027641"));
    add(std::move(e));
  }
  {
    auto e = basic_entry(
        "A037274",
        "Home primes: a(n) is the prime reached by repeatedly concatenating "
        "the prime factors of n.",
        literal_terms(1, "1,2,3,211,5,23,7,3331113965338635107,311,773,11,223,13"),
        {"base", "hard", "nice", "nonn"});
    e.comments.push_back(
        "Concatenate the nondecreasing prime factors and repeat until a prime "
        "appears; a(8) is reached after 13 steps.");
    add(std::move(e));
  }
  {
    auto e = basic_entry(
        "A055682", "a(n) = floor(n*sqrt(n)) - sigma(n).", a055682(40),
        {"easy", "nonn"});
    e.comments.push_back("Positive for n > 2: sigma(n) < n*sqrt(n).");
    e.crossrefs.push_back(ANumber::parse("A000203"));
    add(std::move(e));
  }
  {
    auto e = basic_entry(
        "A057641",
        "a(n) = floor(H(n) + exp(H(n))*log(H(n))) - sigma(n), where H(n) is "
        "the n-th harmonic number.",
        a057641(30), {"nice", "nonn"});
    e.comments.push_back(
        "Lagarias, extending work of Robin, showed the terms are all "
        "nonnegative if and only if the Riemann hypothesis holds.");
    e.crossrefs.push_back(ANumber::parse("A000203"));
    add(std::move(e));
  }
  {
    auto e = basic_entry(
        "A064413",
        "EKG sequence: a(1)=1, a(2)=2; a(n) is the smallest unused number "
        "sharing a factor >= 2 with a(n-1).",
        ekg(60), {"core", "easy", "nice", "nonn"});
    e.comments.push_back("Plotting the terms resembles an electrocardiogram.");
    add(std::move(e));
  }
  {
    auto e = basic_entry(
        "A078601", "Number of ways to lace a shoe that has n pairs of eyelets.",
        literal_terms(1, "1,3,42,1080,51840,3758400,382838400,52733721600"),
        {"hard", "nice", "nonn"});
    e.comments.push_back(
        "The lace visits all 2n eyelets in one closed loop and every eyelet "
        "has at least one neighbor on the other side of the shoe.");
    add(std::move(e));
  }
  {
    auto e = basic_entry(
        "A079000",
        "Bootstrap sequence: a(n) is the smallest integer > a(n-1) consistent "
        "with \"n is in the sequence iff a(n) is odd\".",
        bootstrap_a079000(50), {"easy", "nice", "nonn"});
    add(std::move(e));
  }
  return c;
}

}  // namespace

const std::vector<GeneratorInfo>& generator_table() {
  static const std::vector<GeneratorInfo> table = [] {
    std::vector<GeneratorInfo> t;
    auto mk = [&t](const char* id, const char* summary, int dflt, int cap,
                   std::function<TermList(int)> gen,
                   std::function<bool(int, std::ostream&)> chk) {
      t.push_back({ANumber::parse(id), summary, dflt, cap, std::move(gen),
                   std::move(chk)});
    };
    mk("A000012", "all ones", 20, 100000, all_ones, check_all_ones);
    mk("A000203", "sum of divisors", 20, 100000, a000203, check_sigma);
    mk("A001003", "super-Catalan numbers", 20, 2000, super_catalan_recurrence,
       check_super_catalan);
    mk("A001006", "Motzkin numbers", 20, 2000, motzkin, check_motzkin);
    mk("A003987", "Nim-addition table by antidiagonals", 10, 200,
       [](int d) { return nim_flat(d); }, check_nim);
    mk("A006093", "prime(n) - 1", 20, 100000, a006093, check_a006093);
    mk("A006588", "4^n C(3n,n)", 10, 2000,
       [](int count) {
         TermList out(0, {});
         for (int n = 0; n < count; ++n) out.terms.push_back(a006588(n));
         return out;
       },
       check_a006588);
    mk("A007318", "Pascal's triangle by rows", 10, 500,
       [](int rows) { return pascal_flat(rows); }, check_pascal);
    mk("A027641", "Bernoulli numerators", 20, 500,
       [](int count) { return bernoulli_pair(count).first; }, check_bernoulli);
    mk("A027642", "Bernoulli denominators", 20, 500,
       [](int count) { return bernoulli_pair(count).second; }, check_bernoulli);
    mk("A037274", "home primes", 13, 20,
       [](int count) {
         TermList out(1, {});
         for (int n = 1; n <= count; ++n) {
           auto r = home_prime(Term(n));
           if (r.status != HomePrimeResult::Status::resolved)
             throw std::runtime_error("home prime unresolved at n=" +
                                      std::to_string(n));
           out.terms.push_back(r.value);
         }
         return out;
       },
       check_home_primes);
    mk("A055682", "floor(n sqrt n) - sigma(n)", 20, 100000, a055682,
       check_a055682);
    mk("A057641", "Lagarias harmonic expression minus sigma", 20, 10000,
       a057641, check_a057641);
    mk("A064413", "EKG sequence", 20, 100000, ekg, check_ekg);
    mk("A078601", "shoe lacings", 5, 6,
       [](int count) {
         TermList out(1, {});
         for (int n = 1; n <= count; ++n) out.terms.push_back(lacing_count(n));
         return out;
       },
       check_lacing);
    mk("A079000", "bootstrap sequence", 20, 100000, bootstrap_a079000,
       check_bootstrap);
    return t;
  }();
  return table;
}

const GeneratorInfo* find_generator(const ANumber& id) {
  for (auto& g : generator_table())
    if (g.id == id) return &g;
  return nullptr;
}

const Catalog& seed_catalog() {
  static const Catalog c = build_seed();
  return c;
}

Catalog build_seed_catalog() { return build_seed(); }

}  // namespace seqdb
