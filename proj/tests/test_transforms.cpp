#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "seqdb/transforms.hpp"

using namespace seqdb;

namespace {

std::vector<Term> terms(std::initializer_list<long> values) {
  std::vector<Term> t;
  for (long v : values) t.emplace_back(v);
  return t;
}

std::vector<Term> random_terms(std::mt19937_64& rng, int n, long bound) {
  std::vector<Term> t;
  for (int i = 0; i < n; ++i)
    t.emplace_back(static_cast<long>(rng() % (2 * bound + 1)) - bound);
  return t;
}

// Independent Euler-transform oracle for nonnegative input: expand the
// product prod_k (1 - x^k)^(-a_k) as a power series by repeated
// multiplication with the geometric-power series of each part size.
std::vector<Term> euler_product_oracle(const std::vector<Term>& a) {
  const std::size_t n = a.size();
  // series[i] = coefficient of x^i, starting from 1.
  std::vector<Term> series(n + 1, Term(0));
  series[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    long mult = a[k - 1].get_si();
    REQUIRE(mult >= 0);
    for (long copy = 0; copy < mult; ++copy) {
      // multiply by 1/(1 - x^k): prefix-sum with stride k
      for (std::size_t i = k; i <= n; ++i) series[i] += series[i - k];
    }
  }
  return {series.begin() + 1, series.end()};
}

}  // namespace

TEST_CASE("binomial transform examples") {
  CHECK(binomial_transform(terms({1, 1, 1, 1, 1})) ==
        terms({1, 2, 4, 8, 16}));
  CHECK(inverse_binomial_transform(terms({1, 2, 4, 8, 16, 32})) ==
        terms({1, 1, 1, 1, 1, 1}));
  // Direct-summation oracle on a nontrivial input.
  auto in = terms({3, -1, 4, 1, -5, 9});
  auto out = binomial_transform(in);
  for (std::size_t n = 0; n < in.size(); ++n) {
    Term s = 0;
    for (std::size_t k = 0; k <= n; ++k)
      s += binomial_coefficient(static_cast<long>(n), static_cast<long>(k)) *
           in[k];
    CHECK(out[n] == s);
  }
}

TEST_CASE("moebius divisor transform examples") {
  // Divisor-count: transform of all ones.
  CHECK(moebius_divisor_transform(terms({1, 1, 1, 1, 1, 1})) ==
        terms({1, 2, 2, 3, 2, 4}));
  // Divisor-enumeration oracle.
  auto in = terms({5, 3, -2, 7, 1, 4, -6, 2, 9, 8, 1, 3});
  auto out = moebius_divisor_transform(in);
  for (std::size_t n = 1; n <= in.size(); ++n) {
    Term s = 0;
    for (std::size_t d = 1; d <= n; ++d)
      if (n % d == 0) s += in[d - 1];
    CHECK(out[n - 1] == s);
  }
}

TEST_CASE("euler transform examples") {
  auto r = euler_transform(terms({1, 0, 0, 0, 0}));
  CHECK(r.integral);
  REQUIRE(r.output.size() == 5);
  for (auto& p : r.output) CHECK(p.value() == 1);  // partitions into one kind

  // Partition-product oracle on random nonnegative inputs.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Term> a;
    for (int i = 0; i < 12; ++i) a.emplace_back(static_cast<long>(rng() % 4));
    auto et = euler_transform(a);
    REQUIRE(et.integral);  // Euler transform of nonnegative integers is integral
    auto oracle = euler_product_oracle(a);
    for (std::size_t i = 0; i < a.size(); ++i)
      CHECK(et.output[i].num == oracle[i]);
  }
}

TEST_CASE("first differences of the A005228 prefix") {
  CHECK(first_differences(terms({1, 3, 7, 12, 18, 26})) ==
        terms({2, 4, 5, 6, 8}));
  CHECK_THROWS_AS(first_differences(terms({1})), std::invalid_argument);
}

TEST_CASE("shift, sums, convolution basics") {
  CHECK(partial_sums(terms({1, 2, 3})) == terms({1, 3, 6}));
  CHECK(inverse_partial_sums(terms({1, 3, 6})) == terms({1, 2, 3}));
  CHECK(left_shift(terms({9, 8, 7})) == terms({8, 7}));
  CHECK(self_convolution(terms({1, 1, 1, 1})) == terms({1, 2, 3, 4}));
}

TEST_CASE("round trips: inverse after forward is the identity") {
  std::mt19937_64 rng(20240101);
  const auto& reg = TransformRegistry::standard();
  const std::pair<const char*, const char*> pairs[] = {
      {"binomial", "inverse_binomial"},
      {"moebius_divisor", "inverse_moebius_divisor"},
      {"euler", "inverse_euler"},
      {"partial_sums", "inverse_partial_sums"},
  };
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_terms(rng, 30, 1000000);
    RationalSeq in;
    for (auto& t : a) in.emplace_back(t);
    for (auto& [fwd, inv] : pairs) {
      const auto* f = reg.find(fwd);
      const auto* g = reg.find(inv);
      REQUIRE(f != nullptr);
      REQUIRE(g != nullptr);
      // Euler runs through exact rationals; the rest stay integral.
      CHECK(g->apply(f->apply(in)) == in);
      CHECK(f->apply(g->apply(in)) == in);
    }
  }
}

TEST_CASE("binomial transform is linear") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = random_terms(rng, 20, 1000);
    auto b = random_terms(rng, 20, 1000);
    long alpha = static_cast<long>(rng() % 19) - 9;
    long beta = static_cast<long>(rng() % 19) - 9;
    std::vector<Term> combo(20);
    for (int i = 0; i < 20; ++i) combo[i] = alpha * a[i] + beta * b[i];
    auto lhs = binomial_transform(combo);
    auto ta = binomial_transform(a);
    auto tb = binomial_transform(b);
    for (int i = 0; i < 20; ++i)
      CHECK(lhs[i] == alpha * ta[i] + beta * tb[i]);
  }
}

TEST_CASE("registry sweep") {
  TermList powers(0, terms({1, 2, 4, 8, 16}));
  auto results = apply_registry(powers);
  CHECK(results.size() <= TransformRegistry::standard().definitions().size());
  bool found = false;
  for (auto& [name, out] : results)
    if (name == "inverse_binomial") {
      found = true;
      CHECK(canonical_match_text(out) == "1,1,1,1,1");
    }
  CHECK(found);

  TermList three(0, terms({1, 2, 3}));
  CHECK_THROWS_AS(apply_registry(three), std::invalid_argument);
}

TEST_CASE("non-integral outputs are dropped from lookups, kept in diagnostics") {
  TermList odd(0, terms({1, 3, 5, 7}));  // halve gives non-integral output
  auto lookups = apply_registry(odd);
  for (auto& [name, out] : lookups) CHECK(name != "halve");
  auto diags = TransformRegistry::standard().apply_diagnostics(odd);
  bool halve_seen = false;
  for (auto& d : diags)
    if (d.name == "halve") {
      halve_seen = true;
      CHECK_FALSE(d.integral);
      CHECK(d.output[0].den == 2);
    }
  CHECK(halve_seen);
}

TEST_CASE("inverse euler may be non-integral and reports it") {
  auto r = inverse_euler_transform(terms({1, 1, 1, 1}));
  // 1 + x + x^2 + ... = 1/(1-x) is the Euler transform of 1,0,0,...;
  // the inverse of the all-ones sequence itself is integral here:
  CHECK(r.name == "inverse_euler");
  // A sequence that forces fractions:
  auto frac = inverse_euler_transform(terms({1, 0, 0, 0}));
  bool any_fraction = false;
  for (auto& p : frac.output) any_fraction |= p.den != 1;
  CHECK(any_fraction == !frac.integral);
}

TEST_CASE("transform definitions document indexing conventions") {
  for (auto& def : TransformRegistry::standard().definitions()) {
    CHECK((def.indexing == "0-indexed" || def.indexing == "1-indexed"));
    if (!def.inverse_name.empty())
      CHECK(TransformRegistry::standard().find(def.inverse_name) != nullptr);
  }
}
