#include "seqdb/transforms.hpp"

#include <algorithm>

namespace seqdb {

namespace {

void require_len(std::span<const Term> a, std::size_t n, const char* op) {
  if (a.size() < n)
    throw std::invalid_argument(std::string(op) + ": input needs at least " +
                                std::to_string(n) + " terms");
}

// Divisors of small n (indices, not sequence values).
std::vector<std::size_t> small_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Moebius mu over 1..n by sieve; transform inputs are index-bounded.
std::vector<int> mu_table(std::size_t n) {
  std::vector<int> mu(n + 1, 1);
  std::vector<bool> composite(n + 1, false);
  std::vector<std::size_t> primes;
  for (std::size_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (auto p : primes) {
      if (i * p > n) break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  return mu;
}

}  // namespace

std::vector<Term> binomial_transform(std::span<const Term> a) {
  require_len(a, 1, "binomial_transform");
  std::vector<Term> b(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    Term s = 0;
    for (std::size_t k = 0; k <= n; ++k)
      s += binomial_coefficient(static_cast<long>(n), static_cast<long>(k)) * a[k];
    b[n] = s;
  }
  return b;
}

std::vector<Term> inverse_binomial_transform(std::span<const Term> b) {
  require_len(b, 1, "inverse_binomial_transform");
  std::vector<Term> a(b.size());
  for (std::size_t n = 0; n < b.size(); ++n) {
    Term s = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      Term c = binomial_coefficient(static_cast<long>(n), static_cast<long>(k)) * b[k];
      if ((n - k) % 2)
        s -= c;
      else
        s += c;
    }
    a[n] = s;
  }
  return a;
}

std::vector<Term> moebius_divisor_transform(std::span<const Term> a) {
  require_len(a, 1, "moebius_divisor_transform");
  std::vector<Term> b(a.size());
  for (std::size_t n = 1; n <= a.size(); ++n) {
    Term s = 0;
    for (auto d : small_divisors(n)) s += a[d - 1];
    b[n - 1] = s;
  }
  return b;
}

std::vector<Term> inverse_moebius_divisor_transform(std::span<const Term> b) {
  require_len(b, 1, "inverse_moebius_divisor_transform");
  auto mu = mu_table(b.size());
  std::vector<Term> a(b.size());
  for (std::size_t n = 1; n <= b.size(); ++n) {
    Term s = 0;
    for (auto d : small_divisors(n)) s += mu[n / d] * b[d - 1];
    a[n - 1] = s;
  }
  return a;
}

std::vector<Term> partial_sums(std::span<const Term> a) {
  require_len(a, 1, "partial_sums");
  std::vector<Term> b(a.size());
  Term s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i];
    b[i] = s;
  }
  return b;
}

std::vector<Term> first_differences(std::span<const Term> a) {
  require_len(a, 2, "first_differences");
  std::vector<Term> b(a.size() - 1);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) b[i] = a[i + 1] - a[i];
  return b;
}

std::vector<Term> inverse_partial_sums(std::span<const Term> b) {
  require_len(b, 1, "inverse_partial_sums");
  std::vector<Term> a(b.size());
  a[0] = b[0];
  for (std::size_t i = 1; i < b.size(); ++i) a[i] = b[i] - b[i - 1];
  return a;
}

std::vector<Term> left_shift(std::span<const Term> a) {
  require_len(a, 2, "left_shift");
  return {a.begin() + 1, a.end()};
}

std::vector<Term> self_convolution(std::span<const Term> a) {
  require_len(a, 1, "self_convolution");
  std::vector<Term> b(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    Term s = 0;
    for (std::size_t k = 0; k <= n; ++k) s += a[k] * a[n - k];
    b[n] = s;
  }
  return b;
}

// ---------------------------------------------------------------------------
// Euler pair
// ---------------------------------------------------------------------------

namespace {

std::vector<Rational> to_rationals(std::span<const Term> a) {
  std::vector<Rational> out;
  out.reserve(a.size());
  for (auto& t : a) out.emplace_back(t);
  return out;
}

TransformResult pack_result(std::string name, const std::vector<Rational>& v) {
  TransformResult r;
  r.name = std::move(name);
  r.output.reserve(v.size());
  for (auto& q : v) {
    r.output.emplace_back(q);
    if (r.output.back().den != 1) r.integral = false;
  }
  return r;
}

std::vector<Rational> euler_core(const std::vector<Rational>& a) {
  const std::size_t n = a.size();
  std::vector<Rational> c(n + 1), b(n + 1);
  for (std::size_t m = 1; m <= n; ++m) {
    Rational s = 0;
    for (auto d : small_divisors(m)) s += Rational(static_cast<long>(d)) * a[d - 1];
    c[m] = s;
  }
  for (std::size_t m = 1; m <= n; ++m) {
    Rational s = c[m];
    for (std::size_t k = 1; k < m; ++k) s += c[k] * b[m - k];
    b[m] = s / Rational(static_cast<long>(m));
  }
  return {b.begin() + 1, b.end()};
}

std::vector<Rational> inverse_euler_core(const std::vector<Rational>& b) {
  const std::size_t n = b.size();
  std::vector<Rational> c(n + 1), bb(n + 1);
  for (std::size_t m = 1; m <= n; ++m) bb[m] = b[m - 1];
  for (std::size_t m = 1; m <= n; ++m) {
    Rational s = Rational(static_cast<long>(m)) * bb[m];
    for (std::size_t k = 1; k < m; ++k) s -= c[k] * bb[m - k];
    c[m] = s;
  }
  auto mu = mu_table(n);
  std::vector<Rational> a(n);
  for (std::size_t m = 1; m <= n; ++m) {
    Rational s = 0;
    for (auto d : small_divisors(m)) s += Rational(mu[m / d]) * c[d];
    a[m - 1] = s / Rational(static_cast<long>(m));
  }
  return a;
}

}  // namespace

TransformResult euler_transform(std::span<const Term> a) {
  require_len(a, 1, "euler_transform");
  return pack_result("euler", euler_core(to_rationals(a)));
}

TransformResult inverse_euler_transform(std::span<const Term> b) {
  require_len(b, 1, "inverse_euler_transform");
  return pack_result("inverse_euler", inverse_euler_core(to_rationals(b)));
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

namespace {

RationalSeq lift(std::vector<Term> (*fn)(std::span<const Term>),
                 const RationalSeq& in) {
  // Integer-only transform applied to a rational view; callers guarantee
  // integrality (the registry feeds integer term lists).
  std::vector<Term> t;
  t.reserve(in.size());
  for (auto& q : in) {
    if (q.get_den() != 1)
      throw std::invalid_argument("integer transform fed a non-integer");
    t.push_back(q.get_num());
  }
  auto out = fn(t);
  RationalSeq r;
  r.reserve(out.size());
  for (auto& v : out) r.emplace_back(v);
  return r;
}

}  // namespace

const TransformRegistry& TransformRegistry::standard() {
  static const TransformRegistry reg = [] {
    TransformRegistry r;
    auto lifted = [](std::vector<Term> (*fn)(std::span<const Term>)) {
      return [fn](const RationalSeq& in) { return lift(fn, in); };
    };
    r.defs_ = {
        {"binomial", "inverse_binomial", "0-indexed", 1,
         lifted(&binomial_transform)},
        {"inverse_binomial", "binomial", "0-indexed", 1,
         lifted(&inverse_binomial_transform)},
        {"euler", "inverse_euler", "1-indexed", 1,
         [](const RationalSeq& in) { return euler_core(in); }},
        {"inverse_euler", "euler", "1-indexed", 1,
         [](const RationalSeq& in) { return inverse_euler_core(in); }},
        {"moebius_divisor", "inverse_moebius_divisor", "1-indexed", 1,
         lifted(&moebius_divisor_transform)},
        {"inverse_moebius_divisor", "moebius_divisor", "1-indexed", 1,
         lifted(&inverse_moebius_divisor_transform)},
        {"partial_sums", "inverse_partial_sums", "0-indexed", 1,
         lifted(&partial_sums)},
        {"inverse_partial_sums", "partial_sums", "0-indexed", 1,
         lifted(&inverse_partial_sums)},
        {"first_differences", "", "0-indexed", 2,
         lifted(&first_differences)},
        {"left_shift", "", "0-indexed", 2, lifted(&left_shift)},
        {"self_convolution", "", "0-indexed", 1,
         lifted(&self_convolution)},
        {"alternating_signs", "alternating_signs", "0-indexed", 1,
         [](const RationalSeq& in) {
           RationalSeq out(in.size());
           for (std::size_t i = 0; i < in.size(); ++i)
             out[i] = i % 2 ? -in[i] : in[i];
           return out;
         }},
        {"double", "halve", "0-indexed", 1,
         [](const RationalSeq& in) {
           RationalSeq out(in.size());
           for (std::size_t i = 0; i < in.size(); ++i)
             out[i] = in[i] * 2;
           return out;
         }},
        {"halve", "double", "0-indexed", 1,
         [](const RationalSeq& in) {
           RationalSeq out(in.size());
           for (std::size_t i = 0; i < in.size(); ++i)
             out[i] = in[i] / 2;
           return out;
         }},
    };
    return r;
  }();
  return reg;
}

const TransformDef* TransformRegistry::find(const std::string& name) const {
  for (auto& d : defs_)
    if (d.name == name) return &d;
  return nullptr;
}

std::vector<TransformResult> TransformRegistry::apply_diagnostics(
    const TermList& a) const {
  if (a.size() < 4)
    throw std::invalid_argument("registry sweep needs at least 4 terms");
  RationalSeq in;
  in.reserve(a.size());
  for (auto& t : a.terms) in.emplace_back(t);
  std::vector<TransformResult> out;
  for (auto& d : defs_) {
    if (a.size() < static_cast<std::size_t>(d.min_input)) continue;
    out.push_back(pack_result(d.name, d.apply(in)));
  }
  return out;
}

std::vector<std::pair<std::string, TermList>> TransformRegistry::apply_all(
    const TermList& a) const {
  std::vector<std::pair<std::string, TermList>> out;
  for (auto& r : apply_diagnostics(a)) {
    if (!r.integral) continue;
    TermList t;
    t.offset = a.offset;
    t.terms.reserve(r.output.size());
    for (auto& p : r.output) t.terms.push_back(p.num);
    out.emplace_back(r.name, std::move(t));
  }
  return out;
}

}  // namespace seqdb
