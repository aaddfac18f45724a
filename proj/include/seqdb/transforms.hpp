#ifndef SEQDB_TRANSFORMS_HPP
#define SEQDB_TRANSFORMS_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "seqdb/numcore.hpp"

namespace seqdb {

/// One transform application. Arithmetic is exact rational throughout;
/// integral is true iff every denominator is 1.
struct TransformResult {
  std::string name;
  std::vector<RationalPair> output;
  bool integral = true;
};

// Integral-closed transforms. Indexing convention per function:
// binomial pair and convolution treat the input as a_0, a_1, ...;
// the divisor-sum pair treats it as a_1, a_2, ....

/// b_n = sum_{k=0}^{n} C(n,k) a_k
std::vector<Term> binomial_transform(std::span<const Term> a);
/// a_n = sum_{k=0}^{n} (-1)^(n-k) C(n,k) b_k
std::vector<Term> inverse_binomial_transform(std::span<const Term> b);
/// b_n = sum_{d|n} a_d
std::vector<Term> moebius_divisor_transform(std::span<const Term> a);
/// a_n = sum_{d|n} mu(n/d) b_d
std::vector<Term> inverse_moebius_divisor_transform(std::span<const Term> b);
std::vector<Term> partial_sums(std::span<const Term> a);
/// Pure differences b_n = a_{n+1} - a_n; output one shorter. Input >= 2.
std::vector<Term> first_differences(std::span<const Term> a);
/// Exact inverse of partial_sums: b_0, b_1 - b_0, b_2 - b_1, ...
std::vector<Term> inverse_partial_sums(std::span<const Term> b);
std::vector<Term> left_shift(std::span<const Term> a);
/// b_n = sum_k a_k a_{n-k}
std::vector<Term> self_convolution(std::span<const Term> a);

/// 1 + sum b_n x^n = prod (1-x^n)^(-a_n), via c_n = sum_{d|n} d a_d and
/// n b_n = c_n + sum_{k=1}^{n-1} c_k b_{n-k}. Rational for general integer
/// input; integral for nonnegative input.
TransformResult euler_transform(std::span<const Term> a);
TransformResult inverse_euler_transform(std::span<const Term> b);

/// Rational-valued core used by the registry.
using RationalSeq = std::vector<Rational>;
using TransformFn = std::function<RationalSeq(const RationalSeq&)>;

struct TransformDef {
  std::string name;
  std::string inverse_name;  // empty when no exact inverse is registered
  std::string indexing;      // "0-indexed" or "1-indexed"
  int min_input = 1;
  TransformFn apply;
};

/// Fixed, documented transform registry. Order is part of the contract.
class TransformRegistry {
 public:
  static const TransformRegistry& standard();

  const std::vector<TransformDef>& definitions() const { return defs_; }
  const TransformDef* find(const std::string& name) const;

  /// Every registered transform applied in order to a (>= 4 terms; throws
  /// std::invalid_argument otherwise). Only fully integral outputs are
  /// returned, truncated to their natural length; use apply_diagnostics for
  /// the rational view.
  std::vector<std::pair<std::string, TermList>> apply_all(
      const TermList& a) const;

  /// Same sweep, retaining non-integral outputs for inspection.
  std::vector<TransformResult> apply_diagnostics(const TermList& a) const;

 private:
  std::vector<TransformDef> defs_;
};

inline std::vector<std::pair<std::string, TermList>> apply_registry(
    const TermList& a) {
  return TransformRegistry::standard().apply_all(a);
}

}  // namespace seqdb

#endif  // SEQDB_TRANSFORMS_HPP
