#ifndef SEQDB_REAL_BOUNDS_HPP
#define SEQDB_REAL_BOUNDS_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>

#include "seqdb/numcore.hpp"

namespace seqdb {

/// Raised when a certified floor could not be pinned within the precision cap.
struct PrecisionExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rational bounds bracketing a real value, refinable to arbitrary width.
/// Refinement doubles the working precision and intersects with the previous
/// bracket, so bounds never move outward.
class HighPrecisionValue {
 public:
  /// Computes [lower, upper] rational bounds at the given precision (bits).
  using Evaluator = std::function<std::pair<Rational, Rational>(int bits)>;

  HighPrecisionValue(Evaluator eval, int initial_bits = 128);

  const Rational& lower() const { return lower_; }
  const Rational& upper() const { return upper_; }
  int precision_bits() const { return bits_; }

  void refine();

  /// Floor of the bracketed value if both bounds agree on it.
  std::optional<Term> certified_floor() const;

  /// Refine until the floor is certain; throws PrecisionExceeded past max_bits.
  Term floor_or_throw(int max_bits = 1 << 15);

 private:
  Evaluator eval_;
  int bits_;
  Rational lower_, upper_;
};

/// Bounds for h + exp(h) * log(h), h >= 1 given as an exact rational.
/// Exact at h == 1 (the log term vanishes); elsewhere evaluated with MPFR
/// directed rounding.
HighPrecisionValue::Evaluator harmonic_expression_evaluator(const Rational& h);

}  // namespace seqdb

#endif  // SEQDB_REAL_BOUNDS_HPP
