#ifndef SEQDB_GUESS_HPP
#define SEQDB_GUESS_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "seqdb/numcore.hpp"

namespace seqdb {

/// Raised by extrapolate() when the next term is not determined: a
/// P-recursive leading polynomial vanishes at the needed index, or the model
/// value there is not an integer.
struct SingularStep : std::runtime_error {
  long index;
  SingularStep(long n, const std::string& what)
      : std::runtime_error("singular step at n = " + std::to_string(n) + ": " +
                           what),
        index(n) {}
};

struct GuessBounds {
  int max_order = 8;        // linear and P-recursive recurrence order
  int max_degree = 4;       // P-recursive coefficient degree
  int max_total_degree = 4; // rational-function degree budget
};

/// a(n) = sum_{i=1}^{order} c_i a(n-i), constant coefficients, minimal order.
struct RecurrenceModel {
  int order = 0;
  std::vector<Rational> coefficients;
  TermList initial_terms;
  bool operator==(const RecurrenceModel&) const = default;
};

/// Exact polynomial in n (ascending coefficients); n runs from first_index.
struct PolynomialModel {
  std::vector<Rational> coefficients;
  int first_index = 1;
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  bool operator==(const PolynomialModel&) const = default;
};

/// a(n) = P(n)/Q(n) with Q monic; verified on held-out trailing terms.
struct RationalFunctionModel {
  std::vector<Rational> numerator;
  std::vector<Rational> denominator;  // monic: last coefficient is 1
  int first_index = 1;
  bool operator==(const RationalFunctionModel&) const = default;
};

/// sum_{i=0}^{order} p_i(n) a(n+i) = 0, integer coefficient polynomials,
/// content 1, leading polynomial's leading coefficient positive.
struct PRecursiveModel {
  int order = 0;
  std::vector<std::vector<Term>> polys;  // p_0..p_order, ascending powers
  int first_index = 1;
  bool ambiguous = false;  // solution space had dimension > 1
  int degree() const;      // max coefficient-polynomial degree
  bool operator==(const PRecursiveModel&) const = default;
};

using Model = std::variant<RecurrenceModel, PolynomialModel,
                           RationalFunctionModel, PRecursiveModel>;

/// Minimal-order constant-coefficient recurrence fitting every term, found
/// by exact rational elimination on Hankel systems of increasing order.
/// Throws std::invalid_argument with fewer than 4 terms.
std::optional<RecurrenceModel> guess_linear_recurrence(const TermList& a,
                                                       int max_order = 8);

/// Finite differences: smallest d whose difference row is constant with at
/// least 3 witnesses yields the exact degree-d Newton interpolant.
std::optional<PolynomialModel> guess_polynomial(const TermList& a);

/// Smallest total degree P/Q fitting a training prefix and verified exactly
/// on at least 3 held-out trailing terms.
std::optional<RationalFunctionModel> guess_rational_function(
    const TermList& a, int max_total_degree = 4);

/// Minimal (order, then degree) nonzero solution of the exact homogeneous
/// system; ties broken by lexicographically smallest degree vector, then
/// normalized form.
std::optional<PRecursiveModel> guess_p_recursive(const TermList& a,
                                                 int max_order = 8,
                                                 int max_degree = 4);

/// Exact reproduction of all of a.
bool verify_model(const Model& m, const TermList& a);

/// Next `count` terms after a. Throws SingularStep when a step is not
/// determined.
TermList extrapolate(const Model& m, const TermList& a, int count);

struct FittedModel {
  std::string kind;
  Model model;
  std::size_t fit_terms = 0;           // prefix the fit was computed from
  std::size_t verification_terms = 0;  // trailing terms beyond the fit
  bool verified = false;               // exact on the full input
  TermList extrapolated;  // may be shorter than requested on singularity
};

struct GuessReport {
  std::vector<FittedModel> models;
  bool empty() const { return models.empty(); }
};

/// Run every guesser that has enough data; each returned model is verified
/// on the full input and extrapolated (best effort) extrapolate_count terms.
GuessReport guess_all(const TermList& a, const GuessBounds& bounds = {},
                      int extrapolate_count = 8);

}  // namespace seqdb

#endif  // SEQDB_GUESS_HPP
