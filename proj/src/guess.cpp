#include "seqdb/guess.hpp"

#include <algorithm>
#include <cassert>

namespace seqdb {

namespace {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

// Gaussian elimination over exact rationals. Returns a particular solution
// of A x = rhs (free variables set to 0), or nullopt when inconsistent.
std::optional<Row> solve_linear(Matrix a, Row rhs) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t sel = rank;
    while (sel < rows && a[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[rank]);
    std::swap(rhs[sel], rhs[rank]);
    Rational inv = 1 / a[rank][col];
    for (std::size_t j = col; j < cols; ++j) a[rank][j] *= inv;
    rhs[rank] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
      rhs[i] -= f * rhs[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i)
    if (rhs[i] != 0) return std::nullopt;
  Row x(cols, Rational(0));
  for (std::size_t i = 0; i < rank; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

// Reduced-row-echelon nullspace basis of A x = 0, one vector per free
// column, in ascending free-column order. Deterministic.
std::vector<Row> nullspace(Matrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t sel = rank;
    while (sel < rows && a[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[rank]);
    Rational inv = 1 / a[rank][col];
    for (std::size_t j = col; j < cols; ++j) a[rank][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<Row> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Row v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < rank; ++i) v[pivot_col[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational poly_eval(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational v(0);
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
  return v;
}

Term ipoly_eval(const std::vector<Term>& coeffs, const Term& x) {
  Term v(0);
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
  return v;
}

// Trailing terms reserved for verification: max(3, 20% of the input), but
// never so many that the fit itself becomes underdetermined.
std::size_t fit_prefix(std::size_t len, std::size_t min_needed) {
  std::size_t hold = std::max<std::size_t>(3, (len + 4) / 5);
  std::size_t fit = len > hold ? len - hold : 0;
  fit = std::max(fit, min_needed);
  return std::min(fit, len);
}

}  // namespace

int PRecursiveModel::degree() const {
  int d = 0;
  for (auto& p : polys)
    d = std::max(d, static_cast<int>(p.size()) - 1);
  return d;
}

// ---------------------------------------------------------------------------
// Constant-coefficient linear recurrences
// ---------------------------------------------------------------------------

std::optional<RecurrenceModel> guess_linear_recurrence(const TermList& a,
                                                       int max_order) {
  const std::size_t len = a.size();
  if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
  if (len < 4)
    throw std::invalid_argument(
        "guess_linear_recurrence: need at least 2*order+2 terms (>= 4)");
  const int eff_max =
      std::min<long>(max_order, static_cast<long>((len - 2) / 2));

  for (int r = 1; r <= eff_max; ++r) {
    const std::size_t fit = fit_prefix(len, 2 * static_cast<std::size_t>(r));
    Matrix sys;
    Row rhs;
    for (std::size_t i = r; i < fit; ++i) {
      Row row(r);
      for (int j = 1; j <= r; ++j) row[j - 1] = Rational(a.terms[i - j]);
      sys.push_back(std::move(row));
      rhs.emplace_back(a.terms[i]);
    }
    auto sol = solve_linear(std::move(sys), std::move(rhs));
    if (!sol) continue;
    // Verify the recurrence over every term, held-out included.
    bool ok = true;
    for (std::size_t i = r; i < len && ok; ++i) {
      Rational s(0);
      for (int j = 1; j <= r; ++j) s += (*sol)[j - 1] * Rational(a.terms[i - j]);
      ok = s == Rational(a.terms[i]);
    }
    if (!ok) continue;
    RecurrenceModel m;
    m.order = r;
    m.coefficients = *sol;
    m.initial_terms.offset = a.offset;
    m.initial_terms.terms.assign(a.terms.begin(), a.terms.begin() + r);
    return m;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Polynomials via finite differences
// ---------------------------------------------------------------------------

std::optional<PolynomialModel> guess_polynomial(const TermList& a) {
  const std::size_t len = a.size();
  if (len < 4)
    throw std::invalid_argument("guess_polynomial: need at least 4 terms");

  std::vector<std::vector<Term>> table{a.terms};
  std::size_t d = 0;
  for (;;) {
    const auto& row = table.back();
    if (row.size() >= 3 &&
        std::all_of(row.begin(), row.end(),
                    [&](const Term& t) { return t == row[0]; }))
      break;
    if (row.size() < 4) return std::nullopt;  // next row loses its 3rd witness
    std::vector<Term> next(row.size() - 1);
    for (std::size_t i = 0; i + 1 < row.size(); ++i)
      next[i] = row[i + 1] - row[i];
    table.push_back(std::move(next));
    ++d;
  }

  // Newton forward interpolant from the first index:
  //   p(x) = sum_k table[k][0] * C(x - n0, k)
  const Rational n0(a.offset);
  std::vector<Rational> coeffs{Rational(0)};
  std::vector<Rational> basis{Rational(1)};  // (x-n0)(x-n0-1).../k! built up
  Term kfact(1);
  for (std::size_t k = 0; k <= d; ++k) {
    if (k > 0) {
      // basis *= (x - n0 - (k-1))
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      Rational shift = n0 + Rational(static_cast<long>(k) - 1);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        next[i + 1] += basis[i];
        next[i] -= shift * basis[i];
      }
      basis = std::move(next);
      kfact *= static_cast<long>(k);
    }
    Rational lead = Rational(table[k][0]) / Rational(kfact);
    if (coeffs.size() < basis.size()) coeffs.resize(basis.size(), Rational(0));
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += lead * basis[i];
  }
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();

  PolynomialModel m;
  m.coefficients = std::move(coeffs);
  m.first_index = a.offset;
  for (std::size_t i = 0; i < len; ++i) {
    Rational x(a.offset + static_cast<long>(i));
    if (poly_eval(m.coefficients, x) != Rational(a.terms[i]))
      return std::nullopt;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Rational functions of n
// ---------------------------------------------------------------------------

std::optional<RationalFunctionModel> guess_rational_function(
    const TermList& a, int max_total_degree) {
  const std::size_t len = a.size();
  if (max_total_degree < 0)
    throw std::invalid_argument("max_total_degree must be >= 0");
  if (len < static_cast<std::size_t>(max_total_degree) + 4)
    throw std::invalid_argument(
        "guess_rational_function: need max_total_degree + 4 terms");

  for (int t = 0; t <= max_total_degree; ++t) {
    for (int dq = 0; dq <= t; ++dq) {
      const int dp = t - dq;
      const std::size_t unknowns = static_cast<std::size_t>(dp) + dq + 1;
      const std::size_t fit = fit_prefix(len, unknowns);
      Matrix sys;
      Row rhs;
      for (std::size_t i = 0; i < fit; ++i) {
        Rational n(a.offset + static_cast<long>(i));
        Rational an(a.terms[i]);
        Row row(unknowns, Rational(0));
        Rational pw(1);
        for (int j = 0; j <= dp; ++j) {
          row[j] = pw;
          pw *= n;
        }
        pw = 1;
        for (int j = 0; j < dq; ++j) {
          row[dp + 1 + j] = -an * pw;
          pw *= n;
        }
        sys.push_back(std::move(row));
        rhs.push_back(an * pw);  // pw == n^dq here
      }
      auto sol = solve_linear(std::move(sys), std::move(rhs));
      if (!sol) continue;
      RationalFunctionModel m;
      m.numerator.assign(sol->begin(), sol->begin() + dp + 1);
      m.denominator.assign(sol->begin() + dp + 1, sol->end());
      m.denominator.push_back(Rational(1));  // monic
      while (m.numerator.size() > 1 && m.numerator.back() == 0)
        m.numerator.pop_back();
      m.first_index = a.offset;
      bool ok = true;
      for (std::size_t i = 0; i < len && ok; ++i) {
        Rational n(a.offset + static_cast<long>(i));
        Rational q = poly_eval(m.denominator, n);
        if (q == 0) {
          ok = false;
          break;
        }
        ok = poly_eval(m.numerator, n) == Rational(a.terms[i]) * q;
      }
      if (ok) return m;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// P-recursive (polynomial-coefficient) recurrences
// ---------------------------------------------------------------------------

namespace {

// Clear denominators, divide by content, make the leading polynomial's
// leading coefficient positive. Input grouped as (order+1) blocks of
// (degree+1) coefficients.
std::optional<PRecursiveModel> normalize_p_recursive(const Row& v, int order,
                                                     int degree,
                                                     int first_index) {
  Term lcm(1);
  for (auto& q : v)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<Term> ints;
  ints.reserve(v.size());
  for (auto& q : v) {
    Rational scaled = q * Rational(lcm);
    ints.push_back(scaled.get_num());
  }
  Term content(0);
  for (auto& t : ints) content = gcd(content, t);
  if (content == 0) return std::nullopt;  // zero vector
  for (auto& t : ints) mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), content.get_mpz_t());

  PRecursiveModel m;
  m.order = order;
  m.first_index = first_index;
  m.polys.resize(order + 1);
  for (int i = 0; i <= order; ++i) {
    auto& p = m.polys[i];
    p.assign(ints.begin() + static_cast<long>(i) * (degree + 1),
             ints.begin() + static_cast<long>(i + 1) * (degree + 1));
    while (p.size() > 1 && p.back() == 0) p.pop_back();
  }
  const auto& lead = m.polys[order];
  if (lead.size() == 1 && lead[0] == 0) return std::nullopt;  // p_r == 0
  if (lead.back() < 0)
    for (auto& p : m.polys)
      for (auto& c : p) c = -c;
  return m;
}

bool verify_p_recursive(const PRecursiveModel& m, const TermList& a) {
  const std::size_t len = a.size();
  if (len < static_cast<std::size_t>(m.order) + 1) return false;
  for (std::size_t pos = 0; pos + m.order < len; ++pos) {
    Term n(m.first_index + static_cast<long>(pos));
    Term s(0);
    for (int i = 0; i <= m.order; ++i)
      s += ipoly_eval(m.polys[i], n) * a.terms[pos + i];
    if (s != 0) return false;
  }
  return true;
}

std::vector<int> degree_vector(const PRecursiveModel& m) {
  std::vector<int> d;
  for (auto& p : m.polys) {
    bool zero = p.size() == 1 && p[0] == 0;
    d.push_back(zero ? -1 : static_cast<int>(p.size()) - 1);
  }
  return d;
}

std::string normalized_key(const PRecursiveModel& m) {
  std::string k;
  for (auto& p : m.polys) {
    for (auto& c : p) {
      k += c.get_str();
      k += ',';
    }
    k += ';';
  }
  return k;
}

}  // namespace

std::optional<PRecursiveModel> guess_p_recursive(const TermList& a,
                                                 int max_order,
                                                 int max_degree) {
  const std::size_t len = a.size();
  if (max_order < 1 || max_degree < 0)
    throw std::invalid_argument("guess_p_recursive: bad bounds");
  if (len < 6)
    throw std::invalid_argument(
        "guess_p_recursive: need at least (order+1)(degree+1)+order+3 terms "
        "(>= 6)");

  for (int r = 1; r <= max_order; ++r) {
    if (len < static_cast<std::size_t>(2 * r + 4)) break;  // even d=0 infeasible
    for (int d = 0; d <= max_degree; ++d) {
      const std::size_t unknowns =
          static_cast<std::size_t>(r + 1) * (d + 1);
      if (len < unknowns + r + 3) break;
      const std::size_t fit = fit_prefix(len, unknowns + r);
      const std::size_t equations = fit - r;
      Matrix sys;
      for (std::size_t pos = 0; pos < equations; ++pos) {
        Rational n(a.offset + static_cast<long>(pos));
        Row row(unknowns, Rational(0));
        for (int i = 0; i <= r; ++i) {
          Rational pw(1);
          Rational av(a.terms[pos + i]);
          for (int j = 0; j <= d; ++j) {
            row[static_cast<std::size_t>(i) * (d + 1) + j] = av * pw;
            pw *= n;
          }
        }
        sys.push_back(std::move(row));
      }
      auto basis = nullspace(std::move(sys));
      if (basis.empty()) continue;

      std::vector<PRecursiveModel> verified;
      for (auto& v : basis) {
        auto m = normalize_p_recursive(v, r, d, a.offset);
        if (!m) continue;
        if (verify_p_recursive(*m, a)) verified.push_back(std::move(*m));
      }
      if (verified.empty()) continue;
      auto best = std::min_element(
          verified.begin(), verified.end(),
          [](const PRecursiveModel& x, const PRecursiveModel& y) {
            auto dx = degree_vector(x), dy = degree_vector(y);
            if (dx != dy) return dx < dy;
            return normalized_key(x) < normalized_key(y);
          });
      best->ambiguous = basis.size() > 1;
      return *best;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Verification and extrapolation
// ---------------------------------------------------------------------------

namespace {

struct VerifyVisitor {
  const TermList& a;

  bool operator()(const RecurrenceModel& m) const {
    if (a.size() < static_cast<std::size_t>(m.order)) return false;
    for (std::size_t i = m.order; i < a.size(); ++i) {
      Rational s(0);
      for (int j = 1; j <= m.order; ++j)
        s += m.coefficients[j - 1] * Rational(a.terms[i - j]);
      if (s != Rational(a.terms[i])) return false;
    }
    return true;
  }
  bool operator()(const PolynomialModel& m) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      Rational x(m.first_index + static_cast<long>(i));
      if (poly_eval(m.coefficients, x) != Rational(a.terms[i])) return false;
    }
    return true;
  }
  bool operator()(const RationalFunctionModel& m) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      Rational x(m.first_index + static_cast<long>(i));
      Rational q = poly_eval(m.denominator, x);
      if (q == 0) return false;
      if (poly_eval(m.numerator, x) != Rational(a.terms[i]) * q) return false;
    }
    return true;
  }
  bool operator()(const PRecursiveModel& m) const {
    return verify_p_recursive(m, a);
  }
};

Term require_integer(const Rational& q, long n) {
  if (q.get_den() != 1)
    throw SingularStep(n, "model value is not an integer");
  return q.get_num();
}

struct ExtrapolateVisitor {
  const TermList& a;
  int count;

  TermList operator()(const RecurrenceModel& m) const {
    std::vector<Term> work = a.terms;
    TermList out(a.offset + static_cast<int>(a.size()), {});
    for (int c = 0; c < count; ++c) {
      Rational s(0);
      for (int j = 1; j <= m.order; ++j)
        s += m.coefficients[j - 1] * Rational(work[work.size() - j]);
      long n = a.offset + static_cast<long>(work.size());
      work.push_back(require_integer(s, n));
      out.terms.push_back(work.back());
    }
    return out;
  }
  TermList operator()(const PolynomialModel& m) const {
    TermList out(a.offset + static_cast<int>(a.size()), {});
    for (int c = 0; c < count; ++c) {
      long n = m.first_index + static_cast<long>(a.size()) + c;
      out.terms.push_back(require_integer(poly_eval(m.coefficients, Rational(n)), n));
    }
    return out;
  }
  TermList operator()(const RationalFunctionModel& m) const {
    TermList out(a.offset + static_cast<int>(a.size()), {});
    for (int c = 0; c < count; ++c) {
      long n = m.first_index + static_cast<long>(a.size()) + c;
      Rational q = poly_eval(m.denominator, Rational(n));
      if (q == 0) throw SingularStep(n, "denominator vanishes");
      out.terms.push_back(
          require_integer(poly_eval(m.numerator, Rational(n)) / q, n));
    }
    return out;
  }
  TermList operator()(const PRecursiveModel& m) const {
    std::vector<Term> work = a.terms;
    TermList out(a.offset + static_cast<int>(a.size()), {});
    for (int c = 0; c < count; ++c) {
      // Determine a at position len+c from the relation anchored r back.
      long n = m.first_index + static_cast<long>(work.size()) - m.order;
      Term nv(n);
      Term lead = ipoly_eval(m.polys[m.order], nv);
      if (lead == 0) throw SingularStep(n, "leading polynomial vanishes");
      Term s(0);
      for (int i = 0; i < m.order; ++i)
        s += ipoly_eval(m.polys[i], nv) * work[work.size() - m.order + i];
      Rational next = Rational(-s) / Rational(lead);
      work.push_back(require_integer(next, n));
      out.terms.push_back(work.back());
    }
    return out;
  }
};

}  // namespace

bool verify_model(const Model& m, const TermList& a) {
  return std::visit(VerifyVisitor{a}, m);
}

TermList extrapolate(const Model& m, const TermList& a, int count) {
  if (count < 0) throw std::invalid_argument("extrapolate: negative count");
  if (count == 0) return TermList(a.offset + static_cast<int>(a.size()), {});
  return std::visit(ExtrapolateVisitor{a, count}, m);
}

namespace {

// The determination size of a fitted model: how many terms pin it down.
std::size_t model_min_terms(const Model& m) {
  if (auto* r = std::get_if<RecurrenceModel>(&m))
    return 2 * static_cast<std::size_t>(r->order);
  if (auto* p = std::get_if<PolynomialModel>(&m))
    return p->coefficients.size();
  if (auto* q = std::get_if<RationalFunctionModel>(&m))
    return q->numerator.size() + q->denominator.size() - 1;
  auto& h = std::get<PRecursiveModel>(m);
  return static_cast<std::size_t>(h.order + 1) * (h.degree() + 1) + h.order;
}

}  // namespace

GuessReport guess_all(const TermList& a, const GuessBounds& bounds,
                      int extrapolate_count) {
  GuessReport report;
  auto add = [&](const char* kind, Model m) {
    FittedModel fm;
    fm.kind = kind;
    fm.model = std::move(m);
    fm.fit_terms = fit_prefix(a.size(), model_min_terms(fm.model));
    fm.verification_terms = a.size() - fm.fit_terms;
    fm.verified = verify_model(fm.model, a);
    try {
      fm.extrapolated = extrapolate(fm.model, a, extrapolate_count);
    } catch (const SingularStep&) {
      // Report the model with however much extension was possible.
      for (int c = extrapolate_count - 1; c > 0; --c) {
        try {
          fm.extrapolated = extrapolate(fm.model, a, c);
          break;
        } catch (const SingularStep&) {
        }
      }
    }
    report.models.push_back(std::move(fm));
  };

  try {
    if (auto m = guess_linear_recurrence(a, bounds.max_order))
      add("linear_recurrence", *m);
  } catch (const std::invalid_argument&) {
  }
  try {
    if (auto m = guess_polynomial(a)) add("polynomial", *m);
  } catch (const std::invalid_argument&) {
  }
  try {
    if (auto m = guess_rational_function(a, bounds.max_total_degree))
      add("rational_function", *m);
  } catch (const std::invalid_argument&) {
  }
  try {
    if (auto m = guess_p_recursive(a, bounds.max_order, bounds.max_degree))
      add("p_recursive", *m);
  } catch (const std::invalid_argument&) {
  }
  return report;
}

}  // namespace seqdb
