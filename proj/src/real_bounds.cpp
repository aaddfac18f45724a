#include "seqdb/real_bounds.hpp"

#include <mpfr.h>

namespace seqdb {

HighPrecisionValue::HighPrecisionValue(Evaluator eval, int initial_bits)
    : eval_(std::move(eval)), bits_(initial_bits) {
  auto [lo, hi] = eval_(bits_);
  lower_ = lo;
  upper_ = hi;
  if (lower_ > upper_)
    throw std::logic_error("HighPrecisionValue: evaluator returned lo > hi");
}

void HighPrecisionValue::refine() {
  bits_ *= 2;
  auto [lo, hi] = eval_(bits_);
  // Intersect so refinement is monotone even if the evaluator wobbles.
  if (lo > lower_) lower_ = lo;
  if (hi < upper_) upper_ = hi;
  if (lower_ > upper_)
    throw std::logic_error("HighPrecisionValue: brackets became inconsistent");
}

namespace {

Term rational_floor(const Rational& q) {
  Term r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

}  // namespace

std::optional<Term> HighPrecisionValue::certified_floor() const {
  Term flo = rational_floor(lower_);
  Term fhi = rational_floor(upper_);
  if (flo == fhi) return flo;
  return std::nullopt;
}

Term HighPrecisionValue::floor_or_throw(int max_bits) {
  for (;;) {
    if (auto f = certified_floor()) return *f;
    if (bits_ >= max_bits)
      throw PrecisionExceeded("certified floor not reached at " +
                              std::to_string(bits_) + " bits");
    refine();
  }
}

namespace {

class MpfrValue {
 public:
  explicit MpfrValue(int bits) { mpfr_init2(v_, bits); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

Rational to_rational(mpfr_ptr x) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), x);
  return q;
}

// One directed evaluation of h + exp(h)*log(h). For h >= 1 every
// intermediate quantity is nonnegative and the operations are monotone, so
// rounding every step in one direction yields a one-sided bound.
Rational directed_eval(const Rational& h, int bits, mpfr_rnd_t rnd) {
  MpfrValue hv(bits), e(bits), l(bits), prod(bits), sum(bits);
  mpfr_set_q(hv.get(), h.get_mpq_t(), rnd);
  // Rounding down must not push h below 1, else log turns negative and the
  // one-direction rounding argument breaks.
  if (rnd == MPFR_RNDD && mpfr_cmp_ui(hv.get(), 1) < 0)
    mpfr_set_ui(hv.get(), 1, MPFR_RNDZ);
  mpfr_exp(e.get(), hv.get(), rnd);
  mpfr_log(l.get(), hv.get(), rnd);
  mpfr_mul(prod.get(), e.get(), l.get(), rnd);
  mpfr_add(sum.get(), prod.get(), hv.get(), rnd);
  return to_rational(sum.get());
}

}  // namespace

HighPrecisionValue::Evaluator harmonic_expression_evaluator(const Rational& h) {
  if (h < 1)
    throw std::invalid_argument("harmonic_expression_evaluator: h must be >= 1");
  return [h](int bits) -> std::pair<Rational, Rational> {
    if (h == 1) return {Rational(1), Rational(1)};  // log term vanishes exactly
    return {directed_eval(h, bits, MPFR_RNDD), directed_eval(h, bits, MPFR_RNDU)};
  };
}

}  // namespace seqdb
