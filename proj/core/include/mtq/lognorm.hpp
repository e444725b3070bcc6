#ifndef MTQ_LOGNORM_HPP
#define MTQ_LOGNORM_HPP

#include <functional>

#include "mtq/generator.hpp"
#include "mtq/rates.hpp"
#include "mtq/weights.hpp"

namespace mtq {

/// Logarithmic norm in the column-sum (l1) norm:
/// sup over columns i of (m_ii + sum_{j != i} |m_ji|).
double log_norm_l1(const DenseMatrix& m);
double log_norm_l1(const TruncatedSystem& sys);

/// 1-periodic scalar rate curve with its period mean cached.
class RateCurve {
public:
  RateCurve(std::function<double(double)> f, std::size_t mean_panels = 2048);
  explicit RateCurve(const RateFunction& r);

  double operator()(double t) const { return f_(t); }
  double mean_over_period() const { return mean_; }
  /// Minimum over a dense one-period grid (small safety margin subtracted).
  double floor_over_period(std::size_t grid = 4096) const;

private:
  std::function<double(double)> f_;
  double mean_;
};

/// Exponential envelope constants: exp(-int_s^t rate) <= N exp(-gamma0 (t-s)).
struct Envelope {
  double N = 1.0;
  double gamma0 = 0.0;
};

enum class Divergence { Diverges, Fails };

/// For a 1-periodic rate the integral over [0, inf) diverges iff the period
/// mean is positive.
Divergence check_divergence(const RateCurve& rate);

/// Tight periodic-antiderivative envelope: gamma0 is the period mean and
/// N = exp(max Phi - min Phi) for the periodic antiderivative Phi of
/// (rate - gamma0), plus a 1e-6 exponent margin covering grid resolution.
/// Throws NotErgodic when the mean is not positive.
Envelope fit_envelope(const RateCurve& rate);

/// Envelope with N = 1 and gamma0 equal to the pointwise floor of the rate.
Envelope floor_envelope(const RateCurve& rate);

/// Weighted column rate of the reduced matrix A*(t) with diagonal weights:
/// inf_i (|a*_ii| - sum_{j != i} (d_j/d_i) a*_ji), taken over the queue
/// columns plus a homogeneous-tail representative.  Set
/// `include_repair_column` to extend the infimum to the repair column
/// (the literature's worked examples leave it out, and the queue-only rate
/// is what their closed-form expressions reproduce).
double gamma_double_star(const QueueModel& model, const WeightSequence& w,
                         double t, bool include_repair_column = false);

/// Column rate of the weighted matrix B*(t) = D B(t) D^{-1} built from the
/// general queue-only reduction: inf_i (|b*_ii| - sum_{j != i} b*_ji) with
/// signed off-diagonal entries, over the first k+2 columns plus a tail
/// representative.  `absolute_off_diagonal` switches to the strict variant
/// that sums |b*_ji| instead.
double gamma_B_rate(const QueueModel& model, const WeightSequence& w, double t,
                    bool absolute_off_diagonal = false);

/// Curves over one period for the three ergodicity rates and the
/// explicit-weight integrand gamma*(t) - eps * max(eta(t), lambda(t)).
RateCurve gamma_star_curve(const QueueModel& model);
RateCurve gamma_double_star_curve(const QueueModel& model,
                                  const WeightSequence& w,
                                  bool include_repair_column = false);
RateCurve gamma_B_curve(const QueueModel& model, const WeightSequence& w);
RateCurve explicit_weight_integrand(const QueueModel& model, double eps);

} // namespace mtq

#endif
