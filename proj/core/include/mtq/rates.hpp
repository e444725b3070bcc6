#ifndef MTQ_RATES_HPP
#define MTQ_RATES_HPP

#include <cstdint>
#include <vector>

#include "mtq/common.hpp"

namespace mtq {

/// One sine/cosine pair of a trigonometric polynomial with period 1.
struct Harmonic {
  int j = 1;            // frequency multiplier, j >= 1
  double sin_coef = 0;  // coefficient of sin(2*pi*j*t)
  double cos_coef = 0;  // coefficient of cos(2*pi*j*t)

  bool operator==(const Harmonic&) const = default;
};

/// Nonnegative 1-periodic intensity function
///   value(t) = a0 + sum_j (b_j sin(2 pi j t) + c_j cos(2 pi j t)).
///
/// Nonnegativity is validated at construction on a 10^4-point grid over
/// one period (tolerance -1e-12); when the coefficient certificate
/// a0 - sum(|b_j| + |c_j|) >= 0 holds the function is provably nonnegative.
class RateFunction {
public:
  RateFunction() = default;
  explicit RateFunction(double a0) : RateFunction(a0, {}) {}
  RateFunction(double a0, std::vector<Harmonic> harmonics);

  static RateFunction constant(double c) { return RateFunction(c); }

  double value(double t) const;
  double operator()(double t) const { return value(t); }

  /// Antiderivative with F(0) = 0, exact for the trig-polynomial form.
  double antiderivative(double t) const;

  /// Certified bounds: a0 +- sum(|b_j| + |c_j|).
  double sup_bound() const;
  double inf_bound() const;

  bool is_constant() const { return harmonics_.empty(); }
  double a0() const { return a0_; }
  const std::vector<Harmonic>& harmonics() const { return harmonics_; }

  bool operator==(const RateFunction&) const = default;

private:
  double a0_ = 0;
  std::vector<Harmonic> harmonics_;
};

/// Catastrophe rate family {gamma_n}: an explicit prefix gamma_0..gamma_{m-1}
/// plus one homogeneous tail rate used for every n >= m.  The homogeneous
/// tail keeps the infimum over the infinite index set finitely computable.
class CatastropheFamily {
public:
  CatastropheFamily() = default;
  CatastropheFamily(std::vector<RateFunction> explicit_prefix,
                    RateFunction tail)
      : explicit_(std::move(explicit_prefix)), tail_(std::move(tail)) {}

  /// Family member for queue state n.
  const RateFunction& member(std::int64_t n) const {
    return n >= 0 && static_cast<std::size_t>(n) < explicit_.size()
               ? explicit_[static_cast<std::size_t>(n)]
               : tail_;
  }
  double value(std::int64_t n, double t) const { return member(n).value(t); }

  /// Pointwise infimum over the whole family: min over prefix and tail.
  double infimum(double t) const;

  /// True when every member is the same function (coefficient-wise).
  bool is_uniform() const;

  std::size_t prefix_size() const { return explicit_.size(); }
  const std::vector<RateFunction>& explicit_prefix() const { return explicit_; }
  const RateFunction& tail() const { return tail_; }

  bool operator==(const CatastropheFamily&) const = default;

private:
  std::vector<RateFunction> explicit_;
  RateFunction tail_;
};

/// Full parameterization of the M_t/M_t/1 queue with balking threshold k,
/// catastrophes and server repairs.
struct QueueModel {
  RateFunction lambda;       // arrival rate
  RateFunction mu;           // service rate
  RateFunction beta;         // joining probability once queue length >= k
  RateFunction eta;          // repair rate
  CatastropheFamily gammas;  // catastrophe rates gamma_n
  int k = 1;                 // balking threshold, k >= 1

  /// Validates beta in [0,1] and k >= 1; rate nonnegativity is already
  /// guaranteed by RateFunction construction.
  void validate() const;

  /// Birth rate out of queue state s: lambda below the threshold,
  /// lambda*beta from the threshold up.
  double birth(std::int64_t s, double t) const {
    return s < k ? lambda.value(t) : lambda.value(t) * beta.value(t);
  }

  bool operator==(const QueueModel&) const = default;
};

/// gamma*(t) = inf_n gamma_n(t).
double gamma_star(const QueueModel& model, double t);

/// Certified upper bound L on sup_t sup_i |a_ii(t)| over the diagonal
/// families of the transposed intensity matrix: eta, lambda + gamma_0,
/// lambda + gamma_n + mu (1 <= n < k), lambda*beta + gamma_n + mu (n >= k).
/// Uses the per-rate coefficient certificates, so the returned value
/// dominates every diagonal entry at every time.
double rate_bound_L(const QueueModel& model);

/// Grid maximum of the same diagonal expressions (not certified); always
/// <= rate_bound_L up to grid resolution.  Exposed for diagnostics.
double rate_bound_grid(const QueueModel& model, std::size_t grid = 4096);

} // namespace mtq

#endif
