#pragma once

#include <vector>

namespace h1flow {

/// Reparametrized hyperbolastic type-I growth curve
///
///   x(t) = x0 * (eta + xi(t0)) / (eta + xi(t)),   xi(t) = lambda^t * mu^asinh(t),
///
/// restricted to the strictly increasing regime: eta, mu, x0 > 0,
/// lambda in (0,1) and mu < lambda^(-sqrt(1 + t0^2)).
///
/// log(lambda), log(mu) and xi(t0) are cached at construction; all powers are
/// evaluated as exponentials of logarithms so lambda^t cannot underflow to a
/// denormal surprise for large t.
class CurveParams {
 public:
  CurveParams(double eta, double lambda, double mu, double t0, double x0);

  double eta() const noexcept { return eta_; }
  double lambda() const noexcept { return lambda_; }
  double mu() const noexcept { return mu_; }
  double t0() const noexcept { return t0_; }
  double x0() const noexcept { return x0_; }

  double log_lambda() const noexcept { return log_lambda_; }
  double log_mu() const noexcept { return log_mu_; }
  double xi_t0() const noexcept { return xi_t0_; }

 private:
  double eta_;
  double lambda_;
  double mu_;
  double t0_;
  double x0_;
  double log_lambda_;
  double log_mu_;
  double xi_t0_;
};

/// Classical parametrization (M, rho, theta) of the same curve:
///   x(t) = M / (1 + a * exp(-rho t - theta asinh t)),
///   a = (M - x0)/x0 * exp(rho t0 + theta asinh t0).
struct ClassicalParams {
  double m;  // carrying capacity
  double rho;
  double theta;
  double t0;
  double x0;
};

/// Admissibility ceiling for mu at time t: lambda^(-sqrt(1+t^2)). The curve is
/// strictly increasing on [t0, inf) iff mu stays below this at every t >= t0.
double increasing_mu_bound(double lambda, double t);

/// xi(t) = lambda^t * mu^asinh(t), evaluated as exp(t log lambda + asinh(t) log mu).
double xi(double t, const CurveParams& p);

/// Curve value at t >= t0.
double curve_value(double t, const CurveParams& p);

/// Limiting size k = x0 * (1 + xi(t0)/eta).
double asymptote(const CurveParams& p);

ClassicalParams to_classical(const CurveParams& p);
CurveParams from_classical(const ClassicalParams& c);

/// All inflection points in [t_lo, t_hi], found by sign-change bracketing of
/// the inflection equation on a uniform scan grid followed by bisection to a
/// time tolerance of 1e-10. A bracket in which the (log lambda +
/// log mu / sqrt(1+t^2)) factor changes sign is a singularity of the equation
/// and is rejected as a NumericalError. No uniqueness is asserted.
std::vector<double> inflection_times(const CurveParams& p, double t_lo, double t_hi,
                                     int scan_points = 2000);

}  // namespace h1flow
