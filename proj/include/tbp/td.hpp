#pragma once

// Nonlinear tracking-differentiator.
//
// The discrete form drives the velocity state with Han's time-optimal
// synthesis function (fst/fhan); the continuous form integrates
//   x1' = x2,  x2' = R^2 f(x1 - v, x2 / R)
// for one of the two power/sign nonlinearities.

#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace tbp::td {

/// Han's discrete synthesis function.
struct Fhan {};

/// f(x1, x2) = -|x1|^a1 sgn(x1) - |x2|^a2 sgn(x2), 0 < a1, a2 < 1.
struct Alpha {
  double exponent1 = 0.5;
  double exponent2 = 0.5;
};

/// f(x1, x2) = -sgn(x1 + |x2| x2 / 2).
struct Sign {};

using Nonlinearity = std::variant<Fhan, Alpha, Sign>;

struct TdParams {
  double gain = 0.001;  ///< R, bound on the tracked signal's acceleration
  double step = 1.0;    ///< h, sampling step of the discrete recursion
  Nonlinearity nonlinearity = Fhan{};
  double integrator_step = 0.01;  ///< RK4 substep, continuous mode only

  /// Throws ParameterError when any invariant is violated.
  void validate() const;
};

struct TdState {
  double x1 = 0.0;  ///< tracking output
  double x2 = 0.0;  ///< derivative estimate
};

/// smoothed[k+1] == smoothed[k] + step * derivative[k] holds bit-for-bit for
/// traces produced by track().
struct TdTrace {
  std::vector<double> smoothed;
  std::vector<double> derivative;

  std::size_t size() const noexcept { return smoothed.size(); }
  TdState at(std::size_t k) const { return {smoothed.at(k), derivative.at(k)}; }
};

double signum(double x) noexcept;

/// Han's fst. `error` is x1 - v, `velocity` is x2. Result lies in
/// [-gain, gain].
double fst(double error, double velocity, double gain, double step);

/// One step of the discrete TD. Requires the Fhan nonlinearity.
TdState step(const TdState& state, double input, const TdParams& params);

/// Runs step() over the series. Element 0 is the initial state (auto:
/// x1 = signal[0], x2 = 0); element k is step(element k-1, signal[k]).
TdTrace track(std::span<const double> signal, const TdParams& params,
              std::optional<TdState> init = std::nullopt);

double f_alpha(double x1, double x2, double exponent1, double exponent2);
double f_sign(double x1, double x2);

/// One RK4 substep of the continuous system with the input held at `input`.
TdState continuous_substep(const TdState& state, double input,
                           const TdParams& params);

/// Integrates the continuous TD with the signal held piecewise-constant at
/// unit sample spacing (value signal[k] on (k-1, k]). Element k is the state
/// at sample time k. Requires Alpha or Sign.
TdTrace integrate_continuous(std::span<const double> signal,
                             const TdParams& params,
                             std::optional<TdState> init = std::nullopt);

/// step * sum |smoothed[k] - signal[k]|.
double tracking_error_l1(std::span<const double> signal, const TdTrace& trace,
                         double step);

}  // namespace tbp::td
