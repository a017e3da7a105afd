#include "tbp/td.hpp"

#include <cmath>
#include <string>

#include "tbp/error.hpp"

namespace tbp::td {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw ParameterError(std::string(what) + " must be finite");
  }
}

void require_positive(double x, const char* what) {
  if (!std::isfinite(x) || !(x > 0.0)) {
    throw ParameterError(std::string(what) + " must be positive and finite, got " +
                         std::to_string(x));
  }
}

TdState auto_init(std::span<const double> signal,
                  const std::optional<TdState>& init) {
  if (signal.empty()) throw UsageError("cannot track an empty signal");
  for (double v : signal) {
    if (!std::isfinite(v)) throw UsageError("signal contains a non-finite value");
  }
  return init.value_or(TdState{signal.front(), 0.0});
}

// Acceleration of the continuous system.
double field(const TdState& s, double input, const TdParams& p) {
  const double r = p.gain;
  const double e = s.x1 - input;
  const double v = s.x2 / r;
  if (const auto* a = std::get_if<Alpha>(&p.nonlinearity)) {
    return r * r * f_alpha(e, v, a->exponent1, a->exponent2);
  }
  return r * r * f_sign(e, v);
}

}  // namespace

void TdParams::validate() const {
  require_positive(gain, "gain R");
  require_positive(step, "step h");
  require_positive(integrator_step, "integrator step");
  if (const auto* a = std::get_if<Alpha>(&nonlinearity)) {
    if (!(a->exponent1 > 0.0 && a->exponent1 < 1.0) ||
        !(a->exponent2 > 0.0 && a->exponent2 < 1.0)) {
      throw ParameterError("alpha exponents must lie in (0, 1)");
    }
  }
}

double signum(double x) noexcept {
  return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
}

double fst(double error, double velocity, double gain, double step) {
  require_positive(gain, "gain R");
  require_positive(step, "step h");
  require_finite(error, "tracking error");
  require_finite(velocity, "velocity");

  const double d = gain * step;
  const double d0 = d * step;
  const double y = error + step * velocity;
  const double a0 = std::sqrt(d * d + 8.0 * gain * std::abs(y));
  const double a = std::abs(y) < d0 ? velocity + y / step
                                    : velocity + signum(y) * (a0 - d) / 2.0;
  // a / d first so that |a| <= d can never round past gain.
  return std::abs(a) <= d ? -gain * (a / d) : -gain * signum(a);
}

TdState step(const TdState& state, double input, const TdParams& params) {
  if (!std::holds_alternative<Fhan>(params.nonlinearity)) {
    throw ParameterError("the discrete TD requires the fhan nonlinearity");
  }
  require_finite(input, "input");
  const double h = params.step;
  const double accel = fst(state.x1 - input, state.x2, params.gain, h);

  TdState next{state.x1 + h * state.x2, state.x2 + h * accel};
  // Rounding of the sum can push the realized velocity change one ulp past
  // h * R; pull it back so the bound holds in floating point too.
  const double limit = h * params.gain;
  while (std::abs(next.x2 - state.x2) > limit) {
    next.x2 = std::nextafter(next.x2, state.x2);
  }
  return next;
}

TdTrace track(std::span<const double> signal, const TdParams& params,
              std::optional<TdState> init) {
  params.validate();
  TdState state = auto_init(signal, init);

  TdTrace trace;
  trace.smoothed.reserve(signal.size());
  trace.derivative.reserve(signal.size());
  trace.smoothed.push_back(state.x1);
  trace.derivative.push_back(state.x2);
  for (std::size_t k = 1; k < signal.size(); ++k) {
    state = step(state, signal[k], params);
    trace.smoothed.push_back(state.x1);
    trace.derivative.push_back(state.x2);
  }
  return trace;
}

double f_alpha(double x1, double x2, double exponent1, double exponent2) {
  if (!(exponent1 > 0.0 && exponent1 < 1.0) ||
      !(exponent2 > 0.0 && exponent2 < 1.0)) {
    throw ParameterError("alpha exponents must lie in (0, 1)");
  }
  const auto power = [](double x, double e) {
    return e == 0.5 ? std::sqrt(std::abs(x)) : std::pow(std::abs(x), e);
  };
  return -power(x1, exponent1) * signum(x1) - power(x2, exponent2) * signum(x2);
}

double f_sign(double x1, double x2) {
  require_finite(x1, "x1");
  require_finite(x2, "x2");
  return -signum(x1 + 0.5 * std::abs(x2) * x2);
}

TdState continuous_substep(const TdState& s, double input,
                           const TdParams& params) {
  const double dt = params.integrator_step;
  const double k1x = s.x2;
  const double k1v = field(s, input, params);
  const TdState s2{s.x1 + 0.5 * dt * k1x, s.x2 + 0.5 * dt * k1v};
  const double k2x = s2.x2;
  const double k2v = field(s2, input, params);
  const TdState s3{s.x1 + 0.5 * dt * k2x, s.x2 + 0.5 * dt * k2v};
  const double k3x = s3.x2;
  const double k3v = field(s3, input, params);
  const TdState s4{s.x1 + dt * k3x, s.x2 + dt * k3v};
  const double k4x = s4.x2;
  const double k4v = field(s4, input, params);
  return {s.x1 + dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x),
          s.x2 + dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)};
}

TdTrace integrate_continuous(std::span<const double> signal,
                             const TdParams& params,
                             std::optional<TdState> init) {
  params.validate();
  if (std::holds_alternative<Fhan>(params.nonlinearity)) {
    throw ParameterError("continuous integration requires the alpha or sign nonlinearity");
  }
  const double substeps = 1.0 / params.integrator_step;
  const auto count = static_cast<long>(std::llround(substeps));
  if (count < 1 || std::abs(substeps - static_cast<double>(count)) > 1e-9 * substeps) {
    throw ParameterError("integrator step must divide the unit sample interval evenly");
  }
  TdState state = auto_init(signal, init);

  TdTrace trace;
  trace.smoothed.reserve(signal.size());
  trace.derivative.reserve(signal.size());
  trace.smoothed.push_back(state.x1);
  trace.derivative.push_back(state.x2);
  for (std::size_t k = 1; k < signal.size(); ++k) {
    for (long i = 0; i < count; ++i) state = continuous_substep(state, signal[k], params);
    trace.smoothed.push_back(state.x1);
    trace.derivative.push_back(state.x2);
  }
  return trace;
}

double tracking_error_l1(std::span<const double> signal, const TdTrace& trace,
                         double step) {
  if (signal.size() != trace.size()) {
    throw UsageError("signal and trace lengths differ (" + std::to_string(signal.size()) +
                     " vs " + std::to_string(trace.size()) + ")");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < signal.size(); ++k) {
    total += std::abs(trace.smoothed[k] - signal[k]);
  }
  return step * total;
}

}  // namespace tbp::td
