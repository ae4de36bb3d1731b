// Time integration: a classical RK4 stepper usable on both representations,
// a Strang splitting step for the Schrodinger flow, and a trajectory driver
// that records monitor series and catches mid-run blow-up.

#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "madlab/grid.hpp"
#include "madlab/hamiltonians.hpp"
#include "madlab/states.hpp"

namespace madlab {

// state + c * tangent, used by the generic RK4 stepper
WaveFunction axpy(const WaveFunction& y, double c, const ComplexField& d);
FluidState axpy(const FluidState& y, double c, const FluidTangent& d);

// one classical Runge-Kutta step of y' = rhs(y)
template <typename State, typename Rhs>
State step_rk4(const State& y, Rhs&& rhs, double dt) {
  auto k1 = rhs(y);
  auto k2 = rhs(axpy(y, 0.5 * dt, k1));
  auto k3 = rhs(axpy(y, 0.5 * dt, k2));
  auto k4 = rhs(axpy(y, dt, k3));
  return axpy(axpy(axpy(axpy(y, dt / 6.0, k1), dt / 3.0, k2), dt / 3.0, k3),
              dt / 6.0, k4);
}

// Strang splitting for i psi_t = -1/2 lap psi + f(|psi|^2) psi: half a step of
// the pointwise phase rotation, a full step of the exact linear flow in
// Fourier space, half a step of the phase again.  |psi| is exactly preserved
// by the phase factor, so mass drift stays at roundoff.
WaveFunction step_strang_nls(const WaveFunction& y, const NonlinearityModel& model,
                             double dt);

template <typename State>
struct Monitor {
  std::string name;
  std::function<double(const State&)> eval;
};

template <typename State>
struct TrajectoryRecord {
  std::vector<double> times;
  std::vector<std::string> monitor_names;
  std::vector<std::vector<double>> monitor_series;  // one row per monitor
  std::vector<double> snapshot_times;
  std::vector<State> snapshots;
  bool failed = false;
  double failure_time = 0.0;
  std::string failure_reason;

  const State& final_state() const {
    if (snapshots.empty()) throw std::logic_error("trajectory holds no snapshots");
    return snapshots.back();
  }
};

// Integrate from t = 0 to t = horizon with fixed dt (horizon must be an
// integer number of steps within roundoff).  Monitors are sampled at every
// step, snapshots every snapshot_stride steps plus the endpoints.  A step
// that throws or produces non-finite samples marks the record failed and
// stops the run, keeping everything recorded so far.
template <typename State, typename Step>
TrajectoryRecord<State> evolve(const State& initial, Step&& step, double dt,
                               double horizon,
                               const std::vector<Monitor<State>>& monitors,
                               std::size_t snapshot_stride = 0) {
  if (!(dt > 0.0)) throw std::invalid_argument("evolve: dt must be positive");
  const long long nsteps = std::llround(horizon / dt);
  if (nsteps < 1 || std::abs(nsteps * dt - horizon) > 1e-9 * std::max(1.0, horizon))
    throw std::invalid_argument("evolve: horizon must be a whole number of steps");

  TrajectoryRecord<State> rec;
  for (const auto& m : monitors) rec.monitor_names.push_back(m.name);
  rec.monitor_series.resize(monitors.size());

  auto sample = [&](const State& y, double t) {
    rec.times.push_back(t);
    for (std::size_t i = 0; i < monitors.size(); ++i)
      rec.monitor_series[i].push_back(monitors[i].eval(y));
  };

  State y = initial;
  sample(y, 0.0);
  rec.snapshot_times.push_back(0.0);
  rec.snapshots.push_back(y);

  for (long long k = 1; k <= nsteps; ++k) {
    double t = k * dt;
    try {
      y = step(y, dt);
      sample(y, t);
    } catch (const std::exception& e) {
      rec.failed = true;
      rec.failure_time = t;
      rec.failure_reason = e.what();
      return rec;
    }
    bool want_snapshot = (k == nsteps) ||
                         (snapshot_stride > 0 && k % (long long)snapshot_stride == 0);
    if (want_snapshot) {
      rec.snapshot_times.push_back(t);
      rec.snapshots.push_back(y);
    }
  }
  return rec;
}

}  // namespace madlab
