#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dryreach/expr.hpp"
#include "dryreach/interval.hpp"

namespace dryreach {

// One simulated trajectory in a single mode. times[0] == 0 and times are
// strictly increasing; states[i] is the state at times[i].
struct SimTrace {
  std::string mode;
  std::vector<double> times;
  std::vector<Vec> states;

  std::size_t size() const { return times.size(); }
  const Vec& fstate() const { return states.front(); }
  const Vec& lstate() const { return states.back(); }
  double ltime() const { return times.back(); }
};

enum class SimKind { Affine, ScriptedOde, Vehicle, Product };

// x' = A x + b
struct AffineMode {
  std::vector<Vec> A;
  Vec b;
  bool operator==(const AffineMode&) const = default;
};

struct ScriptedMode {
  std::vector<Expr> rhs;  // one expression per state dimension
  bool operator==(const ScriptedMode& o) const { return rhs == o.rhs; }
};

// Deterministic mode simulator bank. `vehicle` is a single 4-dimensional block
// [sx, vx, sy, vy]; `product` stacks one such block per named vehicle and a
// mode is the per-vehicle modes joined by '|'.
struct SimulatorSpec {
  SimKind kind = SimKind::Affine;
  int dimension = 0;
  double step = 0.01;  // integrator step h
  std::vector<std::string> variables;
  std::map<std::string, AffineMode> affine_modes;
  std::map<std::string, ScriptedMode> scripted_modes;
  std::vector<std::string> vehicles;  // product only: block names

  void validate() const;
  bool knows_mode(const std::string& mode) const;
  bool operator==(const SimulatorSpec&) const = default;
};

// Names of the built-in vehicle block modes.
const std::vector<std::string>& vehicle_mode_bank();

// Classical RK4 with fixed step h and a trailing partial step so integration
// lands exactly on t_end. rhs(t, x, dx) fills dx.
using Rhs = std::function<void(double, const Vec&, Vec&)>;
Vec integrate_fixed_step(const Rhs& rhs, Vec x0, double t_end, double h);

// Simulate `mode` from x0, sampling at the given time points
// (time_points[0] must be 0, strictly increasing). Throws UnknownMode,
// NonMonotonicTimes, DimensionMismatch, NumericOverflow (any |x| > 1e12).
SimTrace simulate(const SimulatorSpec& spec, const std::string& mode, const Vec& x0,
                  const std::vector<double>& time_points);

// 0, step, 2*step, ..., plus t_end when it is not already a multiple.
std::vector<double> sample_times(double t_end, double step);

}  // namespace dryreach
