#pragma once

#include <vector>

#include "dryreach/interval.hpp"
#include "dryreach/simulator.hpp"

namespace dryreach {

// Number of trajectories that must witness a bound for it to hold with
// probability at least 1-delta on all but an eps fraction of initial states:
// ceil((1/eps) ln(1/delta)), at least 1.
int pac_sample_size(double eps, double delta);

// One training point in separator space: at time t the separation between a
// trace pair had grown by exp(logratio) relative to the pair's base time.
struct RatioSample {
  double t = 0.0;
  double logratio = 0.0;
};

// The least upper line x <= rate * t + offset over the samples, minimizing
// rate * horizon + offset. Objective ties (within 1e-9) prefer the smaller
// offset, then the rate closer to zero.
struct SeparatorFit {
  double rate = 0.0;
  double offset = 0.0;
};
SeparatorFit fit_separator(const std::vector<RatioSample>& samples, double horizon);

// Exponential separation envelope. Two trajectories that start delta0 apart
// stay within beta(delta0, t) = delta0 * K * factor(t) of each other, where
// factor is the continuous piecewise-exponential growth profile: rate
// segments[i].rate applies from segments[i].t_start to the next segment
// (the last one runs to `horizon`). A single segment is the global form
// delta0 * K * exp(rate * t).
struct DiscrepancySegment {
  double t_start = 0.0;
  double rate = 0.0;
  bool operator==(const DiscrepancySegment&) const = default;
};

struct DiscrepancyFn {
  double K = 1.0;
  std::vector<DiscrepancySegment> segments;
  double horizon = 0.0;

  // Growth factor at time t (K excluded). Fails with
  // DurationExceedsDiscrepancyHorizon past the fitted horizon.
  double factor(double t) const;
  double beta(double delta0, double t) const { return delta0 * K * factor(t); }
  bool operator==(const DiscrepancyFn&) const = default;
};

// K = 1, zero rate: exact for a degenerate (single initial state) tube.
DiscrepancyFn trivial_discrepancy(double horizon);

// Learn from simulated traces on a shared time grid; traces[0] is the
// reference trajectory and every other trace is paired with it. Pairs that
// start at the exact same state carry no ratio information and are skipped;
// if every pair is degenerate the learner refuses.
DiscrepancyFn learn_global(const std::vector<SimTrace>& traces);

// Greedy left-to-right segmentation: each segment is extended as far as its
// fitted rate stays below gamma_cap, renormalizing separations at the segment
// start. A single grid step that still violates the cap is accepted as-is.
DiscrepancyFn learn_piecewise(const std::vector<SimTrace>& traces,
                              double gamma_cap = 2.0);

// Check fn against an independent set of traces (same pairing convention).
// A sample passes when separation <= beta * (1 + 1e-9) + 1e-12.
struct ValidationReport {
  long long checked = 0;
  long long violations = 0;
  double worst_ratio = 0.0;  // largest separation / bound seen
  double pass_fraction() const {
    return checked == 0 ? 1.0
                        : static_cast<double>(checked - violations) / checked;
  }
};
ValidationReport validate_discrepancy(const DiscrepancyFn& fn,
                                      const std::vector<SimTrace>& traces);

}  // namespace dryreach
