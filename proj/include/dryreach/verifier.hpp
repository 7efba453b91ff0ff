#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dryreach/hybrid.hpp"
#include "dryreach/reachability.hpp"

namespace dryreach {

enum class Verdict { Safe, Unsafe, Unknown };

const char* to_string(Verdict v);

// One concrete run: an initial state, a vertex path from an initial vertex,
// and the dwell spent at each vertex (the last entry is the time observed at
// the final vertex).
struct Execution {
  std::vector<int> path;
  std::vector<double> dwells;
  Vec x0;
};

// Replayable counterexample: the execution plus its sampled run, flattened
// over modes with global timestamps.
struct Witness {
  Execution execution;
  double hit_time = 0.0;
  std::string hit_unsafe;
  std::vector<double> times;
  std::vector<std::string> modes;
  std::vector<Vec> states;
};

struct RefinementStep {
  int depth = 0;
  std::string action;
};

struct VerdictReport {
  Verdict verdict = Verdict::Unknown;
  int refinements = 0;            // splits performed
  std::size_t tubes_computed = 0;
  std::size_t falsification_samples = 0;
  std::vector<RefinementStep> steps;
  std::optional<Witness> witness;  // set iff verdict == Unsafe
  std::vector<ReachTube> tubes;    // covering tubes backing a Safe verdict
};

struct VerifyOptions {
  ReachOptions reach;
  int max_refine = 14;        // maximum split depth before giving up
  int falsify_samples = 100;  // random executions tried before reachability
  double min_box_width = 1e-6;
};

// Simulate an execution mode by mode on the grid step; trace i starts at the
// state where trace i-1 ended.
std::vector<SimTrace> simulate_execution(const HybridSystem& sys,
                                         const Execution& e, double grid);

// Replay an execution and report the first unsafe sample, if any.
std::optional<Witness> check_execution(const HybridSystem& sys, const Execution& e,
                                       double grid);

// One random execution: initial state uniform in theta, a uniform random walk
// over edges, dwells drawn from the grid lattice inside each edge bound. The
// final vertex is observed for `terminal_dwell` (< 0: widest incoming bound).
Execution random_execution(const TransitionGraph& g, const Box& theta, Rng& rng,
                           double grid, double terminal_dwell = -1.0);

// Try `samples` random executions, returning the first unsafe one.
std::optional<Witness> random_falsify(const HybridSystem& sys, int samples,
                                      std::uint64_t seed, double grid,
                                      double terminal_dwell = -1.0);

VerdictReport verify_safety(const HybridSystem& sys, const VerifyOptions& opt);

}  // namespace dryreach
