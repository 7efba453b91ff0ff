#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dryreach/discrepancy.hpp"
#include "dryreach/interval.hpp"
#include "dryreach/rng.hpp"
#include "dryreach/simulator.hpp"
#include "dryreach/transition_graph.hpp"

namespace dryreach {

// One slice of a single-mode tube: every covered trajectory lies in `box`
// while its mode-local time is inside `local_time`.
struct TubeSegment {
  Interval local_time;
  Box box;
};

// Reachtube of one graph vertex. Mode-local segment times convert to global
// time through `entry_time`, the window of possible entry instants.
struct VertexTube {
  int vertex = -1;
  std::string mode;
  bool reached = false;
  Interval entry_time;
  Box entry_box;
  double duration = 0.0;
  DiscrepancyFn discrepancy;
  std::vector<TubeSegment> segments;

  Interval global_window(const TubeSegment& s) const {
    return {entry_time.lo + s.local_time.lo, entry_time.hi + s.local_time.hi};
  }
};

struct ReachTube {
  std::vector<VertexTube> vertices;  // indexed by graph vertex id

  const VertexTube& at(int v) const { return vertices.at(v); }
  std::size_t segment_count() const {
    std::size_t n = 0;
    for (const VertexTube& vt : vertices) n += vt.segments.size();
    return n;
  }
};

struct ReachOptions {
  double grid = 0.01;    // integrator step and tube slice width
  double eps = 0.01;     // PAC accuracy
  double delta = 0.01;   // PAC confidence
  int train_count = 0;   // > 0: traces per learned discrepancy; 0: PAC-derived
  // Added to the vertex index when deriving per-vertex learning streams.
  // Staged runs over a composition set this so each stage reproduces the
  // streams the composite graph would use for the same vertices.
  int vertex_seed_base = 0;
  bool piecewise = true;
  double gamma_cap = 2.0;
  double terminal_dwell = -1.0;  // < 0: default to the widest incoming bound
  std::uint64_t seed = 0;
};

// Tube around traces' reference trajectory: one segment per consecutive
// sample window, the box hulling both window endpoint states, inflated by
// r0 * K * max growth factor over the window (endpoints plus any interior
// envelope breakpoints).
std::vector<TubeSegment> bloat_center(const SimTrace& center, double r0,
                                      const DiscrepancyFn& fn);

// States possible while mode-local time lies in `window`: the hull of all
// segments whose window it intersects. Fails with WindowOutOfRange when the
// window misses the tube entirely.
Box restrict_tube(const VertexTube& tube, const Interval& window);

// Largest growth factor the envelope attains on [lo, hi].
double max_growth_factor(const DiscrepancyFn& fn, double lo, double hi);

// Reachtube of the whole graph from initial set `theta`: vertices in
// topological order, each simulated for the widest outgoing dwell bound
// (terminal vertices use the configured terminal dwell), with a fresh
// discrepancy learned per vertex from pac_sample_size(eps, delta) sampled
// trajectories around the entry box center.
ReachTube graph_reach(const TransitionGraph& g, const SimulatorSpec& sim,
                      const Box& theta, const ReachOptions& opt);

// Hull of every segment box of one vertex tube.
Box tube_bounding_box(const VertexTube& tube);

// Uniform draw from a box (degenerate sides stay at their single value).
Vec random_point_in_box(const Box& b, Rng& rng);

}  // namespace dryreach
