#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dryreach/interval.hpp"

namespace dryreach {

struct TransitionGraph;
using GraphPtr = std::shared_ptr<const TransitionGraph>;

// Labeled DAG. Vertices carry mode labels, edges carry closed dwell windows:
// an execution must stay in the source vertex's mode for a time inside the
// window before taking the edge.
struct TransitionGraph {
  struct Edge {
    int src = 0;
    int dst = 0;
    Interval window;
  };

  std::vector<std::string> vertex_mode;  // vertex -> mode label
  std::vector<Edge> edges;

  // Set when this graph was produced by sequential_compose: the terminal
  // vertex of `left` and the initial vertex of `right` were fused at
  // `junction` (a vertex index of the composed graph).
  struct Composition {
    GraphPtr left;
    GraphPtr right;
    int junction = -1;
  };
  std::shared_ptr<const Composition> composed;

  int vertex_count() const { return static_cast<int>(vertex_mode.size()); }

  std::vector<int> initial_vertices() const;   // no incoming edges
  std::vector<int> terminal_vertices() const;  // no outgoing edges
  std::vector<const Edge*> out_edges(int v) const;
  std::vector<const Edge*> in_edges(int v) const;

  // Throws on: cycles, empty/negative/non-finite edge windows, empty vertex
  // set, or a graph that somehow lost its initial/terminal vertices.
  void validate() const;
};

// Kahn's algorithm; ties broken by ascending vertex index so the order is
// reproducible. Throws CycleDetected.
std::vector<int> topo_sort(const TransitionGraph& g);

// A trace: mode sequence plus the dwell time spent in each non-final mode.
struct TimedTrace {
  std::vector<std::string> modes;
  std::vector<double> dwells;  // size == modes.size() - 1

  bool operator==(const TimedTrace& o) const = default;
  bool operator<(const TimedTrace& o) const {
    if (modes != o.modes) return modes < o.modes;
    return dwells < o.dwells;
  }
};

// True when `p` is a prefix of `t` (same leading modes, same leading dwells).
bool is_trace_prefix(const TimedTrace& p, const TimedTrace& t, double tol = 1e-9);

// All traces along maximal paths, with dwell times discretized to
// {lo, lo+step, ...} U {hi} per edge. Guarded: throws ExplosionGuard when the
// trace count would exceed `cap`.
std::vector<TimedTrace> enumerate_traces(const TransitionGraph& g, double grid_step,
                                         std::size_t cap = 1000000);

// Mode relabeling map. Missing entries act as identity.
using ModeMap = std::map<std::string, std::string>;

std::string apply_mode_map(const ModeMap& m, const std::string& mode);
TimedTrace apply_mode_map(const ModeMap& m, const TimedTrace& t);

// Sequential composition: g1's unique terminal vertex is fused with g2's
// unique initial vertex (their labels must agree). The result records the
// junction for later decomposition.
TransitionGraph sequential_compose(const TransitionGraph& g1, const TransitionGraph& g2);

// g composed with itself `power` times (power >= 1).
TransitionGraph compose_power(const TransitionGraph& g, int power);

// Vertex origin inside compose_power(g, power): maps a composite vertex index
// back to (round, vertex-of-g). Rounds count from 0.
std::pair<int, int> power_vertex_origin(const TransitionGraph& g, int power, int composite_vertex);

// Sorted (v1, v2) pairs of a forward simulation relation.
using SimulationRelation = std::vector<std::pair<int, int>>;

// Greatest-fixpoint computation of a forward simulation from g1 to g2 under
// the mode map. Starts from all label-compatible pairs and deletes pairs whose
// outgoing dwell windows are not covered by related successors; returns
// nullopt when some initial vertex of g1 ends up unrelated to every initial
// vertex of g2. `sweeps_out` (optional) reports how many deletion sweeps ran.
std::optional<SimulationRelation> check_forward_simulation(const TransitionGraph& g1,
                                                           const TransitionGraph& g2,
                                                           const ModeMap& lmap = {},
                                                           int* sweeps_out = nullptr);

}  // namespace dryreach
