#pragma once

#include <string>
#include <vector>

#include "dryreach/expr.hpp"
#include "dryreach/interval.hpp"
#include "dryreach/simulator.hpp"
#include "dryreach/transition_graph.hpp"

namespace dryreach {

enum class CmpOp { Lt, Le, Gt, Ge, In, NotIn };

// One constraint over (state, time): expr(x, t) op bound (or range).
struct UnsafeAtom {
  LinExpr expr;
  CmpOp op = CmpOp::Lt;
  double bound = 0.0;  // Lt / Le / Gt / Ge
  Interval range;      // In / NotIn
  std::string text;    // source form, kept for reports
};

// Conjunction of atoms, optionally scoped to a single mode. A system's
// unsafe region is the union of these conjunctions.
struct UnsafeSet {
  std::string name;
  std::string mode;  // empty: applies in every mode
  std::vector<UnsafeAtom> atoms;
};

struct HybridSystem {
  std::string name;
  std::vector<std::string> variables;
  TransitionGraph graph;
  SimulatorSpec sim;
  Box theta;
  std::vector<UnsafeSet> unsafe;

  void validate() const;
};

// `t` is mode-local: the time since the run entered its current vertex.
bool atom_holds(const UnsafeAtom& a, const Vec& x, double t);
bool unsafe_holds(const UnsafeSet& u, const std::string& mode, const Vec& x,
                  double t);

enum class SetRelation { Disjoint, Contained, Overlapping };

// Conservative classification of box x time-window against one conjunction:
// Contained and Disjoint are definite, Overlapping means undecided.
SetRelation classify_against(const UnsafeSet& u, const std::string& mode,
                             const Box& box, const Interval& time);

}  // namespace dryreach
