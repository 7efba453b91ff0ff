#pragma once

#include <cstdint>
#include <vector>

#include "dryreach/verifier.hpp"

namespace dryreach {

// Premises under which every execution of `inner` is matched by one of
// `outer`: initial sets nest, the graphs are related by a forward simulation
// (labels read through lmap), and matched modes share identical dynamics.
// When all three hold, outer's reachtube covers inner's reachable states, so
// outer SAFE implies inner SAFE.
struct ContainmentCertificate {
  bool theta_contained = false;
  bool dynamics_match = false;
  bool simulation_found = false;
  int sweeps = 0;
  SimulationRelation relation;

  bool valid() const {
    return theta_contained && dynamics_match && simulation_found;
  }
};

ContainmentCertificate certify_reach_containment(const HybridSystem& inner,
                                                 const HybridSystem& outer,
                                                 const ModeMap& lmap = {});

// Same-dynamics attestation used above: every mode the graph references must
// have an identical right-hand side in both simulators (affine matrices and
// ode expressions compare structurally, the built-in vehicle bank by kind).
bool dynamics_equal(const SimulatorSpec& a, const SimulatorSpec& b,
                    const std::vector<std::string>& modes, const ModeMap& lmap);

// Unbounded self-composition: with entry-state semantics (terminal dwell 0),
// if the states entering the terminal vertex land back inside theta, every
// round of G;G;... starts inside theta, so one safe round makes all rounds
// safe.
struct FixpointCertificate {
  int terminal_vertex = -1;
  Box terminal_entry;   // bounding box of the terminal tube
  bool closed = false;  // terminal_entry inside theta
  Verdict one_round = Verdict::Unknown;
  int refinements = 0;

  bool valid() const { return closed && one_round == Verdict::Safe; }
};

FixpointCertificate certify_unbounded_composition(const HybridSystem& sys,
                                                  const VerifyOptions& opt);

// Staged reachability of a sequential composition: each stage before the last
// runs with terminal dwell 0 and hands its terminal entry box to the next
// stage as that stage's initial set. Stage tubes use stage-local time.
struct DecomposedReach {
  std::vector<ReachTube> stages;
  std::vector<Box> seeds;  // seeds[i] is stage i's initial set
};

DecomposedReach decompose_reach(const TransitionGraph& g, const SimulatorSpec& sim,
                                const Box& theta, const ReachOptions& opt);

// Random executions replayed against a computed tube: every sampled state
// must lie in a segment of its vertex whose window covers the sample time.
struct ContainmentStats {
  std::size_t runs = 0;
  std::size_t states = 0;
  std::size_t misses = 0;

  bool all_contained() const { return misses == 0; }
};

ContainmentStats monte_carlo_containment(const HybridSystem& sys,
                                         const ReachTube& tube, int runs,
                                         std::uint64_t seed, double grid,
                                         double terminal_dwell = -1.0);

}  // namespace dryreach
