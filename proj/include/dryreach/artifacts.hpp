#pragma once

#include <string>
#include <vector>

#include "dryreach/certify.hpp"
#include "dryreach/verifier.hpp"

namespace dryreach {

// CSV dump of a reachtube: header `vertex,mode,t_lo,t_hi,dim0_lo,dim0_hi,...`,
// one row per segment, segment times converted to global time. Unreached
// vertices contribute no rows. Numbers round-trip exactly.
std::string tube_csv(const ReachTube& tube);

// CSV dump of a witness run: header `time,mode,dim0,...`, one row per sample.
std::string witness_csv(const Witness& w);

// One plot: tube segments as translucent rectangles, the witness (when given)
// as a polyline. `x` and `y` select state dimensions; -1 selects global time.
// Throws BadDimension for any other out-of-range selector. An empty tube list
// yields an empty-axes plot.
std::string plot_svg(const std::vector<ReachTube>& tubes, int x, int y,
                     const std::vector<std::string>& variables,
                     const Witness* witness = nullptr);

// Verdict report as JSON (no wall-clock fields; reruns are byte-identical).
std::string verdict_json(const std::string& name, const VerdictReport& rep);

// Certificate reports: human-readable text and machine-readable JSON, each
// naming every checked premise and its outcome.
std::string containment_text(const ContainmentCertificate& c);
std::string containment_json(const ContainmentCertificate& c);
std::string fixpoint_text(const FixpointCertificate& c, const Box& theta);
std::string fixpoint_json(const FixpointCertificate& c, const Box& theta);
std::string decompose_text(const DecomposedReach& d);
std::string decompose_json(const DecomposedReach& d);

std::string format_box(const Box& b);

// Writes `content` to `path`, creating parent directories as needed.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace dryreach
