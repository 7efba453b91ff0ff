#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dryreach/hybrid.hpp"
#include "dryreach/toml.hpp"
#include "dryreach/verifier.hpp"

namespace dryreach {

// One verification problem plus its tuning knobs, read from a scenario file.
// Blocks: top-level `name`, [simulator], [graph] (either vertices/edges or
// compose + [graph.parts.X]), [initial], [[unsafe]], [discrepancy], [budget],
// [plot].
struct Scenario {
  HybridSystem system;
  VerifyOptions options;
  std::vector<std::pair<int, int>> plot_pairs;  // axis selectors; -1 = time

  // The parsed document; doc.serialize() is the canonical scenario text.
  toml::Value doc;
};

Scenario parse_scenario(const std::string& text,
                        const std::string& origin = "<input>");
Scenario load_scenario(const std::string& path);

// One constraint string, e.g. "syB - syA < 2" or "lam nin [12.4, 12.6]".
// Comparators: < <= > >= in nin; the right-hand side is a number for the
// order comparators and a [lo, hi] pair for in / nin. The left-hand side is
// linear over the state variables and the reserved mode-local time `t`.
UnsafeAtom parse_unsafe_constraint(const std::string& text,
                                   const std::vector<std::string>& vars);

// Mode relabeling file: one `"from" = "to"` string pair per line.
ModeMap load_mode_map(const std::string& path);

}  // namespace dryreach
