#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dryreach/verifier.hpp"

namespace dryreach {

// One suite line: a scenario, the verdict it must produce, and a note saying
// how that expectation was established (required; the suite is an oracle).
struct BenchEntry {
  std::string file;
  Verdict expect = Verdict::Safe;
  std::string note;
};

struct BenchRow {
  std::string name;
  std::string file;
  std::string note;
  std::string expect;
  std::string got;
  bool match = false;
  int refinements = 0;
  std::size_t tubes_computed = 0;
  std::size_t segments = 0;
  double seconds = 0.0;  // console table only; never serialized
  std::string error;     // nonempty when the run threw
};

struct BenchReport {
  std::vector<BenchRow> rows;
  bool all_match() const;
};

// Reads a suite file: [[entries]] with file / expect ("SAFE" | "UNSAFE") /
// note. Relative scenario paths resolve against the suite file's directory.
std::vector<BenchEntry> load_suite(const std::string& path);

// Runs every entry, up to `jobs` scenarios concurrently. Each worker owns its
// entry outright, so results are independent of the schedule. When set,
// `seed_override` replaces every scenario's own seed.
BenchReport run_suite(const std::vector<BenchEntry>& entries, int jobs,
                      std::optional<std::uint64_t> seed_override = {});

std::string bench_table(const BenchReport& r);  // console table (wall times)
std::string bench_csv(const BenchReport& r);    // deterministic artifact
std::string bench_json(const BenchReport& r);   // deterministic artifact

}  // namespace dryreach
