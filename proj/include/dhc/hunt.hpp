#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dhc/json_io.hpp"

namespace dhc {

struct IntRange {
  std::optional<int> min, max;
  bool admits(int x) const { return (!min || x >= *min) && (!max || x <= *max); }
};

struct HuntConfig {
  int n_min = 1;
  int n_max = 1;
  std::string predicate = "target:half";
  // Graph6 source instead of the internal generator.
  std::string ingest_path;
  bool ingest_complement = false;
  std::vector<std::string> free_of;
  IntRange omega, delta, kappa;
  std::uint64_t budget = 1'000'000;
  int workers = 1;
  std::string checkpoint_path;
  int checkpoint_every = 256;  // graphs per work chunk
  std::string output_path;
  std::string retry_path;

  // Hash of the fields that decide the work and its results; worker count
  // and file locations are excluded.
  std::uint64_t hash() const;
  Json semantic_json() const;
};

class HuntError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses and validates a config document. Unknown keys are errors.
HuntConfig hunt_config_from_json(const Json& j);
HuntConfig load_hunt_config(const std::string& path);

struct HuntCounts {
  std::uint64_t enumerated = 0, filtered_in = 0, pass = 0, not_applicable = 0, budget_exhausted = 0, fail = 0;
};

struct HuntCursor {
  int n = 0;
  std::uint64_t index = 0;  // next graph within order n, in enumeration order
};

struct HuntReport {
  std::uint64_t config_hash = 0;
  Json config;
  std::map<int, HuntCounts> per_n;
  Json violations = Json::array();
  Json retry = Json::array();
  bool complete = false;
  std::optional<HuntCursor> resume_cursor;  // set while incomplete
  double wall_seconds = 0, cpu_seconds = 0;
};

// The deterministic part excludes "timing"; it is what reruns must reproduce.
Json report_json(const HuntReport& r, bool with_timing = true);

struct HuntControl {
  bool resume = false;
  // Stop (as if killed) after this many chunks have been checkpointed.
  std::optional<int> stop_after_chunks;
};

// Worker count comes from the config unless DHC_WORKERS is set.
HuntReport run_hunt(const HuntConfig& config, const HuntControl& control = {});

// Writes via a temporary file and rename so readers never see partial data.
void write_atomically(const std::string& path, const std::string& data);

}  // namespace dhc
