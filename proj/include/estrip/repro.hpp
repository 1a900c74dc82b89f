#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace estrip {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Budget { zero, small, full };
Budget parse_budget(const std::string& s);
std::string to_string(Budget b);

// Every default a reproduction depends on; all of them can be pinned from the config file.
struct ReproSettings {
  Budget budget = Budget::small;
  std::uint64_t seed = 20240521;
  std::filesystem::path out_dir = "repro-out";
  bool write_files = true;

  // sqrt(N) bands for the walks (trivial character / chi_{7,2})
  double band_trivial = 3.0;
  double band_character = 5.0;
  // CLT ensemble window
  double variance_lo = 0.52;
  double variance_hi = 0.64;
  double mean_max = 0.02;
  // prime-sum S_delta against the continued arg
  double sdelta_sup = 0.05;
  // staircase
  double counting_delta = 1e-3;
  std::size_t counting_primes = 100;
  double counting_step = 0.1;
};

struct ReproRow {
  std::string label;
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  std::string relation;  // how computed is judged against expected
  std::string status;    // pass | fail | skipped | info
};

struct ReproReport {
  std::string target;
  std::vector<ReproRow> rows;
  bool overall = true;  // AND over pass/fail rows; skipped and info rows do not count
  double runtime = 0.0;
  nlohmann::json config;
  std::vector<std::string> artifacts;
};

const std::vector<std::string>& repro_targets();

// UsageError for an unknown target.
ReproReport repro(const std::string& target, const ReproSettings& settings);

nlohmann::json to_json(const ReproReport& report);

}  // namespace estrip
