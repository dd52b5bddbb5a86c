#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "symcode/enumerate.hpp"

namespace symcode {

enum class sweep_property { kraft_forward, lemma1, theorem1_roundtrip, theorem2, sp_vs_bruteforce };

sweep_property parse_sweep_property(std::string_view name);
std::string_view property_name(sweep_property p);
code_filter property_filter(sweep_property p);

struct sweep_failure {
  std::uint64_t index = 0;  // universe index of the instance
  std::string instance;     // words joined by spaces
  std::string detail;
  bool from_recheck = false;

  bool operator==(const sweep_failure&) const = default;
};

struct sweep_report {
  std::string property;
  std::size_t max_words = 0;
  std::size_t max_len = 0;
  std::uint64_t candidates = 0;  // universe size before filtering
  std::uint64_t checked = 0;     // instances passing the filter
  std::uint64_t rechecked = 0;   // instances re-verified through the second route
  std::vector<sweep_failure> failures;
  double wall_seconds = 0.0;

  bool passed() const { return failures.empty() && checked > 0; }
};

struct sweep_options {
  bool parallel = true;
  double recheck_fraction = 0.01;
  std::uint64_t recheck_seed = 0x73796d636f6465ULL;
};

// Property check over every universe instance passing the property's filter,
// followed by a deterministic sample re-verified through an independent
// route. The kernel is OpenMP-parallel when built with OpenMP.
sweep_report run_sweep(sweep_property p, std::size_t max_words, std::size_t max_len,
                       const sweep_options& opts = {});

// Serial reference implementation: same report apart from wall_seconds.
sweep_report run_sweep_serial(sweep_property p, std::size_t max_words, std::size_t max_len,
                              const sweep_options& opts = {});

}  // namespace symcode
