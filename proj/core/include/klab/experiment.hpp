#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "klab/cache.hpp"
#include "klab/families.hpp"
#include "klab/module_presentation.hpp"
#include "klab/report.hpp"

namespace klab {

/// Experiment document. Either `family` names a catalog entry, or
/// `variables`/`relations`/`ideal` describe one explicit ring and sequence.
struct ExperimentConfig {
  std::string family;
  std::vector<std::string> variables;
  std::vector<std::string> relations;
  std::vector<std::string> ideal;
  std::optional<std::string> proxy;
  std::vector<unsigned> n_values;
  /// t, s, k, d and dvr overrides; n is taken from n_values.
  FamilyParameters parameters;
  std::string target = "R";
  std::vector<std::size_t> indices;
  unsigned cap = kFamilyLengthCap;
  std::optional<std::uint64_t> prime;
  std::uint64_t seed = 0;
  std::optional<std::string> cache_dir;
};

/// Throws ArgumentError naming the offending field.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Command-line flag, then config file, then KLAB_PRIME, then the default.
std::uint64_t resolve_prime(std::optional<std::uint64_t> flag, std::optional<std::uint64_t> config,
                            const char* environment);

/// Target module by name: a family target, "R", "ideal(g1, ...)" or "quotient(g1, ...)".
ModulePresentation resolve_target(const std::string& spec, const RingSpec& ring,
                                  const FamilyInstance* family = nullptr);

/// Runs every (n, i) cell; per-cell failures are recorded in the row.
ExperimentReport run_experiment(const ExperimentConfig& config, ResultCache* cache = nullptr);

}  // namespace klab
