#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fincat/cli/model.hpp"
#include "fincat/cli/report.hpp"

namespace fincat::cli {

/// Default bound on test-set sizes.
inline constexpr std::size_t default_set_bound = 3;
/// Default bound on functor-category shapes (Kan checks, sampled functors).
inline constexpr std::size_t default_shape_bound = 2;

struct CommandOptions {
  std::string of, along, left, right, with, kind, at;
  std::size_t bound = default_set_bound;
  std::optional<std::size_t> shape_bound;
  bool tables = false;
  bool scan = false;
  std::size_t max_objects = 3;
  std::size_t max_morphisms = 8;
  /// Positional arguments that are not files (builtin scenario names).
  std::vector<std::string> names;

  std::size_t shape() const { return shape_bound.value_or(default_shape_bound); }
};

struct CommandEntry {
  std::string group;  // validate, construct, check, universe
  std::string name;   // empty for validate
  std::string summary;
  /// Library operations this entry reaches.
  std::vector<std::string> operations;
  /// Argument lists (after the subcommand) that together reach every listed
  /// operation on the bundled corpus. Paths are relative to `corpus/`.
  std::vector<std::vector<std::string>> samples;
  std::function<Report(const Model&, const CommandOptions&)> run;
};

const std::vector<CommandEntry>& dispatch_table();

/// Throws SpecError for unknown selectors and fincat::Error for inputs the
/// library rejects.
Report run_command(const std::string& group, const std::string& name, const Model& model,
                   const CommandOptions& options);

}  // namespace fincat::cli
