#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "cfr/core.hpp"
#include "cfr/instance_gen.hpp"
#include "cfr/nominal_plan.hpp"

namespace cfr {

/// Malformed or unreadable input file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Contents of an instance file.
///
/// JSON object, 0-based vehicle indices:
///
///   n                    int, required
///   arcs                 [{"from", "to", "slack"}], required
///   deviations           [number] of length n, required
///   weights              [number], optional
///   completion_times     [number], optional
///   due_dates            [number], optional
///   anticipation_bounds  [number], optional
///   alpha, beta          number, optional (default 1000 and 1)
///   nominal_plan         [[{"resource", "entry", "exit"}]], optional,
///                        one list per vehicle
///   generator            {"seed", "p", "algorithm"}, optional
///
/// Any other key, at any level, is rejected.
struct InstanceFile {
  RecoveryInstance instance;
  std::optional<NominalPlan> nominal_plan;
  std::optional<GeneratorInfo> generator;
};

InstanceFile parse_instance(const std::string& text);
std::string dump_instance(const InstanceFile& file);

InstanceFile read_instance_file(const std::filesystem::path& path);
void write_instance_file(const std::filesystem::path& path, const InstanceFile& file);

/// Solution file: {"objective", "mode", "u", "x", "delta", "lateness"?,
/// "z", "z_prime"?}.
std::string dump_plan(const RecoveryPlan& plan);
RecoveryPlan parse_plan(const std::string& text);

RecoveryPlan read_plan_file(const std::filesystem::path& path);
void write_plan_file(const std::filesystem::path& path, const RecoveryPlan& plan);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace cfr
