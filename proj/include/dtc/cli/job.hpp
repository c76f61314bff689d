#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtc/diffmod/diff_module.hpp"

namespace dtc::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kCommands[] = {"prolong", "tensor", "dual", "verify", "hopf-check", "reconstruct-check",
                                            "group-point"};

struct JobOptions {
  // Truncation order; 2 covers derivatives on depth-2 objects.
  std::uint32_t order = 2;
  std::uint64_t seed = 0;
  std::size_t cap = 6;
  bool trivial = false;
  std::string format = "json";
  // GL_n size for hopf-check; defaults to the first module's dim, else 1.
  std::optional<std::size_t> n;
  // Group element for group-point, entries in the field.
  std::optional<RFMatrix> point;
  // Tree depth of derived objects for reconstruct-check and group-point.
  std::size_t depth = 2;
  // Seeded samples per property in reconstruct-check.
  std::size_t samples = 10;
};

struct NamedModule {
  std::string name;
  DiffModule module;
};

struct JobSpec {
  FieldPtr field;
  std::vector<NamedModule> modules;
  std::string command;
  JobOptions options;
};

// Throws Error on I/O failure, SchemaError naming the JSON path of the
// offending key, and ParseError naming the offending matrix entry.
JobSpec load_job(const std::filesystem::path& path);
JobSpec parse_job(const Json& document);

struct Report {
  Json body;
  bool passed = false;
};

// Throws Error (including DimensionCapExceeded and TruncationExhausted) when
// the job cannot be carried out.
Report run(const JobSpec& job);

// Byte-stable renderings.
std::string render(const Report& report, const std::string& format);

}  // namespace dtc::cli
