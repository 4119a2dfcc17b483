#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "galois_arrow/arrow.hpp"

namespace galois_arrow::cli {

enum class Command { FieldInfo, Plane, Conic, Pencil, Family, Arrow };
enum class OutputFormat { Json, Csv };

struct RunConfig {
  Command command = Command::Arrow;
  std::uint32_t p = 2;
  std::uint32_t n = 3;
  std::optional<Poly> modulus;
  /// Raw "a,b,c" text; elements are parsed once the field exists.
  std::optional<std::string> ideal_line;
  std::optional<std::string> tangent_line;
  ArrowMode mode = ArrowMode::Arc;
  OutputFormat output = OutputFormat::Json;
  bool exhaustive = false;
  /// Set when --help was requested; run() prints it and exits 0.
  std::optional<std::string> help;

  std::uint64_t q() const;
};

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitInternal = 3;

/// argv without the program name. Throws Error(UsageError).
RunConfig parse_args(const std::vector<std::string>& args);

/// Writes the report to out and a single-line JSON error to err.
/// Returns 0, 2 (invalid input) or 3 (internal invariant violation).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with error mapping.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace galois_arrow::cli
