#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "graph_document.hpp"
#include "report.hpp"

namespace rph::cli {

enum class Command { Validate, Routes, Simplex, Robust, Chains, VerifyComplex, SpCheck, Braess, Compose, Analyze };
enum class ComposeOp { Series, Parallel };

struct Options {
  BuildMode mode = BuildMode::Strict;
  std::size_t route_cap = kDefaultRouteCap;
  InputFormat format = InputFormat::Json;
  TriangleSemantics semantics = TriangleSemantics::Literal;
};

struct Request {
  Command command = Command::Analyze;
  Options options;
  std::size_t p = 2;                 // robust
  std::optional<std::size_t> p_max;  // chains, verify-complex, analyze
  ComposeOp op = ComposeOp::Series;  // compose
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitInvariant = 2;

struct RunResult {
  Json report;
  int exit_code = kExitOk;
};

std::string_view command_name(Command command);

// Runs one pipeline slice. Never throws for library errors: they become an
// "error" entry in the report plus the matching exit code. `second` is the
// right operand of compose and ignored otherwise.
RunResult run(const Request& request, const GraphDocument& document, const GraphDocument* second = nullptr);

// Full command-line entry point; writes the JSON report to `out` and
// diagnostics to `err`, returns the process exit code.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rph::cli
