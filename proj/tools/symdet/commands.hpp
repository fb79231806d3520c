#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

#include "render.hpp"

namespace symdet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kTableLimit = 9;
inline constexpr int kRefinedLimit = 7;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Throws UsageError for malformed partitions.
Partition parse_shape_arg(const std::string& text);
Format parse_format(const std::string& text);

int cmd_sym(const std::string& shape, Format format, unsigned jobs, std::ostream& out);
int cmd_table(int n_max, Format format, unsigned jobs, std::ostream& out);
int cmd_refined(const std::string& shape, Format format, unsigned jobs, std::ostream& out);
/// scope: sym, refined or all. An empty path selects the embedded tables.
int cmd_verify(const std::string& scope, const std::string& golden_path, Format format, unsigned jobs, std::ostream& out);

/// Whole command line, returning the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symdet::cli
