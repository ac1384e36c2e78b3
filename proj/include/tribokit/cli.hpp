#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tribokit/identities.hpp"
#include "tribokit/oeis.hpp"

namespace tribokit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;   // usage, domain, I/O and parse errors
inline constexpr int kExitFailed = 3;  // counterexamples or crosscheck mismatches

inline constexpr const char* kConfigEnvVar = "TRIBOKIT_CONFIG";

enum class OutputFormat { Plain, Json, Csv, BFile };

std::optional<OutputFormat> parse_format(std::string_view text);
std::string_view format_name(OutputFormat format);

struct CliConfig {
    VerifyRange default_range;  // n, m in [0, 100]
    int precision = 30;
    std::string fixture_dir;
    OutputFormat output_format = OutputFormat::Plain;
    std::string oeis_endpoint = "https://oeis.org";
};

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Applies "key = value" lines on top of `base`. '#' starts a comment.
/// Keys: precision, format, fixture_dir, oeis_endpoint, verify_n_min,
/// verify_n_max, verify_m_min, verify_m_max.
CliConfig parse_config(std::string_view text, CliConfig base);
CliConfig load_config_file(const std::string& path, CliConfig base);

/// What a CLI run may touch besides its arguments; tests substitute all of it.
struct Environment {
    std::ostream& out;
    std::ostream& err;
    std::function<std::optional<std::string>(const std::string&)> getenv;
    /// Overrides the live HTTP transport for `crosscheck --fetch`.
    oeis::Transport transport;
};

/// Runs one `tribokit` invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, Environment& env);

}  // namespace tribokit::cli
