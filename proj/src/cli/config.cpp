#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "tribokit/analytic.hpp"
#include "tribokit/cli.hpp"

namespace tribokit::cli {

std::optional<OutputFormat> parse_format(std::string_view text) {
    if (text == "plain") return OutputFormat::Plain;
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    if (text == "bfile") return OutputFormat::BFile;
    return std::nullopt;
}

std::string_view format_name(OutputFormat format) {
    switch (format) {
        case OutputFormat::Plain: return "plain";
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
        case OutputFormat::BFile: return "bfile";
    }
    return "?";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

template <typename Int>
Int parse_int(std::string_view key, std::string_view value, std::size_t line) {
    Int out{};
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ConfigError("config line " + std::to_string(line) + ": " + std::string(key) +
                          " expects an integer, got \"" + std::string(value) + "\"");
    }
    return out;
}

}  // namespace

CliConfig parse_config(std::string_view text, CliConfig cfg) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));

        if (key == "precision") {
            cfg.precision = parse_int<int>(key, value, line_no);
        } else if (key == "format") {
            const auto f = parse_format(value);
            if (!f) throw ConfigError("config line " + std::to_string(line_no) + ": unknown format");
            cfg.output_format = *f;
        } else if (key == "fixture_dir") {
            cfg.fixture_dir = std::string(value);
        } else if (key == "oeis_endpoint") {
            cfg.oeis_endpoint = std::string(value);
        } else if (key == "verify_n_min") {
            cfg.default_range.n.lo = parse_int<Index>(key, value, line_no);
        } else if (key == "verify_n_max") {
            cfg.default_range.n.hi = parse_int<Index>(key, value, line_no);
        } else if (key == "verify_m_min") {
            cfg.default_range.m.lo = parse_int<Index>(key, value, line_no);
        } else if (key == "verify_m_max") {
            cfg.default_range.m.hi = parse_int<Index>(key, value, line_no);
        } else {
            throw ConfigError("config line " + std::to_string(line_no) + ": unknown key \"" +
                              std::string(key) + "\"");
        }
    }
    if (cfg.precision < kMinPrecision) {
        throw ConfigError("config: precision must be at least " + std::to_string(kMinPrecision));
    }
    if (cfg.default_range.n.lo > cfg.default_range.n.hi ||
        cfg.default_range.m.lo > cfg.default_range.m.hi) {
        throw ConfigError("config: verify range has min > max");
    }
    return cfg;
}

CliConfig load_config_file(const std::string& path, CliConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), std::move(base));
}

}  // namespace tribokit::cli
