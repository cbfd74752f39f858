#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace nvc {

/// FNV-1a over raw bytes; used for content fingerprints.
std::uint64_t fnv1a64(std::string_view bytes);

std::string to_hex(std::uint64_t value);

/// Formats a double with 17 significant digits (round-trip exact for 64-bit values).
std::string format17(double value);

std::string_view trim(std::string_view text);

std::vector<std::string_view> split(std::string_view text, char separator);

/// Splits on runs of spaces/tabs, dropping empty pieces.
std::vector<std::string_view> split_whitespace(std::string_view text);

/// Strict full-string parses; return false on trailing garbage or range errors.
bool parse_int64(std::string_view text, std::int64_t& out);
bool parse_double(std::string_view text, double& out);

std::string read_file(const std::filesystem::path& path);

/// Writes via a temporary sibling and renames, so the target is never partial.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string iso8601_utc(std::chrono::system_clock::time_point when);

/// Deterministic random source. The mt19937_64 stream is pinned by the
/// standard; the distributions here are hand-rolled because the std ones
/// are implementation-defined and would break cross-platform reproducibility.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1), 53 random bits.
    double uniform01();

    double uniform(double lo, double hi);

    /// Standard normal via Box-Muller; one spare value is cached.
    double gaussian();

    /// Unbiased integer in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n);

    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(values[i - 1], values[j]);
        }
    }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

enum class LogLevel { error = 0, info = 1, debug = 2 };

/// Level comes from NVC_LOG={error,info,debug}; defaults to info.
LogLevel log_level();
void log_error(const std::string& message);
void log_info(const std::string& message);
void log_debug(const std::string& message);

}  // namespace nvc
