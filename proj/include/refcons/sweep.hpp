// sweep.hpp — batch runs over reference sizes and their CSV / SVG output.

#pragma once

#include "refcons/protocol.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace refcons {

struct SweepConfig {
    std::vector<int> sizes{5, 10, 15, 20, 25, 30};
    int uses = 30;
    double theta = 0.0;
    std::optional<std::filesystem::path> csv_path;
    std::optional<std::filesystem::path> svg_asymmetry_path;
    std::optional<std::filesystem::path> svg_fidelity_path;

    /// Throws ConfigError naming the field.
    void validate() const;
};

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One series per size, in input order.
std::vector<DegradationSeries> run_sweep(const SweepConfig& config);

/// Fixed-point with 12 decimals; lowercase scientific with 12 significant
/// digits when 0 < |x| < 1e-4.
std::string format_real(double x);

inline constexpr const char* kCsvHeader =
    "N,mu,fidelity,asymmetry_bits,normalized_asymmetry,reference_entropy_bits";

/// Rows sorted by N then mu, LF line endings.
void write_csv(const std::vector<DegradationSeries>& series, std::ostream& out);
/// Throws OutputError on I/O failure.
void write_csv(const std::vector<DegradationSeries>& series, const std::filesystem::path& path);

enum class Metric { normalized_asymmetry, fidelity };

/// Standalone SVG, one polyline per reference size. Throws
/// std::invalid_argument for an empty series list.
std::string render_svg(const std::vector<DegradationSeries>& series, Metric metric);
void render_svg(const std::vector<DegradationSeries>& series, Metric metric,
                const std::filesystem::path& path);

} // namespace refcons
