#pragma once

#include "jband/spectrum.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

namespace jband::cli {

enum ExitCode : int {
    kOk = 0,
    kParseError = 2,
    kValidationError = 3,
    kNumericalError = 4,
    kCheckFailed = 5,
    kIoError = 6,
};

enum class Format { Text, Json, Csv };

struct RunConfig {
    std::size_t num_samples = kDefaultSamples;
    std::optional<double> gap_tol;  // unset: 2 * pad
    bool use_certified = true;
    Format format = Format::Text;
    unsigned threads = 0;

    VerifyConfig verify_config() const;
};

/// Each command reads the operator file at `input`, writes its report to `out`
/// and diagnostics to `err`, and returns one of the ExitCode values.
int cmd_spectrum(const std::string& input, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bounds(const std::string& input, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bands(const std::string& input, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& input, const RunConfig& cfg, std::ostream& out, std::ostream& err);

struct ExampleParams {
    std::string kind;  // sharpness | schrodinger | random
    std::size_t m = 1;
    std::size_t p = 1;
    std::uint64_t seed = 0;
    double scale = 1.0;
};

/// Writes a canonical operator file for one of the built-in examples.
int cmd_example(const ExampleParams& params, std::ostream& out, std::ostream& err);

/// Full command line, including argument parsing. `--out PATH` redirects `out`
/// to a file; failures to open it give kIoError.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace jband::cli
