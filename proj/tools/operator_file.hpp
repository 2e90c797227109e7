#pragma once

#include "jband/periodic_operator.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jband::cli {

/// Malformed operator file. The message names the offending field and index.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operator file schema:
///
///   { "p": 2, "m": 1,
///     "a": [ [[1.0]], [[[0.0, 2.0]]] ],
///     "b": [ [[0.0]], [[0.5]] ] }
///
/// Each matrix is a list of rows; each entry is a real number or an [re, im] pair.
/// The parsed operator is not validated (Hermiticity, block shapes); call validate().
PeriodicJacobiOperator parse_operator(std::string_view text);
PeriodicJacobiOperator read_operator_file(const std::filesystem::path& path);

/// Canonical JSON text: bare reals where the imaginary part is zero, full
/// round-trip precision, one matrix per line, trailing newline.
std::string format_operator(const PeriodicJacobiOperator& op);
void write_operator_file(const std::filesystem::path& path, const PeriodicJacobiOperator& op);

} // namespace jband::cli
