#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hilbmod/algebra/errors.hpp"
#include "hilbmod/algebra/rational.hpp"

namespace hilbmod::cli {

/// Malformed or out-of-domain configuration. line/column are 1-based; 0
/// when the problem is not tied to a position.
class ConfigError : public InputError {
public:
    ConfigError(const std::string& what, std::size_t line = 0, std::size_t column = 0);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

inline constexpr const char* kTasks[] = {"kernel", "decompose", "metric", "curvature", "dimension", "compare", "cubic"};

bool is_task(std::string_view name);

enum class OutputFormat { Text, Json };

/// A parsed job. Rationals keep the exact values written in the file.
struct JobConfig {
    std::vector<Rational> weights;
    std::vector<std::string> generators;
    std::optional<std::string> family; // optional tag, checked against the classification
    std::string task;
    std::optional<std::vector<Rational>> point;
    std::optional<std::vector<Rational>> second_point;
    unsigned trunc_degree = 6;
    unsigned ideal_degree = 6;
    std::optional<std::vector<Rational>> compare_weights;
    std::optional<Rational> alpha;
    OutputFormat output = OutputFormat::Text;
};

/// Parses the sectioned key = value format:
///
///     [module]
///     weights = ["1", "3/2"]
///     [ideal]
///     generators = ["z1*z2", "z1 - z2"]
///     [task]
///     name = dimension
///     point = (0, 0)
///
/// Lists may be quoted or bare; '#' starts a comment. Throws ConfigError with
/// the line and column of the offending text.
JobConfig parse_config(std::string_view text);

/// Domain checks that need the whole job: positive weights, points inside the
/// polydisc with the right dimension, the fields the task needs. Throws
/// ConfigError naming the field.
void validate(const JobConfig& job);

/// "(1/2, -1/3)" -> {1/2, -1/3}. Throws ConfigError.
std::vector<Rational> parse_point(std::string_view text);

} // namespace hilbmod::cli
