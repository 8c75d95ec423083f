#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hilbmod/cli/config.hpp"

namespace hilbmod::cli {

struct Float {
    double value = 0;
    double precision = 0; // stated accuracy; 0 when not applicable

    friend bool operator==(const Float&, const Float&) = default;
};

struct Result {
    using Value = std::variant<Rational, Float, bool, std::string>;

    std::string name;
    Value value;
    std::string units;

    friend bool operator==(const Result&, const Result&) = default;
};

struct Report {
    std::vector<std::pair<std::string, std::string>> input; // echo, in file order
    std::string task;
    std::vector<Result> results;
    std::vector<std::string> diagnostics;
    std::vector<std::pair<std::string, std::string>> convention;

    void add(std::string name, Result::Value value, std::string units = "");
    /// First result with this name; throws InputError when absent.
    const Result& find(const std::string& name) const;

    friend bool operator==(const Report&, const Report&) = default;
};

std::string to_text(const Report& r);
std::string to_json(const Report& r);
/// Inverse of to_json. Throws ConfigError on malformed input.
Report from_json(const std::string& text);

} // namespace hilbmod::cli
