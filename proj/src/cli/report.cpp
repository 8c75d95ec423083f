#include "hilbmod/cli/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace hilbmod::cli {

using nlohmann::ordered_json;

void Report::add(std::string name, Result::Value value, std::string units)
{
    results.push_back({std::move(name), std::move(value), std::move(units)});
}

const Result& Report::find(const std::string& name) const
{
    for (const auto& r : results)
        if (r.name == name)
            return r;
    throw InputError("no result named '" + name + "'");
}

namespace {

std::string render(const Result::Value& v)
{
    struct Visitor {
        std::string operator()(const Rational& r) const { return r.str(); }
        std::string operator()(const Float& f) const
        {
            std::ostringstream os;
            os << std::setprecision(17) << f.value;
            if (f.precision > 0)
                os << " (+/- " << std::setprecision(2) << f.precision << ")";
            return os.str();
        }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{}, v);
}

ordered_json value_json(const Result::Value& v)
{
    struct Visitor {
        ordered_json operator()(const Rational& r) const
        {
            return ordered_json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
        }
        ordered_json operator()(const Float& f) const
        {
            return ordered_json{{"float", f.value}, {"precision", f.precision}};
        }
        ordered_json operator()(bool b) const { return b; }
        ordered_json operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{}, v);
}

Result::Value value_from_json(const ordered_json& j)
{
    if (j.is_boolean())
        return j.get<bool>();
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_object() && j.contains("num") && j.contains("den"))
        return Rational(mpz_class(j.at("num").get<std::string>()), mpz_class(j.at("den").get<std::string>()));
    if (j.is_object() && j.contains("float"))
        return Float{j.at("float").get<double>(), j.value("precision", 0.0)};
    throw ConfigError("unrecognised result value: " + j.dump());
}

std::vector<std::pair<std::string, std::string>> pairs_from_json(const ordered_json& j)
{
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [k, v] : j.items())
        out.emplace_back(k, v.get<std::string>());
    return out;
}

} // namespace

std::string to_text(const Report& r)
{
    std::ostringstream os;
    os << "task: " << r.task << "\n";
    os << "input:\n";
    for (const auto& [k, v] : r.input)
        os << "  " << k << " = " << v << "\n";
    os << "results:\n";
    for (const auto& res : r.results) {
        os << "  " << res.name << " = " << render(res.value);
        if (!res.units.empty())
            os << " [" << res.units << "]";
        os << "\n";
    }
    if (!r.diagnostics.empty()) {
        os << "diagnostics:\n";
        for (const auto& d : r.diagnostics)
            os << "  - " << d << "\n";
    }
    if (!r.convention.empty()) {
        os << "convention:\n";
        for (const auto& [k, v] : r.convention)
            os << "  " << k << ": " << v << "\n";
    }
    return os.str();
}

std::string to_json(const Report& r)
{
    ordered_json j;
    j["input"] = ordered_json::object();
    for (const auto& [k, v] : r.input)
        j["input"][k] = v;
    j["task"] = r.task;
    j["results"] = ordered_json::array();
    for (const auto& res : r.results)
        j["results"].push_back({{"name", res.name}, {"value", value_json(res.value)}, {"units", res.units}});
    j["diagnostics"] = r.diagnostics;
    j["convention"] = ordered_json::object();
    for (const auto& [k, v] : r.convention)
        j["convention"][k] = v;
    return j.dump(2) + "\n";
}

Report from_json(const std::string& text)
{
    try {
        const auto j = ordered_json::parse(text);
        Report r;
        r.input = pairs_from_json(j.at("input"));
        r.task = j.at("task").get<std::string>();
        for (const auto& res : j.at("results"))
            r.results.push_back(
                {res.at("name").get<std::string>(), value_from_json(res.at("value")), res.value("units", "")});
        r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
        r.convention = pairs_from_json(j.at("convention"));
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed report: ") + e.what());
    }
}

} // namespace hilbmod::cli
