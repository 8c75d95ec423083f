#include "hilbmod/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace hilbmod::cli {

namespace {

std::string located(const std::string& what, std::size_t line, std::size_t column)
{
    if (line == 0)
        return what;
    std::ostringstream os;
    os << "line " << line << ", column " << column << ": " << what;
    return os.str();
}

bool is_space(char c)
{
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

// A piece of the input with its 1-based column in the line.
struct Token {
    std::string_view text;
    std::size_t column = 1;
};

Token trim(Token t)
{
    while (!t.text.empty() && is_space(t.text.front())) {
        t.text.remove_prefix(1);
        ++t.column;
    }
    while (!t.text.empty() && is_space(t.text.back()))
        t.text.remove_suffix(1);
    return t;
}

std::string_view strip_comment(std::string_view line)
{
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"')
            quoted = !quoted;
        else if (line[i] == '#' && !quoted)
            return line.substr(0, i);
    }
    return line;
}

// Splits the inside of [...] or (...) on commas; entries may be quoted.
std::vector<Token> split_list(Token body, std::size_t line)
{
    std::vector<Token> out;
    if (trim(body).text.empty())
        return out;
    std::size_t start = 0;
    bool quoted = false;
    for (std::size_t i = 0; i <= body.text.size(); ++i) {
        if (i < body.text.size() && body.text[i] == '"')
            quoted = !quoted;
        if (i == body.text.size() || (body.text[i] == ',' && !quoted)) {
            Token item = trim({body.text.substr(start, i - start), body.column + start});
            if (item.text.size() >= 2 && item.text.front() == '"' && item.text.back() == '"') {
                item.text = item.text.substr(1, item.text.size() - 2);
                ++item.column;
            } else if (!item.text.empty() && (item.text.front() == '"' || item.text.back() == '"')) {
                throw ConfigError("unbalanced quote", line, item.column);
            }
            if (item.text.empty())
                throw ConfigError("empty list entry", line, body.column + start);
            out.push_back(item);
            start = i + 1;
        }
    }
    if (quoted)
        throw ConfigError("unbalanced quote", line, body.column);
    return out;
}

// A list value: ["a", "b"], (a, b) or a bare comma-separated list.
std::vector<Token> list_value(Token value, std::size_t line)
{
    value = trim(value);
    if (value.text.empty())
        throw ConfigError("missing value", line, value.column);
    const char open = value.text.front();
    if (open == '[' || open == '(') {
        const char close = open == '[' ? ']' : ')';
        if (value.text.back() != close)
            throw ConfigError(std::string("expected '") + close + "'", line, value.column + value.text.size());
        return split_list({value.text.substr(1, value.text.size() - 2), value.column + 1}, line);
    }
    return split_list(value, line);
}

std::string scalar_value(Token value, std::size_t line)
{
    auto items = list_value(value, line);
    if (items.size() != 1)
        throw ConfigError("expected a single value", line, trim(value).column);
    return std::string(items.front().text);
}

Rational rational_at(const Token& t, std::size_t line)
{
    try {
        return Rational::parse(t.text);
    } catch (const InputError&) {
        throw ConfigError("not a rational number: '" + std::string(t.text) + "'", line, t.column);
    }
}

std::vector<Rational> rationals(Token value, std::size_t line)
{
    std::vector<Rational> out;
    for (const auto& t : list_value(value, line))
        out.push_back(rational_at(t, line));
    return out;
}

unsigned degree_value(Token value, std::size_t line, const std::string& key)
{
    const auto items = list_value(value, line);
    if (items.size() != 1)
        throw ConfigError(key + " must be a single integer", line, trim(value).column);
    const Rational r = rational_at(items.front(), line);
    if (!r.is_integer() || r.sign() < 0 || r > Rational(1000))
        throw ConfigError(key + " must be an integer between 0 and 1000", line, items.front().column);
    return static_cast<unsigned>(r.num().get_ui());
}

void check_weights(const std::vector<Rational>& w, const std::string& field, std::size_t line, std::size_t column)
{
    if (w.empty())
        throw ConfigError(field + " must not be empty", line, column);
    for (const auto& x : w)
        if (x.sign() <= 0)
            throw ConfigError(field + " must be positive", line, column);
}

void check_inside(const std::vector<Rational>& p, const std::string& field, std::size_t line, std::size_t column)
{
    for (const auto& x : p)
        if (x.abs() >= Rational(1)) {
            std::string shown;
            for (const auto& y : p)
                shown += (shown.empty() ? "" : ", ") + y.str();
            throw ConfigError(field + " (" + shown + ") is not strictly inside the unit polydisc (boundary point)",
                              line, column);
        }
}

// Home section of each key. Keys written before any section are accepted as
// long as they are known; "ideal" and "task" double as short names.
const std::map<std::string, std::string, std::less<>>& key_sections()
{
    static const std::map<std::string, std::string, std::less<>> keys = {
        {"weights", "module"},         {"dimension", "module"},    {"generators", "ideal"},
        {"family", "ideal"},           {"name", "task"},           {"point", "task"},
        {"second_point", "task"},      {"trunc_degree", "task"},   {"ideal_degree", "task"},
        {"compare_weights", "task"},   {"alpha", "task"},          {"output", "task"},
    };
    return keys;
}

} // namespace

ConfigError::ConfigError(const std::string& what, std::size_t line, std::size_t column)
    : InputError(located(what, line, column)), line_(line), column_(column)
{
}

bool is_task(std::string_view name)
{
    return std::find(std::begin(kTasks), std::end(kTasks), name) != std::end(kTasks);
}

std::vector<Rational> parse_point(std::string_view text)
{
    auto out = rationals({text, 1}, 0);
    if (out.empty())
        throw ConfigError("empty point");
    return out;
}

JobConfig parse_config(std::string_view text)
{
    JobConfig job;
    job.task.clear();
    std::optional<std::size_t> declared_dim;
    std::size_t dim_line = 0;
    std::string section;
    std::map<std::string, std::size_t, std::less<>> seen;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!raw.empty() && raw.back() == '\r')
            raw.remove_suffix(1);
        const Token line = trim({strip_comment(raw), 1});
        if (line.text.empty()) {
            if (end == text.size())
                break;
            continue;
        }

        if (line.text.front() == '[' && line.text.find('=') == std::string_view::npos) {
            if (line.text.back() != ']')
                throw ConfigError("expected ']' after section name", line_no, line.column + line.text.size());
            const Token name = trim({line.text.substr(1, line.text.size() - 2), line.column + 1});
            if (name.text != "module" && name.text != "ideal" && name.text != "task")
                throw ConfigError("unknown section '" + std::string(name.text) + "'", line_no, name.column);
            section = std::string(name.text);
            continue;
        }

        const std::size_t eq = line.text.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("expected key = value", line_no, line.column);
        const Token key = trim({line.text.substr(0, eq), line.column});
        const Token value = trim({line.text.substr(eq + 1), line.column + eq + 1});
        if (key.text.empty())
            throw ConfigError("missing key before '='", line_no, line.column);

        std::string name(key.text);
        if (name == "ideal")
            name = "generators";
        else if (name == "task")
            name = "name";
        const auto home = key_sections().find(name);
        if (home == key_sections().end())
            throw ConfigError("unknown key '" + std::string(key.text) + "'", line_no, key.column);
        if (!section.empty() && home->second != section)
            throw ConfigError("key '" + std::string(key.text) + "' belongs in [" + home->second + "]", line_no,
                              key.column);
        if (auto [it, fresh] = seen.emplace(name, line_no); !fresh)
            throw ConfigError("duplicate key '" + name + "' (first set on line " + std::to_string(it->second) + ")",
                              line_no, key.column);

        if (name == "weights") {
            job.weights = rationals(value, line_no);
            check_weights(job.weights, "weights", line_no, value.column);
        } else if (name == "dimension") {
            declared_dim = degree_value(value, line_no, "dimension");
            dim_line = line_no;
        } else if (name == "generators") {
            for (const auto& t : list_value(value, line_no))
                job.generators.emplace_back(t.text);
        } else if (name == "family") {
            job.family = scalar_value(value, line_no);
        } else if (name == "name") {
            job.task = scalar_value(value, line_no);
            if (!is_task(job.task))
                throw ConfigError("unknown task '" + job.task + "'", line_no, value.column);
        } else if (name == "point" || name == "second_point") {
            auto p = rationals(value, line_no);
            if (p.empty())
                throw ConfigError(name + " must not be empty", line_no, value.column);
            check_inside(p, name, line_no, value.column);
            (name == "point" ? job.point : job.second_point) = std::move(p);
        } else if (name == "trunc_degree") {
            job.trunc_degree = degree_value(value, line_no, name);
        } else if (name == "ideal_degree") {
            job.ideal_degree = degree_value(value, line_no, name);
        } else if (name == "compare_weights") {
            job.compare_weights = rationals(value, line_no);
            check_weights(*job.compare_weights, "compare_weights", line_no, value.column);
        } else if (name == "alpha") {
            const auto items = list_value(value, line_no);
            if (items.size() != 1)
                throw ConfigError("alpha must be a single rational", line_no, value.column);
            job.alpha = rational_at(items.front(), line_no);
        } else if (name == "output") {
            const std::string v = scalar_value(value, line_no);
            if (v == "text")
                job.output = OutputFormat::Text;
            else if (v == "json" || v == "machine")
                job.output = OutputFormat::Json;
            else
                throw ConfigError("output must be text or json", line_no, value.column);
        }
        if (end == text.size())
            break;
    }

    if (declared_dim && !job.weights.empty() && *declared_dim != job.weights.size())
        throw ConfigError("dimension " + std::to_string(*declared_dim) + " does not match " +
                              std::to_string(job.weights.size()) + " weights",
                          dim_line, 1);
    if (declared_dim && job.weights.empty())
        job.weights.assign(*declared_dim, Rational(1));
    return job;
}

void validate(const JobConfig& job)
{
    if (!is_task(job.task))
        throw ConfigError(job.task.empty() ? "no task given" : "unknown task '" + job.task + "'");
    if (job.task == "cubic") {
        if (!job.alpha)
            throw ConfigError("task cubic needs alpha");
        if (job.alpha->sign() <= 0)
            throw ConfigError("alpha must be positive");
        return;
    }
    if (job.weights.empty())
        throw ConfigError("task " + job.task + " needs weights");
    check_weights(job.weights, "weights", 0, 0);
    const std::size_t m = job.weights.size();
    auto check_point = [&](const std::optional<std::vector<Rational>>& p, const std::string& field) {
        if (!p)
            return;
        if (p->size() != m)
            throw ConfigError(field + " has " + std::to_string(p->size()) + " coordinates, expected " +
                              std::to_string(m));
        check_inside(*p, field, 0, 0);
    };
    check_point(job.point, "point");
    check_point(job.second_point, "second_point");
    if (job.task == "kernel" && !job.point)
        throw ConfigError("task kernel needs point");
    if (job.task != "kernel" && job.generators.empty())
        throw ConfigError("task " + job.task + " needs generators");
    if (job.task == "compare") {
        if (!job.compare_weights)
            throw ConfigError("task compare needs compare_weights");
        check_weights(*job.compare_weights, "compare_weights", 0, 0);
        if (job.compare_weights->size() != m)
            throw ConfigError("compare_weights must have " + std::to_string(m) + " entries");
    }
}

} // namespace hilbmod::cli
