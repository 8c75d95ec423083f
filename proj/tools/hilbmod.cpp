// hilbmod: run one computation described by a config file and print a report.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hilbmod/cli/run.hpp"

namespace {

using namespace hilbmod;

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw cli::ConfigError("cannot open config file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Kernels, frames, metrics and curvature of submodules of weighted polydisc modules"};
    app.require_subcommand(1);

    std::string config_path;
    std::string output;
    unsigned trunc_degree = 0;
    unsigned ideal_degree = 0;
    std::string point;
    std::string alpha;

    for (const char* task : cli::kTasks) {
        auto* sub = app.add_subcommand(task, std::string("run the ") + task + " task");
        sub->add_option("--config", config_path, "config file");
        sub->add_option("--output", output, "report format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--trunc-degree", trunc_degree, "series truncation degree D");
        sub->add_option("--ideal-degree", ideal_degree, "ideal truncation degree N");
        sub->add_option("--point", point, "base point, e.g. \"(1/2, 0)\"");
        sub->add_option("--alpha", alpha, "curvature ratio for the cubic task");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cli::JobConfig job;
        if (!config_path.empty())
            job = cli::parse_config(read_file(config_path));
        const std::string task = app.get_subcommands().front()->get_name();
        if (!job.task.empty() && job.task != task)
            std::cerr << "note: config names task " << job.task << "; running " << task << "\n";
        job.task = task;
        if (!output.empty())
            job.output = output == "json" ? cli::OutputFormat::Json : cli::OutputFormat::Text;
        if (trunc_degree)
            job.trunc_degree = trunc_degree;
        if (ideal_degree)
            job.ideal_degree = ideal_degree;
        if (!point.empty())
            job.point = cli::parse_point(point);
        if (!alpha.empty())
            job.alpha = Rational::parse(alpha);

        const cli::Report report = cli::run(job);
        std::cout << (job.output == cli::OutputFormat::Json ? cli::to_json(report) : cli::to_text(report));
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::exit_code(e);
    }
}
