// microres: validate, simulate and compare microgrid risk registers.
//
// Exit codes: 0 ok, 1 validation / document problem, 2 I/O, 3 engine error.

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "microres/intervention.hpp"
#include "microres/report.hpp"
#include "microres/scenario_io.hpp"
#include "microres/service.hpp"
#include "microres/sim_engine.hpp"

namespace {

using namespace microres;

enum ExitCode { kOk = 0, kValidation = 1, kIo = 2, kEngine = 3 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("error while reading '" + path + "'");
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content)) throw IoError("cannot write '" + path + "'");
}

struct SimFlags {
    std::uint64_t iterations = kDefaultIterations;
    std::uint64_t seed = 0;
    std::string aggregation = "threat_mean_of_means";
    std::string distribution = "uniform";
    std::uint32_t bins = kDefaultBins;
    unsigned threads = 0;

    void attach(CLI::App* app) {
        app->add_option("--iterations,-n", iterations, "Monte Carlo iterations")->check(CLI::PositiveNumber);
        app->add_option("--seed", seed, "Master seed");
        app->add_option("--aggregation", aggregation, "threat_mean_of_means | pair_mean | pair_sum");
        app->add_option("--distribution", distribution, "uniform | triangular_low_mode");
        app->add_option("--bins", bins, "Histogram bins")->check(CLI::PositiveNumber);
        app->add_option("--threads", threads, "Worker threads (0 = all cores)");
    }

    SimConfig config() const {
        SimConfig c;
        c.iterations = iterations;
        c.seed = seed;
        c.histogram_bins = bins;
        auto a = aggregation_from_name(aggregation);
        if (!a) throw DocumentError("--aggregation", "unknown aggregation '" + aggregation + "'");
        auto d = distribution_from_name(distribution);
        if (!d) throw DocumentError("--distribution", "unknown distribution '" + distribution + "'");
        c.aggregation = *a;
        c.distribution = *d;
        return c;
    }
};

void print_issues(const std::vector<ValidationIssue>& issues) {
    for (const auto& i : issues) std::cout << i.path << ": " << i.message << "\n";
}

// Maps exceptions to exit codes with a one-line message on stderr.
int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        print_issues(e.issues());
        return kValidation;
    } catch (const DocumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const PatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kEngine;
    }
}

Service* g_service = nullptr;

extern "C" void on_signal(int) {
    if (g_service != nullptr) g_service->stop();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo resilience scoring for microgrid risk registers"};
    app.require_subcommand(1);
    bool lenient = false;
    app.add_flag("--lenient", lenient, "Ignore unknown keys in input documents");

    std::string scenario_path;

    auto* validate = app.add_subcommand("validate", "Check a scenario document");
    validate->add_option("scenario", scenario_path, "Scenario JSON file")->required();

    SimFlags run_flags;
    std::string format = "text";
    std::string histogram_path;
    std::string histogram_of = "resilience";
    auto* run = app.add_subcommand("run", "Simulate a scenario and report its baseline");
    run->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    run_flags.attach(run);
    run->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    run->add_option("--histogram-csv", histogram_path, "Write a histogram as CSV");
    run->add_option("--histogram-of", histogram_of, "resilience | operational | infrastructural")
        ->check(CLI::IsMember({"resilience", "operational", "infrastructural"}));

    SimFlags cmp_flags;
    std::vector<std::string> patch_paths;
    bool with_builtin = false;
    auto* cmp = app.add_subcommand("compare", "Rank interventions against the baseline");
    cmp->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    cmp->add_option("--patch,-p", patch_paths, "Patch JSON file (repeatable)");
    cmp->add_flag("--builtin-patches", with_builtin, "Also compare the built-in interventions");
    cmp_flags.attach(cmp);
    cmp->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

    std::string host = "127.0.0.1";
    int port = 8080;
    unsigned serve_threads = 0;
    auto* serve = app.add_subcommand("serve", "Serve the JSON API for the what-if explorer");
    serve->add_option("scenario", scenario_path, "Initial scenario JSON file")->required();
    serve->add_option("--host", host, "Bind address");
    serve->add_option("--port", port, "Port (0 picks a free port)");
    serve->add_option("--threads", serve_threads, "Worker threads per simulation");

    std::string export_dir;
    auto* exp = app.add_subcommand("export-builtin", "Write the built-in scenario and patches as JSON");
    exp->add_option("directory", export_dir, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and --version exit 0; any other usage error is an invalid invocation.
        return app.exit(e) == 0 ? kOk : kValidation;
    }
    const ParseOptions parse_opts{lenient};

    auto load_scenario = [&] { return parse_scenario(read_file(scenario_path), parse_opts); };

    if (*validate) {
        return guarded([&] {
            const std::string text = read_file(scenario_path);
            try {
                (void)parse_scenario(text, parse_opts);
            } catch (const ValidationError& e) {
                print_issues(e.issues());
                return int{kValidation};
            }
            std::cout << "ok\n";
            return int{kOk};
        });
    }

    if (*run) {
        return guarded([&] {
            const Scenario s = load_scenario();
            const SimConfig cfg = run_flags.config();
            const RunReport r = run_scenario(s, cfg, {run_flags.threads});
            std::cout << (format == "json" ? run_report_json(r) : render_run_text(r));
            if (!histogram_path.empty()) {
                const Histogram& h = histogram_of == "operational"       ? r.operational.aggregate.histogram
                                     : histogram_of == "infrastructural" ? r.infrastructural.aggregate.histogram
                                                                         : r.resilience.histogram;
                write_file(histogram_path, histogram_csv(h));
            }
            return int{kOk};
        });
    }

    if (*cmp) {
        return guarded([&] {
            const Scenario s = load_scenario();
            std::vector<InterventionPatch> patches;
            for (const auto& p : patch_paths) patches.push_back(parse_patch(read_file(p), s, parse_opts));
            if (with_builtin) {
                patches.push_back(builtin_underground_distribution());
                patches.push_back(builtin_harden_generation());
            }
            const ComparisonReport c = compare(s, patches, cmp_flags.config(), {cmp_flags.threads});
            std::cout << (format == "json" ? comparison_json(c) : render_comparison_text(c));
            return int{kOk};
        });
    }

    if (*serve) {
        return guarded([&] {
            ServiceOptions opts;
            opts.workers = serve_threads;
            Service service(load_scenario(), opts);
            int bound = 0;
            try {
                bound = service.bind(host, port);
            } catch (const Error& e) {
                throw IoError(e.what());
            }
            g_service = &service;
            std::signal(SIGINT, on_signal);
            std::signal(SIGTERM, on_signal);
            std::cout << "listening on http://" << host << ":" << bound << std::endl;
            service.listen();
            g_service = nullptr;
            return int{kOk};
        });
    }

    if (*exp) {
        return guarded([&] {
            namespace fs = std::filesystem;
            std::error_code ec;
            fs::create_directories(fs::path(export_dir) / "patches", ec);
            if (ec) throw IoError("cannot create '" + export_dir + "': " + ec.message());
            write_file((fs::path(export_dir) / "new_england.json").string(), serialize_scenario(builtin_new_england()));
            for (const auto& p : {builtin_underground_distribution(), builtin_harden_generation()}) {
                write_file((fs::path(export_dir) / "patches" / (p.name + ".json")).string(), serialize_patch(p));
            }
            return int{kOk};
        });
    }
    return kOk;
}
