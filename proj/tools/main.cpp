#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "vjw/commands.hpp"
#include "vjw/error.hpp"

namespace {

using vjw::ConfigError;

// "--at mu1=-2" fragments into the specialization map.
std::map<std::string, long> parse_assignments(const std::vector<std::string>& args) {
    std::map<std::string, long> out;
    for (const auto& arg : args) {
        auto eq = arg.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ConfigError("expected name=integer in --at, got: " + arg);
        std::string name = arg.substr(0, eq);
        long value = 0;
        try {
            size_t used = 0;
            value = std::stol(arg.substr(eq + 1), &used);
            if (used != arg.size() - eq - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ConfigError("expected integer value in --at, got: " + arg);
        }
        if (!out.emplace(name, value).second)
            throw ConfigError("duplicate assignment in --at: " + name);
    }
    return out;
}

void emit(const vjw::ResultDocument& doc) {
    std::string text = doc.serialize();
    if (doc.config.output_path) {
        std::ofstream out(*doc.config.output_path);
        if (!out) throw vjw::IoError("cannot open " + *doc.config.output_path);
        out << text;
        out.flush();
        if (!out.good()) throw vjw::IoError("cannot write " + *doc.config.output_path);
    } else {
        std::cout << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact extended Jones-Wenzl projectors on Verma-module tensor products"};
    app.require_subcommand(1);

    vjw::JobConfig config;
    std::vector<std::string> weights, checks, at_args;
    std::string out_path, in_path;
    bool timing = false;
    int max_n = 8;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "Write the result document here instead of stdout");
        cmd->add_flag("--timing", timing, "Report wall-clock time on stderr");
    };

    CLI::App* compute = app.add_subcommand(
        "compute", "Compute the projector blocks for the given weights");
    compute->add_option("--weights", weights, "Ordered weight symbol names, e.g. mu1,mu2")
        ->delimiter(',')
        ->required();
    compute->add_option("--max-degree", config.max_degree, "Degree cutoff D")->required();
    compute->add_option("--at", at_args, "Specialize: name=integer, comma separated")
        ->delimiter(',');
    add_common(compute);

    CLI::App* verify = app.add_subcommand("verify", "Run exact verification suites");
    verify->add_option("--weights", weights, "Ordered weight symbol names")->delimiter(',');
    verify->add_option("--max-degree", config.max_degree, "Degree cutoff D")->required();
    verify
        ->add_option("--checks", checks,
                     "Subset of idempotent,intertwiner,ef_identity,oracle,pascal,"
                     "relations,coassoc (default: all that apply)")
        ->delimiter(',');
    verify->add_option("--at", at_args, "Unsupported here; verification is symbolic")
        ->delimiter(',');
    add_common(verify);

    CLI::App* tl = app.add_subcommand(
        "tl", "Compute the classical Jones-Wenzl projector on V1 tensor powers");
    tl->add_option("--n", config.tl_n, "Number of tensor factors")->required();
    tl->add_option("--max-n", max_n, "Resource guard for n (default 8)");
    add_common(tl);

    CLI::App* specialize = app.add_subcommand(
        "specialize", "Specialize the weights of a previously computed document");
    specialize->add_option("--in", in_path, "Input result document")->required();
    specialize->add_option("--at", at_args, "name=integer for every weight, comma separated")
        ->delimiter(',')
        ->required();
    add_common(specialize);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return vjw::kExitConfig;
    }

    try {
        config.weight_names = weights;
        config.checks = std::set<std::string>(checks.begin(), checks.end());
        config.specialization = parse_assignments(at_args);
        if (!out_path.empty()) config.output_path = out_path;
        if (!in_path.empty()) config.input_path = in_path;

        auto started = std::chrono::steady_clock::now();
        vjw::ResultDocument doc;
        if (compute->parsed()) {
            config.command = "compute";
            doc = vjw::cmd_compute(config);
        } else if (verify->parsed()) {
            config.command = "verify";
            doc = vjw::cmd_verify(config);
        } else if (tl->parsed()) {
            config.command = "tl";
            doc = vjw::cmd_tl(config, max_n);
        } else {
            config.command = "specialize";
            doc = vjw::cmd_specialize(config);
        }
        if (timing) {
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - started)
                               .count();
            std::cerr << config.command << " took " << elapsed << " ms\n";
        }
        emit(doc);
        int code = vjw::exit_code_for(doc);
        if (code != vjw::kExitOk)
            std::cerr << doc.violations.size() << " check violation(s); see the document\n";
        return code;
    } catch (const vjw::PoleError& e) {
        std::cerr << "pole: " << e.what() << "\n";
        return vjw::kExitPole;
    } catch (const vjw::DivisionByZeroError& e) {
        std::cerr << "pole: " << e.what() << "\n";
        return vjw::kExitPole;
    } catch (const vjw::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return vjw::kExitConfig;
    } catch (const vjw::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return vjw::kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return vjw::kExitInternal;
    }
}
