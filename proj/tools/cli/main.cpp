#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"

using namespace qtel;
using namespace qtel::cli;

namespace {

struct CommonOptions {
    std::string noise = "depolarizing";
    std::string alpha;
    std::string beta;
    std::string states;
    double p_start = 0.0;
    double p_end = 1.0;
    std::size_t steps = 101;
    std::string out;
    bool normalize = false;
    std::vector<std::string> columns;
};

void add_sweep_options(CLI::App *cmd, CommonOptions &opt) {
    cmd->add_option("--noise", opt.noise, "depolarizing, bitflip or phaseflip")->capture_default_str();
    cmd->add_option("--alpha", opt.alpha, "amplitude of |0>, e.g. 0.6 or 0.6+0.8i");
    cmd->add_option("--beta", opt.beta, "amplitude of |1>");
    cmd->add_option("--states", opt.states, "comma-separated alpha:beta pairs");
    cmd->add_option("--p-start", opt.p_start)->capture_default_str();
    cmd->add_option("--p-end", opt.p_end)->capture_default_str();
    cmd->add_option("--steps", opt.steps)->capture_default_str();
    cmd->add_option("--out", opt.out, "output path (stdout if omitted)");
    cmd->add_flag("--normalize", opt.normalize, "rescale non-normalized amplitudes");
}

SweepConfig sweep_config(const CommonOptions &opt) {
    SweepConfig config;
    config.kind = parse_noise_kind(opt.noise);
    if (!opt.states.empty()) {
        config.states = parse_state_list(opt.states, opt.normalize);
    }
    if (!opt.alpha.empty() || !opt.beta.empty()) {
        config.states = {make_state(parse_amplitude(opt.alpha.empty() ? "0" : opt.alpha),
                                    parse_amplitude(opt.beta.empty() ? "0" : opt.beta), opt.normalize)};
    }
    config.p_start = opt.p_start;
    config.p_end = opt.p_end;
    config.steps = opt.steps;
    if (!opt.columns.empty()) {
        config.numeric = config.analytic = config.linear = false;
        for (const auto &c : opt.columns) {
            if (c == "numeric") {
                config.numeric = true;
            } else if (c == "analytic") {
                config.analytic = true;
            } else if (c == "linear") {
                config.linear = true;
            } else {
                throw std::invalid_argument("unknown column '" + c + "'");
            }
        }
    }
    config.validate();
    return config;
}

void emit(const std::string &path, const std::string &content) {
    if (path.empty()) {
        std::cout << content;
    } else {
        write_file(path, content);
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Noisy three-qubit teleportation: simulation and exact verification"};
    app.require_subcommand(1);

    CommonOptions opt;
    double p = 0.1;

    auto *sweep = app.add_subcommand("sweep", "fidelity versus p as CSV");
    add_sweep_options(sweep, opt);
    sweep->add_option("--columns", opt.columns, "numeric, analytic, linear")->delimiter(',');

    auto *curves = app.add_subcommand("curves", "fidelity versus p as SVG");
    add_sweep_options(curves, opt);

    auto *trace = app.add_subcommand("trace", "print every intermediate state");
    trace->add_option("--noise", opt.noise)->capture_default_str();
    trace->add_option("--alpha", opt.alpha)->required();
    trace->add_option("--beta", opt.beta)->required();
    trace->add_option("--p", p)->capture_default_str();
    trace->add_option("--out", opt.out);
    trace->add_flag("--normalize", opt.normalize);

    auto *verify = app.add_subcommand("verify", "compare derived polynomials with the published table");
    verify->add_option("--out", opt.out, "text report path; the TSV goes to <out>.tsv");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) {
            emit(opt.out, sweep_csv(sweep_config(opt)));
        } else if (curves->parsed()) {
            emit(opt.out, curves_svg(sweep_config(opt)));
        } else if (trace->parsed()) {
            const auto state = make_state(parse_amplitude(opt.alpha), parse_amplitude(opt.beta), opt.normalize);
            if (!(p >= 0.0 && p <= 1.0)) {
                throw std::invalid_argument("p must lie in [0, 1]");
            }
            emit(opt.out, trace_text(state.state, parse_noise_kind(opt.noise), p));
        } else if (verify->parsed()) {
            const auto result = run_verify();
            if (opt.out.empty()) {
                std::cout << result.text;
            } else {
                write_file(opt.out, result.text);
                write_file(opt.out + ".tsv", result.tsv);
            }
            return result.exit_status;
        }
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
