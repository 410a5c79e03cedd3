#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qtel::cli {

namespace {

bool is_number_start(char c) {
    return (c >= '0' && c <= '9') || c == '.';
}

// Consumes one finite decimal number from the front of `rest`.
bool take_number(std::string_view &rest, double &out) {
    if (rest.empty()) {
        return false;
    }
    if (rest.front() == '-') {
        if (rest.size() < 2 || !is_number_start(rest[1])) {
            return false;
        }
    } else if (!is_number_start(rest.front())) {
        return false;
    }
    const char *begin = rest.data();
    const char *end = rest.data() + rest.size();
    auto [ptr, ec] = std::from_chars(begin, end, out, std::chars_format::general);
    if (ec != std::errc{} || !std::isfinite(out)) {
        return false;
    }
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    return true;
}

std::string shortest(double value) {
    if (value == 0.0) {
        value = 0.0;  // drop the sign of -0
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return {buf, ptr};
}

std::string g17(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string g12(double value) {
    if (value == 0.0) {
        value = 0.0;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::string fixed3(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", value);
    return buf;
}

double numeric_fidelity(NoiseKind kind, const InputState<Complex> &input, double p) {
    TeleportConfig<Complex> config{input, ChannelSpec<Complex>::numeric(kind, p)};
    return teleport_fidelity(config);
}

}  // namespace

Complex parse_amplitude(std::string_view token) {
    const std::string error = "invalid amplitude '" + std::string(token) + "'";
    std::string_view rest = token;
    double re = 0.0;
    if (!take_number(rest, re)) {
        throw std::invalid_argument(error);
    }
    if (rest.empty()) {
        return {re, 0.0};
    }
    const char sign = rest.front();
    if (sign != '+' && sign != '-') {
        throw std::invalid_argument(error);
    }
    if (sign == '+') {
        rest.remove_prefix(1);
        if (rest.empty() || !is_number_start(rest.front())) {
            throw std::invalid_argument(error);
        }
    }
    double im = 0.0;
    if (!take_number(rest, im) || rest != "i") {
        throw std::invalid_argument(error);
    }
    return {re, im};
}

std::string format_amplitude(Complex value) {
    std::string out = shortest(value.real());
    if (value.imag() != 0.0) {
        if (value.imag() > 0.0) {
            out += '+';
        }
        out += shortest(value.imag());
        out += 'i';
    }
    return out;
}

LabeledState make_state(Complex alpha, Complex beta, bool normalize) {
    auto state = InputState<Complex>::create(alpha, beta, normalize);
    return {format_amplitude(state.alpha) + ":" + format_amplitude(state.beta), state};
}

LabeledState parse_state(std::string_view token, bool normalize) {
    const auto colon = token.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("invalid state '" + std::string(token) + "' (expected alpha:beta)");
    }
    const Complex alpha = parse_amplitude(token.substr(0, colon));
    const Complex beta = parse_amplitude(token.substr(colon + 1));
    try {
        return make_state(alpha, beta, normalize);
    } catch (const std::invalid_argument &e) {
        throw std::invalid_argument("state '" + std::string(token) + "': " + e.what() +
                                    " (pass --normalize to rescale)");
    }
}

std::vector<LabeledState> parse_state_list(std::string_view text, bool normalize) {
    std::vector<LabeledState> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        out.push_back(parse_state(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos),
                                  normalize));
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

std::vector<LabeledState> default_states() {
    const double h = std::sqrt(0.5);
    return {make_state(1.0, 0.0, false), make_state(h, h, false), make_state(0.6, 0.8, false)};
}

void SweepConfig::validate() const {
    if (!(p_start >= 0.0 && p_end <= 1.0 && p_start <= p_end)) {
        throw std::invalid_argument("sweep: need 0 <= p_start <= p_end <= 1");
    }
    if (steps < 2) {
        throw std::invalid_argument("sweep: steps must be at least 2");
    }
    if (states.empty()) {
        throw std::invalid_argument("sweep: no input states");
    }
    if (!numeric && !analytic && !linear) {
        throw std::invalid_argument("sweep: no output columns selected");
    }
}

double SweepConfig::p_at(std::size_t index) const {
    if (index + 1 == steps) {
        return p_end;
    }
    return p_start + (p_end - p_start) * static_cast<double>(index) / static_cast<double>(steps - 1);
}

std::string sweep_csv(const SweepConfig &config) {
    config.validate();
    const bool diff = config.numeric && config.analytic;
    std::string out = "p,state_label";
    if (config.numeric) {
        out += ",f_numeric";
    }
    if (config.analytic) {
        out += ",f_analytic";
    }
    if (config.linear) {
        out += ",f_linear";
    }
    if (diff) {
        out += ",abs_diff";
    }
    out += '\n';
    for (const auto &s : config.states) {
        for (std::size_t i = 0; i < config.steps; i++) {
            const double p = config.p_at(i);
            out += g17(p) + "," + s.label;
            double fn = 0.0;
            double fa = 0.0;
            if (config.numeric) {
                fn = numeric_fidelity(config.kind, s.state, p);
                out += "," + g17(fn);
            }
            if (config.analytic) {
                fa = fidelity_closed(config.kind, s.state, p);
                out += "," + g17(fa);
            }
            if (config.linear) {
                out += "," + g17(fidelity_linear(config.kind, s.state, p));
            }
            if (diff) {
                out += "," + g17(std::abs(fn - fa));
            }
            out += '\n';
        }
    }
    return out;
}

std::string trace_text(const InputState<Complex> &input, NoiseKind kind, double p) {
    TeleportConfig<Complex> config{input, ChannelSpec<Complex>::numeric(kind, p)};
    const auto trace = run_stages(config);
    std::ostringstream out;
    out << "noise " << to_string(kind) << ", p = " << g12(p) << ", alpha = " << format_amplitude(input.alpha)
        << ", beta = " << format_amplitude(input.beta) << "\n";
    for (std::size_t k = 1; k <= trace.stages.size(); k++) {
        const auto &rho = trace.stage(k);
        out << "\n" << StageTrace<Complex>::label(k) << " (" << rho.num_qubits() << " qubit"
            << (rho.num_qubits() == 1 ? "" : "s") << ")\n";
        for (std::size_t r = 0; r < rho.dim(); r++) {
            out << " ";
            for (std::size_t c = 0; c < rho.dim(); c++) {
                const Complex v = rho(r, c);
                const double im = v.imag() == 0.0 ? 0.0 : v.imag();
                out << " " << g12(v.real()) << (im < 0.0 ? "" : "+") << g12(im) << "i";
            }
            out << "\n";
        }
        out << "  trace: " << g12(rho.trace().real()) << "\n";
        out << "  min eigenvalue: " << g12(min_eigenvalue(rho)) << "\n";
    }
    return out.str();
}

std::string curves_svg(const SweepConfig &config) {
    config.validate();
    constexpr double kWidth = 720;
    constexpr double kHeight = 460;
    constexpr double kLeft = 70;
    constexpr double kRight = 200;
    constexpr double kTop = 40;
    constexpr double kBottom = 60;
    constexpr double kPlotW = kWidth - kLeft - kRight;
    constexpr double kPlotH = kHeight - kTop - kBottom;
    static const char *const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

    const double span = config.p_end > config.p_start ? config.p_end - config.p_start : 1.0;
    auto sx = [&](double p) { return kLeft + (p - config.p_start) / span * kPlotW; };
    auto sy = [&](double f) { return kTop + (1.0 - f) * kPlotH; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << fixed3(kLeft + kPlotW / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
        << "Teleportation fidelity, " << to_string(config.kind) << " noise</text>\n";

    // Axes, grid and ticks.
    out << "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
    for (int t = 0; t <= 5; t++) {
        const double f = t / 5.0;
        out << "<line x1=\"" << fixed3(kLeft) << "\" y1=\"" << fixed3(sy(f)) << "\" x2=\""
            << fixed3(kLeft + kPlotW) << "\" y2=\"" << fixed3(sy(f)) << "\"/>\n";
    }
    out << "</g>\n";
    out << "<g stroke=\"black\" stroke-width=\"1.5\">\n";
    out << "<line x1=\"" << fixed3(kLeft) << "\" y1=\"" << fixed3(kTop + kPlotH) << "\" x2=\""
        << fixed3(kLeft + kPlotW) << "\" y2=\"" << fixed3(kTop + kPlotH) << "\"/>\n";
    out << "<line x1=\"" << fixed3(kLeft) << "\" y1=\"" << fixed3(kTop) << "\" x2=\"" << fixed3(kLeft)
        << "\" y2=\"" << fixed3(kTop + kPlotH) << "\"/>\n";
    out << "</g>\n";
    for (int t = 0; t <= 5; t++) {
        const double f = t / 5.0;
        const double p = config.p_start + span * t / 5.0;
        out << "<text x=\"" << fixed3(kLeft - 8) << "\" y=\"" << fixed3(sy(f) + 4)
            << "\" text-anchor=\"end\">" << fixed3(f).substr(0, 3) << "</text>\n";
        out << "<text x=\"" << fixed3(sx(p)) << "\" y=\"" << fixed3(kTop + kPlotH + 18)
            << "\" text-anchor=\"middle\">" << g12(p) << "</text>\n";
    }
    out << "<text x=\"" << fixed3(kLeft + kPlotW / 2) << "\" y=\"" << fixed3(kHeight - 16)
        << "\" text-anchor=\"middle\">noise probability p</text>\n";
    out << "<text x=\"18\" y=\"" << fixed3(kTop + kPlotH / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << fixed3(kTop + kPlotH / 2) << ")\">fidelity F</text>\n";

    // One polyline per state; numeric fidelity unless only closed forms were requested.
    for (std::size_t s = 0; s < config.states.size(); s++) {
        const auto &state = config.states[s];
        const char *color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < config.steps; i++) {
            const double p = config.p_at(i);
            const double f = config.numeric ? numeric_fidelity(config.kind, state.state, p)
                                            : fidelity_closed(config.kind, state.state, p);
            out << (i == 0 ? "" : " ") << fixed3(sx(p)) << "," << fixed3(sy(f));
        }
        out << "\"/>\n";
        const double ly = kTop + 10 + 20.0 * static_cast<double>(s);
        out << "<line x1=\"" << fixed3(kLeft + kPlotW + 15) << "\" y1=\"" << fixed3(ly) << "\" x2=\""
            << fixed3(kLeft + kPlotW + 40) << "\" y2=\"" << fixed3(ly) << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << fixed3(kLeft + kPlotW + 46) << "\" y=\"" << fixed3(ly + 4) << "\">" << state.label
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

VerifyOutput run_verify(const PaperPolynomialTable &table) {
    const auto report = run_verification(table);
    return {report.to_text(), report.to_tsv(), report.has_mismatch() ? 1 : 0};
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    file << content;
    if (!file) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

}  // namespace qtel::cli
