#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qtel/analytic.hpp"
#include "qtel/verify.hpp"

namespace qtel::cli {

// Amplitude grammar: a real number ("0.6", "-1e-3") optionally followed by a
// signed imaginary part ending in 'i' ("0.6+0.8i", "0-1i").
Complex parse_amplitude(std::string_view token);
// Shortest round-trip decimal for each part; the imaginary part is omitted
// when zero.
std::string format_amplitude(Complex value);

struct LabeledState {
    std::string label;
    InputState<Complex> state;
};

// "alpha:beta". The label is the canonical re-formatting of both amplitudes.
LabeledState parse_state(std::string_view token, bool normalize);
// Comma-separated list of "alpha:beta" pairs.
std::vector<LabeledState> parse_state_list(std::string_view text, bool normalize);
LabeledState make_state(Complex alpha, Complex beta, bool normalize);

// (1,0), (1/sqrt2, 1/sqrt2), (0.6, 0.8).
std::vector<LabeledState> default_states();

struct SweepConfig {
    NoiseKind kind = NoiseKind::Depolarizing;
    std::vector<LabeledState> states = default_states();
    double p_start = 0.0;
    double p_end = 1.0;
    std::size_t steps = 101;
    bool numeric = true;
    bool analytic = true;
    bool linear = true;

    void validate() const;
    double p_at(std::size_t index) const;
};

// CSV with header p,state_label,f_numeric,f_analytic,f_linear,abs_diff (the
// selected columns only; abs_diff needs numeric and analytic). Rows are
// ordered by state, then p.
std::string sweep_csv(const SweepConfig &config);

// Every stage rho1..rho10 with entries, trace and minimum eigenvalue.
std::string trace_text(const InputState<Complex> &input, NoiseKind kind, double p);

// Fidelity-vs-p polylines, one per state, with axes and legend.
std::string curves_svg(const SweepConfig &config);

struct VerifyOutput {
    std::string text;
    std::string tsv;
    int exit_status;
};

// Exit status 0 iff the report has no Mismatch entries.
VerifyOutput run_verify(const PaperPolynomialTable &table = PaperPolynomialTable::published());

// Throws std::runtime_error naming the path on failure.
void write_file(const std::string &path, const std::string &content);

}  // namespace qtel::cli
