#include <gtest/gtest.h>

#include <functional>
#include <sstream>

#include "commands.hpp"

using namespace qtel;
using namespace qtel::cli;

namespace {

std::vector<std::vector<std::string>> rows_of(const std::string &csv) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::istringstream fs(line);
        std::string f;
        while (std::getline(fs, f, ',')) {
            fields.push_back(f);
        }
        rows.push_back(fields);
    }
    return rows;
}

std::string error_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const std::exception &e) {
        return e.what();
    }
    return {};
}

std::string stage_block(const std::string &text, const std::string &label) {
    const auto begin = text.find("\n" + label + " ");
    const auto body = text.find('\n', begin + 1);
    const auto end = text.find("\n\n", body);
    return text.substr(body, end == std::string::npos ? std::string::npos : end - body);
}

}  // namespace

TEST(Amplitude, ParsesRealAndComplexForms) {
    EXPECT_EQ(parse_amplitude("0.6"), Complex(0.6, 0.0));
    EXPECT_EQ(parse_amplitude("-1e-3"), Complex(-1e-3, 0.0));
    EXPECT_EQ(parse_amplitude("0.6+0.8i"), Complex(0.6, 0.8));
    EXPECT_EQ(parse_amplitude("0-1i"), Complex(0.0, -1.0));
    EXPECT_EQ(parse_amplitude(".5-.25i"), Complex(0.5, -0.25));
}

TEST(Amplitude, ErrorsNameTheToken) {
    for (const char *bad : {"", "abc", "0.6+i", "1+-2i", "1+2", "1+2j", "inf", "nan", "+1", "1 "}) {
        const std::string msg = error_of([&] { parse_amplitude(bad); });
        EXPECT_NE(msg.find("'" + std::string(bad) + "'"), std::string::npos) << bad << ": " << msg;
    }
}

TEST(Amplitude, FormatRoundTrips) {
    for (Complex z : {Complex(0.6, 0.8), Complex(1.0, 0.0), Complex(0.0, -1.0), Complex(std::sqrt(0.5), 1e-20)}) {
        EXPECT_EQ(parse_amplitude(format_amplitude(z)), z) << format_amplitude(z);
    }
    EXPECT_EQ(format_amplitude(Complex(-0.0, 0.0)), "0");
    EXPECT_EQ(format_amplitude(Complex(0.6, -0.8)), "0.6-0.8i");
}

TEST(States, ParsingAndNormalization) {
    const auto s = parse_state("0.6:0+0.8i", false);
    EXPECT_EQ(s.label, "0.6:0+0.8i");
    EXPECT_THROW(parse_state("0.6:0.6", false), std::invalid_argument);
    const auto scaled = parse_state("3:4", true);
    EXPECT_NEAR(std::abs(scaled.state.alpha - 0.6), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(scaled.state.beta - 0.8), 0.0, 1e-15);
    EXPECT_EQ(scaled.label, format_amplitude(scaled.state.alpha) + ":" + format_amplitude(scaled.state.beta));
    EXPECT_THROW(parse_state("0.6", false), std::invalid_argument);
    const auto list = parse_state_list("1:0,0.6:0.8", false);
    ASSERT_EQ(list.size(), 2U);
    EXPECT_EQ(list[1].label, "0.6:0.8");
    const std::string msg = error_of([] { parse_state_list("1:0,0.6:x", false); });
    EXPECT_NE(msg.find("'x'"), std::string::npos) << msg;
    EXPECT_EQ(default_states().size(), 3U);
}

TEST(SweepConfig, Validation) {
    SweepConfig c;
    c.steps = 1;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = SweepConfig{};
    c.p_start = 0.6;
    c.p_end = 0.5;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = SweepConfig{};
    c.p_end = 1.1;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = SweepConfig{};
    c.numeric = c.analytic = c.linear = false;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = SweepConfig{};
    EXPECT_EQ(c.p_at(0), 0.0);
    EXPECT_EQ(c.p_at(100), 1.0);
    EXPECT_DOUBLE_EQ(c.p_at(50), 0.5);
}

TEST(Sweep, HeaderRowsAndDeterminism) {
    SweepConfig c;
    const std::string csv = sweep_csv(c);
    EXPECT_EQ(csv, sweep_csv(c));
    EXPECT_EQ(csv.find('\r'), std::string::npos);
    const auto rows = rows_of(csv);
    ASSERT_EQ(rows.size(), 1U + 3U * 101U);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "p,state_label,f_numeric,f_analytic,f_linear,abs_diff");
    for (std::size_t i = 1; i < rows.size(); i++) {
        ASSERT_EQ(rows[i].size(), 6U);
    }
    EXPECT_EQ(rows[1][1], "1:0");
    EXPECT_EQ(rows[102][1], "0.7071067811865476:0.7071067811865476");
}

TEST(Sweep, ColumnSelection) {
    SweepConfig c;
    c.analytic = false;
    c.steps = 3;
    const std::string csv = sweep_csv(c);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "p,state_label,f_numeric,f_linear");
    c.numeric = false;
    c.analytic = true;
    c.linear = false;
    EXPECT_EQ(rows_of(sweep_csv(c))[0], (std::vector<std::string>{"p", "state_label", "f_analytic"}));
}

TEST(Sweep, ZeroNoiseRowsAreOne) {
    for (NoiseKind kind : kAllNoiseKinds) {
        SweepConfig c;
        c.kind = kind;
        c.steps = 5;
        for (const auto &row : rows_of(sweep_csv(c))) {
            if (row[0] != "0") {
                continue;
            }
            for (std::size_t col = 2; col <= 4; col++) {
                EXPECT_NEAR(std::stod(row[col]), 1.0, 1e-14) << to_string(kind) << " " << row[1];
            }
        }
    }
}

TEST(Sweep, DepolarizingEqualSuperpositionEndsAtOneHalf) {
    SweepConfig c;
    c.states = {parse_state("0.7071067811865476:0.7071067811865476", false)};
    const auto rows = rows_of(sweep_csv(c));
    ASSERT_EQ(rows.back()[0], "1");
    EXPECT_NEAR(std::stod(rows.back()[2]), 0.5, 1e-12);
}

TEST(Sweep, PhaseFlipBasisStateIsUntouched) {
    SweepConfig c;
    c.kind = NoiseKind::PhaseFlip;
    c.states = {parse_state("1:0", false)};
    const auto rows = rows_of(sweep_csv(c));
    for (std::size_t i = 1; i < rows.size(); i++) {
        EXPECT_NEAR(std::stod(rows[i][2]), 1.0, 1e-12);
    }
}

TEST(Sweep, SeventeenSignificantDigits) {
    SweepConfig c;
    c.kind = NoiseKind::PhaseFlip;
    c.states = {parse_state("0.6:0.8", false)};
    c.steps = 4;
    const auto rows = rows_of(sweep_csv(c));
    EXPECT_EQ(rows[2][0], "0.33333333333333331");
}

TEST(Trace, ZeroNoiseStagesRepeat) {
    const auto in = InputState<Complex>::create(0.6, 0.8);
    const std::string text = trace_text(in, NoiseKind::Depolarizing, 0.0);
    for (int k = 1; k <= 10; k++) {
        EXPECT_NE(text.find("\nrho" + std::to_string(k) + " ("), std::string::npos);
    }
    EXPECT_EQ(stage_block(text, "rho9"), stage_block(text, "rho8"));
    EXPECT_NE(text.find("min eigenvalue"), std::string::npos);
}

TEST(Trace, FullDepolarizationOutput) {
    const auto in = InputState<Complex>::create(0.6, 0.8);
    const std::string block = stage_block(trace_text(in, NoiseKind::Depolarizing, 1.0), "rho10");
    EXPECT_NE(block.find("  0.5+0i 0+0i\n  0+0i 0.5+0i\n"), std::string::npos) << block;
}

TEST(Trace, PhaseFlipDiagonal) {
    const auto in = InputState<Complex>::create(0.6, 0.8);
    const std::string block = stage_block(trace_text(in, NoiseKind::PhaseFlip, 0.25), "rho10");
    EXPECT_NE(block.find("  0.36+0i "), std::string::npos) << block;
    EXPECT_NE(block.find(" 0.64+0i\n"), std::string::npos) << block;
}

TEST(Curves, DeterministicPolylinesStartingAtFullFidelity) {
    SweepConfig c;
    c.steps = 21;
    const std::string svg = curves_svg(c);
    EXPECT_EQ(svg, curves_svg(c));
    EXPECT_TRUE(svg.starts_with("<svg"));
    std::size_t count = 0;
    for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1)) {
        count++;
        const auto points = svg.find("points=\"", pos);
        EXPECT_EQ(svg.substr(points + 8, 13), "70.000,40.000");
    }
    EXPECT_EQ(count, 3U);
    for (const auto &s : default_states()) {
        EXPECT_NE(svg.find(">" + s.label + "</text>"), std::string::npos);
    }
    EXPECT_NE(svg.find("noise probability p"), std::string::npos);
    EXPECT_NE(svg.find("fidelity F"), std::string::npos);
}

TEST(Curves, BitFlipAboveDepolarizingForEqualSuperposition) {
    const auto in = InputState<Complex>::create(std::sqrt(0.5), std::sqrt(0.5));
    for (double p : {0.1, 0.2, 0.3}) {
        EXPECT_GE(fidelity_closed(NoiseKind::BitFlip, in, p), fidelity_closed(NoiseKind::Depolarizing, in, p));
    }
}

TEST(Verify, ExitStatusFollowsMismatches) {
    const auto published = run_verify();
    EXPECT_EQ(published.exit_status, 1);
    EXPECT_NE(published.text.find("bitflip.u3"), std::string::npos);
    EXPECT_NE(published.tsv.find("NotIdentifiable"), std::string::npos);

    auto table = PaperPolynomialTable::published();
    std::vector<GaussianRational> coeffs = table[6].coeffs();
    coeffs[2] = coeffs[2] + GaussianRational(1);
    table[6] = PolyP(coeffs);
    const auto perturbed = run_verify(table);
    EXPECT_NE(perturbed.exit_status, 0);
    EXPECT_NE(perturbed.text.find("[Mismatch] phaseflip.coherence_u6"), std::string::npos);
}

TEST(WriteFile, ErrorNamesPath) {
    const std::string path = "/nonexistent-dir/out.csv";
    EXPECT_NE(error_of([&] { write_file(path, "x"); }).find(path), std::string::npos);
}
