#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "qtel/analytic.hpp"
#include "qtel/symbolic.hpp"

namespace qtel::testing {

inline DensityOperator<Complex> random_density(std::size_t num_qubits, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    Operator<Complex> a(num_qubits);
    for (std::size_t r = 0; r < a.dim(); r++) {
        for (std::size_t c = 0; c < a.dim(); c++) {
            a(r, c) = {gauss(rng), gauss(rng)};
        }
    }
    DensityOperator<Complex> rho = a * a.adjoint();
    return rho * Complex(1.0 / rho.trace().real());
}

inline DensityOperator<Complex> random_pure_density(std::size_t num_qubits, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    std::vector<Complex> amps(std::size_t{1} << num_qubits);
    double norm = 0.0;
    for (auto &a : amps) {
        a = {gauss(rng), gauss(rng)};
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return PureState<Complex>(amps).projector();
}

inline InputState<Complex> random_input(std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    const Complex a{gauss(rng), gauss(rng)};
    const Complex b{gauss(rng), gauss(rng)};
    return InputState<Complex>::create(a, b, true);
}

inline InputState<Complex> input(Complex alpha, Complex beta) {
    return InputState<Complex>::create(alpha, beta);
}

// (1,0), (1/sqrt2,1/sqrt2), (0.6,0.8), (0.6,0.8i), (1/sqrt2, i/sqrt2).
inline std::vector<InputState<Complex>> probe_inputs() {
    const double h = std::sqrt(0.5);
    return {input(1.0, 0.0), input(h, h), input(0.6, 0.8), input(0.6, Complex(0.0, 0.8)),
            input(h, Complex(0.0, h))};
}

inline double fidelity(NoiseKind kind, const InputState<Complex> &in, double p) {
    return teleport_fidelity(TeleportConfig<Complex>{in, ChannelSpec<Complex>::numeric(kind, p)});
}

inline StageTrace<Complex> stages(NoiseKind kind, const InputState<Complex> &in, double p) {
    return run_stages(TeleportConfig<Complex>{in, ChannelSpec<Complex>::numeric(kind, p)});
}

inline PolyP one_minus(long k) {
    return PolyP{BigRational(1), BigRational(-k)};
}

inline std::vector<double> grid(double lo, double hi, std::size_t n) {
    std::vector<double> out;
    for (std::size_t i = 0; i < n; i++) {
        out.push_back(i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    return out;
}

}  // namespace qtel::testing
