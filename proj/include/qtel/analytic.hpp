#pragma once

#include <array>

#include "qtel/teleport.hpp"

namespace qtel {

// The published bit-flip constants u1..u5 and the phase-flip constant u6 as
// exact rational polynomials in p. Kept as a value so tests can perturb it.
struct PaperPolynomialTable {
    std::array<PolyP, 6> u;

    const PolyP &operator[](std::size_t index) const { return u.at(index - 1); }
    PolyP &operator[](std::size_t index) { return u.at(index - 1); }

    static PaperPolynomialTable published();
};

// Closed-form rho10 for the given channel, transcribed from the published
// results. p in [0,1], normalized input.
DensityOperator<Complex> rho10_closed(NoiseKind kind, const InputState<Complex> &input, double p,
                                      const PaperPolynomialTable &table = PaperPolynomialTable::published());

// <psi|rho10_closed|psi>.
double fidelity_closed(NoiseKind kind, const InputState<Complex> &input, double p,
                       const PaperPolynomialTable &table = PaperPolynomialTable::published());

// First-order fidelity 1 - p * linear_slope(kind, input).
double fidelity_linear(NoiseKind kind, const InputState<Complex> &input, double p);

// Coefficient of -p in the published small-p approximations:
//   depolarizing  6|a|^2|b|^2 + 9/2
//   bit flip      9 - 14|a|^2|b|^2 - 8[(a b*)^2 + (b a*)^2]
//   phase flip    32|a|^2|b|^2
double linear_slope(NoiseKind kind, const InputState<Complex> &input);

// The same slope expressions in exact arithmetic for Gaussian-rational inputs.
BigRational linear_slope_exact(NoiseKind kind, const GaussianRational &alpha, const GaussianRational &beta);

}  // namespace qtel
