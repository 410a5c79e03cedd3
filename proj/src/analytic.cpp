#include "qtel/analytic.hpp"

#include <cmath>

namespace qtel {

namespace {

BigRational q(long num, long den = 1) {
    return {num, den};
}

struct Moments {
    double pop_alpha;    // |a|^2
    double pop_beta;     // |b|^2
    Complex coherence;   // a b*
    double product;      // |a|^2 |b|^2
    double coherence_sq; // (a b*)^2 + (b a*)^2
};

Moments moments_of(const InputState<Complex> &input) {
    const Complex ab = input.alpha * std::conj(input.beta);
    const Complex sq_sum = ab * ab + std::conj(ab) * std::conj(ab);
    if (std::abs(sq_sum.imag()) > 1e-12) {
        throw std::logic_error("coherence square sum has an imaginary part");
    }
    const double pa = std::norm(input.alpha);
    const double pb = std::norm(input.beta);
    return {pa, pb, ab, pa * pb, sq_sum.real()};
}

}  // namespace

PaperPolynomialTable PaperPolynomialTable::published() {
    PaperPolynomialTable t;
    t[1] = PolyP{q(1, 4), q(-5, 2), q(73, 4), q(-84), q(252), q(-504), q(672), q(-576), q(288), q(-64)};
    t[2] = PolyP{q(0), q(2), q(-71, 4), q(84), q(-252), q(504), q(-672), q(576), q(-288), q(64)};
    t[3] = PolyP{q(0), q(1, 4), q(-1, 4)};
    t[4] = PolyP{q(1, 4),    q(-11, 4), q(83, 4), q(-205, 2), q(1337, 4), q(-742),
                 q(1120),    q(-1108),  q(640),   q(-128),    q(-64),      q(32)};
    t[5] = PolyP{q(0),       q(2),    q(-79, 4), q(405, 4), q(-1335, 4), q(742),
                 q(-1120),   q(1108), q(-640),   q(128),    q(64),       q(-32)};
    t[6] = PolyP{q(1), q(-16), q(112), q(-448), q(1120), q(-1792), q(1792), q(-1024), q(256)};
    return t;
}

DensityOperator<Complex> rho10_closed(NoiseKind kind, const InputState<Complex> &input, double p,
                                      const PaperPolynomialTable &table) {
    const Moments m = moments_of(input);
    const Complex ab = m.coherence;
    const Complex ba = std::conj(ab);
    DensityOperator<Complex> out(1);
    switch (kind) {
        case NoiseKind::Depolarizing: {
            const double keep9 = std::pow(1.0 - p, 9);
            const double keep12 = std::pow(1.0 - p, 12);
            out(0, 0) = keep9 * m.pop_alpha + (1.0 - keep9) / 2.0;
            out(0, 1) = keep12 * ab;
            out(1, 0) = keep12 * ba;
            out(1, 1) = keep9 * m.pop_beta + (1.0 - keep9) / 2.0;
            break;
        }
        case NoiseKind::BitFlip: {
            const BigRational exact_p = BigRational::from_double(p);
            std::array<double, 6> u{};
            for (std::size_t i = 1; i <= 5; i++) {
                u[i] = table[i].evaluate_at(exact_p).re().to_double();
            }
            out(0, 0) = 4.0 * (u[1] * m.pop_alpha + u[2] * m.pop_beta + u[3]);
            out(1, 1) = 4.0 * (u[2] * m.pop_alpha + u[1] * m.pop_beta + u[3]);
            out(0, 1) = 4.0 * (u[4] * ab + u[5] * ba);
            out(1, 0) = 4.0 * (u[5] * ab + u[4] * ba);
            break;
        }
        case NoiseKind::PhaseFlip: {
            const double u6 = table[6].evaluate(p).real();
            out(0, 0) = m.pop_alpha;
            out(0, 1) = u6 * ab;
            out(1, 0) = u6 * ba;
            out(1, 1) = m.pop_beta;
            break;
        }
    }
    return out;
}

double fidelity_closed(NoiseKind kind, const InputState<Complex> &input, double p,
                       const PaperPolynomialTable &table) {
    return fidelity_with(input.pure_state(), rho10_closed(kind, input, p, table));
}

double fidelity_linear(NoiseKind kind, const InputState<Complex> &input, double p) {
    return 1.0 - p * linear_slope(kind, input);
}

double linear_slope(NoiseKind kind, const InputState<Complex> &input) {
    const Moments m = moments_of(input);
    switch (kind) {
        case NoiseKind::Depolarizing:
            return 6.0 * m.product + 4.5;
        case NoiseKind::BitFlip:
            return 9.0 - 14.0 * m.product - 8.0 * m.coherence_sq;
        case NoiseKind::PhaseFlip:
            return 32.0 * m.product;
    }
    return 0.0;
}

BigRational linear_slope_exact(NoiseKind kind, const GaussianRational &alpha, const GaussianRational &beta) {
    const BigRational product = alpha.norm_squared() * beta.norm_squared();
    const GaussianRational ab = alpha * beta.conj();
    const GaussianRational sq_sum = ab * ab + ab.conj() * ab.conj();
    if (!sq_sum.is_real()) {
        throw std::logic_error("coherence square sum has an imaginary part");
    }
    switch (kind) {
        case NoiseKind::Depolarizing:
            return BigRational(6) * product + q(9, 2);
        case NoiseKind::BitFlip:
            return BigRational(9) - BigRational(14) * product - BigRational(8) * sq_sum.re();
        case NoiseKind::PhaseFlip:
            return BigRational(32) * product;
    }
    return {};
}

}  // namespace qtel
