#include "qtel/channels.hpp"

#include <cmath>

namespace qtel {

std::string_view to_string(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::Depolarizing:
            return "depolarizing";
        case NoiseKind::BitFlip:
            return "bitflip";
        case NoiseKind::PhaseFlip:
            return "phaseflip";
    }
    return "unknown";
}

NoiseKind parse_noise_kind(std::string_view name) {
    for (NoiseKind kind : kAllNoiseKinds) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    throw std::invalid_argument("unknown noise kind '" + std::string(name) +
                                "' (expected depolarizing, bitflip or phaseflip)");
}

namespace {

using Op = DensityOperator<Complex>;

Op maximally_mixed(std::size_t num_qubits) {
    return Op::identity(num_qubits) * Complex(1.0 / static_cast<double>(std::size_t{1} << num_qubits));
}

}  // namespace

DensityOperator<Complex> depolarizing_subset_expansion(const DensityOperator<Complex> &rho, double p) {
    if (rho.num_qubits() != 3) {
        throw std::invalid_argument("depolarizing_subset_expansion: expected 3 qubits, got " +
                                    std::to_string(rho.num_qubits()));
    }
    const Op id = Op::identity(1);
    const Op rho12 = partial_trace(rho, {1, 2});
    const Op rho13 = partial_trace(rho, {1, 3});
    const Op rho23 = partial_trace(rho, {2, 3});
    const Op rho1 = partial_trace(rho, {1});
    const Op rho2 = partial_trace(rho, {2});
    const Op rho3 = partial_trace(rho, {3});

    // rho13 (x) I must put the identity on the middle qubit.
    Op rho13_id(3);
    for (std::size_t r = 0; r < 8; r++) {
        for (std::size_t c = 0; c < 8; c++) {
            const std::size_t r2 = (r >> 1U) & 1U;
            const std::size_t c2 = (c >> 1U) & 1U;
            if (r2 != c2) {
                continue;
            }
            const std::size_t rr = ((r >> 2U) << 1U) | (r & 1U);
            const std::size_t cc = ((c >> 2U) << 1U) | (c & 1U);
            rho13_id(r, c) = rho13(rr, cc);
        }
    }

    const double q = 1.0 - p;
    Op out = rho * Complex(q * q * q);
    out += (tensor(rho12, id) + rho13_id + tensor(id, rho23)) * Complex(p * q * q / 2.0);
    out += (tensor(rho1, tensor(id, id)) + tensor(tensor(id, rho2), id) + tensor(tensor(id, id), rho3)) *
           Complex(p * p * q / 4.0);
    out += Op::identity(3) * Complex(p * p * p / 8.0);
    return out;
}

DensityOperator<Complex> pauli_layer_explicit_sum(NoiseKind kind, const DensityOperator<Complex> &rho, double p) {
    if (rho.num_qubits() != 3) {
        throw std::invalid_argument("pauli_layer_explicit_sum: expected 3 qubits");
    }
    Op pauli;
    switch (kind) {
        case NoiseKind::BitFlip:
            pauli = gates::x<Complex>().matrix;
            break;
        case NoiseKind::PhaseFlip:
            pauli = gates::z<Complex>().matrix;
            break;
        case NoiseKind::Depolarizing:
            throw std::invalid_argument("pauli_layer_explicit_sum: only bitflip and phaseflip have an 8-term form");
    }
    const Op id = Op::identity(1);
    const std::array<double, 2> weight = {1.0 - p, p};
    const std::array<const Op *, 2> factor = {&id, &pauli};
    Op out(3);
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            for (int k = 0; k < 2; k++) {
                const Op u = tensor(tensor(*factor[i], *factor[j]), *factor[k]);
                out += (u * rho * u) * Complex(weight[i] * weight[j] * weight[k]);
            }
        }
    }
    return out;
}

DensityOperator<Complex> depolarizing_product_of_marginals(const DensityOperator<Complex> &rho, double p) {
    const Op mixed = maximally_mixed(1);
    Op out = Op::identity(0);
    for (std::size_t q = 1; q <= rho.num_qubits(); q++) {
        const std::array<std::size_t, 1> keep = {q};
        Op marginal = partial_trace(rho, std::span<const std::size_t>(keep)) * Complex(1.0 - p) + mixed * Complex(p);
        out = tensor(out, marginal);
    }
    return out;
}

}  // namespace qtel
