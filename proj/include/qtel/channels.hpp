#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "qtel/linalg.hpp"

namespace qtel {

enum class NoiseKind { Depolarizing, BitFlip, PhaseFlip };

inline constexpr std::array<NoiseKind, 3> kAllNoiseKinds = {NoiseKind::Depolarizing, NoiseKind::BitFlip,
                                                            NoiseKind::PhaseFlip};

// "depolarizing", "bitflip", "phaseflip".
std::string_view to_string(NoiseKind kind);
NoiseKind parse_noise_kind(std::string_view name);

// A Pauli noise channel with probability p. Under the exact backend p is the
// polynomial variable itself.
template <Scalar S>
struct ChannelSpec {
    NoiseKind kind = NoiseKind::Depolarizing;
    S p{};

    static ChannelSpec numeric(NoiseKind kind, double p)
        requires std::same_as<S, Complex>
    {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("ChannelSpec: probability " + std::to_string(p) + " outside [0,1]");
        }
        return {kind, p};
    }

    static ChannelSpec symbolic(NoiseKind kind)
        requires std::same_as<S, PolyP>
    {
        return {kind, PolyP::variable()};
    }
};

namespace gates {

template <Scalar S>
Gate<S> identity() {
    return {Operator<S>::identity(1)};
}

template <Scalar S>
Gate<S> x() {
    using T = ScalarTraits<S>;
    return {Operator<S>(1, {T::zero(), T::one(), T::one(), T::zero()})};
}

template <Scalar S>
Gate<S> y() {
    using T = ScalarTraits<S>;
    const S i = T::imag_unit();
    return {Operator<S>(1, {T::zero(), -i, i, T::zero()})};
}

template <Scalar S>
Gate<S> z() {
    using T = ScalarTraits<S>;
    return {Operator<S>(1, {T::one(), T::zero(), T::zero(), -T::one()})};
}

template <Scalar S>
Gate<S> hadamard() {
    using T = ScalarTraits<S>;
    return {Operator<S>(1, {T::one(), T::one(), T::one(), -T::one()}), 1};
}

// Control on the left qubit, target on the right.
template <Scalar S>
Gate<S> cnot() {
    using T = ScalarTraits<S>;
    const S o = T::one();
    const S z = T::zero();
    return {Operator<S>(2, {o, z, z, z,  //
                            z, o, z, z,  //
                            z, z, z, o,  //
                            z, z, o, z})};
}

}  // namespace gates

template <Scalar S>
struct KrausTerm {
    S weight;
    Operator<S> op;
};

// Weighted Pauli decomposition {(w_i, K_i)} with sum w_i K_i^dagger K_i = I.
// Terms with an exactly zero weight are dropped.
template <Scalar S>
std::vector<KrausTerm<S>> kraus_operators(const ChannelSpec<S> &spec) {
    using T = ScalarTraits<S>;
    const S &p = spec.p;
    std::vector<KrausTerm<S>> terms;
    auto push = [&terms](S w, const Gate<S> &g) {
        if (!T::is_zero(w)) {
            terms.push_back({std::move(w), g.matrix});
        }
    };
    switch (spec.kind) {
        case NoiseKind::Depolarizing: {
            const S quarter = p * T::from_ratio(1, 4);
            push(T::one() - p * T::from_ratio(3, 4), gates::identity<S>());
            push(quarter, gates::x<S>());
            push(quarter, gates::y<S>());
            push(quarter, gates::z<S>());
            break;
        }
        case NoiseKind::BitFlip:
            push(T::one() - p, gates::identity<S>());
            push(p, gates::x<S>());
            break;
        case NoiseKind::PhaseFlip:
            push(T::one() - p, gates::identity<S>());
            push(p, gates::z<S>());
            break;
    }
    return terms;
}

template <Scalar S>
DensityOperator<S> apply_to_qubit(const ChannelSpec<S> &spec, const DensityOperator<S> &rho, std::size_t qubit) {
    if (qubit < 1 || qubit > rho.num_qubits()) {
        throw std::invalid_argument("apply_to_qubit: qubit index " + std::to_string(qubit) + " out of range 1.." +
                                    std::to_string(rho.num_qubits()));
    }
    DensityOperator<S> out(rho.num_qubits());
    for (const auto &term : kraus_operators(spec)) {
        out += conjugate_on_qubit(rho, term.op, qubit) * term.weight;
    }
    return out;
}

// The channel applied independently to every qubit.
template <Scalar S>
DensityOperator<S> apply_layer(const ChannelSpec<S> &spec, const DensityOperator<S> &rho) {
    DensityOperator<S> out = rho;
    for (std::size_t q = 1; q <= rho.num_qubits(); q++) {
        out = apply_to_qubit(spec, out, q);
    }
    return out;
}

// The three-qubit depolarizing layer written as a sum over which subset of
// qubits was replaced by I/2:
//   (1-p)^3 rho + p(1-p)^2/2 (rho_12 x I + ...) + p^2(1-p)/4 (rho_1 x I x I + ...) + p^3/8 I.
// Multi-qubit marginals keep their correlations. Verification oracle only.
DensityOperator<Complex> depolarizing_subset_expansion(const DensityOperator<Complex> &rho, double p);

// Explicit 8-term Pauli sum sum_{ijk} p_i p_j p_k (P^i x P^j x P^k) rho (P^i x P^j x P^k)
// for BitFlip (P = X) or PhaseFlip (P = Z), built from full 8x8 products.
// Verification oracle only.
DensityOperator<Complex> pauli_layer_explicit_sum(NoiseKind kind, const DensityOperator<Complex> &rho, double p);

// Tensor product of independently depolarized single-qubit marginals,
// (x)_i ((1-p) rho_i + p I/2). Agrees with apply_layer only when rho is a
// product state.
DensityOperator<Complex> depolarizing_product_of_marginals(const DensityOperator<Complex> &rho, double p);

}  // namespace qtel
