#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "qtel/channels.hpp"

namespace qtel {

// Single-qubit state alpha|0> + beta|1> to be teleported.
template <Scalar S>
struct InputState {
    S alpha;
    S beta;

    // Rejects |alpha|^2 + |beta|^2 != 1 (within 1e-9 for the float backend,
    // exactly otherwise). With `normalize` the float backend rescales instead.
    static InputState create(S alpha, S beta, bool normalize = false) {
        using T = ScalarTraits<S>;
        const S norm = alpha * T::conj(alpha) + beta * T::conj(beta);
        if (T::equal(norm, T::one(), 1e-9)) {
            return {std::move(alpha), std::move(beta)};
        }
        if constexpr (!T::kExact) {
            if (normalize && std::abs(norm) > 0.0) {
                const double scale = 1.0 / std::sqrt(std::abs(norm));
                return {alpha * scale, beta * scale};
            }
        }
        throw std::invalid_argument("InputState: |alpha|^2 + |beta|^2 must be 1");
    }

    PureState<S> pure_state() const { return PureState<S>({alpha, beta}); }
};

// Which measured qubit drives each correction on the receiver's qubit.
struct CorrectionAssignment {
    std::size_t x_from = 2;
    std::size_t z_from = 1;

    std::string str() const {
        return "X<-m" + std::to_string(x_from) + ",Z<-m" + std::to_string(z_from);
    }
    friend bool operator==(const CorrectionAssignment &, const CorrectionAssignment &) = default;
};

inline constexpr CorrectionAssignment kStandardCorrections{2, 1};

// The standard wiring first, followed by the three alternatives.
inline constexpr std::array<CorrectionAssignment, 4> kAllCorrectionAssignments = {
    CorrectionAssignment{2, 1}, CorrectionAssignment{1, 2}, CorrectionAssignment{1, 1},
    CorrectionAssignment{2, 2}};

template <Scalar S>
struct TeleportConfig {
    InputState<S> input;
    ChannelSpec<S> noise;
    bool noise_enabled = true;
    CorrectionAssignment corrections = kStandardCorrections;
};

// rho1 ... rho10 of the noisy protocol. rho1-rho9 are three-qubit states,
// rho10 is the receiver's qubit.
template <Scalar S>
struct StageTrace {
    static constexpr std::size_t kNumStages = 10;
    std::vector<DensityOperator<S>> stages;

    // 1-based, matching the stage labels.
    const DensityOperator<S> &stage(std::size_t index) const {
        if (index < 1 || index > stages.size()) {
            throw std::out_of_range("StageTrace: no stage " + std::to_string(index));
        }
        return stages[index - 1];
    }
    const DensityOperator<S> &output() const { return stages.back(); }

    static std::string label(std::size_t index) { return "rho" + std::to_string(index); }
};

// |psi><psi| (x) |00><00|.
template <Scalar S>
DensityOperator<S> build_initial(const InputState<S> &input) {
    using T = ScalarTraits<S>;
    const DensityOperator<S> zero_zero = Operator<S>::matrix_unit(2, 0, 0);
    DensityOperator<S> psi(1, {input.alpha * T::conj(input.alpha), input.alpha * T::conj(input.beta),
                               input.beta * T::conj(input.alpha), input.beta * T::conj(input.beta)});
    return tensor(psi, zero_zero);
}

// Projects qubits 1 and 2 onto each outcome, applies the classically
// controlled X then Z to qubit 3 without noise, and sums the four branches.
template <Scalar S>
DensityOperator<S> measure_and_correct(const DensityOperator<S> &rho9,
                                       CorrectionAssignment corrections = kStandardCorrections) {
    if (rho9.num_qubits() != 3) {
        throw std::invalid_argument("measure_and_correct: expected 3 qubits, got " +
                                    std::to_string(rho9.num_qubits()));
    }
    const auto x = gates::x<S>().matrix;
    const auto z = gates::z<S>().matrix;
    DensityOperator<S> out(1);
    for (std::size_t m1 = 0; m1 < 2; m1++) {
        for (std::size_t m2 = 0; m2 < 2; m2++) {
            const std::size_t base = (m1 << 2U) | (m2 << 1U);
            DensityOperator<S> branch(1, {rho9(base, base), rho9(base, base | 1U), rho9(base | 1U, base),
                                          rho9(base | 1U, base | 1U)});
            const std::array<std::size_t, 3> outcome = {0, m1, m2};
            if (outcome[corrections.x_from] == 1) {
                branch = conjugate_by(branch, x);
            }
            if (outcome[corrections.z_from] == 1) {
                branch = conjugate_by(branch, z);
            }
            out += branch;
        }
    }
    return out;
}

// Runs the gate/noise sequence on an arbitrary initial three-qubit operator.
// The protocol is linear in rho1, so non-physical probes such as matrix units
// are allowed.
template <Scalar S>
StageTrace<S> run_stages_from(DensityOperator<S> rho1, const ChannelSpec<S> &noise_spec, bool noise_enabled,
                              CorrectionAssignment corrections = kStandardCorrections) {
    if (rho1.num_qubits() != 3) {
        throw std::invalid_argument("run_stages: expected a 3-qubit initial state");
    }
    const Gate<S> id = gates::identity<S>();
    const Gate<S> h = gates::hadamard<S>();
    const Gate<S> cx = gates::cnot<S>();
    auto noise = [&](const DensityOperator<S> &rho) { return noise_enabled ? apply_layer(noise_spec, rho) : rho; };

    StageTrace<S> trace;
    auto &st = trace.stages;
    st.reserve(StageTrace<S>::kNumStages);
    st.push_back(std::move(rho1));
    st.push_back(conjugate_by(st.back(), tensor(tensor(id, h), id)));
    st.push_back(noise(st.back()));
    st.push_back(conjugate_by(st.back(), tensor(id, cx)));
    st.push_back(noise(st.back()));
    st.push_back(conjugate_by(st.back(), tensor(cx, id)));
    st.push_back(noise(st.back()));
    st.push_back(conjugate_by(st.back(), tensor(tensor(h, id), id)));
    st.push_back(noise(st.back()));
    st.push_back(measure_and_correct(st.back(), corrections));
    return trace;
}

template <Scalar S>
StageTrace<S> run_stages(const TeleportConfig<S> &config) {
    return run_stages_from(build_initial(config.input), config.noise, config.noise_enabled, config.corrections);
}

template <Scalar S>
auto teleport_fidelity(const TeleportConfig<S> &config) {
    return fidelity_with(config.input.pure_state(), run_stages(config).output());
}

}  // namespace qtel
