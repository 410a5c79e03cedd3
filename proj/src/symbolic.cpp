#include "qtel/symbolic.hpp"

namespace qtel {

InputState<PolyP> exact_input(const GaussianRational &alpha, const GaussianRational &beta) {
    return InputState<PolyP>::create(PolyP(alpha), PolyP(beta));
}

DensityOperator<PolyP> run_pipeline_symbolic(const InputState<PolyP> &input, NoiseKind kind,
                                             CorrectionAssignment corrections) {
    TeleportConfig<PolyP> config{input, ChannelSpec<PolyP>::symbolic(kind), true, corrections};
    return run_stages(config).output();
}

DensityOperator<PolyP> TransferMap::apply(const DensityOperator<PolyP> &input) const {
    if (input.num_qubits() != 1) {
        throw std::invalid_argument("TransferMap: expected a single-qubit operator");
    }
    DensityOperator<PolyP> out(1);
    for (std::size_t o = 0; o < 4; o++) {
        PolyP acc;
        for (std::size_t i = 0; i < 4; i++) {
            acc += entries[o][i] * input(i / 2, i % 2);
        }
        out(o / 2, o % 2) = std::move(acc);
    }
    return out;
}

std::vector<TransferMap> extract_transfer_maps(NoiseKind kind, std::span<const CorrectionAssignment> assignments) {
    const auto spec = ChannelSpec<PolyP>::symbolic(kind);
    const auto ancilla = Operator<PolyP>::matrix_unit(2, 0, 0);
    std::vector<TransferMap> maps(assignments.size());
    for (std::size_t in = 0; in < 4; in++) {
        auto probe = tensor(Operator<PolyP>::matrix_unit(1, in / 2, in % 2), ancilla);
        const auto trace = run_stages_from(std::move(probe), spec, true);
        const auto &rho9 = trace.stage(9);
        for (std::size_t a = 0; a < assignments.size(); a++) {
            const auto out = assignments[a] == kStandardCorrections ? trace.output()
                                                                    : measure_and_correct(rho9, assignments[a]);
            for (std::size_t o = 0; o < 4; o++) {
                maps[a].entries[o][in] = out(o / 2, o % 2);
            }
        }
    }
    return maps;
}

TransferMap extract_transfer_map(NoiseKind kind, CorrectionAssignment corrections) {
    const std::array<CorrectionAssignment, 1> one = {corrections};
    return extract_transfer_maps(kind, one).front();
}

}  // namespace qtel
