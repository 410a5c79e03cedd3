#pragma once

#include <array>
#include <span>
#include <vector>

#include "qtel/teleport.hpp"

namespace qtel {

// Exactly normalized input with Gaussian-rational amplitudes, e.g. (3/5, 4/5).
InputState<PolyP> exact_input(const GaussianRational &alpha, const GaussianRational &beta);

// The full noisy protocol over polynomials in p; returns rho10.
DensityOperator<PolyP> run_pipeline_symbolic(const InputState<PolyP> &input, NoiseKind kind,
                                             CorrectionAssignment corrections = kStandardCorrections);

// End-to-end linear map on single-qubit operators: entry (out, in) with
// out = 2a+b and in = 2i+j is the coefficient of |i><j| in the input that
// lands on |a><b| in rho10.
struct TransferMap {
    std::array<std::array<PolyP, 4>, 4> entries;

    const PolyP &at(std::size_t out_row, std::size_t out_col, std::size_t in_row, std::size_t in_col) const {
        return entries[out_row * 2 + out_col][in_row * 2 + in_col];
    }

    DensityOperator<PolyP> apply(const DensityOperator<PolyP> &input) const;
};

TransferMap extract_transfer_map(NoiseKind kind, CorrectionAssignment corrections = kStandardCorrections);

// One map per assignment. The stages before measurement are computed once.
std::vector<TransferMap> extract_transfer_maps(NoiseKind kind, std::span<const CorrectionAssignment> assignments);

}  // namespace qtel
