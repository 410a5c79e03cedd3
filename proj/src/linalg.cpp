#include "qtel/linalg.hpp"

#include <Eigen/Eigenvalues>

namespace qtel {

double fidelity_with(const PureState<Complex> &psi, const DensityOperator<Complex> &rho) {
    if (!is_hermitian(rho, 1e-9)) {
        throw std::invalid_argument("fidelity_with: operator is not Hermitian");
    }
    return expectation(psi, rho).real();
}

PolyP fidelity_with(const PureState<PolyP> &psi, const DensityOperator<PolyP> &rho) {
    if (!is_hermitian(rho, 0.0)) {
        throw std::invalid_argument("fidelity_with: operator is not Hermitian");
    }
    return expectation(psi, rho);
}

double min_eigenvalue(const DensityOperator<Complex> &rho) {
    const auto d = static_cast<Eigen::Index>(rho.dim());
    Eigen::MatrixXcd m(d, d);
    for (Eigen::Index r = 0; r < d; r++) {
        for (Eigen::Index c = 0; c < d; c++) {
            m(r, c) = rho(r, c);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("min_eigenvalue: eigensolver did not converge");
    }
    return solver.eigenvalues().minCoeff();
}

DensityOperator<Complex> evaluate_at(const DensityOperator<PolyP> &rho, double p) {
    const BigRational exact_p = BigRational::from_double(p);
    DensityOperator<Complex> out(rho.num_qubits());
    for (std::size_t r = 0; r < rho.dim(); r++) {
        for (std::size_t c = 0; c < rho.dim(); c++) {
            out(r, c) = rho(r, c).evaluate_at(exact_p).to_complex();
        }
    }
    return out;
}

}  // namespace qtel
