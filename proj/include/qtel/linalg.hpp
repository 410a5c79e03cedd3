#pragma once

#include <algorithm>
#include <complex>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qtel/exact.hpp"

namespace qtel {

using Complex = std::complex<double>;

// Capabilities a scalar backend must provide. The float backend compares with
// a tolerance; the exact backend ignores the tolerance.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
    static constexpr bool kExact = false;
    static Complex zero() { return 0.0; }
    static Complex one() { return 1.0; }
    static Complex imag_unit() { return {0.0, 1.0}; }
    static Complex from_ratio(long num, long den) { return static_cast<double>(num) / static_cast<double>(den); }
    static Complex conj(const Complex &z) { return std::conj(z); }
    static bool is_zero(const Complex &z) { return z == 0.0; }
    static bool equal(const Complex &a, const Complex &b, double tol) { return std::abs(a - b) <= tol; }
};

template <>
struct ScalarTraits<PolyP> {
    static constexpr bool kExact = true;
    static PolyP zero() { return {}; }
    static PolyP one() { return 1; }
    static PolyP imag_unit() { return GaussianRational::i(); }
    static PolyP from_ratio(long num, long den) { return PolyP(GaussianRational(BigRational(num, den))); }
    static PolyP conj(const PolyP &z) { return z.conj(); }
    static bool is_zero(const PolyP &z) { return z.is_zero(); }
    static bool equal(const PolyP &a, const PolyP &b, double /*tol*/) { return a == b; }
};

template <class S>
concept Scalar = std::regular<S> && requires(S a, S b, long n, double tol) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a += b } -> std::same_as<S &>;
    { ScalarTraits<S>::zero() } -> std::convertible_to<S>;
    { ScalarTraits<S>::one() } -> std::convertible_to<S>;
    { ScalarTraits<S>::conj(a) } -> std::convertible_to<S>;
    { ScalarTraits<S>::from_ratio(n, n) } -> std::convertible_to<S>;
    { ScalarTraits<S>::is_zero(a) } -> std::convertible_to<bool>;
    { ScalarTraits<S>::equal(a, b, tol) } -> std::convertible_to<bool>;
};

inline constexpr std::size_t kMaxQubits = 10;

// Index of the bit holding `qubit` (1-based, qubit 1 is the most significant).
inline std::size_t qubit_bit(std::size_t num_qubits, std::size_t qubit) {
    return num_qubits - qubit;
}

// Square 2^n x 2^n operator, row-major, basis |q1 q2 ... qn> with q1 leftmost.
// Density matrices, gates and Kraus operators all use this type.
template <Scalar S>
class Operator {
  public:
    using Traits = ScalarTraits<S>;

    Operator() = default;
    explicit Operator(std::size_t num_qubits) : num_qubits_(checked_qubits(num_qubits)) {
        entries_.assign(dim() * dim(), Traits::zero());
    }
    Operator(std::size_t num_qubits, std::initializer_list<S> row_major) : Operator(num_qubits) {
        if (row_major.size() != entries_.size()) {
            throw std::invalid_argument("Operator: expected " + std::to_string(entries_.size()) + " entries");
        }
        std::size_t k = 0;
        for (const auto &v : row_major) {
            entries_[k++] = v;
        }
    }

    static Operator identity(std::size_t num_qubits) {
        Operator out(num_qubits);
        for (std::size_t i = 0; i < out.dim(); i++) {
            out(i, i) = Traits::one();
        }
        return out;
    }

    // |i><j| on num_qubits qubits.
    static Operator matrix_unit(std::size_t num_qubits, std::size_t i, std::size_t j) {
        Operator out(num_qubits);
        out(i, j) = Traits::one();
        return out;
    }

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return std::size_t{1} << num_qubits_; }
    std::span<const S> entries() const { return entries_; }

    S &operator()(std::size_t row, std::size_t col) { return entries_[row * dim() + col]; }
    const S &operator()(std::size_t row, std::size_t col) const { return entries_[row * dim() + col]; }

    S trace() const {
        S acc = Traits::zero();
        for (std::size_t i = 0; i < dim(); i++) {
            acc += (*this)(i, i);
        }
        return acc;
    }

    Operator adjoint() const {
        Operator out(num_qubits_);
        for (std::size_t r = 0; r < dim(); r++) {
            for (std::size_t c = 0; c < dim(); c++) {
                out(c, r) = Traits::conj((*this)(r, c));
            }
        }
        return out;
    }

    Operator &operator+=(const Operator &o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < entries_.size(); k++) {
            entries_[k] = entries_[k] + o.entries_[k];
        }
        return *this;
    }

    Operator &operator-=(const Operator &o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < entries_.size(); k++) {
            entries_[k] = entries_[k] - o.entries_[k];
        }
        return *this;
    }

    Operator &operator*=(const S &factor) {
        for (auto &e : entries_) {
            e = e * factor;
        }
        return *this;
    }

    friend Operator operator+(Operator a, const Operator &b) { return a += b; }
    friend Operator operator-(Operator a, const Operator &b) { return a -= b; }
    friend Operator operator*(Operator a, const S &factor) { return a *= factor; }
    friend Operator operator*(const S &factor, Operator a) { return a *= factor; }

    friend Operator operator*(const Operator &a, const Operator &b) {
        a.require_same_shape(b);
        const std::size_t n = a.dim();
        Operator out(a.num_qubits_);
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t k = 0; k < n; k++) {
                const S &lhs = a(i, k);
                if (Traits::is_zero(lhs)) {
                    continue;
                }
                for (std::size_t j = 0; j < n; j++) {
                    if (!Traits::is_zero(b(k, j))) {
                        out(i, j) += lhs * b(k, j);
                    }
                }
            }
        }
        return out;
    }

    friend bool operator==(const Operator &a, const Operator &b) = default;

  private:
    static std::size_t checked_qubits(std::size_t num_qubits) {
        if (num_qubits > kMaxQubits) {
            throw std::invalid_argument("Operator: " + std::to_string(num_qubits) +
                                        " qubits exceeds the dense limit of " + std::to_string(kMaxQubits));
        }
        return num_qubits;
    }

    void require_same_shape(const Operator &o) const {
        if (num_qubits_ != o.num_qubits_) {
            throw std::invalid_argument("Operator: dimension mismatch (" + std::to_string(num_qubits_) + " vs " +
                                        std::to_string(o.num_qubits_) + " qubits)");
        }
    }

    std::size_t num_qubits_ = 0;
    std::vector<S> entries_{Traits::one()};
};

template <Scalar S>
using DensityOperator = Operator<S>;

// A unitary stored as matrix / sqrt(2)^sqrt2_power so that the Hadamard stays
// exact under the rational backend. Conjugation only ever needs the square
// of the scale, which is the rational 1/2^sqrt2_power.
template <Scalar S>
struct Gate {
    Operator<S> matrix;
    unsigned sqrt2_power = 0;

    std::size_t num_qubits() const { return matrix.num_qubits(); }
};

template <Scalar S>
class PureState {
  public:
    explicit PureState(std::vector<S> amplitudes) : amplitudes_(std::move(amplitudes)) {
        std::size_t n = 0;
        while ((std::size_t{1} << n) < amplitudes_.size()) {
            n++;
        }
        if (amplitudes_.empty() || (std::size_t{1} << n) != amplitudes_.size()) {
            throw std::invalid_argument("PureState: amplitude count must be a power of two");
        }
        num_qubits_ = n;
    }

    std::size_t num_qubits() const { return num_qubits_; }
    std::span<const S> amplitudes() const { return amplitudes_; }

    S norm_squared() const {
        S acc = ScalarTraits<S>::zero();
        for (const auto &a : amplitudes_) {
            acc += a * ScalarTraits<S>::conj(a);
        }
        return acc;
    }

    DensityOperator<S> projector() const {
        DensityOperator<S> out(num_qubits_);
        for (std::size_t r = 0; r < amplitudes_.size(); r++) {
            for (std::size_t c = 0; c < amplitudes_.size(); c++) {
                out(r, c) = amplitudes_[r] * ScalarTraits<S>::conj(amplitudes_[c]);
            }
        }
        return out;
    }

  private:
    std::vector<S> amplitudes_;
    std::size_t num_qubits_ = 0;
};

// Kronecker product; a's qubits end up leftmost.
template <Scalar S>
Operator<S> tensor(const Operator<S> &a, const Operator<S> &b) {
    Operator<S> out(a.num_qubits() + b.num_qubits());
    const std::size_t db = b.dim();
    for (std::size_t ar = 0; ar < a.dim(); ar++) {
        for (std::size_t ac = 0; ac < a.dim(); ac++) {
            const S &x = a(ar, ac);
            if (ScalarTraits<S>::is_zero(x)) {
                continue;
            }
            for (std::size_t br = 0; br < db; br++) {
                for (std::size_t bc = 0; bc < db; bc++) {
                    out(ar * db + br, ac * db + bc) = x * b(br, bc);
                }
            }
        }
    }
    return out;
}

template <Scalar S>
Gate<S> tensor(const Gate<S> &a, const Gate<S> &b) {
    return {tensor(a.matrix, b.matrix), a.sqrt2_power + b.sqrt2_power};
}

template <Scalar S>
Operator<S> tensor_power(const Operator<S> &a, std::size_t count) {
    Operator<S> out = Operator<S>::identity(0);
    for (std::size_t k = 0; k < count; k++) {
        out = tensor(out, a);
    }
    return out;
}

namespace detail {

inline void check_qubit_list(std::size_t num_qubits, std::span<const std::size_t> qubits, const char *what) {
    std::vector<bool> seen(num_qubits + 1, false);
    for (std::size_t q : qubits) {
        if (q < 1 || q > num_qubits) {
            throw std::invalid_argument(std::string(what) + ": qubit index " + std::to_string(q) +
                                        " out of range 1.." + std::to_string(num_qubits));
        }
        if (seen[q]) {
            throw std::invalid_argument(std::string(what) + ": duplicate qubit index " + std::to_string(q));
        }
        seen[q] = true;
    }
}

// Scatters the bits of `compact` (most significant first) onto the given
// qubits of an n-qubit basis index.
inline std::size_t scatter_bits(std::size_t num_qubits, std::span<const std::size_t> qubits, std::size_t compact) {
    std::size_t out = 0;
    const std::size_t k = qubits.size();
    for (std::size_t i = 0; i < k; i++) {
        std::size_t bit = (compact >> (k - 1 - i)) & 1U;
        out |= bit << qubit_bit(num_qubits, qubits[i]);
    }
    return out;
}

}  // namespace detail

// Reduced operator on `keep` (1-based qubit indices). Result qubit order
// follows the order of `keep`.
template <Scalar S>
DensityOperator<S> partial_trace(const DensityOperator<S> &rho, std::span<const std::size_t> keep) {
    const std::size_t n = rho.num_qubits();
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: keep set is empty");
    }
    detail::check_qubit_list(n, keep, "partial_trace");
    std::vector<std::size_t> traced;
    for (std::size_t q = 1; q <= n; q++) {
        bool kept = false;
        for (std::size_t k : keep) {
            kept = kept || k == q;
        }
        if (!kept) {
            traced.push_back(q);
        }
    }
    DensityOperator<S> out(keep.size());
    const std::size_t traced_dim = std::size_t{1} << traced.size();
    for (std::size_t r = 0; r < out.dim(); r++) {
        const std::size_t row_base = detail::scatter_bits(n, keep, r);
        for (std::size_t c = 0; c < out.dim(); c++) {
            const std::size_t col_base = detail::scatter_bits(n, keep, c);
            S acc = ScalarTraits<S>::zero();
            for (std::size_t t = 0; t < traced_dim; t++) {
                const std::size_t offset = detail::scatter_bits(n, traced, t);
                acc += rho(row_base | offset, col_base | offset);
            }
            out(r, c) = acc;
        }
    }
    return out;
}

template <Scalar S>
DensityOperator<S> partial_trace(const DensityOperator<S> &rho, std::initializer_list<std::size_t> keep) {
    return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

// U rho U^dagger.
template <Scalar S>
DensityOperator<S> conjugate_by(const DensityOperator<S> &rho, const Operator<S> &u) {
    if (rho.num_qubits() != u.num_qubits()) {
        throw std::invalid_argument("conjugate_by: operator acts on " + std::to_string(u.num_qubits()) +
                                    " qubits, state has " + std::to_string(rho.num_qubits()));
    }
    return u * rho * u.adjoint();
}

template <Scalar S>
DensityOperator<S> conjugate_by(const DensityOperator<S> &rho, const Gate<S> &u) {
    DensityOperator<S> out = conjugate_by(rho, u.matrix);
    if (u.sqrt2_power != 0) {
        out *= ScalarTraits<S>::from_ratio(1, 1L << u.sqrt2_power);
    }
    return out;
}

// (K on `qubit`) rho (K on `qubit`)^dagger for a single-qubit K, without
// materializing the embedded operator.
template <Scalar S>
DensityOperator<S> conjugate_on_qubit(const DensityOperator<S> &rho, const Operator<S> &k, std::size_t qubit) {
    using Traits = ScalarTraits<S>;
    const std::size_t n = rho.num_qubits();
    if (k.num_qubits() != 1) {
        throw std::invalid_argument("conjugate_on_qubit: expected a single-qubit operator");
    }
    if (qubit < 1 || qubit > n) {
        throw std::invalid_argument("conjugate_on_qubit: qubit index " + std::to_string(qubit) +
                                    " out of range 1.." + std::to_string(n));
    }
    const std::size_t mask = std::size_t{1} << qubit_bit(n, qubit);
    const std::size_t d = rho.dim();
    auto bit_of = [mask](std::size_t index) -> std::size_t { return (index & mask) ? 1 : 0; };

    DensityOperator<S> left(n);
    for (std::size_t r = 0; r < d; r++) {
        const std::size_t rb = bit_of(r);
        for (std::size_t a = 0; a < 2; a++) {
            const S &kv = k(rb, a);
            if (Traits::is_zero(kv)) {
                continue;
            }
            const std::size_t src = a ? (r | mask) : (r & ~mask);
            for (std::size_t c = 0; c < d; c++) {
                if (!Traits::is_zero(rho(src, c))) {
                    left(r, c) += kv * rho(src, c);
                }
            }
        }
    }
    DensityOperator<S> out(n);
    for (std::size_t c = 0; c < d; c++) {
        const std::size_t cb = bit_of(c);
        for (std::size_t b = 0; b < 2; b++) {
            const S kv = Traits::conj(k(cb, b));
            if (Traits::is_zero(kv)) {
                continue;
            }
            const std::size_t src = b ? (c | mask) : (c & ~mask);
            for (std::size_t r = 0; r < d; r++) {
                if (!Traits::is_zero(left(r, src))) {
                    out(r, c) += left(r, src) * kv;
                }
            }
        }
    }
    return out;
}

// <psi|rho|psi>, in the backend's scalar type.
template <Scalar S>
S expectation(const PureState<S> &psi, const DensityOperator<S> &rho) {
    if (psi.num_qubits() != rho.num_qubits()) {
        throw std::invalid_argument("fidelity: state has " + std::to_string(psi.num_qubits()) +
                                    " qubits, operator has " + std::to_string(rho.num_qubits()));
    }
    auto amps = psi.amplitudes();
    S acc = ScalarTraits<S>::zero();
    for (std::size_t r = 0; r < amps.size(); r++) {
        S row = ScalarTraits<S>::zero();
        for (std::size_t c = 0; c < amps.size(); c++) {
            row += rho(r, c) * amps[c];
        }
        acc += ScalarTraits<S>::conj(amps[r]) * row;
    }
    return acc;
}

template <Scalar S>
bool is_hermitian(const Operator<S> &op, double tol) {
    for (std::size_t r = 0; r < op.dim(); r++) {
        for (std::size_t c = r; c < op.dim(); c++) {
            if (!ScalarTraits<S>::equal(op(r, c), ScalarTraits<S>::conj(op(c, r)), tol)) {
                return false;
            }
        }
    }
    return true;
}

inline double max_abs_diff(const Operator<Complex> &a, const Operator<Complex> &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); k++) {
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return worst;
}

// F = <psi|rho|psi> for the float backend. Throws if rho is not Hermitian
// within 1e-9; the imaginary residue of the overlap is dropped.
double fidelity_with(const PureState<Complex> &psi, const DensityOperator<Complex> &rho);

// Exact counterpart: the fidelity as a polynomial in p.
PolyP fidelity_with(const PureState<PolyP> &psi, const DensityOperator<PolyP> &rho);

// Smallest eigenvalue of a Hermitian operator (float backend only).
double min_eigenvalue(const DensityOperator<Complex> &rho);

// Entrywise evaluation of a symbolic operator at a numeric p.
DensityOperator<Complex> evaluate_at(const DensityOperator<PolyP> &rho, double p);

}  // namespace qtel
