#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qtel {

// Arbitrary-precision rational, always stored in lowest terms with a positive
// denominator.
class BigRational {
  public:
    BigRational() = default;
    BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    BigRational(long num, long den);
    explicit BigRational(const mpq_class &value);
    // Exact conversion; every finite double is a dyadic rational.
    static BigRational from_double(double value);
    // Parses "n" or "n/d" (optional leading '-').
    static BigRational parse(std::string_view text);

    const mpq_class &raw() const { return value_; }
    double to_double() const { return value_.get_d(); }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    // "n" for integers, "n/d" otherwise.
    std::string str() const;

    BigRational operator-() const { return BigRational(mpq_class(-value_)); }
    BigRational &operator+=(const BigRational &o);
    BigRational &operator-=(const BigRational &o);
    BigRational &operator*=(const BigRational &o);
    BigRational &operator/=(const BigRational &o);

    friend BigRational operator+(BigRational a, const BigRational &b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational &b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational &b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational &b) { return a /= b; }
    friend bool operator==(const BigRational &a, const BigRational &b) { return a.value_ == b.value_; }
    friend bool operator<(const BigRational &a, const BigRational &b) { return a.value_ < b.value_; }

  private:
    mpq_class value_;
};

// Complex number with rational real and imaginary parts.
class GaussianRational {
  public:
    GaussianRational() = default;
    GaussianRational(BigRational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {BigRational(0), BigRational(1)}; }
    // Accepts the forms produced by str(): "q" or "(q,q)".
    static GaussianRational parse(std::string_view text);

    const BigRational &re() const { return re_; }
    const BigRational &im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    GaussianRational conj() const { return {re_, -im_}; }
    BigRational norm_squared() const { return re_ * re_ + im_ * im_; }
    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    // Real values print as a bare rational, complex ones as "(re,im)".
    std::string str() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational &operator+=(const GaussianRational &o);
    GaussianRational &operator-=(const GaussianRational &o);
    GaussianRational &operator*=(const GaussianRational &o);
    GaussianRational &operator/=(const GaussianRational &o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational &b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational &b) { return a /= b; }
    friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

  private:
    BigRational re_;
    BigRational im_;
};

// Dense univariate polynomial in the noise probability p with Gaussian-rational
// coefficients. coeffs()[k] is the coefficient of p^k; trailing zeros are
// never stored, so the zero polynomial has no coefficients.
class PolyP {
  public:
    PolyP() = default;
    PolyP(GaussianRational constant);  // NOLINT(google-explicit-constructor)
    PolyP(long constant) : PolyP(GaussianRational(constant)) {}  // NOLINT(google-explicit-constructor)
    explicit PolyP(std::vector<GaussianRational> coeffs);
    PolyP(std::initializer_list<BigRational> coeffs);

    // The polynomial "p".
    static PolyP variable();
    // Inverse of str().
    static PolyP parse(std::string_view text);

    const std::vector<GaussianRational> &coeffs() const { return coeffs_; }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    GaussianRational coeff(int k) const;

    PolyP conj() const;
    PolyP derivative() const;
    PolyP pow(unsigned exponent) const;
    GaussianRational evaluate_at(const BigRational &p) const;
    // Exact Horner evaluation at the rational value of p, converted at the end.
    std::complex<double> evaluate(double p) const;

    // Canonical text "c0 + c1*p + c2*p^2 + ..."; zero terms are omitted and the
    // zero polynomial prints as "0".
    std::string str() const;

    PolyP operator-() const;
    PolyP &operator+=(const PolyP &o);
    PolyP &operator-=(const PolyP &o);
    PolyP &operator*=(const PolyP &o);
    PolyP &operator*=(const GaussianRational &c);

    friend PolyP operator+(PolyP a, const PolyP &b) { return a += b; }
    friend PolyP operator-(PolyP a, const PolyP &b) { return a -= b; }
    friend PolyP operator*(const PolyP &a, const PolyP &b);
    friend PolyP operator*(PolyP a, const GaussianRational &c) { return a *= c; }
    friend PolyP operator*(const GaussianRational &c, PolyP a) { return a *= c; }
    friend bool operator==(const PolyP &a, const PolyP &b) { return a.coeffs_ == b.coeffs_; }

  private:
    void normalize();

    std::vector<GaussianRational> coeffs_;
};

}  // namespace qtel
