#include "qtel/exact.hpp"

#include <stdexcept>

namespace qtel {

BigRational::BigRational(long num, long den) {
    if (den == 0) {
        throw std::invalid_argument("BigRational: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

BigRational::BigRational(const mpq_class &value) : value_(value) {
    value_.canonicalize();
}

BigRational BigRational::from_double(double value) {
    return BigRational(mpq_class(value));
}

BigRational BigRational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty() || s.find_first_not_of("-0123456789/") != std::string::npos) {
        throw std::invalid_argument("BigRational: cannot parse '" + s + "'");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
        throw std::invalid_argument("BigRational: cannot parse '" + s + "'");
    }
    return BigRational(q);
}

std::string BigRational::str() const {
    return value_.get_str(10);
}

BigRational &BigRational::operator+=(const BigRational &o) {
    value_ += o.value_;
    return *this;
}

BigRational &BigRational::operator-=(const BigRational &o) {
    value_ -= o.value_;
    return *this;
}

BigRational &BigRational::operator*=(const BigRational &o) {
    value_ *= o.value_;
    return *this;
}

BigRational &BigRational::operator/=(const BigRational &o) {
    if (o.is_zero()) {
        throw std::domain_error("BigRational: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

GaussianRational GaussianRational::parse(std::string_view text) {
    if (!text.empty() && text.front() == '(') {
        auto comma = text.find(',');
        if (comma == std::string_view::npos || text.back() != ')') {
            throw std::invalid_argument("GaussianRational: cannot parse '" + std::string(text) + "'");
        }
        return {BigRational::parse(text.substr(1, comma - 1)),
                BigRational::parse(text.substr(comma + 1, text.size() - comma - 2))};
    }
    return {BigRational::parse(text)};
}

std::string GaussianRational::str() const {
    if (is_real()) {
        return re_.str();
    }
    return "(" + re_.str() + "," + im_.str() + ")";
}

GaussianRational &GaussianRational::operator+=(const GaussianRational &o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational &GaussianRational::operator-=(const GaussianRational &o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational &GaussianRational::operator*=(const GaussianRational &o) {
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    BigRational re = re_ * o.re_ - im_ * o.im_;
    BigRational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational &GaussianRational::operator/=(const GaussianRational &o) {
    BigRational den = o.norm_squared();
    if (den.is_zero()) {
        throw std::domain_error("GaussianRational: division by zero");
    }
    *this *= o.conj();
    re_ /= den;
    im_ /= den;
    return *this;
}

PolyP::PolyP(GaussianRational constant) {
    if (!constant.is_zero()) {
        coeffs_.push_back(std::move(constant));
    }
}

PolyP::PolyP(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

PolyP::PolyP(std::initializer_list<BigRational> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (const auto &c : coeffs) {
        coeffs_.emplace_back(c);
    }
    normalize();
}

PolyP PolyP::variable() {
    return PolyP(std::vector<GaussianRational>{0, 1});
}

void PolyP::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

GaussianRational PolyP::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) {
        return {};
    }
    return coeffs_[k];
}

PolyP PolyP::conj() const {
    PolyP out = *this;
    for (auto &c : out.coeffs_) {
        c = c.conj();
    }
    return out;
}

PolyP PolyP::derivative() const {
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<GaussianRational> out;
    out.reserve(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); k++) {
        out.push_back(coeffs_[k] * GaussianRational(static_cast<long>(k)));
    }
    return PolyP(std::move(out));
}

PolyP PolyP::pow(unsigned exponent) const {
    PolyP result(1);
    PolyP base = *this;
    while (exponent != 0) {
        if (exponent & 1U) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            base *= base;
        }
    }
    return result;
}

GaussianRational PolyP::evaluate_at(const BigRational &p) const {
    GaussianRational acc;
    GaussianRational x(p);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

std::complex<double> PolyP::evaluate(double p) const {
    return evaluate_at(BigRational::from_double(p)).to_complex();
}

std::string PolyP::str() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (size_t k = 0; k < coeffs_.size(); k++) {
        if (coeffs_[k].is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        out += coeffs_[k].str();
        if (k == 1) {
            out += "*p";
        } else if (k > 1) {
            out += "*p^" + std::to_string(k);
        }
    }
    return out;
}

PolyP PolyP::parse(std::string_view text) {
    if (text == "0") {
        return {};
    }
    std::vector<GaussianRational> coeffs;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find(" + ", pos);
        std::string_view term = text.substr(pos, end == std::string_view::npos ? text.npos : end - pos);
        size_t degree = 0;
        std::string_view coeff_text = term;
        if (auto star = term.find("*p"); star != std::string_view::npos) {
            coeff_text = term.substr(0, star);
            std::string_view rest = term.substr(star + 2);
            if (rest.empty()) {
                degree = 1;
            } else if (rest.front() == '^' && rest.size() > 1 &&
                       rest.substr(1).find_first_not_of("0123456789") == std::string_view::npos) {
                degree = std::stoul(std::string(rest.substr(1)));
            } else {
                throw std::invalid_argument("PolyP: cannot parse term '" + std::string(term) + "'");
            }
        }
        if (coeffs.size() <= degree) {
            coeffs.resize(degree + 1);
        }
        coeffs[degree] += GaussianRational::parse(coeff_text);
        if (end == std::string_view::npos) {
            break;
        }
        pos = end + 3;
    }
    return PolyP(std::move(coeffs));
}

PolyP PolyP::operator-() const {
    PolyP out = *this;
    for (auto &c : out.coeffs_) {
        c = -c;
    }
    return out;
}

PolyP &PolyP::operator+=(const PolyP &o) {
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (size_t k = 0; k < o.coeffs_.size(); k++) {
        coeffs_[k] += o.coeffs_[k];
    }
    normalize();
    return *this;
}

PolyP &PolyP::operator-=(const PolyP &o) {
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (size_t k = 0; k < o.coeffs_.size(); k++) {
        coeffs_[k] -= o.coeffs_[k];
    }
    normalize();
    return *this;
}

PolyP operator*(const PolyP &a, const PolyP &b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    if (a.degree() == 0) {
        return b * a.coeffs_[0];
    }
    if (b.degree() == 0) {
        return a * b.coeffs_[0];
    }
    std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); i++) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (size_t j = 0; j < b.coeffs_.size(); j++) {
            if (!b.coeffs_[j].is_zero()) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return PolyP(std::move(out));
}

PolyP &PolyP::operator*=(const PolyP &o) {
    *this = *this * o;
    return *this;
}

PolyP &PolyP::operator*=(const GaussianRational &c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    if (c == GaussianRational(1)) {
        return *this;
    }
    for (auto &k : coeffs_) {
        k *= c;
    }
    return *this;
}

}  // namespace qtel
