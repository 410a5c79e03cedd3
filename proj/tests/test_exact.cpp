#include <gtest/gtest.h>

#include <random>

#include "qtel/analytic.hpp"
#include "qtel/exact.hpp"

using namespace qtel;

namespace {

PolyP random_poly(std::mt19937_64 &rng, int max_degree, bool gaussian) {
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 12);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<GaussianRational> coeffs;
    const int d = deg(rng);
    for (int k = 0; k <= d; k++) {
        BigRational re(num(rng), den(rng));
        BigRational im = gaussian ? BigRational(num(rng), den(rng)) : BigRational(0);
        coeffs.emplace_back(re, im);
    }
    return PolyP(coeffs);
}

}  // namespace

TEST(BigRational, KeepsReducedFormWithPositiveDenominator) {
    EXPECT_EQ(BigRational(6, -4).str(), "-3/2");
    EXPECT_EQ(BigRational(10, 5).str(), "2");
    EXPECT_EQ(BigRational(0, 7).str(), "0");
    EXPECT_THROW(BigRational(1, 0), std::invalid_argument);
}

TEST(BigRational, ParseAndFromDouble) {
    EXPECT_EQ(BigRational::parse("1337/4"), BigRational(1337, 4));
    EXPECT_EQ(BigRational::parse("-12"), BigRational(-12));
    EXPECT_THROW(BigRational::parse("1/"), std::invalid_argument);
    EXPECT_THROW(BigRational::parse("abc"), std::invalid_argument);
    EXPECT_EQ(BigRational::from_double(0.25), BigRational(1, 4));
    EXPECT_EQ(BigRational::from_double(0.1).to_double(), 0.1);
    EXPECT_FALSE(BigRational::from_double(0.1) == BigRational(1, 10));
}

TEST(GaussianRational, FieldAxiomsOnSamples) {
    const GaussianRational a(BigRational(3, 5), BigRational(-4, 7));
    const GaussianRational b(BigRational(2), BigRational(1, 3));
    EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_EQ((a * a.conj()).im(), BigRational(0));
    EXPECT_EQ((a * a.conj()).re(), a.norm_squared());
    EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(-1));
    EXPECT_EQ(GaussianRational::parse("(1/2,-3)"), GaussianRational(BigRational(1, 2), BigRational(-3)));
    EXPECT_THROW(GaussianRational(1) / GaussianRational(0), std::domain_error);
}

TEST(PolyP, SquareOfOneMinusP) {
    const PolyP one_minus_p = PolyP(1) - PolyP::variable();
    EXPECT_EQ(one_minus_p * one_minus_p, (PolyP{BigRational(1), BigRational(-2), BigRational(1)}));
    EXPECT_EQ((one_minus_p * one_minus_p).str(), "1 + -2*p + 1*p^2");
}

TEST(PolyP, NormalizationDropsTrailingZeros) {
    const PolyP a{BigRational(1), BigRational(2), BigRational(0)};
    EXPECT_EQ(a.degree(), 1);
    EXPECT_EQ((a - a).degree(), -1);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(PolyP().str(), "0");
}

TEST(PolyP, BinomialExpansionMatchesPublishedU6) {
    // Coefficients of (1-2p)^8 from C(8,k)(-2)^k with integer arithmetic.
    std::vector<GaussianRational> expected;
    long binom = 1;
    long power = 1;
    for (long k = 0; k <= 8; k++) {
        expected.emplace_back(binom * power);
        binom = binom * (8 - k) / (k + 1);
        power *= -2;
    }
    const PolyP oracle(expected);
    const PolyP base = PolyP(1) - PolyP(2) * PolyP::variable();
    EXPECT_EQ(base.pow(8), oracle);
    EXPECT_EQ(PaperPolynomialTable::published()[6], oracle);
}

TEST(PolyP, PublishedU4AtZeroIsOneQuarter) {
    const auto table = PaperPolynomialTable::published();
    EXPECT_EQ(table[4].evaluate_at(BigRational(0)), GaussianRational(BigRational(1, 4)));
    EXPECT_EQ(table[4].degree(), 11);
}

TEST(PolyP, DerivativeAndConjugate) {
    const PolyP a{BigRational(5), BigRational(-3), BigRational(1, 2), BigRational(7)};
    EXPECT_EQ(a.derivative(), (PolyP{BigRational(-3), BigRational(1), BigRational(21)}));
    const PolyP c(std::vector<GaussianRational>{GaussianRational(BigRational(1), BigRational(2))});
    EXPECT_EQ(c.conj().coeff(0), GaussianRational(BigRational(1), BigRational(-2)));
    EXPECT_EQ(a.coeff(10), GaussianRational(0));
}

TEST(PolyP, DegreeOfProductIsSumOfDegrees) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; trial++) {
        const PolyP a = random_poly(rng, 6, true);
        const PolyP b = random_poly(rng, 6, true);
        if (a.is_zero() || b.is_zero()) {
            continue;
        }
        EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    }
}

TEST(PolyP, EvaluationCommutesWithRingOperations) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    for (int trial = 0; trial < 50; trial++) {
        const PolyP a = random_poly(rng, 8, true);
        const PolyP b = random_poly(rng, 8, true);
        const BigRational x(num(rng), den(rng));
        EXPECT_EQ((a + b).evaluate_at(x), a.evaluate_at(x) + b.evaluate_at(x));
        EXPECT_EQ((a * b).evaluate_at(x), a.evaluate_at(x) * b.evaluate_at(x));
        EXPECT_EQ((-a).evaluate_at(x), -a.evaluate_at(x));
        EXPECT_EQ(a.conj().evaluate_at(x), a.evaluate_at(x).conj());
    }
}

TEST(PolyP, FloatEvaluationAgreesWithExact) {
    const auto table = PaperPolynomialTable::published();
    for (double p : {0.0, 0.05, 0.3, 0.75, 1.0}) {
        for (std::size_t k = 1; k <= 6; k++) {
            const double exact = table[k].evaluate_at(BigRational::from_double(p)).re().to_double();
            EXPECT_NEAR(table[k].evaluate(p).real(), exact, 1e-12) << "u" << k << " at " << p;
        }
    }
}

TEST(PolyP, TextRoundTrip) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; trial++) {
        const PolyP a = random_poly(rng, 12, trial % 2 == 0);
        const std::string text = a.str();
        EXPECT_EQ(PolyP::parse(text), a) << text;
        EXPECT_EQ(PolyP::parse(text).str(), text);
    }
    EXPECT_THROW(PolyP::parse("1 + 2*q"), std::invalid_argument);
    EXPECT_THROW(PolyP::parse("1 + 2*p^x"), std::invalid_argument);
}
