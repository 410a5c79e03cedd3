#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "qtel/verify.hpp"
#include "support.hpp"

using namespace qtel;

namespace {

const VerificationReport &report() {
    static const VerificationReport r = run_verification();
    return r;
}

TargetStatus status_of(std::string_view name) {
    const auto *t = report().find(name);
    if (t == nullptr) {
        throw std::runtime_error("missing target " + std::string(name));
    }
    return t->status;
}

}  // namespace

TEST(ComparePolynomials, MatchCarriesNoDiffs) {
    const PolyP a{BigRational(1), BigRational(-2), BigRational(1)};
    const auto t = compare_polynomials("same", a, a);
    EXPECT_EQ(t.status, TargetStatus::Match);
    EXPECT_TRUE(t.coefficient_diffs.empty());
    EXPECT_EQ(t.expected, a.str());
}

TEST(ComparePolynomials, MismatchListsEveryDifferingDegree) {
    const PolyP a{BigRational(1), BigRational(-2), BigRational(1)};
    const PolyP b{BigRational(1), BigRational(3), BigRational(1), BigRational(0), BigRational(5)};
    const auto t = compare_polynomials("diff", a, b);
    EXPECT_EQ(t.status, TargetStatus::Mismatch);
    ASSERT_EQ(t.coefficient_diffs.size(), 2U);
    EXPECT_EQ(t.coefficient_diffs[0].degree, 1);
    EXPECT_EQ(t.coefficient_diffs[0].expected, "-2");
    EXPECT_EQ(t.coefficient_diffs[0].derived, "3");
    EXPECT_EQ(t.coefficient_diffs[1].degree, 4);
    EXPECT_EQ(t.coefficient_diffs[1].expected, "0");
}

TEST(Report, CoversThePlanExactlyOnce) {
    const auto plan = verification_plan();
    ASSERT_EQ(report().targets.size(), plan.size());
    std::set<std::string> seen;
    for (std::size_t i = 0; i < plan.size(); i++) {
        EXPECT_EQ(report().targets[i].name, plan[i]);
        EXPECT_TRUE(seen.insert(plan[i]).second) << plan[i];
    }
}

TEST(Report, MismatchesCarryDiffs) {
    for (const auto &t : report().targets) {
        if (t.status == TargetStatus::Mismatch) {
            EXPECT_FALSE(t.coefficient_diffs.empty()) << t.name;
        }
    }
    EXPECT_EQ(report().count(TargetStatus::Match) + report().count(TargetStatus::Mismatch) +
                  report().count(TargetStatus::NotIdentifiable),
              report().targets.size());
}

TEST(Report, IsDeterministic) {
    const auto again = run_verification();
    EXPECT_EQ(again.to_text(), report().to_text());
    EXPECT_EQ(again.to_tsv(), report().to_tsv());
}

TEST(Report, TsvHasOneFourFieldLinePerTarget) {
    std::istringstream in(report().to_tsv());
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) {
        EXPECT_EQ(std::count(line.begin(), line.end(), '\t'), 3) << line;
        lines++;
    }
    EXPECT_EQ(lines, report().targets.size());
}

TEST(Report, ThirdBitFlipConstantIsNotIdentifiable) {
    EXPECT_EQ(status_of("bitflip.u3"), TargetStatus::NotIdentifiable);
    EXPECT_EQ(report().count(TargetStatus::NotIdentifiable), 1U);
}

TEST(Report, PhaseFlipTargetsMatch) {
    for (const auto &t : report().targets) {
        if (t.name.starts_with("phaseflip.") || t.name.starts_with("linear.phaseflip.")) {
            EXPECT_EQ(t.status, TargetStatus::Match) << t.name;
        }
    }
}

TEST(Report, IdentifiableChecksThatAgree) {
    for (const char *name : {"depolarizing.population_retention", "depolarizing.population_mixing",
                             "depolarizing.map_structure", "depolarizing.p0_identity", "bitflip.4(u1+u3)",
                             "bitflip.4(u2+u3)", "bitflip.trace_identity", "bitflip.map_structure",
                             "bitflip.p0_identity", "marginal_product.product_state"}) {
        EXPECT_EQ(status_of(name), TargetStatus::Match) << name;
    }
}

TEST(Report, DerivedDisagreementsWithPublishedForms) {
    for (const char *name : {"depolarizing.coherence", "bitflip.4u4", "bitflip.4u5",
                             "linear.depolarizing.(3/5,4/5)", "linear.bitflip.(3/5,4/5)",
                             "marginal_product.entangled_state"}) {
        EXPECT_EQ(status_of(name), TargetStatus::Mismatch) << name;
    }
    EXPECT_TRUE(report().has_mismatch());
}

TEST(Report, CorrectionFallbackIsRecorded) {
    ASSERT_EQ(report().notes.size(), 2U);
    for (const auto &note : report().notes) {
        EXPECT_NE(note.find("X<-m1,Z<-m2"), std::string::npos) << note;
    }
}

TEST(Report, LinearSlopeExpectedValuesAtProbes) {
    const auto *dep = report().find("linear.depolarizing.(3/5,4/5)");
    ASSERT_NE(dep, nullptr);
    EXPECT_EQ(dep->expected, (BigRational(6 * 144, 625) + BigRational(9, 2)).str());
    const auto *bf = report().find("linear.bitflip.(3/5,4/5)");
    ASSERT_NE(bf, nullptr);
    const BigRational r = BigRational(2) * BigRational(144, 625);
    EXPECT_EQ(bf->expected, (BigRational(9) - BigRational(14 * 144, 625) - BigRational(8) * r).str());
    const auto *pf = report().find("linear.phaseflip.(3/5,4i/5)");
    ASSERT_NE(pf, nullptr);
    EXPECT_EQ(pf->expected, BigRational(32 * 144, 625).str());
}

TEST(PhaseFlip, PerturbedTableIsCaught) {
    auto table = PaperPolynomialTable::published();
    std::vector<GaussianRational> coeffs = table[6].coeffs();
    coeffs[3] = coeffs[3] + GaussianRational(1);
    table[6] = PolyP(coeffs);
    const auto targets = verify_phaseflip(table);
    const auto it = std::find_if(targets.begin(), targets.end(),
                                 [](const auto &t) { return t.name == "phaseflip.coherence_u6"; });
    ASSERT_NE(it, targets.end());
    EXPECT_EQ(it->status, TargetStatus::Mismatch);
    ASSERT_EQ(it->coefficient_diffs.size(), 1U);
    EXPECT_EQ(it->coefficient_diffs[0].degree, 3);
}

TEST(MarginalProduct, DeviationMagnitudes) {
    const auto targets = verify_marginal_product_form();
    ASSERT_EQ(targets.size(), 3U);
    EXPECT_EQ(targets[0].status, TargetStatus::Match);
    ASSERT_FALSE(targets[1].coefficient_diffs.empty());
    EXPECT_GT(std::stod(targets[1].coefficient_diffs[0].derived), 0.01);

    // At p = 0 the deviation is the distance from rho to its product of marginals.
    const double h = std::sqrt(0.5);
    const auto bell0 = tensor(PureState<Complex>({h, 0.0, 0.0, h}).projector(), Operator<Complex>::matrix_unit(1, 0, 0));
    Operator<Complex> marginals = tensor(tensor(partial_trace(bell0, {1}), partial_trace(bell0, {2})),
                                         partial_trace(bell0, {3}));
    EXPECT_NEAR(std::stod(targets[2].coefficient_diffs[0].derived), max_abs_diff(bell0, marginals), 1e-15);
}
