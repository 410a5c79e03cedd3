#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qtel/analytic.hpp"
#include "qtel/symbolic.hpp"

namespace qtel {

enum class TargetStatus { Match, Mismatch, NotIdentifiable };

std::string_view to_string(TargetStatus status);

struct CoefficientDiff {
    int degree;
    std::string expected;
    std::string derived;
};

struct VerificationTarget {
    std::string name;
    TargetStatus status = TargetStatus::Match;
    std::string expected;
    std::string derived;
    std::vector<CoefficientDiff> coefficient_diffs;
};

struct VerificationReport {
    std::vector<VerificationTarget> targets;
    // Free-form findings, e.g. the outcome of the correction-assignment fallback.
    std::vector<std::string> notes;

    bool has_mismatch() const;
    const VerificationTarget *find(std::string_view name) const;
    std::size_t count(TargetStatus status) const;

    std::string to_text() const;
    // One line per target: name, status, expected, derived separated by tabs.
    std::string to_tsv() const;
};

// Exact comparison; a Mismatch lists every degree whose coefficients differ.
VerificationTarget compare_polynomials(std::string name, const PolyP &expected, const PolyP &derived);

// Each verify_* function accepts a precomputed transfer map so a full run
// extracts each map once. Passing nullptr extracts it on demand.
std::vector<VerificationTarget> verify_depolarizing(const TransferMap *map = nullptr);
std::vector<VerificationTarget> verify_bitflip(const PaperPolynomialTable &table = PaperPolynomialTable::published(),
                                               const TransferMap *map = nullptr);
std::vector<VerificationTarget> verify_phaseflip(const PaperPolynomialTable &table = PaperPolynomialTable::published(),
                                                 const TransferMap *map = nullptr);
std::vector<VerificationTarget> verify_linear_approximations(const std::array<TransferMap, 3> *maps = nullptr);
// Compares the tensor-product-of-depolarized-marginals form against the
// physical layer on product and entangled states (float backend).
std::vector<VerificationTarget> verify_marginal_product_form();

// Names of every target a full run produces, in report order.
std::vector<std::string> verification_plan();

// All of the above in fixed order, plus the correction-assignment fallback
// for any channel whose targets did not all match.
VerificationReport run_verification(const PaperPolynomialTable &table = PaperPolynomialTable::published());

}  // namespace qtel
